#pragma once

#include <map>
#include <vector>

#include "wildram/subspace.hpp"
#include "wildram/tower.hpp"

namespace wildram {

// One segment of a lower-numbering ramification chain: `group` is G_i for
// every i from `from` until the next segment starts.
struct FiltrationStep {
  long from;
  Subspace group;
};

// Sparse lower-numbering chain G_0 >= G_1 >= ... for a group inside
// (Z/p)^n, ending with the trivial group. Optionally carries the individual
// displacement orders j(sigma) = v(sigma pi - pi) it was built from.
class RamificationFiltration {
public:
  RamificationFiltration(int p, int ambient, std::vector<FiltrationStep> steps,
                         std::map<Vec, long> jumps = {});

  int p() const { return p_; }
  int ambient_dim() const { return ambient_; }
  const std::vector<FiltrationStep>& steps() const { return steps_; }
  const Subspace& group_at(long i) const;
  long order_at(long i) const;
  // Largest i with G_i nontrivial; -1 when even G_0 is trivial.
  long last_nontrivial() const;
  const std::map<Vec, long>& jumps() const { return jumps_; }

  bool operator==(const RamificationFiltration& o) const;

private:
  int p_;
  int ambient_;
  std::vector<FiltrationStep> steps_;
  std::map<Vec, long> jumps_;
};

// Computes the chain of the tower's group from a certified uniformizer:
// j(sigma) = v_S(sigma pi - pi), G_i = {sigma : j(sigma) >= i + 1}. Checks
// that each level set really is a subgroup and that the tower is fully wild
// (G_0 = G_1 = everything).
RamificationFiltration ramification_filtration(const Tower& t);

// sum_i (|G_i| - 1), the exponent of the different read off the chain.
long different_hilbert(const RamificationFiltration& f);

// The different as v_S(m'(pi)) for the minimal polynomial m of pi over K.
// pre: ell == 1 (the route is only wired for one step of the tower).
long different_via_derivative(const Tower& t);

}  // namespace wildram
