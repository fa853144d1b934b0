#pragma once

#include <string>
#include <vector>

#include "wildram/series.hpp"

namespace wildram {

// Outcome of reducing a right-hand side f of y^p - y = f.
//   Ramified: pole of order m, gcd(m, p) = 1; the cover is totally ramified.
//   Split:    f is a p-th power difference plus a solvable constant; the
//             cover is trivial (splits into p sheets).
//   Inert:    f reduces to a constant whose Artin-Schreier equation has no
//             root in F_q; the cover is the unramified residue extension.
enum class RhsStatus { Ramified, Split, Inert };

std::string to_string(RhsStatus s);

struct ReducedRHS {
  LaurentSeries f;        // reduced representative; keeps an unabsorbable constant
  RhsStatus status;
  long break_m = 0;       // pole order when status == Ramified
  LaurentSeries witness;  // s with f_original = f + (s^p - s) on the known window
  fq_t residual = 0;      // constant left in f when no Artin-Schreier root exists
};

// Normal-form reduction: (a) repeatedly eliminate p-divisible leading pole
// orders -p*l by shifting with pth_root(c)*x^-l, (b) absorb the positive-
// valuation tail t through the geometric Frobenius sum g = t + t^p + ...,
// (c) classify the remaining constant over F_q.
ReducedRHS reduce_rhs(const LaurentSeries& f);

// The break of a ramified right-hand side. Throws DomainError when f
// reduces to split or inert.
long break_of(const LaurentSeries& f);

// One F_p-line of combinations with its common break.
struct LineBreak {
  std::vector<int> coeffs;  // canonical representative: first nonzero entry 1
  long break_m;
};

struct ComboFailure {
  std::vector<int> coeffs;
  RhsStatus status;
};

struct TowerValidation {
  bool ok;
  std::vector<LineBreak> lines;
  std::vector<ComboFailure> failures;
};

// Reduces every nonzero F_p-combination of the given right-hand sides.
// ok means all of them are ramified, i.e. the extensions are linearly
// disjoint and the compositum is totally ramified with group (Z/p)^l.
TowerValidation validate_tower(const std::vector<LaurentSeries>& rhs);

// The (p^l - 1)/(p - 1) lines with their breaks. Requires a validated list.
std::vector<LineBreak> line_breaks(const std::vector<LaurentSeries>& rhs);

// Sum c_i * rhs[i] with c_i in [0, p).
LaurentSeries combine_rhs(const std::vector<LaurentSeries>& rhs,
                          const std::vector<int>& c);

}  // namespace wildram
