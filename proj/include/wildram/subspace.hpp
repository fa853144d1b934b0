#pragma once

#include <vector>

namespace wildram {

// Vector over F_p with entries in [0, p).
using Vec = std::vector<int>;

// Subspace of F_p^n in reduced row echelon form; the RREF basis is a
// canonical representative, so equality and ordering are structural.
class Subspace {
public:
  Subspace(int p, int ambient_dim);  // zero subspace
  static Subspace span(int p, int ambient_dim, const std::vector<Vec>& gens);
  static Subspace full(int p, int ambient_dim);

  int p() const { return p_; }
  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& basis() const { return rows_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // All w with <w, v> = 0 for every v here (standard dot pairing).
  Subspace annihilator() const;

  // All p^dim vectors of the subspace.
  std::vector<Vec> elements() const;
  // One representative per line: nonzero, first nonzero entry 1.
  std::vector<Vec> line_reps() const;

  bool operator==(const Subspace& other) const {
    return p_ == other.p_ && n_ == other.n_ && rows_ == other.rows_;
  }
  bool operator!=(const Subspace& other) const { return !(*this == other); }
  bool operator<(const Subspace& other) const;

private:
  int p_, n_;
  std::vector<Vec> rows_;

  void reduce(std::vector<Vec> gens);
};

// Every subspace of F_p^n, ordered by (dim, basis).
std::vector<Subspace> all_subspaces(int p, int n);

}  // namespace wildram
