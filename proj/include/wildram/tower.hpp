#pragma once

#include <string>
#include <vector>

#include "wildram/asred.hpp"
#include "wildram/series.hpp"
#include "wildram/subspace.hpp"

namespace wildram {

class TowerElem;

// The top field S of a validated Artin-Schreier tower
//   S = K[T_1, ..., T_l] / (T_i^p - T_i - f_i),   K = F_q((x)),
// with group G = (Z/p)^l acting by T_i -> T_i + c_i. Validation guarantees
// every nonzero combination of the f_i is ramified, hence S/K is totally
// ramified of degree p^l. tame_index carries the order of the tame quotient
// for bookkeeping; it never enters arithmetic.
class Tower {
public:
  Tower(const FqCtx& F, std::vector<LaurentSeries> rhs, long tame_index = 1);

  // Elements hold a pointer to their tower, so tower identity is part of the
  // semantics: no copying, and moves are only safe before elements exist.
  Tower(const Tower&) = delete;
  Tower& operator=(const Tower&) = delete;
  Tower(Tower&&) = default;
  Tower& operator=(Tower&&) = delete;

  const FqCtx& field() const { return *F_; }
  int p() const { return F_->p(); }
  int ell() const { return static_cast<int>(rhs_.size()); }
  long degree() const { return degree_; }  // p^l
  long tame_index() const { return tame_index_; }

  const std::vector<LaurentSeries>& rhs() const { return rhs_; }
  const LaurentSeries& f(int i) const { return rhs_.at(i); }
  const ReducedRHS& reduced(int i) const { return reduced_.at(i); }
  std::vector<long> gen_breaks() const;
  const std::vector<LineBreak>& lines() const { return lines_; }
  bool all_breaks_one() const;

  // Monomial basis T^e, 0 <= e_i < p, ordered lexicographically in
  // (e_1, ..., e_l); index treats e_1 as the most significant digit.
  size_t index_of(const std::vector<int>& e) const;
  std::vector<int> exps_of(size_t idx) const;

  // N_{S/K}(z), computed by eliminating T_l, then T_{l-1}, ... through
  // conjugate products; each round must land in the smaller tower, which is
  // asserted on the known windows.
  LaurentSeries norm_to_base(const TowerElem& z) const;

  // v_S(z) normalized so a uniformizer has valuation 1 and v_S(x) = p^l.
  // Equals v_K(N_{S/K}(z)) because S/K is totally ramified.
  long norm_valuation(const TowerElem& z) const;

  bool same_as(const Tower& other) const { return this == &other; }

private:
  const FqCtx* F_;
  std::vector<LaurentSeries> rhs_;
  std::vector<ReducedRHS> reduced_;
  std::vector<LineBreak> lines_;
  long tame_index_;
  long degree_;
};

// Element of S in the dense monomial basis: coords()[index_of(e)] is the
// K-coefficient of T^e. Immutable value semantics; the tower must outlive
// its elements.
class TowerElem {
public:
  explicit TowerElem(const Tower& t);  // zero
  static TowerElem from_base(const Tower& t, const LaurentSeries& a);
  static TowerElem constant(const Tower& t, fq_t c);
  static TowerElem generator(const Tower& t, int i);  // T_i, 0-based
  static TowerElem one(const Tower& t) { return constant(t, 1); }

  const Tower& tower() const { return *tw_; }
  size_t dim() const { return c_.size(); }
  const LaurentSeries& coord(size_t idx) const { return c_.at(idx); }
  const std::vector<LaurentSeries>& coords() const { return c_; }

  bool known_zero() const;       // every coordinate is the exact zero
  bool window_all_empty() const; // no nonzero coefficient known anywhere

  TowerElem operator+(const TowerElem& b) const;
  TowerElem operator-(const TowerElem& b) const;
  TowerElem operator-() const;
  TowerElem operator*(const TowerElem& b) const;
  TowerElem scaled(fq_t c) const;
  TowerElem scaled_series(const LaurentSeries& a) const;
  TowerElem pow_int(long n) const;  // negative n inverts first
  TowerElem inverse() const;

  // sigma(z) for sigma = (c_1, ..., c_l): substitutes T_i -> T_i + c_i.
  TowerElem galois(const Vec& sigma) const;

  // True when the element lies in K on the known window; the base
  // coordinate is returned through out when non-null.
  bool in_base(LaurentSeries* out = nullptr) const;

  bool operator==(const TowerElem& b) const;
  bool operator!=(const TowerElem& b) const { return !(*this == b); }
  bool agrees_with(const TowerElem& b) const;

  std::string to_string() const;

private:
  const Tower* tw_;
  std::vector<LaurentSeries> c_;

  friend class Tower;
  void require_same_tower(const TowerElem& b) const;
};

}  // namespace wildram
