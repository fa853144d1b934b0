#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wildram/fq.hpp"

namespace wildram {

// Distinguished "+infinity" valuation of the exact zero series. Kept well
// below LONG_MAX so saturating precision arithmetic cannot overflow.
inline constexpr long kValInf = std::numeric_limits<long>::max() / 4;

// Truncated Laurent series over F_q. Immutable after construction.
//
// Coefficients of x^(lead), x^(lead+1), ... are stored densely in `c_`;
// everything between the stored window and `prec` is known to be zero.
// `exact` means all higher coefficients vanish too (a Laurent polynomial);
// otherwise `prec` is the first exponent whose coefficient is unknown.
// Series are kept normalized: no leading or trailing zero in `c_`, so for a
// nonzero series `lead` *is* the valuation.
class LaurentSeries {
public:
  // Exact zero over F.
  explicit LaurentSeries(const FqCtx& F);
  // c * x^k, exact.
  LaurentSeries(const FqCtx& F, fq_t c, long k);
  // Sum of c * x^k over the map, exact when prec is absent, else truncated
  // at prec (terms at exponents >= prec are rejected).
  LaurentSeries(const FqCtx& F, const std::map<long, fq_t>& terms,
                std::optional<long> prec = std::nullopt);

  static LaurentSeries zero(const FqCtx& F) { return LaurentSeries(F); }
  static LaurentSeries one(const FqCtx& F) { return LaurentSeries(F, 1, 0); }
  static LaurentSeries x(const FqCtx& F) { return LaurentSeries(F, 1, 1); }
  static LaurentSeries monomial(const FqCtx& F, fq_t c, long k) {
    return LaurentSeries(F, c, k);
  }

  const FqCtx& field() const { return *F_; }
  bool exact() const { return exact_; }
  long prec() const { return prec_; }  // kValInf when exact

  // True when the series is exactly zero (not merely zero on its window).
  bool is_zero() const { return exact_ && c_.empty(); }
  // True when no nonzero coefficient is known (includes the exact zero).
  bool window_empty() const { return c_.empty(); }

  // Valuation; kValInf for the exact zero. Throws PrecisionExhausted when
  // every known coefficient vanishes but the series is inexact.
  long valuation() const;

  // Coefficient of x^k. Throws PrecisionExhausted for k >= prec.
  fq_t at(long k) const;
  // Same, but nullopt instead of throwing.
  std::optional<fq_t> known_at(long k) const;
  fq_t leading_coeff() const { return at(valuation()); }

  // Stored nonzero terms as (exponent, coefficient), increasing exponent.
  std::vector<std::pair<long, fq_t>> terms() const;

  LaurentSeries operator+(const LaurentSeries& b) const;
  LaurentSeries operator-(const LaurentSeries& b) const;
  LaurentSeries operator*(const LaurentSeries& b) const;
  LaurentSeries operator/(const LaurentSeries& b) const;
  LaurentSeries operator-() const;
  LaurentSeries inverse() const;
  LaurentSeries scaled(fq_t c) const;
  LaurentSeries pow_int(long n) const;  // negative n inverts first

  // a^p: Frobenius on coefficients, exponents scaled by p.
  LaurentSeries frobenius() const;
  // a(y^n): exponents scaled by n (n >= 1).
  LaurentSeries substitute_power(long n) const;
  // a(s) for a substituted series s with v(s) >= 1. Sums a_k * s^k over the
  // stored window of a; inherits the window bound v(s) * prec(a) when a is
  // inexact.
  LaurentSeries substitute(const LaurentSeries& s) const;

  // Copy with precision capped at new_prec (marks the result inexact when
  // new_prec < kValInf).
  LaurentSeries truncated(long new_prec) const;
  // Copy with precision capped at valuation + window.
  LaurentSeries with_window(long window) const;

  // Structural equality: same field, same known coefficients, same
  // exactness and precision.
  bool operator==(const LaurentSeries& b) const;
  bool operator!=(const LaurentSeries& b) const { return !(*this == b); }
  // Equality of coefficients on the intersection of the known windows.
  bool agrees_with(const LaurentSeries& b) const;

  // "x^-3 + 2*x^-1 + x^2", "(g+1)*x^-2", trailing "+ O(x^k)" when inexact.
  std::string to_string() const;

private:
  const FqCtx* F_;
  long lead_ = 0;
  std::vector<fq_t> c_;
  bool exact_ = true;
  long prec_ = kValInf;

  void normalize();
  void require_same_field(const LaurentSeries& b) const;
};

// Parses the same syntax to_string emits. Coefficients are integers in
// [0, p) or polynomials in the residue generator g (parenthesized when they
// have several terms); a trailing O(x^k) marks the series inexact.
LaurentSeries parse_series(const FqCtx& F, const std::string& text);

// Saturating precision arithmetic: kValInf absorbs addition.
inline long sat_add(long a, long b) {
  if (a >= kValInf || b >= kValInf) return kValInf;
  return a + b;
}
inline long sat_mul(long a, long n) {
  if (a >= kValInf) return kValInf;
  return a * n;
}

}  // namespace wildram
