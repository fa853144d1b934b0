#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wildram {

// An element of F_q, q = p^e, encoded as the index sum c_i * p^i of its
// coefficient vector (c_0..c_{e-1}) over the pinned modulus. 0 and 1 are
// the additive and multiplicative identities in every field.
using fq_t = std::uint16_t;

// Arithmetic context for F_q. Immutable and interned: FqCtx::get(p, e)
// returns one shared instance per (p, e), so pointer equality decides
// whether two series live over the same field. Supported range:
// p in {2,3,5,7,11,13}, 1 <= e <= 4.
//
// The modulus for each (p, e) is the lexicographically smallest monic
// irreducible of degree e over F_p (enumerated by the base-p index of the
// non-leading coefficients); the table is fixed so serialized elements are
// reproducible bit for bit. A unit test re-verifies irreducibility by
// trial division.
class FqCtx {
public:
  static const FqCtx& get(int p, int e);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  // Modulus coefficients, lowest degree first, length e+1, monic.
  const std::vector<int>& modulus() const { return modulus_; }

  fq_t from_int(long n) const;                       // n mod p in the prime field
  fq_t from_coeffs(const std::vector<int>& c) const; // lowest degree first
  std::vector<int> coeffs(fq_t a) const;             // length e, lowest first

  fq_t add(fq_t a, fq_t b) const;
  fq_t sub(fq_t a, fq_t b) const;
  fq_t neg(fq_t a) const;
  fq_t mul(fq_t a, fq_t b) const;
  fq_t inv(fq_t a) const;  // throws DivisionByZero on 0
  fq_t pow(fq_t a, long n) const;

  fq_t frobenius(fq_t a) const { return frob_[a]; }  // a^p
  fq_t pth_root(fq_t a) const { return proot_[a]; }  // unique b with b^p = a

  // Absolute trace to F_p, returned as an integer in [0, p).
  int trace(fq_t a) const { return trace_[a]; }

  // Some root t of t^p - t = c, if one exists in F_q (iff trace(c) = 0).
  std::optional<fq_t> artin_schreier_root(fq_t c) const;

  bool in_prime_field(fq_t a) const { return a < static_cast<fq_t>(p_); }

  // "0", "2", "g", "g+1", "2*g^2+g", ... with g the residue of the modulus.
  std::string to_string(fq_t a) const;

private:
  FqCtx(int p, int e);

  int p_, e_, q_;
  std::vector<int> modulus_;
  // x^(e+k) mod modulus for k = 0..e-2, as coefficient rows (lowest first).
  std::vector<std::vector<int>> overflow_;
  std::vector<fq_t> frob_, proot_;
  std::vector<std::int8_t> trace_;
  std::vector<fq_t> as_root_;           // index of a root, q_ = none
  std::vector<fq_t> mul_table_;         // q*q entries when q <= kTableLimit
  std::vector<fq_t> inv_table_;

  static constexpr int kTableLimit = 256;

  fq_t mul_generic(fq_t a, fq_t b) const;
};

}  // namespace wildram
