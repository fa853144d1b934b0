#include "wildram/fq.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "wildram/errors.hpp"

namespace wildram {

namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13};

bool supported_prime(int p) {
  for (int q : kPrimes)
    if (q == p) return true;
  return false;
}

// Pinned irreducible moduli, coefficients lowest degree first (monic).
// Lexicographically smallest by base-p index of the non-leading part.
const std::map<std::pair<int, int>, std::vector<int>> kModuli = {
    {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
    {{3, 2}, {1, 0, 1}},       {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 1, 0, 0, 1}},
    {{5, 2}, {2, 0, 1}},       {{5, 3}, {1, 1, 0, 1}},    {{5, 4}, {2, 0, 0, 0, 1}},
    {{7, 2}, {1, 0, 1}},       {{7, 3}, {2, 0, 0, 1}},    {{7, 4}, {1, 1, 0, 0, 1}},
    {{11, 2}, {1, 0, 1}},      {{11, 3}, {4, 1, 0, 1}},   {{11, 4}, {2, 1, 0, 0, 1}},
    {{13, 2}, {2, 0, 1}},      {{13, 3}, {2, 0, 0, 1}},   {{13, 4}, {2, 0, 0, 0, 1}},
};

}  // namespace

const FqCtx& FqCtx::get(int p, int e) {
  if (!supported_prime(p))
    throw DomainError("p = " + std::to_string(p) + " is not a supported prime (2..13)");
  if (e < 1 || e > 4)
    throw DomainError("e = " + std::to_string(e) + " out of supported range 1..4");

  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<FqCtx>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, e}];
  if (!slot) slot.reset(new FqCtx(p, e));
  return *slot;
}

FqCtx::FqCtx(int p, int e) : p_(p), e_(e) {
  q_ = 1;
  for (int i = 0; i < e; ++i) q_ *= p;

  if (e == 1) {
    modulus_ = {0, 1};  // formally x - 0; unused
  } else {
    modulus_ = kModuli.at({p, e});
  }

  // Rows for x^(e+k) mod modulus, k = 0..e-2.
  if (e > 1) {
    std::vector<int> cur(e);  // x^e mod m = -(m - x^e)
    for (int i = 0; i < e; ++i) cur[i] = (p - modulus_[i]) % p;
    overflow_.push_back(cur);
    for (int k = 1; k <= e - 2; ++k) {
      std::vector<int> nxt(e, 0);
      // multiply cur by x, fold the overflowing x^e term back in
      int top = cur[e - 1];
      for (int i = e - 1; i > 0; --i) nxt[i] = cur[i - 1];
      nxt[0] = 0;
      for (int i = 0; i < e; ++i) nxt[i] = (nxt[i] + top * overflow_[0][i]) % p;
      overflow_.push_back(nxt);
      cur = nxt;
    }
  }

  if (q_ <= kTableLimit) {
    mul_table_.assign(static_cast<size_t>(q_) * q_, 0);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b <= a; ++b) {
        fq_t v = mul_generic(static_cast<fq_t>(a), static_cast<fq_t>(b));
        mul_table_[static_cast<size_t>(a) * q_ + b] = v;
        mul_table_[static_cast<size_t>(b) * q_ + a] = v;
      }
  }

  inv_table_.assign(q_, 0);
  for (int a = 1; a < q_; ++a)
    inv_table_[a] = pow(static_cast<fq_t>(a), q_ - 2);

  frob_.assign(q_, 0);
  proot_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    fq_t f = pow(static_cast<fq_t>(a), p_);
    frob_[a] = f;
    proot_[f] = static_cast<fq_t>(a);  // Frobenius is a bijection
  }

  trace_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    fq_t acc = 0;
    fq_t cur = static_cast<fq_t>(a);
    for (int i = 0; i < e_; ++i) {
      acc = add(acc, cur);
      cur = frob_[cur];
    }
    trace_[a] = static_cast<std::int8_t>(acc);  // trace lies in F_p, index < p
  }

  as_root_.assign(q_, static_cast<fq_t>(q_));
  for (int t = 0; t < q_; ++t) {
    fq_t c = sub(frob_[t], static_cast<fq_t>(t));
    if (as_root_[c] == static_cast<fq_t>(q_)) as_root_[c] = static_cast<fq_t>(t);
  }
}

fq_t FqCtx::from_int(long n) const {
  long r = n % p_;
  if (r < 0) r += p_;
  return static_cast<fq_t>(r);
}

fq_t FqCtx::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > e_)
    throw DomainError("coefficient vector longer than extension degree");
  long idx = 0;
  long base = 1;
  for (size_t i = 0; i < c.size(); ++i) {
    int d = c[i] % p_;
    if (d < 0) d += p_;
    idx += d * base;
    base *= p_;
  }
  return static_cast<fq_t>(idx);
}

std::vector<int> FqCtx::coeffs(fq_t a) const {
  std::vector<int> out(e_);
  int v = a;
  for (int i = 0; i < e_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

fq_t FqCtx::add(fq_t a, fq_t b) const {
  if (e_ == 1) return static_cast<fq_t>((a + b) % p_);
  int out = 0, base = 1, x = a, y = b;
  for (int i = 0; i < e_; ++i) {
    out += ((x % p_) + (y % p_)) % p_ * base;
    x /= p_;
    y /= p_;
    base *= p_;
  }
  return static_cast<fq_t>(out);
}

fq_t FqCtx::sub(fq_t a, fq_t b) const { return add(a, neg(b)); }

fq_t FqCtx::neg(fq_t a) const {
  if (e_ == 1) return static_cast<fq_t>((p_ - a) % p_);
  int out = 0, base = 1, x = a;
  for (int i = 0; i < e_; ++i) {
    out += ((p_ - x % p_) % p_) * base;
    x /= p_;
    base *= p_;
  }
  return static_cast<fq_t>(out);
}

fq_t FqCtx::mul_generic(fq_t a, fq_t b) const {
  if (e_ == 1) return static_cast<fq_t>((static_cast<int>(a) * b) % p_);
  int da[4], db[4];
  int x = a, y = b;
  for (int i = 0; i < e_; ++i) {
    da[i] = x % p_;
    db[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  int prod[7] = {0, 0, 0, 0, 0, 0, 0};
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < e_; ++j) prod[i + j] += da[i] * db[j];
  // fold degrees >= e via the precomputed overflow rows
  int red[4] = {0, 0, 0, 0};
  for (int i = 0; i < e_; ++i) red[i] = prod[i] % p_;
  for (int k = 0; k <= 2 * e_ - 2 - e_; ++k) {
    int c = prod[e_ + k] % p_;
    if (c == 0) continue;
    for (int i = 0; i < e_; ++i) red[i] = (red[i] + c * overflow_[k][i]) % p_;
  }
  int out = 0, base = 1;
  for (int i = 0; i < e_; ++i) {
    out += red[i] * base;
    base *= p_;
  }
  return static_cast<fq_t>(out);
}

fq_t FqCtx::mul(fq_t a, fq_t b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
  return mul_generic(a, b);
}

fq_t FqCtx::inv(fq_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in F_q");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);
}

fq_t FqCtx::pow(fq_t a, long n) const {
  if (n < 0) {
    if (a == 0) throw DivisionByZero("negative power of zero in F_q");
    a = inv_table_.empty() ? pow(a, q_ - 2) : inv_table_[a];
    n = -n;
  }
  if (a == 0) return static_cast<fq_t>(n == 0 ? 1 : 0);
  n %= q_ - 1;
  fq_t acc = 1, base = a;
  while (n > 0) {
    if (n & 1) acc = mul_generic(acc, base);
    base = mul_generic(base, base);
    n >>= 1;
  }
  return acc;
}

std::optional<fq_t> FqCtx::artin_schreier_root(fq_t c) const {
  fq_t t = as_root_[c];
  if (t == static_cast<fq_t>(q_)) return std::nullopt;
  return t;
}

std::string FqCtx::to_string(fq_t a) const {
  if (e_ == 1 || a < static_cast<fq_t>(p_)) return std::to_string(a % (e_ == 1 ? p_ : q_));
  auto c = coeffs(a);
  std::string out;
  for (int i = e_ - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string term;
    if (i == 0) {
      term = std::to_string(c[i]);
    } else {
      if (c[i] != 1) term = std::to_string(c[i]) + "*";
      term += "g";
      if (i > 1) term += "^" + std::to_string(i);
    }
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace wildram
