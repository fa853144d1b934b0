#include "wildram/asred.hpp"

#include <map>

#include "wildram/config.hpp"
#include "wildram/errors.hpp"

namespace wildram {

namespace {

// Terms with exponent >= 1, inheriting the precision bound.
LaurentSeries positive_part(const LaurentSeries& a) {
  std::map<long, fq_t> t;
  for (const auto& [k, c] : a.terms())
    if (k >= 1) t[k] = c;
  if (a.exact()) return LaurentSeries(a.field(), t);
  return LaurentSeries(a.field(), t, a.prec());
}

// g = t + t^p + t^(p^2) + ... for v(t) >= 1; satisfies g^p - g = -t.
// Terminates once the next term falls beyond the working precision.
LaurentSeries frobenius_sum(const LaurentSeries& t) {
  if (t.window_empty()) return t;
  long cap = t.exact() ? t.valuation() + default_window() : t.prec();
  LaurentSeries acc = LaurentSeries::zero(t.field());
  LaurentSeries term = t;
  while (!term.window_empty() && term.valuation() < cap) {
    acc = acc + term;
    term = term.frobenius();
  }
  if (t.exact()) acc = acc.truncated(term.valuation());
  return acc;
}

}  // namespace

std::string to_string(RhsStatus s) {
  switch (s) {
    case RhsStatus::Ramified: return "ramified";
    case RhsStatus::Split: return "split";
    case RhsStatus::Inert: return "inert";
  }
  return "?";
}

ReducedRHS reduce_rhs(const LaurentSeries& f_in) {
  const FqCtx& F = f_in.field();
  const int p = F.p();
  LaurentSeries f = f_in;
  LaurentSeries witness = LaurentSeries::zero(F);

  // (a) leading poles of p-divisible order
  for (;;) {
    if (f.window_empty()) break;  // decidability of the rest is settled in (c)
    long v = f.valuation();
    if (v >= 0 || v % p != 0) break;
    fq_t c0 = f.leading_coeff();
    fq_t c = F.pth_root(c0);
    LaurentSeries shift = LaurentSeries::monomial(F, c, v / p);
    f = f - LaurentSeries::monomial(F, c0, v) + shift;
    witness = witness + shift;
  }

  // (b) positive-valuation tail
  LaurentSeries t = positive_part(f);
  if (!t.is_zero()) {
    f = f - t;
    witness = witness - frobenius_sum(t);
  }

  // (c) the constant
  fq_t c0 = f.at(0);
  fq_t residual = 0;
  if (c0 != 0) {
    if (auto u = F.artin_schreier_root(c0)) {
      f = f - LaurentSeries::monomial(F, c0, 0);
      witness = witness + LaurentSeries::monomial(F, *u, 0);
    } else {
      residual = c0;
    }
  }

  ReducedRHS out{f, RhsStatus::Split, 0, witness, residual};
  // A window-empty f here has prec >= 1 (the constant was decidable), so
  // everything unknown sits in an absorbable positive tail.
  long v = f.window_empty() ? kValInf : f.valuation();
  if (v < 0) {
    out.status = RhsStatus::Ramified;
    out.break_m = -v;
  } else if (residual != 0) {
    out.status = RhsStatus::Inert;
  }
  return out;
}

long break_of(const LaurentSeries& f) {
  ReducedRHS r = reduce_rhs(f);
  if (r.status != RhsStatus::Ramified)
    throw DomainError("right-hand side reduces to " + to_string(r.status) +
                      ", not a ramified cover");
  return r.break_m;
}

LaurentSeries combine_rhs(const std::vector<LaurentSeries>& rhs,
                          const std::vector<int>& c) {
  if (rhs.empty()) throw DomainError("empty right-hand side list");
  if (c.size() != rhs.size())
    throw DomainError("combination length does not match the tower height");
  const FqCtx& F = rhs[0].field();
  LaurentSeries acc = LaurentSeries::zero(F);
  for (size_t i = 0; i < rhs.size(); ++i)
    acc = acc + rhs[i].scaled(F.from_int(c[i]));
  return acc;
}

TowerValidation validate_tower(const std::vector<LaurentSeries>& rhs) {
  if (rhs.empty()) throw DomainError("empty right-hand side list");
  const FqCtx& F = rhs[0].field();
  for (const auto& f : rhs)
    if (&f.field() != &F)
      throw DomainError("right-hand sides live over different fields");
  const int p = F.p();
  const size_t l = rhs.size();
  long total = 1;
  for (size_t i = 0; i < l; ++i) {
    total *= p;
    if (total > 4096)
      throw DomainError("tower height " + std::to_string(l) +
                        " over p = " + std::to_string(p) + " is too large");
  }

  TowerValidation out{true, {}, {}};
  std::map<std::vector<int>, long> line_break;  // canonical rep -> break
  for (long n = 1; n < total; ++n) {
    // big-endian digits: combo (c_1, ..., c_l)
    std::vector<int> c(l);
    long v = n;
    for (size_t i = l; i-- > 0;) {
      c[i] = static_cast<int>(v % p);
      v /= p;
    }
    ReducedRHS red = reduce_rhs(combine_rhs(rhs, c));
    if (red.status != RhsStatus::Ramified) {
      out.ok = false;
      out.failures.push_back({c, red.status});
      continue;
    }
    // canonical line representative: scale so the first nonzero entry is 1
    std::vector<int> rep(l);
    int first = 0;
    for (size_t i = 0; i < l; ++i)
      if (c[i] != 0) {
        first = c[i];
        break;
      }
    fq_t s = F.inv(F.from_int(first));
    for (size_t i = 0; i < l; ++i)
      rep[i] = static_cast<int>(F.mul(F.from_int(c[i]), s));
    auto [it, inserted] = line_break.emplace(rep, red.break_m);
    if (!inserted && it->second != red.break_m)
      throw InternalError("scalar multiples of a line disagree on the break");
  }
  if (out.ok)
    for (const auto& [rep, m] : line_break) out.lines.push_back({rep, m});
  return out;
}

std::vector<LineBreak> line_breaks(const std::vector<LaurentSeries>& rhs) {
  TowerValidation v = validate_tower(rhs);
  if (!v.ok)
    throw PreconditionFailed(
        "tower is not valid: some combination reduces to split or inert");
  return v.lines;
}

}  // namespace wildram
