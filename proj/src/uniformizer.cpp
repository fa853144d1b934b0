#include "wildram/uniformizer.hpp"

#include <map>

#include "wildram/config.hpp"
#include "wildram/errors.hpp"

namespace wildram {

namespace {

long inv_mod(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  long r = 1;
  for (long k = 0; k < p - 2; ++k) r = (r * a) % p;
  return r;
}

// Exponents for pi = T'^a * y^b with -a*m + p*b = 1; a is pinned to
// [-(p-1), -1] so the same tower always yields the same uniformizer.
std::pair<long, long> bezout_exponents(long m, long p) {
  long a = -inv_mod(m, p);
  long b = (1 + a * m) / p;
  return {a, b};
}

Uniformizer height_one(const Tower& t) {
  const ReducedRHS& r = t.reduced(0);
  long m = r.break_m;
  TowerElem Tp =
      TowerElem::generator(t, 0) - TowerElem::from_base(t, r.witness);
  auto [a, b] = bezout_exponents(m, t.p());
  TowerElem pi =
      Tp.pow_int(a) *
      TowerElem::from_base(t, LaurentSeries::monomial(t.field(), 1, b));
  if (t.norm_valuation(pi) != 1)
    throw InternalError("height-one uniformizer failed certification");
  return {std::move(pi), "height-one"};
}

}  // namespace

std::vector<fq_t> claim_step(const FqCtx& F, std::vector<fq_t>& c,
                             std::vector<fq_t>& d, int level) {
  if (c.empty() || c.size() != d.size())
    throw PreconditionFailed("claim_step needs matching nonempty constants");
  fq_t c0inv = F.inv(c[0]);
  fq_t d0 = d[0];
  std::vector<fq_t> a, nc, nd;
  for (size_t j = 1; j < c.size(); ++j) {
    fq_t aj = F.pth_root(F.mul(c[j], c0inv));
    if (F.in_prime_field(aj))
      throw ResidueSplit(level, level + static_cast<int>(j), F.to_string(aj));
    fq_t ajp = F.frobenius(aj);
    a.push_back(aj);
    // P(g_j - a_j g_0) = (a_j - a_j^p) y^{-1} + (d_j - a_j^p d_0), using
    // g_0 = y^{-1} exactly after the pivot inversion.
    nc.push_back(F.sub(aj, ajp));
    nd.push_back(F.sub(d[j], F.mul(ajp, d0)));
  }
  c = std::move(nc);
  d = std::move(nd);
  return a;
}

Uniformizer claim_chain_uniformizer(const Tower& t) {
  if (t.ell() < 1 || !t.all_breaks_one())
    throw PreconditionFailed(
        "residue chain requires height >= 1 and every break equal to one");
  const FqCtx& F = t.field();
  int l = t.ell();

  // gamma_j = T_j - w_j satisfies P(gamma_j) = c_j x^{-1} + d_j exactly,
  // because a reduced break-one rhs is c x^{-1} plus a constant.
  std::vector<TowerElem> gam;
  std::vector<fq_t> c, d;
  for (int j = 0; j < l; ++j) {
    const ReducedRHS& r = t.reduced(j);
    gam.push_back(TowerElem::generator(t, j) -
                  TowerElem::from_base(t, r.witness));
    c.push_back(r.f.at(-1));
    d.push_back(r.f.known_at(0).value_or(0));
  }

  TowerElem y = TowerElem::from_base(t, LaurentSeries::x(F));
  long expected = t.degree();
  for (int i = 0; i < l; ++i) {
    auto a = claim_step(F, c, d, i + 1);
    TowerElem piv = gam.front();
    y = piv.inverse();
    expected /= t.p();
    if (t.norm_valuation(y) != expected)
      throw InternalError("residue chain step produced a wrong valuation");
    std::vector<TowerElem> next;
    for (size_t j = 1; j < gam.size(); ++j)
      next.push_back(gam[j] - piv.scaled(a[j - 1]));
    gam = std::move(next);
  }
  return {std::move(y), "break-one-chain"};
}

Uniformizer level_iterated_uniformizer(const Tower& t) {
  const FqCtx& F = t.field();
  // X is x expanded in the running sub-uniformizer y; at level zero y = x
  // and X is the identity series.
  LaurentSeries X = LaurentSeries::x(F);
  TowerElem y = TowerElem::from_base(t, LaurentSeries::x(F));
  long expected = t.degree();
  for (int i = 0; i < t.ell(); ++i) {
    LaurentSeries Fi = (i == 0) ? t.f(0) : t.f(i).substitute(X);
    ReducedRHS R = reduce_rhs(Fi);
    if (R.status != RhsStatus::Ramified)
      throw InternalError(
          "relative rhs is not ramified although the tower validated");
    TowerElem Tp = TowerElem::generator(t, i) -
                   ((i == 0) ? TowerElem::from_base(t, R.witness)
                             : eval_series(R.witness, y));
    auto [a, b] = bezout_exponents(R.break_m, t.p());
    TowerElem ynext = Tp.pow_int(a) * y.pow_int(b);
    expected /= t.p();
    if (t.norm_valuation(ynext) != expected)
      throw InternalError("level step produced a wrong valuation");
    if (i + 1 < t.ell()) {
      // Rewrite X through the relative step: the step is isomorphic to a
      // height-one tower over F_q((s)) with rhs R, so the expansion of s in
      // that tower's uniformizer composes onto X.
      Tower A(F, {R.f});
      Uniformizer ua = height_one(A);
      LaurentSeries S = x_expansion(A, ua.pi);
      X = X.substitute(S);
    }
    y = ynext;
  }
  return {std::move(y), "level-iterated"};
}

Uniformizer uniformizer(const Tower& t) {
  if (t.ell() == 0) {
    TowerElem pi = TowerElem::from_base(t, LaurentSeries::x(t.field()));
    if (t.norm_valuation(pi) != 1)
      throw InternalError("base uniformizer failed certification");
    return {std::move(pi), "base"};
  }
  if (t.ell() == 1) return height_one(t);
  if (t.all_breaks_one()) return claim_chain_uniformizer(t);
  return level_iterated_uniformizer(t);
}

TowerElem eval_series(const LaurentSeries& s, const TowerElem& z) {
  const Tower& t = z.tower();
  if (&s.field() != &t.field())
    throw DomainError("series field does not match the tower");
  TowerElem acc(t);
  TowerElem cur = TowerElem::one(t);
  long cur_exp = 0;
  for (const auto& [k, c] : s.terms()) {
    cur = cur * z.pow_int(k - cur_exp);
    cur_exp = k;
    acc = acc + cur.scaled(c);
  }
  return acc;
}

LaurentSeries expand_in_uniformizer(const Tower& t, const TowerElem& pi,
                                    const TowerElem& z) {
  const FqCtx& F = t.field();
  if (z.known_zero()) return LaurentSeries::zero(F);
  long v0 = t.norm_valuation(z);
  TowerElem w = z * pi.pow_int(-v0);
  TowerElem piinv = pi.inverse();
  std::map<long, fq_t> terms;
  long window = default_window();
  long stop = v0 + window;
  bool exact = false;
  for (long k = 0; k < window; ++k) {
    if (w.known_zero()) {
      exact = true;
      break;
    }
    if (w.window_all_empty()) {
      stop = v0 + k;
      break;
    }
    LaurentSeries N = t.norm_to_base(w);
    if (!N.window_empty() && N.valuation() < 0)
      throw InternalError("digit extraction drifted to a negative valuation");
    auto c0 = N.known_at(0);
    if (!c0) {
      stop = v0 + k;
      break;
    }
    // The residue field does not extend, so res(N(w)) = res(w)^(p^l).
    fq_t digit = *c0;
    for (int r = 0; r < t.ell(); ++r) digit = F.pth_root(digit);
    if (digit) terms[v0 + k] = digit;
    w = (w - TowerElem::constant(t, digit)) * piinv;
  }
  if (exact) return LaurentSeries(F, terms);
  return LaurentSeries(F, terms, stop);
}

LaurentSeries x_expansion(const Tower& t, const TowerElem& pi) {
  return expand_in_uniformizer(
      t, pi, TowerElem::from_base(t, LaurentSeries::x(t.field())));
}

}  // namespace wildram
