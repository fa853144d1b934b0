#include "wildram/filtration.hpp"

#include <algorithm>

#include "wildram/errors.hpp"
#include "wildram/uniformizer.hpp"

namespace wildram {

namespace {

long pow_long(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

RamificationFiltration::RamificationFiltration(int p, int ambient,
                                               std::vector<FiltrationStep> steps,
                                               std::map<Vec, long> jumps)
    : p_(p), ambient_(ambient), steps_(std::move(steps)), jumps_(std::move(jumps)) {
  if (steps_.empty())
    throw DomainError("a ramification chain needs at least one segment");
  if (steps_.front().from != 0)
    throw DomainError("a ramification chain must start at index zero");
  for (size_t k = 0; k < steps_.size(); ++k) {
    if (steps_[k].group.p() != p_ || steps_[k].group.ambient_dim() != ambient_)
      throw DomainError("chain segment lives in the wrong space");
    if (k > 0) {
      if (steps_[k].from <= steps_[k - 1].from)
        throw DomainError("chain segment indices must increase");
      if (!(steps_[k - 1].group.contains(steps_[k].group)) ||
          steps_[k].group.dim() >= steps_[k - 1].group.dim())
        throw DomainError("chain segments must strictly descend");
    }
  }
  if (steps_.back().group.dim() != 0)
    throw DomainError("a ramification chain must end at the trivial group");
}

const Subspace& RamificationFiltration::group_at(long i) const {
  if (i < 0) throw DomainError("chain index must be nonnegative");
  size_t k = steps_.size();
  while (k > 0 && steps_[k - 1].from > i) --k;
  return steps_[k - 1].group;
}

long RamificationFiltration::order_at(long i) const {
  return pow_long(p_, group_at(i).dim());
}

long RamificationFiltration::last_nontrivial() const {
  return steps_.back().from - 1;
}

bool RamificationFiltration::operator==(const RamificationFiltration& o) const {
  if (p_ != o.p_ || ambient_ != o.ambient_ || steps_.size() != o.steps_.size())
    return false;
  for (size_t k = 0; k < steps_.size(); ++k)
    if (steps_[k].from != o.steps_[k].from ||
        !(steps_[k].group == o.steps_[k].group))
      return false;
  return true;
}

RamificationFiltration ramification_filtration(const Tower& t) {
  const int p = t.p();
  const int l = t.ell();
  std::map<Vec, long> jumps;
  if (l > 0) {
    auto u = uniformizer(t);
    long total = pow_long(p, l);
    for (long n = 1; n < total; ++n) {
      Vec sigma(static_cast<size_t>(l), 0);
      long m = n;
      for (int i = l; i-- > 0;) {
        sigma[static_cast<size_t>(i)] = static_cast<int>(m % p);
        m /= p;
      }
      auto moved = u.pi.galois(sigma) - u.pi;
      if (moved.known_zero())
        throw InternalError("a nontrivial group element fixed the uniformizer");
      jumps[sigma] = t.norm_valuation(moved);
    }
  }

  std::vector<FiltrationStep> steps;
  for (long i = 0;; ++i) {
    std::vector<Vec> members;
    for (const auto& [sigma, j] : jumps)
      if (j >= i + 1) members.push_back(sigma);
    Subspace g = members.empty() ? Subspace(p, l)
                                 : Subspace::span(p, l, members);
    if (pow_long(p, g.dim()) != static_cast<long>(members.size()) + 1)
      throw InternalError("a ramification level set is not a subgroup");
    if (steps.empty() || !(g == steps.back().group))
      steps.push_back({i, std::move(g)});
    if (members.empty()) break;
  }

  if (l > 0) {
    // fully wild: G_0 = G_1 = the whole group
    if (!(steps.front().group == Subspace::full(p, l)) ||
        (steps.size() > 1 && steps[1].from < 2))
      throw InternalError("validated tower is not fully wild");
  }
  return RamificationFiltration(p, l, std::move(steps), std::move(jumps));
}

long different_hilbert(const RamificationFiltration& f) {
  long d = 0;
  const auto& st = f.steps();
  for (size_t k = 0; k + 1 < st.size(); ++k)
    d += (st[k + 1].from - st[k].from) *
         (pow_long(f.p(), st[k].group.dim()) - 1);
  return d;
}

long different_via_derivative(const Tower& t) {
  if (t.ell() != 1)
    throw PreconditionFailed("derivative route needs height exactly one");
  const FqCtx& F = t.field();
  auto u = uniformizer(t);
  const int p = t.p();

  // m(Y) = prod_c (Y - sigma_c(pi)), coefficients ascending in Y. The
  // conjugate product forces the coefficients into K, which is checked.
  std::vector<TowerElem> poly{TowerElem::one(t)};
  for (int c = 0; c < p; ++c) {
    TowerElem root = u.pi.galois({c});
    std::vector<TowerElem> next(poly.size() + 1, TowerElem(t));
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] = next[k + 1] + poly[k];
      next[k] = next[k] - poly[k] * root;
    }
    poly = std::move(next);
  }
  for (const auto& a : poly)
    if (!a.in_base())
      throw InternalError("minimal polynomial coefficient left the base field");

  // m'(pi) via Horner on the formal derivative
  std::vector<TowerElem> der;
  for (size_t k = 1; k < poly.size(); ++k)
    der.push_back(poly[k].scaled(F.from_int(static_cast<long>(k))));
  TowerElem acc(t);
  for (size_t k = der.size(); k-- > 0;) acc = acc * u.pi + der[k];
  return t.norm_valuation(acc);
}

}  // namespace wildram
