#include "wildram/inertia.hpp"

#include <numeric>

#include "wildram/errors.hpp"
#include "wildram/uniformizer.hpp"

namespace wildram {

namespace {

long pow_long(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void require_subgroup_shape(const Tower& t, const Subspace& H,
                            const char* what) {
  if (H.p() != t.p() || H.ambient_dim() != t.ell())
    throw DomainError(std::string(what) +
                      " must be a subspace of the tower's group");
}

Subspace annihilator_of_break_lines(const Tower& t, long target) {
  std::vector<Vec> gens;
  for (const auto& line : t.lines())
    if (line.break_m == target) gens.push_back(line.coeffs);
  if (gens.empty()) return Subspace::full(t.p(), t.ell());
  return Subspace::span(t.p(), t.ell(), gens).annihilator();
}

}  // namespace

Subspace g2_characterize(const Tower& t) {
  return annihilator_of_break_lines(t, 1);
}

bool jump_at_two(const Tower& t) {
  for (const auto& line : t.lines())
    if (line.break_m == 1) return true;
  return false;
}

Subspace gi_containment_bound(const Tower& t, long i) {
  if (i < 1) throw PreconditionFailed("bound index must be at least one");
  auto filt = ramification_filtration(t);
  if (!(filt.group_at(i) == Subspace::full(t.p(), t.ell())))
    throw PreconditionFailed(
        "the chain already dropped: G_" + std::to_string(i) +
        " is a proper subgroup, so the break-line bound does not apply");
  return annihilator_of_break_lines(t, i);
}

RamificationFiltration restrict_filtration(const Tower& t, const Subspace& H) {
  require_subgroup_shape(t, H, "H");
  auto filt = ramification_filtration(t);
  std::vector<FiltrationStep> steps;
  for (const auto& s : filt.steps()) {
    Subspace g = s.group.intersect(H);
    if (steps.empty() || !(g == steps.back().group))
      steps.push_back({s.from, std::move(g)});
  }
  std::map<Vec, long> jumps;
  for (const auto& [sigma, j] : filt.jumps())
    if (H.contains(sigma)) jumps[sigma] = j;
  return RamificationFiltration(t.p(), t.ell(), std::move(steps),
                                std::move(jumps));
}

RamificationFiltration quotient_filtration(const Tower& t, long j) {
  if (j < 0) throw PreconditionFailed("chain index must be nonnegative");
  auto filt = ramification_filtration(t);
  Subspace H = filt.group_at(j);
  Subspace W = H.annihilator();
  auto functionals = W.basis();
  int k = static_cast<int>(functionals.size());
  const int p = t.p();

  std::vector<FiltrationStep> steps;
  for (const auto& s : filt.steps()) {
    if (s.from >= j) break;
    Subspace img = chart_image(s.group, functionals);
    if (steps.empty() || !(img == steps.back().group))
      steps.push_back({s.from, std::move(img)});
  }
  Subspace triv(p, k);
  if (steps.empty())
    steps.push_back({0, std::move(triv)});
  else if (steps.back().group.dim() != 0)
    steps.push_back({j, std::move(triv)});
  return RamificationFiltration(p, k, std::move(steps));
}

TransitivityCheck transitivity_check(const Tower& t, const Subspace& H) {
  require_subgroup_shape(t, H, "H");
  long lhs = different_hilbert(ramification_filtration(t));
  Tower below = quotient_tower(t, H);
  long d_below = different_hilbert(ramification_filtration(below));
  long d_above = different_hilbert(restrict_filtration(t, H));
  long e = pow_long(t.p(), H.dim());
  return {lhs, e * d_below + d_above};
}

CompositumResult compositum(const Tower& x, const Tower& z) {
  if (&x.field() != &z.field())
    throw DomainError("compositum requires towers over the same base field");
  const FqCtx& F = x.field();
  const int p = x.p();

  std::vector<LaurentSeries> basis;
  auto in_span = [&](const LaurentSeries& f) {
    long total = pow_long(p, static_cast<int>(basis.size()));
    for (long n = 0; n < total; ++n) {
      Vec c(basis.size(), 0);
      long m = n;
      for (size_t i = basis.size(); i-- > 0;) {
        c[i] = static_cast<int>(m % p);
        m /= p;
      }
      LaurentSeries diff = basis.empty() ? f : f - combine_rhs(basis, c);
      if (reduce_rhs(diff).status == RhsStatus::Split) return true;
    }
    return false;
  };

  for (const auto& f : x.rhs())
    if (!in_span(f)) basis.push_back(f);
  for (const auto& f : z.rhs())
    if (!in_span(f)) basis.push_back(f);

  bool collapse =
      basis.size() < static_cast<size_t>(x.ell()) + static_cast<size_t>(z.ell());
  return {Tower(F, std::move(basis)), collapse};
}

KillWildResult kill_wild(const Tower& t, const Subspace& N) {
  require_subgroup_shape(t, N, "N");
  return {quotient_tower(t, N), N};
}

Tower tame_pullback(const Tower& t, long n) {
  if (n < 1 || std::gcd(n, static_cast<long>(t.p())) != 1)
    throw PreconditionFailed("pullback degree must be positive and prime to p");
  std::vector<LaurentSeries> rhs;
  rhs.reserve(t.rhs().size());
  for (const auto& f : t.rhs()) rhs.push_back(f.substitute_power(n));
  return Tower(t.field(), std::move(rhs), 1);
}

long rh_genus(long degree, const std::vector<long>& branch_differents) {
  if (degree < 1) throw PreconditionFailed("degree must be at least one");
  long sum = 0;
  for (long d : branch_differents) {
    if (d < 0) throw PreconditionFailed("branch differents must be nonnegative");
    sum += d;
  }
  long two_g = -2 * degree + sum + 2;
  if (two_g % 2 != 0)
    throw NonIntegralGenus("2g = " + std::to_string(two_g) +
                           " is odd; branch data is inconsistent");
  long g = two_g / 2;
  if (g < 0)
    throw NegativeGenus("genus " + std::to_string(g) +
                        " is negative; branch data is inconsistent");
  return g;
}

Tower quotient_tower(const Tower& t, const Subspace& H) {
  require_subgroup_shape(t, H, "H");
  Subspace W = H.annihilator();
  std::vector<LaurentSeries> rhs;
  for (const auto& row : W.basis()) rhs.push_back(combine_rhs(t.rhs(), row));
  return Tower(t.field(), std::move(rhs), t.tame_index());
}

std::vector<Vec> relative_generators(const Tower& t, const Subspace& H) {
  require_subgroup_shape(t, H, "H");
  const int l = t.ell();
  Subspace cur = H.annihilator();
  std::vector<Vec> picked;
  for (int i = 0; i < l && static_cast<int>(picked.size()) < H.dim(); ++i) {
    Vec e(static_cast<size_t>(l), 0);
    e[static_cast<size_t>(i)] = 1;
    if (cur.contains(e)) continue;
    picked.push_back(e);
    cur = cur.sum(Subspace::span(t.p(), l, {e}));
  }
  if (static_cast<int>(picked.size()) != H.dim())
    throw InternalError("failed to complete the fixed-field span to a basis");
  return picked;
}

Tower relative_tower(const Tower& t, const Subspace& H) {
  Tower below = quotient_tower(t, H);
  auto u = uniformizer(below);
  LaurentSeries X = x_expansion(below, u.pi);
  std::vector<LaurentSeries> rhs;
  for (const auto& v : relative_generators(t, H))
    rhs.push_back(combine_rhs(t.rhs(), v).substitute(X));
  return Tower(t.field(), std::move(rhs));
}

Subspace chart_image(const Subspace& s, const std::vector<Vec>& functionals) {
  const int p = s.p();
  const int k = static_cast<int>(functionals.size());
  std::vector<Vec> images;
  for (const auto& b : s.basis()) {
    Vec img(static_cast<size_t>(k), 0);
    for (int r = 0; r < k; ++r) {
      long acc = 0;
      for (size_t i = 0; i < b.size(); ++i)
        acc += static_cast<long>(functionals[static_cast<size_t>(r)][i]) *
               static_cast<long>(b[i]);
      img[static_cast<size_t>(r)] = static_cast<int>(((acc % p) + p) % p);
    }
    images.push_back(std::move(img));
  }
  if (images.empty()) return Subspace(p, k);
  return Subspace::span(p, k, images);
}

}  // namespace wildram
