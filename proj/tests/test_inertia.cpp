#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "wildram/config.hpp"
#include "wildram/errors.hpp"
#include "wildram/inertia.hpp"
#include "wildram/uniformizer.hpp"

using namespace wildram;

namespace {

Tower make_tower(const FqCtx& F, std::initializer_list<const char*> rhs,
                 long tame = 1) {
  std::vector<LaurentSeries> v;
  for (const char* s : rhs) v.push_back(parse_series(F, s));
  return Tower(F, std::move(v), tame);
}

Vec chart_vec(const Vec& sigma, const std::vector<Vec>& functionals, int p) {
  Vec out(functionals.size(), 0);
  for (size_t r = 0; r < functionals.size(); ++r) {
    long acc = 0;
    for (size_t i = 0; i < sigma.size(); ++i)
      acc += static_cast<long>(functionals[r][i]) * sigma[i];
    out[r] = static_cast<int>(((acc % p) + p) % p);
  }
  return out;
}

// The restriction law must reproduce the chain computed from scratch on the
// relative extension, segment by segment and jump by jump, once both sides
// are written in the chart of the relative generators.
void check_relative_matches(const Tower& t, const Subspace& H) {
  auto restricted = restrict_filtration(t, H);
  auto rel = relative_tower(t, H);
  auto oracle_rel = ramification_filtration(rel);
  auto gens = relative_generators(t, H);

  REQUIRE(restricted.steps().size() == oracle_rel.steps().size());
  for (size_t k = 0; k < restricted.steps().size(); ++k) {
    CHECK(restricted.steps()[k].from == oracle_rel.steps()[k].from);
    CHECK(chart_image(restricted.steps()[k].group, gens) ==
          oracle_rel.steps()[k].group);
  }
  for (const auto& [sigma, j] : restricted.jumps())
    CHECK(oracle_rel.jumps().at(chart_vec(sigma, gens, t.p())) == j);
}

}  // namespace

TEST_CASE("g2 is the annihilator of the break-one span") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});
  auto g2 = g2_characterize(t);
  CHECK(g2.dim() == 1);
  CHECK(g2.contains(Vec{0, 1}));

  auto t3 = make_tower(F, {"x^-3"});
  CHECK(g2_characterize(t3) == Subspace::full(2, 1));

  const auto& F4 = FqCtx::get(2, 2);
  auto tb = make_tower(F4, {"x^-1", "g*x^-1"});
  CHECK(g2_characterize(tb).dim() == 0);
}

TEST_CASE("g2 equals the oracle's G_2 across a grid") {
  struct Case {
    int p, e;
    std::initializer_list<const char*> rhs;
  };
  for (const Case& c :
       {Case{2, 1, {"x^-1"}}, Case{2, 1, {"x^-3"}}, Case{2, 1, {"x^-5"}},
        Case{2, 1, {"x^-1", "x^-3"}}, Case{2, 1, {"x^-1", "x^-5"}},
        Case{2, 1, {"x^-3", "x^-5"}}, Case{3, 1, {"x^-1"}},
        Case{3, 1, {"x^-2"}}, Case{3, 1, {"x^-1", "x^-2"}},
        Case{3, 1, {"x^-2", "x^-5"}}, Case{2, 2, {"x^-1", "g*x^-1"}},
        Case{2, 2, {"x^-1", "g*x^-3"}}}) {
    const auto& F = FqCtx::get(c.p, c.e);
    auto t = make_tower(F, c.rhs);
    auto filt = ramification_filtration(t);
    CHECK(g2_characterize(t) == filt.group_at(2));
    CHECK(jump_at_two(t) ==
          !(g2_characterize(t) == Subspace::full(c.p, t.ell())));
  }
}

TEST_CASE("jump_at_two matches the presence of a break-one line") {
  const auto& F = FqCtx::get(2, 1);
  CHECK(jump_at_two(make_tower(F, {"x^-1"})));
  CHECK_FALSE(jump_at_two(make_tower(F, {"x^-3"})));
  CHECK(jump_at_two(make_tower(F, {"x^-1", "x^-3"})));
}

TEST_CASE("break-line bound for higher indices") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-3"});
  // the chain is still everything at 2 and 3
  CHECK(gi_containment_bound(t, 1) == g2_characterize(t));
  CHECK(gi_containment_bound(t, 2) == Subspace::full(2, 1));
  CHECK(gi_containment_bound(t, 3).dim() == 0);
  CHECK_THROWS_AS(gi_containment_bound(t, 4), PreconditionFailed);
  CHECK_THROWS_AS(gi_containment_bound(t, 0), PreconditionFailed);

  auto tm = make_tower(F, {"x^-1", "x^-3"});
  CHECK(gi_containment_bound(tm, 1) == g2_characterize(tm));
  CHECK_THROWS_AS(gi_containment_bound(tm, 2), PreconditionFailed);
}

TEST_CASE("bound is contained in the oracle's next group") {
  struct Case {
    int p, e;
    std::initializer_list<const char*> rhs;
    long i;
  };
  for (const Case& c :
       {Case{2, 1, {"x^-3"}, 3}, Case{2, 1, {"x^-5"}, 5},
        Case{3, 1, {"x^-2"}, 2}, Case{2, 1, {"x^-3", "x^-5"}, 3},
        Case{3, 1, {"x^-2", "x^-5"}, 2}}) {
    const auto& F = FqCtx::get(c.p, c.e);
    auto t = make_tower(F, c.rhs);
    auto filt = ramification_filtration(t);
    auto bound = gi_containment_bound(t, c.i);
    CHECK(filt.group_at(c.i + 1).contains(bound));
  }
}

TEST_CASE("restricting to the full group or the trivial group") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});
  auto filt = ramification_filtration(t);
  CHECK(restrict_filtration(t, Subspace::full(2, 2)) == filt);
  auto trivial = restrict_filtration(t, Subspace(2, 2));
  CHECK(trivial.last_nontrivial() == -1);
  CHECK(different_hilbert(trivial) == 0);
}

TEST_CASE("restriction to the deep subgroup of [x^-1, x^-3]") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});
  auto H = Subspace::span(2, 2, {{0, 1}});
  auto r = restrict_filtration(t, H);
  // H_i = H through index 5, trivial after
  CHECK(r.group_at(0) == H);
  CHECK(r.group_at(5) == H);
  CHECK(r.group_at(6).dim() == 0);
  CHECK(different_hilbert(r) == 6);
  CHECK(r.jumps().at(Vec{0, 1}) == 6);
  CHECK(r.jumps().size() == 1);
  check_relative_matches(t, H);
}

TEST_CASE("restriction matches the relative extension across cases") {
  const auto& F2 = FqCtx::get(2, 1);
  auto t1 = make_tower(F2, {"x^-1", "x^-3"});
  check_relative_matches(t1, Subspace::span(2, 2, {{1, 0}}));
  check_relative_matches(t1, Subspace::span(2, 2, {{1, 1}}));
  check_relative_matches(t1, Subspace::full(2, 2));
  check_relative_matches(t1, Subspace(2, 2));

  const auto& F3 = FqCtx::get(3, 1);
  auto t2 = make_tower(F3, {"x^-1", "x^-2"});
  check_relative_matches(t2, Subspace::span(3, 2, {{0, 1}}));
  check_relative_matches(t2, Subspace::span(3, 2, {{1, 1}}));

  const auto& F4 = FqCtx::get(2, 2);
  auto t3 = make_tower(F4, {"x^-1", "g*x^-1"});
  check_relative_matches(t3, Subspace::span(2, 2, {{1, 1}}));
}

TEST_CASE("quotient by G_2 of [x^-1, x^-3] is the break-one cover") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});
  auto q = quotient_filtration(t, 2);
  CHECK(q.ambient_dim() == 1);
  CHECK(q.group_at(0) == Subspace::full(2, 1));
  CHECK(q.group_at(1) == Subspace::full(2, 1));
  CHECK(q.group_at(2).dim() == 0);
  CHECK(different_hilbert(q) == 2);

  // cross-check: the quotient tower is [x^-1] and its oracle chain agrees
  auto H = ramification_filtration(t).group_at(2);
  auto below = quotient_tower(t, H);
  CHECK(below.gen_breaks() == std::vector<long>{1});
  CHECK(ramification_filtration(below) == q);
}

TEST_CASE("quotient beyond the last jump reproduces the chain") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});
  auto filt = ramification_filtration(t);
  auto q = quotient_filtration(t, 12);
  REQUIRE(q.steps().size() == filt.steps().size());
  for (size_t k = 0; k < q.steps().size(); ++k) {
    CHECK(q.steps()[k].from == filt.steps()[k].from);
    CHECK(q.steps()[k].group.dim() == filt.steps()[k].group.dim());
  }
}

TEST_CASE("quotient at zero is empty and negative indices are rejected") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1"});
  auto q = quotient_filtration(t, 0);
  CHECK(q.ambient_dim() == 0);
  CHECK(q.last_nontrivial() == -1);
  CHECK_THROWS_AS(quotient_filtration(t, -1), PreconditionFailed);
}

TEST_CASE("quotient chain matches the quotient tower's oracle at each jump") {
  const auto& F = FqCtx::get(3, 1);
  auto t = make_tower(F, {"x^-1", "x^-2"});
  for (long j : {2L, 5L}) {
    auto q = quotient_filtration(t, j);
    auto below = quotient_tower(t, ramification_filtration(t).group_at(j));
    CHECK(ramification_filtration(below) == q);
  }
}

TEST_CASE("transitivity of the different") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});
  auto H = Subspace::span(2, 2, {{0, 1}});
  auto chk = transitivity_check(t, H);
  CHECK(chk.lhs == 10);
  CHECK(chk.rhs == 10);

  auto full = transitivity_check(t, Subspace::full(2, 2));
  CHECK(full.lhs == full.rhs);
  auto none = transitivity_check(t, Subspace(2, 2));
  CHECK(none.lhs == none.rhs);
  CHECK(none.rhs == 10);
}

TEST_CASE("transitivity holds for every subgroup of grid towers") {
  const auto& F2 = FqCtx::get(2, 1);
  auto t1 = make_tower(F2, {"x^-1", "x^-5"});
  for (const auto& H : all_subspaces(2, 2)) {
    auto chk = transitivity_check(t1, H);
    CHECK(chk.lhs == chk.rhs);
  }
  const auto& F3 = FqCtx::get(3, 1);
  auto t2 = make_tower(F3, {"x^-1", "x^-2"});
  for (const auto& H : all_subspaces(3, 2)) {
    auto chk = transitivity_check(t2, H);
    CHECK(chk.lhs == chk.rhs);
  }
}

TEST_CASE("compositum of disjoint covers") {
  const auto& F = FqCtx::get(2, 1);
  auto a = make_tower(F, {"x^-1"});
  auto b = make_tower(F, {"x^-3"});
  auto c = compositum(a, b);
  CHECK_FALSE(c.span_collapse);
  CHECK(c.tower.ell() == 2);
  CHECK(c.tower.gen_breaks() == std::vector<long>{1, 3});
}

TEST_CASE("compositum with span inclusion collapses onto the big cover") {
  const auto& F = FqCtx::get(2, 1);
  auto x = make_tower(F, {"x^-1", "x^-3"});
  auto z = make_tower(F, {"x^-1"});
  auto c = compositum(x, z);
  CHECK(c.span_collapse);
  CHECK(c.tower.ell() == 2);
  CHECK(c.tower.rhs() == x.rhs());

  // equivalent rhs modulo P(K) also collapse
  auto z2 = make_tower(F, {"x^-1 + x"});
  auto c2 = compositum(z, z2);
  CHECK(c2.span_collapse);
  CHECK(c2.tower.ell() == 1);
}

TEST_CASE("identical towers collapse") {
  const auto& F = FqCtx::get(3, 1);
  auto a = make_tower(F, {"x^-1"});
  auto b = make_tower(F, {"x^-1"});
  auto c = compositum(a, b);
  CHECK(c.span_collapse);
  CHECK(c.tower.ell() == 1);
}

TEST_CASE("compositum refuses to leave the totally ramified model") {
  const auto& F = FqCtx::get(2, 1);
  auto a = make_tower(F, {"x^-1"});
  auto b = make_tower(F, {"x^-1 + 1"});
  CHECK_THROWS_AS(compositum(a, b), DomainError);
  const auto& F3 = FqCtx::get(3, 1);
  auto c = make_tower(F3, {"x^-1"});
  CHECK_THROWS_AS(compositum(a, c), DomainError);
}

TEST_CASE("killing the wild part") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});

  auto none = kill_wild(t, Subspace(2, 2));
  CHECK(none.tower_z.rhs() == t.rhs());
  CHECK(none.relative_inertia.dim() == 0);

  auto all = kill_wild(t, Subspace::full(2, 2));
  CHECK(all.tower_z.ell() == 0);
  CHECK(all.relative_inertia.dim() == 2);

  auto N = Subspace::span(2, 2, {{0, 1}});
  auto kw = kill_wild(t, N);
  CHECK(kw.tower_z.gen_breaks() == std::vector<long>{1});
  CHECK(kw.relative_inertia == N);
  // the surviving inertia is N with the restricted chain
  auto rel = relative_tower(t, N);
  CHECK(different_hilbert(ramification_filtration(rel)) ==
        different_hilbert(restrict_filtration(t, N)));
}

TEST_CASE("tame pullback scales breaks and clears the tame index") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1"}, 3);
  auto id = tame_pullback(t, 1);
  CHECK(id.rhs() == t.rhs());
  CHECK(id.tame_index() == 1);

  auto p3 = tame_pullback(t, 3);
  CHECK(p3.gen_breaks() == std::vector<long>{3});
  CHECK(p3.rhs()[0] == parse_series(F, "x^-3"));

  auto tm = make_tower(F, {"x^-1 + x^-3", "x^-5"});
  for (long n : {3L, 5L}) {
    auto pb = tame_pullback(tm, n);
    std::map<Vec, long> before, after;
    for (const auto& ln : tm.lines()) before[ln.coeffs] = ln.break_m;
    for (const auto& ln : pb.lines()) after[ln.coeffs] = ln.break_m;
    REQUIRE(before.size() == after.size());
    for (const auto& [coeffs, m] : before) CHECK(after.at(coeffs) == n * m);
  }
  CHECK_THROWS_AS(tame_pullback(t, 2), PreconditionFailed);
  CHECK_THROWS_AS(tame_pullback(t, 0), PreconditionFailed);
}

TEST_CASE("genus bookkeeping") {
  CHECK(rh_genus(4, {6}) == 0);
  CHECK(rh_genus(2, {4}) == 1);
  CHECK(rh_genus(1, {}) == 0);
  CHECK(rh_genus(3, {6}) == 1);
  CHECK(rh_genus(2, {4, 2}) == 2);
  CHECK_THROWS_AS(rh_genus(2, {3}), NonIntegralGenus);
  CHECK_THROWS_AS(rh_genus(2, {0}), NegativeGenus);
  CHECK_THROWS_AS(rh_genus(0, {}), PreconditionFailed);
  CHECK_THROWS_AS(rh_genus(2, {-2}), PreconditionFailed);
}

TEST_CASE("genus from computed differents on one-step covers") {
  struct Case {
    int p;
    const char* rhs;
    long g;
  };
  // g = (m-1)(p-1)/2 for a single break-m cover of the line
  for (const Case& c : {Case{2, "x^-3", 1}, Case{2, "x^-5", 2},
                        Case{3, "x^-2", 1}, Case{3, "x^-4", 3}}) {
    const auto& F = FqCtx::get(c.p, 1);
    auto t = make_tower(F, {c.rhs});
    long d = different_hilbert(ramification_filtration(t));
    CHECK(rh_genus(t.degree(), {d}) == c.g);
  }
}

TEST_CASE("chart images") {
  auto s = Subspace::span(2, 2, {{1, 1}});
  CHECK(chart_image(s, {Vec{0, 1}}) == Subspace::full(2, 1));
  CHECK(chart_image(Subspace(2, 2), {Vec{0, 1}}).dim() == 0);
  CHECK(chart_image(s, {Vec{1, 1}}).dim() == 0);
}

TEST_CASE("relative generators complete the fixed span") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});
  auto H = Subspace::span(2, 2, {{0, 1}});
  auto gens = relative_generators(t, H);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0] == Vec{0, 1});
  CHECK(relative_generators(t, Subspace(2, 2)).empty());
  CHECK(relative_generators(t, Subspace::full(2, 2)).size() == 2);
}
