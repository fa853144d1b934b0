#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "wildram/config.hpp"
#include "wildram/errors.hpp"
#include "wildram/uniformizer.hpp"

using namespace wildram;

namespace {

Tower make_tower(const FqCtx& F, std::initializer_list<const char*> rhs) {
  std::vector<LaurentSeries> v;
  for (const char* s : rhs) v.push_back(parse_series(F, s));
  return Tower(F, std::move(v));
}

void check_certified(const Tower& t, const Uniformizer& u) {
  CHECK(t.norm_valuation(u.pi) == 1);
}

// x_expansion evaluated back at pi must reproduce x on the known window.
void check_expansion_identity(const Tower& t, const TowerElem& pi) {
  auto X = x_expansion(t, pi);
  CHECK(X.valuation() == t.degree());
  auto back = eval_series(X, pi);
  auto x = TowerElem::from_base(t, LaurentSeries::x(t.field()));
  // the dropped tail of X sits at pi-adic order X.prec() and above, so the
  // difference must be at least that deep
  auto diff = back - x;
  if (!diff.known_zero()) {
    CHECK(t.norm_valuation(diff) >= X.prec());
  }
}

}  // namespace

TEST_CASE("height zero: x itself") {
  const auto& F = FqCtx::get(2, 1);
  Tower t(F, {});
  auto u = uniformizer(t);
  CHECK(u.method == "base");
  check_certified(t, u);
  CHECK(u.pi == TowerElem::from_base(t, LaurentSeries::x(F)));
}

TEST_CASE("height one, break one: inverse of the generator") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1"});
  auto u = uniformizer(t);
  CHECK(u.method == "height-one");
  check_certified(t, u);
  CHECK(u.pi == TowerElem::generator(t, 0).inverse());
}

TEST_CASE("expansion of x for the standard break-one covers") {
  const auto& F2 = FqCtx::get(2, 1);
  auto t2 = make_tower(F2, {"x^-1"});
  auto u2 = uniformizer(t2);
  auto X2 = x_expansion(t2, u2.pi);
  // x = y^2 + y^3 + y^4 + ... with every coefficient 1
  CHECK(X2.valuation() == 2);
  for (long k = 2; k < 20; ++k) CHECK(X2.at(k) == 1);
  CHECK_FALSE(X2.exact());
  CHECK(X2.prec() == 2 + default_window());

  const auto& F3 = FqCtx::get(3, 1);
  auto t3 = make_tower(F3, {"x^-1"});
  auto u3 = uniformizer(t3);
  auto X3 = x_expansion(t3, u3.pi);
  // x = y^3 + y^5 + y^7 + ... (odd exponents only past the lead)
  CHECK(X3.valuation() == 3);
  for (long k = 3; k < 20; ++k) CHECK(X3.at(k) == ((k % 2 == 1) ? 1 : 0));
}

TEST_CASE("height one, break three over F_2") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-3"});
  auto u = uniformizer(t);
  check_certified(t, u);
  // pinned exponents: a = -1, b = -1, so pi = T^-1 x^-1
  auto direct = TowerElem::generator(t, 0).inverse() *
                TowerElem::from_base(t, parse_series(F, "x^-1"));
  CHECK(u.pi == direct);
  check_expansion_identity(t, u.pi);
}

TEST_CASE("height one with an unreduced rhs shifts the generator first") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-2"});
  CHECK(t.gen_breaks() == std::vector<long>{1});
  auto u = uniformizer(t);
  check_certified(t, u);
  auto Tp = TowerElem::generator(t, 0) -
            TowerElem::from_base(t, parse_series(F, "x^-1"));
  CHECK(u.pi == Tp.inverse());
}

TEST_CASE("height one over F_3 with break two uses a squared generator") {
  const auto& F = FqCtx::get(3, 1);
  auto t = make_tower(F, {"x^-2"});
  auto u = uniformizer(t);
  check_certified(t, u);
  // m = 2, p = 3: a = -2, b = -1
  auto direct = TowerElem::generator(t, 0).pow_int(-2) *
                TowerElem::from_base(t, parse_series(F, "x^-1"));
  CHECK(u.pi == direct);
  check_expansion_identity(t, u.pi);
}

TEST_CASE("claim_step eliminates against the pivot") {
  const auto& F = FqCtx::get(2, 2);
  fq_t g = F.from_coeffs({0, 1});
  std::vector<fq_t> c{1, g};
  std::vector<fq_t> d{0, 0};
  auto a = claim_step(F, c, d, 1);
  REQUIRE(a.size() == 1);
  // sqrt(g) = g+1 in F_4, and the new leading constant is a - a^2 = 1
  CHECK(a[0] == F.add(g, 1));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == 1);
  CHECK(d[0] == 0);
}

TEST_CASE("claim_step aborts when the multiplier is rational") {
  const auto& F = FqCtx::get(2, 2);
  std::vector<fq_t> c{1, 1};
  std::vector<fq_t> d{0, 0};
  try {
    claim_step(F, c, d, 3);
    FAIL("expected ResidueSplit");
  } catch (const ResidueSplit& e) {
    CHECK(e.level == 3);
    CHECK(e.generator == 4);
    CHECK(e.constant == "1");
  }
}

TEST_CASE("break-one tower over F_4 goes through the chain") {
  const auto& F = FqCtx::get(2, 2);
  auto t = make_tower(F, {"x^-1", "g*x^-1"});
  auto u = uniformizer(t);
  CHECK(u.method == "break-one-chain");
  check_certified(t, u);
  // fully wild degree-4 cover with both breaks one: every sigma moves pi at
  // level exactly 2
  for (Vec sigma : {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}}) {
    auto moved = u.pi.galois(sigma) - u.pi;
    CHECK(t.norm_valuation(moved) == 2);
  }
}

TEST_CASE("chain and level routes certify the same tower") {
  const auto& F = FqCtx::get(2, 2);
  auto t = make_tower(F, {"x^-1", "g*x^-1"});
  auto uc = claim_chain_uniformizer(t);
  auto ul = level_iterated_uniformizer(t);
  check_certified(t, uc);
  check_certified(t, ul);
  for (Vec sigma : {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}}) {
    long jc = t.norm_valuation(uc.pi.galois(sigma) - uc.pi);
    long jl = t.norm_valuation(ul.pi.galois(sigma) - ul.pi);
    CHECK(jc == jl);
  }
}

TEST_CASE("chain route refuses mixed breaks") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});
  CHECK_THROWS_AS(claim_chain_uniformizer(t), PreconditionFailed);
}

TEST_CASE("mixed-break tower at height two") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});
  auto u = uniformizer(t);
  CHECK(u.method == "level-iterated");
  check_certified(t, u);
  check_expansion_identity(t, u.pi);
}

TEST_CASE("mixed-break tower at height two over F_3") {
  const auto& F = FqCtx::get(3, 1);
  auto t = make_tower(F, {"x^-1", "x^-2"});
  auto u = uniformizer(t);
  check_certified(t, u);
  check_expansion_identity(t, u.pi);
}

TEST_CASE("height three over F_2 with spread breaks") {
  WindowGuard guard(32);
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3", "x^-5"});
  auto u = uniformizer(t);
  CHECK(u.method == "level-iterated");
  check_certified(t, u);
}

TEST_CASE("break-one chain at height three over F_8") {
  const auto& F = FqCtx::get(2, 3);
  auto t = make_tower(F, {"x^-1", "g*x^-1", "g^2*x^-1"});
  auto u = uniformizer(t);
  CHECK(u.method == "break-one-chain");
  check_certified(t, u);
}

TEST_CASE("expansion handles elements of negative valuation") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-3"});
  auto u = uniformizer(t);
  auto T = TowerElem::generator(t, 0);
  auto Z = expand_in_uniformizer(t, u.pi, T);
  CHECK(Z.valuation() == -3);
  auto back = eval_series(Z, u.pi);
  auto diff = back - T;
  if (!diff.known_zero())
    CHECK(t.norm_valuation(diff) >= Z.prec());
}

TEST_CASE("expansion of zero is exact zero") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1"});
  auto u = uniformizer(t);
  auto Z = expand_in_uniformizer(t, u.pi, TowerElem(t));
  CHECK(Z.is_zero());
}

TEST_CASE("eval_series matches direct arithmetic") {
  const auto& F = FqCtx::get(3, 1);
  auto t = make_tower(F, {"x^-1"});
  auto T = TowerElem::generator(t, 0);
  auto s = parse_series(F, "2*x^-2 + 1 + x^3");
  auto direct = T.pow_int(-2).scaled(2) + TowerElem::one(t) + T.pow_int(3);
  CHECK(eval_series(s, T) == direct);
}
