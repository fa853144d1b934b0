#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "wildram/config.hpp"
#include "wildram/errors.hpp"
#include "wildram/tower.hpp"

using namespace wildram;

namespace {

Tower make_tower(const FqCtx& F, std::initializer_list<const char*> rhs,
                 long tame = 1) {
  std::vector<LaurentSeries> v;
  for (const char* s : rhs) v.push_back(parse_series(F, s));
  return Tower(F, std::move(v), tame);
}

// Random base coefficients attached to each basis monomial.
TowerElem random_elem(const Tower& t, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(0, t.field().q() - 1);
  std::uniform_int_distribution<long> expo(-3, 3);
  std::uniform_int_distribution<int> nterms(0, 2);
  TowerElem out(t);
  for (size_t idx = 0; idx < out.dim(); ++idx) {
    std::map<long, fq_t> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
      terms[expo(rng)] = static_cast<fq_t>(coeff(rng));
    auto e = t.exps_of(idx);
    TowerElem mono = TowerElem::one(t);
    for (int i = 0; i < t.ell(); ++i)
      for (int k = 0; k < e[static_cast<size_t>(i)]; ++k)
        mono = mono * TowerElem::generator(t, i);
    out = out + mono.scaled_series(LaurentSeries(t.field(), terms));
  }
  return out;
}

// Determinant of a matrix of exact series by cofactor expansion; small n only.
LaurentSeries det(const std::vector<std::vector<LaurentSeries>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  const FqCtx& F = m[0][0].field();
  LaurentSeries acc = LaurentSeries::zero(F);
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<LaurentSeries>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<LaurentSeries> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    LaurentSeries term = m[0][j] * det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

TEST_CASE("basis indexing round-trips, big-endian in the first generator") {
  const auto& F = FqCtx::get(3, 1);
  auto t = make_tower(F, {"x^-1", "x^-2"});
  CHECK(t.degree() == 9);
  CHECK(t.index_of({0, 0}) == 0);
  CHECK(t.index_of({0, 1}) == 1);
  CHECK(t.index_of({1, 0}) == 3);
  CHECK(t.index_of({2, 2}) == 8);
  for (size_t idx = 0; idx < 9; ++idx)
    CHECK(t.index_of(t.exps_of(idx)) == idx);
  CHECK_THROWS_AS(t.index_of({3, 0}), DomainError);
  CHECK_THROWS_AS(t.index_of({0}), DomainError);
}

TEST_CASE("construction validates the tower and the tame index") {
  const auto& F2 = FqCtx::get(2, 1);
  CHECK_THROWS_AS(make_tower(F2, {"x^-1", "x^-1 + x"}), DomainError);
  CHECK_THROWS_AS(make_tower(F2, {"x^-1", "x^-1 + 1"}), DomainError);
  CHECK_THROWS_AS(make_tower(F2, {"x^-1"}, 2), DomainError);
  CHECK_THROWS_AS(make_tower(F2, {"x^-1"}, 0), DomainError);
  CHECK_NOTHROW(make_tower(F2, {"x^-1"}, 3));
  CHECK_THROWS_AS(
      make_tower(F2, {"x^-1", "x^-3", "x^-5", "x^-7", "x^-9"}),
      DomainError);  // degree 32 is past the supported envelope
  auto t = make_tower(F2, {"x^-1", "x^-3"});
  CHECK(t.gen_breaks() == std::vector<long>{1, 3});
  CHECK(t.lines().size() == 3);
  CHECK_FALSE(t.all_breaks_one());
  CHECK(make_tower(F2, {"x^-1"}).all_breaks_one());
  // height zero: base field itself
  Tower base(F2, {});
  CHECK(base.degree() == 1);
  CHECK(base.ell() == 0);
}

TEST_CASE("defining relation T^p = T + f") {
  const auto& F2 = FqCtx::get(2, 1);
  auto t2 = make_tower(F2, {"x^-1"});
  auto T = TowerElem::generator(t2, 0);
  auto f = TowerElem::from_base(t2, parse_series(F2, "x^-1"));
  CHECK(T * T == T + f);

  const auto& F3 = FqCtx::get(3, 1);
  auto t3 = make_tower(F3, {"x^-1"});
  auto U = TowerElem::generator(t3, 0);
  auto g = TowerElem::from_base(t3, parse_series(F3, "x^-1"));
  CHECK(U * U * U == U + g);
}

TEST_CASE("squaring a shifted generator in characteristic 2") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1"});
  auto T = TowerElem::generator(t, 0);
  auto one = TowerElem::one(t);
  auto lhs = (T + one) * (T + one);
  auto rhs = T + TowerElem::from_base(t, parse_series(F, "x^-1 + 1"));
  CHECK(lhs == rhs);
}

TEST_CASE("galois action shifts generators and fixes the base") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});
  auto T1 = TowerElem::generator(t, 0);
  auto T2 = TowerElem::generator(t, 1);
  auto one = TowerElem::one(t);
  auto x = TowerElem::from_base(t, LaurentSeries::x(F));

  CHECK(T1.galois({1, 0}) == T1 + one);
  CHECK(T1.galois({0, 1}) == T1);
  CHECK(T2.galois({0, 1}) == T2 + one);
  CHECK(x.galois({1, 1}) == x);

  auto z = T1 * T2 + x;
  CHECK(z.galois({0, 0}) == z);
  // sigma is a ring homomorphism
  auto w = T2 * T2 + T1;
  Vec s{1, 1};
  CHECK((z * w).galois(s) == z.galois(s) * w.galois(s));
  CHECK((z + w).galois(s) == z.galois(s) + w.galois(s));
  // composing equals adding group vectors
  CHECK(z.galois({1, 0}).galois({0, 1}) == z.galois({1, 1}));
}

TEST_CASE("galois expansion handles exponents above one") {
  const auto& F = FqCtx::get(3, 1);
  auto t = make_tower(F, {"x^-1"});
  auto T = TowerElem::generator(t, 0);
  auto sq = T * T;
  // (T+1)^2 = T^2 + 2T + 1
  auto by_action = sq.galois({1});
  auto expected = sq + T.scaled(2) + TowerElem::one(t);
  CHECK(by_action == expected);
  // the relation is respected: sigma(T)^3 - sigma(T) = f
  auto sT = T.galois({2});
  auto f = TowerElem::from_base(t, parse_series(F, "x^-1"));
  CHECK(sT * sT * sT - sT == f);
}

TEST_CASE("norm anchors at height one") {
  const auto& F2 = FqCtx::get(2, 1);
  auto t = make_tower(F2, {"x^-1"});
  auto x = TowerElem::from_base(t, LaurentSeries::x(F2));
  auto T = TowerElem::generator(t, 0);
  CHECK(t.norm_to_base(x) == parse_series(F2, "x^2"));
  CHECK(t.norm_valuation(x) == 2);
  CHECK(t.norm_to_base(T) == parse_series(F2, "x^-1"));
  CHECK(t.norm_valuation(T) == -1);
  CHECK(t.norm_valuation(TowerElem::one(t)) == 0);

  auto t3 = make_tower(F2, {"x^-3"});
  CHECK(t3.norm_valuation(TowerElem::generator(t3, 0)) == -3);

  const auto& F3 = FqCtx::get(3, 1);
  auto u = make_tower(F3, {"x^-1"});
  CHECK(u.norm_valuation(TowerElem::from_base(u, LaurentSeries::x(F3))) == 3);
  CHECK(u.norm_valuation(TowerElem::generator(u, 0)) == -1);
  auto u2 = make_tower(F3, {"x^-2"});
  CHECK(u2.norm_valuation(TowerElem::generator(u2, 0)) == -2);
}

TEST_CASE("norm anchors at height two") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});
  auto x = TowerElem::from_base(t, LaurentSeries::x(F));
  CHECK(t.norm_valuation(x) == 4);
  CHECK(t.norm_valuation(TowerElem::generator(t, 0)) == -2);
  CHECK(t.norm_valuation(TowerElem::generator(t, 1)) == -6);

  const auto& F3 = FqCtx::get(3, 1);
  auto u = make_tower(F3, {"x^-1", "x^-2"});
  CHECK(u.norm_valuation(TowerElem::from_base(u, LaurentSeries::x(F3))) == 9);
  CHECK(u.norm_valuation(TowerElem::generator(u, 0)) == -3);
  CHECK(u.norm_valuation(TowerElem::generator(u, 1)) == -6);
}

TEST_CASE("norm matches the multiplication-matrix determinant") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});
  auto T1 = TowerElem::generator(t, 0);
  auto T2 = TowerElem::generator(t, 1);
  auto z = TowerElem::one(t) + T1.scaled_series(LaurentSeries::x(F)) + T2 +
           (T1 * T2).scaled_series(parse_series(F, "x^-1"));

  std::vector<TowerElem> basis{TowerElem::one(t), T2, T1, T1 * T2};
  std::vector<std::vector<LaurentSeries>> m(
      4, std::vector<LaurentSeries>(4, LaurentSeries::zero(F)));
  for (size_t j = 0; j < 4; ++j) {
    auto col = z * basis[j];
    for (size_t i = 0; i < 4; ++i) m[i][j] = col.coord(i);
  }
  CHECK(det(m).agrees_with(t.norm_to_base(z)));
}

TEST_CASE("norm is multiplicative and galois-invariant") {
  std::mt19937 rng(20240818);
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});
  for (int trial = 0; trial < 8; ++trial) {
    auto z = random_elem(t, rng);
    auto w = random_elem(t, rng);
    CHECK(t.norm_to_base(z * w).agrees_with(t.norm_to_base(z) *
                                            t.norm_to_base(w)));
    CHECK(t.norm_to_base(z.galois({1, 0})).agrees_with(t.norm_to_base(z)));
    CHECK(t.norm_to_base(z.galois({1, 1})).agrees_with(t.norm_to_base(z)));
  }
  const auto& F3 = FqCtx::get(3, 1);
  auto u = make_tower(F3, {"x^-1"});
  for (int trial = 0; trial < 8; ++trial) {
    auto z = random_elem(u, rng);
    auto w = random_elem(u, rng);
    CHECK(u.norm_to_base(z * w).agrees_with(u.norm_to_base(z) *
                                            u.norm_to_base(w)));
    CHECK(u.norm_to_base(z.galois({1})).agrees_with(u.norm_to_base(z)));
  }
}

TEST_CASE("norm valuation is additive") {
  std::mt19937 rng(20240819);
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});
  int done = 0;
  while (done < 6) {
    auto z = random_elem(t, rng);
    auto w = random_elem(t, rng);
    if (z.known_zero() || w.known_zero()) continue;
    CHECK(t.norm_valuation(z * w) ==
          t.norm_valuation(z) + t.norm_valuation(w));
    ++done;
  }
}

TEST_CASE("inverse round-trips") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1"});
  auto T = TowerElem::generator(t, 0);
  auto Tinv = T.inverse();
  // 1/T = (T+1) x since T(T+1) = x^-1
  auto expected =
      (T + TowerElem::one(t)).scaled_series(LaurentSeries::x(F));
  CHECK(Tinv == expected);
  CHECK(T * Tinv == TowerElem::one(t));

  std::mt19937 rng(20240820);
  auto t2 = make_tower(F, {"x^-1", "x^-3"});
  int done = 0;
  while (done < 5) {
    auto z = random_elem(t2, rng);
    if (z.known_zero()) continue;
    auto zi = z.inverse();
    CHECK((z * zi).agrees_with(TowerElem::one(t2)));
    ++done;
  }

  const auto& F4 = FqCtx::get(2, 2);
  auto t4 = make_tower(F4, {"x^-1", "g*x^-1"});
  auto z = TowerElem::generator(t4, 0) +
           TowerElem::generator(t4, 1).scaled_series(parse_series(F4, "g*x"));
  CHECK((z * z.inverse()).agrees_with(TowerElem::one(t4)));
}

TEST_CASE("inverse of a truncated base element stays consistent") {
  const auto& F = FqCtx::get(3, 1);
  auto t = make_tower(F, {"x^-1"});
  auto a = parse_series(F, "1 + 2*x + x^3 + O(x^6)");
  auto z = TowerElem::from_base(t, a);
  auto zi = z.inverse();
  CHECK((z * zi).agrees_with(TowerElem::one(t)));
  CHECK_FALSE(zi.coord(0).exact());
}

TEST_CASE("zero and precision guards") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1"});
  TowerElem zero(t);
  CHECK(zero.known_zero());
  CHECK_THROWS_AS(t.norm_valuation(zero), DomainError);
  CHECK_THROWS_AS(zero.inverse(), DivisionByZero);
  auto foggy = TowerElem::from_base(t, parse_series(F, "O(x^2)"));
  CHECK(foggy.window_all_empty());
  CHECK_FALSE(foggy.known_zero());
  CHECK_THROWS_AS(t.norm_valuation(foggy), PrecisionExhausted);
  CHECK_THROWS_AS(foggy.inverse(), PrecisionExhausted);
}

TEST_CASE("in_base detects base-field elements") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1"});
  auto x = TowerElem::from_base(t, LaurentSeries::x(F));
  LaurentSeries out = LaurentSeries::zero(F);
  CHECK(x.in_base(&out));
  CHECK(out == LaurentSeries::x(F));
  CHECK_FALSE(TowerElem::generator(t, 0).in_base());
  // T + T is zero in characteristic 2, hence a base element
  auto T = TowerElem::generator(t, 0);
  CHECK((T + T).in_base());
}

TEST_CASE("elements print readably") {
  const auto& F = FqCtx::get(2, 1);
  auto t = make_tower(F, {"x^-1", "x^-3"});
  auto T1 = TowerElem::generator(t, 0);
  auto T2 = TowerElem::generator(t, 1);
  auto z = TowerElem::one(t) + (T1 * T2).scaled_series(parse_series(F, "x + x^2"));
  CHECK(z.to_string() == "1 + (x + x^2)*T1*T2");
  CHECK(TowerElem(t).to_string() == "0");
  CHECK(T2.to_string() == "T2");
  auto sq = T1 * T1;  // rewrites to T1 + x^-1
  CHECK(sq.to_string() == "x^-1 + T1");
}

TEST_CASE("mixed-field elements are rejected") {
  const auto& F2 = FqCtx::get(2, 1);
  const auto& F3 = FqCtx::get(3, 1);
  auto t = make_tower(F2, {"x^-1"});
  CHECK_THROWS_AS(TowerElem::from_base(t, LaurentSeries::x(F3)), DomainError);
  auto t2 = make_tower(F2, {"x^-1"});
  auto a = TowerElem::one(t);
  auto b = TowerElem::one(t2);
  CHECK_THROWS_AS(a + b, DomainError);
}
