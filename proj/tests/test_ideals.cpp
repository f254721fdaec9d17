#include <algorithm>

#include "doctest.h"
#include "takiff/errors.hpp"
#include "takiff/ideals.hpp"

using namespace takiff;

namespace {
const RootDatum& rd(Series s, int r) { return cached_root_datum(s, r); }
std::vector<mpq_class> q(std::initializer_list<mpq_class> v) { return v; }
}  // namespace

TEST_CASE("small ideal lists") {
  auto a1 = enumerate_ideals(rd(Series::A, 1));
  REQUIRE(a1.size() == 2);
  CHECK(a1[0].bits == 0);
  CHECK(a1[1].bits == 1);
  CHECK(enumerate_ideals(rd(Series::A, 2)).size() == 5);
  CHECK(enumerate_ideals(rd(Series::B, 2)).size() == 6);
  CHECK(enumerate_ideals(rd(Series::G, 2)).size() == 8);
}

TEST_CASE("enumeration agrees with the product formula") {
  struct T {
    Series s;
    int r;
    long classes;
  };
  // 2/(n+1) C(2n,n), 2 C(2n,n), 2 (C(2n,n) - C(2n-2,n-1)); exceptional values are
  // twice the Catalan numbers 833, 4160, 25080, 105, 8
  std::vector<T> ts = {{Series::A, 1, 4},   {Series::A, 2, 10},  {Series::A, 3, 28},   {Series::A, 4, 84},
                       {Series::B, 2, 12},  {Series::B, 3, 40},  {Series::C, 2, 12},   {Series::C, 3, 40},
                       {Series::D, 4, 100}, {Series::G, 2, 16},  {Series::F, 4, 210},  {Series::E, 6, 1666},
                       {Series::E, 7, 8320}};
  for (const auto& t : ts) {
    INFO(rd(t.s, t.r).name());
    const auto c = count_borel_classes(rd(t.s, t.r));
    CHECK(c.closed == t.classes);
    REQUIRE(c.enumerated.has_value());
    CHECK(*c.enumerated == t.classes);
  }
  const auto e8 = count_borel_classes(rd(Series::E, 8));
  CHECK(e8.closed == 50160);
  CHECK_FALSE(e8.enumerated.has_value());
  CHECK_THROWS_AS(enumerate_ideals(rd(Series::E, 8)), InvalidArgument);
}

TEST_CASE("enumerated sets are up-closed and distinct") {
  for (auto [s, r] : {std::pair{Series::A, 3}, {Series::B, 3}, {Series::G, 2}, {Series::D, 4}}) {
    const auto ideals = enumerate_ideals(rd(s, r));
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      CHECK(is_upper_closed(rd(s, r), ideals[k]));
      if (k) CHECK(ideals[k - 1] < ideals[k]);
    }
  }
}

TEST_CASE("ideal construction") {
  const auto& a2 = rd(Series::A, 2);
  CHECK(make_ideal(a2, {2}).bits == 4);
  CHECK_THROWS_AS(make_ideal(a2, {0}), InvalidArgument);
  CHECK(ideal_generated_by(a2, {0}).members() == std::vector<int>{0, 2});
  CHECK(full_ideal(a2).size() == 3);
}

TEST_CASE("complement bijection") {
  const auto& a2 = rd(Series::A, 2);
  CHECK(complement_ideal(a2, {}) == std::vector<int>{0, 1, 2});
  CHECK(complement_ideal(a2, full_ideal(a2)).empty());
  CHECK(complement_ideal(a2, make_ideal(a2, {2})) == std::vector<int>{0, 1});
  for (auto [s, r] : {std::pair{Series::A, 3}, {Series::C, 3}, {Series::F, 4}})
    for (const auto& i : enumerate_ideals(rd(s, r)))
      CHECK(ideal_from_complement(rd(s, r), complement_ideal(rd(s, r), i)) == i);
  CHECK_THROWS_AS(ideal_from_complement(a2, {2}), InvalidArgument);
}

TEST_CASE("witness elements") {
  const auto& a1 = rd(Series::A, 1);
  const auto& a2 = rd(Series::A, 2);
  CHECK(shi_witness(a1, full_ideal(a1)) == q({mpq_class(3, 2)}));
  CHECK(check_shi_witness(a2, {}, q({mpq_class(1, 3), mpq_class(1, 3)})));
  CHECK(check_shi_witness(a2, make_ideal(a2, {2}), q({mpq_class(2, 3), mpq_class(2, 3)})));
  CHECK_FALSE(check_shi_witness(a2, make_ideal(a2, {2}), q({mpq_class(1, 3), mpq_class(1, 3)})));
  for (auto [s, r] : {std::pair{Series::A, 4}, {Series::B, 3}, {Series::G, 2}, {Series::F, 4}, {Series::D, 4}})
    for (const auto& i : enumerate_ideals(rd(s, r))) CHECK(check_shi_witness(rd(s, r), i, shi_witness(rd(s, r), i)));
}

TEST_CASE("witness elements for E6 and E7") {
  const auto& e6 = rd(Series::E, 6);
  for (const auto& i : enumerate_ideals(e6)) CHECK(check_shi_witness(e6, i, shi_witness(e6, i)));
  const auto& e7 = rd(Series::E, 7);
  const auto ideals = enumerate_ideals(e7);
  for (std::size_t k = 0; k < ideals.size(); k += 41) CHECK(check_shi_witness(e7, ideals[k], shi_witness(e7, ideals[k])));
}

TEST_CASE("strict systems") {
  // x > 1, x < 1 has no solution
  std::vector<StrictInequality> bad = {{q({1}), 1}, {q({-1}), -1}};
  CHECK_FALSE(strict_feasible_point(bad, 1).has_value());
  std::vector<StrictInequality> ok = {{q({1, 1}), 0}, {q({-1, 0}), -1}, {q({0, -1}), -1}};
  auto x = strict_feasible_point(ok, 2);
  REQUIRE(x);
  CHECK((*x)[0] + (*x)[1] > 0);
  CHECK((*x)[0] < 1);
  CHECK((*x)[1] < 1);
}

TEST_CASE("Borel descriptions") {
  const auto& a1 = rd(Series::A, 1);
  const auto bs = classify_borels(a1);
  CHECK(bs.size() == 4);
  long lo = 1 << 30, hi = 0;
  for (const auto& b : classify_borels(rd(Series::B, 2))) {
    lo = std::min(lo, b.dim);
    hi = std::max(hi, b.dim);
    CHECK(b.includes_del_xi == (b.kind == BorelKind::B));
    CHECK(b.xi_coeff == (b.kind == BorelKind::A ? 1 : -1));
  }
  // B2: even part has dim 7; maximal adds all of s, minimal adds only d_xi
  CHECK(hi == 7 + 10);
  CHECK(lo == 7 + 1);
  for (const auto& b : bs) {
    if (b.kind == BorelKind::A && b.nprime.bits == 0) CHECK(b.negatives.size() == 1);
    if (b.kind == BorelKind::B && b.nprime.bits == 0) CHECK(b.dim == 2 + 1 + 1);
  }
  CHECK(classify_borels(rd(Series::G, 2)).size() == 16);
}
