#include "doctest.h"
#include "takiff/errors.hpp"
#include "takiff/rootsys.hpp"

using namespace takiff;

namespace {
struct TypeCase {
  Series s;
  int r;
  int npos;
  int h;
  std::vector<int> exps;
  int det;
};
}  // namespace

TEST_CASE("classical data for every supported type") {
  const std::vector<TypeCase> cases = {
      {Series::A, 1, 1, 2, {1}, 2},          {Series::A, 2, 3, 3, {1, 2}, 3},
      {Series::A, 4, 10, 5, {1, 2, 3, 4}, 5}, {Series::B, 2, 4, 4, {1, 3}, 2},
      {Series::B, 3, 9, 6, {1, 3, 5}, 2},    {Series::C, 3, 9, 6, {1, 3, 5}, 2},
      {Series::D, 4, 12, 6, {1, 3, 3, 5}, 4}, {Series::D, 5, 20, 8, {1, 3, 4, 5, 7}, 4},
      {Series::E, 6, 36, 12, {1, 4, 5, 7, 8, 11}, 3},
      {Series::E, 7, 63, 18, {1, 5, 7, 9, 11, 13, 17}, 2},
      {Series::E, 8, 120, 30, {1, 7, 11, 13, 17, 19, 23, 29}, 1},
      {Series::F, 4, 24, 12, {1, 5, 7, 11}, 1},  {Series::G, 2, 6, 6, {1, 5}, 1},
  };
  for (const auto& c : cases) {
    CAPTURE(series_letter(c.s));
    CAPTURE(c.r);
    auto rd = build_root_datum(c.s, c.r);
    CHECK(rd.num_positive_roots() == c.npos);
    CHECK(rd.coxeter_number() == c.h);
    CHECK(rd.exponents() == c.exps);
    CHECK(cartan_determinant(rd) == c.det);
    CHECK(minuscule_weights(rd).size() == static_cast<std::size_t>(c.det));
    // height of theta is h-1
    const auto th = rd.scaled_simple_coords(rd.highest_root());
    long long ht = 0;
    for (auto v : th) ht += v;
    CHECK(ht == static_cast<long long>(c.h - 1) * rd.det());
  }
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(build_root_datum(Series::B, 1), InvalidArgument);
  CHECK_THROWS_AS(build_root_datum(Series::D, 3), InvalidArgument);
  CHECK_THROWS_AS(build_root_datum(Series::E, 5), InvalidArgument);
  CHECK_THROWS_AS(build_root_datum(Series::G, 3), InvalidArgument);
  CHECK_THROWS_AS(build_root_datum(Series::A, 0), InvalidArgument);
}

TEST_CASE("Weyl group orders") {
  CHECK(build_root_datum(Series::A, 3).weyl_group_order() == 24);
  CHECK(build_root_datum(Series::G, 2).weyl_group_order() == 12);
  CHECK(build_root_datum(Series::F, 4).weyl_group_order() == 1152);
  CHECK(build_root_datum(Series::E, 8).weyl_group_order() == 696729600);
}

TEST_CASE("minuscule weights") {
  auto a2 = build_root_datum(Series::A, 2);
  CHECK(minuscule_weights(a2) == std::vector<Weight>{Weight{0, 0}, Weight{0, 1}, Weight{1, 0}});
  auto c3 = build_root_datum(Series::C, 3);
  CHECK(minuscule_weights(c3) == std::vector<Weight>{Weight{0, 0, 0}, Weight{1, 0, 0}});
  auto b3 = build_root_datum(Series::B, 3);
  CHECK(minuscule_weights(b3) == std::vector<Weight>{Weight{0, 0, 0}, Weight{0, 0, 1}});
  auto e8 = build_root_datum(Series::E, 8);
  CHECK(minuscule_weights(e8).size() == 1);
  // every weight of a minuscule module lies in one orbit: orbit size = Weyl dimension
  for (auto t : {std::pair{Series::D, 4}, {Series::E, 6}, {Series::E, 7}, {Series::A, 4}}) {
    auto rd = build_root_datum(t.first, t.second);
    for (const auto& nu : minuscule_weights(rd))
      CHECK(mpz_class(weyl_orbit(rd, nu).size()) == weyl_dimension(rd, nu));
  }
}

TEST_CASE("Weyl group actions") {
  auto a2 = build_root_datum(Series::A, 2);
  CHECK(longest_element_negate(a2, Weight{1, 0}) == Weight{0, 1});
  CHECK(in_root_lattice(a2, a2.highest_root()));
  CHECK_FALSE(in_root_lattice(a2, Weight{1, 0}));
  auto a1 = build_root_datum(Series::A, 1);
  CHECK_FALSE(dominant(a1, Weight{-2}));
  auto r = to_dominant(a1, Weight{-2});
  CHECK(r.weight == Weight{2});
  CHECK(r.sign == -1);
  CHECK(to_dominant(a1, Weight{-1}).sign == -1);
  CHECK(to_dominant(a1, Weight{-1}).weight == Weight{1});
  auto g2 = build_root_datum(Series::G, 2);
  auto orbit = weyl_orbit(g2, Weight{1, 1});
  CHECK(orbit.size() == 12);
  for (const auto& w : orbit) CHECK(to_dominant(g2, w).weight == Weight{1, 1});
  // -w0 is the identity outside A, D_odd, E6
  auto b3 = build_root_datum(Series::B, 3);
  CHECK(longest_element_negate(b3, Weight{0, 0, 1}) == Weight{0, 0, 1});
  auto e6 = build_root_datum(Series::E, 6);
  CHECK(longest_element_negate(e6, e6.fundamental_weight(0)) == e6.fundamental_weight(5));
}

TEST_CASE("Weyl dimension formula") {
  auto a2 = build_root_datum(Series::A, 2);
  CHECK(weyl_dimension(a2, 2 * a2.rho()) == 27);
  CHECK(weyl_dimension(a2, a2.highest_root()) == 8);
  auto g2 = build_root_datum(Series::G, 2);
  CHECK(weyl_dimension(g2, g2.fundamental_weight(0)) == 7);
  CHECK(weyl_dimension(g2, g2.highest_root()) == 14);
  auto e8 = build_root_datum(Series::E, 8);
  CHECK(weyl_dimension(e8, e8.highest_root()) == 248);
}

TEST_CASE("dominant weights below") {
  auto a2 = build_root_datum(Series::A, 2);
  auto v = dominant_weights_below(a2, a2.highest_root());
  CHECK(v.size() == 2);
  CHECK(v.front() == a2.highest_root());
  CHECK(v.back() == Weight{0, 0});
}
