#include <random>

#include "doctest.h"
#include "takiff/charring.hpp"
#include "takiff/errors.hpp"

using namespace takiff;

namespace {
Weight random_dominant(std::mt19937& gen, int rank, int bound) {
  std::uniform_int_distribution<int> d(0, bound);
  Weight w(rank);
  for (int i = 0; i < rank; ++i) w[i] = d(gen);
  return w;
}
}  // namespace

TEST_CASE("small irreducible characters") {
  const auto& a1 = cached_root_datum(Series::A, 1);
  auto ch = irr_character(a1, Weight{2});
  CHECK(ch.support().size() == 3);
  CHECK(ch.mult(Weight{2}) == 1);
  CHECK(ch.mult(Weight{0}) == 1);
  CHECK(ch.mult(Weight{-2}) == 1);
  const auto& a2 = cached_root_datum(Series::A, 2);
  CHECK(irr_character(a2, a2.highest_root()).mult(Weight{0, 0}) == 2);
  CHECK(irr_character(a2, 2 * a2.rho()).dimension() == 27);
  CHECK_THROWS_AS(irr_character(a1, Weight{-1}), InvalidArgument);
}

TEST_CASE("Freudenthal agrees with the Weyl dimension formula") {
  std::mt19937 gen(12345);
  for (auto [s, r] : {std::pair{Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::B, 2}, {Series::G, 2},
                      {Series::C, 3}}) {
    const auto& rd = cached_root_datum(s, r);
    for (int t = 0; t < 20; ++t) {
      Weight w = random_dominant(gen, r, r >= 3 ? 2 : 4);
      auto ch = irr_character(rd, w);
      CAPTURE(rd.name());
      CAPTURE(w.to_string());
      CHECK(ch.dimension() == weyl_dimension(rd, w));
      CHECK(is_weyl_invariant(ch));
    }
  }
}

TEST_CASE("decomposition") {
  const auto& a2 = cached_root_datum(Series::A, 2);
  auto prod = tensor(irr_character(a2, Weight{1, 0}), irr_character(a2, Weight{0, 1}));
  auto d = decompose(prod);
  CHECK(d == IrrDecomposition{{Weight{0, 0}, 1}, {Weight{1, 1}, 1}});
  CHECK(decompose(irr_character(a2, Weight{2, 1})) == IrrDecomposition{{Weight{2, 1}, 1}});

  // L_lambda (x) s = sum over roots of L_{lambda+beta} plus rank copies of L_lambda
  const Weight lam = 2 * a2.rho();
  auto t = decompose(tensor(irr_character(a2, lam), adjoint_character(a2)));
  IrrDecomposition expect{{lam, 2}};
  for (const auto& b : a2.positive_roots_fw()) {
    expect[lam + b] += 1;
    expect[lam - b] += 1;
  }
  CHECK(t == expect);
  CHECK(tensor_decompose(adjoint_character(a2), lam) == expect);

  FormalCharacter bad = irr_character(a2, Weight{1, 0}) - irr_character(a2, Weight{1, 1});
  CHECK_THROWS_AS(decompose(bad), InvalidArgument);
}

TEST_CASE("compose and decompose are inverse") {
  std::mt19937 gen(7);
  const auto& b2 = cached_root_datum(Series::B, 2);
  for (int t = 0; t < 10; ++t) {
    IrrDecomposition d;
    for (int k = 0; k < 3; ++k) d[random_dominant(gen, 2, 3)] += 1 + k;
    CHECK(decompose(compose(b2, d)) == d);
  }
}

TEST_CASE("tensor is commutative and associative") {
  const auto& a2 = cached_root_datum(Series::A, 2);
  auto x = irr_character(a2, Weight{1, 0});
  auto y = irr_character(a2, Weight{1, 1});
  auto z = irr_character(a2, Weight{0, 2});
  CHECK(tensor(x, y) == tensor(y, x));
  CHECK(tensor(tensor(x, y), z) == tensor(x, tensor(y, z)));
}

TEST_CASE("Brauer-Klimyk agrees with decompose of the product") {
  std::mt19937 gen(99);
  for (auto [s, r] : {std::pair{Series::A, 2}, {Series::B, 2}, {Series::G, 2}}) {
    const auto& rd = cached_root_datum(s, r);
    for (int t = 0; t < 5; ++t) {
      Weight a = random_dominant(gen, r, 2), b = random_dominant(gen, r, 2);
      auto m = irr_character(rd, a);
      CHECK(tensor_decompose(m, b) == decompose(tensor(m, irr_character(rd, b))));
    }
    for (int k = 0; k <= 3; ++k) {
      Weight b = random_dominant(gen, r, 2);
      CHECK(tensor_decompose(wedge_adjoint(rd, k), b) == decompose(tensor(wedge_adjoint(rd, k), irr_character(rd, b))));
    }
  }
}

TEST_CASE("exterior and symmetric powers") {
  const auto& a1 = cached_root_datum(Series::A, 1);
  auto s = adjoint_character(a1);
  CHECK(exterior_power(s, 3) == FormalCharacter::trivial(a1));
  CHECK(exterior_power(s, 4).empty());
  CHECK(decompose(symmetric_power(s, 2)) == IrrDecomposition{{Weight{0}, 1}, {Weight{4}, 1}});
  CHECK(bracket(a1, symmetric_power(s, 1), Weight{0}) == 0);
  CHECK(bracket(a1, symmetric_power(s, 2), Weight{0}) == 1);
  CHECK(sym_adjoint(a1, 2) == symmetric_power(s, 2));
  CHECK(wedge_adjoint(a1, 2) == exterior_power(s, 2));
  CHECK(wedge_adjoint(a1, 7).empty());
  CHECK_THROWS_AS(exterior_power(s, -1), InvalidArgument);

  const auto& a2 = cached_root_datum(Series::A, 2);
  // dims of exterior powers of an 8-dim space
  const int binom8[] = {1, 8, 28, 56, 70, 56, 28, 8, 1};
  for (int k = 0; k <= 8; ++k) CHECK(wedge_adjoint(a2, k).dimension() == binom8[k]);
  CHECK(sym_adjoint(a2, 3).dimension() == 120);
  // [wedge^l s (x) L_lambda : L_{lambda+2rho}] = 1, l = number of positive roots
  for (const auto& lam : {Weight{0, 0}, Weight{1, 0}, Weight{2, 1}}) {
    CHECK(tensor_bracket(wedge_adjoint(a2, 3), lam, lam + 2 * a2.rho()) == 1);
  }
}

TEST_CASE("Newton recurrences hold exactly") {
  const auto& b2 = cached_root_datum(Series::B, 2);
  auto s = adjoint_character(b2);
  for (int k = 1; k <= 4; ++k) {
    FormalCharacter lhs = wedge_adjoint(b2, k);
    lhs *= k;
    FormalCharacter rhs(b2);
    for (int i = 1; i <= k; ++i) {
      auto term = tensor(adams(s, i), wedge_adjoint(b2, k - i));
      if (i % 2 == 1)
        rhs += term;
      else
        rhs -= term;
    }
    CHECK(lhs == rhs);
  }
}
