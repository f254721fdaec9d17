#include <algorithm>

#include "doctest.h"
#include "takiff/charring.hpp"
#include "takiff/errors.hpp"
#include "takiff/ext.hpp"

using namespace takiff;

namespace {
const RootDatum& A1() { return cached_root_datum(Series::A, 1); }
const RootDatum& A2() { return cached_root_datum(Series::A, 2); }
SuperWeight w1(int n, int a) { return {Weight{n}, a}; }
SuperWeight w2(int p, int q, int a) { return {Weight{p, q}, a}; }
}  // namespace

TEST_CASE("Hom between simples is a Kronecker delta") {
  std::vector<SuperWeight> xs = {w2(0, 0, 0), w2(1, 0, 0), w2(1, 0, 1), w2(1, 1, 0), w2(0, 1, -1), w2(2, 0, 0)};
  for (const auto& x : xs)
    for (const auto& y : xs)
      for (Engine e : {Engine::Closed, Engine::Oracle}) CHECK(ext_dim(A2(), 0, x, y, e) == (x == y ? 1 : 0));
}

TEST_CASE("first extensions between trivial-type simples") {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const long want = b - a == 1 ? 1 : 0;
      CHECK(ext_dim(A1(), 1, w1(0, a), w1(0, b)) == want);
      CHECK(ext_dim(A2(), 1, w2(0, 0, a), w2(0, 0, b), Engine::Oracle) == want);
      CHECK(ext1_closed(A2(), w2(0, 0, a), w2(0, 0, b)) == want);
    }
}

TEST_CASE("higher extensions of the trivial module for sl2") {
  CHECK(ext_dim(A1(), 2, w1(0, 0), w1(0, 2)) == 1);
  CHECK(ext_dim(A1(), 4, w1(0, 0), w1(0, 0)) == 1);
  CHECK(ext_dim(A1(), 4, w1(0, 0), w1(0, 0), Engine::Oracle) == 1);
  CHECK(ext_dim(A1(), 3, w1(0, 0), w1(0, 0)) == 0);
  CHECK(ext_dim(A1(), 2, w1(0, 0), w1(0, 0)) == 0);  // S^1 s has no invariants
}

TEST_CASE("theta edges of the first extensions") {
  const SuperWeight th{A2().highest_root(), 0};
  CHECK(ext1_closed(A2(), th, w2(0, 0, -2)) == 1);
  CHECK(ext1_closed(A2(), th, w2(0, 0, -1)) == 0);
  CHECK(ext1_closed(A2(), w2(0, 0, 1), th) == 1);
  CHECK(ext1_closed(A2(), w2(0, 0, 0), th) == 0);
  CHECK(ext1_conformal(A2(), th, w2(0, 0, -1)) == 1);
  CHECK(ext1_conformal(A2(), th, w2(0, 0, -2)) == 0);
  CHECK(ext1_conformal(A2(), w2(0, 0, 1), th) == 0);
  // [s (x) s : s] - 1 = 1 for sl3
  CHECK(ext1_closed(A2(), th, {th.lambda, -1}) == 1);
  CHECK(ext1_closed(A2(), w2(1, 0, 0), w2(1, 0, -1)) == 0);  // 8 x 3 = 15 + 6 + 3
  CHECK(ext1_closed(A2(), w2(1, 0, 0), w2(2, 1, -1)) == 1);
  CHECK(ext1_closed(A2(), w2(1, 0, 0), w2(0, 2, -1)) == 1);
  CHECK(ext1_closed(A2(), w2(1, 0, 0), w2(0, 2, -2)) == 0);
  // sl2 conformal picks up a - b = 2
  CHECK(ext1_conformal(A1(), w1(1, 0), w1(3, -2)) == 1);
  CHECK(ext1_conformal(A2(), w2(1, 0, 0), w2(2, 1, -2)) == 0);
}

TEST_CASE("explicit example outside the root lattice") {
  const long c = ext_dim(A2(), 2, w2(1, 0, 2), w2(1, 0, 0), Engine::Closed);
  const long o = ext_dim(A2(), 2, w2(1, 0, 2), w2(1, 0, 0), Engine::Oracle);
  CHECK(c == o);
  CHECK(c == adjoint_power_bracket(A2(), AdjointPower::Sym, 2, Weight{1, 0}, Weight{1, 0}) -
                 adjoint_power_bracket(A2(), AdjointPower::Sym, 1, Weight{1, 0}, Weight{1, 0}));
}

TEST_CASE("closed engine domain") {
  const SuperWeight th{A2().highest_root(), 2};
  CHECK_FALSE(closed_available(A2(), 2, th, {th.lambda, 0}));
  CHECK_THROWS_AS(ext_dim(A2(), 2, th, {th.lambda, 0}, Engine::Closed), InvalidArgument);
  CHECK(closed_available(A2(), 1, th, {th.lambda, 0}));
  CHECK_THROWS_AS(ext_dim(A2(), 5, w2(1, 0, 0), w2(1, 0, 0), Engine::Oracle), InvalidArgument);
  CHECK_THROWS_AS(ext_dim(A2(), -1, w2(1, 0, 0), w2(1, 0, 0)), InvalidArgument);
  CHECK_THROWS_AS(ext_dim(A2(), 1, w2(-1, 1, 0), w2(1, 0, 0)), InvalidArgument);
}

TEST_CASE("closed and oracle engines agree") {
  struct Case {
    const RootDatum* rd;
    std::vector<Weight> lams;
  };
  std::vector<Case> cases = {{&A2(), {Weight{1, 0}, Weight{0, 1}, A2().highest_root(), Weight{0, 0}}},
                             {&A1(), {Weight{1}, Weight{2}, Weight{3}, Weight{0}}}};
  long compared = 0;
  for (const auto& c : cases)
    for (const auto& l : c.lams)
      for (const auto& m : c.lams)
        for (int i = 0; i <= 2; ++i)
          for (int d = -3; d <= 3; ++d) {
            const SuperWeight x{l, d}, y{m, 0};
            if (!closed_available(*c.rd, i, x, y)) continue;
            INFO(c.rd->name(), " i=", i, " ", x.to_string(), " -> ", y.to_string());
            CHECK(ext_dim(*c.rd, i, x, y, Engine::Closed) == ext_dim(*c.rd, i, x, y, Engine::Oracle));
            ++compared;
          }
  CHECK(compared > 100);
}

TEST_CASE("first extensions are symmetric under duality") {
  for (const RootDatum* rd : {&A1(), &A2(), &cached_root_datum(Series::B, 2)}) {
    std::vector<SuperWeight> xs;
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= (rd->rank() == 1 ? 0 : 2); ++q)
        for (int a = -2; a <= 2; ++a) xs.push_back({rd->rank() == 1 ? Weight{p} : Weight{p, q}, a});
    for (const auto& x : xs)
      for (const auto& y : xs) {
        INFO(rd->name(), " ", x.to_string(), " -> ", y.to_string());
        CHECK(ext1_closed(*rd, x, y) == ext1_closed(*rd, dual_simple(*rd, y), dual_simple(*rd, x)));
      }
  }
}

TEST_CASE("singular vector counts match characters") {
  for (int k = 0; k <= 2; ++k)
    for (const Weight& l : {Weight{0, 0}, Weight{1, 0}, Weight{1, 1}})
      for (const Weight& m : {Weight{0, 0}, Weight{1, 0}, Weight{1, 1}, Weight{2, 2}, Weight{0, 2}})
        CHECK(singular_vector_count(A2(), k, l, m) ==
              adjoint_power_bracket(A2(), AdjointPower::Sym, k, l, m));
}

TEST_CASE("quiver of the omega1 block of sl3 matches the conformal one") {
  const BlockLabel lbl = block_label_F(A2(), w2(1, 0, 0));
  const Window w{2, 2};
  const auto f = build_quiver(A2(), lbl, w, QuiverKind::F);
  const auto c = build_quiver(A2(), lbl, w, QuiverKind::C);
  CHECK(f.vertices.size() == c.vertices.size());
  CHECK(!f.vertices.empty());
  CHECK(std::count(f.interior.begin(), f.interior.end(), true) > 0);
  CHECK(compare_quivers(f, c));
  for (const auto& [e, v] : f.edges) {
    CHECK(e.first != e.second);
    CHECK(v > 0);
  }
}

TEST_CASE("principal sl2 quivers differ") {
  const BlockLabel lbl = block_label_F(A1(), w1(0, 0));
  const auto f = build_quiver(A1(), lbl, {2, 2}, QuiverKind::F);
  const auto c = build_quiver(A1(), lbl, {2, 2}, QuiverKind::C);
  CHECK_FALSE(compare_quivers(f, c));
  QuiverGraph empty;
  CHECK(compare_quivers(empty, empty));
}

TEST_CASE("Koszul diagonal on a non-principal block") {
  const BlockLabel lbl = block_label_F(A2(), w2(1, 0, 0));
  const auto rep = koszul_diagonal_check(A2(), lbl, 20, 3);
  CHECK(rep.pairs.size() == 20);
  CHECK(rep.evaluated == 80);
  CHECK(rep.violations.empty());
  CHECK_THROWS_AS(koszul_diagonal_check(A1(), block_label_F(A1(), w1(1, 0)), 5, 2), InvalidArgument);
  CHECK_THROWS_AS(koszul_diagonal_check(A2(), block_label_F(A2(), w2(0, 0, 0)), 5, 2), InvalidArgument);
}

TEST_CASE("principal block is not diagonal") {
  const auto rep = diagonal_violations(A1(), {{{Weight{2}, 0}, {Weight{0}, -2}}}, 1);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].i == 1);
}
