#include "doctest.h"
#include "takiff/linalg.hpp"

using namespace takiff;

TEST_CASE("Bareiss rank") {
  std::vector<std::vector<mpz_class>> a = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(bareiss_rank(a) == 2);
  std::vector<std::vector<mpz_class>> id = {{1, 0}, {0, 1}};
  CHECK(bareiss_rank(id) == 2);
  CHECK(bareiss_rank({}) == 0);
}

TEST_CASE("sparse rank and block rank agree") {
  SparseMatrix m(4, 4);
  m.add(0, 0, mpq_class(1, 2));
  m.add(0, 1, 1);
  m.add(1, 0, 1);
  m.add(1, 1, 2);
  m.add(2, 3, mpq_class(3, 7));
  m.add(3, 2, 5);
  m.add(3, 3, 1);
  CHECK(rank(m) == 3);
  CHECK(rank_of_block(m, {0, 1, 2, 3}, {0, 1, 2, 3}) == 3);
  CHECK(rank_of_block(m, {0, 1}, {0, 1}) == 1);
}

TEST_CASE("products and commutators") {
  SparseMatrix e(2, 2), f(2, 2), h(2, 2);
  e.add(0, 1, 1);
  f.add(1, 0, 1);
  h.add(0, 0, 1);
  h.add(1, 1, -1);
  CHECK(commutator(e, f) == h);
  SparseMatrix two_e = e;
  two_e *= 2;
  CHECK(commutator(h, e) == two_e);
  CHECK((e * e).is_zero());
  CHECK(SparseMatrix::identity(2) * h == h);
}

TEST_CASE("incremental basis") {
  IncrementalBasis b(3);
  CHECK(b.add({1, 0, 1}) == 0);
  CHECK(b.add({2, 0, 2}) == std::nullopt);
  CHECK(b.add({0, 1, 0}) == 1);
  auto c = b.express({3, 5, 3});
  REQUIRE(c);
  CHECK((*c)[0] == 3);
  CHECK((*c)[1] == 5);
  CHECK_FALSE(b.express({0, 0, 1}));
}

TEST_CASE("solve combination") {
  SparseMatrix a(2, 2), b(2, 2), t(2, 2);
  a.add(0, 0, 1);
  b.add(1, 1, 1);
  t.add(0, 0, 3);
  t.add(1, 1, -2);
  auto c = solve_combination({&a, &b}, t);
  REQUIRE(c);
  CHECK((*c)[0] == 3);
  CHECK((*c)[1] == -2);
  SparseMatrix bad(2, 2);
  bad.add(0, 1, 1);
  CHECK_FALSE(solve_combination({&a, &b}, bad));
}
