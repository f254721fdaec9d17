#include <cstdlib>
#include <numeric>

#include "doctest.h"
#include "takiff/errors.hpp"
#include "takiff/invariants.hpp"

using namespace takiff;

TEST_CASE("matrix realisation") {
  for (int n : {2, 3}) {
    const auto g = realize_g(n);
    CHECK(static_cast<int>(g.basis.size()) == 2 * (n * n - 1) + 2);
    CHECK(g.even_dim() == n * n);
    CHECK(g.odd_dim() == n * n);
    for (const auto& x : g.basis) CHECK(fits_block_pattern(n, x.m));
    CHECK(check_bracket_closure(g));
  }
  const auto gl = realize_gl(2);
  CHECK(gl.basis.size() == 16);
  CHECK(gl.odd_dim() == 8);
  CHECK_FALSE(fits_block_pattern(2, gl.basis[0].m));
  CHECK(check_bracket_closure(gl));
  CHECK_THROWS_AS(realize_g(1), InvalidArgument);
}

TEST_CASE("generators span the algebra under brackets") {
  // closing the generating set under brackets recovers the full dimension
  for (int n : {2, 3}) {
    std::vector<SuperMatrix> span = generators_g(n).basis;
    IncrementalBasis basis(static_cast<std::size_t>(4 * n * n));
    auto flat = [&](const SparseMatrix& m) {
      QVector v(4 * n * n);
      for (int i = 0; i < 2 * n; ++i)
        for (const auto& [j, x] : m.row(i)) v[i * 2 * n + j] = x;
      return v;
    };
    std::vector<SuperMatrix> kept;
    for (const auto& x : span)
      if (basis.add(flat(x.m))) kept.push_back(x);
    for (std::size_t a = 0; a < kept.size(); ++a)
      for (std::size_t b = 0; b < kept.size(); ++b) {
        SuperMatrix z = supercommutator(kept[a], kept[b]);
        if (basis.add(flat(z.m))) kept.push_back(z);
      }
    CHECK(basis.size() == 2 * n * n);
  }
}

TEST_CASE("tensor and symmetric group actions") {
  const auto g = realize_g(2);
  const auto t1 = tensor_action(g, 1);
  for (std::size_t k = 0; k < g.basis.size(); ++k) CHECK(t1[k] == g.basis[k].m);

  const auto s3 = sym_action(2, 3);
  REQUIRE(s3.size() == 2);
  const auto id = SparseMatrix::identity(64);
  CHECK(s3[0] * s3[0] == id);
  CHECK(s3[1] * s3[1] == id);
  CHECK(s3[0] * s3[1] * s3[0] == s3[1] * s3[0] * s3[1]);

  // the action is a representation: [x, y] acts as the supercommutator
  const auto t2 = tensor_action(g, 2);
  const TensorSpace t = make_tensor_space(2, 2);
  for (std::size_t a = 0; a < g.basis.size(); ++a)
    for (std::size_t b = 0; b < g.basis.size(); ++b) {
      const SuperMatrix z = supercommutator(g.basis[a], g.basis[b]);
      SparseMatrix lhs = t2[a] * t2[b];
      if (g.basis[a].odd && g.basis[b].odd)
        lhs += t2[b] * t2[a];
      else
        lhs -= t2[b] * t2[a];
      CHECK(lhs == tensor_operator(t, z));
    }

  // permutations commute with every element of g
  const auto t3 = tensor_action(g, 3);
  for (const auto& s : s3)
    for (const auto& x : t3) CHECK(s * x == x * s);
}

TEST_CASE("tensor cap") {
  setenv("TAKIFF_TENSOR_CAP", "100", 1);
  CHECK_THROWS_AS(make_tensor_space(2, 4), ResourceLimit);
  CHECK_NOTHROW(make_tensor_space(2, 3));
  unsetenv("TAKIFF_TENSOR_CAP");
  CHECK_NOTHROW(make_tensor_space(2, 4));
}

TEST_CASE("Specht dimensions") {
  CHECK(partitions(4).size() == 5);
  CHECK(specht_dimension({3, 1}) == 3);
  CHECK(specht_dimension({2, 2}) == 2);
  CHECK(specht_dimension({3, 2, 1}) == 16);
  for (int r = 1; r <= 7; ++r) {
    long sum = 0, fact = 1;
    for (int k = 2; k <= r; ++k) fact *= k;
    for (const auto& l : partitions(r)) sum += specht_dimension(l) * specht_dimension(l);
    CHECK(sum == fact);
  }
  // lambda_{n+1} <= n only bites once r >= (n+1)^2
  CHECK(gl_commutant_prediction(2, 4) == 24);
  CHECK(gl_commutant_prediction(2, 9) < 362880);
}

TEST_CASE("gl double commutant") {
  for (int n : {2, 3})
    for (int r = 1; r <= (n == 2 ? 4 : 3); ++r) {
      INFO("n=", n, " r=", r);
      CHECK(commutant_dim(n, r, Algebra::GL) == gl_commutant_prediction(n, r));
    }
}

TEST_CASE("commutant of the Takiff superalgebra") {
  CHECK(commutant_dim(3, 2, Algebra::G) == 2);
  CHECK(phi_image_dim(3, 2) == 2);
  const auto c22 = commutant_dims(2, 2, Algebra::G);
  CHECK(c22.odd == 0);
  CHECK(c22.even == 3);
  CHECK(commutant_dim(2, 1, Algebra::G) == 1);
  CHECK(commutant_dim(3, 1, Algebra::G) == 1);
}

TEST_CASE("permutation image") {
  CHECK(phi_image_dim(2, 3) == 6);
  CHECK(phi_image_dim(2, 4) == 24);
  CHECK(phi_image_dim(3, 3) == 6);
}

TEST_CASE("verdicts") {
  const auto v32 = thmIT_verdict(3, 2);
  CHECK(v32.surjective);
  CHECK(v32.injective);
  CHECK(v32.violations.empty());
  const auto v22 = thmIT_verdict(2, 2);
  CHECK_FALSE(v22.surjective);
  CHECK(v22.violations.empty());
  const auto v23 = thmIT_verdict(2, 3);
  CHECK_FALSE(v23.surjective);
  CHECK(v23.image == 6);
  CHECK(v23.image < v23.commutant);
  CHECK(v23.violations.empty());
  const auto v33 = thmIT_verdict(3, 3);
  CHECK(v33.surjective);
  CHECK(v33.violations.empty());
}

TEST_CASE("super exterior powers") {
  for (auto [n, r] : {std::pair{2, 2}, {3, 3}, {2, 3}, {3, 2}}) {
    const auto dims = super_exterior_graded_dims(n, r);
    for (int k = 0; k <= r; ++k) CHECK(dims[k] == super_exterior_prediction(n, r, k));
  }
}
