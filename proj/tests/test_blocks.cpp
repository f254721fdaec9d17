#include <map>

#include "doctest.h"
#include "takiff/blocks.hpp"
#include "takiff/errors.hpp"

using namespace takiff;

TEST_CASE("block counts") {
  CHECK(num_blocks(cached_root_datum(Series::A, 1)) == 3);
  CHECK(num_blocks(cached_root_datum(Series::A, 2)) == 3);
  CHECK(num_blocks(cached_root_datum(Series::A, 3)) == 4);
  CHECK(num_blocks(cached_root_datum(Series::B, 3)) == 2);
  CHECK(num_blocks(cached_root_datum(Series::D, 4)) == 4);
  CHECK(num_blocks(cached_root_datum(Series::G, 2)) == 1);
  CHECK(num_blocks(cached_root_datum(Series::F, 4)) == 1);
  CHECK(num_blocks(cached_root_datum(Series::E, 8), Category::O) == 1);
  CHECK(block_labels(cached_root_datum(Series::A, 2)).size() == 3);
}

TEST_CASE("labels") {
  const auto& a2 = cached_root_datum(Series::A, 2);
  for (int a = -3; a <= 3; ++a) CHECK(block_label_F(a2, {a2.highest_root(), a}) == BlockLabel::minuscule(Weight{0, 0}));
  CHECK(block_label_O(a2, {Weight{-1, 0}, 2}) == BlockLabel::minuscule(Weight{0, 1}));
  CHECK_THROWS_AS(block_label_F(a2, {Weight{-1, 0}, 2}), InvalidArgument);
  const auto& a1 = cached_root_datum(Series::A, 1);
  CHECK(block_label_F(a1, {Weight{4}, 7}).tag == Sl2Tag::Even);
  CHECK(block_label_F(a1, {Weight{3}, 1}).tag == Sl2Tag::OddA);
  CHECK(block_label_O(a1, {Weight{-2}, 1}).tag == Sl2Tag::Even);
  CHECK(parse_block_label(a2, "nu=1,0") == BlockLabel::minuscule(Weight{1, 0}));
  CHECK(parse_block_label(a2, "0,1") == BlockLabel::minuscule(Weight{0, 1}));
  CHECK_THROWS_AS(parse_block_label(a2, "1,1"), InvalidArgument);
  CHECK(parse_block_label(a1, "OddB").tag == Sl2Tag::OddB);
}

TEST_CASE("sl2 block sets") {
  const auto& a1 = cached_root_datum(Series::A, 1);
  // the three sets, generated directly
  std::map<SuperWeight, Sl2Tag> expect;
  for (int n = 0; n <= 4; ++n)
    for (int a = -12; a <= 12; ++a) {
      expect[{Weight{2 * n}, a}] = Sl2Tag::Even;
      expect[{Weight{1 + 2 * n}, 2 * a - n}] = Sl2Tag::OddA;
      expect[{Weight{1 + 2 * n}, 2 * a - n - 1}] = Sl2Tag::OddB;
    }
  int count = 0;
  // [2n] and [1+2n] for n <= 4
  for (int lam = 0; lam <= 9; ++lam)
    for (int a = -4; a <= 4; ++a) {
      SuperWeight x{Weight{lam}, a};
      CHECK(block_label_F(a1, x).tag == expect.at(x));
      ++count;
    }
  CHECK(count == 90);
  // O: n in Z
  for (int n = -4; n < 0; ++n)
    for (int a = -4; a <= 4; ++a) {
      const int m = n;  // [1+2m] with m negative
      CHECK(block_label_O(a1, {Weight{1 + 2 * m}, 2 * a - m}).tag == Sl2Tag::OddA);
      CHECK(block_label_O(a1, {Weight{1 + 2 * m}, 2 * a - m - 1}).tag == Sl2Tag::OddB);
      CHECK(block_label_O(a1, {Weight{2 * m}, a}).tag == Sl2Tag::Even);
    }
}

TEST_CASE("linkage chains reach the block representative") {
  for (auto [s, r] : {std::pair{Series::A, 2}, {Series::B, 2}}) {
    const auto& rd = cached_root_datum(s, r);
    for (int c0 = 0; c0 <= 3; ++c0)
      for (int c1 = 0; c1 <= 3; ++c1)
        for (int a = -3; a <= 3; ++a) {
          SuperWeight x{Weight{c0, c1}, a};
          const auto label = block_label_F(rd, x);
          const auto chain = linkage_chain(rd, x);
          CAPTURE(x.to_string());
          if (chain.empty()) {
            CHECK(x == SuperWeight{label.nu, 0});
            continue;
          }
          CHECK(chain.front().from == x);
          CHECK(chain.back().to == SuperWeight{label.nu, 0});
          for (std::size_t i = 0; i < chain.size(); ++i) {
            if (i > 0) CHECK(chain[i].from == chain[i - 1].to);
            CHECK(chain[i].witness > 0);
            CHECK(delta_mult(rd, chain[i].standard, chain[i].factor) == chain[i].witness);
            CHECK(block_label_F(rd, chain[i].to) == label);
          }
        }
  }
  const auto& a2 = cached_root_datum(Series::A, 2);
  CHECK(linkage_chain(a2, {Weight{1, 0}, 0}).empty());
  const auto chain = linkage_chain(a2, {2 * a2.rho(), 0});
  CHECK(chain.front().rule == LinkRule::RaiseByTwoRho);
  CHECK(chain.front().witness == 1);
  CHECK_THROWS_AS(linkage_chain(cached_root_datum(Series::A, 1), {Weight{1}, 0}), InvalidArgument);
}

TEST_CASE("G2 and B3 linkage") {
  for (auto [s, r] : {std::pair{Series::G, 2}, {Series::B, 3}}) {
    const auto& rd = cached_root_datum(s, r);
    Weight w(r);
    w[0] = 1;
    auto chain = linkage_chain(rd, {w, 2});
    CHECK(chain.back().to.lambda == minuscule_representative(rd, w));
  }
}
