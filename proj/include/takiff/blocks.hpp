#pragma once

#include <string>
#include <vector>

#include "takiff/rootsys.hpp"
#include "takiff/takiff.hpp"

namespace takiff {

enum class Sl2Tag { Even, OddA, OddB };

/// Minuscule weight for rank >= 2, one of three tags for sl(2).
struct BlockLabel {
  bool sl2 = false;
  Weight nu;
  Sl2Tag tag = Sl2Tag::Even;

  static BlockLabel minuscule(const Weight& nu) { return {false, nu, Sl2Tag::Even}; }
  static BlockLabel sl2_tag(Sl2Tag t) { return {true, Weight(1), t}; }

  [[nodiscard]] bool is_principal() const { return sl2 ? tag == Sl2Tag::Even : nu.is_zero(); }
  /// "nu=c1,...,cr" or "Even"/"OddA"/"OddB".
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
  friend auto operator<=>(const BlockLabel&, const BlockLabel&) = default;
};

enum class Category { F, O };

BlockLabel block_label_F(const RootDatum& rd, const SuperWeight& x);
BlockLabel block_label_O(const RootDatum& rd, const SuperWeight& x);
int num_blocks(const RootDatum& rd, Category c = Category::F);
/// All labels, sorted.
std::vector<BlockLabel> block_labels(const RootDatum& rd);
/// Parses the output of BlockLabel::to_string (also accepts a bare weight).
BlockLabel parse_block_label(const RootDatum& rd, const std::string& text);

enum class LinkRule {
  RaiseByTwoRho,  ///< [Delta(l + a d) : L(l + 2 rho + (a - |Phi+|) d)] = 1
  RootStep,       ///< [Delta(k + (b+1) d) : L(k + beta + b d)] = 1
  LevelStep,      ///< [Delta(k + a d) : L(k + (a-1) d)] = rank - 1
};

std::string rule_name(LinkRule r);

/// One edge of a linkage chain. The witness is [Delta(standard) : L(factor)] > 0,
/// where {standard, factor} = {from, to}.
struct LinkStep {
  SuperWeight from;
  SuperWeight to;
  LinkRule rule;
  SuperWeight standard;
  SuperWeight factor;
  long witness = 0;
};

inline constexpr std::size_t kMaxChainLength = 10000;

/// Explicit chain of linked pairs from x to (nu, 0), nu the block label.
/// rank >= 2 and x dominant. Each witness is recomputed before it is emitted.
std::vector<LinkStep> linkage_chain(const RootDatum& rd, const SuperWeight& x);

}  // namespace takiff
