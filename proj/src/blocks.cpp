#include "takiff/blocks.hpp"

#include <algorithm>
#include <sstream>

#include "takiff/errors.hpp"

namespace takiff {

std::string BlockLabel::to_string() const {
  if (!sl2) return "nu=" + nu.to_string();
  switch (tag) {
    case Sl2Tag::Even:
      return "Even";
    case Sl2Tag::OddA:
      return "OddA";
    case Sl2Tag::OddB:
      return "OddB";
  }
  return "?";
}

namespace {

BlockLabel sl2_label(const SuperWeight& x) {
  const int n = x.lambda[0];
  if (n % 2 == 0) return BlockLabel::sl2_tag(Sl2Tag::Even);
  const int half = (n - 1) / 2;  // exact: n - 1 is even
  return BlockLabel::sl2_tag(((x.a + half) % 2 == 0) ? Sl2Tag::OddA : Sl2Tag::OddB);
}

void check_rank(const RootDatum& rd, const SuperWeight& x) {
  if (x.lambda.rank() != rd.rank()) throw InvalidArgument("weight has wrong rank for " + rd.name());
}

}  // namespace

BlockLabel block_label_F(const RootDatum& rd, const SuperWeight& x) {
  check_rank(rd, x);
  if (!x.lambda.is_dominant()) throw InvalidArgument("weight " + x.to_string() + " is not dominant");
  return block_label_O(rd, x);
}

BlockLabel block_label_O(const RootDatum& rd, const SuperWeight& x) {
  check_rank(rd, x);
  if (rd.rank() == 1) return sl2_label(x);
  return BlockLabel::minuscule(minuscule_representative(rd, x.lambda));
}

int num_blocks(const RootDatum& rd, Category) {
  if (rd.rank() == 1) return 3;
  return static_cast<int>(cartan_determinant(rd));
}

std::vector<BlockLabel> block_labels(const RootDatum& rd) {
  std::vector<BlockLabel> out;
  if (rd.rank() == 1) {
    out = {BlockLabel::sl2_tag(Sl2Tag::Even), BlockLabel::sl2_tag(Sl2Tag::OddA), BlockLabel::sl2_tag(Sl2Tag::OddB)};
  } else {
    for (const auto& nu : minuscule_weights(rd)) out.push_back(BlockLabel::minuscule(nu));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BlockLabel parse_block_label(const RootDatum& rd, const std::string& text) {
  if (rd.rank() == 1) {
    if (text == "Even") return BlockLabel::sl2_tag(Sl2Tag::Even);
    if (text == "OddA") return BlockLabel::sl2_tag(Sl2Tag::OddA);
    if (text == "OddB") return BlockLabel::sl2_tag(Sl2Tag::OddB);
    throw InvalidArgument("sl(2) block label must be Even, OddA or OddB, got '" + text + "'");
  }
  std::string body = text.rfind("nu=", 0) == 0 ? text.substr(3) : text;
  const SuperWeight w = SuperWeight::parse(body + ";0", rd.rank());
  const auto mins = minuscule_weights(rd);
  if (std::find(mins.begin(), mins.end(), w.lambda) == mins.end())
    throw InvalidArgument("'" + text + "' is not a minuscule weight of " + rd.name());
  return BlockLabel::minuscule(w.lambda);
}

std::string rule_name(LinkRule r) {
  switch (r) {
    case LinkRule::RaiseByTwoRho:
      return "raise_2rho";
    case LinkRule::RootStep:
      return "root_step";
    case LinkRule::LevelStep:
      return "level_step";
  }
  return "?";
}

namespace {

class ChainBuilder {
 public:
  explicit ChainBuilder(const RootDatum& rd) : rd_(rd) {}

  // Edge whose standard module sits at `standard`.
  void edge(const SuperWeight& from, const SuperWeight& to, LinkRule rule, bool from_is_standard) {
    if (steps_.size() >= kMaxChainLength)
      throw ResourceLimit("linkage chain longer than " + std::to_string(kMaxChainLength) + " steps");
    const SuperWeight& s = from_is_standard ? from : to;
    const SuperWeight& f = from_is_standard ? to : from;
    const long w = delta_mult(rd_, s, f);
    if (w <= 0)
      throw InternalError("linkage witness vanished: [Delta(" + s.to_string() + "):L(" + f.to_string() + ")] = " +
                          std::to_string(w));
    steps_.push_back({from, to, rule, s, f, w});
  }

  std::vector<LinkStep> take() { return std::move(steps_); }

 private:
  const RootDatum& rd_;
  std::vector<LinkStep> steps_;
};

}  // namespace

std::vector<LinkStep> linkage_chain(const RootDatum& rd, const SuperWeight& x) {
  if (rd.rank() < 2) throw InvalidArgument("linkage chains need rank >= 2");
  check_rank(rd, x);
  if (!x.lambda.is_dominant()) throw InvalidArgument("weight " + x.to_string() + " is not dominant");
  const Weight nu = minuscule_representative(rd, x.lambda);
  const SuperWeight goal{nu, 0};
  if (x == goal) return {};

  const int r = rd.rank();
  const int ell = rd.num_positive_roots();
  const Weight two_rho = 2 * rd.rho();

  // Tensor-good: kappa + beta dominant for every root beta.
  int need = 0;
  for (const auto& b : rd.positive_roots_fw())
    for (int i = 0; i < r; ++i) need = std::max(need, std::abs(b[i]));

  // lambda - nu in simple coordinates
  const auto scaled = rd.scaled_simple_coords(x.lambda - nu);
  std::vector<int> c(r);
  long total_steps = 0;
  for (int i = 0; i < r; ++i) {
    c[i] = static_cast<int>(scaled[i] / rd.det());
    total_steps += std::abs(c[i]);
  }
  int max_cartan = 0;
  for (const auto& row : rd.cartan())
    for (int v : row) max_cartan = std::max(max_cartan, std::abs(v));
  // Every coordinate along the root walk must stay >= need.
  const long drift = total_steps * max_cartan;
  int lo = x.lambda[0];
  for (int i = 0; i < r; ++i) lo = std::min({lo, x.lambda[i], nu[i]});
  const long deficit = need + drift - lo;
  const int k = deficit > 0 ? static_cast<int>((deficit + 1) / 2) : 0;
  if (2L * k + total_steps > static_cast<long>(kMaxChainLength))
    throw ResourceLimit("linkage chain longer than " + std::to_string(kMaxChainLength) + " steps");

  ChainBuilder chain(rd);
  SuperWeight cur = x;
  for (int j = 0; j < k; ++j) {
    SuperWeight next{cur.lambda + two_rho, cur.a - ell};
    chain.edge(cur, next, LinkRule::RaiseByTwoRho, true);
    cur = next;
  }
  // Walk from lambda + 2k rho to nu + 2k rho by simple roots, lowering first
  // where c_i > 0 and raising after, one level down per step.
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < r; ++i) {
      const int cnt = pass == 0 ? std::max(c[i], 0) : std::max(-c[i], 0);
      const Weight beta = pass == 0 ? -rd.simple_root_fw(i) : rd.simple_root_fw(i);
      for (int t = 0; t < cnt; ++t) {
        SuperWeight next{cur.lambda + beta, cur.a - 1};
        chain.edge(cur, next, LinkRule::RootStep, true);
        cur = next;
      }
    }
  const SuperWeight raised_goal{nu + k * two_rho, -k * ell};
  if (cur.lambda != raised_goal.lambda) throw InternalError("root walk missed its target");
  if (k > 0 || cur.a != raised_goal.a) {
    while (cur.a > raised_goal.a) {
      SuperWeight next{cur.lambda, cur.a - 1};
      chain.edge(cur, next, LinkRule::LevelStep, true);
      cur = next;
    }
    while (cur.a < raised_goal.a) {
      SuperWeight next{cur.lambda, cur.a + 1};
      chain.edge(cur, next, LinkRule::LevelStep, false);
      cur = next;
    }
  }
  for (int j = k; j > 0; --j) {
    SuperWeight next{cur.lambda - two_rho, cur.a + ell};
    chain.edge(cur, next, LinkRule::RaiseByTwoRho, false);
    cur = next;
  }
  if (cur != goal) throw InternalError("linkage chain did not reach the block representative");
  return chain.take();
}

}  // namespace takiff
