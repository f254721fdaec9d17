#include "takiff/ideals.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <deque>
#include <map>
#include <set>

#include "takiff/errors.hpp"

namespace takiff {

int RootIdeal::size() const { return std::popcount(bits); }

std::vector<int> RootIdeal::members() const {
  std::vector<int> out;
  for (int k = 0; k < 64; ++k)
    if (contains(k)) out.push_back(k);
  return out;
}

std::strong_ordering operator<=>(const RootIdeal& a, const RootIdeal& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.bits <=> b.bits;
}

namespace {

void require_enumerable(const RootDatum& rd) {
  if (rd.num_positive_roots() > kMaxIdealRoots)
    throw InvalidArgument(rd.name() + " has more than " + std::to_string(kMaxIdealRoots) + " positive roots");
}

// up[k] = indices of alpha_k + alpha_i that are roots
std::vector<std::vector<int>> up_covers(const RootDatum& rd) {
  const auto& roots = rd.positive_roots();
  std::vector<std::vector<int>> up(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k)
    for (int i = 0; i < rd.rank(); ++i) {
      Weight w = roots[k];
      w[i] += 1;
      if (int j = rd.root_index(w); j >= 0) up[k].push_back(j);
    }
  return up;
}

std::uint64_t bit(int k) { return std::uint64_t{1} << k; }

mpq_class root_value(const Weight& root_simple, const std::vector<mpq_class>& h) {
  mpq_class v = 0;
  for (int i = 0; i < root_simple.rank(); ++i) v += root_simple[i] * h[i];
  return v;
}

}  // namespace

bool is_upper_closed(const RootDatum& rd, const RootIdeal& ideal) {
  require_enumerable(rd);
  const int n = rd.num_positive_roots();
  if (n < 64 && (ideal.bits >> n) != 0) return false;
  const auto up = up_covers(rd);
  for (int k = 0; k < n; ++k)
    if (ideal.contains(k))
      for (int j : up[k])
        if (!ideal.contains(j)) return false;
  return true;
}

RootIdeal make_ideal(const RootDatum& rd, const std::vector<int>& roots) {
  require_enumerable(rd);
  RootIdeal out;
  for (int k : roots) {
    if (k < 0 || k >= rd.num_positive_roots()) throw InvalidArgument("root index out of range");
    out.bits |= bit(k);
  }
  if (!is_upper_closed(rd, out)) throw InvalidArgument("root set is not an ideal");
  return out;
}

RootIdeal ideal_generated_by(const RootDatum& rd, const std::vector<int>& roots) {
  require_enumerable(rd);
  const auto up = up_covers(rd);
  RootIdeal out;
  std::vector<int> stack;
  for (int k : roots) {
    if (k < 0 || k >= rd.num_positive_roots()) throw InvalidArgument("root index out of range");
    stack.push_back(k);
  }
  while (!stack.empty()) {
    const int k = stack.back();
    stack.pop_back();
    if (out.contains(k)) continue;
    out.bits |= bit(k);
    for (int j : up[k]) stack.push_back(j);
  }
  return out;
}

RootIdeal full_ideal(const RootDatum& rd) {
  require_enumerable(rd);
  const int n = rd.num_positive_roots();
  return {n == 64 ? ~std::uint64_t{0} : bit(n) - 1};
}

std::vector<RootIdeal> enumerate_ideals(const RootDatum& rd) {
  require_enumerable(rd);
  const int n = rd.num_positive_roots();
  const auto up = up_covers(rd);
  std::set<std::uint64_t> seen{0};
  std::deque<std::uint64_t> queue{0};
  while (!queue.empty()) {
    const std::uint64_t cur = queue.front();
    queue.pop_front();
    for (int k = 0; k < n; ++k) {
      if (cur & bit(k)) continue;
      const bool addable = std::all_of(up[k].begin(), up[k].end(), [&](int j) { return (cur & bit(j)) != 0; });
      if (!addable) continue;
      const std::uint64_t next = cur | bit(k);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<RootIdeal> out;
  for (auto b : seen) out.push_back({b});
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class closed_borel_count(const RootDatum& rd) {
  mpz_class prod = 2;
  for (int e : rd.exponents()) prod *= rd.coxeter_number() + e + 1;
  const mpz_class w = rd.weyl_group_order();
  if (prod % w != 0) throw InternalError("Borel count is not integral for " + rd.name());
  return prod / w;
}

BorelCount count_borel_classes(const RootDatum& rd) {
  BorelCount out{closed_borel_count(rd), std::nullopt};
  if (rd.num_positive_roots() <= kMaxIdealRoots) {
    out.enumerated = 2 * static_cast<long>(enumerate_ideals(rd).size());
    if (out.closed != *out.enumerated)
      throw InternalError("ideal enumeration disagrees with the product formula for " + rd.name());
  }
  return out;
}

std::vector<int> complement_ideal(const RootDatum& rd, const RootIdeal& nprime) {
  if (!is_upper_closed(rd, nprime)) throw InvalidArgument("root set is not an ideal");
  const auto& roots = rd.positive_roots();
  const int n = rd.num_positive_roots();
  std::vector<int> neg;
  for (int k = 0; k < n; ++k)
    if (!nprime.contains(k)) neg.push_back(k);
  // [s_beta, s_{-alpha}] for beta > 0 lands in b or in s_{-(alpha-beta)}.
  const std::set<int> in_n(neg.begin(), neg.end());
  for (int a : neg)
    for (int b = 0; b < n; ++b) {
      const int g = rd.root_index(roots[a] - roots[b]);
      if (g >= 0 && !in_n.count(g)) throw InternalError("complement is not stable under b");
    }
  return neg;
}

RootIdeal ideal_from_complement(const RootDatum& rd, const std::vector<int>& negatives) {
  RootIdeal out = full_ideal(rd);
  for (int k : negatives) {
    if (k < 0 || k >= rd.num_positive_roots()) throw InvalidArgument("root index out of range");
    out.bits &= ~bit(k);
  }
  if (!is_upper_closed(rd, out)) throw InvalidArgument("negative root set does not come from an ideal");
  return out;
}

std::optional<std::vector<mpq_class>> strict_feasible_point(const std::vector<StrictInequality>& system, int vars) {
  using Key = std::vector<mpq_class>;
  using History = std::bitset<kMaxInequalities>;
  if (system.size() > kMaxInequalities) throw InvalidArgument("too many inequalities");
  struct Row {
    StrictInequality q;
    History from;
  };
  // stage[k]: constraints in x_0..x_{k-1}
  std::vector<std::vector<Row>> stage(vars + 1);
  for (std::size_t t = 0; t < system.size(); ++t) {
    History h;
    h.set(t);
    stage[vars].push_back({system[t], h});
  }
  for (int k = vars - 1; k >= 0; --k) {
    const std::size_t eliminated = static_cast<std::size_t>(vars - k);
    std::vector<const Row*> lower, upper;
    std::map<Key, Row> kept;
    auto keep = [&](Row r) {
      // a row built from more than eliminated + 1 originals is implied by the others
      if (r.from.count() > eliminated + 1) return;
      int lead = -1;
      for (int j = 0; j < vars; ++j)
        if (r.q.a[j] != 0) {
          lead = j;
          break;
        }
      if (lead >= 0) {
        const mpq_class s = abs(r.q.a[lead]);
        for (auto& v : r.q.a) v /= s;
        r.q.c /= s;
      }
      auto [it, fresh] = kept.try_emplace(r.q.a, r);
      if (!fresh && (r.q.c > it->second.q.c || (r.q.c == it->second.q.c && r.from.count() < it->second.from.count())))
        it->second = std::move(r);
    };
    for (const auto& r : stage[k + 1]) {
      if (r.q.a[k] > 0)
        lower.push_back(&r);
      else if (r.q.a[k] < 0)
        upper.push_back(&r);
      else
        keep(r);
    }
    for (const Row* l : lower)
      for (const Row* u : upper) {
        if ((l->from | u->from).count() > eliminated + 1) continue;
        Row s{{Key(vars), 0}, l->from | u->from};
        const mpq_class pl = l->q.a[k], pu = -u->q.a[k];
        for (int j = 0; j < vars; ++j) s.q.a[j] = l->q.a[j] / pl + u->q.a[j] / pu;
        s.q.a[k] = 0;
        s.q.c = l->q.c / pl + u->q.c / pu;
        keep(std::move(s));
      }
    if (kept.size() > 1000000) throw ResourceLimit("Fourier-Motzkin system grew past 10^6 rows");
    for (auto& [a, r] : kept) stage[k].push_back(std::move(r));
  }
  for (const auto& [q, from] : stage[0])
    if (!(0 > q.c)) return std::nullopt;
  std::vector<mpq_class> x(vars, 0);
  for (int k = 0; k < vars; ++k) {
    std::optional<mpq_class> lo, hi;
    for (const auto& [q, from] : stage[k + 1]) {
      if (q.a[k] == 0) continue;
      mpq_class rest = q.c;
      for (int j = 0; j < k; ++j) rest -= q.a[j] * x[j];
      const mpq_class bound = rest / q.a[k];
      if (q.a[k] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else if (!hi || bound < *hi) {
        hi = bound;
      }
    }
    if (lo && hi)
      x[k] = (*lo + *hi) / 2;
    else if (lo)
      x[k] = *lo + mpq_class(1, 2);
    else if (hi)
      x[k] = *hi - mpq_class(1, 2);
  }
  return x;
}

bool check_shi_witness(const RootDatum& rd, const RootIdeal& nprime, const std::vector<mpq_class>& h) {
  if (static_cast<int>(h.size()) != rd.rank()) return false;
  const auto& roots = rd.positive_roots();
  for (int k = 0; k < rd.num_positive_roots(); ++k) {
    const mpq_class v = root_value(roots[k], h);
    if (nprime.contains(k) ? !(v > 1) : !(v > 0 && v < 1)) return false;
  }
  return true;
}

std::vector<mpq_class> shi_witness(const RootDatum& rd, const RootIdeal& nprime) {
  if (!is_upper_closed(rd, nprime)) throw InvalidArgument("root set is not an ideal");
  const int r = rd.rank();
  std::vector<StrictInequality> sys;
  for (int k = 0; k < rd.num_positive_roots(); ++k) {
    std::vector<mpq_class> a(r);
    for (int i = 0; i < r; ++i) a[i] = rd.positive_roots()[k][i];
    if (nprime.contains(k)) {
      sys.push_back({a, 1});
    } else {
      sys.push_back({a, 0});
      std::vector<mpq_class> neg(r);
      for (int i = 0; i < r; ++i) neg[i] = -a[i];
      sys.push_back({neg, -1});
    }
  }
  auto h = strict_feasible_point(sys, r);
  if (!h) throw InternalError("no witness element for an ideal of " + rd.name());
  if (!check_shi_witness(rd, nprime, *h)) throw InternalError("witness element fails its inequalities");
  return *h;
}

namespace {

// Odd positive part of the Borel attached to H = h + t xi d_xi: roots
// alpha - delta (alpha in Phi or 0) and delta. Returns (positive roots
// alpha with s_alpha (x) xi in b, negatives likewise, Cartan part, d_xi).
struct OddPart {
  std::vector<int> pos, neg;
  bool cartan = false, del_xi = false;
};

OddPart odd_part(const RootDatum& rd, const std::vector<mpq_class>& h, int t) {
  OddPart o;
  for (int k = 0; k < rd.num_positive_roots(); ++k) {
    const mpq_class v = root_value(rd.positive_roots()[k], h);
    if (v == -t || -v == -t) throw InternalError("element is not regular");
    if (v + t > 0) o.pos.push_back(k);
    if (-v + t > 0) o.neg.push_back(k);
  }
  o.cartan = t > 0;
  o.del_xi = -t > 0;
  return o;
}

}  // namespace

std::vector<BorelDescription> classify_borels(const RootDatum& rd) {
  const int r = rd.rank(), n = rd.num_positive_roots();
  const long even_dim = r + n + 1;
  std::vector<BorelDescription> out;
  for (const RootIdeal& ideal : enumerate_ideals(rd)) {
    const auto h = shi_witness(rd, ideal);
    BorelDescription a;
    a.kind = BorelKind::A;
    a.nprime = ideal;
    a.negatives = complement_ideal(rd, ideal);
    a.h = h;
    a.xi_coeff = 1;
    a.dim = even_dim + r + n + static_cast<long>(a.negatives.size());
    const OddPart oa = odd_part(rd, h, 1);
    if (static_cast<int>(oa.pos.size()) != n || oa.neg != a.negatives || !oa.cartan || oa.del_xi)
      throw InternalError("kind A description does not match its regular element");
    if (ideal_from_complement(rd, a.negatives) != ideal) throw InternalError("complement is not a bijection");

    BorelDescription b;
    b.kind = BorelKind::B;
    b.nprime = ideal;
    b.includes_del_xi = true;
    b.h = h;
    b.xi_coeff = -1;
    b.dim = even_dim + ideal.size() + 1;
    const OddPart ob = odd_part(rd, h, -1);
    if (ob.pos != ideal.members() || !ob.neg.empty() || ob.cartan || !ob.del_xi)
      throw InternalError("kind B description does not match its regular element");
    out.push_back(std::move(a));
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace takiff
