#include "takiff/charring.hpp"

#include <mutex>
#include <tuple>
#include <vector>

#include "takiff/errors.hpp"

namespace takiff {

FormalCharacter::FormalCharacter(const RootDatum& rd, Map support) : rd_(&rd), support_(std::move(support)) {
  std::erase_if(support_, [](const auto& kv) { return kv.second == 0; });
}

FormalCharacter FormalCharacter::trivial(const RootDatum& rd) {
  FormalCharacter c(rd);
  c.add(Weight(rd.rank()), 1);
  return c;
}

mpz_class FormalCharacter::mult(const Weight& w) const {
  auto it = support_.find(w);
  return it == support_.end() ? mpz_class(0) : it->second;
}

mpz_class FormalCharacter::dimension() const {
  mpz_class d = 0;
  for (const auto& [w, m] : support_) d += m;
  return d;
}

bool FormalCharacter::nonnegative() const {
  for (const auto& [w, m] : support_)
    if (m < 0) return false;
  return true;
}

void FormalCharacter::add(const Weight& w, const mpz_class& m) {
  if (m == 0) return;
  auto [it, inserted] = support_.try_emplace(w, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) support_.erase(it);
  }
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
  for (const auto& [w, m] : o.support_) add(w, m);
  return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& o) {
  for (const auto& [w, m] : o.support_) add(w, -m);
  return *this;
}

FormalCharacter& FormalCharacter::operator*=(const mpz_class& k) {
  if (k == 0) {
    support_.clear();
    return *this;
  }
  for (auto& [w, m] : support_) m *= k;
  return *this;
}

FormalCharacter& FormalCharacter::divide_exact(const mpz_class& k) {
  for (auto& [w, m] : support_) {
    if (m % k != 0) throw InternalError("inexact division of a character");
    m /= k;
  }
  return *this;
}

// ---------------------------------------------------------------- Freudenthal

namespace {

using DomTable = std::map<Weight, mpz_class>;

DomTable freudenthal(const RootDatum& rd, const Weight& lambda) {
  const auto dom = dominant_weights_below(rd, lambda);
  DomTable m;
  m[lambda] = 1;
  const Weight two_rho = 2 * rd.rho();
  const auto& roots = rd.positive_roots();
  const auto& roots_fw = rd.positive_roots_fw();
  auto lookup = [&](const Weight& w) -> const mpz_class* {
    auto it = m.find(to_dominant(rd, w).weight);
    return it == m.end() ? nullptr : &it->second;
  };
  for (std::size_t k = 1; k < dom.size(); ++k) {
    const Weight& mu = dom[k];
    mpz_class num = 0;
    for (std::size_t a = 0; a < roots.size(); ++a) {
      Weight nu = mu;
      while (true) {
        nu += roots_fw[a];
        const mpz_class* mult = lookup(nu);
        if (!mult) break;
        num += *mult * static_cast<long>(rd.pair_root_weight(roots[a], nu));
      }
    }
    num *= 2;
    // (lambda - mu, lambda + mu + 2 rho), with lambda - mu in the root lattice.
    const auto diff = rd.scaled_simple_coords(lambda - mu);
    Weight diff_simple(rd.rank());
    for (int i = 0; i < rd.rank(); ++i) diff_simple[i] = static_cast<int>(diff[i] / rd.det());
    const long den = rd.pair_root_weight(diff_simple, lambda + mu + two_rho);
    if (den <= 0) throw InternalError("Freudenthal denominator not positive");
    if (num % den != 0) throw InternalError("Freudenthal recursion produced a fraction");
    mpz_class v = num / den;
    if (v < 0) throw InternalError("negative weight multiplicity");
    if (v != 0) m[mu] = v;
  }
  return m;
}

struct DatumKey {
  Series series;
  int rank;
  Weight w;
  friend auto operator<=>(const DatumKey&, const DatumKey&) = default;
};

}  // namespace

std::shared_ptr<const std::map<Weight, mpz_class>> dominant_multiplicities(const RootDatum& rd,
                                                                           const Weight& lambda) {
  if (lambda.rank() != rd.rank()) throw InvalidArgument("weight has wrong rank for " + rd.name());
  if (!lambda.is_dominant()) throw InvalidArgument("weight " + lambda.to_string() + " is not dominant");
  static std::mutex mu;
  static std::map<DatumKey, std::shared_ptr<const DomTable>> cache;
  const DatumKey key{rd.series(), rd.rank(), lambda};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const DomTable>(freudenthal(rd, lambda));
  std::lock_guard lock(mu);
  return cache.try_emplace(key, std::move(table)).first->second;
}

FormalCharacter irr_character(const RootDatum& rd, const Weight& lambda) {
  auto table = dominant_multiplicities(rd, lambda);
  FormalCharacter ch(rd);
  for (const auto& [w, m] : *table)
    for (const auto& x : weyl_orbit(rd, w)) ch.add(x, m);
  return ch;
}

// ---------------------------------------------------------------- decomposition

IrrDecomposition decompose(const FormalCharacter& ch) {
  const RootDatum& rd = ch.datum();
  // Work on the dominant part only; for a Weyl-invariant character this
  // determines everything.
  std::map<Weight, mpz_class> rest;
  for (const auto& [w, m] : ch.support())
    if (w.is_dominant()) rest[w] = m;
  IrrDecomposition out;
  while (!rest.empty()) {
    const Weight* best = nullptr;
    long long best_h = 0;
    for (const auto& [w, m] : rest) {
      long long h = rd.scaled_height(w);
      if (!best || h > best_h || (h == best_h && w > *best)) {
        best = &w;
        best_h = h;
      }
    }
    const Weight top = *best;
    const mpz_class m = rest[top];
    if (m < 0) throw InvalidArgument("not a module character: negative multiplicity at " + top.to_string());
    out[top] = m;
    for (const auto& [w, k] : *dominant_multiplicities(rd, top)) {
      auto& slot = rest[w];
      slot -= m * k;
      if (slot == 0) rest.erase(w);
    }
  }
  return out;
}

FormalCharacter compose(const RootDatum& rd, const IrrDecomposition& d) {
  FormalCharacter ch(rd);
  for (const auto& [w, m] : d) {
    FormalCharacter part = irr_character(rd, w);
    part *= m;
    ch += part;
  }
  return ch;
}

mpz_class bracket(const RootDatum& rd, const FormalCharacter& ch, const Weight& mu) {
  (void)rd;
  auto d = decompose(ch);
  auto it = d.find(mu);
  return it == d.end() ? mpz_class(0) : it->second;
}

IrrDecomposition tensor_decompose(const FormalCharacter& m, const Weight& lambda) {
  const RootDatum& rd = m.datum();
  if (!lambda.is_dominant()) throw InvalidArgument("weight " + lambda.to_string() + " is not dominant");
  const Weight rho = rd.rho();
  IrrDecomposition out;
  for (const auto& [nu, k] : m.support()) {
    auto r = to_dominant(rd, lambda + nu + rho);
    if (r.sign == 0) continue;
    auto& slot = out[r.weight - rho];
    if (r.sign > 0)
      slot += k;
    else
      slot -= k;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [w, k] : out)
    if (k < 0) throw InvalidArgument("not a module character: negative multiplicity at " + w.to_string());
  return out;
}

mpz_class tensor_bracket(const FormalCharacter& m, const Weight& lambda, const Weight& mu) {
  auto d = tensor_decompose(m, lambda);
  auto it = d.find(mu);
  return it == d.end() ? mpz_class(0) : it->second;
}

// ---------------------------------------------------------------- ring operations

FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter out(a.datum());
  for (const auto& [wa, ma] : a.support())
    for (const auto& [wb, mb] : b.support()) out.add(wa + wb, ma * mb);
  return out;
}

FormalCharacter adams(const FormalCharacter& a, int m) {
  if (m < 1) throw InvalidArgument("Adams operation index must be positive");
  FormalCharacter out(a.datum());
  for (const auto& [w, k] : a.support()) out.add(m * w, k);
  return out;
}

namespace {

// k * p_k = sum_{i=1..k} sign(i) psi^i * p_{k-i}.
FormalCharacter newton_power(const FormalCharacter& a, int k, bool alternating) {
  if (k < 0) throw InvalidArgument("power index must be nonnegative");
  std::vector<FormalCharacter> psi;
  for (int i = 1; i <= k; ++i) psi.push_back(adams(a, i));
  std::vector<FormalCharacter> p{FormalCharacter::trivial(a.datum())};
  for (int n = 1; n <= k; ++n) {
    FormalCharacter acc(a.datum());
    for (int i = 1; i <= n; ++i) {
      FormalCharacter term = tensor(psi[i - 1], p[n - i]);
      if (alternating && i % 2 == 0)
        acc -= term;
      else
        acc += term;
    }
    acc.divide_exact(n);
    if (!acc.nonnegative()) throw InternalError("Newton recurrence produced a negative multiplicity");
    p.push_back(std::move(acc));
  }
  return p[k];
}

}  // namespace

FormalCharacter exterior_power(const FormalCharacter& a, int k) { return newton_power(a, k, true); }

FormalCharacter symmetric_power(const FormalCharacter& a, int k) { return newton_power(a, k, false); }

FormalCharacter adjoint_character(const RootDatum& rd) {
  FormalCharacter ch(rd);
  for (const auto& r : rd.positive_roots_fw()) {
    ch.add(r, 1);
    ch.add(-r, 1);
  }
  ch.add(Weight(rd.rank()), rd.rank());
  return ch;
}

namespace {

// Powers are built incrementally so that asking for degree k reuses all
// lower degrees.
const FormalCharacter& cached_power(const RootDatum& rd_in, int k, bool alternating) {
  if (k < 0) throw InvalidArgument("power index must be nonnegative");
  static std::mutex mu;
  static std::map<std::tuple<Series, int, bool>, std::vector<std::unique_ptr<FormalCharacter>>> cache;
  const RootDatum& rd = cached_root_datum(rd_in.series(), rd_in.rank());
  std::lock_guard lock(mu);
  auto& seq = cache[{rd.series(), rd.rank(), alternating}];
  if (seq.empty()) seq.push_back(std::make_unique<FormalCharacter>(FormalCharacter::trivial(rd)));
  if (alternating && k > rd.dim_algebra()) {
    // beyond the top degree the exterior power vanishes
    static std::map<std::pair<Series, int>, std::unique_ptr<FormalCharacter>> zeros;
    auto& z = zeros[{rd.series(), rd.rank()}];
    if (!z) z = std::make_unique<FormalCharacter>(rd);
    return *z;
  }
  if (static_cast<int>(seq.size()) <= k) {
    const FormalCharacter adj = adjoint_character(rd);
    std::vector<FormalCharacter> psi;
    for (int i = 1; i <= k; ++i) psi.push_back(adams(adj, i));
    for (int n = static_cast<int>(seq.size()); n <= k; ++n) {
      FormalCharacter acc(rd);
      for (int i = 1; i <= n; ++i) {
        FormalCharacter term = tensor(psi[i - 1], *seq[n - i]);
        if (alternating && i % 2 == 0)
          acc -= term;
        else
          acc += term;
      }
      acc.divide_exact(n);
      if (!acc.nonnegative()) throw InternalError("Newton recurrence produced a negative multiplicity");
      seq.push_back(std::make_unique<FormalCharacter>(std::move(acc)));
    }
  }
  return *seq[k];
}

}  // namespace

const FormalCharacter& wedge_adjoint(const RootDatum& rd, int k) { return cached_power(rd, k, true); }

const FormalCharacter& sym_adjoint(const RootDatum& rd, int k) { return cached_power(rd, k, false); }

const IrrDecomposition& adjoint_power_tensor(const RootDatum& rd, AdjointPower kind, int k, const Weight& lambda) {
  if (k < 0) throw InvalidArgument("power index must be nonnegative");
  if (!lambda.is_dominant()) throw InvalidArgument("weight " + lambda.to_string() + " is not dominant");
  using Key = std::tuple<Series, int, AdjointPower, int, Weight>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<IrrDecomposition>> cache;
  const Key key{rd.series(), rd.rank(), kind, k, lambda};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  const FormalCharacter& p = kind == AdjointPower::Wedge ? wedge_adjoint(rd, k) : sym_adjoint(rd, k);
  auto d = std::make_unique<IrrDecomposition>(tensor_decompose(p, lambda));
  std::lock_guard lock(mu);
  return *cache.try_emplace(key, std::move(d)).first->second;
}

long adjoint_power_bracket(const RootDatum& rd, AdjointPower kind, int k, const Weight& lambda, const Weight& mu) {
  if (k < 0) return 0;
  const auto& d = adjoint_power_tensor(rd, kind, k, lambda);
  auto it = d.find(mu);
  return it == d.end() ? 0 : it->second.get_si();
}

bool is_weyl_invariant(const FormalCharacter& ch) {
  const RootDatum& rd = ch.datum();
  for (const auto& [w, m] : ch.support())
    for (int i = 0; i < rd.rank(); ++i) {
      if (w[i] == 0) continue;
      if (ch.mult(w - w[i] * rd.simple_root_fw(i)) != m) return false;
    }
  return true;
}

}  // namespace takiff
