#include "takiff/ext.hpp"

#include <memory>
#include <mutex>
#include <random>
#include <set>
#include <algorithm>
#include <tuple>

#include "takiff/charring.hpp"
#include "takiff/dmap.hpp"
#include "takiff/errors.hpp"

namespace takiff {

namespace {

void require_dominant(const RootDatum& rd, const SuperWeight& x) {
  if (x.lambda.rank() != rd.rank()) throw InvalidArgument("weight has wrong rank for " + rd.name());
  if (!x.lambda.is_dominant()) throw InvalidArgument("weight " + x.to_string() + " is not dominant");
}

long sym_bracket(const RootDatum& rd, int k, const Weight& lambda, const Weight& mu) {
  if (k < 0) return 0;
  return adjoint_power_bracket(rd, AdjointPower::Sym, k, lambda, mu);
}

const ChevalleyBasis& basis_for(const RootDatum& rd) { return cached_chevalley_basis(rd.series(), rd.rank()); }

using ModKey = std::tuple<Series, int, int, Weight>;

std::shared_ptr<const ExplicitModule> sym_tensor_module(const RootDatum& rd, int k, const Weight& lambda) {
  static std::mutex mu;
  static std::map<ModKey, std::shared_ptr<const ExplicitModule>> cache;
  const ModKey key{rd.series(), rd.rank(), k, lambda};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const ChevalleyBasis& cb = basis_for(rd);
  std::shared_ptr<const ExplicitModule> m;
  if (k == 0)
    m = std::make_shared<const ExplicitModule>(simple_module(cb, lambda));
  else
    m = std::make_shared<const ExplicitModule>(
        tensor_module(symmetric_power_module(adjoint_module(cb), k), simple_module(cb, lambda)));
  std::lock_guard lock(mu);
  return cache.try_emplace(key, std::move(m)).first->second;
}

const KerCoker& dmap_data(const RootDatum& rd, const Weight& lambda, int n) {
  static std::mutex mu;
  static std::map<ModKey, std::unique_ptr<KerCoker>> cache;
  const ModKey key{rd.series(), rd.rank(), n, lambda};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  const ChevalleyBasis& cb = basis_for(rd);
  const DMapMatrix d = dmap_matrix(cb, lambda, n);
  auto kc = std::make_unique<KerCoker>(ker_coker_multiplicities(d));
  std::lock_guard lock(mu);
  return *cache.try_emplace(key, std::move(kc)).first->second;
}

long lookup(const IrrDecomposition& d, const Weight& mu) {
  auto it = d.find(mu);
  return it == d.end() ? 0 : it->second.get_si();
}

long ext_closed(const RootDatum& rd, int i, const SuperWeight& x, const SuperWeight& y) {
  const int d = x.a - y.a;
  const bool l0 = x.lambda.is_zero(), m0 = y.lambda.is_zero();
  const Weight zero(rd.rank());
  if (l0 && m0) {
    if ((d + i) % 2 != 0 || d < -i || d > i) return 0;
    return sym_bracket(rd, (d + i) / 2, zero, zero);
  }
  if (l0) return d == i ? sym_bracket(rd, i, zero, y.lambda) : 0;
  if (m0) return d == i + 1 ? sym_bracket(rd, i, zero, x.lambda) : 0;
  if (i == 0) return (d == 0 && x.lambda == y.lambda) ? 1 : 0;
  if (i == 1) return ext1_closed(rd, x, y);
  if (in_root_lattice(rd, x.lambda))
    throw InvalidArgument("closed Ext formula needs lambda outside the root lattice when i >= 2");
  if (d != i) return 0;
  const long v = sym_bracket(rd, i, x.lambda, y.lambda) - sym_bracket(rd, i - 1, x.lambda, y.lambda);
  if (v < 0) throw InternalError("negative kernel multiplicity");
  return v;
}

long ext_oracle(const RootDatum& rd, int i, const SuperWeight& x, const SuperWeight& y) {
  if (i > kOracleMaxDegree)
    throw InvalidArgument("oracle engine supports i <= " + std::to_string(kOracleMaxDegree));
  const int d = x.a - y.a;
  const bool l0 = x.lambda.is_zero(), m0 = y.lambda.is_zero();
  const Weight zero(rd.rank());
  if (l0 && m0) {
    if ((d + i) % 2 != 0 || d < -i || d > i) return 0;
    return singular_vector_count(rd, (d + i) / 2, zero, zero);
  }
  if (l0) return d == i ? singular_vector_count(rd, i, zero, y.lambda) : 0;
  if (m0) return d == i + 1 ? singular_vector_count(rd, i, zero, x.lambda) : 0;
  if (d == i) {
    if (i == 0) return x.lambda == y.lambda ? 1 : 0;  // ker D^0 = L(lambda)
    return lookup(dmap_data(rd, x.lambda, i).ker, y.lambda);
  }
  if (d == i + 1) return lookup(dmap_data(rd, x.lambda, i + 1).coker, y.lambda);
  return 0;
}

}  // namespace

bool closed_available(const RootDatum& rd, int i, const SuperWeight& x, const SuperWeight& y) {
  if (x.lambda.is_zero() || y.lambda.is_zero() || i <= 1) return true;
  return !in_root_lattice(rd, x.lambda);
}

long ext_dim(const RootDatum& rd, int i, const SuperWeight& x, const SuperWeight& y, Engine engine) {
  require_dominant(rd, x);
  require_dominant(rd, y);
  if (i < 0) throw InvalidArgument("Ext degree must be nonnegative");
  switch (engine) {
    case Engine::Closed:
      return ext_closed(rd, i, x, y);
    case Engine::Oracle:
      return ext_oracle(rd, i, x, y);
    case Engine::Auto:
      return closed_available(rd, i, x, y) ? ext_closed(rd, i, x, y) : ext_oracle(rd, i, x, y);
  }
  return 0;
}

long ext1_closed(const RootDatum& rd, const SuperWeight& x, const SuperWeight& y) {
  require_dominant(rd, x);
  require_dominant(rd, y);
  const int d = x.a - y.a;
  const bool l0 = x.lambda.is_zero(), m0 = y.lambda.is_zero();
  const Weight& theta = rd.highest_root();
  if (l0 && m0) return -d == 1 ? 1 : 0;
  if (l0) return (d == 1 && y.lambda == theta) ? 1 : 0;
  if (m0) return (d == 2 && x.lambda == theta) ? 1 : 0;
  if (d != 1) return 0;
  const long v = sym_bracket(rd, 1, x.lambda, y.lambda) - (x.lambda == y.lambda ? 1 : 0);
  if (v < 0) throw InternalError("negative first extension");
  return v;
}

long ext1_conformal(const RootDatum& rd, const SuperWeight& x, const SuperWeight& y) {
  require_dominant(rd, x);
  require_dominant(rd, y);
  const int d = x.a - y.a;
  const bool l0 = x.lambda.is_zero(), m0 = y.lambda.is_zero();
  const Weight& theta = rd.highest_root();
  if (l0 && m0) return -d == 1 ? 1 : 0;
  if (l0) return 0;
  if (m0) return (d == 1 && x.lambda == theta) ? 1 : 0;
  const bool is_sl2 = rd.series() == Series::A && rd.rank() == 1;
  const int factor = (d == 1 ? 1 : 0) + ((d == 2 && is_sl2) ? 1 : 0);
  if (factor == 0) return 0;
  const long v = sym_bracket(rd, 1, x.lambda, y.lambda) - (x.lambda == y.lambda ? 1 : 0);
  if (v < 0) throw InternalError("negative first extension");
  return factor * v;
}

long singular_vector_count(const RootDatum& rd, int k, const Weight& lambda, const Weight& mu) {
  if (k < 0) return 0;
  if (!mu.is_dominant()) return 0;
  const auto m = sym_tensor_module(rd, k, lambda);
  const ChevalleyBasis& cb = *m->cb;
  std::vector<int> cols;
  for (int v = 0; v < m->dim; ++v)
    if (m->weights[v] == mu) cols.push_back(v);
  if (cols.empty()) return 0;
  std::vector<SparseMatrix::Row> rows;
  for (int i = 0; i < rd.rank(); ++i) {
    const SparseMatrix& e = m->action[cb.e(i)];
    for (int r = 0; r < e.rows(); ++r) {
      SparseMatrix::Row row;
      for (int c : cols)
        if (auto it = e.row(r).find(c); it != e.row(r).end()) row[c] = it->second;
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  SparseMatrix stacked(static_cast<int>(rows.size()), m->dim);
  for (std::size_t r = 0; r < rows.size(); ++r) stacked.set_row(static_cast<int>(r), rows[r]);
  std::vector<int> all(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) all[r] = static_cast<int>(r);
  return static_cast<long>(cols.size()) - rank_of_block(stacked, all, cols);
}

// ---------------------------------------------------------------- quivers

namespace {

std::vector<SuperWeight> window_vertices(const RootDatum& rd, const BlockLabel& label, int coord_max, int level_max) {
  std::vector<SuperWeight> out;
  const int r = rd.rank();
  std::vector<int> c(r, 0);
  while (true) {
    Weight lam(std::span<const int>(c.data(), c.size()));
    for (int a = -level_max; a <= level_max; ++a) {
      SuperWeight x{lam, a};
      if (block_label_F(rd, x) == label) out.push_back(x);
    }
    int i = 0;
    while (i < r && ++c[i] > coord_max) c[i++] = 0;
    if (i == r) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

long ext1_of(const RootDatum& rd, QuiverKind kind, const SuperWeight& x, const SuperWeight& y) {
  return kind == QuiverKind::F ? ext1_closed(rd, x, y) : ext1_conformal(rd, x, y);
}

}  // namespace

QuiverGraph build_quiver(const RootDatum& rd, const BlockLabel& label, const Window& w, QuiverKind kind) {
  QuiverGraph q;
  q.vertices = window_vertices(rd, label, w.coord_max, w.level_max);
  const std::set<SuperWeight> inside(q.vertices.begin(), q.vertices.end());
  const auto big = window_vertices(rd, label, w.coord_max + 3, w.level_max + 3);
  for (std::size_t s = 0; s < q.vertices.size(); ++s)
    for (std::size_t t = 0; t < q.vertices.size(); ++t)
      if (long v = ext1_of(rd, kind, q.vertices[s], q.vertices[t]))
        q.edges[{static_cast<int>(s), static_cast<int>(t)}] = v;
  for (const auto& x : q.vertices) {
    bool ok = true;
    for (const auto& y : big) {
      if (inside.count(y)) continue;
      if (ext1_of(rd, kind, x, y) || ext1_of(rd, kind, y, x)) {
        ok = false;
        break;
      }
    }
    q.interior.push_back(ok);
  }
  return q;
}

bool compare_quivers(const QuiverGraph& f, const QuiverGraph& c) {
  if (f.vertices != c.vertices) return false;
  const int n = static_cast<int>(f.vertices.size());
  auto edge = [](const QuiverGraph& q, int s, int t) {
    auto it = q.edges.find({s, t});
    return it == q.edges.end() ? 0L : it->second;
  };
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const bool touches = (f.interior[s] && c.interior[s]) || (f.interior[t] && c.interior[t]);
      if (touches && edge(f, s, t) != edge(c, s, t)) return false;
    }
  return true;
}

// ---------------------------------------------------------------- Koszul

KoszulReport diagonal_violations(const RootDatum& rd, const std::vector<ExtPair>& pairs, int imax, Engine engine) {
  KoszulReport rep;
  rep.pairs = pairs;
  for (const auto& p : pairs)
    for (int i = 0; i <= imax; ++i) {
      const long v = ext_dim(rd, i, p.x, p.y, engine);
      ++rep.evaluated;
      if (v != 0 && p.x.a - p.y.a != i) rep.violations.push_back({p.x, p.y, i, v});
    }
  return rep;
}

std::vector<ExtPair> sample_block_pairs(const RootDatum& rd, const BlockLabel& label, int count, int imax,
                                        unsigned seed) {
  std::vector<Weight> lams;
  for (const auto& v : window_vertices(rd, label, 2, 0)) lams.push_back(v.lambda);
  if (lams.empty()) throw InvalidArgument("block " + label.to_string() + " has no weights in the sampling window");
  std::mt19937 gen(seed);
  std::uniform_int_distribution<std::size_t> pick(0, lams.size() - 1);
  std::uniform_int_distribution<int> level(-2, 2), gap(-1, imax + 1);
  std::vector<ExtPair> out;
  for (int k = 0; k < count; ++k) {
    const int a = level(gen);
    const Weight lx = lams[pick(gen)];
    const Weight ly = lams[pick(gen)];
    out.push_back({{lx, a}, {ly, a - gap(gen)}});
  }
  return out;
}

KoszulReport koszul_diagonal_check(const RootDatum& rd, const BlockLabel& label, int samples, int imax,
                                   unsigned seed) {
  if (rd.rank() < 2) throw InvalidArgument("the Koszul check needs rank >= 2");
  if (label.is_principal()) throw InvalidArgument("the Koszul check excludes the principal block");
  return diagonal_violations(rd, sample_block_pairs(rd, label, samples, imax, seed), imax);
}

}  // namespace takiff
