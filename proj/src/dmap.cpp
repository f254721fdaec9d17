#include "takiff/dmap.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>

#include "takiff/config.hpp"
#include "takiff/errors.hpp"

namespace takiff {

namespace {

using SVec = std::map<int, mpq_class>;

bool is_signed_root(const RootDatum& rd, const Weight& x) {
  return rd.root_index(x) >= 0 || rd.root_index(-x) >= 0;
}

Weight unit(int rank, int i) {
  Weight w(rank);
  w[i] = 1;
  return w;
}

mpz_class binomial(long n, long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

void check_cap(const mpz_class& dim, const std::string& what) {
  if (dim > static_cast<unsigned long>(dim_cap()))
    throw ResourceLimit(what + " has dimension " + dim.get_str() + ", above the cap " + std::to_string(dim_cap()) +
                        " (raise TAKIFF_DIM_CAP to allow it)");
}

// Column lists of a row-major matrix.
std::vector<std::vector<std::pair<int, mpq_class>>> columns(const SparseMatrix& m) {
  std::vector<std::vector<std::pair<int, mpq_class>>> cols(m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) cols[c].emplace_back(r, v);
  return cols;
}

// e_xi and f_xi for non-simple roots, from the simple generators.
void complete_action(const ChevalleyBasis& cb, ExplicitModule& m) {
  const int r = cb.rank();
  for (int k = r; k < cb.num_positive(); ++k) {
    const auto& rec = cb.recipes()[k];
    const mpq_class inv(1, rec.divisor);
    SparseMatrix e = commutator(m.action[cb.e(rec.simple)], m.action[cb.e(rec.prev)]);
    e *= inv;
    SparseMatrix f = commutator(m.action[cb.f(rec.simple)], m.action[cb.f(rec.prev)]);
    f *= -inv;
    m.action[cb.e(k)] = std::move(e);
    m.action[cb.f(k)] = std::move(f);
  }
}

void enumerate_monomials(int d, int n, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int a = start; a < d; ++a) {
    cur.push_back(a);
    enumerate_monomials(d, n, a, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> monomials(int d, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  enumerate_monomials(d, n, 0, cur, out);
  return out;
}

ExplicitModule build_simple(const ChevalleyBasis& cb, const Weight& lambda) {
  const RootDatum& rd = cb.datum();
  const int r = rd.rank();
  std::vector<Weight> wt;
  std::vector<std::vector<SVec>> E, F;  // E[v][j] = e_j v, F[v][i] = f_i v
  std::map<Weight, std::vector<int>> by_weight;
  auto new_vector = [&](const Weight& w) {
    wt.push_back(w);
    E.emplace_back(r);
    F.emplace_back(r);
    by_weight[w].push_back(static_cast<int>(wt.size()) - 1);
    return static_cast<int>(wt.size()) - 1;
  };
  new_vector(lambda);
  std::vector<Weight> layer{lambda};
  while (!layer.empty()) {
    std::set<Weight> next;
    for (const auto& nu : layer)
      for (int i = 0; i < r; ++i) next.insert(nu - rd.simple_root_fw(i));
    std::vector<Weight> new_layer;
    for (const auto& mu : next) {
      std::vector<std::pair<int, int>> cand;
      for (int i = 0; i < r; ++i)
        if (auto it = by_weight.find(mu + rd.simple_root_fw(i)); it != by_weight.end())
          for (int b : it->second) cand.emplace_back(i, b);
      std::map<int, int> pos;
      for (int j = 0; j < r; ++j)
        if (auto it = by_weight.find(mu + rd.simple_root_fw(j)); it != by_weight.end())
          for (int v : it->second) pos.emplace(v, static_cast<int>(pos.size()));
      IncrementalBasis basis(pos.size());
      std::vector<QVector> flat(cand.size());
      std::vector<std::vector<SVec>> images(cand.size());
      std::vector<int> global_of_local;
      for (std::size_t c = 0; c < cand.size(); ++c) {
        const auto [i, b] = cand[c];
        images[c].resize(r);
        flat[c].assign(pos.size(), 0);
        for (int j = 0; j < r; ++j) {
          SVec out;
          // e_j f_i b = f_i e_j b + delta_ij <wt b, alpha_i^vee> b
          for (const auto& [u, x] : E[b][j])
            for (const auto& [w, y] : F[u][i]) out[w] += x * y;
          if (j == i && wt[b][i] != 0) out[b] += wt[b][i];
          std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
          for (const auto& [w, x] : out) flat[c][pos.at(w)] = x;
          images[c][j] = std::move(out);
        }
        if (basis.add(flat[c])) {
          const int g = new_vector(mu);
          E[g] = images[c];
          global_of_local.push_back(g);
        }
      }
      for (std::size_t c = 0; c < cand.size(); ++c) {
        auto coords = basis.express(flat[c]);
        if (!coords) throw InternalError("simple module construction: candidate outside span");
        SVec fv;
        for (std::size_t k = 0; k < coords->size(); ++k)
          if ((*coords)[k] != 0) fv[global_of_local[k]] = (*coords)[k];
        F[cand[c].second][cand[c].first] = std::move(fv);
      }
      if (!global_of_local.empty()) new_layer.push_back(mu);
    }
    layer = std::move(new_layer);
  }

  ExplicitModule m;
  m.cb = &cb;
  m.dim = static_cast<int>(wt.size());
  m.weights = wt;
  m.highest_weight = lambda;
  m.action.assign(cb.dim(), SparseMatrix(m.dim, m.dim));
  for (int v = 0; v < m.dim; ++v)
    for (int i = 0; i < r; ++i) {
      for (const auto& [w, x] : E[v][i]) m.action[cb.e(i)].add(w, v, x);
      for (const auto& [w, x] : F[v][i]) m.action[cb.f(i)].add(w, v, x);
      m.action[cb.h(i)].add(v, v, wt[v][i]);
    }
  complete_action(cb, m);
  return m;
}

}  // namespace

// ---------------------------------------------------------------- Chevalley basis

int string_bottom(const RootDatum& rd, const Weight& alpha, const Weight& beta) {
  int p = 0;
  Weight x = beta - alpha;
  while (is_signed_root(rd, x)) {
    ++p;
    x -= alpha;
  }
  return p;
}

std::string ChevalleyBasis::label(int idx) const {
  if (idx < npos_) return "e" + std::to_string(idx);
  if (idx < npos_ + rank_) return "h" + std::to_string(idx - npos_ + 1);
  return "f" + std::to_string(idx - npos_ - rank_);
}

int ChevalleyBasis::root_vector(const Weight& x) const {
  if (int k = rd_->root_index(x); k >= 0) return e(k);
  if (int k = rd_->root_index(-x); k >= 0) return f(k);
  return -1;
}

long ChevalleyBasis::structure_constant(const Weight& alpha, const Weight& beta) const {
  const int a = root_vector(alpha), b = root_vector(beta), c = root_vector(alpha + beta);
  if (a < 0 || b < 0) throw InvalidArgument("structure_constant expects roots");
  if (c < 0) return 0;
  const auto& v = bracket(a, b);
  auto it = v.find(c);
  return it == v.end() ? 0 : it->second;
}

std::vector<int> ChevalleyBasis::generators() const {
  std::vector<int> g;
  for (int i = 0; i < rank_; ++i) {
    g.push_back(e(i));
    g.push_back(f(i));
    g.push_back(h(i));
  }
  return g;
}

ChevalleyBasis chevalley_basis(const RootDatum& rd) {
  ChevalleyBasis cb;
  cb.rd_ = &rd;
  cb.rank_ = rd.rank();
  cb.npos_ = rd.num_positive_roots();
  cb.dim_ = rd.dim_algebra();
  const auto& roots = rd.positive_roots();
  cb.weights_.resize(cb.dim_);
  for (int k = 0; k < cb.npos_; ++k) {
    cb.weights_[cb.e(k)] = rd.positive_roots_fw()[k];
    cb.weights_[cb.f(k)] = -rd.positive_roots_fw()[k];
  }
  for (int i = 0; i < cb.rank_; ++i) cb.weights_[cb.h(i)] = Weight(cb.rank_);
  cb.recipes_.resize(cb.npos_);
  for (int k = cb.rank_; k < cb.npos_; ++k) {
    for (int i = 0; i < cb.rank_; ++i) {
      const Weight prev = roots[k] - unit(cb.rank_, i);
      const int p = rd.root_index(prev);
      if (p < 0) continue;
      cb.recipes_[k] = {i, p, string_bottom(rd, unit(cb.rank_, i), prev) + 1};
      break;
    }
    if (cb.recipes_[k].simple < 0) throw InternalError("root without a simple predecessor");
  }

  // Structure constants from a faithful module: the smallest fundamental one.
  int best = 0;
  mpz_class best_dim = weyl_dimension(rd, rd.fundamental_weight(0));
  for (int i = 1; i < cb.rank_; ++i) {
    mpz_class d = weyl_dimension(rd, rd.fundamental_weight(i));
    if (d < best_dim) {
      best_dim = d;
      best = i;
    }
  }
  const ExplicitModule faithful = build_simple(cb, rd.fundamental_weight(best));
  std::map<Weight, std::vector<int>> by_weight;
  for (int a = 0; a < cb.dim_; ++a) by_weight[cb.weights_[a]].push_back(a);
  cb.table_.assign(static_cast<std::size_t>(cb.dim_) * cb.dim_, {});
  for (int a = 0; a < cb.dim_; ++a)
    for (int b = a + 1; b < cb.dim_; ++b) {
      const SparseMatrix c = commutator(faithful.action[a], faithful.action[b]);
      if (c.is_zero()) continue;
      auto it = by_weight.find(cb.weights_[a] + cb.weights_[b]);
      if (it == by_weight.end()) throw InternalError("bracket lands outside the algebra");
      std::vector<const SparseMatrix*> mats;
      for (int x : it->second) mats.push_back(&faithful.action[x]);
      auto coeff = solve_combination(mats, c);
      if (!coeff) throw InternalError("bracket not in the span of the basis");
      ChevalleyBasis::Vec v, w;
      for (std::size_t k = 0; k < mats.size(); ++k) {
        const mpq_class& q = (*coeff)[k];
        if (q == 0) continue;
        if (q.get_den() != 1) throw InternalError("non-integral structure constant");
        v[it->second[k]] = q.get_num().get_si();
        w[it->second[k]] = -q.get_num().get_si();
      }
      cb.table_[a * cb.dim_ + b] = std::move(v);
      cb.table_[b * cb.dim_ + a] = std::move(w);
    }
  return cb;
}

const ChevalleyBasis& cached_chevalley_basis(Series series, int rank) {
  static std::mutex mu;
  static std::map<std::pair<Series, int>, std::unique_ptr<ChevalleyBasis>> cache;
  const RootDatum& rd = cached_root_datum(series, rank);
  std::lock_guard lock(mu);
  auto& slot = cache[{series, rank}];
  if (!slot) slot = std::make_unique<ChevalleyBasis>(chevalley_basis(rd));
  return *slot;
}

namespace {

ChevalleyBasis::Vec bracket_vec(const ChevalleyBasis& cb, int a, const ChevalleyBasis::Vec& v) {
  ChevalleyBasis::Vec out;
  for (const auto& [k, c] : v)
    for (const auto& [t, d] : cb.bracket(a, k)) out[t] += c * d;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool jacobi_triple(const ChevalleyBasis& cb, int a, int b, int c) {
  ChevalleyBasis::Vec sum;
  for (const auto& v : {bracket_vec(cb, a, cb.bracket(b, c)), bracket_vec(cb, b, cb.bracket(c, a)),
                        bracket_vec(cb, c, cb.bracket(a, b))})
    for (const auto& [k, x] : v) sum[k] += x;
  for (const auto& [k, x] : sum)
    if (x != 0) return false;
  return true;
}

}  // namespace

bool check_jacobi(const ChevalleyBasis& cb, long samples) {
  const int d = cb.dim();
  if (samples <= 0) {
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        for (int c = b + 1; c < d; ++c)
          if (!jacobi_triple(cb, a, b, c)) return false;
    return true;
  }
  std::mt19937 gen(2024);
  std::uniform_int_distribution<int> pick(0, d - 1);
  for (long s = 0; s < samples; ++s)
    if (!jacobi_triple(cb, pick(gen), pick(gen), pick(gen))) return false;
  return true;
}

bool check_chevalley_relations(const ChevalleyBasis& cb) {
  const RootDatum& rd = cb.datum();
  const int r = rd.rank();
  std::vector<Weight> signed_roots;
  for (const auto& a : rd.positive_roots()) {
    signed_roots.push_back(a);
    signed_roots.push_back(-a);
  }
  for (const auto& a : signed_roots)
    for (const auto& b : signed_roots) {
      if (!is_signed_root(rd, a + b)) continue;
      const long n = cb.structure_constant(a, b);
      if (std::labs(n) != string_bottom(rd, a, b) + 1) return false;
    }
  for (int k = 0; k < cb.num_positive(); ++k) {
    const Weight& a_fw = rd.positive_roots_fw()[k];
    for (int i = 0; i < r; ++i) {
      ChevalleyBasis::Vec expect;
      if (a_fw[i] != 0) expect[cb.e(k)] = a_fw[i];
      if (cb.bracket(cb.h(i), cb.e(k)) != expect) return false;
    }
    // h_alpha = sum_i c_i h_i with c_i = alpha_i-coefficient * d_i / d_alpha
    const Weight& a = rd.positive_roots()[k];
    const long long d_alpha = rd.pair_root_weight(a, a_fw) / 2;
    ChevalleyBasis::Vec h_alpha;
    for (int i = 0; i < r; ++i) {
      const long long num = static_cast<long long>(a[i]) * rd.half_norms()[i];
      if (num % d_alpha != 0) return false;
      if (num != 0) h_alpha[cb.h(i)] = static_cast<long>(num / d_alpha);
    }
    if (cb.bracket(cb.e(k), cb.f(k)) != h_alpha) return false;
  }
  return true;
}

// ---------------------------------------------------------------- modules

ExplicitModule simple_module(const ChevalleyBasis& cb, const Weight& lambda) {
  const RootDatum& rd = cb.datum();
  if (lambda.rank() != rd.rank()) throw InvalidArgument("weight has wrong rank for " + rd.name());
  if (!lambda.is_dominant()) throw InvalidArgument("weight " + lambda.to_string() + " is not dominant");
  const mpz_class expected = weyl_dimension(rd, lambda);
  check_cap(expected, "L(" + lambda.to_string() + ")");
  ExplicitModule m = build_simple(cb, lambda);
  if (m.dim != expected) throw InternalError("simple module has the wrong dimension");
  return m;
}

ExplicitModule adjoint_module(const ChevalleyBasis& cb) {
  ExplicitModule m;
  m.cb = &cb;
  m.dim = cb.dim();
  for (int a = 0; a < cb.dim(); ++a) m.weights.push_back(cb.weight(a));
  m.highest_weight = cb.datum().highest_root();
  m.action.assign(cb.dim(), SparseMatrix(m.dim, m.dim));
  for (int x = 0; x < cb.dim(); ++x)
    for (int a = 0; a < cb.dim(); ++a)
      for (const auto& [c, v] : cb.bracket(x, a)) m.action[x].add(c, a, v);
  return m;
}

ExplicitModule trivial_module(const ChevalleyBasis& cb) {
  ExplicitModule m;
  m.cb = &cb;
  m.dim = 1;
  m.weights = {Weight(cb.rank())};
  m.highest_weight = Weight(cb.rank());
  m.action.assign(cb.dim(), SparseMatrix(1, 1));
  return m;
}

ExplicitModule symmetric_power_module(const ExplicitModule& src, int n) {
  if (n < 0) throw InvalidArgument("symmetric power degree must be nonnegative");
  const ChevalleyBasis& cb = *src.cb;
  if (n == 0) return trivial_module(cb);
  check_cap(binomial(src.dim + n - 1, n), "S^" + std::to_string(n) + " of a " + std::to_string(src.dim) + "-dim module");
  const auto mons = monomials(src.dim, n);
  std::map<std::vector<int>, int> index;
  for (std::size_t k = 0; k < mons.size(); ++k) index.emplace(mons[k], static_cast<int>(k));
  ExplicitModule m;
  m.cb = &cb;
  m.dim = static_cast<int>(mons.size());
  for (const auto& mon : mons) {
    Weight w(cb.rank());
    for (int a : mon) w += src.weights[a];
    m.weights.push_back(w);
  }
  m.highest_weight = n * src.highest_weight;
  m.action.assign(cb.dim(), SparseMatrix(m.dim, m.dim));
  for (int x = 0; x < cb.dim(); ++x) {
    const auto cols = columns(src.action[x]);
    for (int k = 0; k < m.dim; ++k) {
      const auto& mon = mons[k];
      for (int p = 0; p < n; ++p)
        for (const auto& [row, c] : cols[mon[p]]) {
          std::vector<int> t = mon;
          t[p] = row;
          std::sort(t.begin(), t.end());
          m.action[x].add(index.at(t), k, c);
        }
    }
  }
  return m;
}

ExplicitModule tensor_module(const ExplicitModule& a, const ExplicitModule& b) {
  const ChevalleyBasis& cb = *a.cb;
  check_cap(mpz_class(a.dim) * b.dim, "tensor product");
  ExplicitModule m;
  m.cb = &cb;
  m.dim = a.dim * b.dim;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) m.weights.push_back(a.weights[i] + b.weights[j]);
  m.highest_weight = a.highest_weight + b.highest_weight;
  m.action.assign(cb.dim(), SparseMatrix(m.dim, m.dim));
  for (int x = 0; x < cb.dim(); ++x) {
    auto& out = m.action[x];
    for (int i = 0; i < a.dim; ++i)
      for (const auto& [i2, c] : a.action[x].row(i))
        for (int j = 0; j < b.dim; ++j) out.add(i * b.dim + j, i2 * b.dim + j, c);
    for (int j = 0; j < b.dim; ++j)
      for (const auto& [j2, c] : b.action[x].row(j))
        for (int i = 0; i < a.dim; ++i) out.add(i * b.dim + j, i * b.dim + j2, c);
  }
  return m;
}

FormalCharacter module_character(const ExplicitModule& m) {
  FormalCharacter ch(m.cb->datum());
  for (const auto& w : m.weights) ch.add(w, 1);
  return ch;
}

bool check_module(const ExplicitModule& m, bool generators_only) {
  const ChevalleyBasis& cb = *m.cb;
  std::vector<int> idx;
  if (generators_only)
    idx = cb.generators();
  else
    for (int a = 0; a < cb.dim(); ++a) idx.push_back(a);
  for (std::size_t s = 0; s < idx.size(); ++s)
    for (std::size_t t = s + 1; t < idx.size(); ++t) {
      const int a = idx[s], b = idx[t];
      SparseMatrix expect(m.dim, m.dim);
      for (const auto& [c, v] : cb.bracket(a, b)) {
        SparseMatrix term = m.action[c];
        term *= mpq_class(v);
        expect += term;
      }
      if (!(commutator(m.action[a], m.action[b]) == expect)) return false;
    }
  return true;
}

// ---------------------------------------------------------------- D maps

DMapMatrix dmap_matrix(const ChevalleyBasis& cb, const ExplicitModule& v, int n) {
  if (n < 1) throw InvalidArgument("D^n needs n >= 1");
  check_cap(binomial(cb.dim() + n - 1, n) * v.dim, "S^" + std::to_string(n) + "(s) (x) V");
  const ExplicitModule adj = adjoint_module(cb);
  DMapMatrix d;
  d.n = n;
  d.lambda = v.highest_weight;
  d.source = tensor_module(symmetric_power_module(adj, n), v);
  d.target = tensor_module(symmetric_power_module(adj, n - 1), v);
  d.matrix = SparseMatrix(d.target.dim, d.source.dim);
  const auto src_mons = monomials(cb.dim(), n);
  const auto tgt_mons = monomials(cb.dim(), n - 1);
  std::map<std::vector<int>, int> tgt_index;
  for (std::size_t k = 0; k < tgt_mons.size(); ++k) tgt_index.emplace(tgt_mons[k], static_cast<int>(k));
  std::vector<std::vector<std::vector<std::pair<int, mpq_class>>>> vcols(cb.dim());
  for (int a = 0; a < cb.dim(); ++a) vcols[a] = columns(v.action[a]);
  for (std::size_t ms = 0; ms < src_mons.size(); ++ms) {
    const auto& mon = src_mons[ms];
    for (std::size_t p = 0; p < mon.size(); ++p) {
      if (p > 0 && mon[p] == mon[p - 1]) continue;
      const int a = mon[p];
      const long mult = std::count(mon.begin(), mon.end(), a);
      std::vector<int> rest = mon;
      rest.erase(rest.begin() + static_cast<long>(p));
      const int mt = tgt_index.at(rest);
      for (int u = 0; u < v.dim; ++u)
        for (const auto& [w, c] : vcols[a][u])
          d.matrix.add(mt * v.dim + w, static_cast<int>(ms) * v.dim + u, c * mult);
    }
  }
  return d;
}

DMapMatrix dmap_matrix(const ChevalleyBasis& cb, const Weight& lambda, int n) {
  if (n < 1) throw InvalidArgument("D^n needs n >= 1");
  check_cap(binomial(cb.dim() + n - 1, n) * weyl_dimension(cb.datum(), lambda), "S^" + std::to_string(n) + "(s) (x) L");
  return dmap_matrix(cb, simple_module(cb, lambda), n);
}

bool is_equivariant(const DMapMatrix& d) {
  for (int g : d.source.cb->generators())
    if (!(d.matrix * d.source.action[g] == d.target.action[g] * d.matrix)) return false;
  return true;
}

namespace {

std::map<Weight, std::vector<int>> group_by_weight(const ExplicitModule& m, bool dominant_only) {
  std::map<Weight, std::vector<int>> out;
  for (int k = 0; k < m.dim; ++k)
    if (!dominant_only || m.weights[k].is_dominant()) out[m.weights[k]].push_back(k);
  return out;
}

}  // namespace

long dmap_rank(const DMapMatrix& d) {
  const auto src = group_by_weight(d.source, false);
  const auto tgt = group_by_weight(d.target, false);
  long total = 0;
  for (const auto& [w, cols] : src)
    if (auto it = tgt.find(w); it != tgt.end()) total += rank_of_block(d.matrix, it->second, cols);
  return total;
}

KerCoker ker_coker_multiplicities(const DMapMatrix& d) {
  const RootDatum& rd = d.source.cb->datum();
  const auto src = group_by_weight(d.source, true);
  const auto tgt = group_by_weight(d.target, true);
  std::set<Weight> all;
  for (const auto& [w, v] : src) all.insert(w);
  for (const auto& [w, v] : tgt) all.insert(w);
  FormalCharacter ker(rd), coker(rd);
  static const std::vector<int> none;
  for (const auto& w : all) {
    auto si = src.find(w);
    auto ti = tgt.find(w);
    const auto& cols = si == src.end() ? none : si->second;
    const auto& rows = ti == tgt.end() ? none : ti->second;
    const long rk = rank_of_block(d.matrix, rows, cols);
    ker.add(w, static_cast<long>(cols.size()) - rk);
    coker.add(w, static_cast<long>(rows.size()) - rk);
  }
  return {decompose(ker), decompose(coker)};
}

}  // namespace takiff
