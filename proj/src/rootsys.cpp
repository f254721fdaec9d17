#include "takiff/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "takiff/config.hpp"
#include "takiff/errors.hpp"

namespace takiff {

namespace {
std::size_t env_cap(const char* name, std::size_t fallback) {
  if (const char* env = std::getenv(name)) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}
}  // namespace

std::size_t dim_cap() { return env_cap("TAKIFF_DIM_CAP", kDefaultDimCap); }
std::size_t tensor_cap() { return env_cap("TAKIFF_TENSOR_CAP", kDefaultTensorCap); }

// ---------------------------------------------------------------- Weight

Weight::Weight(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank) throw InvalidArgument("weight rank out of range");
}

Weight::Weight(std::initializer_list<int> coords)
    : Weight(std::span<const int>(coords.begin(), coords.size())) {}

Weight::Weight(std::span<const int> coords) : Weight(static_cast<int>(coords.size())) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x >= 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight r(rank_);
  for (int i = 0; i < rank_; ++i) r.c_[i] = -c_[i];
  return r;
}

Weight operator*(int k, Weight w) {
  for (int i = 0; i < w.rank_; ++i) w.c_[i] *= k;
  return w;
}

std::string Weight::to_string() const {
  std::string s;
  for (int i = 0; i < rank_; ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s;
}

std::vector<int> Weight::to_vector() const { return {c_.begin(), c_.begin() + rank_}; }

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.rank());
  for (int i = 0; i < w.rank(); ++i) h = h * 1000003u ^ static_cast<std::size_t>(w[i] + 0x9e3779b9);
  return h;
}

char series_letter(Series s) { return static_cast<char>('A' + static_cast<int>(s)); }

Series parse_series(char c) {
  if (c >= 'a' && c <= 'g') c = static_cast<char>(c - 'a' + 'A');
  if (c < 'A' || c > 'G') throw InvalidArgument(std::string("unknown Lie type '") + c + "'");
  return static_cast<Series>(c - 'A');
}

// ---------------------------------------------------------------- RootDatum

namespace {

// Gram matrix (alpha_i, alpha_j) with short roots of squared length 2.
std::vector<std::vector<int>> simple_gram(Series s, int r) {
  std::vector<std::vector<int>> g(r, std::vector<int>(r, 0));
  auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
  switch (s) {
    case Series::A:
      for (int i = 0; i < r; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -1);
      break;
    case Series::B:
      for (int i = 0; i < r; ++i) g[i][i] = 4;
      g[r - 1][r - 1] = 2;
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -2);
      break;
    case Series::C:
      for (int i = 0; i < r; ++i) g[i][i] = 2;
      g[r - 1][r - 1] = 4;
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1);
      link(r - 2, r - 1, -2);
      break;
    case Series::D:
      for (int i = 0; i < r; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1);
      link(r - 3, r - 1, -1);
      break;
    case Series::E:
      for (int i = 0; i < r; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < r; ++i) link(i, i + 1, -1);
      break;
    case Series::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Series::G:
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

bool valid_type(Series s, int r) {
  switch (s) {
    case Series::A: return r >= 1 && r <= Weight::kMaxRank;
    case Series::B: return r >= 2 && r <= Weight::kMaxRank;
    case Series::C: return r >= 2 && r <= Weight::kMaxRank;
    case Series::D: return r >= 4 && r <= Weight::kMaxRank;
    case Series::E: return r >= 6 && r <= 8;
    case Series::F: return r == 4;
    case Series::G: return r == 2;
  }
  return false;
}

// Exact inverse of a small integer matrix: returns (det, adjugate) with
// adj = det * M^{-1}.
std::pair<long long, std::vector<std::vector<long long>>> det_adjugate(
    const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  mpq_class det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InternalError("singular Cartan matrix");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    mpq_class inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  if (det.get_den() != 1) throw InternalError("non-integral determinant");
  long d = det.get_num().get_si();
  std::vector<std::vector<long long>> adj(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpq_class v = a[i][n + j] * d;
      if (v.get_den() != 1) throw InternalError("non-integral adjugate");
      adj[i][j] = v.get_num().get_si();
    }
  return {d, adj};
}

int height(const Weight& simple_coords) {
  int h = 0;
  for (int i = 0; i < simple_coords.rank(); ++i) h += simple_coords[i];
  return h;
}

}  // namespace

RootDatum build_root_datum(Series series, int rank) {
  if (!valid_type(series, rank))
    throw InvalidArgument(std::string("no simple Lie algebra of type ") + series_letter(series) +
                          std::to_string(rank));
  RootDatum rd;
  rd.series_ = series;
  rd.rank_ = rank;
  rd.gram_ = simple_gram(series, rank);
  rd.cartan_.assign(rank, std::vector<int>(rank));
  rd.half_norm_.resize(rank);
  for (int i = 0; i < rank; ++i) {
    rd.half_norm_[i] = rd.gram_[i][i] / 2;
    for (int j = 0; j < rank; ++j) rd.cartan_[i][j] = 2 * rd.gram_[i][j] / rd.gram_[i][i];
  }
  auto [d, adj] = det_adjugate(rd.cartan_);
  rd.det_ = static_cast<int>(d);
  rd.adj_ = std::move(adj);

  // Positive roots by closure: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0
  // where p is the length of the alpha_i-string below beta.
  std::vector<Weight> roots;
  std::set<Weight> seen;
  for (int i = 0; i < rank; ++i) {
    Weight a(rank);
    a[i] = 1;
    roots.push_back(a);
    seen.insert(a);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const Weight beta = roots[k];
    for (int i = 0; i < rank; ++i) {
      int pairing = 0;
      for (int j = 0; j < rank; ++j) pairing += rd.cartan_[i][j] * beta[j];
      int p = 0;
      Weight down = beta;
      while (true) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++p;
      }
      if (p - pairing > 0) {
        Weight up = beta;
        up[i] += 1;
        if (seen.insert(up).second) roots.push_back(up);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Weight& a, const Weight& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  rd.pos_roots_ = roots;
  for (const auto& r : roots) {
    rd.pos_roots_fw_.push_back(rd.to_fundamental(r));
    // (r, r)/2 with short roots 1.
    long long n = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) n += static_cast<long long>(r[i]) * r[j] * rd.gram_[i][j];
    rd.root_half_norm_.push_back(static_cast<int>(n / 2));
  }
  rd.highest_root_fw_ = rd.pos_roots_fw_.back();
  const int top = height(roots.back());
  rd.coxeter_ = top + 1;

  // Exponent k occurs (#roots of height k) - (#roots of height k+1) times.
  std::vector<int> count(top + 2, 0);
  for (const auto& r : roots) ++count[height(r)];
  for (int k = 1; k <= top; ++k)
    for (int m = 0; m < count[k] - count[k + 1]; ++m) rd.exponents_.push_back(k);

  // Construction invariants.
  const int npos = static_cast<int>(roots.size());
  if (2 * npos != rank * rd.coxeter_) throw InternalError("|Phi+| != r*h/2");
  if (std::accumulate(rd.exponents_.begin(), rd.exponents_.end(), 0) != npos)
    throw InternalError("sum of exponents != |Phi+|");
  if (static_cast<int>(rd.exponents_.size()) != rank) throw InternalError("wrong number of exponents");
  if (rd.det_ < 1) throw InternalError("Cartan determinant < 1");
  return rd;
}

const RootDatum& cached_root_datum(Series series, int rank) {
  static std::mutex mu;
  static std::map<std::pair<Series, int>, std::unique_ptr<RootDatum>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{series, rank}];
  if (!slot) slot = std::make_unique<RootDatum>(build_root_datum(series, rank));
  return *slot;
}

std::string RootDatum::name() const { return std::string(1, series_letter(series_)) + std::to_string(rank_); }

int RootDatum::root_index(const Weight& simple_coords) const {
  auto it = std::find(pos_roots_.begin(), pos_roots_.end(), simple_coords);
  return it == pos_roots_.end() ? -1 : static_cast<int>(it - pos_roots_.begin());
}

Weight RootDatum::fundamental_weight(int i) const {
  Weight w(rank_);
  w[i] = 1;
  return w;
}

Weight RootDatum::rho() const {
  Weight w(rank_);
  for (int i = 0; i < rank_; ++i) w[i] = 1;
  return w;
}

mpz_class RootDatum::weyl_group_order() const {
  mpz_class w = 1;
  for (int e : exponents_) w *= e + 1;
  return w;
}

std::vector<long long> RootDatum::scaled_simple_coords(const Weight& w) const {
  std::vector<long long> c(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) c[i] += adj_[i][j] * w[j];
  return c;
}

long long RootDatum::scaled_height(const Weight& w) const {
  long long h = 0;
  for (long long x : scaled_simple_coords(w)) h += x;
  return h;
}

Weight RootDatum::to_fundamental(const Weight& simple_coords) const {
  Weight w(rank_);
  for (int i = 0; i < rank_; ++i) {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * simple_coords[j];
    w[i] = s;
  }
  return w;
}

long long RootDatum::pair_root_weight(const Weight& root_simple, const Weight& w) const {
  long long s = 0;
  for (int k = 0; k < rank_; ++k) s += static_cast<long long>(root_simple[k]) * half_norm_[k] * w[k];
  return s;
}

long long RootDatum::scaled_form(const Weight& a, const Weight& b) const {
  auto c = scaled_simple_coords(a);
  long long s = 0;
  for (int j = 0; j < rank_; ++j) s += c[j] * half_norm_[j] * b[j];
  return s;
}

int RootDatum::coroot_pairing(const Weight& w, int root) const {
  long long s = pair_root_weight(pos_roots_[root], w);
  return static_cast<int>(s / root_half_norm_[root]);
}

long long cartan_determinant(const RootDatum& rd) { return rd.det(); }

// ---------------------------------------------------------------- Weyl group

DominantResult to_dominant(const RootDatum& rd, Weight w) {
  int sign = 1;
  while (true) {
    int i = 0;
    while (i < rd.rank() && w[i] >= 0) ++i;
    if (i == rd.rank()) break;
    const int k = w[i];
    w -= k * rd.simple_root_fw(i);
    sign = -sign;
  }
  for (int i = 0; i < rd.rank(); ++i)
    if (w[i] == 0) return {w, 0};
  return {w, sign};
}

bool dominant(const RootDatum& rd, const Weight& w) {
  (void)rd;
  return w.is_dominant();
}

std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& w) {
  std::unordered_set<Weight, WeightHash> seen{w};
  std::vector<Weight> queue{w};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Weight cur = queue[k];
    for (int i = 0; i < rd.rank(); ++i) {
      if (cur[i] == 0) continue;
      Weight nxt = cur - cur[i] * rd.simple_root_fw(i);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

Weight longest_element_negate(const RootDatum& rd, const Weight& w) { return to_dominant(rd, -w).weight; }

bool in_root_lattice(const RootDatum& rd, const Weight& w) {
  for (long long c : rd.scaled_simple_coords(w))
    if (c % rd.det() != 0) return false;
  return true;
}

std::vector<Weight> minuscule_weights(const RootDatum& rd) {
  std::vector<Weight> out{Weight(rd.rank())};
  for (int i = 0; i < rd.rank(); ++i) {
    Weight w = rd.fundamental_weight(i);
    bool ok = true;
    for (int r = 0; r < rd.num_positive_roots() && ok; ++r) ok = rd.coroot_pairing(w, r) <= 1;
    if (ok) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Weight minuscule_representative(const RootDatum& rd, const Weight& w) {
  for (const auto& nu : minuscule_weights(rd))
    if (in_root_lattice(rd, w - nu)) return nu;
  throw InternalError("no minuscule representative for " + w.to_string());
}

std::vector<Weight> dominant_weights_below(const RootDatum& rd, const Weight& lambda) {
  if (!lambda.is_dominant()) throw InvalidArgument("weight " + lambda.to_string() + " is not dominant");
  // Covers in the dominance order on dominant weights are differences of
  // positive roots, so the BFS reaches every dominant weight below lambda.
  std::map<Weight, long long> depth{{lambda, 0}};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (const auto& a : rd.positive_roots_fw()) {
      Weight nxt = cur - a;
      if (!nxt.is_dominant() || depth.count(nxt)) continue;
      depth[nxt] = (rd.scaled_height(lambda - nxt)) / rd.det();
      queue.push_back(nxt);
    }
  }
  std::vector<Weight> out;
  out.reserve(depth.size());
  for (const auto& [w, d] : depth) out.push_back(w);
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    if (depth[a] != depth[b]) return depth[a] < depth[b];
    return a > b;
  });
  return out;
}

mpz_class weyl_dimension(const RootDatum& rd, const Weight& lambda) {
  if (!lambda.is_dominant()) throw InvalidArgument("weight " + lambda.to_string() + " is not dominant");
  const Weight shifted = lambda + rd.rho();
  mpz_class num = 1, den = 1;
  for (const auto& a : rd.positive_roots()) {
    num *= static_cast<long>(rd.pair_root_weight(a, shifted));
    den *= static_cast<long>(rd.pair_root_weight(a, rd.rho()));
  }
  return num / den;
}

}  // namespace takiff
