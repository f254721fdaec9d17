#include "takiff/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "takiff/config.hpp"
#include "takiff/errors.hpp"

namespace takiff {

int SuperMatrixRep::even_dim() const {
  return static_cast<int>(std::count_if(basis.begin(), basis.end(), [](const SuperMatrix& x) { return !x.odd; }));
}
int SuperMatrixRep::odd_dim() const { return static_cast<int>(basis.size()) - even_dim(); }

namespace {

void require_n(int n) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
}
void require_r(int r) {
  if (r < 1) throw InvalidArgument("r must be at least 1");
}

// Traceless n x n basis: E_ij (i != j), then E_ii - E_{i+1,i+1}.
std::vector<std::pair<std::string, std::vector<std::tuple<int, int, int>>>> traceless_basis(int n) {
  std::vector<std::pair<std::string, std::vector<std::tuple<int, int, int>>>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back({"E" + std::to_string(i + 1) + std::to_string(j + 1), {{i, j, 1}}});
  for (int i = 0; i + 1 < n; ++i)
    out.push_back({"H" + std::to_string(i + 1), {{i, i, 1}, {i + 1, i + 1, -1}}});
  return out;
}

SuperMatrix diag_block(int n, const std::vector<std::tuple<int, int, int>>& a, const std::string& label) {
  SuperMatrix x{SparseMatrix(2 * n, 2 * n), false, label};
  for (auto [i, j, v] : a) {
    x.m.add(i, j, v);
    x.m.add(i + n, j + n, v);
  }
  return x;
}

SuperMatrix lower_block(int n, const std::vector<std::tuple<int, int, int>>& c, const std::string& label) {
  SuperMatrix x{SparseMatrix(2 * n, 2 * n), true, label};
  for (auto [i, j, v] : c) x.m.add(i + n, j, v);
  return x;
}

SuperMatrix d_element(int n) {
  SuperMatrix x{SparseMatrix(2 * n, 2 * n), false, "d"};
  for (int i = 0; i < n; ++i) x.m.add(i + n, i + n, 1);
  return x;
}

SuperMatrix b_element(int n) {
  SuperMatrix x{SparseMatrix(2 * n, 2 * n), true, "b"};
  for (int i = 0; i < n; ++i) x.m.add(i, i + n, 1);
  return x;
}

SuperMatrix elementary(int n, int i, int j) {
  SuperMatrix x{SparseMatrix(2 * n, 2 * n), (i < n) != (j < n), "E" + std::to_string(i + 1) + "," + std::to_string(j + 1)};
  x.m.add(i, j, 1);
  return x;
}

long ipow(long b, int e) {
  long out = 1;
  while (e-- > 0) out *= b;
  return out;
}

long factorial(int r) {
  long f = 1;
  for (int k = 2; k <= r; ++k) f *= k;
  return f;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b.get_si();
}

// Column lists of an operator on the tensor space: col[s] = (p, v) with X[p][s] = v.
using Columns = std::vector<std::vector<std::pair<long, long>>>;

Columns tensor_columns(const TensorSpace& t, const SuperMatrix& x) {
  const int m = 2 * t.n;
  std::vector<std::vector<std::pair<int, long>>> xcol(m);
  for (int p = 0; p < m; ++p)
    for (const auto& [c, v] : x.m.row(p)) xcol[c].push_back({p, v.get_num().get_si()});
  Columns out(t.dim);
  for (long s = 0; s < t.dim; ++s) {
    const auto d = t.digits(s);
    int left = 0;
    long place = t.dim;
    for (int k = 0; k < t.r; ++k) {
      place /= m;
      const long sign = (x.odd && left % 2) ? -1 : 1;
      for (auto [p, v] : xcol[d[k]]) out[s].push_back({s + (p - d[k]) * place, sign * v});
      if (d[k] >= t.n) ++left;
    }
  }
  return out;
}

// Inputs are integral matrices; keep that explicit.
void require_integral(const SuperMatrix& x) {
  for (int p = 0; p < x.m.rows(); ++p)
    for (const auto& [c, v] : x.m.row(p))
      if (v.get_den() != 1) throw InvalidArgument("non-integral generator");
}

}  // namespace

SuperMatrixRep realize_g(int n) {
  require_n(n);
  SuperMatrixRep rep{n, {}};
  for (const auto& [name, a] : traceless_basis(n)) rep.basis.push_back(diag_block(n, a, "A" + name));
  rep.basis.push_back(d_element(n));
  for (const auto& [name, c] : traceless_basis(n)) rep.basis.push_back(lower_block(n, c, "C" + name));
  rep.basis.push_back(b_element(n));
  return rep;
}

SuperMatrixRep realize_gl(int n) {
  require_n(n);
  SuperMatrixRep rep{n, {}};
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) rep.basis.push_back(elementary(n, i, j));
  return rep;
}

SuperMatrixRep generators_g(int n) {
  require_n(n);
  SuperMatrixRep rep{n, {}};
  for (int i = 0; i + 1 < n; ++i) {
    const std::string k = std::to_string(i + 1);
    rep.basis.push_back(diag_block(n, {{i, i + 1, 1}}, "e" + k));
    rep.basis.push_back(diag_block(n, {{i + 1, i, 1}}, "f" + k));
  }
  rep.basis.push_back(d_element(n));
  rep.basis.push_back(b_element(n));
  // s (x) xi is irreducible under s, so one element generates it
  rep.basis.push_back(lower_block(n, {{n - 1, 0, 1}}, "C" + std::to_string(n) + "1"));
  return rep;
}

SuperMatrixRep generators_gl(int n) {
  require_n(n);
  SuperMatrixRep rep{n, {}};
  for (int i = 0; i < 2 * n; ++i) rep.basis.push_back(elementary(n, i, i));
  for (int i = 0; i + 1 < 2 * n; ++i) {
    rep.basis.push_back(elementary(n, i, i + 1));
    rep.basis.push_back(elementary(n, i + 1, i));
  }
  return rep;
}

SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y) {
  SuperMatrix out{x.m * y.m, x.odd != y.odd, "[" + x.label + "," + y.label + "]"};
  if (x.odd && y.odd)
    out.m += y.m * x.m;
  else
    out.m -= y.m * x.m;
  return out;
}

bool fits_block_pattern(int n, const SparseMatrix& m) {
  if (m.rows() != 2 * n || m.cols() != 2 * n) return false;
  mpq_class tr_a = 0, tr_c = 0;
  const mpq_class b = m.at(0, n);
  const mpq_class d = m.at(n, n) - m.at(0, 0);
  for (int i = 0; i < n; ++i) {
    tr_a += m.at(i, i);
    tr_c += m.at(i + n, i);
    for (int j = 0; j < n; ++j) {
      if (m.at(i + n, j + n) != m.at(i, j) + (i == j ? d : mpq_class(0))) return false;
      if (m.at(i, j + n) != (i == j ? b : mpq_class(0))) return false;
    }
  }
  return tr_a == 0 && tr_c == 0;
}

bool check_bracket_closure(const SuperMatrixRep& rep) {
  std::vector<const SparseMatrix*> mats;
  for (const auto& x : rep.basis) mats.push_back(&x.m);
  for (const auto& x : rep.basis)
    for (const auto& y : rep.basis) {
      const SuperMatrix z = supercommutator(x, y);
      const auto c = solve_combination(mats, z.m);
      if (!c) return false;
      // a bracket of given parity only involves basis elements of that parity
      for (std::size_t k = 0; k < c->size(); ++k)
        if ((*c)[k] != 0 && rep.basis[k].odd != z.odd) return false;
    }
  return true;
}

std::vector<int> TensorSpace::digits(long idx) const {
  std::vector<int> d(r);
  for (int k = r - 1; k >= 0; --k) {
    d[k] = static_cast<int>(idx % (2 * n));
    idx /= 2 * n;
  }
  return d;
}

long TensorSpace::index(const std::vector<int>& d) const {
  long idx = 0;
  for (int k = 0; k < r; ++k) idx = idx * (2 * n) + d[k];
  return idx;
}

int TensorSpace::odd_count(long idx) const {
  int c = 0;
  for (int k = 0; k < r; ++k, idx /= 2 * n)
    if (idx % (2 * n) >= n) ++c;
  return c;
}

TensorSpace make_tensor_space(int n, int r) {
  require_n(n);
  require_r(r);
  const std::size_t cap = tensor_cap();
  long dim = 1;
  for (int k = 0; k < r; ++k) {
    dim *= 2 * n;
    if (static_cast<std::size_t>(dim) > cap)
      throw ResourceLimit("tensor space (" + std::to_string(2 * n) + ")^" + std::to_string(r) +
                          " exceeds the cap " + std::to_string(cap) + " (TAKIFF_TENSOR_CAP)");
  }
  return {n, r, dim};
}

SparseMatrix tensor_operator(const TensorSpace& t, const SuperMatrix& x) {
  const Columns cols = tensor_columns(t, x);
  SparseMatrix out(static_cast<int>(t.dim), static_cast<int>(t.dim));
  for (long s = 0; s < t.dim; ++s)
    for (auto [p, v] : cols[s]) out.add(static_cast<int>(p), static_cast<int>(s), v);
  return out;
}

std::vector<SparseMatrix> tensor_action(const SuperMatrixRep& rep, int r) {
  const TensorSpace t = make_tensor_space(rep.n, r);
  std::vector<SparseMatrix> out;
  for (const auto& x : rep.basis) out.push_back(tensor_operator(t, x));
  return out;
}

SparseMatrix permutation_operator(const TensorSpace& t, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != t.r) throw InvalidArgument("permutation has wrong length");
  SparseMatrix out(static_cast<int>(t.dim), static_cast<int>(t.dim));
  std::vector<int> e(t.r);
  for (long s = 0; s < t.dim; ++s) {
    const auto d = t.digits(s);
    int sign = 1;
    for (int j = 0; j < t.r; ++j) {
      e[j] = d[perm[j]];
      for (int k = j + 1; k < t.r; ++k)
        if (perm[j] > perm[k] && d[perm[j]] >= t.n && d[perm[k]] >= t.n) sign = -sign;
    }
    out.add(static_cast<int>(t.index(e)), static_cast<int>(s), sign);
  }
  return out;
}

std::vector<SparseMatrix> sym_action(int n, int r) {
  const TensorSpace t = make_tensor_space(n, r);
  std::vector<SparseMatrix> out;
  for (int k = 0; k + 1 < r; ++k) {
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[k], perm[k + 1]);
    out.push_back(permutation_operator(t, perm));
  }
  return out;
}

CommutantDims commutant_dims(int n, int r, Algebra algebra) {
  const TensorSpace t = make_tensor_space(n, r);
  const SuperMatrixRep gens = algebra == Algebra::G ? generators_g(n) : generators_gl(n);
  // T commutes with the Cartan: for g it preserves the residues of the
  // digits mod n and the number of odd factors, for gl the digit content.
  std::map<std::vector<int>, int> key_id;
  std::vector<int> blk(t.dim);
  std::vector<long> pos(t.dim);
  std::vector<std::vector<long>> members;
  for (long s = 0; s < t.dim; ++s) {
    std::vector<int> key(2 * n, 0);
    for (int dg : t.digits(s)) {
      if (algebra == Algebra::GL) {
        ++key[dg];
      } else {
        ++key[dg % n];
        if (dg >= n) ++key[n];
      }
    }
    auto [it, fresh] = key_id.try_emplace(key, static_cast<int>(members.size()));
    if (fresh) members.emplace_back();
    blk[s] = it->second;
    pos[s] = static_cast<long>(members[it->second].size());
    members[it->second].push_back(s);
  }
  std::vector<Columns> cols;
  for (const auto& x : gens.basis) {
    require_integral(x);
    cols.push_back(tensor_columns(t, x));
  }

  // Every block has a fixed number of odd factors, so each unknown T[s][q]
  // is even: the odd part of the commutant is zero and only the even
  // system needs solving.
  CommutantDims out;
  std::vector<long> off(members.size() + 1, 0);
  for (std::size_t b = 0; b < members.size(); ++b) {
    const long sz = static_cast<long>(members[b].size());
    off[b + 1] = off[b] + sz * sz;
  }
  const long unknowns = off.back();
  if (unknowns > (1L << 30)) throw ResourceLimit("commutant system too large");
  auto uid = [&](long s, long q) {
    return static_cast<int>(off[blk[s]] + pos[s] * static_cast<long>(members[blk[s]].size()) + pos[q]);
  };
  SparseIntEchelon ech;
  for (std::size_t g = 0; g < gens.basis.size(); ++g) {
    const Columns& xc = cols[g];
    for (long q = 0; q < t.dim; ++q) {
      std::map<long, SparseIntEchelon::Row> rows;
      for (long s : members[blk[q]])
        for (auto [p, v] : xc[s]) rows[p][uid(s, q)] += v;
      for (auto [sp, v] : xc[q])
        for (long p : members[blk[sp]]) rows[p][uid(p, sp)] -= v;
      for (auto& [p, row] : rows) {
        std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
        if (!row.empty()) ech.add(std::move(row));
      }
    }
  }
  out.even = unknowns - ech.rank();
  return out;
}

long commutant_dim(int n, int r, Algebra algebra) { return commutant_dims(n, r, algebra).total(); }

long phi_image_dim(int n, int r) {
  const TensorSpace t = make_tensor_space(n, r);
  if (r > 12 || static_cast<double>(factorial(r)) * static_cast<double>(t.dim) > 2.0e6)
    throw ResourceLimit("r! * dim exceeds 2*10^6 for the permutation span");
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  SparseIntEchelon ech;
  do {
    const SparseMatrix op = permutation_operator(t, perm);
    SparseIntEchelon::Row row;
    for (long p = 0; p < t.dim; ++p)
      for (const auto& [c, v] : op.row(static_cast<int>(p))) row[static_cast<int>(p * t.dim + c)] = v.get_num();
    ech.add(std::move(row));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return ech.rank();
}

ThmITReport thmIT_verdict(int n, int r) {
  ThmITReport rep;
  rep.n = n;
  rep.r = r;
  rep.factorial = factorial(r);
  rep.commutant = commutant_dim(n, r, Algebra::G);
  rep.image = phi_image_dim(n, r);
  rep.injective = rep.image == rep.factorial;
  rep.surjective = rep.commutant == rep.image;
  if (rep.image > rep.commutant) rep.violations.push_back("permutation image larger than the commutant");
  if ((r < n || (r == n && n >= 3)) && !rep.surjective)
    rep.violations.push_back("expected an isomorphism for r < n or r = n >= 3");
  if (r == 2 && n == 2 && rep.surjective) rep.violations.push_back("expected non-surjective for r = n = 2");
  if (r > 2 * n - 2 && rep.surjective) rep.violations.push_back("expected non-surjective for r > 2n - 2");
  if (rep.injective != (r < (n + 1) * (n + 1))) rep.violations.push_back("injectivity should hold iff r < (n+1)^2");
  return rep;
}

std::vector<std::vector<int>> partitions(int r) {
  if (r < 0) throw InvalidArgument("negative partition size");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, r, r);
  return out;
}

long specht_dimension(const std::vector<int>& lambda) {
  int r = 0;
  for (int p : lambda) r += p;
  mpz_class num = 1, den = 1;
  for (int k = 2; k <= r; ++k) num *= k;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) ++below;
      den *= lambda[i] - j + below;
    }
  return mpz_class(num / den).get_si();
}

long gl_commutant_prediction(int n, int r) {
  long sum = 0;
  for (const auto& lam : partitions(r)) {
    const int part = static_cast<int>(lam.size()) > n ? lam[n] : 0;
    if (part > n) continue;
    const long f = specht_dimension(lam);
    sum += f * f;
  }
  return sum;
}

std::vector<long> super_exterior_graded_dims(int n, int r) {
  const TensorSpace t = make_tensor_space(n, r);
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  SparseMatrix anti(static_cast<int>(t.dim), static_cast<int>(t.dim));
  do {
    int inv = 0;
    for (int j = 0; j < r; ++j)
      for (int k = j + 1; k < r; ++k)
        if (perm[j] > perm[k]) ++inv;
    SparseMatrix op = permutation_operator(t, perm);
    if (inv % 2) op *= -1;
    anti += op;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::vector<int>> by_odd(r + 1);
  for (long s = 0; s < t.dim; ++s) by_odd[t.odd_count(s)].push_back(static_cast<int>(s));
  std::vector<long> out;
  for (int k = 0; k <= r; ++k) out.push_back(rank_of_block(anti, by_odd[k], by_odd[k]));
  return out;
}

long super_exterior_prediction(int n, int r, int k) { return binom(n, r - k) * binom(n + k - 1, k); }

}  // namespace takiff
