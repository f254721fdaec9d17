#include "takiff/linalg.hpp"

#include <numeric>
#include <set>

#include "takiff/errors.hpp"

namespace takiff {

mpq_class SparseMatrix::at(int r, int c) const {
  auto it = data_[r].find(c);
  return it == data_[r].end() ? mpq_class(0) : it->second;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool SparseMatrix::is_zero() const {
  for (const auto& r : data_)
    if (!r.empty()) return false;
  return true;
}

void SparseMatrix::add(int r, int c, const mpq_class& v) {
  if (v == 0) return;
  auto [it, inserted] = data_[r].try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) data_[r].erase(it);
  }
}

void SparseMatrix::set_row(int r, Row row) {
  std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
  data_[r] = std::move(row);
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
  if (o.rows() != rows() || o.cols_ != cols_) throw InternalError("matrix shape mismatch");
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, v] : o.data_[r]) add(r, c, v);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o) {
  if (o.rows() != rows() || o.cols_ != cols_) throw InternalError("matrix shape mismatch");
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, v] : o.data_[r]) add(r, c, -v);
  return *this;
}

SparseMatrix& SparseMatrix::operator*=(const mpq_class& k) {
  if (k == 0) {
    for (auto& r : data_) r.clear();
    return *this;
  }
  for (auto& r : data_)
    for (auto& [c, v] : r) v *= k;
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows()) throw InternalError("matrix shape mismatch in product");
  SparseMatrix out(a.rows(), b.cols_);
  for (int r = 0; r < a.rows(); ++r) {
    SparseMatrix::Row acc;
    for (const auto& [k, av] : a.data_[r])
      for (const auto& [c, bv] : b.data_[k]) acc[c] += av * bv;
    out.set_row(r, std::move(acc));
  }
  return out;
}

QVector SparseMatrix::apply(const QVector& v) const {
  QVector out(rows());
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, x] : data_[r]) out[r] += x * v[c];
  return out;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.add(i, i, 1);
  return m;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------- ranks

long bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 0;
  const std::size_t m = a[0].size();
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = row + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < m; ++j) {
        a[i][j] = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return static_cast<long>(row);
}

namespace {

mpz_class row_denominator_lcm(const SparseMatrix::Row& r) {
  mpz_class l = 1;
  for (const auto& [c, v] : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

}  // namespace

long rank_of_block(const SparseMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.empty() || cols.empty()) return 0;
  std::map<int, std::size_t> col_pos;
  for (std::size_t j = 0; j < cols.size(); ++j) col_pos[cols[j]] = j;
  std::vector<std::vector<mpz_class>> a;
  a.reserve(rows.size());
  for (int r : rows) {
    const auto& src = m.row(r);
    const mpz_class l = row_denominator_lcm(src);
    std::vector<mpz_class> dense(cols.size());
    bool any = false;
    for (const auto& [c, v] : src) {
      auto it = col_pos.find(c);
      if (it == col_pos.end()) continue;
      mpq_class scaled = v * l;
      dense[it->second] = scaled.get_num();
      any = true;
    }
    if (any) a.push_back(std::move(dense));
  }
  return bareiss_rank(std::move(a));
}

long rank(const SparseMatrix& m) {
  SparseIntEchelon e;
  for (int r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) e.add(primitive_integer_row(m.row(r)));
  return e.rank();
}

SparseIntEchelon::Row primitive_integer_row(const SparseMatrix::Row& r) {
  const mpz_class l = row_denominator_lcm(r);
  SparseIntEchelon::Row out;
  mpz_class g = 0;
  for (const auto& [c, v] : r) {
    mpq_class s = v * l;
    out[c] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& [c, v] : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

bool SparseIntEchelon::add(Row row) {
  while (!row.empty()) {
    const int lead = row.begin()->first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      mpz_class g = 0;
      for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g > 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    const Row& p = it->second;
    mpz_class pa = p.begin()->second, ra = row.begin()->second;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), pa.get_mpz_t(), ra.get_mpz_t());
    pa /= g;
    ra /= g;
    // row <- pa*row - ra*p
    if (pa != 1)
      for (auto& [c, v] : row) v *= pa;
    for (const auto& [c, v] : p) {
      auto [jt, inserted] = row.try_emplace(c, 0);
      jt->second -= ra * v;
      if (jt->second == 0) row.erase(jt);
    }
    mpz_class content = 0;
    for (const auto& [c, v] : row) {
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
      if (content == 1) break;
    }
    if (content > 1)
      for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  }
  return false;
}

// ---------------------------------------------------------------- incremental basis

QVector IncrementalBasis::reduce(QVector& v) const {
  QVector coeff(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto& s = rows_[k];
    if (v[s.pivot] == 0) continue;
    mpq_class c = v[s.pivot] / s.vec[s.pivot];
    coeff[k] = c;
    for (std::size_t j = 0; j < length_; ++j)
      if (s.vec[j] != 0) v[j] -= c * s.vec[j];
  }
  return coeff;
}

std::optional<int> IncrementalBasis::add(const QVector& v_in) {
  if (v_in.size() != length_) throw InternalError("vector length mismatch");
  QVector v = v_in;
  QVector coeff = reduce(v);
  int pivot = -1;
  for (std::size_t j = 0; j < length_; ++j)
    if (v[j] != 0) {
      pivot = static_cast<int>(j);
      break;
    }
  if (pivot < 0) return std::nullopt;
  const int idx = count_++;
  QVector comb(count_);
  comb[idx] = 1;
  for (std::size_t k = 0; k < rows_.size(); ++k)
    if (coeff[k] != 0)
      for (std::size_t j = 0; j < rows_[k].comb.size(); ++j) comb[j] -= coeff[k] * rows_[k].comb[j];
  rows_.push_back({std::move(v), pivot, std::move(comb)});
  return idx;
}

std::optional<QVector> IncrementalBasis::express(const QVector& v_in) const {
  if (v_in.size() != length_) throw InternalError("vector length mismatch");
  QVector v = v_in;
  QVector coeff = reduce(v);
  for (const auto& x : v)
    if (x != 0) return std::nullopt;
  QVector out(count_);
  for (std::size_t k = 0; k < rows_.size(); ++k)
    if (coeff[k] != 0)
      for (std::size_t j = 0; j < rows_[k].comb.size(); ++j) out[j] += coeff[k] * rows_[k].comb[j];
  return out;
}

std::optional<QVector> solve_combination(const std::vector<const SparseMatrix*>& mats, const SparseMatrix& target) {
  std::set<std::pair<int, int>> pos_set;
  for (const auto* m : mats)
    for (int r = 0; r < m->rows(); ++r)
      for (const auto& [c, v] : m->row(r)) pos_set.emplace(r, c);
  for (int r = 0; r < target.rows(); ++r)
    for (const auto& [c, v] : target.row(r)) pos_set.emplace(r, c);
  const std::vector<std::pair<int, int>> pos(pos_set.begin(), pos_set.end());
  IncrementalBasis basis(pos.size());
  std::vector<int> accepted_index(mats.size(), -1);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    QVector v(pos.size());
    for (std::size_t p = 0; p < pos.size(); ++p) v[p] = mats[k]->at(pos[p].first, pos[p].second);
    if (auto idx = basis.add(v)) accepted_index[k] = *idx;
  }
  QVector t(pos.size());
  for (std::size_t p = 0; p < pos.size(); ++p) t[p] = target.at(pos[p].first, pos[p].second);
  auto coords = basis.express(t);
  if (!coords) return std::nullopt;
  QVector out(mats.size());
  for (std::size_t k = 0; k < mats.size(); ++k)
    if (accepted_index[k] >= 0) out[k] = (*coords)[accepted_index[k]];
  return out;
}

}  // namespace takiff
