#pragma once

#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace takiff {

using QVector = std::vector<mpq_class>;

/// Row-major sparse matrix over the rationals.
class SparseMatrix {
 public:
  using Row = std::map<int, mpq_class>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : cols_(cols), data_(rows) {}

  [[nodiscard]] int rows() const { return static_cast<int>(data_.size()); }
  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] const Row& row(int r) const { return data_[r]; }
  [[nodiscard]] mpq_class at(int r, int c) const;
  [[nodiscard]] std::size_t nonzeros() const;
  [[nodiscard]] bool is_zero() const;

  void add(int r, int c, const mpq_class& v);
  void set_row(int r, Row row);

  SparseMatrix& operator+=(const SparseMatrix& o);
  SparseMatrix& operator-=(const SparseMatrix& o);
  SparseMatrix& operator*=(const mpq_class& k);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  [[nodiscard]] QVector apply(const QVector& v) const;

  static SparseMatrix identity(int n);

 private:
  int cols_ = 0;
  std::vector<Row> data_;
};

/// [a, b] = ab - ba.
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// Rank of the submatrix on the given rows and columns, by dense
/// fraction-free (Bareiss) elimination after clearing row denominators.
long rank_of_block(const SparseMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);
long rank(const SparseMatrix& m);

/// Dense Bareiss rank of an integer matrix (consumed).
long bareiss_rank(std::vector<std::vector<mpz_class>> a);

/// Incremental row echelon form over Z with sparse rows. Rows are kept
/// primitive (content 1) so entries stay small.
class SparseIntEchelon {
 public:
  using Row = std::map<int, mpz_class>;
  /// Reduces the row against the stored pivots; stores it if a nonzero
  /// remainder is left. Returns true in that case.
  bool add(Row row);
  [[nodiscard]] long rank() const { return static_cast<long>(pivots_.size()); }

 private:
  std::map<int, Row> pivots_;  // keyed by leading column
};

/// Rational row vector from a sparse row, scaled to a primitive integer row.
SparseIntEchelon::Row primitive_integer_row(const SparseMatrix::Row& r);

/// Greedy basis extraction: vectors are offered in order, independent ones
/// become basis vectors, and any vector in the span can be expressed in that
/// basis.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t length) : length_(length) {}
  /// Returns the index of the new basis vector, or nullopt if dependent.
  std::optional<int> add(const QVector& v);
  /// Coordinates in the chosen basis; nullopt if v is outside the span.
  [[nodiscard]] std::optional<QVector> express(const QVector& v) const;
  [[nodiscard]] int size() const { return count_; }

 private:
  struct Stored {
    QVector vec;
    int pivot;
    QVector comb;  // vec in terms of accepted basis vectors
  };
  // Reduces v in place; returns coefficients c with v_in = v_out + sum c_k stored_k.
  QVector reduce(QVector& v) const;

  std::size_t length_;
  int count_ = 0;
  std::vector<Stored> rows_;
};

/// Solves sum_k c_k * mats[k] == target exactly. nullopt when no solution.
std::optional<QVector> solve_combination(const std::vector<const SparseMatrix*>& mats, const SparseMatrix& target);

}  // namespace takiff
