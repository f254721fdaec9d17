#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "takiff/linalg.hpp"

namespace takiff {

/// 2n x 2n matrix with a parity tag. Rows/columns 0..n-1 are even.
struct SuperMatrix {
  SparseMatrix m;
  bool odd = false;
  std::string label;
};

struct SuperMatrixRep {
  int n = 0;
  std::vector<SuperMatrix> basis;
  [[nodiscard]] int even_dim() const;
  [[nodiscard]] int odd_dim() const;
};

/// Block form (A, bI; C, A + dI) with tr A = tr C = 0: basis A-part, d, C-part, b.
SuperMatrixRep realize_g(int n);
/// All elementary matrices E_ij of gl(n|n).
SuperMatrixRep realize_gl(int n);
/// Small generating set of the algebra (Chevalley generators plus what is
/// needed for the rest), used for commutant equations.
SuperMatrixRep generators_g(int n);
SuperMatrixRep generators_gl(int n);

/// [x, y] = xy - (-1)^{|x||y|} yx.
SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y);
/// Whether m has the shape (A, bI; C, A + dI) with tr A = tr C = 0.
bool fits_block_pattern(int n, const SparseMatrix& m);
/// Every superbracket of basis elements lies in the span (exact solve).
bool check_bracket_closure(const SuperMatrixRep& rep);

/// (C^{n|n})^{(x) r}, pure tensors indexed row-major by their digits.
struct TensorSpace {
  int n = 0;
  int r = 0;
  long dim = 0;
  [[nodiscard]] std::vector<int> digits(long idx) const;
  [[nodiscard]] long index(const std::vector<int>& digits) const;
  [[nodiscard]] int odd_count(long idx) const;
  [[nodiscard]] int parity(long idx) const { return odd_count(idx) % 2; }
};
/// ResourceLimit above tensor_cap().
TensorSpace make_tensor_space(int n, int r);

/// Action on the tensor space, sign (-1)^{|x| p} with p the parity of the
/// factors to the left of the one acted on.
SparseMatrix tensor_operator(const TensorSpace& t, const SuperMatrix& x);
std::vector<SparseMatrix> tensor_action(const SuperMatrixRep& rep, int r);
/// Super permutation: output factor j is input factor perm[j], sign -1 for
/// every inverted pair of odd factors.
SparseMatrix permutation_operator(const TensorSpace& t, const std::vector<int>& perm);
/// Adjacent transpositions s_1 .. s_{r-1}.
std::vector<SparseMatrix> sym_action(int n, int r);

enum class Algebra { G, GL };

struct CommutantDims {
  long even = 0;
  long odd = 0;
  [[nodiscard]] long total() const { return even + odd; }
};
/// Dimension of the supercommutant of the algebra in End((C^{n|n})^{(x) r}).
CommutantDims commutant_dims(int n, int r, Algebra algebra);
long commutant_dim(int n, int r, Algebra algebra);

/// Rank of the span of the r! permutation operators.
long phi_image_dim(int n, int r);

struct ThmITReport {
  int n = 0;
  int r = 0;
  long factorial = 0;
  long commutant = 0;
  long image = 0;
  bool injective = false;
  bool surjective = false;
  /// Known statements that this data contradicts; empty when consistent.
  std::vector<std::string> violations;
};
ThmITReport thmIT_verdict(int n, int r);

/// Partitions of r in decreasing lexicographic order.
std::vector<std::vector<int>> partitions(int r);
/// Dimension of the Specht module, hook length formula.
long specht_dimension(const std::vector<int>& lambda);
/// Sum of (dim S_lambda)^2 over lambda |- r with lambda_{n+1} <= n.
long gl_commutant_prediction(int n, int r);

/// Rank of the super antisymmetriser on the part of the tensor space with k
/// odd factors, k = 0..r.
std::vector<long> super_exterior_graded_dims(int n, int r);
/// dim of Lambda^{r-k}(C^n) (x) S^k(C^n).
long super_exterior_prediction(int n, int r, int k);

}  // namespace takiff
