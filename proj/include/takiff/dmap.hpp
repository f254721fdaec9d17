#pragma once

#include <map>
#include <memory>
#include <vector>

#include "takiff/charring.hpp"
#include "takiff/linalg.hpp"
#include "takiff/rootsys.hpp"

namespace takiff {

/// Chevalley basis of s. Basis order: e_alpha for the positive roots (in
/// RootDatum order), then h_1..h_r (simple coroots), then f_alpha.
class ChevalleyBasis {
 public:
  /// Sparse integer combination of basis elements.
  using Vec = std::map<int, long>;

  /// For a non-simple positive root xi: e_xi = [e_simple, e_prev] / divisor
  /// and f_xi = -[f_simple, f_prev] / divisor.
  struct Recipe {
    int simple = -1;
    int prev = -1;
    int divisor = 1;
  };

  [[nodiscard]] const RootDatum& datum() const { return *rd_; }
  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int num_positive() const { return npos_; }
  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] int e(int root) const { return root; }
  [[nodiscard]] int h(int i) const { return npos_ + i; }
  [[nodiscard]] int f(int root) const { return npos_ + rank_ + root; }
  /// Weight of a basis element in fundamental coordinates.
  [[nodiscard]] const Weight& weight(int idx) const { return weights_[idx]; }
  [[nodiscard]] std::string label(int idx) const;
  [[nodiscard]] const std::vector<Recipe>& recipes() const { return recipes_; }

  /// [x_a, x_b] in the basis.
  [[nodiscard]] const Vec& bracket(int a, int b) const { return table_[a * dim_ + b]; }
  /// N_{alpha,beta} for signed roots in simple coordinates with alpha+beta a
  /// root: [x_alpha, x_beta] = N x_{alpha+beta}. Zero when alpha+beta is not a root.
  [[nodiscard]] long structure_constant(const Weight& alpha, const Weight& beta) const;
  /// Basis index of the root vector for a signed root (simple coordinates), or -1.
  [[nodiscard]] int root_vector(const Weight& signed_root) const;

  /// Generators used for equivariance checks: e_i, f_i, h_i.
  [[nodiscard]] std::vector<int> generators() const;

 private:
  friend ChevalleyBasis chevalley_basis(const RootDatum& rd);
  ChevalleyBasis() = default;

  const RootDatum* rd_ = nullptr;
  int dim_ = 0, npos_ = 0, rank_ = 0;
  std::vector<Weight> weights_;
  std::vector<Recipe> recipes_;  // indexed by positive root
  std::vector<Vec> table_;
};

ChevalleyBasis chevalley_basis(const RootDatum& rd);
/// Process-lifetime basis per type.
const ChevalleyBasis& cached_chevalley_basis(Series series, int rank);

/// Largest p with beta - p alpha a root (alpha, beta signed roots in simple coordinates).
int string_bottom(const RootDatum& rd, const Weight& alpha, const Weight& beta);

/// Checks the Jacobi identity on every basis triple, or on `samples` random
/// triples when samples > 0.
bool check_jacobi(const ChevalleyBasis& cb, long samples = 0);
/// |N_{alpha,beta}| = p + 1 on every pair of roots whose sum is a root,
/// [h_i, e_alpha] = alpha(h_i) e_alpha, and [e_alpha, f_alpha] = h_alpha.
bool check_chevalley_relations(const ChevalleyBasis& cb);

/// Finite-dimensional s-module with exact rational matrices for every
/// Chevalley basis element; basis vectors are weight vectors.
struct ExplicitModule {
  const ChevalleyBasis* cb = nullptr;
  int dim = 0;
  std::vector<Weight> weights;
  std::vector<SparseMatrix> action;  // indexed like the Chevalley basis
  Weight highest_weight;
};

/// L(lambda) from the Cartan matrix alone: weight spaces are built
/// top-down, using that u -> (e_j u)_j is injective below the top.
ExplicitModule simple_module(const ChevalleyBasis& cb, const Weight& lambda);
ExplicitModule adjoint_module(const ChevalleyBasis& cb);
ExplicitModule trivial_module(const ChevalleyBasis& cb);
/// Monomial basis in lexicographic order of sorted index tuples; acts by derivation.
ExplicitModule symmetric_power_module(const ExplicitModule& m, int n);
ExplicitModule tensor_module(const ExplicitModule& a, const ExplicitModule& b);

FormalCharacter module_character(const ExplicitModule& m);
/// [M_a, M_b] = sum_c N^c_{ab} M_c for all pairs a, b (or only generator pairs).
bool check_module(const ExplicitModule& m, bool generators_only = false);

/// D^n[V]: S^n(s) (x) V -> S^{n-1}(s) (x) V.
struct DMapMatrix {
  int n = 0;
  Weight lambda;
  ExplicitModule source;
  ExplicitModule target;
  SparseMatrix matrix;  // target.dim x source.dim
};

DMapMatrix dmap_matrix(const ChevalleyBasis& cb, const Weight& lambda, int n);
DMapMatrix dmap_matrix(const ChevalleyBasis& cb, const ExplicitModule& v, int n);

/// D X_src = X_tgt D for every generator.
bool is_equivariant(const DMapMatrix& d);
/// Exact rank, computed weight space by weight space.
long dmap_rank(const DMapMatrix& d);

struct KerCoker {
  IrrDecomposition ker;
  IrrDecomposition coker;
};
KerCoker ker_coker_multiplicities(const DMapMatrix& d);

}  // namespace takiff
