#pragma once

#include <map>
#include <string>
#include <vector>

#include "takiff/blocks.hpp"
#include "takiff/rootsys.hpp"
#include "takiff/takiff.hpp"

namespace takiff {

enum class Engine { Closed, Oracle, Auto };

inline constexpr int kOracleMaxDegree = 4;

/// Whether the closed formulas cover (i, x, y): always unless both weights
/// are nonzero, lambda lies in the root lattice and i >= 2.
bool closed_available(const RootDatum& rd, int i, const SuperWeight& x, const SuperWeight& y);

/// dim Ext^i(L(x), L(y)) in F.
/// Closed outside its domain and Oracle above kOracleMaxDegree throw
/// InvalidArgument; Oracle above the dimension cap throws ResourceLimit.
long ext_dim(const RootDatum& rd, int i, const SuperWeight& x, const SuperWeight& y, Engine engine = Engine::Auto);

/// First extensions in F from the closed first-Ext formulas.
long ext1_closed(const RootDatum& rd, const SuperWeight& x, const SuperWeight& y);
/// First extensions between the corresponding simple conformal modules.
long ext1_conformal(const RootDatum& rd, const SuperWeight& x, const SuperWeight& y);

/// [M : L(mu)] for M = S^k(s) (x) L(lambda), computed on explicit matrices
/// as the number of independent highest-weight vectors of weight mu.
long singular_vector_count(const RootDatum& rd, int k, const Weight& lambda, const Weight& mu);

struct Window {
  int coord_max = 2;  ///< 0 <= lambda_i <= coord_max
  int level_max = 2;  ///< |a| <= level_max
};

enum class QuiverKind { F, C };

struct QuiverGraph {
  std::vector<SuperWeight> vertices;
  std::map<std::pair<int, int>, long> edges;  ///< (from, to) -> dim Ext^1, nonzero only
  std::vector<bool> interior;                 ///< every neighbour lies in the window
};

QuiverGraph build_quiver(const RootDatum& rd, const BlockLabel& label, const Window& w, QuiverKind kind);
/// Same vertex set and equal edge labels on all pairs touching an interior vertex.
bool compare_quivers(const QuiverGraph& f, const QuiverGraph& c);

struct ExtPair {
  SuperWeight x;
  SuperWeight y;
};

struct KoszulViolation {
  SuperWeight x;
  SuperWeight y;
  int i = 0;
  long dim = 0;
};

struct KoszulReport {
  std::vector<ExtPair> pairs;
  std::vector<KoszulViolation> violations;
  long evaluated = 0;
};

/// Nonzero Ext^i with a - b != i, for every pair and i <= imax. No preconditions.
KoszulReport diagonal_violations(const RootDatum& rd, const std::vector<ExtPair>& pairs, int imax,
                                 Engine engine = Engine::Auto);
/// Random pairs inside the block (fixed seed), weights with coords <= 2.
std::vector<ExtPair> sample_block_pairs(const RootDatum& rd, const BlockLabel& label, int count, int imax,
                                        unsigned seed = 20240601u);
/// Koszulity check for a non-principal block of a rank >= 2 algebra.
KoszulReport koszul_diagonal_check(const RootDatum& rd, const BlockLabel& label, int samples, int imax,
                                   unsigned seed = 20240601u);

}  // namespace takiff
