#pragma once

#include <string>
#include <utility>
#include <vector>

#include "takiff/rootsys.hpp"

namespace takiff {

/// lambda + a*delta.
struct SuperWeight {
  Weight lambda;
  int a = 0;

  friend bool operator==(const SuperWeight&, const SuperWeight&) = default;
  friend auto operator<=>(const SuperWeight&, const SuperWeight&) = default;

  /// "c1,...,cr;a"
  [[nodiscard]] std::string to_string() const;
  /// Inverse of to_string; throws InvalidArgument on malformed input.
  static SuperWeight parse(const std::string& text, int rank);
};

struct Factor {
  SuperWeight weight;
  long mult = 0;
  friend bool operator==(const Factor&, const Factor&) = default;
};

int parity(const SuperWeight& x);

/// Highest weights of the g_0-constituents of L(x).
std::vector<SuperWeight> restrict_simple(const RootDatum& rd, const SuperWeight& x);
/// dim L(x): 1 if lambda = 0, else 2 dim L(lambda).
mpz_class simple_dimension(const RootDatum& rd, const SuperWeight& x);

/// [Delta(x) : L(y)].
long delta_mult(const RootDatum& rd, const SuperWeight& x, const SuperWeight& y);
/// [P(x) : L(y)].
long proj_mult(const RootDatum& rd, const SuperWeight& x, const SuperWeight& y);
/// Every composition factor of Delta(x), resp. P(x), sorted by weight.
std::vector<Factor> delta_factors(const RootDatum& rd, const SuperWeight& x);
std::vector<Factor> proj_factors(const RootDatum& rd, const SuperWeight& x);

/// Highest weight of the dual L(x)*.
SuperWeight dual_simple(const RootDatum& rd, const SuperWeight& x);

/// Standard filtration multiplicities (P(x) : Delta(k)), nonzero entries only.
std::vector<std::pair<SuperWeight, long>> standard_filtration(const SuperWeight& x);

/// sum_k (P(x):Delta(k)) [Delta(k):L(y)] == [P(x):L(y)] for every y in sample.
bool bgg_consistency(const RootDatum& rd, const SuperWeight& x, const std::vector<SuperWeight>& sample);

}  // namespace takiff
