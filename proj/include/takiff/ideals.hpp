#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "takiff/rootsys.hpp"

namespace takiff {

inline constexpr int kMaxIdealRoots = 64;

/// Up-closed set of positive roots, bit k = positive_roots()[k].
struct RootIdeal {
  std::uint64_t bits = 0;

  [[nodiscard]] bool contains(int root) const { return (bits >> root) & 1U; }
  [[nodiscard]] int size() const;
  [[nodiscard]] std::vector<int> members() const;

  friend bool operator==(const RootIdeal&, const RootIdeal&) = default;
  /// Canonical order: by size, then by bit pattern.
  friend std::strong_ordering operator<=>(const RootIdeal& a, const RootIdeal& b);
};

bool is_upper_closed(const RootDatum& rd, const RootIdeal& ideal);
/// Ideal with exactly the given root indices; InvalidArgument if not up-closed.
RootIdeal make_ideal(const RootDatum& rd, const std::vector<int>& roots);
/// Smallest ideal containing the given root indices.
RootIdeal ideal_generated_by(const RootDatum& rd, const std::vector<int>& roots);
RootIdeal full_ideal(const RootDatum& rd);

/// All ideals in canonical order. InvalidArgument above kMaxIdealRoots positive roots.
std::vector<RootIdeal> enumerate_ideals(const RootDatum& rd);

struct BorelCount {
  mpz_class closed;                 ///< 2/|W| prod (h + e_i + 1)
  std::optional<long> enumerated;   ///< 2 * #ideals when enumerable
};
mpz_class closed_borel_count(const RootDatum& rd);
/// Throws InternalError if enumeration and the product formula disagree.
BorelCount count_borel_classes(const RootDatum& rd);

/// Positive roots alpha with s_{-alpha} in the ideal N containing b that
/// corresponds to nprime. Verifies that N is stable under b.
std::vector<int> complement_ideal(const RootDatum& rd, const RootIdeal& nprime);
/// Inverse of complement_ideal.
RootIdeal ideal_from_complement(const RootDatum& rd, const std::vector<int>& negatives);

/// h in fundamental-coweight coordinates with alpha(h) > 1 on the ideal and
/// 0 < alpha(h) < 1 on the other positive roots.
std::vector<mpq_class> shi_witness(const RootDatum& rd, const RootIdeal& nprime);
bool check_shi_witness(const RootDatum& rd, const RootIdeal& nprime, const std::vector<mpq_class>& h);

inline constexpr std::size_t kMaxInequalities = 512;

/// Strictly feasible point of {x : a.x > c}, or nullopt. Fourier-Motzkin.
struct StrictInequality {
  std::vector<mpq_class> a;
  mpq_class c;
};
std::optional<std::vector<mpq_class>> strict_feasible_point(const std::vector<StrictInequality>& system, int vars);

enum class BorelKind { A, B };

struct BorelDescription {
  BorelKind kind = BorelKind::A;
  RootIdeal nprime;                ///< the ideal inside n the description comes from
  std::vector<int> negatives;      ///< kind A: roots alpha with s_{-alpha} in N
  bool includes_del_xi = false;    ///< kind B
  std::vector<mpq_class> h;        ///< regular element H = h + xi_coeff * xi d_xi
  int xi_coeff = 1;
  long dim = 0;                    ///< dimension of the Borel subalgebra
};

/// Two descriptions per ideal, each verified against the regular element.
std::vector<BorelDescription> classify_borels(const RootDatum& rd);

}  // namespace takiff
