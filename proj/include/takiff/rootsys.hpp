#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace takiff {

/// Integral vector of length rank. Used for weights in fundamental-weight
/// coordinates and for roots in simple-root coordinates; which one is meant
/// is fixed by the API that hands it out.
class Weight {
 public:
  static constexpr int kMaxRank = 8;

  Weight() = default;
  explicit Weight(int rank);
  Weight(std::initializer_list<int> coords);
  explicit Weight(std::span<const int> coords);

  [[nodiscard]] int rank() const { return rank_; }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_dominant() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  friend Weight operator*(int k, Weight w);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// "c1,c2,...,cr"
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] std::vector<int> to_vector() const;

 private:
  std::array<std::int32_t, kMaxRank> c_{};
  std::int32_t rank_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

enum class Series { A, B, C, D, E, F, G };

char series_letter(Series s);
Series parse_series(char c);

/// Root system of a simple Lie algebra, Bourbaki numbering. Immutable after
/// construction. Roots are stored in simple-root coordinates, weights in
/// fundamental-weight coordinates.
class RootDatum {
 public:
  [[nodiscard]] Series series() const { return series_; }
  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] std::string name() const;

  /// cartan()[i][j] = <alpha_j, alpha_i^vee>.
  [[nodiscard]] const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// (alpha_i, alpha_i) / 2 with short roots normalised to 1.
  [[nodiscard]] const std::vector<int>& half_norms() const { return half_norm_; }
  /// (alpha_i, alpha_j) with short roots of squared length 2.
  [[nodiscard]] int simple_form(int i, int j) const { return gram_[i][j]; }

  /// Positive roots in simple-root coordinates, sorted by height then
  /// lexicographically. Simple roots come first.
  [[nodiscard]] const std::vector<Weight>& positive_roots() const { return pos_roots_; }
  /// Positive roots in fundamental-weight coordinates (same order).
  [[nodiscard]] const std::vector<Weight>& positive_roots_fw() const { return pos_roots_fw_; }
  /// Simple root alpha_i in fundamental-weight coordinates (column i of cartan).
  [[nodiscard]] const Weight& simple_root_fw(int i) const { return pos_roots_fw_[i]; }
  [[nodiscard]] int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }
  /// Index of a positive root given in simple-root coordinates, or -1.
  [[nodiscard]] int root_index(const Weight& simple_coords) const;

  [[nodiscard]] Weight fundamental_weight(int i) const;
  [[nodiscard]] Weight rho() const;
  [[nodiscard]] const Weight& highest_root() const { return highest_root_fw_; }
  [[nodiscard]] int coxeter_number() const { return coxeter_; }
  [[nodiscard]] const std::vector<int>& exponents() const { return exponents_; }
  [[nodiscard]] mpz_class weyl_group_order() const;
  [[nodiscard]] int dim_algebra() const { return rank_ + 2 * num_positive_roots(); }

  /// Simple-root coordinates of w times det(cartan).
  [[nodiscard]] std::vector<long long> scaled_simple_coords(const Weight& w) const;
  /// Height (sum of simple-root coordinates) times det(cartan).
  [[nodiscard]] long long scaled_height(const Weight& w) const;
  [[nodiscard]] int det() const { return det_; }

  [[nodiscard]] Weight to_fundamental(const Weight& simple_coords) const;

  /// (a, b) for a in the root lattice given by simple coordinates and b a
  /// weight in fundamental coordinates.
  [[nodiscard]] long long pair_root_weight(const Weight& root_simple, const Weight& w) const;
  /// (a, b) for two weights, scaled by det(cartan) so it is integral.
  [[nodiscard]] long long scaled_form(const Weight& a, const Weight& b) const;

  /// <w, alpha^vee> for a positive root (index into positive_roots()).
  [[nodiscard]] int coroot_pairing(const Weight& w, int root) const;

 private:
  friend RootDatum build_root_datum(Series, int);
  RootDatum() = default;

  Series series_ = Series::A;
  int rank_ = 0;
  std::vector<std::vector<int>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<long long>> adj_;  // det * cartan^{-1}
  std::vector<int> half_norm_;
  int det_ = 1;
  std::vector<Weight> pos_roots_;
  std::vector<Weight> pos_roots_fw_;
  std::vector<int> root_half_norm_;
  Weight highest_root_fw_;
  int coxeter_ = 0;
  std::vector<int> exponents_;
};

/// Throws InvalidArgument for pairs that are not simple types.
RootDatum build_root_datum(Series series, int rank);

/// Process-lifetime instance for (series, rank); memo tables hold
/// references to these.
const RootDatum& cached_root_datum(Series series, int rank);

long long cartan_determinant(const RootDatum& rd);

struct DominantResult {
  Weight weight;
  int sign = 1;  ///< (-1)^length of the reducing element, 0 if on a wall.
};

DominantResult to_dominant(const RootDatum& rd, Weight w);
bool dominant(const RootDatum& rd, const Weight& w);
/// Orbit by reflection closure; sorted.
std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& w);
/// -w_0 w.
Weight longest_element_negate(const RootDatum& rd, const Weight& w);
bool in_root_lattice(const RootDatum& rd, const Weight& w);
/// The minuscule dominant weights (0 included), one per coset of the root
/// lattice, sorted.
std::vector<Weight> minuscule_weights(const RootDatum& rd);
/// The unique minuscule weight congruent to w modulo the root lattice.
Weight minuscule_representative(const RootDatum& rd, const Weight& w);

/// Dominant weights mu <= lambda (lambda - mu a nonnegative root
/// combination), sorted by increasing depth then lexicographically
/// descending. lambda itself is first.
std::vector<Weight> dominant_weights_below(const RootDatum& rd, const Weight& lambda);

/// Weyl dimension formula, computed independently of any character code.
mpz_class weyl_dimension(const RootDatum& rd, const Weight& lambda);

}  // namespace takiff
