#pragma once

#include <map>
#include <memory>

#include <gmpxx.h>

#include "takiff/rootsys.hpp"

namespace takiff {

/// Finitely supported map weight -> multiplicity. Entries are never stored
/// with multiplicity zero.
class FormalCharacter {
 public:
  using Map = std::map<Weight, mpz_class>;

  explicit FormalCharacter(const RootDatum& rd) : rd_(&rd) {}
  FormalCharacter(const RootDatum& rd, Map support);

  /// The character of the trivial module.
  static FormalCharacter trivial(const RootDatum& rd);

  [[nodiscard]] const RootDatum& datum() const { return *rd_; }
  [[nodiscard]] const Map& support() const { return support_; }
  [[nodiscard]] mpz_class mult(const Weight& w) const;
  [[nodiscard]] mpz_class dimension() const;
  [[nodiscard]] bool empty() const { return support_.empty(); }
  [[nodiscard]] bool nonnegative() const;

  void add(const Weight& w, const mpz_class& m);

  FormalCharacter& operator+=(const FormalCharacter& o);
  FormalCharacter& operator-=(const FormalCharacter& o);
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
  FormalCharacter& operator*=(const mpz_class& k);
  /// Exact division of every multiplicity; throws InternalError if inexact.
  FormalCharacter& divide_exact(const mpz_class& k);

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.support_ == b.support_;
  }

 private:
  const RootDatum* rd_;
  Map support_;
};

/// Multiplicities of irreducible constituents, keyed by dominant highest weight.
using IrrDecomposition = std::map<Weight, mpz_class>;

/// Character of the simple module with highest weight lambda (Freudenthal).
FormalCharacter irr_character(const RootDatum& rd, const Weight& lambda);

/// Multiplicities of the dominant weights of L(lambda), memoised per
/// (type, lambda).
std::shared_ptr<const std::map<Weight, mpz_class>> dominant_multiplicities(const RootDatum& rd,
                                                                           const Weight& lambda);

/// Peels highest weights off a character. Throws InvalidArgument when the
/// input is not a nonnegative combination of simple characters.
IrrDecomposition decompose(const FormalCharacter& ch);

/// Sum of mult * irr_character(key).
FormalCharacter compose(const RootDatum& rd, const IrrDecomposition& d);

FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter adams(const FormalCharacter& a, int m);
FormalCharacter exterior_power(const FormalCharacter& a, int k);
FormalCharacter symmetric_power(const FormalCharacter& a, int k);

/// decompose(ch)[mu], zero when absent.
mpz_class bracket(const RootDatum& rd, const FormalCharacter& ch, const Weight& mu);

/// Decomposition of M (x) L(lambda) from the character of M alone, by
/// reflecting lambda + nu + rho into the dominant chamber (Brauer-Klimyk).
IrrDecomposition tensor_decompose(const FormalCharacter& m, const Weight& lambda);

/// [M (x) L(lambda) : L(mu)] via tensor_decompose.
mpz_class tensor_bracket(const FormalCharacter& m, const Weight& lambda, const Weight& mu);

/// Character of the adjoint representation.
FormalCharacter adjoint_character(const RootDatum& rd);
/// Cached exterior and symmetric powers of the adjoint character.
const FormalCharacter& wedge_adjoint(const RootDatum& rd, int k);
const FormalCharacter& sym_adjoint(const RootDatum& rd, int k);

enum class AdjointPower { Wedge, Sym };

/// Cached tensor_decompose(wedge^k s or S^k s, lambda).
const IrrDecomposition& adjoint_power_tensor(const RootDatum& rd, AdjointPower kind, int k, const Weight& lambda);
/// [P^k s (x) L(lambda) : L(mu)] from the cached decomposition.
long adjoint_power_bracket(const RootDatum& rd, AdjointPower kind, int k, const Weight& lambda, const Weight& mu);

/// Samples Weyl orbits of the support and checks constancy of multiplicity.
bool is_weyl_invariant(const FormalCharacter& ch);

}  // namespace takiff
