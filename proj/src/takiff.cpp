#include "takiff/takiff.hpp"

#include <map>
#include <set>
#include <sstream>

#include "takiff/charring.hpp"
#include "takiff/errors.hpp"

namespace takiff {

std::string SuperWeight::to_string() const { return lambda.to_string() + ";" + std::to_string(a); }

SuperWeight SuperWeight::parse(const std::string& text, int rank) {
  const auto semi = text.find(';');
  if (semi == std::string::npos)
    throw InvalidArgument("super weight '" + text + "' must look like c1,...,cr;a");
  std::vector<int> coords;
  std::stringstream ss(text.substr(0, semi));
  std::string tok;
  auto to_int = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size()) throw InvalidArgument("malformed integer '" + t + "' in '" + text + "'");
    return v;
  };
  while (std::getline(ss, tok, ',')) coords.push_back(to_int(tok));
  if (static_cast<int>(coords.size()) != rank)
    throw InvalidArgument("super weight '" + text + "' needs " + std::to_string(rank) + " coordinates");
  return {Weight(std::span<const int>(coords)), to_int(text.substr(semi + 1))};
}

int parity(const SuperWeight& x) { return ((x.a % 2) + 2) % 2; }

namespace {

void require_dominant(const RootDatum& rd, const SuperWeight& x) {
  if (x.lambda.rank() != rd.rank()) throw InvalidArgument("weight has wrong rank for " + rd.name());
  if (!x.lambda.is_dominant()) throw InvalidArgument("weight " + x.to_string() + " is not dominant");
}

long wedge(const RootDatum& rd, int k, const Weight& lam, const Weight& mu) {
  if (k < 0 || k > rd.dim_algebra()) return 0;
  return adjoint_power_bracket(rd, AdjointPower::Wedge, k, lam, mu);
}

}  // namespace

std::vector<SuperWeight> restrict_simple(const RootDatum& rd, const SuperWeight& x) {
  require_dominant(rd, x);
  if (x.lambda.is_zero()) return {x};
  return {x, {x.lambda, x.a - 1}};
}

mpz_class simple_dimension(const RootDatum& rd, const SuperWeight& x) {
  require_dominant(rd, x);
  if (x.lambda.is_zero()) return 1;
  return 2 * weyl_dimension(rd, x.lambda);
}

long delta_mult(const RootDatum& rd, const SuperWeight& x, const SuperWeight& y) {
  require_dominant(rd, x);
  require_dominant(rd, y);
  const int k = x.a - y.a;
  if (k < 0) return 0;
  if (y.lambda.is_zero()) return wedge(rd, k, x.lambda, y.lambda);
  long s = 0;
  for (int i = 0; i <= k; ++i) {
    const long t = wedge(rd, i, x.lambda, y.lambda);
    s += ((k - i) % 2 == 0) ? t : -t;
  }
  if (s < 0) throw InternalError("negative standard multiplicity at " + x.to_string() + " / " + y.to_string());
  return s;
}

long proj_mult(const RootDatum& rd, const SuperWeight& x, const SuperWeight& y) {
  require_dominant(rd, x);
  require_dominant(rd, y);
  if (!x.lambda.is_zero()) return delta_mult(rd, x, y);
  const int k = x.a - y.a;
  const Weight zero(rd.rank());
  if (k >= 0) {
    if (!y.lambda.is_zero()) return wedge(rd, k + 1, zero, y.lambda);
    return wedge(rd, k, zero, zero) + wedge(rd, k + 1, zero, zero);
  }
  if (k == -1) return y.lambda.is_zero() ? 1 : 0;
  return 0;
}

namespace {

// Candidates y with possibly nonzero multiplicity: every constituent of
// wedge^i s (x) L(lambda), at every level a - j for j <= shift + dim s.
std::set<SuperWeight> candidates(const RootDatum& rd, const SuperWeight& x, int extra) {
  std::set<Weight> mus;
  for (int i = 0; i <= rd.dim_algebra(); ++i)
    for (const auto& [mu, m] : adjoint_power_tensor(rd, AdjointPower::Wedge, i, x.lambda)) mus.insert(mu);
  std::set<SuperWeight> out;
  for (int b = x.a - rd.dim_algebra() - 1; b <= x.a + extra; ++b)
    for (const auto& mu : mus) out.insert({mu, b});
  return out;
}

}  // namespace

std::vector<Factor> delta_factors(const RootDatum& rd, const SuperWeight& x) {
  require_dominant(rd, x);
  std::vector<Factor> out;
  for (const auto& y : candidates(rd, x, 0))
    if (long m = delta_mult(rd, x, y)) out.push_back({y, m});
  return out;
}

std::vector<Factor> proj_factors(const RootDatum& rd, const SuperWeight& x) {
  require_dominant(rd, x);
  std::vector<Factor> out;
  for (const auto& y : candidates(rd, x, 1))
    if (long m = proj_mult(rd, x, y)) out.push_back({y, m});
  return out;
}

SuperWeight dual_simple(const RootDatum& rd, const SuperWeight& x) {
  require_dominant(rd, x);
  if (x.lambda.is_zero()) return {x.lambda, -x.a};
  return {longest_element_negate(rd, x.lambda), 1 - x.a};
}

std::vector<std::pair<SuperWeight, long>> standard_filtration(const SuperWeight& x) {
  std::vector<std::pair<SuperWeight, long>> out{{x, 1}};
  if (x.lambda.is_zero()) out.push_back({{x.lambda, x.a + 1}, 1});
  return out;
}

bool bgg_consistency(const RootDatum& rd, const SuperWeight& x, const std::vector<SuperWeight>& sample) {
  const auto filt = standard_filtration(x);
  for (const auto& y : sample) {
    long s = 0;
    for (const auto& [k, m] : filt) s += m * delta_mult(rd, k, y);
    if (s != proj_mult(rd, x, y)) return false;
  }
  return true;
}

}  // namespace takiff
