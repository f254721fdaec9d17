#include "takiff/selftest.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "takiff/blocks.hpp"
#include "takiff/charring.hpp"
#include "takiff/dmap.hpp"
#include "takiff/errors.hpp"
#include "takiff/ext.hpp"
#include "takiff/ideals.hpp"
#include "takiff/invariants.hpp"
#include "takiff/takiff.hpp"

namespace takiff {

namespace {

// Collects failed sub-checks; pass iff none.
struct Checker {
  std::vector<std::string> failures;
  long checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  [[nodiscard]] std::string summary(const std::string& on_pass) const {
    if (failures.empty()) return on_pass;
    std::string s = std::to_string(failures.size()) + " of " + std::to_string(checks) + " checks failed: " + failures[0];
    for (std::size_t k = 1; k < failures.size() && k < 3; ++k) s += "; " + failures[k];
    return s;
  }
};

// extra counts appended to the detail line
thread_local std::string g_info;

const RootDatum& rd(Series s, int r) { return cached_root_datum(s, r); }
SuperWeight w1(int n, int a) { return {Weight{n}, a}; }

std::vector<Factor> sorted_factors(std::vector<std::pair<SuperWeight, long>> v) {
  std::sort(v.begin(), v.end());
  std::vector<Factor> out;
  for (auto& [w, m] : v) out.push_back({w, m});
  return out;
}

std::string c1() {
  Checker ck;
  struct T {
    Series s;
    int r;
    long classes;
  };
  const std::vector<T> table = {{Series::A, 1, 4},  {Series::A, 2, 10}, {Series::A, 3, 28}, {Series::B, 2, 12},
                                {Series::C, 2, 12}, {Series::B, 3, 40}, {Series::C, 3, 40}, {Series::D, 4, 100},
                                {Series::G, 2, 16}, {Series::F, 4, 210}};
  for (const auto& t : table) {
    const auto& d = rd(t.s, t.r);
    const BorelCount c = count_borel_classes(d);
    ck.expect(c.enumerated && *c.enumerated == t.classes,
              d.name() + " enumeration " + (c.enumerated ? std::to_string(*c.enumerated) : "none"));
    ck.expect(c.closed == t.classes, d.name() + " formula " + c.closed.get_str());
  }
  return ck.failures.empty() ? "" : ck.summary("");
}

std::string c2() {
  Checker ck;
  for (auto [s, r, want] : {std::tuple{Series::A, 2, 3}, {Series::A, 3, 4}, {Series::B, 3, 2}, {Series::D, 4, 4},
                            {Series::G, 2, 1}, {Series::F, 4, 1}}) {
    const auto& d = rd(s, r);
    ck.expect(num_blocks(d) == want && cartan_determinant(d) == want, d.name());
  }
  ck.expect(num_blocks(rd(Series::A, 1)) == 3, "A1");
  return ck.failures.empty() ? "" : ck.summary("");
}

std::string c3() {
  Checker ck;
  const auto& a1 = rd(Series::A, 1);
  // the three sets, listed directly from their defining formulas
  std::map<SuperWeight, Sl2Tag> expect;
  for (int n = 0; n <= 4; ++n)
    for (int a = -12; a <= 12; ++a) {
      expect[w1(2 * n, a)] = Sl2Tag::Even;
      expect[w1(1 + 2 * n, 2 * a - n)] = Sl2Tag::OddA;
      expect[w1(1 + 2 * n, 2 * a - n - 1)] = Sl2Tag::OddB;
    }
  int count = 0;
  for (int lam = 0; lam <= 9; ++lam)
    for (int a = -4; a <= 4; ++a) {
      const SuperWeight x = w1(lam, a);
      ck.expect(block_label_F(a1, x).tag == expect.at(x), x.to_string());
      ++count;
    }
  if (!ck.failures.empty()) return ck.summary("");
  return "";
}

std::string c4() {
  Checker ck;
  const auto& a1 = rd(Series::A, 1);
  for (int a = -3; a <= 3; ++a) {
    for (int n = 2; n <= 6; ++n)
      ck.expect(delta_factors(a1, w1(n, a)) ==
                    sorted_factors({{w1(n, a), 1}, {w1(n + 2, a - 1), 1}, {w1(n - 2, a - 1), 1}, {w1(n, a - 2), 1}}),
                "Delta([" + std::to_string(n) + "]+" + std::to_string(a) + "d)");
    ck.expect(delta_factors(a1, w1(1, a)) == sorted_factors({{w1(1, a), 1}, {w1(3, a - 1), 1}, {w1(1, a - 2), 1}}),
              "Delta([1]+" + std::to_string(a) + "d)");
    ck.expect(delta_factors(a1, w1(0, a)) == sorted_factors({{w1(0, a), 1}, {w1(2, a - 1), 1}, {w1(0, a - 3), 1}}),
              "Delta(" + std::to_string(a) + "d)");
  }
  ck.expect(proj_factors(a1, w1(0, -1)) == sorted_factors({{w1(0, 0), 1},
                                                           {w1(0, -1), 1},
                                                           {w1(0, -3), 1},
                                                           {w1(0, -4), 1},
                                                           {w1(2, -1), 1},
                                                           {w1(2, -2), 1}}),
            "P(-d)");
  std::mt19937 gen(20240601u);
  int pairs = 0;
  for (auto [s, r] : {std::pair{Series::A, 1}, {Series::A, 2}}) {
    const auto& d = rd(s, r);
    std::uniform_int_distribution<int> c(0, 2), lv(-4, 4);
    auto rnd = [&] {
      Weight w(r);
      for (int i = 0; i < r; ++i) w[i] = c(gen);
      return SuperWeight{w, lv(gen)};
    };
    for (int t = 0; t < 25; ++t, ++pairs) {
      const SuperWeight x = rnd(), y = rnd();
      ck.expect(bgg_consistency(d, x, {y}), "BGG " + d.name() + " " + x.to_string() + " " + y.to_string());
    }
  }
  return ck.failures.empty() ? "" : ck.summary("");
}

std::string c5() {
  Checker ck;
  const auto& a2 = rd(Series::A, 2);
  const auto& a1 = rd(Series::A, 1);
  long compared = 0, nonzero = 0;
  for (auto [d, lams] : {std::pair{&a2, std::vector<Weight>{Weight{0, 0}, Weight{1, 0}, Weight{0, 1}, a2.highest_root()}},
                         {&a1, std::vector<Weight>{Weight{0}, Weight{1}, Weight{2}, Weight{3}}}})
    for (const auto& l : lams)
      for (const auto& m : lams)
        for (int i = 0; i <= 3; ++i)
          for (int diff = -4; diff <= 4; ++diff) {
            const SuperWeight x{l, diff}, y{m, 0};
            if (!closed_available(*d, i, x, y)) continue;
            try {
              const long c = ext_dim(*d, i, x, y, Engine::Closed);
              const long o = ext_dim(*d, i, x, y, Engine::Oracle);
              ck.expect(c == o, d->name() + " i=" + std::to_string(i) + " " + x.to_string() + "->" + y.to_string());
              ++compared;
              if (o != 0) ++nonzero;
            } catch (const ResourceLimit&) {
              // outside the dimension cap: not compared
            }
          }
  // first-extension special cases
  for (const RootDatum* d : {&a1, &a2}) {
    const Weight zero(d->rank());
    const SuperWeight th{d->highest_root(), 0};
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        ck.expect(ext_dim(*d, 1, {zero, a}, {zero, b}) == (b - a == 1 ? 1 : 0), "trivial edge");
    ck.expect(ext1_closed(*d, th, {zero, -2}) == 1 && ext1_closed(*d, th, {zero, -1}) == 0, "theta to trivial");
    ck.expect(ext1_closed(*d, {zero, 1}, th) == 1 && ext1_closed(*d, {zero, 0}, th) == 0, "trivial to theta");
  }
  if (compared == 0) ck.expect(false, "nothing compared");
  g_info = std::to_string(compared) + " engine comparisons, " + std::to_string(nonzero) + " nonzero";
  return ck.failures.empty() ? "" : ck.summary("");
}

std::string c6() {
  const auto& a2 = rd(Series::A, 2);
  const auto rep = koszul_diagonal_check(a2, block_label_F(a2, {Weight{1, 0}, 0}), 20, 3);
  if (rep.pairs.size() != 20) return "wrong sample size";
  g_info = std::to_string(rep.evaluated) + " Ext groups evaluated";
  if (rep.violations.empty()) return "";
  const auto& v = rep.violations.front();
  return std::to_string(rep.violations.size()) + " violations, first Ext^" + std::to_string(v.i) + "(" +
         v.x.to_string() + ", " + v.y.to_string() + ") = " + std::to_string(v.dim);
}

std::string c7() {
  Checker ck;
  const auto& a2 = rd(Series::A, 2);
  const auto& a1 = rd(Series::A, 1);
  const Window w{2, 2};
  const BlockLabel l2 = block_label_F(a2, {Weight{1, 0}, 0});
  const auto f2 = build_quiver(a2, l2, w, QuiverKind::F);
  const auto k2 = build_quiver(a2, l2, w, QuiverKind::C);
  ck.expect(!f2.vertices.empty() && compare_quivers(f2, k2), "A2 omega1 block quivers differ");
  const BlockLabel l1 = block_label_F(a1, w1(0, 0));
  const auto f1 = build_quiver(a1, l1, w, QuiverKind::F);
  const auto k1 = build_quiver(a1, l1, w, QuiverKind::C);
  ck.expect(!compare_quivers(f1, k1), "A1 principal quivers agree");
  const SuperWeight th = w1(2, 0);
  ck.expect(ext1_closed(a1, th, w1(0, -2)) == 1 && ext1_conformal(a1, th, w1(0, -2)) == 0, "theta edge at a-b=2");
  ck.expect(ext1_closed(a1, th, w1(0, -1)) == 0 && ext1_conformal(a1, th, w1(0, -1)) == 1, "theta edge at a-b=1");
  return ck.failures.empty() ? "" : ck.summary("");
}

std::string c8() {
  Checker ck;
  ck.expect(commutant_dim(3, 2, Algebra::G) == 2, "commutant(3,2)");
  ck.expect(phi_image_dim(3, 2) == 2, "image(3,2)");
  const auto v22 = thmIT_verdict(2, 2);
  ck.expect(!v22.surjective && v22.violations.empty(), "verdict(2,2)");
  const auto v23 = thmIT_verdict(2, 3);
  ck.expect(v23.image == 6 && v23.image < v23.commutant && v23.violations.empty(), "verdict(2,3)");
  for (int n : {2, 3})
    for (int r = 1; r <= 4; ++r)
      ck.expect(commutant_dim(n, r, Algebra::GL) == gl_commutant_prediction(n, r),
                "gl n=" + std::to_string(n) + " r=" + std::to_string(r));
  return ck.failures.empty() ? "" : ck.summary("");
}

std::string c9() {
  Checker ck;
  std::mt19937 gen(7);
  for (auto [s, r] : {std::pair{Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::B, 2}}) {
    const auto& d = rd(s, r);
    std::uniform_int_distribution<int> c(0, r >= 3 ? 2 : 4);
    for (int t = 0; t < 20; ++t) {
      Weight w(r);
      for (int i = 0; i < r; ++i) w[i] = c(gen);
      ck.expect(irr_character(d, w).dimension() == weyl_dimension(d, w), "Freudenthal " + d.name() + " " + w.to_string());
    }
  }
  for (auto [s, r] : {std::pair{Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::B, 2}, {Series::B, 3},
                      {Series::C, 3}, {Series::G, 2}}) {
    const auto& cb = cached_chevalley_basis(s, r);
    ck.expect(check_jacobi(cb) && check_chevalley_relations(cb), "Jacobi " + cb.datum().name());
  }
  struct Case {
    Series s;
    int r;
    Weight lam;
    int n;
  };
  const std::vector<Case> maps = {{Series::A, 1, Weight{0}, 1}, {Series::A, 1, Weight{1}, 1},
                                  {Series::A, 1, Weight{1}, 2}, {Series::A, 1, Weight{2}, 1},
                                  {Series::A, 1, Weight{2}, 2}, {Series::A, 1, Weight{3}, 3},
                                  {Series::A, 2, Weight{0, 0}, 1}, {Series::A, 2, Weight{1, 0}, 1},
                                  {Series::A, 2, Weight{1, 0}, 2}, {Series::A, 2, Weight{1, 0}, 3},
                                  {Series::A, 2, Weight{1, 1}, 1}, {Series::A, 2, Weight{1, 1}, 2}};
  for (const auto& m : maps) {
    const auto& cb = cached_chevalley_basis(m.s, m.r);
    const auto d = dmap_matrix(cb, m.lam, m.n);
    const std::string tag = cb.datum().name() + " " + m.lam.to_string() + " n=" + std::to_string(m.n);
    ck.expect(is_equivariant(d), "equivariance " + tag);
    const auto kc = ker_coker_multiplicities(d);
    // (2): no zero weight => surjective
    if (!in_root_lattice(cb.datum(), m.lam)) ck.expect(kc.coker.empty(), "clause 2 " + tag);
    // (4): coker D^2 is zero or trivial for V != C
    if (m.n == 2 && !m.lam.is_zero())
      for (const auto& [w, mult] : kc.coker) ck.expect(w.is_zero(), "clause 4 " + tag);
    // (5): D^1 surjective iff V != C
    if (m.n == 1) ck.expect(kc.coker.empty() == !m.lam.is_zero(), "clause 5 " + tag);
  }
  return ck.failures.empty() ? "" : ck.summary("");
}

struct Criterion {
  const char* title;
  double limit;
  std::function<std::string()> run;
  const char* pass_detail;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> s = {
      {"Borel class counts", 30, c1, "10 types, enumeration = product formula = table"},
      {"block counts", 1, c2, "det(Cartan) for 6 types, A1 = 3"},
      {"sl(2) block membership", 1, c3, "90 weights, lambda 0..9, |a| <= 4"},
      {"composition multiplicities", 10, c4, "Delta identities, P(-delta), 50 BGG pairs"},
      {"Ext engine agreement", 300, c5, "closed = oracle where both apply, i <= 3, |a-b| <= 4; first-Ext special cases"},
      {"Koszul diagonal", 300, c6, "20 pairs in the omega1 block of A2, i <= 3"},
      {"quiver comparison", 30, c7, "A2 omega1 block agrees, A1 principal block differs"},
      {"invariant theory", 600, c8, "commutant and image dimensions, gl double commutant n=2,3 r<=4"},
      {"property suites", 300, c9, "Freudenthal, Jacobi, D-map equivariance, surjectivity clauses"},
  };
  return s;
}

std::string fixed(double v, int prec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kNumCriteria) throw InvalidArgument("criterion must be in 1.." + std::to_string(kNumCriteria));
  const Criterion& s = criteria()[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = s.title;
  r.limit_seconds = s.limit;
  const auto t0 = std::chrono::steady_clock::now();
  g_info.clear();
  try {
    const std::string err = s.run();
    r.pass = err.empty();
    r.detail = err.empty() ? s.pass_detail : err;
    if (!g_info.empty()) r.detail += "; " + g_info;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.pass && r.seconds > r.limit_seconds) {
    r.pass = false;
    r.detail = "over the time limit of " + fixed(r.limit_seconds, 0) + " s";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids) {
  std::vector<int> todo = ids;
  if (todo.empty())
    for (int k = 1; k <= kNumCriteria; ++k) todo.push_back(k);
  std::vector<CriterionResult> out;
  for (int id : todo) out.push_back(run_criterion(id));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  (" << r.detail << "; "
     << fixed(r.seconds, 2) << " s)";
  return os.str();
}

}  // namespace takiff
