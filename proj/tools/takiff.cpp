// Command-line front end. One JSON object (or TSV row) per result on stdout,
// diagnostics on stderr. Exit codes: 0 ok, 1 bad input, 2 size cap, 3 internal
// error or failed selftest.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "takiff/blocks.hpp"
#include "takiff/errors.hpp"
#include "takiff/ext.hpp"
#include "takiff/ideals.hpp"
#include "takiff/invariants.hpp"
#include "takiff/rootsys.hpp"
#include "takiff/selftest.hpp"
#include "takiff/takiff.hpp"

using json = nlohmann::ordered_json;
using namespace takiff;

namespace {

enum class Format { Json, Tsv };

// json.dumps-style separators so output is stable and readable
std::string render(const json& v) {
  if (v.is_object()) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, x] : v.items()) {
      if (!first) s += ", ";
      first = false;
      s += json(k).dump() + ": " + render(x);
    }
    return s + "}";
  }
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + render(v[k]);
    return s + "]";
  }
  return v.dump();
}

std::string tsv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return render(v);
}

void emit(const std::vector<json>& rows, Format fmt) {
  if (fmt == Format::Json) {
    for (const auto& r : rows) std::cout << render(r) << '\n';
    return;
  }
  bool header = false;
  for (const auto& r : rows) {
    if (!header) {
      std::string line;
      for (const auto& [k, x] : r.items()) line += (line.empty() ? "" : "\t") + k;
      std::cout << line << '\n';
      header = true;
    }
    std::string line;
    bool first = true;
    for (const auto& [k, x] : r.items()) {
      line += (first ? "" : "\t") + tsv_cell(x);
      first = false;
    }
    std::cout << line << '\n';
  }
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw InvalidArgument("malformed integer list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

Weight parse_weight(const std::string& text, int rank) {
  const auto v = parse_ints(text);
  if (static_cast<int>(v.size()) != rank)
    throw InvalidArgument("weight '" + text + "' needs " + std::to_string(rank) + " comma-separated coordinates");
  return Weight(std::span<const int>(v));
}

// "c1,...,cr;a", or r+1 comma-separated integers with the delta coefficient last
SuperWeight parse_super(const std::string& text, int rank) {
  if (text.find(';') != std::string::npos) return SuperWeight::parse(text, rank);
  const auto v = parse_ints(text);
  if (static_cast<int>(v.size()) != rank + 1)
    throw InvalidArgument("super weight '" + text + "' must be c1,...,cr;a (or " + std::to_string(rank + 1) +
                          " comma-separated integers)");
  return {Weight(std::span<const int>(v.data(), rank)), v[rank]};
}

std::string q(const mpq_class& x) { return x.get_str(); }

json root_list(const RootDatum& rd, const RootIdeal& ideal) {
  json a = json::array();
  for (int k : ideal.members()) a.push_back(rd.positive_roots()[k].to_string());
  return a;
}

json index_root_list(const RootDatum& rd, const std::vector<int>& idx) {
  json a = json::array();
  for (int k : idx) a.push_back(rd.positive_roots()[k].to_string());
  return a;
}

// number when it fits a long, decimal string otherwise
json big(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

struct Options {
  std::string format = "json";
  std::string type;
  int rank = 0;
  std::string weight, source, target, x, y, block, engine = "auto", category = "F", kind = "compare", roots,
      algebra = "g";
  int i = 0;
  int coord_max = 2, level_max = 2, samples = 20, imax = 3;
  unsigned seed = 20240601u;
  int n = 0, r = 0;
  std::vector<int> criteria;
  bool all = false;
};

const RootDatum& datum(const Options& o) {
  if (o.type.size() != 1) throw InvalidArgument("--type must be one letter A..G");
  return cached_root_datum(parse_series(o.type[0]), o.rank);
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw InvalidArgument(std::string("missing ") + flag);
}

BlockLabel block_arg(const RootDatum& rd, const Options& o) {
  require(o.block, "--block");
  return parse_block_label(rd, o.block);
}

Engine engine_arg(const std::string& e) {
  if (e == "auto") return Engine::Auto;
  if (e == "closed") return Engine::Closed;
  if (e == "oracle") return Engine::Oracle;
  throw InvalidArgument("--engine must be auto, closed or oracle");
}

std::vector<json> factor_rows(const std::vector<Factor>& fs) {
  std::vector<json> rows;
  for (const auto& f : fs) rows.push_back({{"weight", f.weight.to_string()}, {"mult", f.mult}});
  return rows;
}

std::vector<json> run(const std::string& cmd, const Options& o, int& status) {
  std::vector<json> rows;
  if (cmd == "root-datum") {
    const auto& rd = datum(o);
    json cartan = json::array();
    for (const auto& row : rd.cartan()) cartan.push_back(row);
    rows.push_back({{"type", rd.name()},
                    {"rank", rd.rank()},
                    {"dim", rd.dim_algebra()},
                    {"num_positive_roots", rd.num_positive_roots()},
                    {"coxeter_number", rd.coxeter_number()},
                    {"exponents", rd.exponents()},
                    {"weyl_group_order", big(rd.weyl_group_order())},
                    {"det_cartan", cartan_determinant(rd)},
                    {"highest_root", rd.highest_root().to_string()},
                    {"rho", rd.rho().to_string()},
                    {"cartan", cartan}});
  } else if (cmd == "minuscule") {
    for (const auto& w : minuscule_weights(datum(o))) rows.push_back({{"weight", w.to_string()}});
  } else if (cmd == "blocks") {
    const auto& rd = datum(o);
    if (o.category == "F") {
      rows.push_back({{"num_blocks", num_blocks(rd)}});
    } else if (o.category == "O") {
      rows.push_back({{"num_blocks", num_blocks(rd, Category::O)}});
    } else {
      throw InvalidArgument("--category must be F or O");
    }
  } else if (cmd == "block-label") {
    const auto& rd = datum(o);
    require(o.weight, "--weight");
    const SuperWeight x = parse_super(o.weight, rd.rank());
    const BlockLabel l = o.category == "O" ? block_label_O(rd, x) : block_label_F(rd, x);
    rows.push_back({{"weight", x.to_string()}, {"label", l.to_string()}, {"principal", l.is_principal()}});
  } else if (cmd == "linkage") {
    const auto& rd = datum(o);
    require(o.weight, "--weight");
    int k = 0;
    for (const auto& s : linkage_chain(rd, parse_super(o.weight, rd.rank())))
      rows.push_back({{"step", k++},
                      {"from", s.from.to_string()},
                      {"to", s.to.to_string()},
                      {"rule", rule_name(s.rule)},
                      {"standard", s.standard.to_string()},
                      {"factor", s.factor.to_string()},
                      {"witness", s.witness}});
  } else if (cmd == "delta-mult" || cmd == "proj-mult") {
    const auto& rd = datum(o);
    require(o.x, "--x");
    const SuperWeight x = parse_super(o.x, rd.rank());
    const bool delta = cmd == "delta-mult";
    if (!o.y.empty()) {
      const SuperWeight y = parse_super(o.y, rd.rank());
      rows.push_back({{"mult", delta ? delta_mult(rd, x, y) : proj_mult(rd, x, y)}});
    } else {
      rows = factor_rows(delta ? delta_factors(rd, x) : proj_factors(rd, x));
    }
  } else if (cmd == "dual") {
    const auto& rd = datum(o);
    require(o.weight, "--weight");
    rows.push_back({{"dual", dual_simple(rd, parse_super(o.weight, rd.rank())).to_string()}});
  } else if (cmd == "ext" || cmd == "ext1" || cmd == "ext1-conformal") {
    const auto& rd = datum(o);
    require(o.source, "--source");
    require(o.target, "--target");
    const SuperWeight x = parse_super(o.source, rd.rank()), y = parse_super(o.target, rd.rank());
    long d = 0;
    if (cmd == "ext")
      d = ext_dim(rd, o.i, x, y, engine_arg(o.engine));
    else if (cmd == "ext1")
      d = ext1_closed(rd, x, y);
    else
      d = ext1_conformal(rd, x, y);
    rows.push_back({{"dim", d}});
  } else if (cmd == "quiver") {
    const auto& rd = datum(o);
    const BlockLabel l = block_arg(rd, o);
    const Window w{o.coord_max, o.level_max};
    if (o.kind == "compare") {
      const auto f = build_quiver(rd, l, w, QuiverKind::F);
      const auto c = build_quiver(rd, l, w, QuiverKind::C);
      rows.push_back({{"agree", compare_quivers(f, c)},
                      {"vertices", f.vertices.size()},
                      {"edges_f", f.edges.size()},
                      {"edges_c", c.edges.size()}});
    } else if (o.kind == "F" || o.kind == "C") {
      const auto g = build_quiver(rd, l, w, o.kind == "F" ? QuiverKind::F : QuiverKind::C);
      for (const auto& [e, d] : g.edges)
        rows.push_back({{"from", g.vertices[e.first].to_string()},
                        {"to", g.vertices[e.second].to_string()},
                        {"dim", d},
                        {"interior", g.interior[e.first] && g.interior[e.second]}});
    } else {
      throw InvalidArgument("--kind must be F, C or compare");
    }
  } else if (cmd == "koszul-check") {
    const auto& rd = datum(o);
    const auto rep = koszul_diagonal_check(rd, block_arg(rd, o), o.samples, o.imax, o.seed);
    json v = json::array();
    for (const auto& x : rep.violations)
      v.push_back({{"x", x.x.to_string()}, {"y", x.y.to_string()}, {"i", x.i}, {"dim", x.dim}});
    rows.push_back({{"pairs", rep.pairs.size()},
                    {"evaluated", rep.evaluated},
                    {"num_violations", rep.violations.size()},
                    {"violations", v}});
  } else if (cmd == "ideals") {
    const auto& rd = datum(o);
    int k = 0;
    for (const auto& id : enumerate_ideals(rd))
      rows.push_back({{"index", k++}, {"size", id.size()}, {"roots", root_list(rd, id)}});
  } else if (cmd == "borel-count") {
    rows.push_back({{"classes", big(count_borel_classes(datum(o)).closed)}});
  } else if (cmd == "borel-classify") {
    const auto& rd = datum(o);
    for (const auto& b : classify_borels(rd)) {
      json h = json::array();
      for (const auto& c : b.h) h.push_back(q(c));
      rows.push_back({{"kind", b.kind == BorelKind::A ? "A" : "B"},
                      {"ideal", root_list(rd, b.nprime)},
                      {"negatives", index_root_list(rd, b.negatives)},
                      {"includes_del_xi", b.includes_del_xi},
                      {"h", h},
                      {"xi_coeff", b.xi_coeff},
                      {"dim", b.dim}});
    }
  } else if (cmd == "shi-witness") {
    const auto& rd = datum(o);
    std::vector<RootIdeal> todo;
    if (o.all) {
      todo = enumerate_ideals(rd);
    } else {
      std::vector<int> idx;
      // ';'-separated roots in simple coordinates
      std::stringstream ss(o.roots);
      std::string tok;
      while (std::getline(ss, tok, ';')) {
        const int k = rd.root_index(parse_weight(tok, rd.rank()));
        if (k < 0) throw InvalidArgument("'" + tok + "' is not a positive root");
        idx.push_back(k);
      }
      todo.push_back(ideal_generated_by(rd, idx));
    }
    for (const auto& id : todo) {
      const auto h = shi_witness(rd, id);
      json hj = json::array();
      for (const auto& c : h) hj.push_back(q(c));
      rows.push_back({{"ideal", root_list(rd, id)}, {"h", hj}, {"valid", check_shi_witness(rd, id, h)}});
    }
  } else if (cmd == "commutant") {
    Algebra a = Algebra::G;
    if (o.algebra == "gl")
      a = Algebra::GL;
    else if (o.algebra != "g")
      throw InvalidArgument("--algebra must be g or gl");
    const auto d = commutant_dims(o.n, o.r, a);
    rows.push_back({{"n", o.n}, {"r", o.r}, {"algebra", o.algebra}, {"even", d.even}, {"odd", d.odd}, {"dim", d.total()}});
  } else if (cmd == "phi-image") {
    rows.push_back({{"n", o.n}, {"r", o.r}, {"dim", phi_image_dim(o.n, o.r)}});
  } else if (cmd == "thmIT") {
    const auto v = thmIT_verdict(o.n, o.r);
    rows.push_back({{"n", v.n},
                    {"r", v.r},
                    {"factorial", v.factorial},
                    {"commutant", v.commutant},
                    {"image", v.image},
                    {"injective", v.injective},
                    {"surjective", v.surjective},
                    {"violations", v.violations}});
  } else if (cmd == "selftest") {
    for (const auto& r : run_acceptance(o.criteria)) {
      std::cerr << format_result(r) << '\n';
      rows.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
      if (!r.pass) status = 3;
    }
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation-theoretic invariants of Takiff superalgebras"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  auto lie = [&](CLI::App* s) {
    s->add_option("--type", o.type, "Lie type A..G")->required();
    s->add_option("--rank", o.rank, "rank")->required();
  };
  auto fmt = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  };
  auto sub = [&](const char* name, const char* help, bool with_lie) {
    CLI::App* s = app.add_subcommand(name, help);
    if (with_lie) lie(s);
    fmt(s);
    return s;
  };

  sub("root-datum", "Cartan data of a simple type", true);
  sub("minuscule", "minuscule weights, one per block", true);
  sub("blocks", "number of blocks", true)->add_option("--category", o.category, "F or O");
  {
    auto* s = sub("block-label", "block containing a super weight", true);
    s->add_option("--weight", o.weight, "c1,...,cr;a")->required();
    s->add_option("--category", o.category, "F or O");
  }
  sub("linkage", "explicit linkage chain to the block representative", true)
      ->add_option("--weight", o.weight, "c1,...,cr;a")
      ->required();
  for (const char* name : {"delta-mult", "proj-mult"}) {
    auto* s = sub(name, name[0] == 'd' ? "standard module multiplicities" : "projective cover multiplicities", true);
    s->add_option("--x", o.x, "module highest weight")->required();
    s->add_option("--y", o.y, "simple factor; lists all factors if omitted");
  }
  sub("dual", "highest weight of L(x)*", true)->add_option("--weight", o.weight)->required();
  {
    auto* s = sub("ext", "dim Ext^i(L(source), L(target))", true);
    s->add_option("--i", o.i, "degree")->required();
    s->add_option("--source", o.source)->required();
    s->add_option("--target", o.target)->required();
    s->add_option("--engine", o.engine, "auto, closed or oracle");
  }
  for (const char* name : {"ext1", "ext1-conformal"}) {
    auto* s = sub(name, name[4] == '-' ? "first Ext in the conformal category" : "first Ext, closed form", true);
    s->add_option("--source", o.source)->required();
    s->add_option("--target", o.target)->required();
  }
  {
    auto* s = sub("quiver", "Ext^1 quiver of a block inside a window", true);
    s->add_option("--block", o.block, "nu=c1,...,cr or Even/OddA/OddB")->required();
    s->add_option("--coord-max", o.coord_max);
    s->add_option("--level-max", o.level_max);
    s->add_option("--kind", o.kind, "F, C or compare");
  }
  {
    auto* s = sub("koszul-check", "off-diagonal Ext on sampled pairs of a block", true);
    s->add_option("--block", o.block)->required();
    s->add_option("--samples", o.samples);
    s->add_option("--imax", o.imax);
    s->add_option("--seed", o.seed);
  }
  sub("ideals", "ideals of the positive roots", true);
  sub("borel-count", "conjugacy classes of Borel subalgebras", true);
  sub("borel-classify", "explicit Borel subalgebras with regular elements", true);
  {
    auto* s = sub("shi-witness", "point separating an ideal", true);
    s->add_option("--roots", o.roots, "generators, roots in simple coordinates separated by ';'");
    s->add_flag("--all", o.all, "every ideal");
  }
  {
    auto* s = sub("commutant", "dimension of the supercommutant", false);
    s->add_option("--n", o.n)->required();
    s->add_option("--r", o.r)->required();
    s->add_option("--algebra", o.algebra, "g or gl");
  }
  for (const char* name : {"phi-image", "thmIT"}) {
    auto* s = sub(name, name[0] == 'p' ? "rank of the permutation operators" : "Schur-Weyl verdict", false);
    s->add_option("--n", o.n)->required();
    s->add_option("--r", o.r)->required();
  }
  sub("selftest", "acceptance suite", false)->add_option("--criterion", o.criteria, "criteria to run (default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    int status = 0;
    const auto rows = run(cmd, o, status);
    emit(rows, o.format == "tsv" ? Format::Tsv : Format::Json);
    return status;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
