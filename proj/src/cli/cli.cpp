#include "sidon/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sidon/dense.hpp"
#include "sidon/incidence.hpp"
#include "sidon/json_io.hpp"
#include "sidon/numtheory.hpp"
#include "sidon/planes.hpp"
#include "sidon/search.hpp"
#include "sidon/sidon.hpp"
#include "sidon/sparse.hpp"

namespace sidon::cli {

namespace {

using io::Json;

struct Outcome {
  Json report;
  int code = ExitCode::ok;
  std::string text;  // non-JSON output (CSV, DOT) when set
};

struct Logger {
  std::ostream& err;
  bool verbose = false;
  void operator()(const std::string& msg) const {
    if (verbose) err << "[sidon] " << msg << '\n';
  }
};

FiniteField field_of_order(std::uint64_t q, std::uint64_t cap) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
  return FiniteField::create(pp->first, pp->second, std::nullopt, FieldLimits{cap});
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != item.size()) throw PreconditionError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

Json group_and_set(const AbelianGroup& g, const ElemSet& s) {
  Json j;
  j["group"] = io::group_json(g);
  j["set"] = io::set_json(g, s);
  j["report"] = io::sidon_report_json(g, is_sidon(g, s));
  return j;
}

void merge(Json& into, const Json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string name;
  std::uint64_t q = 0;
};

Outcome do_construct(const ConstructArgs& a, std::uint64_t cap) {
  const auto name = parse_dense_name(a.name);
  if (!name) throw PreconditionError("unknown construction '" + a.name + "'");
  const auto f = field_of_order(a.q, cap);
  const auto c = construct_dense(*name, f, FieldLimits{cap});
  Outcome o;
  o.report["command"] = "construct";
  o.report["name"] = to_string(c.name);
  o.report["q"] = c.q;
  o.report["field"] = io::field_json(f);
  merge(o.report, group_and_set(c.group, c.set));
  o.report["source_orders"] = c.source_orders;
  o.report["iso_note"] = c.iso_note;
  o.report["expected_group_order"] = c.expected_group_order;
  o.report["expected_size"] = c.expected_size;
  o.report["degenerate"] = c.degenerate;
  o.report["perfect_difference_set"] = is_perfect_difference_set(c.group, c.set);
  return o;
}

struct VerifyArgs {
  std::string group, set, input;
};

std::pair<AbelianGroup, ElemSet> load_group_set(const VerifyArgs& a) {
  if (!a.input.empty()) {
    Json j;
    try {
      if (a.input == "-") {
        j = Json::parse(std::cin);
      } else {
        std::ifstream in(a.input);
        if (!in) throw PreconditionError("cannot open " + a.input);
        j = Json::parse(in);
      }
    } catch (const Json::parse_error& e) {
      throw PreconditionError(std::string("malformed JSON input: ") + e.what());
    }
    if (!j.contains("group") || !j.contains("set")) throw PreconditionError("input needs 'group' and 'set'");
    auto g = io::group_from_json(j["group"]);
    auto s = io::set_from_json(g, j["set"]);
    return {g, s};
  }
  if (a.group.empty()) throw PreconditionError("--group or --input is required");
  const auto spec = io::parse_group_spec(a.group);
  return {spec.group(), io::parse_set(spec, a.set)};
}

Outcome do_verify(const VerifyArgs& a) {
  auto [g, s] = load_group_set(a);
  Outcome o;
  o.report["command"] = "verify";
  merge(o.report, group_and_set(g, normalized(s)));
  o.report["perfect_difference_set"] = is_perfect_difference_set(g, s);
  o.report["counting_bound"] = counting_bound(g.order());
  return o;
}

struct DevelopArgs {
  VerifyArgs gs;
  std::string dot;
  bool dual = false;
};

Outcome do_develop(const DevelopArgs& a) {
  auto [g, s] = load_group_set(a.gs);
  s = normalized(s);
  const auto dev = develop(g, s);
  Outcome o;
  Json& r = o.report;
  r["command"] = "develop";
  r["group"] = io::group_json(g);
  r["set"] = io::set_json(g, s);
  r["points"] = dev.num_points();
  r["lines"] = dev.num_lines();
  r["incidences"] = dev.incidences().size();
  const auto pls = is_partial_linear_space(dev);
  r["partial_linear_space"] = pls.ok;
  r["c4_witness"] = nullptr;
  if (pls.witness)
    r["c4_witness"] = {{"points", {io::elem_json(g, pls.witness->points[0]), io::elem_json(g, pls.witness->points[1])}},
                       {"lines", {io::elem_json(g, pls.witness->lines[0]), io::elem_json(g, pls.witness->lines[1])}}};
  const auto plane = is_projective_plane(dev);
  r["projective_plane"] = {{"order", plane.order ? Json(*plane.order) : Json(nullptr)},
                           {"violated", plane.violated ? Json(to_string(*plane.violated)) : Json(nullptr)},
                           {"detail", plane.detail}};
  r["self_dual_via_negation"] = self_dual_via_negation(g, s);
  const auto def = deficiency(dev);
  r["deficiency"] = {{"order", def.order},
                     {"missing_points", def.missing_points},
                     {"missing_lines", def.missing_lines},
                     {"unjoined_point_pairs", def.unjoined_point_pairs},
                     {"disjoint_line_pairs", def.disjoint_line_pairs}};
  if (!a.dot.empty()) {
    std::ofstream f(a.dot);
    if (!f) throw PreconditionError("cannot write " + a.dot);
    f << to_dot(a.dual ? dualize(dev) : dev);
    r["dot_file"] = a.dot;
  }
  return o;
}

struct PlanesArgs {
  std::string family;
  std::uint64_t q = 0;
  bool orbits = false, stabilizers = false, extract = false, recover = false;
  std::int64_t point = -1, line = -1;
};

Json mat_json(const Mat3& m) {
  Json a = Json::array();
  for (auto x : m) a.push_back(x.code);
  return a;
}

Outcome do_planes(const PlanesArgs& a, std::uint64_t cap, const Logger& log) {
  const auto f = field_of_order(a.q, cap);
  Outcome o;
  Json& r = o.report;
  r["command"] = "planes";
  r["field"] = io::field_json(f);
  if (a.recover) {
    log("recovering constructions over F_" + std::to_string(a.q));
    Json rec = Json::array();
    for (const auto& x : recover_constructions(f)) {
      Json e{{"family", to_string(x.family)},
             {"construction", x.construction},
             {"group_matches", x.group_matches},
             {"equivalent", x.equivalent},
             {"exhaustive", x.exhaustive}};
      if (x.extraction) e["extraction_d"] = x.extraction->d;
      rec.push_back(e);
      if (!x.equivalent && !x.exhaustive) o.code = ExitCode::inconclusive;
    }
    r["recoveries"] = rec;
    return o;
  }
  const auto fam = parse_family(a.family);
  if (!fam) throw PreconditionError("unknown family '" + a.family + "'");
  log("building family " + a.family);
  const auto act = family_build(f, *fam);
  r["family"] = to_string(*fam);
  r["group"] = io::group_json(act.group);
  r["expected_order"] = expected_family_order(*fam, a.q);
  r["iso_note"] = act.iso_note;
  Json gens = Json::array();
  for (const auto& m : act.generators) gens.push_back(mat_json(m));
  r["generators"] = gens;
  if (a.orbits) {
    const auto ob = orbit_analysis(act);
    Json ps = Json::array(), ls = Json::array();
    for (const auto& v : ob.point_orbits) ps.push_back(v.size());
    for (const auto& v : ob.line_orbits) ls.push_back(v.size());
    r["orbits"] = {{"t", ob.t}, {"point_orbit_sizes", ps}, {"line_orbit_sizes", ls},
                   {"fixed_points", ob.fixed_points.size()}, {"fixed_lines", ob.fixed_lines.size()}};
  }
  if (a.stabilizers) {
    const auto st = stabilizer_scan(act);
    auto trivial = [](const std::vector<std::uint32_t>& v) { return std::count(v.begin(), v.end(), 1u); };
    r["stabilizers"] = {{"points_with_trivial_stabilizer", trivial(st.point_stabilizer)},
                        {"lines_with_trivial_stabilizer", trivial(st.line_stabilizer)},
                        {"max_point_stabilizer", *std::max_element(st.point_stabilizer.begin(), st.point_stabilizer.end())},
                        {"max_line_stabilizer", *std::max_element(st.line_stabilizer.begin(), st.line_stabilizer.end())}};
  }
  if (a.extract) {
    std::optional<std::pair<std::uint32_t, std::uint32_t>> pl;
    if (a.point >= 0 && a.line >= 0)
      pl = {{static_cast<std::uint32_t>(a.point), static_cast<std::uint32_t>(a.line)}};
    else
      pl = default_extraction_pair(act);
    if (!pl) throw PreconditionError("no point and line with trivial stabilizers");
    const auto ex = extract_sidon(act, pl->first, pl->second);
    Json e = group_and_set(act.group, ex.set);
    e["point"] = ex.point;
    e["line"] = ex.line;
    e["d"] = ex.d;
    e["d_outside_orbit"] = ex.d_outside_orbit;
    e["bound_ok"] = ex.bound_ok;
    r["extraction"] = e;
    r["set"] = e["set"];
  }
  return o;
}

struct SparseArgs {
  std::string construction;
  std::uint64_t x = 0, m = 0, n = 0, d = 0, q = 0;
  bool assert_h1 = false;
  std::string u, set, eps, spec;
};

Outcome do_sparse(const SparseArgs& a, std::uint64_t cap) {
  Outcome o;
  Json& r = o.report;
  r["command"] = "sparse";
  r["construction"] = a.construction;
  auto need = [&](std::uint64_t v, const char* flag) {
    if (v == 0) throw PreconditionError(std::string("construction ") + a.construction + " needs " + flag);
    return v;
  };
  const std::string& c = a.construction;
  if (c == "A") {
    const auto s = log_primes(need(a.x, "--X"));
    r["integers"] = s.set;
    r["sidon"] = s.sidon;
    r["high_precision_recomputations"] = s.high_precision_recomputations;
  } else if (c == "B") {
    const auto s = quotient_ring_primes(need(a.m, "--m"));
    merge(r, group_and_set(s.group, s.set));
    r["primes"] = s.labels;
    r["residues"] = s.values;
    r["iso_note"] = s.iso_note;
  } else if (c == "C") {
    const auto s = gaussian_angles(need(a.n, "--n"));
    r["integers"] = s.integers.set;
    r["sidon"] = s.integers.sidon;
    r["sidon_mod_n"] = s.sidon_mod_n;
    Json ps = Json::array();
    for (const auto& g : s.primes)
      ps.push_back({{"p", g.p}, {"rho", {g.re, g.im}}, {"rho4", {g.re4, g.im4}}, {"phi", io::approx(g.phi)}, {"element", g.element}});
    r["primes"] = ps;
  } else if (c == "D") {
    const auto s = class_group_primes(need(a.d, "--D"));
    r["discriminant"] = s.cl.discriminant();
    r["class_number"] = s.cl.reduced_forms().size();
    merge(r, group_and_set(s.result.group, s.result.set));
    r["iso_note"] = s.result.iso_note;
    r["split_primes"] = s.split_primes;
    r["primes"] = s.result.values;
    r["forms"] = s.result.labels;
    Json dis = Json::array();
    for (const auto& [p, why] : s.discarded) dis.push_back({{"p", p}, {"reason", why}});
    r["discarded"] = dis;
    r["injective"] = s.injective;
  } else if (c == "E") {
    const auto s = real_quadratic(need(a.d, "--D"), a.assert_h1);
    r["D"] = s.d;
    r["unit"] = {{"a", s.unit.a}, {"b", s.unit.b}, {"norm", s.unit.norm}, {"period", s.unit.period},
                 {"regulator", {{"decimal", s.unit.regulator}, {"precision", "30 significant digits"}}}};
    r["M"] = s.modulus;
    Json ps = Json::array();
    for (const auto& p : s.primes)
      ps.push_back({{"p", p.p}, {"a", p.a}, {"b", p.b}, {"norm_sign", p.sign}, {"element", p.element},
                    {"margin", io::approx(p.margin)}});
    r["primes"] = ps;
    r["skipped"] = s.skipped;
    r["integers"] = s.set;
    r["sidon"] = s.sidon;
    r["class_number_one_asserted"] = s.class_number_one_asserted;
    if (s.modulus > 1) {
      const auto g = AbelianGroup::cyclic(s.modulus);
      ElemSet e;
      for (auto x : s.set) e.push_back(static_cast<Elem>(x));
      merge(r, group_and_set(g, e));
    }
  } else if (c == "F") {
    const auto f = field_of_order(need(a.q, "--q"), cap);
    std::vector<Fq> u;
    if (a.u.empty()) {
      u = cubic_max_subset(f);
    } else {
      for (auto v : parse_int_list(a.u)) {
        if (v < 0 || static_cast<std::uint64_t>(v) >= f.order()) throw PreconditionError("field element code out of range");
        u.push_back(Fq{static_cast<std::uint32_t>(v)});
      }
    }
    const auto pairs = cubic_zero_sum_pairs(f, u);
    if (pairs.size() > 1) {
      Json w = Json::array();
      for (auto [x, y] : pairs) w.push_back({x.code, y.code});
      r["error"] = "more than one pair with x + y = 0";
      r["witness_pairs"] = w;
      o.code = ExitCode::precondition;
      return o;
    }
    const auto s = cubic_graph(f, u);
    r["field"] = io::field_json(f);
    Json us = Json::array();
    for (auto x : u) us.push_back(x.code);
    r["U"] = us;
    merge(r, group_and_set(s.group, s.set));
  } else if (c == "H") {
    const auto s = parse_int_list(a.set);
    std::vector<int> eps;
    if (a.eps.empty())
      eps.assign(s.size(), 0);
    else
      for (auto v : parse_int_list(a.eps)) eps.push_back(static_cast<int>(v));
    const auto p = perturb(s, eps);
    r["integers"] = p.set;
    r["sidon"] = p.sidon;
  } else if (c == "framework") {
    if (a.spec.empty()) throw PreconditionError("framework needs --spec (file path or inline JSON)");
    Json j;
    try {
      if (a.spec.find('{') != std::string::npos) {
        j = Json::parse(a.spec);
      } else {
        std::ifstream in(a.spec);
        if (!in) throw PreconditionError("cannot open " + a.spec);
        j = Json::parse(in);
      }
    } catch (const Json::parse_error& e) {
      throw PreconditionError(std::string("malformed framework spec: ") + e.what());
    }
    const auto spec = io::framework_spec_from_json(j);
    const auto res = framework_build(spec);
    r["spec"] = io::framework_spec_json(spec);
    Json ids = Json::array();
    for (const auto& id : res.ideals) {
      Json e{{"label", id.label}, {"norm", id.norm}, {"kept", id.kept}};
      if (!id.reason.empty()) e["reason"] = id.reason;
      if (!id.point.empty()) e["point"] = id.point;
      ids.push_back(e);
    }
    r["ideals"] = ids;
    r["points"] = res.points;
    r["check_i"] = res.check_i;
    r["check_ii"] = res.check_ii;
    r["sidon"] = res.sidon;
    r["ties"] = res.ties;
    r["high_precision_recomputations"] = res.high_precision_recomputations;
    if (res.log_ratio_modulus) r["log_ratio_M"] = res.log_ratio_modulus;
    if (res.group_verified) {
      r["group"] = io::group_json(res.group);
      r["set"] = io::set_json(res.group, res.set);
    }
  } else {
    throw PreconditionError("unknown construction '" + c + "' (expected A, B, C, D, E, F, H or framework)");
  }
  return o;
}

struct SearchArgs {
  std::string group;
  bool max = false;
  std::int64_t enumerate = -1;
  std::string table;
  std::uint64_t budget = std::uint64_t{1} << 34;
  std::size_t max_sets = 16;
};

Outcome do_search(const SearchArgs& a, const std::string& format, const Logger& log) {
  Outcome o;
  Json& r = o.report;
  r["command"] = "search";
  SearchOptions opt{a.budget, a.max_sets, true};
  if (!a.table.empty()) {
    const auto dash = a.table.find('-');
    if (dash == std::string::npos) throw PreconditionError("--table expects a range lo-hi");
    const auto lo = std::stoull(a.table.substr(0, dash)), hi = std::stoull(a.table.substr(dash + 1));
    if (lo < 1 || hi < lo) throw PreconditionError("bad --table range");
    std::ostringstream csv;
    csv << "n,sigma,counting_bound,exhaustive,nodes\n";
    Json rows = Json::array();
    for (auto n = lo; n <= hi; ++n) {
      log("sigma(Z/" + std::to_string(n) + ")");
      const auto res = max_sidon(AbelianGroup::cyclic(n), {a.budget, 1, true});
      const auto cb = counting_bound(n);
      csv << n << ',' << res.sigma << ',' << cb << ',' << (res.exhaustive ? 1 : 0) << ',' << res.nodes_visited << '\n';
      rows.push_back({{"n", n}, {"sigma", res.sigma}, {"counting_bound", cb}, {"exhaustive", res.exhaustive},
                      {"nodes", res.nodes_visited}});
      if (!res.exhaustive) o.code = ExitCode::inconclusive;
    }
    if (format == "csv") o.text = csv.str();
    r["table"] = rows;
    return o;
  }
  if (a.group.empty()) throw PreconditionError("--group is required");
  const auto spec = io::parse_group_spec(a.group);
  const auto& g = spec.group();
  r["group"] = io::group_json(g);
  if (a.enumerate >= 0) {
    opt.max_sets = a.max_sets == 16 ? SIZE_MAX : a.max_sets;
    const auto e = enumerate_sidon(g, static_cast<std::size_t>(a.enumerate), opt);
    r["size"] = a.enumerate;
    Json sets = Json::array();
    for (const auto& s : e.sets) sets.push_back(io::set_json(g, s));
    r["sets"] = sets;
    r["count"] = e.sets.size();
    r["nodes_visited"] = e.nodes_visited;
    r["exhaustive"] = e.exhaustive;
    if (!e.exhaustive) o.code = ExitCode::inconclusive;
    return o;
  }
  const auto res = max_sidon(g, opt);
  r["sigma"] = res.sigma;
  r["counting_bound"] = counting_bound(g.order());
  Json sets = Json::array();
  for (const auto& s : res.extremal_sets) sets.push_back(io::set_json(g, s));
  r["extremal_sets"] = sets;
  r["nodes_visited"] = res.nodes_visited;
  r["exhaustive"] = res.exhaustive;
  if (!res.extremal_sets.empty()) r["set"] = sets[0];
  if (!res.exhaustive) o.code = ExitCode::inconclusive;
  return o;
}

struct ConjectureArgs {
  std::string name;
  std::uint64_t p = 0;
  std::uint64_t budget = std::uint64_t{1} << 34;
};

Outcome do_conjecture(const ConjectureArgs& a) {
  Outcome o;
  Json& r = o.report;
  r["command"] = "conjecture";
  r["name"] = a.name;
  r["p"] = a.p;
  SearchOptions opt{a.budget, SIZE_MAX, true};
  Verdict v;
  if (a.name == "T-subgroup") {
    const auto rep = test_T_subgroup(a.p, opt);
    const AbelianGroup g(std::vector<std::uint64_t>{a.p, a.p});
    v = rep.verdict;
    r["group"] = io::group_json(g);
    r["verdict"] = to_string(v);
    r["counterexample"] = rep.counterexample ? io::set_json(g, *rep.counterexample) : Json(nullptr);
    r["canonical_sets"] = rep.canonical_sets;
    r["affine_classes"] = rep.affine_classes;
    r["class_sizes"] = rep.class_sizes;
    r["nodes_visited"] = rep.nodes_visited;
  } else if (a.name == "extendable") {
    const auto rep = test_extendable(a.p, opt);
    const auto g = AbelianGroup::cyclic(a.p * a.p + a.p + 1);
    v = rep.verdict;
    r["group"] = io::group_json(g);
    r["verdict"] = to_string(v);
    r["counterexample"] = rep.counterexample ? io::set_json(g, *rep.counterexample) : Json(nullptr);
    r["sets_tested"] = rep.sets_tested;
    r["extendable"] = rep.extendable;
    r["nodes_visited"] = rep.nodes_visited;
  } else {
    throw PreconditionError("unknown conjecture '" + a.name + "' (expected T-subgroup or extendable)");
  }
  if (v == Verdict::inconclusive) o.code = ExitCode::inconclusive;
  return o;
}

Outcome do_orders(std::uint64_t n) {
  Outcome o;
  o.report["command"] = "orders";
  o.report["n"] = n;
  Json m = Json::array();
  for (const auto& x : admissible_orders(n)) m.push_back({{"form", to_string(x.form)}, {"q", x.q}});
  o.report["admissible"] = !m.empty();
  o.report["matches"] = m;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sidon sets in finite abelian groups: constructions, verification, planes and search", "sidon"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  bool verbose = false, pretty = false;
  std::string format = "json";
  std::uint64_t field_cap = 1u << 20;
  app.add_option("--threads", threads, "Worker threads (default: OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_flag("-v,--verbose", verbose, "Progress messages on stderr");
  app.add_flag("--pretty", pretty, "Indent JSON output");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--field-cap", field_cap, "Largest field order accepted")->check(CLI::PositiveNumber);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Dense constructions (erdos_turan, singer, bose, spence, hughes)");
  construct->add_option("--name", ca.name, "Construction name")->required();
  construct->add_option("--q", ca.q, "Field order")->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the Sidon property of a set");
  verify->add_option("--group", va.group, "Cyclic orders n1,n2,...");
  verify->add_option("--set", va.set, "Elements: 1,2,4 (cyclic) or a JSON array of coordinate arrays");
  verify->add_option("--input", va.input, "JSON document with 'group' and 'set' ('-' for stdin)");

  DevelopArgs da;
  auto* dev = app.add_subcommand("develop", "Incidence structure developed from a set");
  dev->add_option("--group", da.gs.group, "Cyclic orders n1,n2,...");
  dev->add_option("--set", da.gs.set, "Elements");
  dev->add_option("--input", da.gs.input, "JSON document with 'group' and 'set'");
  dev->add_option("--dot", da.dot, "Write the incidence graph in DOT format to this file");
  dev->add_flag("--dual", da.dual, "Write the dual structure instead");

  PlanesArgs pa;
  auto* planes = app.add_subcommand("planes", "Abelian collineation groups of the desarguesian plane");
  planes->add_option("--family", pa.family, "Family i..ix");
  planes->add_option("--q", pa.q, "Field order")->required();
  planes->add_flag("--orbits", pa.orbits, "Orbit analysis");
  planes->add_flag("--stabilizers", pa.stabilizers, "Stabilizer scan");
  planes->add_flag("--extract", pa.extract, "Extract a Sidon set");
  planes->add_option("--point", pa.point, "Point index for --extract");
  planes->add_option("--line", pa.line, "Line index for --extract");
  planes->add_flag("--recover", pa.recover, "Match families against the dense constructions");

  SparseArgs sa;
  auto* sparse = app.add_subcommand("sparse", "Sparse constructions A-F, H and the rounding framework");
  sparse->add_option("--construction", sa.construction, "A, B, C, D, E, F, H or framework")->required();
  sparse->add_option("--X", sa.x, "A: prime bound");
  sparse->add_option("--m", sa.m, "B: modulus");
  sparse->add_option("--n", sa.n, "C: interval length");
  sparse->add_option("--D", sa.d, "D, E: squarefree D");
  sparse->add_flag("--assert-h1", sa.assert_h1, "E: record that class number one is assumed");
  sparse->add_option("--q", sa.q, "F: field order");
  sparse->add_option("--U", sa.u, "F: field element codes (default: a largest admissible set)");
  sparse->add_option("--set", sa.set, "H: Sidon set of integers");
  sparse->add_option("--eps", sa.eps, "H: perturbations in {-1,0,1}");
  sparse->add_option("--spec", sa.spec, "framework: JSON spec or path to one");

  SearchArgs sea;
  auto* search = app.add_subcommand("search", "Exhaustive search for Sidon sets");
  search->add_option("--group", sea.group, "Cyclic orders n1,n2,...");
  search->add_flag("--max", sea.max, "Maximum size (default)");
  search->add_option("--enumerate", sea.enumerate, "Enumerate canonical sets of this size");
  search->add_option("--table", sea.table, "sigma(Z/n) for n in lo-hi");
  search->add_option("--budget", sea.budget, "Node budget");
  search->add_option("--max-sets", sea.max_sets, "Cap on listed sets");

  ConjectureArgs cja;
  auto* conj = app.add_subcommand("conjecture", "Exhaustive conjecture testers");
  conj->add_option("--name", cja.name, "T-subgroup or extendable")->required();
  conj->add_option("--p", cja.p, "Prime")->required();
  conj->add_option("--budget", cja.budget, "Node budget");

  std::uint64_t order_n = 0;
  auto* orders = app.add_subcommand("orders", "Group orders admitted for dense Sidon sets");
  orders->add_option("--n", order_n, "Group order")->required()->check(CLI::PositiveNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  const Logger log{err, verbose};
  if (threads > 0) omp_set_num_threads(threads);
  Outcome o;
  try {
    if (*construct)
      o = do_construct(ca, field_cap);
    else if (*verify)
      o = do_verify(va);
    else if (*dev)
      o = do_develop(da);
    else if (*planes)
      o = do_planes(pa, field_cap, log);
    else if (*sparse)
      o = do_sparse(sa, field_cap);
    else if (*search)
      o = do_search(sea, format, log);
    else if (*conj)
      o = do_conjecture(cja);
    else if (*orders)
      o = do_orders(order_n);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    Json j{{"error", e.what()}};
    out << j.dump(pretty ? 2 : -1) << '\n';
    return ExitCode::precondition;
  }
  if (!o.text.empty())
    out << o.text;
  else
    out << o.report.dump(pretty ? 2 : -1) << '\n';
  return o.code;
}

}  // namespace sidon::cli
