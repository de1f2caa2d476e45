#include "ddist/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_set>

#include "ddist/constructions.hpp"
#include "ddist/crossing.hpp"
#include "ddist/distance_stats.hpp"
#include "ddist/error.hpp"
#include "ddist/esgk.hpp"
#include "ddist/io.hpp"
#include "ddist/reguli.hpp"

namespace ddist {

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string svg;
  std::string format = "json";
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t s = 0;
  std::uint64_t seed = 0;
  std::int64_t den_max = 4;
  std::int64_t K = 1;
  std::string c = "1/64";
  std::string reguli;
  bool no_szekely = false;
  bool elekes = false;
  bool arcs = false;
  // regulus
  std::string lines;
  std::string p;
  std::string q;
  std::string r;
  std::string ts;
  std::string base;
  std::string dir;
  std::string dirs;
};

void flatten(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << ',' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::string render(const Json& j, const std::string& format) {
  if (format == "csv") {
    std::ostringstream os;
    os << "key,value\n";
    flatten(j, "", os);
    return os.str();
  }
  return j.dump(2) + "\n";
}

void emit(const std::string& content, const Options& o, std::ostream& out) {
  if (o.output.empty() || o.output == "-") {
    out << content;
  } else {
    write_file_atomic(o.output, content);
  }
}

Json load_input(const Options& o, std::istream& in) {
  if (o.input.empty() || o.input == "-") {
    try {
      return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::Validation, std::string("stdin: malformed JSON: ") + e.what());
    }
  }
  return read_json_file(o.input);
}

Rat parse_positive(const std::string& s, const std::string& what) {
  const auto v = parse_rat_list(s, what);
  if (v.size() != 1 || v[0].sign() <= 0) throw Error(ErrorKind::InvalidParams, what + " must be a positive rational");
  return v[0];
}

Rat parse_constant(const std::string& s) { return parse_positive(s, "--c"); }

std::vector<Vec2> parse_dir_list(const std::string& s) {
  std::vector<Vec2> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) out.push_back(parse_pt2(tok, "--dirs"));
  return out;
}

// ---------------------------------------------------------------- construct

PointSetPair random_point_set(std::int64_t m, std::int64_t n, std::uint64_t seed, std::int64_t den_max) {
  if (m < 1 || n < 1 || den_max < 1) throw Error(ErrorKind::InvalidParams, "random: need m, n, den-max >= 1");
  std::mt19937_64 rng(seed);
  // Plain modulo keeps the stream identical across standard libraries.
  auto coord = [&] {
    const auto den = static_cast<std::int64_t>(1 + rng() % static_cast<std::uint64_t>(den_max));
    const auto num = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(100 * den + 1));
    return Rat(num, den);
  };
  std::unordered_set<Pt2, Pt2Hash> used;
  auto draw = [&](std::int64_t count) {
    std::vector<Pt2> pts;
    while (static_cast<std::int64_t>(pts.size()) < count) {
      Pt2 p{coord(), coord()};
      if (used.insert(p).second) pts.push_back(p);
    }
    return pts;
  };
  auto P = draw(m);
  auto Q = draw(n);
  return make_point_set_pair(std::move(P), std::move(Q));
}

Json construct_elekes(const Options& o) {
  const CircleGrid g = elekes_grid(o.m, o.s);
  const GridCensus census = elekes_distance_census(g);
  Json j = to_json(g);
  j["summary"] = Json{{"m", g.m},
                      {"n", g.n()},
                      {"count", census.count},
                      {"min", census.min},
                      {"max", census.max},
                      {"within_bounds", o.m <= o.s ? Json(census_within_bounds(g, census)) : Json(nullptr)}};
  return j;
}

Json construct_orthogonal(const Options& o) {
  const auto census = orthogonal_pair(o.m, o.n);
  Json P = Json::array();
  Json Q = Json::array();
  for (std::int64_t i = 1; i <= o.m; ++i) P.push_back(Json{{"sqrt", i}, {"axis", "x"}});
  for (std::int64_t j = 1; j <= o.n; ++j) Q.push_back(Json{{"sqrt", j}, {"axis", "y"}});
  return Json{{"kind", "orthogonal"},
              {"m", o.m},
              {"n", o.n},
              {"P", P},
              {"Q", Q},
              {"summary", Json{{"count", census.count}}}};
}

// ---------------------------------------------------------------- reguli

Json partition_json(const RulingPartition& part) {
  Json ex = Json::array();
  for (const auto& [a, b] : part.exceptions) ex.push_back(Json::array({a, b}));
  return Json{{"A", part.A},
              {"B", part.B},
              {"exceptions", ex},
              {"intersecting_cross_pairs", part.intersecting_cross_pairs}};
}

Json lines_json(const std::vector<Line3>& lines) {
  Json arr = Json::array();
  for (const auto& l : lines) arr.push_back(to_json(l));
  return arr;
}

Json pairs_json(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Json arr = Json::array();
  for (const auto& [a, b] : pairs) arr.push_back(Json::array({a, b}));
  return arr;
}

std::vector<Line3> concat(const std::vector<Line3>& a, const std::vector<Line3>& b) {
  std::vector<Line3> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Json circle_report(const Pt2& p, const Pt2& q, const Rat& r, const std::vector<Rat>& ts) {
  const CircleRegulus reg = circle_regulus(p, q, r, ts);
  return Json{{"type", "circle"},
              {"quadric", to_json(reg.quadric)},
              {"all_contained", reg.all_contained},
              {"translation_pairs", pairs_json(reg.translation_pairs)},
              {"parallel_pairs", pairs_json(reg.parallel_pairs)},
              {"cross_relations_consistent", reg.cross_relations_consistent},
              {"partition", partition_json(rulings_partition(reg.quadric, concat(reg.ruling1, reg.ruling2)))},
              {"ruling1", lines_json(reg.ruling1)},
              {"ruling2", lines_json(reg.ruling2)}};
}

Json line_report(const Pt2& p, const OrLine2& target, const std::vector<Rat>& ts, const std::vector<Vec2>& dirs) {
  const LineRegulus reg = line_regulus(p, target, ts, dirs);
  Json j{{"type", "line"},
         {"quadric", to_json(reg.quadric)},
         {"all_contained", reg.all_contained},
         {"ruling1_contained", reg.ruling1_contained},
         {"ruling2_contained", reg.ruling2_contained}};
  if (reg.all_contained) {
    j["partition"] = partition_json(rulings_partition(reg.quadric, concat(reg.ruling1, reg.ruling2)));
  }
  j["ruling1"] = lines_json(reg.ruling1);
  j["ruling2"] = lines_json(reg.ruling2);
  return j;
}

Json fit_report(const std::vector<Line3>& lines) {
  if (lines.size() < 3) throw Error(ErrorKind::InvalidParams, "regulus fit: need at least three lines");
  const Quadric q = regulus_fit(lines[0], lines[1], lines[2]);
  Json contained = Json::array();
  bool all = true;
  for (const auto& l : lines) {
    contained.push_back(quadric_contains_line(q, l));
    all = all && contained.back().get<bool>();
  }
  Json j{{"type", "fit"},
         {"quadric", to_json(q)},
         {"nullity", regulus_fit_nullity(lines[0], lines[1], lines[2])},
         {"contained", contained}};
  if (all) j["partition"] = partition_json(rulings_partition(q, lines));
  return j;
}

Line3 line_from_json(const Json& j, const std::string& where) {
  if (j.contains("point") && j.contains("dir")) {
    const Vec3 d = pt3_from_json(j.at("dir"), where + ".dir");
    if (is_zero(d)) throw Error(ErrorKind::Validation, where + ": zero direction");
    return Line3::through(pt3_from_json(j.at("point"), where + ".point"), d);
  }
  if (j.contains("a") && j.contains("b") && j.contains("c") && j.contains("d")) {
    return Line3::non_horizontal(rat_from_json(j.at("a"), where + ".a"), rat_from_json(j.at("b"), where + ".b"),
                                 rat_from_json(j.at("c"), where + ".c"), rat_from_json(j.at("d"), where + ".d"));
  }
  throw Error(ErrorKind::Validation, where + ": expected {point, dir} or {a, b, c, d}");
}

std::vector<Line3> parse_line_list(const std::string& s) {
  std::vector<Line3> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    const auto v = parse_rat_list(tok, "--lines");
    if (v.size() != 6) throw Error(ErrorKind::Validation, "--lines: each line is px,py,pz,dx,dy,dz");
    const Vec3 d{v[3], v[4], v[5]};
    if (is_zero(d)) throw Error(ErrorKind::Validation, "--lines: zero direction");
    out.push_back(Line3::through({v[0], v[1], v[2]}, d));
  }
  return out;
}

std::vector<Rat> rats_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorKind::Validation, where + ": expected an array");
  std::vector<Rat> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rat_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json reguli_from_spec(const Json& spec) {
  const std::string type = spec.value("type", "");
  if (type == "circle") {
    return circle_report(pt2_from_json(spec.at("p"), "p"), pt2_from_json(spec.at("q"), "q"),
                         rat_from_json(spec.at("r"), "r"), rats_from_json(spec.at("ts"), "ts"));
  }
  if (type == "line") {
    std::vector<Vec2> dirs;
    for (std::size_t i = 0; i < spec.at("dirs").size(); ++i) {
      dirs.push_back(pt2_from_json(spec.at("dirs")[i], "dirs[" + std::to_string(i) + "]"));
    }
    const OrLine2 target(pt2_from_json(spec.at("base"), "base"), pt2_from_json(spec.at("dir"), "dir"));
    return line_report(pt2_from_json(spec.at("p"), "p"), target, rats_from_json(spec.at("ts"), "ts"), dirs);
  }
  if (type == "fit") {
    std::vector<Line3> lines;
    const auto& arr = spec.at("lines");
    for (std::size_t i = 0; i < arr.size(); ++i) lines.push_back(line_from_json(arr[i], "lines[" + std::to_string(i) + "]"));
    return fit_report(lines);
  }
  throw Error(ErrorKind::Validation, "reguli spec: \"type\" must be circle, line or fit");
}

// ---------------------------------------------------------------- analyze

Json analyze_point_set(const PointSetPair& pp, const Options& o) {
  const auto m = pp.m();
  const auto n = pp.n();
  const DistinctDistances dd = distinct_distances(pp);
  const EnergyReport energy = distance_energy(pp);
  const MaxPointDistances t = max_point_distances(pp);
  const LineFamilies fams = build_families(pp);
  const IntersectingPairs ip = count_intersecting_pairs(fams);
  const PlaneCensus planes = plane_census(fams);

  Json hist = Json::array();
  for (const auto& [d2, count] : dd.histogram) hist.push_back(Json{{"d2", d2.str()}, {"count", count}});
  Json mr = Json::array();
  for (const auto& [r, count] : ip.per_point.m_r) mr.push_back(Json{{"r", r}, {"m_r", count}});

  Json rep{{"m", m}, {"n", n}, {"distinct", dd.count}, {"histogram", hist}};
  rep["energy"] = Json{{"total", energy.total}, {"trans", energy.trans}, {"rot", energy.rot}};
  if (energy.total > 0) {
    const Rat bound = cs_lower_bound(energy, m, n);
    rep["cs_bound"] = bound.str();
    rep["cs_holds"] = Rat(dd.count) >= bound;
  } else {
    rep["cs_bound"] = nullptr;
    rep["cs_holds"] = nullptr;
  }
  rep["t"] = Json{{"value", t.t}, {"witness", to_json(t.witness)}, {"witness_index", t.witness_index}};
  rep["intersecting_pairs"] = ip.I;
  rep["energy_identity"] = energy.rot == ip.I;
  rep["rich_points"] = Json{{"max_richness", ip.per_point.max_richness()},
                            {"within_2m", ip.per_point.max_richness() <= 2 * m},
                            {"weighted_sum", weighted_richpoint_sum(ip.per_point)},
                            {"m_r", mr}};
  Json plane = Json{{"max_on_plane", planes.max_on_plane}, {"within_2m", planes.max_on_plane <= 2 * m}};
  if (planes.witness) {
    const auto& w = *planes.witness;
    plane["witness"] = Json{{"a", w.a.str()}, {"b", w.b.str()}, {"c", w.c.str()}, {"d", w.d.str()}};
  }
  rep["plane_census"] = plane;
  if (!o.no_szekely) rep["szekely"] = to_json(szekely_report(RationalSource(pp), o.K, parse_constant(o.c)));
  return rep;
}

template <typename F>
Json with_context(const char* module, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(module) + ": " + e.what());
  }
}

Json cmd_analyze(const Options& o, std::istream& in) {
  if (o.input.empty() && o.reguli.empty()) {
    throw Error(ErrorKind::InvalidParams, "analyze: give --input (use - for stdin) and/or --reguli");
  }
  Json rep = Json::object();
  if (!o.input.empty()) {
    const PointSetPair pp = point_set_from_json(load_input(o, in));
    rep = with_context("analyze", [&] { return analyze_point_set(pp, o); });
  }
  if (!o.reguli.empty()) {
    const Json spec = read_json_file(o.reguli);
    rep["reguli"] = with_context("reguli", [&] { return reguli_from_spec(spec); });
  }
  return rep;
}

// ---------------------------------------------------------------- crossing

Json circles_json(const ArcMultigraph& g) {
  Json arr = Json::array();
  for (const auto& c : g.circles) {
    arr.push_back(Json{{"center", c.center_index}, {"r2", c.r2.str()}, {"members", c.members}});
  }
  return arr;
}

Json cmd_crossing(const Options& o, std::istream& in) {
  std::unique_ptr<CircleSource> src;
  if (o.elekes) {
    src = std::make_unique<GridSource>(elekes_grid(o.m, o.s));
  } else {
    src = std::make_unique<RationalSource>(point_set_from_json(load_input(o, in)));
  }
  const Rat c = parse_constant(o.c);
  Json rep = with_context("crossing", [&] { return to_json(szekely_report(*src, o.K, c)); });
  const ArcMultigraph g = build_multigraph(*src);
  rep["mode"] = o.elekes ? "integer_census" : "rational";
  rep["circle_list"] = circles_json(g);
  if (!o.svg.empty()) write_file_atomic(o.svg, arc_graph_svg(*src, g));
  return rep;
}

std::string cmd_render(const Options& o, std::istream& in) {
  const Json j = load_input(o, in);
  if (j.value("kind", "") == "elekes") {
    const CircleGrid g = elekes_grid(j.at("m").get<std::int64_t>(), j.at("s").get<std::int64_t>());
    if (!o.arcs) return grid_svg(g);
    const GridSource src(g);
    return arc_graph_svg(src, build_multigraph(src));
  }
  const PointSetPair pp = point_set_from_json(j);
  if (!o.arcs) return point_set_svg(pp);
  const RationalSource src(pp);
  return arc_graph_svg(src, build_multigraph(src));
}

void print_error(std::ostream& err, std::string_view kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact workbench for bipartite distinct distances", "ddist"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Generate a point configuration");
  construct->require_subcommand(1);
  auto* elekes = construct->add_subcommand("elekes", "Circle grid P = {(a, 0)}, Q = {(i, sqrt(j))}");
  elekes->add_option("--m", o.m, "Number of centers")->required();
  elekes->add_option("--s", o.s, "Grid width")->required();
  auto* ortho = construct->add_subcommand("orthogonal", "P = {(sqrt(i), 0)}, Q = {(0, sqrt(j))}");
  ortho->add_option("--m", o.m)->required();
  ortho->add_option("--n", o.n)->required();
  auto* random = construct->add_subcommand("random", "Random rational points in [0, 100]^2");
  random->add_option("--m", o.m)->required();
  random->add_option("--n", o.n)->required();
  random->add_option("--seed", o.seed);
  random->add_option("--den-max", o.den_max, "Largest coordinate denominator");
  for (auto* sub : {elekes, ortho, random}) {
    sub->add_option("--output,-o", o.output);
    sub->add_option("--svg", o.svg);
  }

  auto* analyze = app.add_subcommand("analyze", "Distance, energy, rich-point and crossing report");
  analyze->add_option("--input,-i", o.input, "Point-set JSON (- for stdin)");
  analyze->add_option("--reguli", o.reguli, "Regulus spec JSON");
  analyze->add_flag("--no-szekely", o.no_szekely);

  auto* regulus = app.add_subcommand("regulus", "Fit and classify reguli");
  regulus->require_subcommand(1);
  auto* fit = regulus->add_subcommand("fit", "Quadric through three skew lines");
  fit->add_option("--lines", o.lines, "px,py,pz,dx,dy,dz;...");
  fit->add_option("--input,-i", o.input, "JSON {\"lines\": [{\"point\", \"dir\"}, ...]}");
  auto* circle = regulus->add_subcommand("circle", "Regulus from two circles of equal radius");
  circle->add_option("--p", o.p)->required();
  circle->add_option("--q", o.q)->required();
  circle->add_option("--r", o.r)->required();
  circle->add_option("--ts", o.ts)->required();
  auto* line = regulus->add_subcommand("line", "Regulus from a target line");
  line->add_option("--p", o.p)->required();
  line->add_option("--base", o.base)->required();
  line->add_option("--dir", o.dir)->required();
  line->add_option("--ts", o.ts)->required();
  line->add_option("--dirs", o.dirs, "dx,dy;dx,dy;...");

  auto* crossing = app.add_subcommand("crossing", "Circle-arc multigraph report");
  crossing->add_option("--input,-i", o.input);
  crossing->add_flag("--elekes", o.elekes, "Use the integer circle grid (needs --m, --s)");
  crossing->add_option("--m", o.m);
  crossing->add_option("--s", o.s);
  crossing->add_option("--svg", o.svg);

  auto* render_cmd = app.add_subcommand("render", "SVG of a point set or construction");
  render_cmd->add_option("--input,-i", o.input);
  render_cmd->add_flag("--arcs", o.arcs, "Draw the circle-arc multigraph");
  render_cmd->add_option("--output,-o", o.output);

  for (auto* sub : {analyze, fit, circle, line, crossing}) {
    sub->add_option("--output,-o", o.output);
    sub->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  }
  for (auto* sub : {analyze, crossing}) {
    sub->add_option("--K", o.K, "Multiplicity threshold for G'");
    sub->add_option("--c", o.c, "Crossing-lemma constant");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    print_error(err, "ValidationError", e.what());
    return 1;
  }

  try {
    if (elekes->parsed() || ortho->parsed() || random->parsed()) {
      Json j;
      if (elekes->parsed()) {
        j = construct_elekes(o);
        if (!o.svg.empty()) write_file_atomic(o.svg, grid_svg(elekes_grid(o.m, o.s)));
      } else if (ortho->parsed()) {
        j = construct_orthogonal(o);
      } else {
        const PointSetPair pp = random_point_set(o.m, o.n, o.seed, o.den_max);
        j = Json{{"kind", "random"}, {"m", o.m}, {"n", o.n}, {"seed", o.seed}, {"den_max", o.den_max}};
        const Json pts = to_json(pp);
        j["P"] = pts["P"];
        j["Q"] = pts["Q"];
        if (!o.svg.empty()) write_file_atomic(o.svg, point_set_svg(pp));
      }
      emit(j.dump(2) + "\n", o, out);
    } else if (analyze->parsed()) {
      emit(render(cmd_analyze(o, in), o.format), o, out);
    } else if (fit->parsed()) {
      std::vector<Line3> lines;
      if (!o.lines.empty()) {
        lines = parse_line_list(o.lines);
      } else {
        const Json j = load_input(o, in);
        Json spec = j;
        spec["type"] = "fit";
        emit(render(reguli_from_spec(spec), o.format), o, out);
        return 0;
      }
      emit(render(fit_report(lines), o.format), o, out);
    } else if (circle->parsed()) {
      emit(render(circle_report(parse_pt2(o.p, "--p"), parse_pt2(o.q, "--q"), parse_positive(o.r, "--r"),
                                parse_rat_list(o.ts, "--ts")),
                  o.format),
           o, out);
    } else if (line->parsed()) {
      const OrLine2 target(parse_pt2(o.base, "--base"), parse_pt2(o.dir, "--dir"));
      emit(render(line_report(parse_pt2(o.p, "--p"), target, parse_rat_list(o.ts, "--ts"), parse_dir_list(o.dirs)),
                  o.format),
           o, out);
    } else if (crossing->parsed()) {
      emit(render(cmd_crossing(o, in), o.format), o, out);
    } else if (render_cmd->parsed()) {
      emit(cmd_render(o, in), o, out);
    }
  } catch (const Error& e) {
    print_error(err, error_kind_name(e.kind()), e.what());
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    print_error(err, "ValidationError", std::string("malformed input: ") + e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error(err, "ValidationError", e.what());
    return 1;
  }
  return 0;
}

}  // namespace ddist
