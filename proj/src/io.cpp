#include "ddist/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <system_error>

#include "ddist/error.hpp"

namespace ddist {

namespace {

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Validation, where + ": " + what);
}

constexpr const char* kIrrationalHint =
    "coordinates must be rational; for the (i, sqrt(j)) circle grid use the integer-census mode "
    "(crossing --elekes --m M --s S)";

}  // namespace

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const Pt2& p) { return Json::array({p.x.str(), p.y.str()}); }

Json to_json(const Pt3& p) { return Json::array({p.x.str(), p.y.str(), p.z.str()}); }

Json to_json(const Line3& l) {
  Json j;
  if (l.is_horizontal()) {
    const auto& h = l.hz();
    j["form"] = "horizontal";
    j["z"] = to_json(h.z);
    j["base"] = to_json(h.base);
    j["dir"] = to_json(h.dir);
  } else {
    const auto& f = l.nh();
    j["form"] = "non_horizontal";
    j["a"] = to_json(f.a);
    j["b"] = to_json(f.b);
    j["c"] = to_json(f.c);
    j["d"] = to_json(f.d);
  }
  if (l.provenance()) {
    j["p"] = to_json(l.provenance()->p);
    j["q"] = to_json(l.provenance()->q);
  }
  return j;
}

Json to_json(const Quadric& q) {
  Json coeffs = Json::object();
  for (std::size_t i = 0; i < 10; ++i) coeffs[std::string(Quadric::kNames[i])] = to_json(q.coeffs()[i]);
  return Json{{"coeffs", coeffs}, {"class", std::string(surface_class_name(classify_quadric(q)))}};
}

Json to_json(const PointSetPair& pp) {
  Json P = Json::array();
  Json Q = Json::array();
  for (const auto& p : pp.P) P.push_back(to_json(p));
  for (const auto& q : pp.Q) Q.push_back(to_json(q));
  return Json{{"P", P}, {"Q", Q}};
}

Json to_json(const CircleGrid& g) {
  Json P = Json::array();
  Json Q = Json::array();
  for (auto a : g.P) P.push_back(Json::array({std::to_string(a), "0"}));
  for (const auto& q : g.Q) Q.push_back(Json{{"i", q.i}, {"j", q.j}});
  return Json{{"kind", "elekes"}, {"m", g.m}, {"s", g.s}, {"P", P}, {"Q", Q}};
}

Json to_json(const SzekelyReport& rep) {
  Json mult = Json::array();
  for (const auto& [k, v] : rep.mult_histogram) mult.push_back(Json{{"multiplicity", k}, {"pairs", v}});
  Json T = Json::array();
  for (const auto& [r, c] : rep.T_counts) T.push_back(Json{{"r", r}, {"count", c}});
  Json rich = Json::array();
  for (const auto& [r, c] : rep.rich_lines) rich.push_back(Json{{"r", r}, {"count", c}});
  return Json{
      {"m", rep.m},
      {"n", rep.n},
      {"t", rep.t},
      {"circles", rep.circles},
      {"edges_pre", rep.edges_pre},
      {"edges_post", rep.edges_post},
      {"edges_deleted", rep.edges_deleted},
      {"deletion_limit", rep.deletion_limit},
      {"mult_histogram", mult},
      {"K", rep.K},
      {"edges_heavy", rep.edges_heavy},
      {"edges_gprime", rep.edges_gprime},
      {"c", to_json(rep.c)},
      {"chain", Json{{"lhs", to_json(rep.lhs)},
                     {"rhs", to_json(rep.rhs)},
                     {"chain_consistent", rep.chain_consistent},
                     {"vacuous", rep.vacuous}}},
      {"circle_pair_crossings",
       Json{{"intersecting_pairs", rep.crossings.intersecting_pairs}, {"upper", rep.crossings.upper}}},
      {"bounds", Json{{"simple_bound", to_json(rep.bounds.simple_bound)},
                      {"multigraph_bound", to_json(rep.bounds.multigraph_bound)},
                      {"simple_applicable", rep.bounds.simple_applicable},
                      {"multigraph_applicable", rep.bounds.multigraph_applicable}}},
      {"T_counts", T},
      {"per_line_bound_holds", rep.per_line_bound_holds},
      {"rich_lines", rich},
  };
}

Rat rat_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_object() || (j.is_string() && j.get<std::string>().find("sqrt") != std::string::npos)) {
    invalid(where, kIrrationalHint);
  }
  if (!j.is_string()) invalid(where, "expected a rational string such as \"3/4\"");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::exception&) {
    invalid(where, "cannot parse \"" + j.get<std::string>() + "\" as a rational");
  }
}

Pt2 pt2_from_json(const Json& j, const std::string& where) {
  if (j.is_object()) invalid(where, kIrrationalHint);
  if (!j.is_array() || j.size() != 2) invalid(where, "expected [x, y]");
  return {rat_from_json(j[0], where + "[0]"), rat_from_json(j[1], where + "[1]")};
}

Pt3 pt3_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) invalid(where, "expected [x, y, z]");
  return {rat_from_json(j[0], where + "[0]"), rat_from_json(j[1], where + "[1]"),
          rat_from_json(j[2], where + "[2]")};
}

PointSetPair point_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("P") || !j.contains("Q")) invalid("input", "expected an object with \"P\" and \"Q\"");
  if (j.value("kind", "") == "elekes" || j.value("kind", "") == "orthogonal") invalid("input", kIrrationalHint);
  std::vector<Pt2> P;
  std::vector<Pt2> Q;
  for (const char* side : {"P", "Q"}) {
    const auto& arr = j.at(side);
    if (!arr.is_array()) invalid(side, "expected an array of points");
    auto& dst = side[0] == 'P' ? P : Q;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      dst.push_back(pt2_from_json(arr[i], std::string(side) + "[" + std::to_string(i) + "]"));
    }
  }
  return make_point_set_pair(std::move(P), std::move(Q));
}

std::vector<Rat> parse_rat_list(const std::string& s, const std::string& what) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(Rat::parse(tok));
    } catch (const std::exception&) {
      invalid(what, "cannot parse \"" + tok + "\" as a rational");
    }
  }
  return out;
}

Pt2 parse_pt2(const std::string& s, const std::string& what) {
  const auto v = parse_rat_list(s, what);
  if (v.size() != 2) invalid(what, "expected x,y");
  return {v[0], v[1]};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Validation, path.string() + ": malformed JSON: " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorKind::Io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::Io, "cannot rename onto " + path.string());
  }
}

namespace {

struct Frame {
  double x0 = 0;
  double y0 = 0;
  double scale = 1;
  static constexpr double kSize = 600;
  static constexpr double kMargin = 30;

  static Frame fit(const std::vector<std::pair<double, double>>& pts) {
    double lox = std::numeric_limits<double>::max(), loy = lox;
    double hix = std::numeric_limits<double>::lowest(), hiy = hix;
    for (const auto& [x, y] : pts) {
      lox = std::min(lox, x);
      loy = std::min(loy, y);
      hix = std::max(hix, x);
      hiy = std::max(hiy, y);
    }
    Frame f;
    if (pts.empty()) return f;
    const double span = std::max({hix - lox, hiy - loy, 1e-9});
    f.scale = (kSize - 2 * kMargin) / span;
    f.x0 = lox;
    f.y0 = hiy;
    return f;
  }
  double sx(double x) const { return kMargin + (x - x0) * scale; }
  double sy(double y) const { return kMargin + (y0 - y) * scale; }
};

std::string header() {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Frame::kSize << "\" height=\"" << Frame::kSize
     << "\" viewBox=\"0 0 " << Frame::kSize << ' ' << Frame::kSize << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

void dot(std::ostream& os, const Frame& f, double x, double y, const char* color) {
  os << "<circle cx=\"" << f.sx(x) << "\" cy=\"" << f.sy(y) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
}

std::pair<double, double> approx(const Pt2& p) { return {p.x.to_double(), p.y.to_double()}; }

}  // namespace

std::string point_set_svg(const PointSetPair& pp) {
  std::vector<std::pair<double, double>> all;
  for (const auto& p : pp.P) all.push_back(approx(p));
  for (const auto& q : pp.Q) all.push_back(approx(q));
  const Frame f = Frame::fit(all);
  std::ostringstream os;
  os.precision(6);
  os << header();
  for (const auto& p : pp.P) dot(os, f, p.x.to_double(), p.y.to_double(), "crimson");
  for (const auto& q : pp.Q) dot(os, f, q.x.to_double(), q.y.to_double(), "steelblue");
  os << "</svg>\n";
  return os.str();
}

std::string grid_svg(const CircleGrid& g) {
  std::vector<std::pair<double, double>> all;
  for (auto a : g.P) all.emplace_back(static_cast<double>(a), 0.0);
  for (const auto& q : g.Q) all.emplace_back(static_cast<double>(q.i), std::sqrt(static_cast<double>(q.j)));
  const Frame f = Frame::fit(all);
  std::ostringstream os;
  os.precision(6);
  os << header();
  for (std::size_t k = 0; k < all.size(); ++k) {
    dot(os, f, all[k].first, all[k].second, k < g.P.size() ? "crimson" : "steelblue");
  }
  os << "</svg>\n";
  return os.str();
}

std::string arc_graph_svg(const CircleSource& src, const ArcMultigraph& g) {
  std::vector<std::pair<double, double>> all;
  for (std::size_t p = 0; p < src.m(); ++p) all.push_back(approx(src.center(p)));
  for (std::size_t q = 0; q < src.n(); ++q) all.push_back(src.approx_q(q));
  for (const auto& c : g.circles) {
    const auto [cx, cy] = approx(c.center);
    const double r = std::sqrt(c.r2.to_double());
    all.emplace_back(cx - r, cy - r);
    all.emplace_back(cx + r, cy + r);
  }
  const Frame f = Frame::fit(all);
  std::ostringstream os;
  os.precision(6);
  os << header();
  for (const auto& c : g.circles) {
    if (c.members.size() >= 3) continue;
    const auto [cx, cy] = approx(c.center);
    os << "<circle cx=\"" << f.sx(cx) << "\" cy=\"" << f.sy(cy) << "\" r=\""
       << std::sqrt(c.r2.to_double()) * f.scale
       << "\" fill=\"none\" stroke=\"lightgray\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (const auto& e : g.edges) {
    const auto& c = g.circles[e.circle];
    const auto [cx, cy] = approx(c.center);
    const auto [ux, uy] = src.approx_q(e.u);
    const auto [vx, vy] = src.approx_q(e.v);
    double sweep = std::atan2(vy - cy, vx - cx) - std::atan2(uy - cy, ux - cx);
    if (sweep <= 0) sweep += 2 * std::numbers::pi;
    const double r = std::sqrt(c.r2.to_double()) * f.scale;
    // Counterclockwise in the plane is sweep-flag 0 once y points down.
    os << "<path d=\"M " << f.sx(ux) << ' ' << f.sy(uy) << " A " << r << ' ' << r << " 0 "
       << (sweep > std::numbers::pi ? 1 : 0) << " 0 " << f.sx(vx) << ' ' << f.sy(vy)
       << "\" fill=\"none\" stroke=\"darkslategray\"/>\n";
  }
  for (std::size_t p = 0; p < src.m(); ++p) {
    const auto [x, y] = approx(src.center(p));
    dot(os, f, x, y, "crimson");
  }
  for (std::size_t q = 0; q < src.n(); ++q) {
    const auto [x, y] = src.approx_q(q);
    dot(os, f, x, y, "steelblue");
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ddist
