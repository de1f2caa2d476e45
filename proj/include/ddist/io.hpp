#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddist/constructions.hpp"
#include "ddist/crossing.hpp"
#include "ddist/distance_stats.hpp"
#include "ddist/esgk.hpp"
#include "ddist/geometry.hpp"
#include "ddist/reguli.hpp"

namespace ddist {

using Json = nlohmann::ordered_json;

// Rationals travel as "num/den" or plain integer strings.
Json to_json(const Rat& r);
Json to_json(const Pt2& p);
Json to_json(const Pt3& p);
Json to_json(const Line3& l);
Json to_json(const Quadric& q);
Json to_json(const PointSetPair& pp);
Json to_json(const CircleGrid& g);
Json to_json(const SzekelyReport& rep);

// Throws Error(Validation) with the offending path in the message.
Rat rat_from_json(const Json& j, const std::string& where);
Pt2 pt2_from_json(const Json& j, const std::string& where);
Pt3 pt3_from_json(const Json& j, const std::string& where);
// {"P": [[x, y], ...], "Q": [...]}; irrational encodings are rejected.
PointSetPair point_set_from_json(const Json& j);

// Comma separated rationals, e.g. "0,1/2,-3".
std::vector<Rat> parse_rat_list(const std::string& s, const std::string& what);
Pt2 parse_pt2(const std::string& s, const std::string& what);

Json read_json_file(const std::filesystem::path& path);
// Writes via a temporary sibling and a rename; throws Error(Io).
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// Static figures; coordinates are converted to double only here.
std::string point_set_svg(const PointSetPair& pp);
std::string grid_svg(const CircleGrid& g);
std::string arc_graph_svg(const CircleSource& src, const ArcMultigraph& g);

}  // namespace ddist
