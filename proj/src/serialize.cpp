#include "bfree/serialize.hpp"

#include "bfree/error.hpp"

namespace bfree {

json to_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

Rational rational_from_json(const json& j) { return Rational(j.at("num").get<Int>(), j.at("den").get<Int>()); }

json to_json(const SkeletonBlock& block) {
  return json{{"t", block.t}, {"p_t", block.period}, {"cells", block.cells_string()}, {"holes", block.holes}};
}

SkeletonBlock skeleton_from_json(const json& j) {
  SkeletonBlock block = SkeletonBlock::parse(j.at("t").get<int>(), j.at("cells").get<std::string>());
  if (block.period != j.at("p_t").get<Int>() || block.holes != j.at("holes").get<std::vector<Int>>()) {
    throw Error(ErrorKind::InvalidArgument, "skeleton JSON fields disagree with its cells");
  }
  return block;
}

json holes_json(const SkeletonBlock& block) {
  return json{{"t", block.t}, {"p_t", block.period}, {"holes", block.holes}};
}

json to_json(const OdometerElement& g) { return json{{"depth", g.depth()}, {"residues", g.residues()}}; }

OdometerElement odometer_from_json(const Family& family, const json& j) {
  auto residues = j.at("residues").get<std::vector<Int>>();
  if (static_cast<int>(residues.size()) != j.at("depth").get<int>()) {
    throw Error(ErrorKind::DepthMismatch, "odometer JSON depth disagrees with residue count");
  }
  return OdometerElement::make(family, std::move(residues));
}

json to_json(const SearchReport& report) {
  json survivors = json::array();
  for (const Survivor& s : report.survivors) {
    survivors.push_back(json{{"rule_index", s.code.rule},
                             {"anchor", s.code.anchor},
                             {"class", to_string(s.cls)},
                             {"shift", s.shift}});
  }
  return json{{"radius", report.radius},
              {"anchors", report.anchor_radius},
              {"horizon", report.horizon},
              {"checked", report.candidates_checked},
              {"survivors", std::move(survivors)}};
}

json to_json(const TautReport& report) {
  json removals = json::array();
  for (const Rational& r : report.densities_after_removal) removals.push_back(to_json(r));
  return json{{"t", report.t}, {"base", to_json(report.base_density)}, {"removals", std::move(removals)},
              {"taut", report.is_taut_at_t}};
}

json to_json(const DensityReport& report) {
  return json{{"divisors", report.divisors},
              {"period", report.period},
              {"multiples_in_period", report.multiples_in_period},
              {"density", to_json(report.density)}};
}

}  // namespace bfree
