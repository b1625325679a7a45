#pragma once

#include <json.hpp>

#include "bfree/arithmetic.hpp"
#include "bfree/automorphism.hpp"
#include "bfree/odometer.hpp"
#include "bfree/sequence.hpp"
#include "bfree/toeplitz.hpp"

namespace bfree {

using json = nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

// {t, p_t, cells: "01_", holes: [int]}
json to_json(const SkeletonBlock& block);
SkeletonBlock skeleton_from_json(const json& j);

// {t, p_t, holes: [int]}
json holes_json(const SkeletonBlock& block);

// {depth, residues: [int]}
json to_json(const OdometerElement& g);
OdometerElement odometer_from_json(const Family& family, const json& j);

// {radius, anchors, horizon, checked, survivors: [{rule_index, anchor, class, shift}]}
json to_json(const SearchReport& report);

// {t, base: {num, den}, removals: [{num, den}], taut}
json to_json(const TautReport& report);

json to_json(const DensityReport& report);

}  // namespace bfree
