#pragma once

#include <json.hpp>

#include "enumerate.hpp"

namespace esch {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const WeightPair& wp);
ordered_json to_json(const ActionSpec& act);
ordered_json to_json(const CanonicalKey& key);
ordered_json to_json(const SelfSingularData& d);
ordered_json to_json(const IsotropyProfile& pr);
ordered_json to_json(const LensParams& lp);
ordered_json to_json(const SingularLocus& loc);
ordered_json to_json(const AlphaTable& t);
ordered_json to_json(const BezoutSolution& sol);
ordered_json to_json(const ScanSummary& s);

ordered_json analyze_space_json(const WeightPair& wp);
ordered_json oracle_json(const IntVec& v, const IntVec& w);

WeightPair weight_pair_from_json(const ordered_json& j);

}  // namespace esch
