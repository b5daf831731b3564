#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "adlv/classifier.hpp"
#include "adlv/datum.hpp"
#include "adlv/dl_reduction.hpp"
#include "adlv/smoothness.hpp"
#include "adlv/strata.hpp"

namespace adlv {

using Json = nlohmann::json;

Json element_json(const WeylElement& w, Weyl& wy);
Json elements_json(const std::vector<WeylElement>& v, Weyl& wy);
Json nodeset_json(const NodeSet& s);
Json witness_json(const std::vector<WitnessStep>& steps);
Json stratum_json(const StratumDescriptor& d, const CoxeterDatum& datum);
Json sweep_row_json(const SweepRow& row);
Json orbits_json(const std::vector<NodeSet>& orbits);

// compact word display with descending-run contractions, e.g. "s[3,1] s0 . tau2"
std::string element_str_compact(const WeylElement& w, Weyl& wy);

}  // namespace adlv
