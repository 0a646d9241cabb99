#pragma once

#include <json.hpp>

#include "idd/analysis.hpp"
#include "idd/brgd.hpp"
#include "idd/exact.hpp"
#include "idd/gen.hpp"
#include "idd/model.hpp"
#include "idd/oracle.hpp"
#include "idd/payoff.hpp"

namespace idd {
namespace io {

using json = nlohmann::json;

// Game schema: {nodes: [{id, C, L, p_hat, alpha, C0}], edges: [{src, dst, q_hat}]}
// with src/dst as node indices. Unknown top-level keys (e.g. provenance) are
// preserved by callers, not here.
json game_to_json(const DefenseGame& game);
DefenseGame game_from_json(const json& j);

// {x: [...], y: [...]} with y_0 implicit.
json strategies_to_json(const DefenderMixedProfile& x, const AttackerMixedStrategy& y);
std::pair<DefenderMixedProfile, AttackerMixedStrategy> strategies_from_json(const json& j);

json stats_to_json(const GraphStats& s);

json validation_to_json(const ValidationReport& r);

json regret_to_json(const RegretReport& r);

json eqset_to_json(const exact::EquilibriumSet& set);
exact::EquilibriumSet eqset_from_json(const json& j);

json brgd_result_to_json(const brgd::BrgdConfig& config, const brgd::BrgdResult& result);

json msne_report_to_json(const oracle::MsneReport& r);

json generator_spec_to_json(const gen::GeneratorSpec& spec);
gen::GeneratorSpec generator_spec_from_json(const json& j);

json sweep_fit_to_json(const analysis::SweepResult& r);

// Provenance block attached to generated games: spec echo, seed and a graph
// fingerprint (edge count + 64-bit hash).
json make_provenance(const DirectedGraph& graph, const gen::GeneratorSpec& spec);

}  // namespace io
}  // namespace idd
