#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "twomis/families.hpp"
#include "twomis/independence.hpp"
#include "twomis/vertex_classes.hpp"

namespace twomis {

using Json = nlohmann::ordered_json;

struct StrategyMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full per-graph analysis. Fields that would blow a cap are left empty and
/// named in `skipped` instead of failing the whole report.
struct AnalysisReport {
    std::string graph6;
    std::string label;
    int n = 0;
    int m = 0;
    std::optional<int> girth_value;  // nullopt = acyclic
    bool bipartite = false;
    std::optional<int> alpha;
    std::optional<int> mu;
    std::optional<std::size_t> omega_count;
    std::optional<VertexSet> core;
    std::optional<bool> konig_egervary;
    std::optional<bool> well_covered;
    std::optional<bool> very_well_covered;
    std::optional<VertexSet> leaf_set;
    std::optional<VertexSet> simplicial_set;
    std::optional<CodominatedResult> codominated;
    std::optional<VertexSet> shedding_set;
    std::optional<bool> has_maximal_pair;  // disjoint pair of maximal independent sets
    std::optional<std::pair<VertexSet, VertexSet>> maximal_pair;
    std::optional<Certificate> disjoint_mis;
    bool certificate_valid = false;
    std::vector<std::string> skipped;
};

AnalysisReport analyze(const Graph& g, const Limits& limits = {});

enum class DecideStrategy { Auto, OmegaPairs, ConditionII, Unicyclic };
DecideStrategy parse_strategy(const std::string& name);  // throws std::invalid_argument

/// Decision with certificate. Auto prefers the unicyclic path, then the
/// bipartite (König–Egerváry) path, then the Omega enumeration. Throws
/// StrategyMismatch when a forced strategy does not apply to the graph.
Certificate decide(const Graph& g, DecideStrategy strategy, const Limits& limits = {});

/// Re-derivation of a decision produced by decide(); polynomial fast paths are
/// rechecked through their own premises, witness payloads through the checkers.
bool validate_decision(const Graph& g, const Certificate& cert, const Limits& limits = {});

Json vertex_set_json(const VertexSet& s);
Json matching_json(const Matching& m);
Json certificate_json(const Certificate& cert);
Json analysis_json(const AnalysisReport& report);
std::string analysis_text(const AnalysisReport& report);

}  // namespace twomis
