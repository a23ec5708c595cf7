#include "twomis/report.hpp"

#include <sstream>

#include "twomis/graph_io.hpp"

namespace twomis {

AnalysisReport analyze(const Graph& g, const Limits& limits) {
    AnalysisReport rep;
    rep.graph6 = encode_graph6(g);
    rep.label = g.label();
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    rep.girth_value = girth(g);
    rep.bipartite = is_bipartite(g);
    rep.mu = matching_number(g);
    rep.leaf_set = leaves(g);
    rep.simplicial_set = simplicial_vertices(g);
    rep.codominated = codominated_vertices(g);

    auto guarded = [&](const char* field, auto&& fn) {
        try {
            check_deadline(limits);
            fn();
        } catch (const CapExceeded&) {
            rep.skipped.push_back(field);
        }
    };
    guarded("alpha", [&] {
        OmegaFamily om = omega_family(g, limits);
        rep.alpha = om.alpha;
        rep.omega_count = om.sets.size();
        rep.core = om.core;
        rep.konig_egervary = om.alpha + *rep.mu == rep.n;
    });
    guarded("well_covered", [&] {
        rep.well_covered = is_well_covered(g, limits);
        rep.very_well_covered = is_very_well_covered(g, limits);
    });
    guarded("shedding", [&] { rep.shedding_set = shedding_vertices(g, limits); });
    guarded("disjoint_maximal_pair", [&] {
        rep.maximal_pair = has_two_disjoint_maximal_is(g, limits);
        rep.has_maximal_pair = rep.maximal_pair.has_value();
    });
    guarded("disjoint_mis", [&] {
        Certificate cert = decide(g, DecideStrategy::Auto, limits);
        rep.certificate_valid = validate_decision(g, cert, limits);
        rep.disjoint_mis = std::move(cert);
    });
    return rep;
}

DecideStrategy parse_strategy(const std::string& name) {
    if (name == "auto") return DecideStrategy::Auto;
    if (name == "omega-pairs") return DecideStrategy::OmegaPairs;
    if (name == "condition-ii") return DecideStrategy::ConditionII;
    if (name == "unicyclic") return DecideStrategy::Unicyclic;
    throw std::invalid_argument("unknown strategy: " + name);
}

namespace {

// bipartite graphs are König–Egerváry, so the pair exists iff a perfect
// matching does, and then the two color classes are the pair
Certificate decide_bipartite(const Graph& g, const BipartiteResult& bp) {
    Certificate cert;
    cert.strategy = "bipartite-pm";
    Matching m = max_matching_bipartite(g, bp.sides->first, bp.sides->second);
    cert.alpha = g.vertex_count() - static_cast<int>(m.size());
    if (static_cast<int>(m.size()) * 2 == g.vertex_count()) {
        cert.yes = true;
        cert.kind = CertificateKind::AlphaMatchingBipartite;
        cert.matching = m;
        cert.set_a = bp.sides->first;
        cert.set_b = bp.sides->second;
    } else {
        cert.kind = CertificateKind::Exhaustion;
    }
    return cert;
}

}  // namespace

Certificate decide(const Graph& g, DecideStrategy strategy, const Limits& limits) {
    switch (strategy) {
        case DecideStrategy::Unicyclic:
            if (!unique_cycle(g))
                throw StrategyMismatch("unicyclic strategy on a non-unicyclic graph");
            return unicyclic_two_disjoint_mis(g);
        case DecideStrategy::OmegaPairs:
            return has_two_disjoint_mis(g, limits, PairStrategy::OmegaPairs);
        case DecideStrategy::ConditionII:
            return has_two_disjoint_mis(g, limits, PairStrategy::ConditionII);
        case DecideStrategy::Auto: {
            if (unique_cycle(g)) return unicyclic_two_disjoint_mis(g);
            BipartiteResult bp = find_bipartition(g);
            if (bp.ok()) return decide_bipartite(g, bp);
            return has_two_disjoint_mis(g, limits, PairStrategy::Auto);
        }
    }
    throw std::logic_error("unreachable strategy");
}

bool validate_decision(const Graph& g, const Certificate& cert, const Limits& limits) {
    if (cert.kind != CertificateKind::Exhaustion) {
        // witness payloads re-validate directly; alpha checks take the
        // polynomial route automatically for bipartite and unicyclic inputs
        return validate_certificate(g, cert, limits);
    }
    if (cert.yes) return false;
    if (cert.strategy == "unicyclic") {
        Certificate again = unicyclic_two_disjoint_mis(g);
        return !again.yes;
    }
    if (cert.strategy == "bipartite-pm") {
        BipartiteResult bp = find_bipartition(g);
        if (!bp.ok()) return false;
        Matching m = max_matching_bipartite(g, bp.sides->first, bp.sides->second);
        return static_cast<int>(m.size()) * 2 != g.vertex_count();
    }
    return !has_two_disjoint_mis(g, limits).yes;
}

Json vertex_set_json(const VertexSet& s) {
    Json arr = Json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

Json matching_json(const Matching& m) {
    Json arr = Json::array();
    for (const Edge& e : m.edges()) arr.push_back(Json::array({e.u, e.v}));
    return arr;
}

Json certificate_json(const Certificate& cert) {
    Json j;
    j["verdict"] = cert.yes ? "yes" : "no";
    j["kind"] = to_string(cert.kind);
    j["strategy"] = cert.strategy;
    if (cert.alpha >= 0) j["alpha"] = cert.alpha;
    switch (cert.kind) {
        case CertificateKind::DisjointPair:
            j["set_a"] = vertex_set_json(cert.set_a);
            j["set_b"] = vertex_set_json(cert.set_b);
            break;
        case CertificateKind::AlphaMatchingBipartite:
            j["matching"] = matching_json(cert.matching);
            j["set_a"] = vertex_set_json(cert.set_a);
            j["set_b"] = vertex_set_json(cert.set_b);
            break;
        case CertificateKind::InducedBipartite2Alpha:
            j["subgraph"] = vertex_set_json(cert.set_a);
            break;
        case CertificateKind::UnicyclicCycleVertex:
            j["cycle_vertex"] = cert.cycle_vertex;
            j["matching"] = matching_json(cert.matching);
            j["set_a"] = vertex_set_json(cert.set_a);
            j["set_b"] = vertex_set_json(cert.set_b);
            break;
        case CertificateKind::Exhaustion:
            j["omega_count"] = cert.omega_count;
            break;
    }
    return j;
}

Json analysis_json(const AnalysisReport& rep) {
    Json j;
    j["graph"] = {{"graph6", rep.graph6}, {"label", rep.label}, {"n", rep.n}, {"m", rep.m}};
    j["girth"] = rep.girth_value ? Json(*rep.girth_value) : Json(nullptr);
    j["bipartite"] = rep.bipartite;
    j["alpha"] = rep.alpha ? Json(*rep.alpha) : Json(nullptr);
    j["mu"] = rep.mu ? Json(*rep.mu) : Json(nullptr);
    j["omega_count"] = rep.omega_count ? Json(*rep.omega_count) : Json(nullptr);
    j["core"] = rep.core ? vertex_set_json(*rep.core) : Json(nullptr);
    j["konig_egervary"] = rep.konig_egervary ? Json(*rep.konig_egervary) : Json(nullptr);
    j["well_covered"] = rep.well_covered ? Json(*rep.well_covered) : Json(nullptr);
    j["very_well_covered"] =
        rep.very_well_covered ? Json(*rep.very_well_covered) : Json(nullptr);
    Json classes;
    classes["leaves"] = rep.leaf_set ? vertex_set_json(*rep.leaf_set) : Json(nullptr);
    classes["simplicial"] =
        rep.simplicial_set ? vertex_set_json(*rep.simplicial_set) : Json(nullptr);
    if (rep.codominated) {
        Json arr = Json::array();
        for (int v : rep.codominated->members)
            arr.push_back({{"v", v}, {"witness", rep.codominated->witness[static_cast<std::size_t>(v)]}});
        classes["codominated"] = arr;
    } else {
        classes["codominated"] = nullptr;
    }
    classes["shedding"] = rep.shedding_set ? vertex_set_json(*rep.shedding_set) : Json(nullptr);
    j["classes"] = classes;
    if (rep.has_maximal_pair) {
        Json mp;
        mp["present"] = *rep.has_maximal_pair;
        if (rep.maximal_pair) {
            mp["set_a"] = vertex_set_json(rep.maximal_pair->first);
            mp["set_b"] = vertex_set_json(rep.maximal_pair->second);
        }
        j["disjoint_maximal_pair"] = mp;
    } else {
        j["disjoint_maximal_pair"] = nullptr;
    }
    if (rep.disjoint_mis) {
        j["disjoint_mis"] = certificate_json(*rep.disjoint_mis);
        j["certificate_valid"] = rep.certificate_valid;
    } else {
        j["disjoint_mis"] = nullptr;
        j["certificate_valid"] = nullptr;
    }
    j["skipped"] = rep.skipped;
    return j;
}

namespace {
std::string set_text(const VertexSet& s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int v : s) {
        if (!first) out << ", ";
        out << v;
        first = false;
    }
    out << "}";
    return out.str();
}
}  // namespace

std::string analysis_text(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "graph " << rep.graph6;
    if (!rep.label.empty()) out << " (" << rep.label << ")";
    out << ": n=" << rep.n << " m=" << rep.m << "\n";
    out << "  girth: ";
    if (rep.girth_value) out << *rep.girth_value;
    else out << "infinity";
    out << "  bipartite: " << (rep.bipartite ? "yes" : "no") << "\n";
    if (rep.alpha) {
        out << "  alpha=" << *rep.alpha << " mu=" << *rep.mu << " |Omega|=" << *rep.omega_count
            << " core=" << set_text(*rep.core) << "\n";
        out << "  konig-egervary: " << (*rep.konig_egervary ? "yes" : "no")
            << "  well-covered: " << (rep.well_covered && *rep.well_covered ? "yes" : "no")
            << "  very-well-covered: "
            << (rep.very_well_covered && *rep.very_well_covered ? "yes" : "no") << "\n";
    }
    if (rep.leaf_set) out << "  leaves: " << set_text(*rep.leaf_set) << "\n";
    if (rep.simplicial_set) out << "  simplicial: " << set_text(*rep.simplicial_set) << "\n";
    if (rep.codominated) out << "  codominated: " << set_text(rep.codominated->members) << "\n";
    if (rep.shedding_set) out << "  shedding: " << set_text(*rep.shedding_set) << "\n";
    if (rep.has_maximal_pair) {
        out << "  two disjoint maximal independent sets: "
            << (*rep.has_maximal_pair ? "yes" : "no");
        if (rep.maximal_pair)
            out << " pair " << set_text(rep.maximal_pair->first) << " / "
                << set_text(rep.maximal_pair->second);
        out << "\n";
    }
    if (rep.disjoint_mis) {
        const Certificate& c = *rep.disjoint_mis;
        out << "  two disjoint maximum independent sets: " << (c.yes ? "yes" : "no") << " ["
            << to_string(c.kind) << ", " << c.strategy << "]";
        if (c.yes && c.kind != CertificateKind::InducedBipartite2Alpha)
            out << " pair " << set_text(c.set_a) << " / " << set_text(c.set_b);
        out << (rep.certificate_valid ? " (validated)" : " (VALIDATION FAILED)") << "\n";
    }
    for (const std::string& s : rep.skipped) out << "  skipped: " << s << " (cap exceeded)\n";
    return out.str();
}

}  // namespace twomis
