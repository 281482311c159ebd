#pragma once

#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "maco/walk.hpp"

namespace maco {

/// Nodes sorted by descending psi, zero-probability entries removed.
struct CandidateList {
    NodeId source = 0;
    std::vector<NodeId> order;
    std::vector<double> values;  // psi aligned with order
    bool degenerate = false;
};

/// Per-prefix conductance bookkeeping from the sweep.
struct ConductanceScan {
    std::vector<double> phi;       // phi[k-1] for prefix length k; NaN where undefined
    std::vector<double> boundary;  // c_S per prefix
    std::vector<double> volume;    // Vol(S) per prefix
    std::size_t best_k = 0;        // chosen prefix length (1-based); 0 if none valid
};

struct LocalCommunity {
    std::vector<NodeId> nodes;
    double phi = std::numeric_limits<double>::quiet_NaN();
    std::size_t cut_k = 0;
    ConductanceScan scan;
};

/// UC: compute psi, rank descending (ties by ascending index), drop exact
/// zeros. The degenerate fallback yields exactly [s].
inline CandidateList unfold_community(const WeightedView& view, NodeId s, int l) {
    TransitionVector psi = degree_corrected_distribution(view, s, l);
    CandidateList out;
    out.source = s;
    out.degenerate = psi.degenerate;
    if (psi.degenerate) {
        out.order = {s};
        out.values = {1.0};
        return out;
    }
    for (NodeId i : sorted_order(psi.values)) {
        if (psi.values[i] <= 0.0) break;
        out.order.push_back(i);
        out.values.push_back(psi.values[i]);
    }
    return out;
}

/// Conductance phi(S) = c_S / min(Vol(S), Vol(V\S)) on the original
/// unweighted graph.
inline double conductance(const Graph& g, std::span<const NodeId> node_set) {
    if (node_set.empty()) throw std::invalid_argument("conductance of empty set");
    if (node_set.size() >= g.node_count()) throw std::invalid_argument("conductance of full node set");
    std::vector<char> in_set(g.node_count(), 0);
    for (NodeId v : node_set) in_set[v] = 1;
    double boundary = 0.0, vol = 0.0;
    for (NodeId v : node_set) {
        vol += double(g.degree(v));
        for (NodeId u : g.neighbors(v))
            if (!in_set[u]) boundary += 1.0;
    }
    double total = double(g.total_degree());
    double mv = std::min(vol, total - vol);
    if (mv <= 0.0) throw std::invalid_argument("conductance undefined: zero volume side");
    return boundary / mv;
}

/// EC: sweep prefixes of the candidate list, maintaining c_S and Vol(S)
/// incrementally (c_S^k = c_S^{k-1} + d_{L(k)} - 2*|S^{k-1} cap N(L(k))|),
/// and return the minimum-conductance prefix among those containing the
/// source. Ties break toward the smallest k. When the list covers all nodes
/// the full prefix is skipped (conductance undefined there).
inline LocalCommunity extract_community(const Graph& g, const CandidateList& candidates) {
    if (candidates.order.empty()) throw std::invalid_argument("empty candidate list");
    const std::size_t n = g.node_count();
    const std::size_t k_max =
        candidates.order.size() < n ? candidates.order.size() : candidates.order.size() - 1;
    const double total = double(g.total_degree());

    LocalCommunity out;
    out.scan.phi.reserve(k_max);
    out.scan.boundary.reserve(k_max);
    out.scan.volume.reserve(k_max);

    std::vector<char> in_set(n, 0);
    double c_s = 0.0, vol = 0.0;
    bool source_seen = false;
    double best_phi = std::numeric_limits<double>::infinity();
    std::size_t best_k = 0;
    for (std::size_t k = 1; k <= k_max; ++k) {
        NodeId v = candidates.order[k - 1];
        std::size_t shared = 0;
        for (NodeId u : g.neighbors(v))
            if (in_set[u]) ++shared;
        c_s += double(g.degree(v)) - 2.0 * double(shared);
        vol += double(g.degree(v));
        in_set[v] = 1;
        if (v == candidates.source) source_seen = true;
        double mv = std::min(vol, total - vol);
        double phi = mv > 0.0 ? c_s / mv : std::numeric_limits<double>::quiet_NaN();
        out.scan.phi.push_back(phi);
        out.scan.boundary.push_back(c_s);
        out.scan.volume.push_back(vol);
        if (source_seen && mv > 0.0 && phi < best_phi) {
            best_phi = phi;
            best_k = k;
        }
    }
    if (best_k == 0) {
        // no valid prefix contains the source; the ant keeps its singleton
        out.nodes = {candidates.source};
        out.cut_k = 0;
        out.scan.best_k = 0;
        return out;
    }
    out.nodes.assign(candidates.order.begin(), candidates.order.begin() + long(best_k));
    out.phi = best_phi;
    out.cut_k = best_k;
    out.scan.best_k = best_k;
    return out;
}

}  // namespace maco
