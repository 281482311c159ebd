#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "maco/pheromone.hpp"

namespace maco {

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kZeroTruncation = 1e-15;

struct DanglingNodeError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Length-n probability vector over nodes for a fixed source and step count.
/// `degenerate` marks the fallback indicator returned when a constrained
/// step clamps every entry to zero.
struct TransitionVector {
    NodeId source = 0;
    int steps = 0;
    std::vector<double> values;
    bool degenerate = false;
};

/// One-step transition probability p_ij = m_ij / sum_r m_ir on the weighted
/// network.
inline double transition_prob(const WeightedView& view, NodeId i, NodeId j) {
    double di = view.weighted_degree(i);
    if (di <= 0.0) throw DanglingNodeError("dangling node " + std::to_string(i));
    return view.weight(i, j) / di;
}

/// Annealed transition q_ij = c_ij / sum_r c_ir with c_ij = d'_i d'_j / sum d'.
/// The row sum collapses to d'_i (diagonal included), so q_ij = d'_j / sum d'
/// independent of i.
inline double annealed_transition(const WeightedView& view, NodeId i, NodeId j) {
    if (view.total_weight() <= 0.0) throw DanglingNodeError("weighted network has no edges");
    if (view.weighted_degree(i) <= 0.0) throw DanglingNodeError("dangling node " + std::to_string(i));
    return view.weighted_degree(j) / view.total_weight();
}

namespace detail {

inline void check_source(const WeightedView& view, NodeId s) {
    if (s >= view.graph().node_count()) throw std::out_of_range("source out of range");
    if (view.weighted_degree(s) <= 0.0)
        throw DanglingNodeError("isolated source node " + std::to_string(s));
}

// out[i] = sum_r in[r] * p_ri, one sparse pass over the neighbors of the
// support of `in`.
inline void plain_step(const WeightedView& view, const std::vector<double>& in, std::vector<double>& out) {
    std::fill(out.begin(), out.end(), 0.0);
    const Graph& g = view.graph();
    for (NodeId r = 0; r < g.node_count(); ++r) {
        if (in[r] == 0.0) continue;
        double scale = in[r] / view.weighted_degree(r);
        auto nbrs = g.neighbors(r);
        auto w = view.edge_weights(r);
        for (std::size_t k = 0; k < nbrs.size(); ++k) out[nbrs[k]] += scale * w[k];
    }
}

inline void normalize_truncate(std::vector<double>& v) {
    double sum = std::accumulate(v.begin(), v.end(), 0.0);
    for (double& x : v) x /= sum;
    bool truncated = false;
    for (double& x : v)
        if (x < kZeroTruncation) {
            if (x != 0.0) truncated = true;
            x = 0.0;
        }
    if (truncated) {
        sum = std::accumulate(v.begin(), v.end(), 0.0);
        for (double& x : v) x /= sum;
    }
}

// One annealed-constrained step; returns false when the clamped sum is zero
// (caller falls back to the indicator at the source). Since the annealed
// rows are identical and `in` sums to 1, the subtracted term is d'_i / W.
inline bool constrained_step(const WeightedView& view, const std::vector<double>& in,
                             std::vector<double>& out) {
    plain_step(view, in, out);
    double W = view.total_weight();
    double sum = 0.0;
    for (NodeId i = 0; i < out.size(); ++i) {
        double v = out[i] - view.weighted_degree(i) / W;
        out[i] = v > 0.0 ? v : 0.0;
        sum += out[i];
    }
    if (sum == 0.0) return false;
    for (double& x : out) x /= sum;
    bool truncated = false;
    for (double& x : out)
        if (x > 0.0 && x < kZeroTruncation) {
            x = 0.0;
            truncated = true;
        }
    if (truncated) {
        sum = std::accumulate(out.begin(), out.end(), 0.0);
        for (double& x : out) x /= sum;
    }
    return true;
}

inline std::vector<double> indicator(std::size_t n, NodeId s) {
    std::vector<double> v(n, 0.0);
    v[s] = 1.0;
    return v;
}

// psi = beta ./ d', normalized; nodes with d' = 0 get 0.
inline std::vector<double> degree_correct(const WeightedView& view, const std::vector<double>& beta) {
    std::vector<double> psi(beta.size(), 0.0);
    for (NodeId i = 0; i < beta.size(); ++i) {
        double d = view.weighted_degree(i);
        if (d > 0.0) psi[i] = beta[i] / d;
    }
    normalize_truncate(psi);
    return psi;
}

}  // namespace detail

/// l-step distribution of the plain random walk (alpha), starting from the
/// indicator at s.
inline TransitionVector plain_walk(const WeightedView& view, NodeId s, int l) {
    detail::check_source(view, s);
    if (l < 0) throw std::invalid_argument("negative step count");
    std::size_t n = view.graph().node_count();
    std::vector<double> cur = detail::indicator(n, s);
    std::vector<double> next(n);
    for (int step = 0; step < l; ++step) {
        detail::plain_step(view, cur, next);
        cur.swap(next);
    }
    return {s, l, std::move(cur), false};
}

/// l-step distribution of the annealed-constrained walk (beta): each step
/// clamps the plain-step mass minus the annealed mass at zero, then
/// renormalizes. A fully clamped step yields the indicator at s, flagged
/// degenerate.
inline TransitionVector annealed_constrained_walk(const WeightedView& view, NodeId s, int l) {
    detail::check_source(view, s);
    if (l < 0) throw std::invalid_argument("negative step count");
    std::size_t n = view.graph().node_count();
    std::vector<double> cur = detail::indicator(n, s);
    std::vector<double> next(n);
    for (int step = 0; step < l; ++step) {
        if (!detail::constrained_step(view, cur, next))
            return {s, l, detail::indicator(n, s), true};
        cur.swap(next);
    }
    return {s, l, std::move(cur), false};
}

/// Degree-corrected distribution psi = beta ./ d', applied once after the
/// final step and renormalized.
inline TransitionVector degree_corrected_distribution(const WeightedView& view, NodeId s, int l) {
    TransitionVector beta = annealed_constrained_walk(view, s, l);
    if (beta.degenerate) return beta;
    return {s, l, detail::degree_correct(view, beta.values), false};
}

/// Nodes ordered by descending value, ties by ascending index.
inline std::vector<NodeId> sorted_order(const std::vector<double>& values) {
    std::vector<NodeId> order(values.size());
    std::iota(order.begin(), order.end(), NodeId(0));
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return values[a] > values[b]; });
    return order;
}

struct TraceRow {
    int step = 0;               // l
    double euclidean_delta = 0; // |psi^l - psi^{l-1}|_2
    int list_delta = 0;         // positions where consecutive sorted lists differ
};

/// Convergence diagnostics of psi for l = 1..l_max.
inline std::vector<TraceRow> convergence_trace(const WeightedView& view, NodeId s, int l_max) {
    detail::check_source(view, s);
    if (l_max < 1) throw std::invalid_argument("l_max must be >= 1");
    std::size_t n = view.graph().node_count();
    std::vector<double> beta = detail::indicator(n, s);
    std::vector<double> next(n);
    std::vector<double> prev_psi = detail::degree_correct(view, beta);
    std::vector<NodeId> prev_order = sorted_order(prev_psi);
    std::vector<TraceRow> rows;
    rows.reserve(std::size_t(l_max));
    for (int l = 1; l <= l_max; ++l) {
        if (!detail::constrained_step(view, beta, next)) beta = detail::indicator(n, s);
        else beta.swap(next);
        std::vector<double> psi = detail::degree_correct(view, beta);
        std::vector<NodeId> order = sorted_order(psi);
        double sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double d = psi[i] - prev_psi[i];
            sq += d * d;
        }
        int diff = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (order[i] != prev_order[i]) ++diff;
        rows.push_back({l, std::sqrt(sq), diff});
        prev_psi = std::move(psi);
        prev_order = std::move(order);
    }
    return rows;
}

}  // namespace maco
