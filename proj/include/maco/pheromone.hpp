#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "maco/graph.hpp"

namespace maco {

/// Dense symmetric n x n nonnegative matrix B.
class PheromoneMatrix {
public:
    PheromoneMatrix(std::size_t n, double fill) : n_(n), v_(n * n, fill) {}

    static PheromoneMatrix uniform(std::size_t n, double value = 1.0) { return {n, value}; }

    std::size_t dim() const { return n_; }
    double operator()(NodeId i, NodeId j) const { return v_[std::size_t(i) * n_ + j]; }
    double& operator()(NodeId i, NodeId j) { return v_[std::size_t(i) * n_ + j]; }

    const std::vector<double>& values() const { return v_; }
    std::vector<double>& values() { return v_; }

    double row_sum(NodeId i) const {
        double s = 0.0;
        const double* row = v_.data() + std::size_t(i) * n_;
        for (std::size_t j = 0; j < n_; ++j) s += row[j];
        return s;
    }

private:
    std::size_t n_;
    std::vector<double> v_;
};

/// Per-iteration co-membership counts ("solution" matrix): counts(i,j) is the
/// number of ants whose community contained both i and j, diagonal included.
class CoMembershipMatrix {
public:
    explicit CoMembershipMatrix(std::size_t n) : n_(n), v_(n * n, 0) {}

    std::size_t dim() const { return n_; }
    std::uint32_t operator()(NodeId i, NodeId j) const { return v_[std::size_t(i) * n_ + j]; }

    void reset() { std::fill(v_.begin(), v_.end(), 0); }

    void add_community(std::span<const NodeId> com) {
        for (NodeId a : com)
            for (NodeId b : com) ++v_[std::size_t(a) * n_ + b];
    }

    const std::vector<std::uint32_t>& values() const { return v_; }

private:
    std::size_t n_;
    std::vector<std::uint32_t> v_;
};

/// The pheromone-weighted network M = A.*B: the graph's edges with weight
/// m_ij = b_ij on each edge (non-edges carry no weight). Weights are laid out
/// flat, aligned with the graph's CSR neighbor array, so a walk step can scan
/// them contiguously.
class WeightedView {
public:
    WeightedView(const Graph& g, const PheromoneMatrix& b) : g_(&g), b_(&b) {
        if (b.dim() != g.node_count())
            throw std::invalid_argument("pheromone dimension != node count");
        edge_weights_.resize(g.adjacency_size());
        wdeg_.assign(g.node_count(), 0.0);
        for (NodeId i = 0; i < g.node_count(); ++i) {
            std::size_t off = g.adjacency_offset(i);
            double d = 0.0;
            for (NodeId j : g.neighbors(i)) {
                double w = b(i, j);
                if (w < 0.0) throw std::invalid_argument("negative pheromone entry");
                edge_weights_[off++] = w;
                d += w;
            }
            wdeg_[i] = d;
            total_ += d;
        }
    }

    const Graph& graph() const { return *g_; }
    const PheromoneMatrix& pheromone() const { return *b_; }

    double weight(NodeId i, NodeId j) const { return g_->has_edge(i, j) ? (*b_)(i, j) : 0.0; }
    double weighted_degree(NodeId i) const { return wdeg_[i]; }
    double total_weight() const { return total_; }

    std::span<const double> edge_weights(NodeId i) const {
        return {edge_weights_.data() + g_->adjacency_offset(i), g_->degree(i)};
    }

private:
    const Graph* g_;
    const PheromoneMatrix* b_;
    std::vector<double> edge_weights_;
    std::vector<double> wdeg_;
    double total_ = 0.0;
};

}  // namespace maco
