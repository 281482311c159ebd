#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "maco/partition.hpp"

namespace maco {

/// Normalized Mutual Information (Danon et al. form, natural log):
/// NMI = -2 sum_ij N_ij ln(N_ij N / (N_i. N_.j))
///       / (sum_i N_i. ln(N_i./N) + sum_j N_.j ln(N_.j/N)).
/// Two trivial single-community partitions (0/0 case) count as 1.
inline double nmi(const Partition& a, const Partition& b) {
    if (a.labels.size() != b.labels.size())
        throw std::invalid_argument("nmi: partitions cover different node sets");
    const std::size_t N = a.labels.size();
    if (N == 0) throw std::invalid_argument("nmi: empty partitions");
    const std::size_t ka = std::size_t(a.community_count);
    const std::size_t kb = std::size_t(b.community_count);
    std::vector<double> conf(ka * kb, 0.0), ra(ka, 0.0), cb(kb, 0.0);
    for (std::size_t v = 0; v < N; ++v) {
        auto i = std::size_t(a.labels[v]);
        auto j = std::size_t(b.labels[v]);
        conf[i * kb + j] += 1.0;
        ra[i] += 1.0;
        cb[j] += 1.0;
    }
    double num = 0.0;
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < kb; ++j) {
            double nij = conf[i * kb + j];
            if (nij > 0.0) num += nij * std::log(nij * double(N) / (ra[i] * cb[j]));
        }
    double den = 0.0;
    for (double x : ra)
        if (x > 0.0) den += x * std::log(x / double(N));
    for (double x : cb)
        if (x > 0.0) den += x * std::log(x / double(N));
    if (den == 0.0) return num == 0.0 ? 1.0 : 0.0;
    return -2.0 * num / den;
}

/// Newman-Girvan modularity Q = sum_c [ e_cc/m - (a_c / 2m)^2 ].
inline double modularity(const Graph& g, const Partition& p) {
    if (p.labels.size() != g.node_count())
        throw std::invalid_argument("modularity: partition does not cover the graph");
    const double m = double(g.edge_count());
    if (m == 0.0) throw std::invalid_argument("modularity: graph has no edges");
    std::vector<double> within(std::size_t(p.community_count), 0.0);
    std::vector<double> deg_sum(std::size_t(p.community_count), 0.0);
    g.for_each_edge([&](NodeId i, NodeId j) {
        if (p.labels[i] == p.labels[j]) within[std::size_t(p.labels[i])] += 1.0;
    });
    for (NodeId i = 0; i < g.node_count(); ++i)
        deg_sum[std::size_t(p.labels[i])] += double(g.degree(i));
    double q = 0.0;
    for (std::size_t c = 0; c < within.size(); ++c) {
        double frac = deg_sum[c] / (2.0 * m);
        q += within[c] / m - frac * frac;
    }
    return q;
}

}  // namespace maco
