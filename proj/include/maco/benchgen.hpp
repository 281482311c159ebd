#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "maco/graph.hpp"
#include "maco/rng.hpp"

namespace maco {

/// Planted-partition (Newman) benchmark spec. z_in and z_out are expected
/// within-/between-group degrees; pair probabilities follow as
/// p_in = z_in/(group_size-1), p_out = z_out/(group_size*(groups-1)).
struct NewmanSpec {
    int groups = 4;
    int group_size = 32;
    double z_in = 12.0;
    double z_out = 4.0;
    std::uint64_t seed = 1;

    double p_in() const { return z_in / double(group_size - 1); }
    double p_out() const { return z_out / (double(group_size) * double(groups - 1)); }

    void validate() const {
        if (groups < 2) throw std::invalid_argument("need at least 2 groups");
        if (group_size < 2) throw std::invalid_argument("need at least 2 nodes per group");
        if (z_in < 0.0 || z_out < 0.0) throw std::invalid_argument("negative expected degree");
        if (p_in() > 1.0) throw std::invalid_argument("within-group pair probability exceeds 1");
        if (p_out() > 1.0) throw std::invalid_argument("between-group pair probability exceeds 1");
    }
};

/// Independent Bernoulli edges per node pair; ground truth is the planted
/// grouping.
inline std::pair<Graph, GroundTruth> generate_newman(const NewmanSpec& spec) {
    spec.validate();
    const std::size_t n = std::size_t(spec.groups) * std::size_t(spec.group_size);
    std::vector<int> group(n);
    for (std::size_t i = 0; i < n; ++i) group[i] = int(i / std::size_t(spec.group_size));

    auto rng = derive_stream(spec.seed, 0x6e65776d616eULL, n);
    const double p_in = spec.p_in();
    const double p_out = spec.p_out();
    const double inv = 1.0 / (double(std::mt19937_64::max()) + 1.0);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double p = group[i] == group[j] ? p_in : p_out;
            if (double(rng()) * inv < p) edges.emplace_back(NodeId(i), NodeId(j));
        }
    Graph g(n, std::move(edges));
    return {std::move(g), GroundTruth{std::move(group), spec.groups}};
}

/// Runtime-scaling instances: C groups of 100 nodes, z_in = 10, z_out = 6.
inline std::vector<std::pair<Graph, GroundTruth>> scaling_suite(std::span<const int> c_list,
                                                                std::uint64_t seed) {
    std::vector<std::pair<Graph, GroundTruth>> out;
    out.reserve(c_list.size());
    for (std::size_t idx = 0; idx < c_list.size(); ++idx) {
        if (c_list[idx] < 2) throw std::invalid_argument("community count must be >= 2");
        NewmanSpec spec;
        spec.groups = c_list[idx];
        spec.group_size = 100;
        spec.z_in = 10.0;
        spec.z_out = 6.0;
        spec.seed = seed + idx;
        out.push_back(generate_newman(spec));
    }
    return out;
}

}  // namespace maco
