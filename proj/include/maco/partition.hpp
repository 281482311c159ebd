#pragma once

#include <ostream>
#include <stdexcept>
#include <vector>

#include "maco/graph.hpp"

namespace maco {

/// Node -> community assignment with ids renumbered 0..k-1 in order of first
/// appearance by ascending node index.
struct Partition {
    std::vector<int> labels;
    int community_count = 0;

    static Partition from_labels(const std::vector<int>& raw) {
        Partition p;
        p.labels.assign(raw.size(), -1);
        std::vector<int> remap;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] < 0) throw std::invalid_argument("unlabeled node in partition");
            int found = -1;
            for (std::size_t r = 0; r < remap.size(); ++r)
                if (remap[r] == raw[i]) {
                    found = int(r);
                    break;
                }
            if (found == -1) {
                found = int(remap.size());
                remap.push_back(raw[i]);
            }
            p.labels[i] = found;
        }
        p.community_count = int(remap.size());
        return p;
    }

    std::vector<std::vector<NodeId>> communities() const {
        std::vector<std::vector<NodeId>> out;
        out.resize(std::size_t(community_count));
        for (std::size_t i = 0; i < labels.size(); ++i) out[std::size_t(labels[i])].push_back(NodeId(i));
        return out;
    }
};

inline Partition partition_from_ground_truth(const GroundTruth& gt) {
    return Partition::from_labels(gt.labels);
}

/// Partition file format: "token<TAB>community_id" (or comma with sep=',').
inline void write_partition(std::ostream& out, const Graph& g, const Partition& p, char sep = '\t') {
    if (p.labels.size() != g.node_count())
        throw std::invalid_argument("partition does not cover the graph");
    for (NodeId i = 0; i < g.node_count(); ++i)
        out << g.token(i) << sep << p.labels[i] << '\n';
}

}  // namespace maco
