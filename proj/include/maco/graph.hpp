#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace maco {

using NodeId = std::uint32_t;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadStats {
    std::size_t duplicate_edges = 0;
    std::size_t self_loops = 0;
    std::size_t isolated_nodes = 0;
};

/// Immutable undirected simple graph. Nodes carry external string tokens,
/// mapped to contiguous 0-based indices in first-appearance order.
/// Adjacency is stored in CSR form with sorted neighbor lists.
class Graph {
public:
    Graph(std::size_t n,
          std::vector<std::pair<NodeId, NodeId>> edges,
          std::vector<std::string> tokens = {}) {
        if (n == 0) throw std::invalid_argument("empty graph");
        n_ = n;
        if (tokens.empty()) {
            tokens.reserve(n);
            for (std::size_t i = 0; i < n; ++i) tokens.push_back(std::to_string(i));
        }
        if (tokens.size() != n) throw std::invalid_argument("token count != node count");
        tokens_ = std::move(tokens);
        for (std::size_t i = 0; i < n_; ++i) index_.emplace(tokens_[i], NodeId(i));

        // drop self-loops and duplicates, keep counts
        std::vector<std::pair<NodeId, NodeId>> clean;
        clean.reserve(edges.size());
        for (auto [a, b] : edges) {
            if (a >= n_ || b >= n_) throw std::invalid_argument("edge endpoint out of range");
            if (a == b) {
                ++stats_.self_loops;
                continue;
            }
            if (a > b) std::swap(a, b);
            clean.emplace_back(a, b);
        }
        std::sort(clean.begin(), clean.end());
        auto last = std::unique(clean.begin(), clean.end());
        stats_.duplicate_edges = std::size_t(clean.end() - last);
        clean.erase(last, clean.end());
        edge_count_ = clean.size();

        std::vector<std::size_t> deg(n_, 0);
        for (auto [a, b] : clean) {
            ++deg[a];
            ++deg[b];
        }
        offsets_.assign(n_ + 1, 0);
        for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
        neighbors_.resize(2 * edge_count_);
        std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
        for (auto [a, b] : clean) {
            neighbors_[cursor[a]++] = b;
            neighbors_[cursor[b]++] = a;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            std::sort(neighbors_.begin() + long(offsets_[i]), neighbors_.begin() + long(offsets_[i + 1]));
            if (deg[i] == 0) ++stats_.isolated_nodes;
        }
    }

    std::size_t node_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    std::size_t degree(NodeId i) const { return offsets_[i + 1] - offsets_[i]; }
    std::size_t total_degree() const { return 2 * edge_count_; }

    std::span<const NodeId> neighbors(NodeId i) const {
        return {neighbors_.data() + offsets_[i], neighbors_.data() + offsets_[i + 1]};
    }

    bool has_edge(NodeId a, NodeId b) const {
        auto nb = neighbors(a);
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    /// Offset of neighbor slot k of node i into the flat CSR arrays; lets a
    /// WeightedView keep per-edge weights aligned with the neighbor list.
    std::size_t adjacency_offset(NodeId i) const { return offsets_[i]; }
    std::size_t adjacency_size() const { return neighbors_.size(); }

    const std::string& token(NodeId i) const { return tokens_[i]; }

    NodeId index_of(const std::string& tok) const {
        auto it = index_.find(tok);
        if (it == index_.end()) throw std::out_of_range("unknown node token: " + tok);
        return it->second;
    }
    bool has_token(const std::string& tok) const { return index_.count(tok) != 0; }

    const LoadStats& load_stats() const { return stats_; }

    std::vector<NodeId> non_isolated() const {
        std::vector<NodeId> out;
        out.reserve(n_);
        for (NodeId i = 0; i < n_; ++i)
            if (degree(i) > 0) out.push_back(i);
        return out;
    }

    template <typename F>
    void for_each_edge(F&& f) const {
        for (NodeId i = 0; i < n_; ++i)
            for (NodeId j : neighbors(i))
                if (i < j) f(i, j);
    }

private:
    std::size_t n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> neighbors_;
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, NodeId> index_;
    LoadStats stats_;
};

struct GroundTruth {
    std::vector<int> labels;  // node index -> community label, renumbered 0..k-1
    int community_count = 0;
};

namespace detail {

inline bool comment_or_blank(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#' || line[pos] == '%';
}

inline std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(std::move(t));
    return toks;
}

}  // namespace detail

/// Parse an edge list: one edge per line, two whitespace-separated tokens,
/// '#'/'%' comments. Duplicates and self-loops are dropped with counters.
inline Graph load_edge_list(std::istream& in) {
    std::unordered_map<std::string, NodeId> index;
    std::vector<std::string> tokens;
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto intern = [&](const std::string& tok) {
        auto it = index.find(tok);
        if (it != index.end()) return it->second;
        NodeId id = NodeId(tokens.size());
        tokens.push_back(tok);
        index.emplace(tok, id);
        return id;
    };
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::comment_or_blank(line)) continue;
        auto toks = detail::split_tokens(line);
        if (toks.size() != 2)
            throw ParseError("edge list line " + std::to_string(lineno) + ": expected 2 tokens, got " +
                             std::to_string(toks.size()));
        NodeId a = intern(toks[0]);
        NodeId b = intern(toks[1]);
        edges.emplace_back(a, b);
    }
    if (tokens.empty()) throw ParseError("edge list holds no nodes");
    const std::size_t n = tokens.size();
    return Graph(n, std::move(edges), std::move(tokens));
}

inline Graph load_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open edge list file: " + path);
    return load_edge_list(f);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    g.for_each_edge([&](NodeId i, NodeId j) { out << g.token(i) << ' ' << g.token(j) << '\n'; });
}

/// Parse "node-token community-token" lines; every graph node must appear
/// exactly once. Labels are renumbered 0..k-1 in first-appearance order.
inline GroundTruth load_ground_truth(std::istream& in, const Graph& g) {
    std::vector<int> labels(g.node_count(), -1);
    std::unordered_map<std::string, int> label_ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::comment_or_blank(line)) continue;
        auto toks = detail::split_tokens(line);
        if (toks.size() != 2)
            throw ParseError("ground truth line " + std::to_string(lineno) + ": expected 2 tokens");
        if (!g.has_token(toks[0]))
            throw ParseError("ground truth line " + std::to_string(lineno) + ": unknown node token " + toks[0]);
        NodeId node = g.index_of(toks[0]);
        if (labels[node] != -1)
            throw ParseError("ground truth line " + std::to_string(lineno) + ": duplicate entry for node " + toks[0]);
        auto [it, _] = label_ids.emplace(toks[1], int(label_ids.size()));
        labels[node] = it->second;
    }
    for (NodeId i = 0; i < g.node_count(); ++i)
        if (labels[i] == -1) throw ParseError("node without label: " + g.token(i));
    return GroundTruth{std::move(labels), int(label_ids.size())};
}

inline GroundTruth load_ground_truth_file(const std::string& path, const Graph& g) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open ground truth file: " + path);
    return load_ground_truth(f, g);
}

}  // namespace maco
