#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <thread>

#include "maco/localsolve.hpp"
#include "maco/partition.hpp"
#include "maco/rng.hpp"

namespace maco {

struct MacoConfig {
    int iterations = 20;     // T
    int colony_size = 100;   // S
    double retention = 0.6;  // rho
    int walk_steps = 20;     // l
    std::uint64_t seed = 1;
    int threads = 1;
    bool early_stop = false;           // off by default; fixed-T is the reference behavior
    double early_stop_tol = 1e-6;      // relative Frobenius change of B

    void validate() const {
        if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
        if (colony_size < 1) throw std::invalid_argument("colony size must be >= 1");
        if (retention < 0.0 || retention >= 1.0) throw std::invalid_argument("retention must be in [0,1)");
        if (walk_steps < 1) throw std::invalid_argument("walk steps must be >= 1");
        if (threads < 1) throw std::invalid_argument("thread count must be >= 1");
    }
};

/// Snapshot handed to the per-iteration observer (trace mode).
struct EpaIteration {
    int iteration;                      // 0-based
    const CoMembershipMatrix& counts;
    const PheromoneMatrix& before;      // B the ants of this iteration saw
    const PheromoneMatrix& after;       // B following the update
    const std::vector<std::vector<NodeId>>& ant_communities;
    const std::vector<NodeId>& ant_sources;
};

using EpaObserver = std::function<void(const EpaIteration&)>;

namespace detail {

inline NodeId draw_source(std::uint64_t seed, int iteration, int ant,
                          const std::vector<NodeId>& pool) {
    auto rng = derive_stream(seed, std::uint64_t(iteration) + 1, std::uint64_t(ant) + 1);
    return pool[bounded_uniform(rng, pool.size())];
}

}  // namespace detail

/// Exploration phase: T iterations of S ants. Each ant draws a source from
/// its own RNG stream keyed by (seed, iteration, ant), solves its local
/// community against the iteration's fixed B, and the aggregated
/// co-membership counts update B <- rho*B + counts. Results are identical at
/// any thread count: ant outputs land in per-ant slots and the count
/// accumulation runs in a fixed order.
inline PheromoneMatrix run_epa(const Graph& g, const MacoConfig& cfg,
                               const EpaObserver& observer = {}) {
    cfg.validate();
    const std::vector<NodeId> pool = g.non_isolated();
    if (pool.empty()) throw std::invalid_argument("graph has no non-isolated nodes");

    const std::size_t n = g.node_count();
    PheromoneMatrix B(n, double(n));
    CoMembershipMatrix counts(n);
    std::vector<std::vector<NodeId>> communities(std::size_t(cfg.colony_size));
    std::vector<NodeId> sources(std::size_t(cfg.colony_size));

    for (int iter = 0; iter < cfg.iterations; ++iter) {
        const WeightedView view(g, B);
        auto solve_ant = [&](int j) {
            NodeId s = detail::draw_source(cfg.seed, iter, j, pool);
            sources[std::size_t(j)] = s;
            communities[std::size_t(j)] =
                extract_community(g, unfold_community(view, s, cfg.walk_steps)).nodes;
        };
        if (cfg.threads == 1 || cfg.colony_size == 1) {
            for (int j = 0; j < cfg.colony_size; ++j) solve_ant(j);
        } else {
            std::atomic<int> next{0};
            auto worker = [&] {
                for (int j = next.fetch_add(1); j < cfg.colony_size; j = next.fetch_add(1))
                    solve_ant(j);
            };
            std::vector<std::thread> threads;
            for (int t = 0; t < cfg.threads; ++t) threads.emplace_back(worker);
            for (auto& t : threads) t.join();
        }

        counts.reset();
        for (const auto& com : communities) counts.add_community(com);

        if (observer || cfg.early_stop) {
            PheromoneMatrix before = B;
            double frob_old = 0.0, frob_delta = 0.0;
            for (std::size_t idx = 0; idx < B.values().size(); ++idx) {
                double old = B.values()[idx];
                double updated = cfg.retention * old + double(counts.values()[idx]);
                frob_old += old * old;
                frob_delta += (updated - old) * (updated - old);
                B.values()[idx] = updated;
            }
            if (observer) observer({iter, counts, before, B, communities, sources});
            if (cfg.early_stop && std::sqrt(frob_delta) < cfg.early_stop_tol * std::sqrt(frob_old))
                break;
        } else {
            for (std::size_t idx = 0; idx < B.values().size(); ++idx)
                B.values()[idx] = cfg.retention * B.values()[idx] + double(counts.values()[idx]);
        }
    }
    return B;
}

/// Partition phase: scan rows in ascending node order; an unlabeled node i
/// claims community {j : B(i,j) > mean(B(i,:))}, overwriting earlier labels
/// (the pseudocode's literal reading). A constant row, where no entry clears
/// the mean, yields a singleton; so does any node left unlabeled after the
/// scan.
inline Partition run_ppa(const PheromoneMatrix& B) {
    const std::size_t n = B.dim();
    std::vector<int> labels(n, -1);
    std::vector<NodeId> members;
    for (NodeId i = 0; i < n; ++i) {
        if (labels[i] != -1) continue;
        const double eps = B.row_sum(i) / double(n);
        members.clear();
        for (NodeId j = 0; j < n; ++j)
            if (B(i, j) > eps) members.push_back(j);
        if (members.empty()) {
            labels[i] = int(i);
            continue;
        }
        for (NodeId j : members) labels[j] = int(i);
    }
    for (NodeId i = 0; i < n; ++i)
        if (labels[i] == -1) labels[i] = int(i);
    return Partition::from_labels(labels);
}

/// Full algorithm: exploration then partition.
inline Partition detect(const Graph& g, const MacoConfig& cfg, const EpaObserver& observer = {}) {
    return run_ppa(run_epa(g, cfg, observer));
}

}  // namespace maco
