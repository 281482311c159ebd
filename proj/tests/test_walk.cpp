#include <catch2/catch_amalgamated.hpp>

#include "maco/maco.hpp"
#include "oracles.hpp"

using namespace maco;
using Catch::Approx;

namespace {
PheromoneMatrix unit(const Graph& g) { return PheromoneMatrix::uniform(g.node_count()); }
}

TEST_CASE("transition probabilities on small fixtures") {
    Graph tri = oracle::triangle();
    auto b = unit(tri);
    WeightedView v(tri, b);
    CHECK(transition_prob(v, 0, 1) == Approx(0.5));
    CHECK(transition_prob(v, 0, 2) == Approx(0.5));
    CHECK(transition_prob(v, 0, 0) == Approx(0.0));

    Graph path = oracle::path3();
    auto bp = unit(path);
    WeightedView vp(path, bp);
    CHECK(transition_prob(vp, 0, 1) == Approx(1.0));
    CHECK(transition_prob(vp, 1, 0) == Approx(0.5));
    CHECK(transition_prob(vp, 1, 2) == Approx(0.5));
}

TEST_CASE("weighted transition follows pheromone ratios") {
    // node 0 with weights 2 and 6 toward its two neighbors
    Graph g(3, {{0, 1}, {0, 2}});
    PheromoneMatrix b = PheromoneMatrix::uniform(3);
    b(0, 1) = b(1, 0) = 2.0;
    b(0, 2) = b(2, 0) = 6.0;
    WeightedView v(g, b);
    CHECK(transition_prob(v, 0, 1) == Approx(0.25));
    CHECK(transition_prob(v, 0, 2) == Approx(0.75));
}

TEST_CASE("dangling node raises") {
    Graph g(3, {{0, 1}});
    auto b = unit(g);
    WeightedView v(g, b);
    CHECK_THROWS_AS(transition_prob(v, 2, 0), DanglingNodeError);
    CHECK_THROWS_AS(annealed_transition(v, 2, 0), DanglingNodeError);
    CHECK_THROWS_AS(plain_walk(v, 2, 3), DanglingNodeError);
    CHECK_THROWS_AS(annealed_constrained_walk(v, 2, 3), DanglingNodeError);
}

TEST_CASE("row stochasticity of both transition models") {
    Graph g = oracle::random_graph(32, 0.2, 11);
    PheromoneMatrix b = PheromoneMatrix::uniform(32);
    // arbitrary positive symmetric pheromone
    for (NodeId i = 0; i < 32; ++i)
        for (NodeId j = 0; j < 32; ++j) b(i, j) = 1.0 + double((i * 7 + j * 13) % 5);
    for (NodeId i = 0; i < 32; ++i)
        for (NodeId j = 0; j < i; ++j) b(i, j) = b(j, i);
    WeightedView v(g, b);
    for (NodeId i = 0; i < 32; ++i) {
        if (v.weighted_degree(i) == 0.0) continue;
        double prow = 0.0, qrow = 0.0;
        for (NodeId j = 0; j < 32; ++j) {
            prow += transition_prob(v, i, j);
            qrow += annealed_transition(v, i, j);
        }
        CHECK(prow == Approx(1.0).epsilon(0).margin(1e-12));
        CHECK(qrow == Approx(1.0).epsilon(0).margin(1e-12));
    }
}

TEST_CASE("annealed closed form matches explicit c-matrix") {
    Graph g = oracle::random_graph(24, 0.25, 3);
    auto b = unit(g);
    WeightedView v(g, b);
    auto q = oracle::annealed_matrix(oracle::weighted_adjacency(g, b));
    for (NodeId i = 0; i < 24; ++i) {
        if (v.weighted_degree(i) == 0.0) continue;
        for (NodeId j = 0; j < 24; ++j)
            CHECK(annealed_transition(v, i, j) == Approx(q[i][j]).epsilon(0).margin(1e-12));
    }
}

TEST_CASE("annealed row on path 0-1-2 is [0.25, 0.5, 0.25] for every source") {
    Graph g = oracle::path3();
    auto b = unit(g);
    WeightedView v(g, b);
    for (NodeId i = 0; i < 3; ++i) {
        CHECK(annealed_transition(v, i, 0) == Approx(0.25));
        CHECK(annealed_transition(v, i, 1) == Approx(0.5));
        CHECK(annealed_transition(v, i, 2) == Approx(0.25));
    }
}

TEST_CASE("plain walk basics") {
    Graph path = oracle::path3();
    auto bp = unit(path);
    WeightedView vp(path, bp);
    auto l0 = plain_walk(vp, 1, 0);
    CHECK(l0.values == std::vector<double>{0.0, 1.0, 0.0});
    auto l1 = plain_walk(vp, 1, 1);
    CHECK(l1.values[0] == Approx(0.5));
    CHECK(l1.values[1] == Approx(0.0));
    CHECK(l1.values[2] == Approx(0.5));

    Graph tri = oracle::triangle();
    auto bt = unit(tri);
    WeightedView vt(tri, bt);
    auto l2 = plain_walk(vt, 0, 2);
    CHECK(l2.values[0] == Approx(0.5));
    CHECK(l2.values[1] == Approx(0.25));
    CHECK(l2.values[2] == Approx(0.25));
}

TEST_CASE("plain walk matches dense oracle on random graphs") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Graph g = oracle::random_graph(20, 0.3, seed + 40);
        auto b = unit(g);
        WeightedView v(g, b);
        auto pool = g.non_isolated();
        if (pool.empty()) continue;
        NodeId s = pool[0];
        for (int l : {1, 3, 7}) {
            auto got = plain_walk(v, s, l);
            auto want = oracle::dense_plain_walk(g, b, s, l);
            double sum = 0.0;
            for (NodeId i = 0; i < g.node_count(); ++i) {
                CHECK(got.values[i] == Approx(want[i]).epsilon(0).margin(1e-12));
                sum += got.values[i];
            }
            CHECK(sum == Approx(1.0).epsilon(0).margin(1e-12));
        }
    }
}

TEST_CASE("uniform pheromone equals the classical simple random walk") {
    Graph g = oracle::random_graph(26, 0.25, 9);
    PheromoneMatrix ones = PheromoneMatrix::uniform(26, 1.0);
    PheromoneMatrix scaled = PheromoneMatrix::uniform(26, 26.0);
    WeightedView v1(g, ones), v2(g, scaled);
    auto pool = g.non_isolated();
    REQUIRE(!pool.empty());
    auto a = plain_walk(v1, pool[0], 5);
    auto c = plain_walk(v2, pool[0], 5);
    for (NodeId i = 0; i < 26; ++i) CHECK(a.values[i] == Approx(c.values[i]).epsilon(0).margin(1e-12));
}

TEST_CASE("constrained walk on K4, one step") {
    Graph g = oracle::k4();
    auto b = unit(g);
    WeightedView v(g, b);
    auto beta = annealed_constrained_walk(v, 0, 1);
    CHECK(beta.values[0] == Approx(0.0));
    for (NodeId j = 1; j < 4; ++j) CHECK(beta.values[j] == Approx(1.0 / 3.0));
    CHECK_FALSE(beta.degenerate);
}

TEST_CASE("constrained walk never crosses disconnected components") {
    Graph g = oracle::two_triangles();
    auto b = unit(g);
    WeightedView v(g, b);
    for (int l : {1, 2, 5, 20}) {
        auto beta = annealed_constrained_walk(v, 0, l);
        for (NodeId j = 3; j < 6; ++j) CHECK(beta.values[j] == 0.0);
    }
}

TEST_CASE("constrained walk step 0 is the indicator") {
    Graph g = oracle::two_triangles();
    auto b = unit(g);
    WeightedView v(g, b);
    auto beta = annealed_constrained_walk(v, 2, 0);
    CHECK(beta.values == std::vector<double>{0, 0, 1, 0, 0, 0});
}

TEST_CASE("constrained walk stays normalized and nonnegative at every step") {
    Graph g = oracle::random_graph(30, 0.2, 17);
    auto b = unit(g);
    WeightedView v(g, b);
    auto pool = g.non_isolated();
    REQUIRE(!pool.empty());
    for (int l = 1; l <= 12; ++l) {
        auto beta = annealed_constrained_walk(v, pool[1 % pool.size()], l);
        double sum = 0.0;
        for (double x : beta.values) {
            CHECK(x >= 0.0);
            sum += x;
        }
        CHECK(sum == Approx(1.0).epsilon(0).margin(1e-12));
    }
}

TEST_CASE("constrained walk matches dense oracle") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Graph g = oracle::random_graph(18, 0.3, seed + 80);
        auto b = unit(g);
        WeightedView v(g, b);
        auto pool = g.non_isolated();
        if (pool.empty()) continue;
        for (int l : {1, 4, 10}) {
            auto got = annealed_constrained_walk(v, pool[0], l);
            auto want = oracle::dense_constrained_walk(g, b, pool[0], l);
            REQUIRE(got.degenerate == want.degenerate);
            for (NodeId i = 0; i < g.node_count(); ++i)
                CHECK(got.values[i] == Approx(want.beta[i]).epsilon(0).margin(1e-12));
        }
    }
}

TEST_CASE("degree correction arithmetic") {
    // beta = [0, 0.5, 0.5], d' = [2, 1, 4] -> psi = [0, 0.8, 0.2]
    std::vector<double> beta{0.0, 0.5, 0.5};
    std::vector<double> psi(3, 0.0);
    std::vector<double> d{2.0, 1.0, 4.0};
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        psi[std::size_t(i)] = beta[std::size_t(i)] / d[std::size_t(i)];
        sum += psi[std::size_t(i)];
    }
    for (double& x : psi) x /= sum;
    CHECK(psi[0] == Approx(0.0));
    CHECK(psi[1] == Approx(0.8));
    CHECK(psi[2] == Approx(0.2));
}

TEST_CASE("psi equals beta on a regular weighted subgraph") {
    Graph g = oracle::two_triangles();
    auto b = unit(g);
    WeightedView v(g, b);
    auto beta = annealed_constrained_walk(v, 0, 6);
    auto psi = degree_corrected_distribution(v, 0, 6);
    for (NodeId i = 0; i < 6; ++i) CHECK(psi.values[i] == Approx(beta.values[i]).epsilon(0).margin(1e-12));
}

TEST_CASE("two disjoint triangles, s=0, l=20: oracle-frozen psi") {
    // Eq.(5) settles into a period-2 cycle on the triangle; the even-step
    // value is [2/3, 1/6, 1/6], not the uniform vector.
    Graph g = oracle::two_triangles();
    auto b = unit(g);
    WeightedView v(g, b);
    auto psi = degree_corrected_distribution(v, 0, 20);
    auto want = oracle::dense_psi(g, b, 0, 20);
    for (NodeId i = 0; i < 6; ++i) CHECK(psi.values[i] == Approx(want[i]).epsilon(0).margin(1e-12));
    CHECK(psi.values[0] == Approx(2.0 / 3.0).epsilon(0).margin(1e-9));
    CHECK(psi.values[1] == Approx(1.0 / 6.0).epsilon(0).margin(1e-9));
    CHECK(psi.values[2] == Approx(1.0 / 6.0).epsilon(0).margin(1e-9));
    for (NodeId j = 3; j < 6; ++j) CHECK(psi.values[j] == 0.0);
}

TEST_CASE("convergence trace reports the period-2 cycle on two triangles") {
    Graph g = oracle::two_triangles();
    auto b = unit(g);
    WeightedView v(g, b);
    auto rows = convergence_trace(v, 0, 12);
    REQUIRE(rows.size() == 12);
    // consecutive deltas alternate between two fixed values from l >= 3
    for (std::size_t i = 3; i + 2 < rows.size(); ++i)
        CHECK(rows[i].euclidean_delta == Approx(rows[i + 2].euclidean_delta).epsilon(0).margin(1e-12));
    // two-apart psi values repeat exactly, so deltas never vanish
    CHECK(rows[5].euclidean_delta > 0.1);
    for (const auto& r : rows) CHECK(r.list_delta >= 0);
}

TEST_CASE("trace deltas match recomputing psi from scratch at each step") {
    Graph g = oracle::random_graph(16, 0.3, 21);
    auto b = unit(g);
    WeightedView v(g, b);
    auto pool = g.non_isolated();
    REQUIRE(!pool.empty());
    NodeId s = pool[0];
    auto rows = convergence_trace(v, s, 6);
    for (int l = 1; l <= 6; ++l) {
        auto prev = degree_corrected_distribution(v, s, l - 1);
        auto cur = degree_corrected_distribution(v, s, l);
        double sq = 0.0;
        for (NodeId i = 0; i < g.node_count(); ++i) {
            double d = cur.values[i] - prev.values[i];
            sq += d * d;
        }
        CHECK(rows[std::size_t(l - 1)].euclidean_delta == Approx(std::sqrt(sq)).epsilon(0).margin(1e-12));
        if (rows[std::size_t(l - 1)].euclidean_delta == 0.0)
            CHECK(rows[std::size_t(l - 1)].list_delta == 0);
    }
}

TEST_CASE("separation property on strongly structured planted graphs") {
    // Eq.(3)-style statistical property: with z_out <= 4 the in-community psi
    // floor exceeds the out-community ceiling for >= 95% of sources.
    int ok = 0, total = 0;
    for (std::uint64_t rep = 0; rep < 6; ++rep) {
        NewmanSpec spec;
        spec.z_in = 12.0;
        spec.z_out = 4.0;
        spec.seed = 100 + rep;
        auto [g, gt] = generate_newman(spec);
        PheromoneMatrix b = PheromoneMatrix::uniform(g.node_count());
        WeightedView v(g, b);
        for (NodeId s = 0; s < g.node_count(); s += 8) {
            if (g.degree(s) == 0) continue;
            auto psi = degree_corrected_distribution(v, s, 20);
            double min_in = 1e9, max_out = -1.0;
            for (NodeId i = 0; i < g.node_count(); ++i) {
                if (gt.labels[i] == gt.labels[s]) min_in = std::min(min_in, psi.values[i]);
                else max_out = std::max(max_out, psi.values[i]);
            }
            ++total;
            if (min_in > max_out) ++ok;
        }
    }
    REQUIRE(total > 0);
    CHECK(double(ok) / double(total) >= 0.95);
}
