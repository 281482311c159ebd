// Command-line front end: community detection, benchmark generation,
// accuracy sweeps, runtime benchmarks, and per-iteration traces.
//
// Exit codes: 0 success, 1 computation error, 2 usage/IO error.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maco/maco.hpp"

namespace fs = std::filesystem;
using namespace maco;

namespace {

struct CommonFlags {
    MacoConfig cfg;
    void attach(CLI::App* app) {
        app->add_option("--T", cfg.iterations, "iteration count")->check(CLI::PositiveNumber);
        app->add_option("--S", cfg.colony_size, "colony size")->check(CLI::PositiveNumber);
        app->add_option("--rho", cfg.retention, "pheromone retention rate in [0,1)");
        app->add_option("--l", cfg.walk_steps, "walk step count")->check(CLI::PositiveNumber);
        app->add_option("--seed", cfg.seed, "master RNG seed");
        app->add_option("--threads", cfg.threads, "worker thread cap")->check(CLI::PositiveNumber);
        app->add_flag("--early-stop", cfg.early_stop, "stop when B's relative change drops below 1e-6");
    }
};

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open output file: " + path);
    return f;
}

double elapsed_seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct RunRecord {
    std::string graph_id;
    MacoConfig cfg;
    double seconds = 0.0;
    int communities = 0;
    double q = 0.0;
    std::optional<double> nmi_value;
};

void write_record_csv(std::ostream& out, const RunRecord& r) {
    out << "graph,T,S,rho,l,seed,seconds,communities,Q,NMI\n";
    out << r.graph_id << ',' << r.cfg.iterations << ',' << r.cfg.colony_size << ','
        << std::setprecision(17) << r.cfg.retention << ',' << r.cfg.walk_steps << ',' << r.cfg.seed
        << ',' << r.seconds << ',' << r.communities << ',' << r.q << ',';
    if (r.nmi_value) out << *r.nmi_value;
    out << '\n';
}

void write_matrix_csv(std::ostream& out, const Graph& g, std::size_t n,
                      const std::function<double(NodeId, NodeId)>& cell) {
    out << "node";
    for (NodeId j = 0; j < n; ++j) out << ',' << g.token(j);
    out << '\n';
    out << std::setprecision(17);
    for (NodeId i = 0; i < n; ++i) {
        out << g.token(i);
        for (NodeId j = 0; j < n; ++j) out << ',' << cell(i, j);
        out << '\n';
    }
}

int cmd_detect(const std::string& graph_path, const std::string& truth_path,
               const std::string& out_path, const std::string& record_path,
               const std::string& format, MacoConfig cfg) {
    Graph g = load_edge_list_file(graph_path);
    std::optional<GroundTruth> truth;
    if (!truth_path.empty()) truth = load_ground_truth_file(truth_path, g);

    auto t0 = std::chrono::steady_clock::now();
    Partition p = detect(g, cfg);
    RunRecord rec;
    rec.graph_id = fs::path(graph_path).stem().string();
    rec.cfg = cfg;
    rec.seconds = elapsed_seconds(t0);
    rec.communities = p.community_count;
    rec.q = modularity(g, p);
    if (truth) rec.nmi_value = nmi(p, partition_from_ground_truth(*truth));

    char sep = format == "csv" ? ',' : '\t';
    if (!out_path.empty()) {
        auto f = open_out(out_path);
        write_partition(f, g, p, sep);
    } else {
        write_partition(std::cout, g, p, sep);
    }
    std::cout << std::setprecision(6) << "Q " << rec.q << '\n';
    if (rec.nmi_value) std::cout << "NMI " << *rec.nmi_value << '\n';
    if (!record_path.empty()) {
        auto f = open_out(record_path);
        write_record_csv(f, rec);
    }
    return 0;
}

int cmd_gen(const NewmanSpec& spec, const std::string& out_prefix) {
    auto [g, gt] = generate_newman(spec);
    auto ef = open_out(out_prefix + ".edges");
    write_edge_list(ef, g);
    auto tf = open_out(out_prefix + ".truth");
    for (NodeId i = 0; i < g.node_count(); ++i) tf << g.token(i) << ' ' << gt.labels[i] << '\n';
    std::cout << "wrote " << out_prefix << ".edges (" << g.node_count() << " nodes, "
              << g.edge_count() << " edges) and " << out_prefix << ".truth\n";
    return 0;
}

void write_sweep_rows(std::ostream& out, const std::string& param_name,
                      const std::map<double, std::vector<double>>& by_point) {
    out << param_name << ",mean_nmi,std,R\n" << std::setprecision(17);
    for (const auto& [point, vals] : by_point) {
        double mean = 0.0;
        for (double v : vals) mean += v;
        mean /= double(vals.size());
        double var = 0.0;
        for (double v : vals) var += (v - mean) * (v - mean);
        double sd = vals.size() > 1 ? std::sqrt(var / double(vals.size() - 1)) : 0.0;
        out << point << ',' << mean << ',' << sd << ',' << vals.size() << '\n';
    }
}

int cmd_sweep_newman(double zout_min, double zout_max, double zout_step, double z_total,
                     int reps, const std::string& out_path, const MacoConfig& base) {
    std::map<double, std::vector<double>> by_point;
    int point_index = 0;
    for (double zout = zout_min; zout <= zout_max + 1e-9; zout += zout_step, ++point_index) {
        for (int rep = 0; rep < reps; ++rep) {
            NewmanSpec spec;
            spec.z_in = z_total - zout;
            spec.z_out = zout;
            spec.seed = base.seed + std::uint64_t(point_index) * 10007ULL + std::uint64_t(rep);
            auto [g, gt] = generate_newman(spec);
            MacoConfig cfg = base;
            cfg.seed = spec.seed + 1;
            Partition p = detect(g, cfg);
            by_point[zout].push_back(nmi(p, partition_from_ground_truth(gt)));
        }
    }
    auto f = open_out(out_path);
    write_sweep_rows(f, "z_out", by_point);
    return 0;
}

// LFR instances are pairs <stem>.edges / <stem>.truth with a "mu<value>"
// token somewhere in the stem, e.g. lfr_mu0.25_3.edges.
std::optional<double> parse_mu(const std::string& stem) {
    auto pos = stem.find("mu");
    if (pos == std::string::npos) return std::nullopt;
    std::size_t start = pos + 2;
    std::size_t end = start;
    while (end < stem.size() && (std::isdigit(stem[end]) || stem[end] == '.')) ++end;
    if (end == start) return std::nullopt;
    return std::stod(stem.substr(start, end - start));
}

int cmd_sweep_lfr(const std::string& dir, const std::string& out_path, const MacoConfig& base) {
    if (!fs::is_directory(dir)) throw ParseError("not a directory: " + dir);
    std::map<double, std::vector<double>> by_point;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".edges") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    int rep = 0;
    for (const auto& path : files) {
        auto mu = parse_mu(path.stem().string());
        if (!mu) continue;
        fs::path truth = path;
        truth.replace_extension(".truth");
        if (!fs::exists(truth)) throw ParseError("missing ground truth for " + path.string());
        Graph g = load_edge_list_file(path.string());
        GroundTruth gt = load_ground_truth_file(truth.string(), g);
        MacoConfig cfg = base;
        cfg.seed = base.seed + std::uint64_t(rep++);
        Partition p = detect(g, cfg);
        by_point[*mu].push_back(nmi(p, partition_from_ground_truth(gt)));
    }
    if (by_point.empty()) throw ParseError("no LFR instances (*.edges with a mu<value> token) in " + dir);
    auto f = open_out(out_path);
    write_sweep_rows(f, "mu", by_point);
    return 0;
}

int cmd_bench(const std::vector<int>& c_list, int reps, const std::string& out_path,
              const MacoConfig& base) {
    auto f = open_out(out_path);
    f << "n,seconds,sqrt_seconds\n" << std::setprecision(17);
    for (std::size_t i = 0; i < c_list.size(); ++i) {
        auto suite = scaling_suite(std::span<const int>(&c_list[i], 1), base.seed + i);
        const Graph& g = suite[0].first;
        double total = 0.0;
        for (int rep = 0; rep < reps; ++rep) {
            MacoConfig cfg = base;
            cfg.seed = base.seed + std::uint64_t(rep) + 1;
            auto t0 = std::chrono::steady_clock::now();
            detect(g, cfg);
            total += elapsed_seconds(t0);
        }
        double mean = total / double(reps);
        f << g.node_count() << ',' << mean << ',' << std::sqrt(mean) << '\n';
    }
    return 0;
}

int cmd_trace(const std::string& graph_path, const std::string& source_token,
              std::vector<int> checkpoints, const std::string& outdir, const MacoConfig& cfg) {
    Graph g = load_edge_list_file(graph_path);
    NodeId s = g.index_of(source_token);
    if (g.degree(s) == 0) throw std::invalid_argument("trace source is isolated");
    for (int c : checkpoints)
        if (c < 1 || c > cfg.iterations)
            throw ParseError("checkpoint " + std::to_string(c) + " outside 1..T");
    std::set<int> wanted(checkpoints.begin(), checkpoints.end());
    fs::create_directories(outdir);

    auto observer = [&](const EpaIteration& it) {
        int gen = it.iteration + 1;
        if (!wanted.count(gen)) return;
        std::string tag = outdir + "/gen" + std::to_string(gen);
        WeightedView view(g, it.before);
        auto cl = unfold_community(view, s, cfg.walk_steps);
        auto com = extract_community(g, cl);
        auto psi = degree_corrected_distribution(view, s, cfg.walk_steps);

        {
            auto f = open_out(tag + "_psi.csv");
            f << "node,psi\n" << std::setprecision(17);
            for (NodeId i = 0; i < g.node_count(); ++i) f << g.token(i) << ',' << psi.values[i] << '\n';
        }
        {
            auto f = open_out(tag + "_list.csv");
            f << "rank,node,psi,phi,is_cutoff\n" << std::setprecision(17);
            for (std::size_t k = 0; k < cl.order.size(); ++k) {
                f << k + 1 << ',' << g.token(cl.order[k]) << ',' << cl.values[k] << ',';
                if (k < com.scan.phi.size()) f << com.scan.phi[k];
                f << ',' << (k + 1 == com.cut_k ? 1 : 0) << '\n';
            }
        }
        {
            auto f = open_out(tag + "_community.csv");
            f << "node\n";
            for (NodeId v : com.nodes) f << g.token(v) << '\n';
        }
        {
            auto f = open_out(tag + "_solution.csv");
            write_matrix_csv(f, g, g.node_count(),
                             [&](NodeId i, NodeId j) { return double(it.counts(i, j)); });
        }
        {
            auto f = open_out(tag + "_pheromone.csv");
            write_matrix_csv(f, g, g.node_count(), [&](NodeId i, NodeId j) { return it.after(i, j); });
        }
    };
    run_epa(g, cfg, observer);
    std::cout << "wrote " << wanted.size() << " trace bundles to " << outdir << '\n';
    return 0;
}

int cmd_converge(const std::string& graph_path, const std::string& source_token, int l_max,
                 const std::string& out_path) {
    Graph g = load_edge_list_file(graph_path);
    NodeId s;
    if (source_token.empty()) {
        s = 0;
        for (NodeId i = 1; i < g.node_count(); ++i)
            if (g.degree(i) > g.degree(s)) s = i;
    } else {
        s = g.index_of(source_token);
    }
    PheromoneMatrix b = PheromoneMatrix::uniform(g.node_count());
    WeightedView view(g, b);
    auto rows = convergence_trace(view, s, l_max);
    std::ostream* out = &std::cout;
    std::ofstream f;
    if (!out_path.empty()) {
        f = open_out(out_path);
        out = &f;
    }
    *out << "l,euclidean_delta,list_delta\n" << std::setprecision(17);
    for (const auto& r : rows) *out << r.step << ',' << r.euclidean_delta << ',' << r.list_delta << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MACO community detection toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read defaults from an INI/TOML config file");

    // detect
    auto* detect_cmd = app.add_subcommand("detect", "detect communities in an edge-list graph");
    std::string graph_path, truth_path, out_path, record_path, format = "tsv";
    detect_cmd->add_option("graph", graph_path, "edge-list file")->required();
    detect_cmd->add_option("--truth", truth_path, "ground-truth file for NMI");
    detect_cmd->add_option("--out", out_path, "partition output file (default stdout)");
    detect_cmd->add_option("--record", record_path, "write a RunRecord CSV");
    detect_cmd->add_option("--format", format, "partition separator: tsv or csv")
        ->check(CLI::IsMember({"tsv", "csv"}));
    CommonFlags detect_flags;
    detect_flags.attach(detect_cmd);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a planted-partition benchmark");
    NewmanSpec gen_spec;
    std::string gen_prefix;
    gen_cmd->add_option("--groups", gen_spec.groups, "community count")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--size", gen_spec.group_size, "nodes per group")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--zin", gen_spec.z_in, "expected within-group degree");
    gen_cmd->add_option("--zout", gen_spec.z_out, "expected between-group degree");
    gen_cmd->add_option("--seed", gen_spec.seed, "generator seed");
    gen_cmd->add_option("--out", gen_prefix, "output prefix (.edges/.truth)")->required();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "mean NMI per sweep point");
    std::string model = "newman", lfr_dir, sweep_out;
    double zout_min = 0.0, zout_max = 8.0, zout_step = 1.0, z_total = 16.0;
    int reps = 50;
    sweep_cmd->add_option("--model", model, "newman or lfr")->check(CLI::IsMember({"newman", "lfr"}));
    sweep_cmd->add_option("--zout-min", zout_min, "first z_out value");
    sweep_cmd->add_option("--zout-max", zout_max, "last z_out value");
    sweep_cmd->add_option("--zout-step", zout_step, "z_out increment");
    sweep_cmd->add_option("--z-total", z_total, "z_in + z_out");
    sweep_cmd->add_option("--dir", lfr_dir, "directory of LFR instances (lfr model)");
    sweep_cmd->add_option("-R,--reps", reps, "graphs per sweep point")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", sweep_out, "output CSV")->required();
    CommonFlags sweep_flags;
    sweep_flags.attach(sweep_cmd);

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "runtime scaling suite");
    std::vector<int> c_list{4, 8, 12, 16, 20};
    int bench_reps = 1;
    std::string bench_out;
    bench_cmd->add_option("--C", c_list, "community counts (n = 100*C)");
    bench_cmd->add_option("-R,--reps", bench_reps, "runs per instance")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--out", bench_out, "output CSV")->required();
    CommonFlags bench_flags;
    bench_flags.attach(bench_cmd);

    // trace
    auto* trace_cmd = app.add_subcommand("trace", "per-iteration trace bundles for one ant");
    std::string trace_graph, trace_source, trace_outdir;
    std::vector<int> checkpoints{1, 5, 10, 15, 20};
    trace_cmd->add_option("graph", trace_graph, "edge-list file")->required();
    trace_cmd->add_option("--source", trace_source, "ant source node token")->required();
    trace_cmd->add_option("--checkpoints", checkpoints, "iterations to dump (1-based)");
    trace_cmd->add_option("--outdir", trace_outdir, "output directory")->required();
    CommonFlags trace_flags;
    trace_flags.attach(trace_cmd);

    // converge
    auto* conv_cmd = app.add_subcommand("converge", "walk convergence diagnostics CSV");
    std::string conv_graph, conv_source, conv_out;
    int l_max = 50;
    conv_cmd->add_option("graph", conv_graph, "edge-list file")->required();
    conv_cmd->add_option("--source", conv_source, "source token (default: max-degree node)");
    conv_cmd->add_option("--lmax", l_max, "largest step count")->check(CLI::PositiveNumber);
    conv_cmd->add_option("--out", conv_out, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*detect_cmd)
            return cmd_detect(graph_path, truth_path, out_path, record_path, format, detect_flags.cfg);
        if (*gen_cmd) return cmd_gen(gen_spec, gen_prefix);
        if (*sweep_cmd) {
            if (model == "lfr") return cmd_sweep_lfr(lfr_dir, sweep_out, sweep_flags.cfg);
            return cmd_sweep_newman(zout_min, zout_max, zout_step, z_total, reps, sweep_out,
                                    sweep_flags.cfg);
        }
        if (*bench_cmd) return cmd_bench(c_list, bench_reps, bench_out, bench_flags.cfg);
        if (*trace_cmd)
            return cmd_trace(trace_graph, trace_source, checkpoints, trace_outdir, trace_flags.cfg);
        if (*conv_cmd) return cmd_converge(conv_graph, conv_source, l_max, conv_out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
