// vcpart: vertex-cut partitioning toolkit front end.
//
// Subcommands: generate, partition, metrics, simulate, compare. Every run
// is a pure function of its flags: outputs land in --out together with the
// serialized run config, and reruns are byte-identical.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "vcp/assignment.hpp"
#include "vcp/baselines.hpp"
#include "vcp/bsp.hpp"
#include "vcp/ebv.hpp"
#include "vcp/generator.hpp"
#include "vcp/graph_io.hpp"
#include "vcp/metrics.hpp"
#include "vcp/reference.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace vcp;

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

void write_atomic(const fs::path& path, const std::string& content)
{
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out)
            throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

struct OutputDir {
    fs::path dir;
    void prepare() const { fs::create_directories(dir); }
    void write(const std::string& name, const std::string& content) const
    {
        write_atomic(dir / name, content);
    }
};

// Graph source: either a file or a generated power-law graph. Part of the
// run config so a run is reproducible from config.json alone.
struct GraphSource {
    std::string input;
    bool directed = false;
    bool drop_self_loops = false;
    bool dedup = false;
    vid_t gen_n = 0;
    double gen_avg = 10.0;
    double gen_eta = 2.4;
    std::uint64_t seed = kDefaultSeed;

    void add_options(CLI::App* cmd, bool positional = false)
    {
        cmd->add_option("--input,-i", input, "edge-list file (or binary cache)");
        if (positional)
            cmd->add_option("graph", input, "edge-list file (positional)");
        cmd->add_flag("--directed", directed, "treat input edges as directed");
        cmd->add_flag("--drop-self-loops", drop_self_loops, "skip self-loop records");
        cmd->add_flag("--dedup", dedup, "skip duplicate edge records");
        cmd->add_option("--gen-n", gen_n, "generate: number of vertices");
        cmd->add_option("--gen-avg", gen_avg, "generate: target average degree");
        cmd->add_option("--gen-eta", gen_eta, "generate: power-law exponent");
        cmd->add_option("--seed", seed, "seed for generation and hashing");
    }

    Graph load() const
    {
        if (!input.empty())
            return load_edge_list(input, directed, {drop_self_loops, dedup});
        if (gen_n == 0)
            throw validation_error("need --input or --gen-n");
        return generate_power_law({gen_n, gen_avg, gen_eta, seed});
    }

    json to_json() const
    {
        json j;
        if (!input.empty()) {
            j["input"] = input;
            j["directed"] = directed;
            j["drop_self_loops"] = drop_self_loops;
            j["dedup"] = dedup;
        } else {
            j["generator"] = {{"num_vertices", gen_n},
                              {"target_avg_degree", gen_avg},
                              {"eta", gen_eta},
                              {"seed", seed}};
        }
        return j;
    }
};

struct PartitionOpts {
    std::string algo = "ebv";
    bid_t p = 2;
    double alpha = 1.0;
    double beta = 1.0;
    bool sort = true;
    std::string tie_break = "highest";
    std::string grid; // RxC
    std::uint64_t seed = kDefaultSeed;

    void add_options(CLI::App* cmd, bool with_algo = true)
    {
        if (with_algo)
            cmd->add_option("--algo", algo, "ebv|dbh|cvc|random")
                ->check(CLI::IsMember({"ebv", "dbh", "cvc", "random"}));
        cmd->add_option("--p", p, "number of subgraphs")->required();
        cmd->add_option("--alpha", alpha, "ebv edge-balance weight");
        cmd->add_option("--beta", beta, "ebv vertex-balance weight");
        cmd->add_flag("--sort,!--no-sort", sort, "ebv degree-sum sorting (default on)");
        cmd->add_option("--tie-break", tie_break, "ebv: highest|lowest index on ties")
            ->check(CLI::IsMember({"highest", "lowest"}));
        cmd->add_option("--grid", grid, "cvc grid as RxC (rows*cols = p)");
    }

    EbvParams ebv_params() const
    {
        return {p, alpha, beta, sort,
                tie_break == "lowest" ? TieBreak::lowest_index : TieBreak::highest_index};
    }

    BaselineParams baseline_params() const
    {
        BaselineParams bp{p, seed, std::nullopt};
        if (!grid.empty()) {
            const auto x = grid.find('x');
            try {
                if (x == std::string::npos)
                    throw std::invalid_argument(grid);
                bp.grid = {static_cast<bid_t>(std::stoul(grid.substr(0, x))),
                           static_cast<bid_t>(std::stoul(grid.substr(x + 1)))};
            } catch (const std::logic_error&) {
                throw validation_error("--grid must look like RxC, e.g. 4x4");
            }
        }
        return bp;
    }

    PartitionAssignment partition(const Graph& g, const std::string& name) const
    {
        if (name == "ebv")
            return partition_ebv(g, ebv_params());
        if (name == "dbh")
            return partition_dbh(g, baseline_params());
        if (name == "cvc")
            return partition_cvc(g, baseline_params());
        if (name == "random")
            return partition_random(g, baseline_params());
        throw validation_error("unknown algorithm: " + name);
    }

    RunLabel label(const std::string& name) const
    {
        RunLabel l;
        l.algorithm = name;
        if (name == "ebv") {
            l.alpha = alpha;
            l.beta = beta;
            l.sort = sort;
        }
        return l;
    }

    json to_json() const
    {
        json j;
        j["algorithm"] = algo;
        j["p"] = p;
        if (algo == "ebv") {
            j["alpha"] = alpha;
            j["beta"] = beta;
            j["sort"] = sort;
            j["tie_break"] = tie_break;
        } else {
            j["seed"] = seed;
            if (!grid.empty())
                j["grid"] = grid;
        }
        return j;
    }
};

std::string fmt17(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

vid_t resolve_original_id(const Graph& g, std::uint64_t original)
{
    if (g.original_ids().empty()) {
        if (original < g.num_vertices())
            return static_cast<vid_t>(original);
    } else {
        for (vid_t v = 0; v < g.num_vertices(); ++v)
            if (g.original_id(v) == original)
                return v;
    }
    throw validation_error("vertex " + std::to_string(original) + " not in graph");
}

json graph_stats(const Graph& g)
{
    return {{"num_vertices", g.num_vertices()},
            {"num_edges", g.num_edges()},
            {"directed", g.directed()},
            {"arc_count_doubled", g.directed() ? g.num_edges() : 2 * g.num_edges()}};
}

std::string partition_summary(const Graph& g, const PartitionAssignment& a,
                              const PartitionOpts& opts, const std::string& algo)
{
    MetricsReport rep = compute_metrics(g, a);
    if (algo == "ebv")
        attach_theorem_bounds(rep, g.num_edges(), g.num_vertices(), opts.alpha, opts.beta);
    json j = json::parse(metrics_to_json(opts.label(algo), rep));
    j["graph"] = graph_stats(g);
    if (!a.warnings.empty())
        j["warnings"] = a.warnings;
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_generate(const GraphSource& src, const OutputDir& out)
{
    if (src.gen_n == 0)
        throw validation_error("generate needs --gen-n");
    const Graph g = src.load();
    out.prepare();
    {
        std::ostringstream body;
        for (const Edge& e : g.edges())
            body << e.src << ' ' << e.dst << '\n';
        out.write("graph.txt", body.str());
    }
    save_binary_cache(g, out.dir / "graph.bin.tmp");
    fs::rename(out.dir / "graph.bin.tmp", out.dir / "graph.bin");
    out.write("stats.json", graph_stats(g).dump(2) + "\n");
    json cfg = {{"command", "generate"}, {"source", src.to_json()}};
    out.write("config.json", cfg.dump(2) + "\n");
    return 0;
}

int cmd_partition(const GraphSource& src, const PartitionOpts& opts, const OutputDir& out)
{
    const Graph g = src.load();
    const PartitionAssignment a = opts.partition(g, opts.algo);
    out.prepare();
    {
        std::ostringstream body;
        for (eid_t i = 0; i < g.num_edges(); ++i)
            body << g.original_id(g.edge(i).src) << ' ' << g.original_id(g.edge(i).dst)
                 << ' ' << a.part[i] << '\n';
        out.write("assignment.txt", body.str());
    }
    out.write("summary.json", partition_summary(g, a, opts, opts.algo));
    json cfg = {{"command", "partition"},
                {"source", src.to_json()},
                {"partition", opts.to_json()}};
    out.write("config.json", cfg.dump(2) + "\n");
    for (const auto& w : a.warnings)
        std::cerr << "warning: " << w << '\n';
    return 0;
}

int cmd_metrics(const GraphSource& src, const std::string& assignment_path, bid_t p,
                const std::string& algo_label, std::optional<double> alpha,
                std::optional<double> beta, const OutputDir& out)
{
    const Graph g = src.load();
    const PartitionAssignment a = load_assignment(g, assignment_path, p);
    MetricsReport rep = compute_metrics(g, a);
    if (alpha && beta)
        attach_theorem_bounds(rep, g.num_edges(), g.num_vertices(), *alpha, *beta);

    RunLabel label;
    label.algorithm = algo_label;
    label.alpha = alpha;
    label.beta = beta;

    out.prepare();
    out.write("metrics.json", metrics_to_json(label, rep) + "\n");
    {
        std::ostringstream csv;
        write_metrics_csv_header(csv);
        write_metrics_csv_row(csv, label, rep);
        out.write("metrics.csv", csv.str());
    }
    json cfg = {{"command", "metrics"},
                {"source", src.to_json()},
                {"assignment", assignment_path},
                {"algorithm", algo_label}};
    if (p)
        cfg["p"] = p;
    if (alpha && beta) {
        cfg["alpha"] = *alpha;
        cfg["beta"] = *beta;
    }
    out.write("config.json", cfg.dump(2) + "\n");
    return 0;
}

int cmd_simulate(const GraphSource& src, const PartitionOpts& opts,
                 const std::string& prog_name, std::int64_t source_original, int iters,
                 double damping, bool verify, bool parallel, const OutputDir& out)
{
    const Graph g = src.load();
    const PartitionAssignment a = opts.partition(g, opts.algo);

    VertexProgram prog;
    if (prog_name == "cc") {
        prog.algo = Algo::cc;
    } else if (prog_name == "sssp") {
        prog.algo = Algo::sssp;
        if (source_original < 0)
            throw validation_error("sssp needs --source");
        prog.sssp_source = resolve_original_id(g, static_cast<std::uint64_t>(source_original));
    } else if (prog_name == "pr") {
        prog.algo = Algo::pr;
        prog.pr_iterations = iters;
        prog.pr_damping = damping;
    } else {
        throw validation_error("unknown program: " + prog_name);
    }

    const SimOutput sim =
        run(g, a, prog, parallel ? Schedule::parallel : Schedule::sequential);

    out.prepare();
    {
        std::ostringstream csv;
        csv << "superstep,worker,messages_sent,compute_units\n";
        for (std::size_t k = 0; k < sim.trace.supersteps(); ++k)
            for (bid_t i = 0; i < sim.trace.p; ++i)
                csv << k << ',' << i << ',' << sim.trace.messages_sent[i][k] << ','
                    << sim.trace.compute_units[i][k] << '\n';
        out.write("trace.csv", csv.str());
    }
    {
        std::ostringstream body;
        for (vid_t v = 0; v < g.num_vertices(); ++v) {
            if (!sim.result.covered[v])
                continue;
            body << g.original_id(v) << ' ';
            if (prog.algo == Algo::pr)
                body << fmt17(sim.result.dvals[v]);
            else if (prog.algo == Algo::sssp && sim.result.ivals[v] == kUnreachable)
                body << "inf";
            else if (prog.algo == Algo::cc)
                body << g.original_id(static_cast<vid_t>(sim.result.ivals[v]));
            else
                body << sim.result.ivals[v];
            body << '\n';
        }
        out.write("results.txt", body.str());
    }

    const TraceSummary stats = trace_stats(sim.trace);
    json summary = {{"program", prog_name},
                    {"supersteps", stats.supersteps},
                    {"total_messages", stats.total_messages},
                    {"total_compute_units", stats.total_compute},
                    {"max_mean_ratio", stats.max_mean_ratio},
                    {"sync_imbalance", stats.sync_imbalance},
                    {"graph", graph_stats(g)},
                    {"p", a.p}};

    bool verified = true;
    if (verify) {
        if (prog.algo == Algo::cc) {
            const auto oracle = reference_cc(g);
            for (vid_t v = 0; v < g.num_vertices(); ++v)
                if (sim.result.covered[v] && oracle[v] != sim.result.ivals[v])
                    verified = false;
        } else if (prog.algo == Algo::sssp) {
            const auto oracle = reference_sssp(g, prog.sssp_source);
            for (vid_t v = 0; v < g.num_vertices(); ++v)
                if (sim.result.covered[v] && oracle[v] != sim.result.ivals[v])
                    verified = false;
        } else {
            const auto oracle = reference_pagerank(g, prog.pr_iterations, prog.pr_damping);
            for (vid_t v = 0; v < g.num_vertices(); ++v)
                if (sim.result.covered[v] &&
                    std::abs(oracle[v] - sim.result.dvals[v]) > 1e-9)
                    verified = false;
        }
        summary["verified"] = verified;
    }
    out.write("summary.json", summary.dump(2) + "\n");

    json cfg = {{"command", "simulate"},
                {"source", src.to_json()},
                {"partition", opts.to_json()},
                {"program", prog_name},
                {"parallel", parallel},
                {"verify", verify}};
    if (prog.algo == Algo::sssp)
        cfg["sssp_source"] = source_original;
    if (prog.algo == Algo::pr) {
        cfg["iterations"] = iters;
        cfg["damping"] = damping;
    }
    out.write("config.json", cfg.dump(2) + "\n");

    if (verify && !verified) {
        std::cerr << "verification FAILED: simulator disagrees with sequential reference\n";
        return 1;
    }
    return 0;
}

int cmd_compare(const GraphSource& src, const PartitionOpts& opts,
                const std::vector<std::string>& algos, const OutputDir& out)
{
    const Graph g = src.load();
    out.prepare();
    std::ostringstream csv;
    write_metrics_csv_header(csv);
    json rows = json::array();
    for (const std::string& name : algos) {
        const PartitionAssignment a = opts.partition(g, name);
        MetricsReport rep = compute_metrics(g, a);
        if (name == "ebv")
            attach_theorem_bounds(rep, g.num_edges(), g.num_vertices(), opts.alpha,
                                  opts.beta);
        write_metrics_csv_row(csv, opts.label(name), rep);
        rows.push_back(json::parse(metrics_to_json(opts.label(name), rep)));
    }
    out.write("compare.csv", csv.str());
    json cfg = {{"command", "compare"},
                {"source", src.to_json()},
                {"p", opts.p},
                {"alpha", opts.alpha},
                {"beta", opts.beta},
                {"sort", opts.sort},
                {"seed", opts.seed},
                {"algorithms", algos}};
    out.write("compare.json", rows.dump(2) + "\n");
    out.write("config.json", cfg.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"vertex-cut graph partitioning toolkit"};
    app.require_subcommand(1);

    GraphSource src;
    PartitionOpts popts;
    std::string out_path = "vcpart-out";

    auto* gen = app.add_subcommand("generate", "write a synthetic power-law graph");
    src.add_options(gen);
    gen->add_option("--out,-o", out_path, "output directory");

    auto* part = app.add_subcommand("partition", "partition a graph");
    src.add_options(part, true);
    popts.add_options(part);
    part->add_option("--out,-o", out_path, "output directory");

    auto* met = app.add_subcommand("metrics", "score an existing assignment");
    src.add_options(met, true);
    std::string assignment_path;
    bid_t met_p = 0;
    std::string algo_label = "external";
    double met_alpha = 0.0, met_beta = 0.0;
    met->add_option("--assignment", assignment_path, "assignment file")->required();
    met->add_option("--p", met_p, "number of subgraphs (default: max part + 1)");
    met->add_option("--algo-label", algo_label, "algorithm name for the report");
    met->add_option("--alpha", met_alpha, "attach greedy bounds for this alpha");
    met->add_option("--beta", met_beta, "attach greedy bounds for this beta");
    met->add_option("--out,-o", out_path, "output directory");

    auto* sim = app.add_subcommand("simulate", "partition and run a BSP program");
    src.add_options(sim, true);
    popts.add_options(sim);
    std::string prog_name = "cc";
    std::int64_t source_original = -1;
    int iters = 20;
    double damping = 0.85;
    bool verify = false, parallel = false;
    sim->add_option("--prog", prog_name, "cc|sssp|pr")
        ->check(CLI::IsMember({"cc", "sssp", "pr"}));
    sim->add_option("--source", source_original, "sssp source (original vertex id)");
    sim->add_option("--iters", iters, "pr iterations");
    sim->add_option("--damping", damping, "pr damping factor");
    sim->add_flag("--verify", verify, "check results against sequential reference");
    sim->add_flag("--parallel", parallel, "run workers concurrently");
    sim->add_option("--out,-o", out_path, "output directory");

    auto* cmp = app.add_subcommand("compare", "metrics matrix across algorithms");
    src.add_options(cmp, true);
    popts.add_options(cmp, /*with_algo=*/false);
    std::vector<std::string> algos = {"ebv", "dbh", "cvc", "random"};
    cmp->add_option("--algos", algos, "algorithms to compare")->delimiter(',');
    cmp->add_option("--out,-o", out_path, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        popts.seed = src.seed;
        const OutputDir out{out_path};
        if (gen->parsed())
            return cmd_generate(src, out);
        if (part->parsed())
            return cmd_partition(src, popts, out);
        if (met->parsed()) {
            std::optional<double> a, b;
            if (met->count("--alpha"))
                a = met_alpha;
            if (met->count("--beta"))
                b = met_beta;
            return cmd_metrics(src, assignment_path, met_p, algo_label, a, b, out);
        }
        if (sim->parsed())
            return cmd_simulate(src, popts, prog_name, source_original, iters, damping,
                                verify, parallel, out);
        if (cmp->parsed())
            return cmd_compare(src, popts, algos, out);
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
