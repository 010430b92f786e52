#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>
#include <json.hpp>

#include "p3vc/p3vc.hpp"

namespace p3vc::cli {

namespace {

using nlohmann::json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

graph read_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw usage_error("cannot read " + path);
    try {
        return parse_dimacs(in);
    } catch (const parse_error& e) {
        throw usage_error(path + ": " + e.what());
    }
}

json one_indexed(const vertex_set& s)
{
    json a = json::array();
    for (vertex v : s)
        a.push_back(v + 1);
    return a;
}

// whitespace separated 1-indexed ids, or a JSON document with a "cover" array
vertex_set read_cover(const std::string& path, int n)
{
    std::ifstream in(path);
    if (!in)
        throw usage_error("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::vector<long long> ids;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json doc;
        try {
            doc = json::parse(text);
            for (const auto& x : doc.at("cover"))
                ids.push_back(x.get<long long>());
        } catch (const json::exception& e) {
            throw usage_error(path + ": " + e.what());
        }
    } else {
        std::istringstream s(text);
        std::string tok;
        while (s >> tok) {
            try {
                std::size_t used = 0;
                ids.push_back(std::stoll(tok, &used));
                if (used != tok.size())
                    throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw usage_error(path + ": bad vertex id '" + tok + "'");
            }
        }
    }
    std::vector<vertex> out;
    for (long long id : ids) {
        if (id < 1 || id > n)
            throw usage_error(path + ": vertex " + std::to_string(id) + " out of range 1.." + std::to_string(n));
        out.push_back(static_cast<vertex>(id - 1));
    }
    return make_set(std::move(out));
}

json stats_json(const solve_stats& s)
{
    json per = json::object();
    for (auto [r, c] : s.nodes_per_rule)
        per[std::string(rule_name(r))] = c;
    return {{"nodes", s.nodes_total}, {"per_rule", per}, {"max_depth", s.max_depth}};
}

struct solve_args {
    int k = 0;
    bool stats = false;
    bool literal9 = false;
    std::string file;
};

int do_solve(const solve_args& a, std::ostream& out)
{
    graph g = read_graph(a.file);
    auto r = solve(g, a.k, {a.literal9});
    json doc{{"answer", r.yes ? "yes" : "no"}, {"k", a.k}};
    if (r.yes)
        doc["cover"] = one_indexed(*r.cover);
    if (a.stats)
        doc["stats"] = stats_json(r.stats);
    out << doc.dump() << '\n';
    return r.yes ? exit_yes : exit_no;
}

struct kernelize_args {
    int k = 0;
    std::string mode = "crucial";
    std::string file;
    std::string emit;
};

int do_kernelize(const kernelize_args& a, std::ostream& out)
{
    graph g = read_graph(a.file);
    auto mode = a.mode == "simple" ? kernel_mode::simple : kernel_mode::crucial;
    auto r = kernelize(g, a.k, mode);
    std::string answer = r.decided_no() ? "no" : r.decided_yes() ? "yes" : "unknown";
    json doc{{"answer", answer}, {"k", a.k}};
    if (answer == "yes")
        doc["cover"] = one_indexed(r.forced_cover);
    json kernel{{"n", r.reduced.vertex_count()},
                {"m", r.reduced.edge_count()},
                {"k", r.reduced_k},
                {"mode", kernel_mode_name(r.mode)},
                {"bound", r.bound()},
                {"fallback", r.fallback},
                {"forced", one_indexed(r.forced_cover)}};
    std::vector<vertex> kept(r.to_original.begin(), r.to_original.end());
    kernel["vertices"] = one_indexed(kept);
    if (r.audit)
        kernel["audit"] = r.audit->ok() ? "pass" : "fail";
    json trace = json::array();
    for (const auto& e : r.trace)
        trace.push_back({{"rule", e.rule}, {"n", e.n_after}, {"k", e.k_after}});
    kernel["trace"] = trace;
    doc["kernel"] = kernel;
    if (!a.emit.empty()) {
        std::ofstream f(a.emit);
        if (!f)
            throw usage_error("cannot write " + a.emit);
        f << to_dimacs(r.reduced);
    }
    out << doc.dump() << '\n';
    return answer == "no" ? exit_no : exit_yes;
}

struct verify_args {
    std::string cover_file;
    bool oracle = false;
    int max_n = 20;
    std::string file;
};

int do_verify(const verify_args& a, std::ostream& out)
{
    graph g = read_graph(a.file);
    if (a.oracle) {
        if (g.vertex_count() > a.max_n)
            throw usage_error("oracle is capped at " + std::to_string(a.max_n) + " vertices, graph has " +
                              std::to_string(g.vertex_count()));
        auto r = min_p3vc_oracle(g, a.max_n);
        out << json{{"answer", "yes"}, {"k", r.size}, {"cover", one_indexed(r.cover)}}.dump() << '\n';
        return exit_yes;
    }
    vertex_set cover = read_cover(a.cover_file, g.vertex_count());
    bool ok = verify_cover(g, cover);
    json doc{{"valid", ok}, {"size", cover.size()}, {"cover", one_indexed(cover)}};
    if (!ok) {
        live_graph rest(g);
        rest.erase(cover);
        if (auto p = find_p3(rest))
            doc["uncovered"] = {p->first + 1, p->middle + 1, p->last + 1};
    }
    out << doc.dump() << '\n';
    return ok ? exit_yes : exit_no;
}

struct gen_args {
    std::string model = "gnp";
    int n = 0;
    double p = 0;
    std::uint64_t seed = 0;
};

int do_gen(const gen_args& a, std::ostream& out)
{
    out << "c gnp n=" << a.n << " p=" << a.p << " seed=" << a.seed << '\n';
    out << to_dimacs(gen_random_graph(a.n, a.p, a.seed));
    return exit_yes;
}

struct bench_args {
    int kmax = 10;
    int trials = 5;
    std::uint64_t seed = 1;
    double degree = 2.5;
    int threads = 1;
};

struct bench_row {
    std::uint64_t seed = 0;
    int n = 0;
    double p = 0;
    int k = 0;
    bool yes = false;
    long long nodes = 0;
    int kernel_n = 0;
};

bench_row bench_one(int k, std::uint64_t seed, double degree)
{
    bench_row row;
    row.seed = seed;
    row.k = k;
    row.n = 7 * k / 2;
    row.p = row.n > 1 ? std::min(1.0, degree / (row.n - 1)) : 0.0;
    graph g = gen_random_graph(row.n, row.p, seed);
    auto s = solve(g, k);
    row.yes = s.yes;
    row.nodes = s.stats.nodes_total;
    auto r = kernelize(g, k, kernel_mode::crucial);
    row.kernel_n = r.decided_no() ? 0 : r.reduced.vertex_count();
    if (!r.decided_no() && solve(r.reduced, r.reduced_k).yes != s.yes)
        throw internal_error("kernel and direct search disagree on seed " + std::to_string(seed));
    return row;
}

int do_bench(const bench_args& a, std::ostream& out)
{
    std::vector<std::pair<int, std::uint64_t>> jobs;
    for (int k = 1; k <= a.kmax; ++k)
        for (int t = 0; t < a.trials; ++t)
            jobs.emplace_back(k, a.seed + static_cast<std::uint64_t>(k) * 100003u + static_cast<std::uint64_t>(t));
    std::vector<bench_row> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < jobs.size();)
            rows[i] = bench_one(jobs[i].first, jobs[i].second, a.degree);
    };
    std::vector<std::future<void>> pool;
    for (int t = 0; t < std::max(1, a.threads); ++t)
        pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool)
        f.get();
    out << "seed,n,p,k,answer,nodes,kernel_n,ratio_kernel_n_over_k\n";
    for (const auto& r : rows) {
        std::ostringstream line;
        line << r.seed << ',' << r.n << ',' << r.p << ',' << r.k << ',' << (r.yes ? "yes" : "no") << ',' << r.nodes
             << ',' << r.kernel_n << ',' << static_cast<double>(r.kernel_n) / r.k;
        out << line.str() << '\n';
    }
    return exit_yes;
}

int do_factors(std::ostream& out)
{
    json rows = json::array();
    for (const auto& row : factor_table()) {
        std::vector<int> c(row.branches.decrements().begin(), row.branches.decrements().end());
        double f = branching_factor(row.branches);
        rows.push_back({{"step", row.step},
                        {"branches", c},
                        {"factor", f},
                        {"factor_4dp", std::ceil(f * 1e4) / 1e4},  // rounded up, as quoted
                        {"quoted", row.quoted}});
    }
    out << json{{"factors", rows}}.dump(2) << '\n';
    return exit_yes;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"3-path vertex cover: exact search and kernels", "p3vc"};
    app.require_subcommand(1);

    solve_args sa;
    auto* solve_cmd = app.add_subcommand("solve", "decide whether a cover of size <= k exists");
    solve_cmd->add_option("-k", sa.k, "budget")->required()->check(CLI::NonNegativeNumber);
    solve_cmd->add_flag("--stats", sa.stats, "report search-tree statistics");
    solve_cmd->add_flag("--paper-literal-step9", sa.literal9, "take the degree-2 side in the (2,3)-bipartite case");
    solve_cmd->add_option("FILE", sa.file, "DIMACS graph")->required();

    kernelize_args ka;
    auto* kernel_cmd = app.add_subcommand("kernelize", "shrink an instance to a kernel");
    kernel_cmd->add_option("--mode", ka.mode, "simple or crucial")->check(CLI::IsMember({"simple", "crucial"}));
    kernel_cmd->add_option("-k", ka.k, "budget")->required()->check(CLI::NonNegativeNumber);
    kernel_cmd->add_option("--emit", ka.emit, "write the reduced graph as DIMACS");
    kernel_cmd->add_option("FILE", ka.file, "DIMACS graph")->required();

    verify_args va;
    auto* verify_cmd = app.add_subcommand("verify", "check a cover, or compute the optimum by exhaustive search");
    auto* cover_opt = verify_cmd->add_option("--cover", va.cover_file, "cover file: 1-indexed ids or solve output");
    auto* oracle_opt = verify_cmd->add_flag("--oracle", va.oracle, "exact optimum for small graphs");
    verify_cmd->add_option("--max-n", va.max_n, "vertex cap for --oracle")->check(CLI::Range(1, 32));
    verify_cmd->add_option("FILE", va.file, "DIMACS graph")->required();
    cover_opt->excludes(oracle_opt);

    gen_args ga;
    auto* gen_cmd = app.add_subcommand("gen", "random graph as DIMACS");
    gen_cmd->add_option("--model", ga.model, "random model")->check(CLI::IsMember({"gnp"}));
    gen_cmd->add_option("--n", ga.n, "vertices")->required()->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--p", ga.p, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", ga.seed, "generator seed")->required();

    bench_args ba;
    auto* bench_cmd = app.add_subcommand("bench", "CSV of search nodes and kernel sizes against k");
    bench_cmd->add_option("--kmax", ba.kmax, "largest k")->required()->check(CLI::PositiveNumber);
    bench_cmd->add_option("--trials", ba.trials, "instances per k")->required()->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", ba.seed, "base seed");
    bench_cmd->add_option("--degree", ba.degree, "expected average degree")->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--threads", ba.threads, "worker threads")->check(CLI::Range(1, 256));

    app.add_subcommand("factors", "branching factors of the search steps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*solve_cmd)
            return do_solve(sa, out);
        if (*kernel_cmd)
            return do_kernelize(ka, out);
        if (*verify_cmd) {
            if (!va.oracle && va.cover_file.empty())
                throw usage_error("verify needs --cover FILE or --oracle");
            return do_verify(va, out);
        }
        if (*gen_cmd)
            return do_gen(ga, out);
        if (*bench_cmd)
            return do_bench(ba, out);
        return do_factors(out);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace p3vc::cli
