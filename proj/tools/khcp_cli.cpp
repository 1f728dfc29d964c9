// Command line front end: solve, generate, convert, verify, bench.
// Exit codes: 0 success, 1 bad input or arguments, 2 budget or search failure.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "khcp/exact.hpp"
#include "khcp/generators.hpp"
#include "khcp/graph.hpp"
#include "khcp/heuristic.hpp"
#include "khcp/io.hpp"
#include "khcp/reductions.hpp"
#include "khcp/trees.hpp"
#include "khcp/walk.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

khcp::Graph parse_graph(const std::string& bytes, const std::string& format) {
    std::istringstream in(bytes);
    return format == "tsplib" ? khcp::parse_tsplib_hcp(in) : khcp::parse_edge_list(in);
}

std::vector<khcp::Vertex> parse_vertex_list(const std::string& s) {
    std::vector<khcp::Vertex> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = item.find_last_not_of(" \t\r");
        size_t used = 0;
        int v = std::stoi(item.substr(a, b - a + 1), &used);
        if (used != b - a + 1)
            throw std::invalid_argument("bad vertex id in list: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::string join_vertices(const std::vector<khcp::Vertex>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(vs[i]);
    }
    return s;
}

struct WalkFile {
    std::vector<khcp::Vertex> vertices;
    std::optional<std::vector<khcp::Vertex>> unbounded;
};

// One vertex id per line; '#' lines are comments, and a comment containing
// "unbounded:" carries the claimed unbounded set as a comma list.
WalkFile parse_walk_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    WalkFile wf;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        std::string body = line.substr(a, b - a + 1);
        if (body[0] == '#') {
            size_t pos = body.find("unbounded:");
            if (pos != std::string::npos)
                wf.unbounded = parse_vertex_list(body.substr(pos + 10));
            continue;
        }
        try {
            size_t used = 0;
            int v = std::stoi(body, &used);
            if (used != body.size()) throw std::invalid_argument(body);
            wf.vertices.push_back(v);
        } catch (const std::exception&) {
            throw khcp::ParseError("expected a vertex id, got '" + body + "'", lineno);
        }
    }
    if (wf.vertices.empty()) throw khcp::ParseError("walk file contains no vertices", lineno);
    return wf;
}

void emit_walk_file(std::ostream& out, const khcp::Walk& walk,
                    const std::vector<khcp::Vertex>& ub, const std::string& info) {
    out << "# unbounded: " << join_vertices(ub) << "\n";
    if (!info.empty()) out << "# " << info << "\n";
    for (khcp::Vertex v : walk.vertices) out << v << "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct SolveArgs {
    std::string input;
    std::string algo = "exact";
    std::string format = "edgelist";
    double budget = 0;
    bool json_out = false;
};

int cmd_solve(const SolveArgs& a, const std::string& echo) {
    std::string bytes = read_file(a.input);
    khcp::Graph g = parse_graph(bytes, a.format);

    khcp::Walk walk;
    std::vector<khcp::Vertex> ub;
    json counters = json::object();
    const char* kfield = "k";
    int kval = 0;
    khcp::WalkKind kind = khcp::WalkKind::cycle;

    auto t0 = std::chrono::steady_clock::now();
    if (a.algo == "exact") {
        khcp::ExactOptions opt;
        if (a.budget > 0) opt.time_budget = std::chrono::duration<double>(a.budget);
        auto r = khcp::solve_exact(g, opt);
        walk = std::move(r.walk);
        ub = r.unbounded.members();
        kval = r.m;
        kfield = "m";
        counters["subsets_tried"] = r.subsets_tried;
    } else if (a.algo == "heuristic" || a.algo == "fast") {
        if (a.budget > 0)
            std::cerr << "note: --budget only applies to --algo exact\n";
        auto r = khcp::solve_heuristic(
            g, a.algo == "fast" ? khcp::HeuristicMode::fast : khcp::HeuristicMode::full);
        walk = std::move(r.walk);
        ub = r.unbounded.members();
        kval = r.k;
        counters["reroute_calls"] = r.counters.reroute_calls;
        counters["bfs_states_expanded"] = r.counters.bfs_states_expanded;
        counters["rotations_applied"] = r.counters.rotations_applied;
    } else {
        auto s = a.algo == "tree-cycle" ? khcp::tree_cycle(g) : khcp::tree_path(g);
        if (a.algo == "tree-path") kind = khcp::WalkKind::path;
        walk = std::move(s.walk);
        ub = s.unbounded.members();
        kval = static_cast<int>(ub.size());
    }
    double wall = ms_since(t0);

    auto report = khcp::verify_walk(g, walk, kind, khcp::UnboundedAssignment(ub));
    if (!report.valid)
        throw std::logic_error("solver returned a walk that does not verify");

    if (a.json_out) {
        json rec{{"schema", 1},
                 {"command", echo},
                 {"input", a.input},
                 {"input_digest", fnv1a_digest(bytes)},
                 {"algo", a.algo},
                 {"seed", nullptr},
                 {"n", g.vertex_count()},
                 {"edges", g.edge_count()},
                 {"result",
                  {{kfield, kval},
                   {"kind", kind == khcp::WalkKind::cycle ? "cycle" : "path"},
                   {"walk_length", walk.length()},
                   {"unbounded", ub},
                   {"walk", walk.vertices}}},
                 {"counters", counters},
                 {"wall_ms", wall},
                 {"valid", true}};
        std::cout << rec.dump(2) << "\n";
    } else {
        std::ostringstream info;
        info << "algo=" << a.algo << " " << kfield << "=" << kval
             << " walk_length=" << walk.length() << " wall_ms=" << wall;
        emit_walk_file(std::cout, walk, ub, info.str());
    }
    return 0;
}

struct GenerateArgs {
    std::string kind;
    int n = 0;
    int k = -1;
    double avg = 0;
    std::uint64_t seed = 0;
    std::string output;
};

int cmd_generate(const GenerateArgs& a) {
    khcp::Graph g;
    if (a.kind == "random") {
        if (a.avg <= 0) throw std::invalid_argument("--kind random requires --avg > 0");
        g = khcp::gen_random_connected(a.n, a.avg, a.seed);
    } else if (a.kind == "tree") {
        g = khcp::gen_random_tree(a.n, a.seed);
    } else {
        if (a.k < 0) throw std::invalid_argument("--kind petersen requires --k");
        g = khcp::gen_generalized_petersen(a.n, a.k);
    }
    std::string text = khcp::emit_edge_list(g);
    if (a.output.empty())
        std::cout << text;
    else
        write_text_file(a.output, text);
    return 0;
}

struct ConvertArgs {
    std::string input;
    std::string to;
    std::string format = "edgelist";
    std::string ub;
    std::string output;
};

int cmd_convert(const ConvertArgs& a) {
    std::string bytes = read_file(a.input);
    khcp::Graph g = parse_graph(bytes, a.format);
    std::vector<khcp::Vertex> ubvec = parse_vertex_list(a.ub);

    json sidecar{{"schema", 1},
                 {"construction", a.to},
                 {"input", a.input},
                 {"input_digest", fnv1a_digest(bytes)},
                 {"original_n", g.vertex_count()}};
    std::string artifact;
    if (a.to == "hcp") {
        auto inst = khcp::to_hcp_instance(g, khcp::UnboundedAssignment(ubvec));
        artifact = khcp::emit_edge_list(inst.graph);
        sidecar["unbounded"] = ubvec;
        sidecar["node_count"] = inst.graph.vertex_count();
        sidecar["origin"] = inst.origin;
        sidecar["members"] = inst.members;
    } else {
        if (!ubvec.empty())
            throw std::invalid_argument("--ub only applies to --to hcp");
        auto inst = khcp::to_atsp_instance(g);
        std::string name = a.output;
        size_t slash = name.find_last_of('/');
        if (slash != std::string::npos) name = name.substr(slash + 1);
        size_t dot = name.find_last_of('.');
        if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
        artifact = khcp::emit_tsplib_atsp(inst, name);
        sidecar["node_count"] = inst.node_count;
        sidecar["sentinel"] = inst.sentinel;
        json nodes = json::array();
        for (khcp::Vertex v = 0; v < g.vertex_count(); ++v) {
            json ja = json::array(), jb = json::array(), jc = json::array();
            for (int i = 1; i <= g.vertex_count(); ++i) {
                ja.push_back(inst.a_node(v, i));
                jb.push_back(inst.b_node(v, i));
                jc.push_back(inst.c_node(v, i));
            }
            nodes.push_back({{"vertex", v}, {"a", ja}, {"b", jb}, {"c", jc}});
        }
        sidecar["nodes"] = nodes;
    }
    write_text_file(a.output, artifact);
    write_text_file(a.output + ".json", sidecar.dump(2) + "\n");
    return 0;
}

struct VerifyArgs {
    std::string graph;
    std::string walk;
    std::string kind = "cycle";
    std::string format = "edgelist";
    std::string ub;
    bool ub_given = false;
};

int cmd_verify(const VerifyArgs& a) {
    std::string bytes = read_file(a.graph);
    khcp::Graph g = parse_graph(bytes, a.format);
    WalkFile wf = parse_walk_file(a.walk);

    std::optional<khcp::UnboundedAssignment> claimed;
    if (a.ub_given)
        claimed = khcp::UnboundedAssignment(parse_vertex_list(a.ub));
    else if (wf.unbounded)
        claimed = khcp::UnboundedAssignment(*wf.unbounded);

    auto kind = a.kind == "path" ? khcp::WalkKind::path : khcp::WalkKind::cycle;
    auto report = khcp::verify_walk(g, khcp::Walk{wf.vertices}, kind, claimed);

    json out{{"schema", 1},
             {"command", "verify"},
             {"valid", report.valid},
             {"kind", a.kind},
             {"k", report.k},
             {"repeated", report.repeated},
             {"claimed", claimed ? json(claimed->members()) : json(nullptr)},
             {"failure", report.failure ? json(khcp::to_string(*report.failure)) : json(nullptr)}};
    std::cout << out.dump(2) << "\n";
    return report.valid ? 0 : 1;
}

struct BenchArgs {
    int n = 0;
    std::vector<double> avgs;
    int trials = 100;
    std::uint64_t seed = 1;
    std::vector<std::string> algos{"heuristic", "fast"};
    int threads = 0;
    bool json_out = false;
};

int cmd_bench(const BenchArgs& a, const std::string& echo) {
    for (const auto& algo : a.algos)
        if (algo != "exact" && algo != "heuristic" && algo != "fast")
            throw std::invalid_argument("unknown bench algo: " + algo);
    if (a.trials < 1) throw std::invalid_argument("--trials must be at least 1");
    const size_t na = a.algos.size();
    int exact_idx = -1;
    for (size_t i = 0; i < na; ++i)
        if (a.algos[i] == "exact") exact_idx = static_cast<int>(i);

    unsigned workers = a.threads > 0 ? static_cast<unsigned>(a.threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(a.trials));

    json rows = json::array();
    if (!a.json_out)
        std::printf("n=%d trials=%d seed=%llu\n%-10s %-10s %14s %14s %12s %14s\n", a.n,
                    a.trials, static_cast<unsigned long long>(a.seed), "avg_degree", "algo",
                    "mean_unbound", "mean_walk_len", "mean_ms", "gap_vs_exact");

    for (double avg : a.avgs) {
        // Per-trial slots are written by index, so scheduling order cannot
        // change the aggregate.
        std::vector<std::vector<double>> kvals(na, std::vector<double>(a.trials));
        std::vector<std::vector<double>> lens(na, std::vector<double>(a.trials));
        std::vector<std::vector<double>> times(na, std::vector<double>(a.trials));
        std::vector<std::exception_ptr> errors(workers);

        auto work = [&](unsigned w) {
            try {
                for (int t = static_cast<int>(w); t < a.trials; t += static_cast<int>(workers)) {
                    khcp::Graph g = khcp::gen_random_connected(a.n, avg, a.seed + t);
                    for (size_t i = 0; i < na; ++i) {
                        auto t0 = std::chrono::steady_clock::now();
                        if (a.algos[i] == "exact") {
                            auto r = khcp::solve_exact(g);
                            kvals[i][t] = r.m;
                            lens[i][t] = static_cast<double>(r.walk.length());
                        } else {
                            auto r = khcp::solve_heuristic(g, a.algos[i] == "fast"
                                                                  ? khcp::HeuristicMode::fast
                                                                  : khcp::HeuristicMode::full);
                            kvals[i][t] = r.k;
                            lens[i][t] = static_cast<double>(r.walk.length());
                        }
                        times[i][t] = ms_since(t0);
                    }
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
            for (auto& th : pool) th.join();
        }
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);

        json stats = json::object();
        for (size_t i = 0; i < na; ++i) {
            double ks = 0, ls = 0, ts = 0, gap = 0;
            for (int t = 0; t < a.trials; ++t) {
                ks += kvals[i][t];
                ls += lens[i][t];
                ts += times[i][t];
                if (exact_idx >= 0) gap += kvals[i][t] - kvals[exact_idx][t];
            }
            json entry{{"mean_unbounded", ks / a.trials},
                       {"mean_walk_length", ls / a.trials},
                       {"mean_wall_ms", ts / a.trials}};
            if (exact_idx >= 0 && static_cast<int>(i) != exact_idx)
                entry["mean_gap_vs_exact"] = gap / a.trials;
            stats[a.algos[i]] = entry;
            if (!a.json_out) {
                if (exact_idx >= 0 && static_cast<int>(i) != exact_idx)
                    std::printf("%-10.2f %-10s %14.4f %14.3f %12.3f %14.4f\n", avg,
                                a.algos[i].c_str(), ks / a.trials, ls / a.trials,
                                ts / a.trials, gap / a.trials);
                else
                    std::printf("%-10.2f %-10s %14.4f %14.3f %12.3f %14s\n", avg,
                                a.algos[i].c_str(), ks / a.trials, ls / a.trials,
                                ts / a.trials, "-");
            }
        }
        rows.push_back({{"avg_degree", avg}, {"trials", a.trials}, {"stats", stats}});
    }

    if (a.json_out) {
        json rec{{"schema", 1}, {"command", echo},       {"n", a.n},
                 {"seed", a.seed}, {"algos", a.algos},   {"rows", rows}};
        std::cout << rec.dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-unbounded Hamiltonian cycle toolkit"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "solve one instance and print the walk");
    solve->add_option("input", sa.input, "graph file")->required();
    solve->add_option("--algo", sa.algo, "exact|heuristic|fast|tree-cycle|tree-path")
        ->check(CLI::IsMember({"exact", "heuristic", "fast", "tree-cycle", "tree-path"}));
    solve->add_option("--format", sa.format, "edgelist|tsplib")
        ->check(CLI::IsMember({"edgelist", "tsplib"}));
    solve->add_option("--budget", sa.budget, "wall clock budget in seconds (exact)");
    solve->add_flag("--json", sa.json_out, "emit a run record as JSON");

    GenerateArgs ga;
    auto* generate = app.add_subcommand("generate", "emit a graph as an edge list");
    generate->add_option("--kind", ga.kind, "random|petersen|tree")
        ->required()
        ->check(CLI::IsMember({"random", "petersen", "tree"}));
    generate->add_option("--n", ga.n, "vertex count (outer cycle length for petersen)")
        ->required();
    generate->add_option("--k", ga.k, "petersen skip length");
    generate->add_option("--avg", ga.avg, "average degree for --kind random");
    generate->add_option("--seed", ga.seed, "random seed");
    generate->add_option("-o,--output", ga.output, "output file (default stdout)");

    ConvertArgs ca;
    auto* convert = app.add_subcommand("convert", "emit a reduction instance plus sidecar");
    convert->add_option("input", ca.input, "graph file")->required();
    convert->add_option("--to", ca.to, "hcp|atsp")
        ->required()
        ->check(CLI::IsMember({"hcp", "atsp"}));
    convert->add_option("--format", ca.format, "edgelist|tsplib")
        ->check(CLI::IsMember({"edgelist", "tsplib"}));
    convert->add_option("--ub", ca.ub, "unbounded vertices as a comma list (hcp)");
    convert->add_option("-o,--output", ca.output, "output file; sidecar goes to <output>.json")
        ->required();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check a walk file against a graph");
    verify->add_option("graph", va.graph, "graph file")->required();
    verify->add_option("walk", va.walk, "walk file, one vertex per line")->required();
    verify->add_option("--kind", va.kind, "cycle|path")
        ->check(CLI::IsMember({"cycle", "path"}));
    verify->add_option("--format", va.format, "edgelist|tsplib")
        ->check(CLI::IsMember({"edgelist", "tsplib"}));
    auto* ubopt = verify->add_option("--ub", va.ub,
                                     "claimed unbounded set (overrides the walk header)");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "seeded random graph sweep");
    bench->add_option("--n", ba.n, "vertex count")->required();
    bench->add_option("--avg", ba.avgs, "average degrees, comma separated")
        ->required()
        ->delimiter(',');
    bench->add_option("--trials", ba.trials, "trials per degree");
    bench->add_option("--seed", ba.seed, "base seed; trial t uses seed+t");
    bench->add_option("--algos", ba.algos, "subset of exact,heuristic,fast")->delimiter(',');
    bench->add_option("--threads", ba.threads, "worker threads (default: hardware)");
    bench->add_flag("--json", ba.json_out, "emit rows as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    std::string echo;
    for (int i = 0; i < argc; ++i) {
        if (i) echo += ' ';
        echo += argv[i];
    }

    try {
        if (solve->parsed()) return cmd_solve(sa, echo);
        if (generate->parsed()) return cmd_generate(ga);
        if (convert->parsed()) return cmd_convert(ca);
        if (verify->parsed()) {
            va.ub_given = ubopt->count() > 0;
            return cmd_verify(va);
        }
        if (bench->parsed()) return cmd_bench(ba, echo);
    } catch (const khcp::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << " (subsets tried: " << e.subsets_tried()
                  << ")\n";
        return 2;
    } catch (const khcp::SearchStuckError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const khcp::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
