#include <turan3/reports.hpp>
#include <turan3/turan3.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace turan3;

namespace {

enum ExitCode { exit_ok = 0, exit_violation = 1, exit_usage = 2, exit_parse = 3 };

/// Malformed user input (graph file, canonical code, walk); maps to exit code 3.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Run {
    std::vector<std::pair<std::string, std::string>> inputs;
    unsigned jobs = 1;
    /// results printed one JSON document per line
    std::vector<Json> results;
    int status = exit_ok;

    std::string read_file(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw InputError("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        inputs.emplace_back(path, fnv1a_hex(ss.str()));
        return ss.str();
    }

    Hypergraph3 load_graph(const std::string& path) {
        const std::string text = read_file(path);
        try {
            return parse_graph(text);
        } catch (const ParseError& e) {
            throw InputError(path + ": " + e.what());
        }
    }

    Hypergraph3 decode(const std::string& code) {
        inputs.emplace_back("canonical:" + code, fnv1a_hex(code));
        try {
            return CanonicalCode::parse(code).graph();
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }

    void emit(const std::string& path, const Hypergraph3& g) {
        if (path.empty()) return;
        std::ofstream out(path);
        if (!out) throw InputError("cannot write '" + path + "'");
        write_graph(out, g);
    }
};

unsigned resolve_jobs(const std::optional<unsigned>& flag) {
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
    if (flag) jobs = *flag;
    if (const char* env = std::getenv("TURAN3_JOBS"); env && *env) {
        try {
            jobs = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("TURAN3_JOBS is not a number: ") + env);
        }
    }
    if (jobs == 0) throw std::invalid_argument("worker count must be positive");
    return jobs;
}

WalkString parse_walk(const std::string& text) {
    try {
        return WalkString::parse(text);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad part size '" + item + "'");
        }
    }
    return out;
}

Json verify_claim(const std::string& claim, const Rational& grid, bool& ok) {
    if (claim == "ratio") {
        Json j = report_json(six_vertex_ratio());
        ok = ok && j["verdict"] == "consistent";
        return j;
    }
    if (claim == "f2poly") {
        const PolyMaximum m = f2_poly_max();
        const RootBracket r = f2_poly_root();
        const bool max_ok = m.certified && m.argmax == 0 && m.value == make_rational(2, 9) - eqmain_threshold();
        const bool root_ok = r.certified && r.bracket.within(make_rational(108, 10000), make_rational(109, 10000));
        ok = ok && max_ok && root_ok;
        return {{"claim", "f2poly"},
                {"max_argmax", rational_json(m.argmax)},
                {"max_value", rational_json(m.value)},
                {"max_certified", m.certified},
                {"root", interval_json(r.bracket)},
                {"root_decimal", {to_double(r.bracket.lo), to_double(r.bracket.hi)}},
                {"root_certified", r.certified},
                {"reference_value", {{"max", "1104/1000000"}, {"root_upper", "109/10000"}}},
                {"verdict", verdict(max_ok && root_ok)}};
    }
    if (claim == "partbounds") {
        Json list = Json::array();
        bool all = true;
        for (const auto& b : part_bounds()) {
            all = all && b.consistent;
            list.push_back(report_json(b));
        }
        ok = ok && all;
        return {{"claim", "partbounds"}, {"bounds", list}, {"verdict", verdict(all)}};
    }
    if (claim == "falsify") {
        Json j = report_json(falsify_region(grid));
        ok = ok && j["verdict"] == "consistent";
        return j;
    }
    if (claim == "duplication") {
        Json j = report_json(duplication_report());
        ok = ok && j["verdict"] == "consistent";
        return j;
    }
    throw std::invalid_argument("unknown claim '" + claim + "'");
}

std::string human_line(const Json& j) {
    std::string name = j.value("claim", j.value("name", std::string("result")));
    return name + ": " + j.value("verdict", std::string("-"));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on small 3-uniform hypergraphs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(turan3::version));

    std::optional<unsigned> jobs_flag;
    std::string manifest_path;
    app.add_option("--jobs", jobs_flag, "worker threads (TURAN3_JOBS overrides)")->check(CLI::PositiveNumber);
    app.add_option("--manifest", manifest_path, "write a run manifest to FILE");

    Run run;
    std::function<void()> action;

    // enumerate / extremal
    int enum_n = 0;
    std::string forbid;
    std::string emit_extremal;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "count F-free 3-graphs up to isomorphism");
    enumerate_cmd->add_option("--n", enum_n, "vertex count")->required()->check(CLI::Range(0, 10));
    enumerate_cmd->add_option("--forbid", forbid, "comma-separated pattern names");
    enumerate_cmd->add_option("--emit-extremal", emit_extremal, "write the extremal graphs to FILE");
    enumerate_cmd->callback([&] {
        action = [&] {
            const auto patterns = parse_pattern_list(forbid);
            EnumerationReport r = enumerate_free(enum_n, patterns, {}, {run.jobs, 3});
            run.results.push_back(report_json(r));
            if (!emit_extremal.empty()) {
                std::ofstream out(emit_extremal);
                if (!out) throw InputError("cannot write '" + emit_extremal + "'");
                for (const auto& c : r.extremal) write_graph(out, c.graph());
            }
            std::cerr << "n=" << enum_n << " total=" << r.total << " max_edges=" << r.max_edges << '\n';
        };
    });

    auto* extremal_cmd = app.add_subcommand("extremal", "maximum edge count of an F-free 3-graph");
    extremal_cmd->add_option("--n", enum_n, "vertex count")->required()->check(CLI::Range(0, 10));
    extremal_cmd->add_option("--forbid", forbid, "comma-separated pattern names");
    extremal_cmd->callback([&] {
        action = [&] {
            const auto patterns = parse_pattern_list(forbid);
            const ExtremalResult r = extremal(enum_n, patterns, {run.jobs, 3});
            run.results.push_back(report_json(enum_n, pattern_names(patterns), r));
        };
    });

    // constructions
    int graph_n = 0;
    int cycle_length = 5;
    std::string emit_path;
    auto* hn_cmd = app.add_subcommand("hn", "explicit iterated blow-up H_n");
    hn_cmd->add_option("--n", graph_n, "vertex count")->required()->check(CLI::Range(0, 16));
    hn_cmd->add_option("--emit", emit_path, "write the graph to FILE");
    hn_cmd->callback([&] {
        action = [&] {
            const Hypergraph3 g = hn_graph(graph_n);
            run.emit(emit_path, g);
            run.results.push_back(graph_json(g));
        };
    });

    long long count_n = 0;
    auto* hn_count_cmd = app.add_subcommand("hn-count", "edge count of H_n by the exact recursion");
    hn_count_cmd->add_option("--n", count_n, "vertex count")->required()->check(CLI::NonNegativeNumber);
    hn_count_cmd->callback([&] {
        action = [&] { run.results.push_back({{"n", count_n}, {"edges", hn_edge_count(count_n).str()}}); };
    });

    long long nmax = 0;
    std::string c_text = "2";
    auto* bound_cmd = app.add_subcommand("bound-check", "check | ||H_n|| - n^3/24 | <= n log3(n)/6 + C n");
    bound_cmd->add_option("--nmax", nmax, "largest n")->required();
    bound_cmd->add_option("--c", c_text, "linear constant, rational");
    bound_cmd->callback([&] {
        action = [&] {
            const BoundCheckResult r = bound_check(nmax, parse_rational(c_text));
            Json j = report_json(r);
            j["nmax"] = nmax;
            j["c"] = rational_json(parse_rational(c_text));
            run.results.push_back(j);
            if (!r.holds) run.status = exit_violation;
        };
    });

    auto* best_cmd = app.add_subcommand("best-known", "best known C_l- -free construction");
    best_cmd->add_option("--n", graph_n, "vertex count")->required()->check(CLI::Range(0, 16));
    best_cmd->add_option("--cycle", cycle_length, "forbidden cycle length l")->check(CLI::Range(4, 16));
    best_cmd->add_option("--emit", emit_path, "write the graph to FILE");
    best_cmd->callback([&] {
        action = [&] {
            const Hypergraph3 g = best_known(graph_n, cycle_length);
            run.emit(emit_path, g);
            Json j = graph_json(g);
            j["cycle"] = cycle_length;
            run.results.push_back(j);
        };
    });

    // graph queries
    std::string host_path, host_code, pattern_arg;
    auto host_options = [&](CLI::App* cmd) {
        auto* file = cmd->add_option("--host", host_path, "host graph file");
        auto* code = cmd->add_option("--read-canonical", host_code, "host given by canonical code");
        file->excludes(code);
    };
    auto load_host = [&] {
        if (!host_code.empty()) return run.decode(host_code);
        if (host_path.empty()) throw CLI::RequiredError("--host or --read-canonical");
        return run.load_graph(host_path);
    };

    auto* contains_cmd = app.add_subcommand("contains", "non-induced containment of a pattern");
    host_options(contains_cmd);
    contains_cmd->add_option("--pattern", pattern_arg, "pattern name or graph file")->required();
    contains_cmd->callback([&] {
        action = [&] {
            const Hypergraph3 host = load_host();
            Hypergraph3 pattern;
            Json name = nullptr;
            try {
                const Pattern p = pattern_by_name(pattern_arg);
                pattern = p.graph;
                name = p.name;
            } catch (const std::invalid_argument&) {
                if (!std::ifstream(pattern_arg)) throw;
                pattern = run.load_graph(pattern_arg);
            }
            const auto witness = find_embedding(host, pattern);
            run.results.push_back({{"pattern", name},
                                   {"contains", witness.has_value()},
                                   {"witness", witness ? Json(*witness) : Json(nullptr)}});
        };
    });

    int density_k = 0;
    auto* density_cmd = app.add_subcommand("density", "induced densities of all k-vertex types");
    host_options(density_cmd);
    density_cmd->add_option("--k", density_k, "type order")->required()->check(CLI::NonNegativeNumber);
    density_cmd->callback([&] {
        action = [&] {
            const Hypergraph3 host = load_host();
            const auto table = density_table(host, density_k);
            for (const auto& e : table) std::cerr << e.type.to_string() << '\t' << to_string(e.density) << '\n';
            run.results.push_back({{"k", density_k}, {"n", host.vertex_count()}, {"types", report_json(table)}});
        };
    });

    std::string sizes_text;
    int balanced_t = 0;
    auto* blowup_cmd = app.add_subcommand("blowup", "blow-up of a graph or named pattern");
    host_options(blowup_cmd);
    blowup_cmd->add_option("--pattern", pattern_arg, "named pattern as the base graph");
    auto* sizes_opt = blowup_cmd->add_option("--sizes", sizes_text, "comma-separated part sizes");
    blowup_cmd->add_option("--t", balanced_t, "balanced part size")->excludes(sizes_opt);
    blowup_cmd->add_option("--emit", emit_path, "write the graph to FILE");
    blowup_cmd->callback([&] {
        action = [&] {
            const Hypergraph3 base = pattern_arg.empty() ? load_host() : pattern_by_name(pattern_arg).graph;
            Hypergraph3 g;
            if (!sizes_text.empty()) g = blowup(base, parse_sizes(sizes_text));
            else if (balanced_t > 0) g = blowup(base, balanced_t);
            else throw CLI::RequiredError("--sizes or --t");
            run.emit(emit_path, g);
            run.results.push_back(graph_json(g));
        };
    });

    std::string walk_text;
    auto* walk_cmd = app.add_subcommand("from-walk", "3-graph of consecutive triples of a walk");
    walk_cmd->add_option("--walk", walk_text, "tokens such as \"1 3 2 4 3^1 1\"")->required();
    walk_cmd->add_option("--emit", emit_path, "write the graph to FILE");
    walk_cmd->callback([&] {
        action = [&] {
            const WalkString w = parse_walk(walk_text);
            Hypergraph3 g;
            try {
                g = from_walk(w);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            run.emit(emit_path, g);
            Json j = graph_json(g);
            j["walk"] = w.to_string();
            run.results.push_back(j);
        };
    });

    // claims
    std::string claim = "all";
    std::string grid_text = "1/200";
    bool deep = false;
    auto* verify_cmd = app.add_subcommand("verify", "run the claim verification suite");
    verify_cmd->add_option("--claim", claim, "ratio, f2poly, partbounds, falsify, duplication or all")
        ->check(CLI::IsMember({"ratio", "f2poly", "partbounds", "falsify", "duplication", "all"}));
    verify_cmd->add_option("--grid", grid_text, "falsification grid step");
    verify_cmd->add_flag("--deep", deep, "also reproduce the n = 8 enumeration counts");
    verify_cmd->callback([&] {
        action = [&] {
            const Rational grid = parse_rational(grid_text);
            bool ok = true;
            const std::vector<std::string> claims =
                claim == "all" ? std::vector<std::string>{"ratio", "f2poly", "partbounds", "falsify", "duplication"}
                               : std::vector<std::string>{claim};
            for (const auto& c : claims) {
                run.results.push_back(verify_claim(c, grid, ok));
                std::cerr << human_line(run.results.back()) << '\n';
            }
            if (deep) {
                struct Count {
                    const char* forbid;
                    std::uint64_t expected;
                };
                for (const Count& c : {Count{"C5-,K4-", 161023}, Count{"C5-", 1528500}}) {
                    const EnumerationReport r = enumerate_free(8, parse_pattern_list(c.forbid), {}, {run.jobs, 3});
                    const bool match = r.total == c.expected;
                    ok = ok && match;
                    run.results.push_back({{"claim", std::string("enumerate:") + c.forbid},
                                           {"computed", r.total},
                                           {"reference_value", c.expected},
                                           {"verdict", verdict(match)}});
                    std::cerr << human_line(run.results.back()) << '\n';
                }
            }
            if (!ok) run.status = exit_violation;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        run.jobs = resolve_jobs(jobs_flag);
        action();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    for (const auto& r : run.results) std::cout << r.dump() << '\n';

    if (!manifest_path.empty()) {
        std::string command_line;
        for (int i = 0; i < argc; ++i) command_line += (i ? " " : "") + std::string(argv[i]);
        Json inputs = Json::array();
        for (const auto& [path, hash] : run.inputs) inputs.push_back({{"path", path}, {"fnv1a64", hash}});
        const Json result = run.results.size() == 1 ? run.results.front() : Json(run.results);
        const Json manifest = {{"command_line", command_line}, {"version", turan3::version},
                               {"jobs", run.jobs},             {"wall_seconds", wall},
                               {"inputs", inputs},             {"result_digest", result_digest(result)}};
        std::ofstream out(manifest_path);
        if (!out) {
            std::cerr << "error: cannot write '" << manifest_path << "'\n";
            return exit_usage;
        }
        out << manifest.dump(2) << '\n';
    }
    return run.status;
}
