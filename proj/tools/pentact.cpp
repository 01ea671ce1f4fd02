#include "pentact/io.hpp"
#include "pentact/layout.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

using namespace pentact;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Invalid = 1, Usage = 2, NonTerminated = 3 };

int exit_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::Io:
        return Usage;
    default:
        return Invalid;
    }
}

struct Graph {
    Triangulation t;
    json doc;
};

Graph load(const std::string& path) {
    Graph g;
    try {
        g.doc = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    g.t = build_from_edges(graph_input_from_json(g.doc));
    return g;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const std::string& in) {
    Graph g;
    try {
        g = load(in);
    } catch (const Error& e) {
        if (exit_for(e) != Invalid) throw;
        print({{"ok", false}, {"error", to_string(e.kind())}, {"message", e.what()}});
        return Invalid;
    }
    ValidationReport r = validate(g.t);
    json j = {{"ok", r.ok},
              {"inner_vertices", g.t.num_inner_vertices()},
              {"embedding", g.t.embedding_computed() ? "computed" : "given"},
              {"reflected", g.t.reflected()}};
    if (!r.ok) {
        j["error"] = to_string(r.kind);
        j["message"] = r.message;
    }
    print(j);
    return r.ok ? Ok : Invalid;
}

int cmd_represent(const std::string& in, const std::string& out, int max_iters, const std::string& trace_path) {
    Graph g = load(in);
    require_valid(g.t);
    FiveColorForest f0 = g.doc.contains("forest") ? forest_from_json(g.t, g.doc["forest"]) : fcf_from_schnyder(g.t);
    if (auto r = validate_fcf(g.t, f0); !r.ok) throw Error(ErrorKind::InvalidForest, r.clause + ": " + r.message);
    StackExtension se(g.t);
    if (max_iters <= 0) max_iters = default_max_iters(g.t.num_inner_vertices());
    IterateResult res = iterate(se, f0, max_iters);
    if (!trace_path.empty()) write_file(trace_path, trace_to_json(res).dump(2) + "\n");
    json summary = {{"realized", res.realized}, {"iterations", res.iterations}};
    if (!res.realized) {
        summary["reason"] = res.reason;
        print(summary);
        return NonTerminated;
    }
    Skeleton s(se, res.forest, res.orientation);
    PentagonLayout layout = realize(s, res.solution);
    GeometryReport rep = verify(layout, g.t);
    summary["verified"] = rep.ok;
    if (!rep.ok) summary["violations"] = rep.violations;
    summary["corner_contacts"] = has_corner_contact(layout, g.t);
    if (!out.empty()) {
        emit(layout, g.t, Format::Svg, out + ".svg");
        emit(layout, g.t, Format::Json, out + ".layout.json");
        json sol = {{"forest", forest_to_json(g.t, res.forest)},
                    {"orientation", orientation_to_json(se, res.orientation)},
                    {"solution", solution_to_json(s, res.solution)}};
        write_file(out + ".solution.json", sol.dump(2) + "\n");
    }
    print(summary);
    return rep.ok ? Ok : Invalid;
}

int cmd_lattice(const std::string& in) {
    Graph g = load(in);
    require_valid(g.t);
    StackExtension se(g.t);
    LatticeStats st = lattice_stats(se);
    print({{"orientations", st.orientations},
           {"flip_edges", st.flip_edges},
           {"minimal", st.sources},
           {"maximal", st.sinks},
           {"closure_matches_enumeration", st.closure_matches}});
    return st.closure_matches && st.sources == 1 && st.sinks == 1 ? Ok : Invalid;
}

std::pair<int, int> parse_range(const std::string& s) {
    auto dash = s.find('-');
    try {
        if (dash == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad --n range '" + s + "'");
    }
}

unsigned thread_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PENTACT_THREADS")) {
        try {
            int k = std::stoi(env);
            if (k >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(k));
        } catch (const std::exception&) {
        }
    }
    return hw;
}

struct Row {
    int n;
    std::uint64_t seed;
    int iterations;
    std::string result;
};

int cmd_bench(const std::string& range, int count, std::uint64_t seed, int max_iters, const std::string& out) {
    auto [lo, hi] = parse_range(range);
    if (lo < 1 || hi < lo) throw Error(ErrorKind::Parse, "--n range must satisfy 1 <= lo <= hi");
    std::vector<std::pair<int, std::uint64_t>> jobs;
    for (int i = 0; i < count; ++i) jobs.emplace_back(lo + i % (hi - lo + 1), seed + static_cast<std::uint64_t>(i));

    std::vector<Row> rows;
    std::mutex sink;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k; (k = next++) < jobs.size();) {
            auto [n, sd] = jobs[k];
            Row r{n, sd, 0, ""};
            try {
                Triangulation t = generate_random(n, sd);
                StackExtension se(t);
                int mi = max_iters > 0 ? max_iters : default_max_iters(n);
                IterateResult res = iterate(se, fcf_from_schnyder(t), mi);
                r.iterations = res.iterations;
                if (!res.realized) {
                    r.result = "NonTerminated";
                } else {
                    Skeleton s(se, res.forest, res.orientation);
                    r.result = verify(realize(s, res.solution), t).ok ? "Realized" : "VerifyFailed";
                }
            } catch (const Error& e) {
                r.result = to_string(e.kind());
            }
            std::lock_guard lk(sink);
            rows.push_back(std::move(r));
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < std::min<size_t>(thread_count(), std::max<size_t>(jobs.size(), 1)); ++i)
        pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.n, a.seed) < std::tie(b.n, b.seed);
    });

    std::ostringstream csv;
    csv << "n,seed,iterations,result\n";
    for (const auto& r : rows) {
        csv << r.n << "," << r.seed << "," << r.iterations << "," << r.result << "\n";
    }
    if (out.empty())
        std::cout << csv.str();
    else
        write_file(out, csv.str());
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regular pentagon contact representations of inner triangulations of a 5-gon"};
    app.require_subcommand(1, 1);

    std::string in, out, trace, range = "1-12";
    int max_iters = 0, count = 0;
    std::uint64_t seed = 0;

    auto* v = app.add_subcommand("validate", "check a graph file");
    v->add_option("--in", in, "graph JSON")->required();

    auto* r = app.add_subcommand("represent", "compute, verify and emit a representation");
    r->add_option("--in", in, "graph JSON")->required();
    r->add_option("--out", out, "output prefix for .svg, .layout.json and .solution.json");
    auto* mi = r->add_option("--max-iters", max_iters, "iteration cap (default 10n+100)");
    mi->check(CLI::PositiveNumber);
    r->add_option("--dump-trace", trace, "write the iteration trace as JSON");

    auto* l = app.add_subcommand("lattice", "alpha5-orientation flip graph statistics");
    l->add_option("--in", in, "graph JSON")->required();

    auto* b = app.add_subcommand("bench", "iteration counts on random instances as CSV");
    b->add_option("--n", range, "inner vertex count N or range lo-hi")->capture_default_str();
    b->add_option("--count", count, "number of instances")->check(CLI::NonNegativeNumber);
    b->add_option("--seed", seed, "first seed");
    b->add_option("--max-iters", max_iters, "iteration cap (default 10n+100)")->check(CLI::PositiveNumber);
    b->add_option("--out", out, "CSV path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (*v) return cmd_validate(in);
        if (*r) return cmd_represent(in, out, max_iters, trace);
        if (*l) return cmd_lattice(in);
        if (*b) return cmd_bench(range, count, seed, max_iters, out);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_for(e);
    }
    return Usage;
}
