#include "pentact/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace pentact {

using nlohmann::json;

namespace {

mpq_class parse_q(const std::string& s) {
    try {
        mpq_class q(s, 10);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
    }
}

long long as_id(const json& v) {
    if (!v.is_number_integer()) throw Error(ErrorKind::Parse, "vertex id must be an integer");
    return v.get<long long>();
}

}  // namespace

json q5_to_json(const Q5& x) { return {{"a", x.a().get_str()}, {"b", x.b().get_str()}}; }

Q5 q5_from_json(const json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j["a"].is_string() || !j["b"].is_string())
        throw Error(ErrorKind::Parse, "Q5 value must be {\"a\": \"p/q\", \"b\": \"r/s\"}");
    return Q5(parse_q(j["a"].get<std::string>()), parse_q(j["b"].get<std::string>()));
}

GraphInput graph_input_from_json(const json& j) {
    try {
        GraphInput in;
        if (!j.is_object() || !j.contains("outer") || !j.contains("edges"))
            throw Error(ErrorKind::Parse, "graph needs \"outer\" and \"edges\"");
        const auto& o = j.at("outer");
        if (!o.is_array() || o.size() != 5) throw Error(ErrorKind::Parse, "\"outer\" must list 5 ids");
        for (int i = 0; i < 5; ++i) in.outer[i] = as_id(o[i]);
        std::set<std::pair<long long, long long>> seen;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, "edge must be a pair");
            long long u = as_id(e[0]), v = as_id(e[1]);
            if (!seen.insert(std::minmax(u, v)).second)
                throw Error(ErrorKind::Parse, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
            in.edges.emplace_back(u, v);
        }
        if (j.contains("rotations") && !j["rotations"].is_null()) {
            std::vector<std::pair<long long, std::vector<long long>>> rot;
            for (const auto& [k, v] : j["rotations"].items()) {
                long long id;
                try {
                    size_t pos = 0;
                    id = std::stoll(k, &pos);
                    if (pos != k.size()) throw std::invalid_argument(k);
                } catch (const std::exception&) {
                    throw Error(ErrorKind::Parse, "rotation key '" + k + "' is not an integer id");
                }
                std::vector<long long> nb;
                for (const auto& x : v) nb.push_back(as_id(x));
                rot.emplace_back(id, std::move(nb));
            }
            std::sort(rot.begin(), rot.end());
            in.rotations = std::move(rot);
        }
        return in;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

json graph_to_json(const Triangulation& t) {
    json j;
    j["outer"] = json::array();
    for (int v : t.outer()) j["outer"].push_back(t.label(v));
    j["edges"] = json::array();
    for (int v = 0; v < t.num_vertices(); ++v)
        for (int u : t.rotation(v))
            if (v < u) j["edges"].push_back({t.label(v), t.label(u)});
    json rot = json::object();
    for (int v = 0; v < t.num_vertices(); ++v) {
        json r = json::array();
        for (int u : t.rotation(v)) r.push_back(t.label(u));
        rot[std::to_string(t.label(v))] = r;
    }
    j["rotations"] = rot;
    return j;
}

Triangulation load_graph(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    return build_from_edges(graph_input_from_json(j));
}

json forest_to_json(const Triangulation& t, const FiveColorForest& f) {
    json arr = json::array();
    for (const auto& a : f.arcs) arr.push_back({{"from", t.label(a.from)}, {"to", t.label(a.to)}, {"color", a.color}});
    return {{"edges", arr}};
}

FiveColorForest forest_from_json(const Triangulation& t, const json& j) {
    std::map<long long, int> id;
    for (int v = 0; v < t.num_vertices(); ++v) id[t.label(v)] = v;
    FiveColorForest f;
    f.arcs.resize(t.num_edges());
    std::vector<char> got(t.num_edges(), 0);
    try {
        for (const auto& a : j.at("edges")) {
            long long u = as_id(a.at("from")), v = as_id(a.at("to"));
            int c = a.at("color").get<int>();
            if (!id.count(u) || !id.count(v)) throw Error(ErrorKind::Parse, "unknown vertex in forest");
            int e = t.edge_index(id[u], id[v]);
            if (e < 0) throw Error(ErrorKind::Parse, "forest arc is not an inner edge");
            if (got[e]) throw Error(ErrorKind::Parse, "duplicate forest arc");
            if (c < 1 || c > 5) throw Error(ErrorKind::Parse, "color out of range");
            got[e] = 1;
            f.arcs[e] = {id[u], id[v], c};
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    for (char g : got)
        if (!g) throw Error(ErrorKind::Parse, "forest does not cover every inner edge");
    return f;
}

json orientation_to_json(const StackExtension& se, const Alpha5Orientation& x) {
    const Triangulation& t = se.base();
    long long base = 0;
    for (int v = 0; v < t.num_vertices(); ++v) base = std::max(base, t.label(v) + 1);
    auto lab = [&](int v) { return se.is_stack(v) ? base + (v - se.num_normal()) : t.label(v); };
    json st = json::array();
    for (int s = se.num_normal(); s < se.num_vertices(); ++s) {
        json fc = json::array();
        for (int v : t.face(se.face_of_stack(s))) fc.push_back(t.label(v));
        st.push_back({{"id", lab(s)}, {"face", fc}});
    }
    json ed = json::array();
    for (int e = 0; e < se.num_edges(); ++e) ed.push_back({lab(tail(se, x, e)), lab(head(se, x, e))});
    return {{"stack_vertices", st}, {"oriented_edges", ed}};
}

json solution_to_json(const Skeleton& s, const std::vector<Q5>& sol) {
    json j = json::object();
    for (int i = 0; i < static_cast<int>(sol.size()); ++i) {
        json v = q5_to_json(sol[i]);
        v["sign"] = sol[i].sign();
        j[s.variable_name(i)] = v;
    }
    return j;
}

json trace_to_json(const IterateResult& r) {
    json steps = json::array();
    for (const auto& st : r.trace) {
        char h[17];
        std::snprintf(h, sizeof h, "%016llx", static_cast<unsigned long long>(st.hash));
        steps.push_back({{"iteration", st.iteration}, {"negatives", st.negatives}, {"cycles", st.cycles}, {"hash", h}});
    }
    return {{"realized", r.realized}, {"iterations", r.iterations}, {"reason", r.reason}, {"steps", steps}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
    out << content;
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

}  // namespace pentact
