#include "qcluster/io.hpp"

#include <fstream>
#include <sstream>

namespace qcluster {

json seed_to_json(const Seed& s) {
    json B = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) B.push_back(s.B.row(i));
    json L = nullptr;
    if (s.Lambda) {
        L = json::array();
        for (std::size_t i = 0; i < s.size(); ++i) L.push_back(s.Lambda->row(i));
    }
    std::vector<VertexId> uf;
    for (auto p : s.uf) uf.push_back(s.ids[p]);
    json labels = json::object();
    for (auto& [id, name] : s.labels) labels[std::to_string(id)] = name;
    return json{{"I", s.ids}, {"I_uf", uf}, {"d", s.d}, {"B", B}, {"Lambda", L}, {"labels", labels}};
}

Seed seed_from_json(const json& j) {
    try {
        if (!j.is_object()) throw InputError("seed JSON must be an object");
        auto ids = j.at("I").get<std::vector<VertexId>>();
        auto uf = j.at("I_uf").get<std::vector<VertexId>>();
        auto d = j.contains("d") ? j["d"].get<std::vector<std::int64_t>>() : std::vector<std::int64_t>(ids.size(), 1);
        std::vector<std::vector<std::int64_t>> rows;
        for (auto& r : j.at("B")) rows.push_back(r.get<std::vector<std::int64_t>>());
        IntMatrix B(ids.size(), uf.size());
        if (rows.size() != ids.size()) throw InputError("B must have one row per vertex");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != uf.size()) throw InputError("B rows must have one entry per unfrozen vertex");
            for (std::size_t c = 0; c < uf.size(); ++c) B(i, c) = rows[i][c];
        }
        std::optional<IntMatrix> L;
        if (j.contains("Lambda") && !j["Lambda"].is_null()) {
            std::vector<std::vector<std::int64_t>> lr;
            for (auto& r : j["Lambda"]) lr.push_back(r.get<std::vector<std::int64_t>>());
            L = IntMatrix::from_rows(lr);
        }
        Seed s = make_seed(ids, uf, d, B, L);
        if (j.contains("labels"))
            for (auto& [k, v] : j["labels"].items()) {
                VertexId id = std::stoi(k);
                s.pos(id);
                s.labels[id] = v.get<std::string>();
            }
        return s;
    } catch (const json::exception& e) {
        throw InputError(std::string("bad seed JSON: ") + e.what());
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const InputError*>(&e)) throw;
        throw InputError(std::string("bad seed JSON: ") + e.what());
    }
}

Seed seed_from_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("seed is not valid JSON: ") + e.what());
    }
    return seed_from_json(j);
}

Seed read_seed_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return seed_from_text(ss.str());
}

json expvec_json(const ExpVec& g) { return g.data(); }

std::vector<std::string> seed_names(const Seed& s) {
    std::vector<std::string> v;
    for (auto id : s.ids) v.push_back(id < 0 ? "xm" + std::to_string(-id) : "x" + std::to_string(id));
    return v;
}

json laurent_json(const QLaurent& z, const std::vector<std::string>& names) {
    json terms = json::array();
    for (auto& [g, c] : z.terms()) {
        json cs = json::array();
        for (auto& [e, k] : c.terms()) cs.push_back(json::array({to_string(e), k}));
        terms.push_back(json{{"x", g.data()}, {"c", cs}});
    }
    return json{{"text", z.str(names)}, {"terms", terms}};
}

namespace {

std::string node(const Seed& s, std::size_t p) {
    return "  \"" + std::to_string(s.ids[p]) + "\" [label=\"" + s.name(p) + "\", shape=" +
           (s.is_unfrozen(p) ? "ellipse" : "box") + "];\n";
}

std::string edge(VertexId i, VertexId j, const Rat& w, bool dashed) {
    std::string e = "  \"" + std::to_string(i) + "\" -> \"" + std::to_string(j) + "\"";
    std::vector<std::string> attrs;
    if (w != Rat(1)) attrs.push_back("label=\"" + to_string(w) + "\"");
    if (dashed) attrs.push_back("style=dashed");
    if (!attrs.empty()) {
        e += " [";
        for (std::size_t a = 0; a < attrs.size(); ++a) e += (a ? ", " : "") + attrs[a];
        e += "]";
    }
    return e + ";\n";
}

}  // namespace

std::string seed_to_dot(const Seed& s) {
    std::string out = "digraph seed {\n";
    for (std::size_t p = 0; p < s.size(); ++p) out += node(s, p);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) {
            std::int64_t b = 0;
            if (s.is_unfrozen(j)) b = s.b(i, j);
            else if (s.is_unfrozen(i)) b = -s.b(j, i) * s.dvee()[j] / s.dvee()[i];
            if (b > 0) out += edge(s.ids[i], s.ids[j], Rat(b), false);
        }
    return out + "}\n";
}

std::string seed_to_dot(const Seed& s, const std::vector<VertexId>& ddI, const RatMatrix& ddB) {
    if (ddI.size() != s.size() || ddB.rows() != s.size()) throw InputError("full matrix does not match the seed");
    std::string out = "digraph seed {\n";
    for (std::size_t p = 0; p < s.size(); ++p) out += node(s, p);
    for (std::size_t i = 0; i < ddI.size(); ++i)
        for (std::size_t j = 0; j < ddI.size(); ++j)
            if (ddB(i, j) > Rat(0)) out += edge(ddI[i], ddI[j], ddB(i, j), !is_integer(ddB(i, j)));
    return out + "}\n";
}

}  // namespace qcluster
