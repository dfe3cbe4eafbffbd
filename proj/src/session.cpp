#include "qcluster/session.hpp"

#include "qcluster/errors.hpp"

namespace qcluster {

std::string f_text(const Seed& s, const ExpVec& g) {
    std::string out;
    for (std::size_t p = 0; p < g.size(); ++p) {
        std::int64_t c = g[p];
        if (!c) continue;
        std::string f = "f" + (s.ids[p] < 0 ? "m" + std::to_string(-s.ids[p]) : std::to_string(s.ids[p]));
        if (c < 0) out += "-";
        else if (!out.empty()) out += "+";
        if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
        out += f;
    }
    return out.empty() ? "0" : out;
}

json var_report(const TrackedSeed& ts, VertexId id) {
    json j = laurent_json(ts.var(id), seed_names(ts.initial));
    j["vertex"] = id;
    return j;
}

json seed_report(const TrackedSeed& ts) {
    return json{{"seed", seed_to_json(ts.seed)}, {"history", ts.history}};
}

json dbs_degree_table(const DbsData& data) {
    const auto& plan = data.plan();
    TrackedSeed ts = track(data.seed());
    json rows = json::array();
    for (auto k : plan.sigma) {
        ts = mutate_tracked(ts, k);
        const QLaurent& x = ts.var(k);
        json row{{"mutation", k}};
        for (auto& [key, v] : data.intervals())
            if (v.element == x) {
                row["interval"] = {key.first, key.second};
                row["degree"] = v.degree.data();
                row["text"] = f_text(data.seed(), v.degree);
                break;
            }
        if (!row.contains("interval")) throw ConsistencyError("mutation along Sigma produced no interval variable");
        rows.push_back(row);
    }
    json perm = json::object();
    for (auto [a, b] : plan.perm) perm[std::to_string(a)] = b;
    return json{{"word", data.eta()}, {"sigma", plan.sigma}, {"table", rows}, {"perm", perm}};
}

json tsystem_json(const TSystemReport& r) {
    json prod = json::array();
    for (auto [a, b] : r.product) prod.push_back({a, b});
    return json{{"j", r.j},
                {"s", r.s},
                {"holds", r.holds},
                {"classical_holds", r.classical_holds},
                {"alpha", to_string(r.alpha)},
                {"alpha_prime", to_string(r.alpha_prime)},
                {"alpha_greater", r.alpha > r.alpha_prime},
                {"product", prod},
                {"identity", r.identity}};
}

Session::Session() { load_word({1, 2, 1, 1, 2, 2, 1}, parse_cartan("Kronecker")); }

void Session::load_seed(const Seed& s) {
    stack_.assign(1, track(s));
    word_.reset();
    dbs_.reset();
}

void Session::load_word(const Word& w, const CartanData& c) {
    validate_word(w, c);
    load_seed(rsd(w, c, true));
    word_ = std::make_pair(w, c);
}

const DbsData& Session::dbs() {
    if (!word_) throw InputError("the session was not loaded from an unsigned word");
    if (!dbs_) dbs_ = std::make_unique<DbsData>(word_->first, word_->second);
    return *dbs_;
}

Reply Session::handle(const std::string& method, const std::string& path, const std::string& body) {
    std::lock_guard<std::mutex> lock(mu_);
    try {
        json j = json::object();
        if (!body.empty()) {
            try {
                j = json::parse(body);
            } catch (const json::exception& e) {
                throw InputError(std::string("request body is not JSON: ") + e.what());
            }
        }
        return dispatch(method, path, j);
    } catch (const InputError& e) {
        return {400, json{{"error", e.what()}, {"kind", "input"}}};
    } catch (const BudgetError& e) {
        return {500, json{{"error", e.what()}, {"kind", "budget"}}};
    } catch (const MathError& e) {
        return {500, json{{"error", e.what()}, {"kind", "math"}}};
    } catch (const json::exception& e) {
        return {400, json{{"error", e.what()}, {"kind", "input"}}};
    }
}

Reply Session::dispatch(const std::string& method, const std::string& path, const json& body) {
    auto need = [&](const char* m) {
        if (method != m) throw InputError(path + " expects " + m);
    };
    if (path == "/seed") {
        need("GET");
        return {200, seed_report(current())};
    }
    if (path == "/mutate") {
        need("POST");
        VertexId k = body.at("k").get<VertexId>();
        current().seed.pos(k);
        if (!current().seed.is_unfrozen(current().seed.pos(k)))
            throw InputError("vertex " + std::to_string(k) + " is frozen");
        stack_.push_back(mutate_tracked(current(), k));
        return {200, seed_report(current())};
    }
    if (path == "/undo") {
        need("POST");
        if (stack_.size() == 1) throw InputError("nothing to undo");
        stack_.pop_back();
        return {200, seed_report(current())};
    }
    if (path == "/freeze") {
        need("POST");
        auto F = body.at("F").get<std::vector<VertexId>>();
        TrackedSeed ts = current();
        ts.seed = freeze_seed(ts.seed, F);
        stack_.push_back(ts);
        return {200, seed_report(current())};
    }
    if (path.rfind("/var/", 0) == 0) {
        need("GET");
        VertexId id;
        try {
            std::size_t used = 0;
            id = std::stoi(path.substr(5), &used);
            if (used != path.size() - 5) throw std::invalid_argument("trailing");
        } catch (const std::logic_error&) {
            throw InputError("bad vertex in " + path);
        }
        return {200, var_report(current(), id)};
    }
    if (path == "/degrees") {
        need("GET");
        const Seed& s0 = current().initial;
        if (!s0.full_rank()) throw UnsupportedSeedError("degrees need a full rank initial seed");
        DominanceOrder dom(s0.B);
        json out = json::object();
        for (auto id : current().seed.ids) {
            auto g = degree(current().var(id), dom);
            if (!g) throw ConsistencyError("x_" + std::to_string(id) + " is not pointed");
            out[std::to_string(id)] = json{{"degree", g->data()}, {"text", f_text(s0, *g)}};
        }
        return {200, json{{"degrees", out}}};
    }
    if (path == "/quiver") {
        need("GET");
        return {200, json{{"dot", seed_to_dot(current().seed)}, {"seed", seed_to_json(current().seed)}}};
    }
    if (path == "/load") {
        need("POST");
        if (body.contains("word")) {
            Word w = body["word"].is_string() ? parse_word(body["word"].get<std::string>())
                                              : body["word"].get<Word>();
            std::string c = body.contains("cartan") ? (body["cartan"].is_string() ? body["cartan"].get<std::string>()
                                                                                   : body["cartan"].dump())
                                                    : "A1";
            load_word(w, parse_cartan(c));
        } else {
            load_seed(seed_from_json(body));
        }
        return {200, seed_report(current())};
    }
    if (path == "/dbs/degrees") {
        need("GET");
        return {200, dbs_degree_table(dbs())};
    }
    if (path == "/dbs/tsystem") {
        need("POST");
        return {200, tsystem_json(t_system_check(dbs(), body.at("j").get<int>(), body.at("s").get<int>()))};
    }
    return {404, json{{"error", "no endpoint " + method + " " + path}, {"kind", "input"}}};
}

}  // namespace qcluster
