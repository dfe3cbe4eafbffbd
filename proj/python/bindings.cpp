// JSON-in, JSON-out bindings; the Python package decodes the strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcluster/bases.hpp"
#include "qcluster/freeze.hpp"
#include "qcluster/session.hpp"
#include "qcluster/verify.hpp"

namespace py = pybind11;
using namespace qcluster;

namespace {

Seed seed_arg(const std::string& text) { return seed_from_text(text); }

CartanData checked(const Word& w, const std::string& cartan) {
    CartanData c = parse_cartan(cartan);
    validate_word(w, c);
    return c;
}

std::string word_seed(const Word& w, const std::string& cartan, const std::string& kind, bool quantum) {
    CartanData c = checked(w, cartan);
    if (kind != "dsd" && kind != "rsd") throw InputError("kind must be dsd or rsd");
    auto tz = seed_from_trapezoid(w, c, quantum);
    const Seed& s = kind == "dsd" ? tz.dsd : tz.rsd;
    std::string dot = kind == "dsd" ? seed_to_dot(s, tz.ddI, tz.ddB) : seed_to_dot(s);
    return json{{"seed", seed_to_json(s)}, {"dot", dot}}.dump();
}

std::string mutate(const std::string& seed, const std::vector<VertexId>& at) {
    return seed_to_json(mutate_word(seed_arg(seed), at)).dump();
}

std::string variables(const std::string& seed, const std::vector<VertexId>& at, const std::vector<VertexId>& ids) {
    TrackedSeed ts = mutate_tracked(track(seed_arg(seed)), at);
    json out = json::array();
    for (auto id : ids) out.push_back(var_report(ts, id));
    return json{{"seed", seed_to_json(ts.seed)}, {"vars", out}}.dump();
}

std::string freeze(const std::string& seed, const std::vector<VertexId>& F, const std::string& element,
                   const std::optional<std::vector<std::int64_t>>& degree) {
    Seed s = seed_arg(seed);
    auto names = seed_names(s);
    QLaurent z = parse_laurent(element, names);
    QLaurent r = degree ? frz(z, F, ExpVec(*degree), s) : frz(z, F, s);
    return json{{"F", unfrozen_part(s, F)}, {"result", laurent_json(r, names)}}.dump();
}

std::string dbs_degrees(const Word& w, const std::string& cartan) {
    DbsData data(w, checked(w, cartan));
    return dbs_degree_table(data).dump();
}

std::string dbs_tsystems(const Word& w, const std::string& cartan) {
    DbsData data(w, checked(w, cartan));
    json rows = json::array();
    for (auto& r : all_t_systems(data)) rows.push_back(tsystem_json(r));
    return rows.dump();
}

std::string kl(const Word& w, const std::string& cartan, const std::vector<std::int64_t>& v, const std::string& order,
               std::size_t max_terms) {
    if (order != "rev" && order != "lex") throw InputError("order must be rev or lex");
    DbsData data(w, checked(w, cartan), max_terms);
    StandardBasis basis(data);
    auto L = kl_basis(basis, v, order == "rev" ? KLOrder::Rev : KLOrder::Lex);
    json over = json::object();
    for (auto& [u, b] : L.over_M) over[ExpVec(u).str()] = b.str();
    return json{{"w", v},
                {"degree", data.from_beta(v).data()},
                {"L", laurent_json(L.value, seed_names(data.seed()))},
                {"M_expansion", over}}
        .dump();
}

}  // namespace

PYBIND11_MODULE(_qcluster, m) {
    auto input = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    auto budget = py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    auto math = py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);
    (void)input;
    (void)budget;
    (void)math;

    m.def("parse_word", &parse_word, py::arg("text"));
    m.def("validate_seed", [](const std::string& s) { return seed_to_json(seed_arg(s)).dump(); }, py::arg("seed"));
    m.def("seed_to_dot", [](const std::string& s) { return seed_to_dot(seed_arg(s)); }, py::arg("seed"));
    m.def("word_seed", &word_seed, py::arg("word"), py::arg("cartan"), py::arg("kind"), py::arg("quantum"));
    m.def("mutate", &mutate, py::arg("seed"), py::arg("at"));
    m.def("variables", &variables, py::arg("seed"), py::arg("at"), py::arg("ids"));
    m.def("freeze", &freeze, py::arg("seed"), py::arg("F"), py::arg("element"), py::arg("degree"));
    m.def("dbs_degrees", &dbs_degrees, py::arg("word"), py::arg("cartan"));
    m.def("dbs_tsystems", &dbs_tsystems, py::arg("word"), py::arg("cartan"));
    m.def("kl", &kl, py::arg("word"), py::arg("cartan"), py::arg("w"), py::arg("order"), py::arg("max_terms"));
    m.def("suite_names", &suite_names);
    m.def(
        "run_suite", [](const std::string& name, std::uint32_t seed) { return run_suite(name, seed).to_json().dump(); },
        py::arg("name"), py::arg("rng_seed"), py::call_guard<py::gil_scoped_release>());

    py::class_<Session>(m, "Session")
        .def(py::init<>())
        .def(
            "handle",
            [](Session& s, const std::string& method, const std::string& path, const std::string& body) {
                Reply r = s.handle(method, path, body);
                return py::make_tuple(r.status, r.body.dump());
            },
            py::arg("method"), py::arg("path"), py::arg("body") = "")
        .def_property_readonly("depth", &Session::depth);
}
