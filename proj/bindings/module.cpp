#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pathram/asymptotics.hpp"
#include "pathram/game.hpp"
#include "pathram/recursion.hpp"
#include "pathram/solver.hpp"
#include "pathram/walks.hpp"

namespace py = pybind11;
using namespace pathram;

namespace {

py::int_ to_py(int128 v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(dec_string(v).c_str(), nullptr, 10));
}

int128 from_py(const py::int_& v) {
    return parse_int128(py::str(v).cast<std::string>());
}

py::tuple rate_tuple(const GrowthRate& r) { return py::make_tuple(to_py(r.num), to_py(r.den)); }

GrowthRate rate_from(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) {
        std::string text = obj.cast<std::string>();
        auto slash = text.find('/');
        if (slash == std::string::npos) return GrowthRate(parse_int128(text), 1);
        return GrowthRate(parse_int128(text.substr(0, slash)),
                          parse_int128(text.substr(slash + 1)));
    }
    if (py::isinstance<py::tuple>(obj) || py::isinstance<py::list>(obj)) {
        auto seq = obj.cast<py::sequence>();
        if (seq.size() != 2) throw validation_error("a rational needs two components");
        return GrowthRate(from_py(seq[0].cast<py::int_>()), from_py(seq[1].cast<py::int_>()));
    }
    return GrowthRate(from_py(obj.cast<py::int_>()), 1);
}

py::dict trace_dict(const recursion::RecursionTrace& trace) {
    py::dict out;
    out["walk"] = walks::to_run_length(trace.walk);
    out["targets"] = trace.walk.targets();
    py::list k;
    for (int128 v : trace.k_values) k.append(to_py(v));
    out["k"] = k;
    py::list xs;
    for (const auto& row : trace.x) {
        py::list x;
        for (int128 v : row) x.append(to_py(v));
        xs.append(x);
    }
    out["x"] = xs;
    return out;
}

py::dict report_dict(const solver::SearchReport& report) {
    py::dict out;
    out["l1"] = report.l1;
    out["l2"] = report.l2;
    out["kstar"] = to_py(report.kstar);
    py::list w;
    for (const auto& walk : report.witnesses) w.append(walks::to_run_length(walk));
    out["witnesses"] = w;
    out["witnesses_truncated"] = report.witnesses_truncated;
    out["nodes_expanded"] = report.counters.nodes_expanded;
    out["nodes_pruned_bound"] = report.counters.nodes_pruned_bound;
    out["nodes_pruned_dominance"] = report.counters.nodes_pruned_dominance;
    out["method"] = report.method;
    return out;
}

std::vector<int128> prefix_from(const py::sequence& seq) {
    std::vector<int128> out;
    out.reserve(seq.size());
    for (auto item : seq) out.push_back(from_py(item.cast<py::int_>()));
    return out;
}

}  // namespace

PYBIND11_MODULE(pathram, m) {
    m.doc() = "exact solver and analysis toolkit for the path-avoidance vertex-coloring game";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<overflow_error>(m, "OverflowError", PyExc_OverflowError);
    py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

    py::class_<walks::StrategyWalk>(m, "StrategyWalk")
        .def(py::init([](int colors, const std::vector<int>& entries) {
                 return walks::StrategyWalk::make(colors, entries);
             }),
             py::arg("colors"), py::arg("entries"))
        .def_property_readonly("colors", &walks::StrategyWalk::colors)
        .def_property_readonly("targets",
                               [](const walks::StrategyWalk& w) { return w.targets(); })
        .def_property_readonly("entries",
                               [](const walks::StrategyWalk& w) {
                                   std::vector<int> out(w.entries().begin(), w.entries().end());
                                   return out;
                               })
        .def("__len__", &walks::StrategyWalk::length)
        .def("__eq__", [](const walks::StrategyWalk& a, const walks::StrategyWalk& b) { return a == b; })
        .def("__str__", &walks::to_run_length)
        .def("__repr__", [](const walks::StrategyWalk& w) {
            return "StrategyWalk('" + walks::to_run_length(w) + "')";
        });

    m.def("make_walk", &walks::StrategyWalk::make, py::arg("colors"), py::arg("entries"));
    m.def("parse_walk", &walks::parse_walk, py::arg("text"), py::arg("min_colors") = 0);
    m.def("to_run_length", &walks::to_run_length, py::arg("walk"));
    m.def("greedy_walk", &walks::greedy_walk, py::arg("targets"));
    m.def("swap_colors", &walks::swap_colors, py::arg("walk"));
    m.def("walk_count", [](const std::vector<std::int64_t>& targets) {
        return to_py(walks::walk_count(targets));
    });
    m.def(
        "positions",
        [](const walks::StrategyWalk& w) {
            std::vector<std::vector<std::int64_t>> out;
            for (const auto& pos : walks::positions(w)) out.push_back(pos.coords);
            return out;
        },
        py::arg("walk"));
    m.def(
        "enumerate_walks",
        [](const std::vector<std::int64_t>& targets, std::size_t limit) {
            std::vector<walks::StrategyWalk> out;
            walks::enumerate_walks(targets, [&](const walks::StrategyWalk& w) {
                out.push_back(w);
                return out.size() < limit;
            });
            return out;
        },
        py::arg("targets"), py::arg("limit") = 1'000'000);
    m.def(
        "choose_color",
        [](const walks::StrategyWalk& w, const std::vector<std::int64_t>& lam) -> py::object {
            auto choice = walks::choose_color(w, lam);
            if (!choice) return py::none();
            return py::make_tuple(choice->index, choice->color);
        },
        py::arg("walk"), py::arg("lam"));

    m.def("evaluate",
          [](const walks::StrategyWalk& w) { return trace_dict(recursion::evaluate(w)); });
    m.def("k_of_walk", [](const walks::StrategyWalk& w) { return to_py(recursion::k_of_walk(w)); });
    m.def("beta_of_walk",
          [](const walks::StrategyWalk& w) { return to_py(recursion::beta_of_walk(w)); });
    m.def("delta_of_walk",
          [](const walks::StrategyWalk& w) { return rate_tuple(recursion::delta_of_walk(w)); });

    m.def(
        "kstar",
        [](std::int64_t l1, std::int64_t l2, const std::string& method, bool witnesses,
           std::size_t witness_cap, int workers, std::uint64_t exhaustive_cap) {
            solver::SearchOptions opts;
            opts.collect_witnesses = witnesses;
            opts.witness_cap = witness_cap;
            opts.workers = workers;
            opts.exhaustive_cap = exhaustive_cap;
            auto report = method == "exhaustive" ? solver::kstar_exhaustive(l1, l2, opts)
                                                 : solver::kstar_branch_and_bound(l1, l2, opts);
            return report_dict(report);
        },
        py::arg("l1"), py::arg("l2"), py::arg("method") = "bb", py::arg("witnesses") = true,
        py::arg("witness_cap") = 16, py::arg("workers") = 1,
        py::arg("exhaustive_cap") = 100'000'000ULL);
    m.def("mstar_of_kstar",
          [](const py::int_& k) { return rate_tuple(solver::mstar_of_kstar(from_py(k))); });
    m.def(
        "verify_table",
        [](std::int64_t max_ell) {
            py::list out;
            for (const auto& row : solver::verify_table(max_ell)) {
                py::dict d;
                d["ell"] = row.ell;
                d["kstar"] = to_py(row.computed);
                d["table_value"] = row.expected;
                d["ok"] = row.ok;
                out.append(d);
            }
            return out;
        },
        py::arg("max_ell"));

    m.def(
        "extend_recurrence",
        [](const py::sequence& prefix, const py::int_& beta, std::int64_t n) {
            py::list out;
            for (int128 v : asymptotics::extend_recurrence(prefix_from(prefix), from_py(beta), n)) {
                out.append(to_py(v));
            }
            return out;
        },
        py::arg("prefix"), py::arg("beta"), py::arg("n"));
    m.def(
        "period_analysis",
        [](const py::sequence& prefix, const py::int_& beta) {
            auto analysis = asymptotics::period_analysis(prefix_from(prefix), from_py(beta));
            py::dict out;
            out["p"] = analysis.p;
            out["period"] = analysis.period_length;
            out["increment"] = to_py(analysis.increment);
            out["delta"] = rate_tuple(analysis.delta);
            out["onset"] = analysis.onset;
            return out;
        },
        py::arg("prefix"), py::arg("beta"));
    m.def("delta_family", &asymptotics::delta_family, py::arg("c"), py::arg("t"));
    m.def(
        "bootstrap_walk",
        [](const py::object& q, std::int64_t s, int t) {
            return asymptotics::bootstrap_walk(asymptotics::BootstrapParams::make(rate_from(q), s, t));
        },
        py::arg("q"), py::arg("s"), py::arg("t"));
    m.def(
        "bootstrap_rate",
        [](const py::object& q, std::int64_t s) {
            return rate_tuple(asymptotics::bootstrap_rate(rate_from(q), s));
        },
        py::arg("q"), py::arg("s"));
    m.def("symmetric_lb_walk", &asymptotics::symmetric_lb_walk, py::arg("t"));

    m.def(
        "run_game",
        [](const std::vector<std::int64_t>& targets, const std::string& painter,
           const py::object& walk, const py::object& cap, bool transcript) {
            game::PainterStrategy strategy;
            if (painter == "walk") {
                if (walk.is_none()) throw validation_error("painter 'walk' needs a walk");
                if (py::isinstance<py::str>(walk)) {
                    strategy = game::PainterStrategy::from_walk(
                        walks::parse_walk(walk.cast<std::string>(),
                                          static_cast<int>(targets.size())));
                } else {
                    strategy = game::PainterStrategy::from_walk(walk.cast<walks::StrategyWalk>());
                }
            } else if (painter != "greedy") {
                throw validation_error("painter must be 'greedy' or 'walk'");
            }
            std::optional<int128> cap128;
            if (!cap.is_none()) cap128 = from_py(cap.cast<py::int_>());
            auto result = game::run_game(targets, strategy, cap128, transcript);
            py::dict out;
            out["steps"] = result.steps;
            py::list sizes;
            for (auto v : result.tree_sizes) sizes.append(to_py(v));
            out["tree_sizes"] = sizes;
            out["largest_component"] = to_py(result.largest_component);
            out["survived"] = result.cap_respected;
            out["losing_color"] = result.losing_color;
            out["losing_path_len"] = result.losing_path_len;
            out["extracted"] = result.extracted;
            if (transcript) {
                out["transcript"] = py::module_::import("json").attr("loads")(
                    result.transcript.dump());
            }
            return out;
        },
        py::arg("targets"), py::arg("painter") = "greedy", py::arg("walk") = py::none(),
        py::arg("cap") = py::none(), py::arg("transcript") = false);
    m.def(
        "check_strategy_invariant",
        [](const walks::StrategyWalk& walk, const py::object& x_override) {
            std::vector<std::vector<int128>> x;
            if (x_override.is_none()) {
                x = recursion::evaluate(walk).x;
            } else {
                for (auto row : x_override.cast<py::sequence>()) {
                    x.push_back(prefix_from(row.cast<py::sequence>()));
                }
            }
            auto verdict = game::check_strategy_invariant(walk, x);
            py::dict out;
            out["ok"] = verdict.ok;
            out["step"] = verdict.step;
            out["color"] = verdict.color;
            out["path_len"] = verdict.path_len;
            out["component_size"] = to_py(verdict.component_size);
            out["required"] = to_py(verdict.required);
            out["message"] = verdict.message;
            return out;
        },
        py::arg("walk"), py::arg("x_override") = py::none());
}
