#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gcg/experiments.hpp"
#include "gcg/parser.hpp"

namespace py = pybind11;
using namespace gcg;

namespace {

py::dict outcome_dict(const ParseOutcome& o) {
    py::dict d;
    d["success"] = o.success;
    d["total_wml"] = o.total_wml;
    d["peak_wml"] = o.peak_wml;
    d["wml_record"] = o.wml_record;
    py::list steps;
    for (const auto& s : o.steps) steps.append(s.label());
    d["steps"] = steps;
    if (o.lf) d["lf"] = o.lf->str();
    return d;
}

GrammarPtr decode_or_throw(const PSettings& ps) {
    std::string why;
    auto g = decode(ps, &why);
    if (!g) throw std::invalid_argument("impossible grammar: " + why);
    return g;
}

}  // namespace

PYBIND11_MODULE(_gcgsim, m) {
    m.doc() = "Categorial-grammar acquisition and evolution simulator";

    py::class_<PSettings>(m, "PSettings")
        .def_static("parse", [](const std::string& text) {
            auto ps = PSettings::decode_text(text);
            if (!ps) throw std::invalid_argument("malformed p-settings text");
            return *ps;
        })
        .def("encode", &PSettings::encode)
        .def("__eq__", [](const PSettings& a, const PSettings& b) { return a == b; });

    m.def("canonical", [](const std::string& name) {
        auto l = canonical_from_name(name);
        if (!l) throw std::invalid_argument("unknown language: " + name);
        return canonical(*l);
    });
    m.def("fixture", [](const std::string& name) {
        auto ps = fixture_by_name(name);
        if (!ps) throw std::invalid_argument("unknown fixture: " + name);
        return *ps;
    });
    m.def("unset_learner_genome", &unset_learner_genome);
    m.def("default_learner_genome", &default_learner_genome);

    m.def("language_of", [](const PSettings& ps) {
        auto g = decode_or_throw(ps);
        py::list types;
        for (const auto& t : g->types) {
            py::dict d;
            d["template_id"] = t.template_id;
            d["name"] = t.name;
            d["categories"] = t.key();
            types.append(d);
        }
        return types;
    });
    m.def("language_label", [](const PSettings& ps) {
        return language_label(*decode_or_throw(ps));
    });

    m.def("parse", [](const PSettings& ps, const std::string& sentence) {
        auto g = decode_or_throw(ps);
        auto cats = parse_categories(sentence);
        if (!cats) throw std::invalid_argument("malformed category string");
        return outcome_dict(parse(*cats, *g));
    });
    m.def("mean_wml", [](const PSettings& ps) {
        auto g = decode_or_throw(ps);
        return mean_wml(g->types, *g);
    });

    m.def(
        "learn_effect",
        [](const std::string& language, const std::string& learner, int trials,
           std::uint64_t seed) {
            LearnEffectConfig cfg;
            cfg.language = language;
            cfg.kind = learner == "unset" ? LearnerKind::Unset : LearnerKind::Default;
            cfg.trials = trials;
            cfg.seed = seed;
            LearnEffectReport rep = run_learn_effect(cfg);
            py::dict d;
            d["median"] = rep.median_inputs;
            d["p99"] = rep.p99_inputs;
            d["convergence_rate"] = rep.convergence_rate;
            d["inputs"] = rep.inputs_to_convergence;
            return d;
        },
        py::arg("language"), py::arg("learner") = "default",
        py::arg("trials") = 100, py::arg("seed") = 1);

    m.def(
        "pref_evolution",
        [](const std::string& language, const std::string& wml, int runs, int cycles,
           int interactions, int population, std::uint64_t seed) {
            PrefEvolutionConfig cfg;
            cfg.language = language;
            cfg.wml = wml == "both"    ? WmlMode::Both
                      : wml == "learn" ? WmlMode::LearnOnly
                      : wml == "parse" ? WmlMode::ParseOnly
                                       : WmlMode::None;
            cfg.runs = runs;
            cfg.cycles = cycles;
            cfg.interactions_per_cycle = interactions;
            cfg.population_size = population;
            cfg.seed = seed;
            PrefEvolutionReport rep = run_pref_evolution(cfg);
            py::dict d;
            d["default_runs"] = rep.default_runs;
            d["unset_runs"] = rep.unset_runs;
            d["none_runs"] = rep.none_runs;
            return d;
        },
        py::arg("language"), py::arg("wml") = "both", py::arg("runs") = 10,
        py::arg("cycles") = 50, py::arg("interactions") = 2000,
        py::arg("population") = 32, py::arg("seed") = 1);
}
