// Command-line harness for the acquisition and evolution experiments.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcg/experiments.hpp"
#include "gcg/parser.hpp"

using json = nlohmann::json;
using namespace gcg;

namespace {

json shares_json(const StatusShares& s) {
    return json{{"absolute", s.absolute}, {"default", s.defaulted}, {"unset", s.unset}};
}

void write_lines(const std::string& path, const std::vector<json>& lines,
                 const std::string& format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    if (format == "jsonl") {
        for (const auto& l : lines) out << l.dump() << '\n';
        return;
    }
    // csv: flat keys of the first record form the header
    if (lines.empty()) return;
    std::vector<std::string> keys;
    for (auto it = lines.front().begin(); it != lines.front().end(); ++it)
        keys.push_back(it.key());
    for (std::size_t i = 0; i < keys.size(); ++i)
        out << (i ? "," : "") << keys[i];
    out << '\n';
    for (const auto& l : lines) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (i) out << ',';
            const json& v = l.contains(keys[i]) ? l.at(keys[i]) : json();
            if (v.is_string()) out << v.get<std::string>();
            else out << v.dump();
        }
        out << '\n';
    }
}

void write_plot(const std::string& path, const std::vector<std::pair<double, double>>& rows) {
    std::ofstream out(path);
    for (const auto& [x, y] : rows) out << x << ' ' << y << '\n';
}

PSettings load_genome(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open genome file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    auto ps = PSettings::decode_text(buf.str());
    if (!ps) throw std::runtime_error("malformed genome file " + path);
    return *ps;
}

int cmd_learn_effect(const LearnEffectConfig& cfg, const std::string& out_path,
                     const std::string& format) {
    LearnEffectReport rep = run_learn_effect(cfg);
    std::cout << "learn-effect language=" << cfg.language
              << " learner=" << learner_kind_name(cfg.kind)
              << " trials=" << cfg.trials << " seed=" << cfg.seed << '\n';
    std::cout << "  median inputs-to-convergence: " << rep.median_inputs << '\n';
    std::cout << "  99th percentile:              " << rep.p99_inputs << '\n';
    std::cout << "  converged trials:             " << rep.converged_trials << '/'
              << cfg.trials << '\n';
    if (!out_path.empty()) {
        std::vector<json> lines;
        json config{{"experiment", "learn-effect"},
                    {"language", cfg.language},
                    {"learner", learner_kind_name(cfg.kind)},
                    {"trials", cfg.trials},
                    {"max_inputs", cfg.max_inputs},
                    {"memory_limited", cfg.memory_limited},
                    {"seed", cfg.seed}};
        for (std::size_t i = 0; i < rep.inputs_to_convergence.size(); ++i) {
            int v = rep.inputs_to_convergence[i];
            lines.push_back(json{{"type", "trial"},
                                 {"trial", i},
                                 {"inputs", v},
                                 {"converged", v < cfg.max_inputs},
                                 {"config", config}});
        }
        lines.push_back(json{{"type", "aggregate"},
                             {"median", rep.median_inputs},
                             {"p99", rep.p99_inputs},
                             {"convergence_rate", rep.convergence_rate},
                             {"config", config}});
        write_lines(out_path, lines, format);
    }
    return 0;
}

void write_history(const std::string& path, const std::vector<PrefRunRecord>& runs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (std::size_t i = 0; i < runs.size(); ++i) {
        for (const auto& rec : runs[i].history) {
            json speakers(json::value_t::object);
            for (const auto& [label, n] : rec.speakers) speakers[label] = n;
            out << json{{"run", i},
                        {"cycle", rec.cycle},
                        {"population", rec.population},
                        {"mean_fitness", rec.mean_fitness},
                        {"speakers", speakers},
                        {"tracked", shares_json(rec.tracked)},
                        {"extinct", rec.extinct}}
                       .dump()
                << '\n';
        }
    }
}

int cmd_pref_evolution(const PrefEvolutionConfig& cfg, const std::string& out_path,
                       const std::string& format, const std::string& plot_prefix,
                       const std::string& history_path) {
    PrefEvolutionReport rep = run_pref_evolution(cfg);
    if (!history_path.empty()) write_history(history_path, rep.runs);
    std::cout << "pref-evolution language=" << cfg.language
              << " wml=" << wml_mode_name(cfg.wml) << " runs=" << cfg.runs
              << " cycles=" << cfg.cycles << " seed=" << cfg.seed << '\n';
    std::cout << "  preference counts: default=" << rep.default_runs
              << " unset=" << rep.unset_runs << " none=" << rep.none_runs
              << " (extinct " << rep.extinct_runs << ")\n";
    json config{{"experiment", "pref-evolution"},
                {"language", cfg.language},
                {"wml", wml_mode_name(cfg.wml)},
                {"runs", cfg.runs},
                {"cycles", cfg.cycles},
                {"interactions", cfg.interactions_per_cycle},
                {"population", cfg.population_size},
                {"seed", cfg.seed}};
    if (!out_path.empty()) {
        std::vector<json> lines;
        for (std::size_t i = 0; i < rep.runs.size(); ++i) {
            const auto& r = rep.runs[i];
            lines.push_back(json{{"type", "run"},
                                 {"run", i},
                                 {"seed", r.seed},
                                 {"extinct", r.extinct},
                                 {"default_share", r.default_share},
                                 {"preference", preference_name(r.preference)},
                                 {"config", config}});
        }
        lines.push_back(json{{"type", "aggregate"},
                             {"default_runs", rep.default_runs},
                             {"unset_runs", rep.unset_runs},
                             {"none_runs", rep.none_runs},
                             {"config", config}});
        write_lines(out_path, lines, format);
    }
    if (!plot_prefix.empty() && !rep.runs.empty()) {
        std::vector<std::pair<double, double>> defaults;
        for (const auto& rec : rep.runs.front().history) {
            double du = rec.tracked.defaulted + rec.tracked.unset;
            defaults.emplace_back(rec.cycle,
                                  du > 0 ? 100.0 * rec.tracked.defaulted / du : 0.0);
        }
        write_plot(plot_prefix + "-defaults.dat", defaults);
    }
    return 0;
}

int cmd_emergence(const EmergenceConfig& cfg, const std::string& out_path,
                  const std::string& format, const std::string& plot_prefix) {
    EmergenceReport rep = run_emergence(cfg);
    std::cout << "emergence mode="
              << (cfg.mode == EmergenceMode::Random ? "random" : "seeded-german")
              << " runs=" << cfg.runs << " cycles=" << cfg.cycles
              << " seed=" << cfg.seed << '\n';
    std::cout << "  runs with a persisting language: " << rep.persisted_runs << '/'
              << cfg.runs << '\n';
    std::cout << "  runs fixing on an SOV-v2 language: " << rep.sov_v2_runs << '\n';
    std::cout << std::fixed << std::setprecision(1);
    std::cout << "  mean status change (pp): default " << std::showpos
              << rep.mean_default_change << " unset " << rep.mean_unset_change
              << " absolute " << rep.mean_absolute_change << std::noshowpos
              << '\n';
    std::cout.unsetf(std::ios::fixed);
    json config{{"experiment", "emergence"},
                {"mode", cfg.mode == EmergenceMode::Random ? "random" : "seeded-german"},
                {"runs", cfg.runs},
                {"cycles", cfg.cycles},
                {"interactions", cfg.interactions_per_cycle},
                {"population", cfg.population_size},
                {"mutation", cfg.mutation_prob},
                {"seed", cfg.seed}};
    if (!out_path.empty()) {
        std::vector<json> lines;
        for (std::size_t i = 0; i < rep.runs.size(); ++i) {
            const auto& r = rep.runs[i];
            lines.push_back(json{{"type", "run"},
                                 {"run", i},
                                 {"seed", r.seed},
                                 {"extinct", r.extinct},
                                 {"persisted", r.language_persisted},
                                 {"dominant", r.dominant_language},
                                 {"dominant_speakers", r.dominant_speakers},
                                 {"sov_v2", r.dominant_is_sov_v2},
                                 {"start", shares_json(r.start_shares)},
                                 {"end", shares_json(r.end_shares)},
                                 {"config", config}});
        }
        lines.push_back(json{{"type", "aggregate"},
                             {"persisted_runs", rep.persisted_runs},
                             {"sov_v2_runs", rep.sov_v2_runs},
                             {"default_change", rep.mean_default_change},
                             {"unset_change", rep.mean_unset_change},
                             {"absolute_change", rep.mean_absolute_change},
                             {"config", config}});
        write_lines(out_path, lines, format);
    }
    if (!plot_prefix.empty() && !rep.runs.empty()) {
        const auto& hist = rep.runs.front().history;
        std::vector<std::pair<double, double>> langshare, defshare;
        for (const auto& rec : hist) {
            int top = 0;
            for (const auto& [l, c] : rec.speakers) top = std::max(top, c);
            langshare.emplace_back(rec.cycle, rec.population > 0
                                                  ? 100.0 * top / rec.population
                                                  : 0.0);
            defshare.emplace_back(rec.cycle, 100.0 * rec.all_params.defaulted);
        }
        write_plot(plot_prefix + "-languages.dat", langshare);
        write_plot(plot_prefix + "-defaults.dat", defshare);
    }
    return 0;
}

int cmd_wml_rank(const std::vector<std::string>& langs, const std::string& out_path,
                 const std::string& format) {
    WmlRankReport rep = run_wml_rank(langs);
    std::cout << std::left << std::setw(20) << "language" << std::setw(12)
              << "mean WML" << "types\n";
    for (const auto& row : rep.rows) {
        std::cout << std::left << std::setw(20) << row.language << std::setw(12)
                  << row.mean_wml << row.types << '\n';
    }
    if (rep.rows.size() > 1) {
        std::cout << "pairwise ratios:\n";
        for (std::size_t i = 0; i < rep.rows.size(); ++i)
            for (std::size_t j = i + 1; j < rep.rows.size(); ++j)
                std::cout << "  " << rep.rows[i].language << " / "
                          << rep.rows[j].language << " = "
                          << rep.rows[i].mean_wml / rep.rows[j].mean_wml << '\n';
    }
    if (!out_path.empty()) {
        std::vector<json> lines;
        for (const auto& row : rep.rows)
            lines.push_back(json{{"type", "wml"},
                                 {"language", row.language},
                                 {"mean_wml", row.mean_wml},
                                 {"types", row.types}});
        write_lines(out_path, lines, format);
    }
    return 0;
}

int cmd_language(const std::string& genome_path) {
    PSettings ps = load_genome(genome_path);
    std::string why;
    auto g = decode(ps, &why);
    if (!g) {
        std::cerr << "impossible grammar: " << why << '\n';
        return 2;
    }
    for (const auto& t : g->types) {
        std::cout << "# template " << t.template_id << '\n' << t.key() << '\n';
    }
    return 0;
}

int cmd_parse(const std::string& genome_path, const std::string& sentence,
              const std::vector<std::string>& disabled) {
    PSettings ps = load_genome(genome_path);
    for (const auto& name : disabled) {
        auto p = param_from_name(name);
        if (!p) {
            std::cerr << "unknown parameter: " << name << '\n';
            return 2;
        }
        ps.set(*p, PStatus::Absolute, false);
    }
    auto g = decode(ps);
    if (!g) {
        std::cerr << "genome decodes to an impossible grammar\n";
        return 2;
    }
    auto cats = parse_categories(sentence);
    if (!cats) {
        std::cerr << "malformed category string\n";
        return 2;
    }
    ParseOutcome o = parse(*cats, *g);
    std::cout << render_trace(*cats, o);
    if (o.success && o.lf) std::cout << "LF: " << o.lf->str() << '\n';
    return o.success ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Categorial-grammar acquisition and evolution simulator"};
    app.require_subcommand(1);

    std::string out_path, format = "jsonl", plot_prefix, history_path;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "master random seed");
        sub->add_option("--out", out_path, "write per-record output to this path");
        sub->add_option("--format", format, "output format: jsonl or csv")
            ->check(CLI::IsMember({"jsonl", "csv"}));
    };

    // learn-effect
    LearnEffectConfig le;
    std::string learner_kind = "default";
    auto* sub_le = app.add_subcommand("learn-effect",
                                      "single learner acquiring from one adult");
    sub_le->add_option("language", le.language, "target language name")->required();
    sub_le->add_option("--learner", learner_kind, "unset or default")
        ->check(CLI::IsMember({"unset", "default"}));
    sub_le->add_option("--trials", le.trials, "number of trials");
    sub_le->add_option("--max-inputs", le.max_inputs, "give up after N inputs");
    sub_le->add_flag("!--no-memory-limit", le.memory_limited,
                     "disable the working-memory gate");
    sub_le->add_option("--trace", le.trace_path,
                       "write one JSONL record per presented trigger");
    add_common(sub_le);

    // pref-evolution
    PrefEvolutionConfig pe;
    std::string wml_mode = "both";
    auto* sub_pe = app.add_subcommand("pref-evolution",
                                      "default vs unset parameter preference runs");
    sub_pe->add_option("language", pe.language, "initial adult language")->required();
    sub_pe->add_option("--wml", wml_mode, "memory limits: both, learn, parse, none")
        ->check(CLI::IsMember({"both", "learn", "parse", "none"}));
    sub_pe->add_option("--runs", pe.runs, "number of runs");
    sub_pe->add_option("--cycles", pe.cycles, "interaction cycles per run");
    sub_pe->add_option("--interactions", pe.interactions_per_cycle,
                       "interactions per cycle");
    sub_pe->add_option("--population", pe.population_size, "initial population");
    sub_pe->add_option("--plot", plot_prefix, "write gnuplot series with this prefix");
    sub_pe->add_option("--history", history_path,
                       "write per-cycle population records (JSONL)");
    add_common(sub_pe);

    // emergence
    EmergenceConfig em;
    std::string mode = "random";
    auto* sub_em = app.add_subcommand("emergence",
                                      "runs from randomly initialized genomes");
    sub_em->add_option("--mode", mode, "random or seeded-german")
        ->check(CLI::IsMember({"random", "seeded-german"}));
    sub_em->add_option("--runs", em.runs, "number of runs");
    sub_em->add_option("--cycles", em.cycles, "interaction cycles per run");
    sub_em->add_option("--interactions", em.interactions_per_cycle,
                       "interactions per cycle");
    sub_em->add_option("--population", em.population_size, "initial population");
    sub_em->add_option("--mutation", em.mutation_prob, "mutation probability");
    sub_em->add_option("--plot", plot_prefix, "write gnuplot series with this prefix");
    add_common(sub_em);

    // wml-rank
    std::vector<std::string> langs;
    auto* sub_wr = app.add_subcommand("wml-rank", "mean WML per language");
    sub_wr->add_option("languages", langs, "language names")->required();
    add_common(sub_wr);

    // language
    std::string lang_genome;
    auto* sub_lang = app.add_subcommand("language",
                                        "dump the generated sentence types");
    sub_lang->add_option("genome", lang_genome, "genome file")->required();

    // parse
    std::string genome_path, sentence;
    std::vector<std::string> disabled;
    auto* sub_pa = app.add_subcommand("parse", "trace one category string");
    sub_pa->add_option("genome", genome_path, "genome file")->required();
    sub_pa->add_option("sentence", sentence, "whitespace-separated categories")
        ->required();
    sub_pa->add_option("--disable", disabled, "turn a parameter off (e.g. perm)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sub_le) {
            le.kind = learner_kind == "unset" ? LearnerKind::Unset
                                              : LearnerKind::Default;
            le.seed = seed;
            return cmd_learn_effect(le, out_path, format);
        }
        if (*sub_pe) {
            pe.wml = wml_mode == "both"    ? WmlMode::Both
                     : wml_mode == "learn" ? WmlMode::LearnOnly
                     : wml_mode == "parse" ? WmlMode::ParseOnly
                                           : WmlMode::None;
            pe.seed = seed;
            return cmd_pref_evolution(pe, out_path, format, plot_prefix, history_path);
        }
        if (*sub_em) {
            em.mode = mode == "random" ? EmergenceMode::Random
                                       : EmergenceMode::SeededGerman;
            em.seed = seed;
            return cmd_emergence(em, out_path, format, plot_prefix);
        }
        if (*sub_wr) return cmd_wml_rank(langs, out_path, format);
        if (*sub_lang) return cmd_language(lang_genome);
        if (*sub_pa) return cmd_parse(genome_path, sentence, disabled);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
