#include "gcg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace gcg {

const char* learner_kind_name(LearnerKind k) {
    return k == LearnerKind::Unset ? "unset" : "default";
}

const char* wml_mode_name(WmlMode m) {
    switch (m) {
        case WmlMode::Both: return "both";
        case WmlMode::LearnOnly: return "learn";
        case WmlMode::ParseOnly: return "parse";
        case WmlMode::None: return "none";
    }
    return "?";
}

const char* preference_name(Preference p) {
    switch (p) {
        case Preference::Default: return "default";
        case Preference::Unset: return "unset";
        case Preference::None: return "none";
    }
    return "?";
}

std::optional<PSettings> fixture_by_name(const std::string& name) {
    if (name == "Mixed" || name == "mixed") return mixed_clausal_fixture();
    std::string base = name;
    bool noperm = false, nocomp = false;
    auto strip = [&](const std::string& suffix, bool& flag) {
        if (base.size() > suffix.size() &&
            base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
            base = base.substr(0, base.size() - suffix.size());
            flag = true;
        }
    };
    strip("-noperm", noperm);
    strip("-nocomp", nocomp);
    strip("-noperm", noperm);
    auto l = canonical_from_name(base);
    if (!l) return std::nullopt;
    PSettings ps = canonical(*l);
    if (noperm) ps.set(ParamId::Perm, PStatus::Absolute, false);
    if (nocomp) ps.set(ParamId::Comp, PStatus::Absolute, false);
    return ps;
}

namespace {

std::uint64_t trial_seed(std::uint64_t master, int trial) {
    // splitmix64 over (master, trial)
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(trial) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double percentile(std::vector<int> xs, double p) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    double idx = p * static_cast<double>(xs.size() - 1);
    auto lo = static_cast<std::size_t>(std::floor(idx));
    auto hi = static_cast<std::size_t>(std::ceil(idx));
    double frac = idx - std::floor(idx);
    return static_cast<double>(xs[lo]) +
           frac * static_cast<double>(xs[hi] - xs[lo]);
}

}  // namespace

LearnEffectReport run_learn_effect(const LearnEffectConfig& cfg) {
    auto fixture = fixture_by_name(cfg.language);
    if (!fixture) throw std::invalid_argument("unknown language: " + cfg.language);
    auto target = decode(*fixture);
    if (!target || target->types.size() < 3)
        throw std::invalid_argument("fixture does not speak: " + cfg.language);
    if (cfg.trials <= 0) throw std::invalid_argument("trials must be positive");

    LearnEffectReport rep;
    rep.config = cfg;
    PSettings genome = cfg.kind == LearnerKind::Unset ? unset_learner_genome()
                                                      : default_learner_genome();
    std::ofstream trace;
    if (!cfg.trace_path.empty()) {
        trace.open(cfg.trace_path);
        if (!trace) throw std::runtime_error("cannot open " + cfg.trace_path);
    }
    const auto& types = target->types;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Rng rng(trial_seed(cfg.seed, trial));
        LearnerState learner = LearnerState::from_genome(genome, cfg.memory_limited);
        std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
        int converged_at = cfg.max_inputs;
        for (int input = 1; input <= cfg.max_inputs; ++input) {
            learner.age_cycles = (input - 1) / cfg.inputs_per_cycle;
            const SentenceType& t = types[pick(rng)];
            LearnOutcome o = learn_step(learner, t, rng);
            if (trace.is_open()) {
                trace << nlohmann::json{{"trial", trial},
                                        {"step", input},
                                        {"template_id", t.template_id},
                                        {"admissible", o.admissible},
                                        {"parsed", o.parsed},
                                        {"updated_index", o.updated_index},
                                        {"reverted", o.reverted}}
                             .dump()
                      << '\n';
            }
            learner = o.state;
            if (input % cfg.check_every == 0 && converged(learner, *target)) {
                converged_at = input;
                break;
            }
        }
        rep.inputs_to_convergence.push_back(converged_at);
        if (converged_at < cfg.max_inputs) ++rep.converged_trials;
    }
    rep.median_inputs = percentile(rep.inputs_to_convergence, 0.5);
    rep.p99_inputs = percentile(rep.inputs_to_convergence, 0.99);
    rep.convergence_rate = static_cast<double>(rep.converged_trials) /
                           static_cast<double>(cfg.trials);
    return rep;
}

PrefEvolutionReport run_pref_evolution(const PrefEvolutionConfig& cfg) {
    auto fixture = fixture_by_name(cfg.language);
    if (!fixture) throw std::invalid_argument("unknown language: " + cfg.language);

    PrefEvolutionReport rep;
    rep.config = cfg;
    for (int run = 0; run < cfg.runs; ++run) {
        SimConfig sim;
        sim.population_size = cfg.population_size;
        sim.interactions_per_cycle = cfg.interactions_per_cycle;
        sim.cycles = cfg.cycles;
        sim.memory_limited_learning =
            cfg.wml == WmlMode::Both || cfg.wml == WmlMode::LearnOnly;
        sim.memory_limited_parsing =
            cfg.wml == WmlMode::Both || cfg.wml == WmlMode::ParseOnly;
        sim.seed = trial_seed(cfg.seed, run);

        Population pop;
        int half = cfg.population_size / 2;
        for (int i = 0; i < cfg.population_size; ++i) {
            PSettings genome =
                i < half ? default_learner_genome() : unset_learner_genome();
            pop.agents.push_back(
                make_adult(pop.next_id++, genome, *fixture, 4 + (i % 3)));
        }

        SimResult res = run_simulation(std::move(pop), sim);
        PrefRunRecord rec;
        rec.seed = sim.seed;
        rec.extinct = res.extinct;
        rec.history = res.history;
        if (!res.history.empty()) {
            const StatusShares& t = res.history.back().tracked;
            double du = t.defaulted + t.unset;
            rec.default_share = du > 0 ? t.defaulted / du : 0.0;
            if (du > 0 && rec.default_share > 2.0 / 3.0)
                rec.preference = Preference::Default;
            else if (du > 0 && rec.default_share < 1.0 / 3.0)
                rec.preference = Preference::Unset;
            else
                rec.preference = Preference::None;
        }
        if (rec.extinct) ++rep.extinct_runs;
        switch (rec.preference) {
            case Preference::Default: ++rep.default_runs; break;
            case Preference::Unset: ++rep.unset_runs; break;
            case Preference::None: ++rep.none_runs; break;
        }
        rep.runs.push_back(std::move(rec));
    }
    return rep;
}

namespace {

bool sov_v2_family(const std::string& label) {
    return label.rfind("SOV-v2", 0) == 0;
}

PSettings random_genome(Rng& rng, double absolute_prob) {
    PSettings ps;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int i = 0; i < kNumParams; ++i) {
        ParamId p = static_cast<ParamId>(i);
        if (coin(rng) < absolute_prob) {
            ps.set(p, PStatus::Absolute, bit(rng) == 1);
        } else if (bit(rng) == 1) {
            ps.set(p, PStatus::Default, bit(rng) == 1);
        } else {
            ps.set(p, PStatus::Unset, std::nullopt);
        }
    }
    return ps;
}

}  // namespace

EmergenceReport run_emergence(const EmergenceConfig& cfg) {
    EmergenceReport rep;
    rep.config = cfg;
    double d_change = 0, u_change = 0, a_change = 0;
    int measured = 0;
    for (int run = 0; run < cfg.runs; ++run) {
        SimConfig sim;
        sim.population_size = cfg.population_size;
        sim.interactions_per_cycle = cfg.interactions_per_cycle;
        sim.cycles = cfg.cycles;
        sim.mutation_prob = cfg.mutation_prob;
        sim.seed = trial_seed(cfg.seed, run);

        Rng init_rng(trial_seed(sim.seed, 1 << 20));
        Population pop;
        int n = cfg.population_size;
        if (cfg.mode == EmergenceMode::SeededGerman) {
            PSettings german = canonical(CanonicalLanguage::German);
            for (int i = 0; i < 2 && n > 0; ++i, --n)
                pop.agents.push_back(make_adult(pop.next_id++,
                                                unset_learner_genome(), german));
        }
        for (int i = 0; i < n; ++i) {
            LAgt a;
            a.id = pop.next_id++;
            a.genome = random_genome(init_rng, cfg.absolute_prob);
            a.learner = LearnerState::from_genome(a.genome);
            a.age = 1;
            pop.agents.push_back(std::move(a));
        }

        EmergenceRunRecord rec;
        rec.seed = sim.seed;
        rec.start_shares = genome_status_shares(pop, false);
        SimResult res = run_simulation(std::move(pop), sim);
        rec.extinct = res.extinct;
        rec.history = res.history;
        if (!res.history.empty()) {
            const CycleRecord& last = res.history.back();
            rec.end_shares = last.all_params;
            for (const auto& [label, count] : last.speakers) {
                if (count > rec.dominant_speakers) {
                    rec.dominant_speakers = count;
                    rec.dominant_language = label;
                }
            }
            rec.language_persisted = rec.dominant_speakers > 0 && !rec.extinct;
            rec.dominant_is_sov_v2 = sov_v2_family(rec.dominant_language);
        }
        if (rec.language_persisted) ++rep.persisted_runs;
        if (rec.language_persisted && rec.dominant_is_sov_v2) ++rep.sov_v2_runs;
        if (!rec.extinct) {
            d_change += rec.end_shares.defaulted - rec.start_shares.defaulted;
            u_change += rec.end_shares.unset - rec.start_shares.unset;
            a_change += rec.end_shares.absolute - rec.start_shares.absolute;
            ++measured;
        }
        rep.runs.push_back(std::move(rec));
    }
    if (measured > 0) {
        rep.mean_default_change = 100.0 * d_change / measured;
        rep.mean_unset_change = 100.0 * u_change / measured;
        rep.mean_absolute_change = 100.0 * a_change / measured;
    }
    return rep;
}

WmlRankReport run_wml_rank(const std::vector<std::string>& languages) {
    WmlRankReport rep;
    for (const auto& name : languages) {
        auto fixture = fixture_by_name(name);
        if (!fixture) throw std::invalid_argument("unknown language: " + name);
        auto g = decode(*fixture);
        if (!g) throw std::invalid_argument("impossible grammar: " + name);
        WmlRankRow row;
        row.language = name;
        row.mean_wml = mean_wml(g->types, *g);
        row.types = g->types.size();
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace gcg
