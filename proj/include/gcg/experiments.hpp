// Seeded experiment harness: single-learner acquisition sessions, the
// default-vs-unset preference runs, emergence runs from random genomes, and
// the working-memory-load language ranking.

#ifndef GCG_EXPERIMENTS_HPP
#define GCG_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcg/evolution.hpp"

namespace gcg {

enum class LearnerKind { Unset, Default };
const char* learner_kind_name(LearnerKind k);

struct LearnEffectConfig {
    std::string language = "English";
    LearnerKind kind = LearnerKind::Default;
    int trials = 100;
    int max_inputs = 1000;
    int check_every = 10;       // convergence examined every N inputs
    int inputs_per_cycle = 10;  // age advances every N inputs
    bool memory_limited = true;
    std::uint64_t seed = 1;
    // When set, one JSONL record per presented trigger is appended here:
    // {trial, step, template_id, admissible, parsed, updated_index, reverted}.
    std::string trace_path;
};

struct LearnEffectReport {
    LearnEffectConfig config;
    std::vector<int> inputs_to_convergence;  // per trial; max_inputs = never
    int converged_trials = 0;
    double median_inputs = 0.0;   // over all trials
    double p99_inputs = 0.0;      // 99th percentile, the stricter criterion
    double convergence_rate = 0.0;
};

LearnEffectReport run_learn_effect(const LearnEffectConfig& cfg);

enum class WmlMode { Both, LearnOnly, ParseOnly, None };
const char* wml_mode_name(WmlMode m);

enum class Preference { Default, Unset, None };
const char* preference_name(Preference p);

struct PrefEvolutionConfig {
    std::string language = "English";
    WmlMode wml = WmlMode::Both;
    int runs = 10;
    int cycles = 50;
    int interactions_per_cycle = 2000;
    int population_size = 32;
    std::uint64_t seed = 1;
};

struct PrefRunRecord {
    std::uint64_t seed = 0;
    bool extinct = false;
    double default_share = 0.0;  // of default among default+unset, tracked params
    Preference preference = Preference::None;
    std::vector<CycleRecord> history;
};

struct PrefEvolutionReport {
    PrefEvolutionConfig config;
    std::vector<PrefRunRecord> runs;
    int default_runs = 0, unset_runs = 0, none_runs = 0, extinct_runs = 0;
};

PrefEvolutionReport run_pref_evolution(const PrefEvolutionConfig& cfg);

enum class EmergenceMode { Random, SeededGerman };

struct EmergenceConfig {
    EmergenceMode mode = EmergenceMode::Random;
    int runs = 10;
    int cycles = 500;
    int interactions_per_cycle = 2000;
    int population_size = 32;
    double absolute_prob = 0.25;
    double mutation_prob = 0.01;
    std::uint64_t seed = 1;
};

struct EmergenceRunRecord {
    std::uint64_t seed = 0;
    bool extinct = false;
    bool language_persisted = false;   // some language spoken at run end
    std::string dominant_language;     // label at end, empty if none
    int dominant_speakers = 0;
    bool dominant_is_sov_v2 = false;   // full or subset of the seeded target
    StatusShares start_shares, end_shares;  // over all 20 parameters
    std::vector<CycleRecord> history;
};

struct EmergenceReport {
    EmergenceConfig config;
    std::vector<EmergenceRunRecord> runs;
    int persisted_runs = 0;
    int sov_v2_runs = 0;
    double mean_default_change = 0.0;  // end minus start, percentage points
    double mean_unset_change = 0.0;
    double mean_absolute_change = 0.0;
};

EmergenceReport run_emergence(const EmergenceConfig& cfg);

struct WmlRankRow {
    std::string language;
    double mean_wml = 0.0;
    std::size_t types = 0;
};

struct WmlRankReport {
    std::vector<WmlRankRow> rows;
};

// Mean WML per named language; names may be canonical languages,
// "English-noperm" style ablations, or "Mixed".
WmlRankReport run_wml_rank(const std::vector<std::string>& languages);

// Fixture genome by extended name: canonical names/families, plus
// "<name>-noperm", "<name>-nocomp", and "Mixed".
std::optional<PSettings> fixture_by_name(const std::string& name);

}  // namespace gcg

#endif
