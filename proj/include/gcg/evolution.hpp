// Population simulation of language agents: random linguistic interactions,
// fitness from interaction success, expressivity and parsing cost, mortality,
// and fitness-based reproduction by crossover of birth settings.

#ifndef GCG_EVOLUTION_HPP
#define GCG_EVOLUTION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcg/learner.hpp"

namespace gcg {

struct Counters {
    long GC = 0;       // generate cost events
    long PC = 0;       // parse cost events
    long GSC = 0;      // generate-subset-language cost events
    long PF = 0;       // parse failures
    long SI = 0;       // successful interactions
    long WML_sum = 0;  // accumulated parsing memory cost

    void reset() { *this = Counters{}; }
};

struct LAgt {
    int id = 0;
    PSettings genome;
    LearnerState learner;
    int age = 1;  // interaction cycles lived; learning at 1-3, mating at 4-10
    Counters counters;
    std::map<int, int> partner_success;
    double fitness = 0.0;

    bool in_critical_period() const { return age >= 1 && age <= 3; }
    bool adult() const { return age >= 4 && age <= 10; }
};

struct SimConfig {
    int population_size = 32;
    int interactions_per_cycle = 2000;
    int cycles = 50;
    double crossover_prob = 0.9;
    double mutation_prob = 0.0;
    bool memory_limited_learning = true;
    bool memory_limited_parsing = true;  // WML term in fitness
    double mortality_prob = 0.5;         // for agents below half mean fitness
    double growth_cap = 0.10;            // max growth per cycle
    std::uint64_t seed = 1;
};

// Make an adult agent whose current settings realize the given language
// while its genome stays the learner kind's birth settings.
LAgt make_adult(int id, const PSettings& genome, const PSettings& language,
                int age = 4);

double fitness_of(const Counters& c, bool use_wml);

struct InteractOutcome {
    bool spoke = false;
    bool success = false;
};

InteractOutcome interact(LAgt& speaker, LAgt& hearer, const SimConfig& cfg,
                         Rng& rng);

LAgt reproduce(const LAgt& a, const LAgt& b, const SimConfig& cfg, Rng& rng,
               int child_id);

struct StatusShares {
    double absolute = 0, defaulted = 0, unset = 0;
};

struct CycleRecord {
    int cycle = 0;
    int population = 0;
    double mean_fitness = 0.0;
    bool extinct = false;
    // Speaker counts keyed by language label (stringset hash + family name).
    std::map<std::string, int> speakers;
    // Share of tracked parameters (gen, subj, obj, comp, perm) per status.
    StatusShares tracked;
    StatusShares all_params;
};

struct Population {
    std::vector<LAgt> agents;
    int next_id = 0;
};

// One interaction cycle: interactions, fitness, mortality, reproduction,
// ageing, counter reset.  Returns the cycle record; population may go
// extinct.
CycleRecord run_cycle(Population& pop, const SimConfig& cfg, Rng& rng,
                      int cycle_index);

// Genome status shares over a population, across the five tracked
// parameters or across all twenty.
StatusShares genome_status_shares(const Population& pop, bool tracked_only);

struct SimResult {
    std::vector<CycleRecord> history;
    bool extinct = false;
};

SimResult run_simulation(Population pop, const SimConfig& cfg);

}  // namespace gcg

#endif
