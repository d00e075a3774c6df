// Error-driven parameter setting with once-only resets, memory-gated
// triggers, and default-inheritance ordering: on parse failure the learner
// resets the first (most general) untouched default or unset parameter whose
// new value makes the trigger parse; failed candidates revert.

#ifndef GCG_LEARNER_HPP
#define GCG_LEARNER_HPP

#include <array>
#include <optional>
#include <random>

#include "gcg/language.hpp"
#include "gcg/parser.hpp"
#include "gcg/psettings.hpp"

namespace gcg {

using Rng = std::mt19937_64;

struct LearnerState {
    PSettings genome;   // birth settings, immutable
    PSettings current;  // working settings
    std::array<bool, kNumParams> touched{};
    int age_cycles = 0;  // completed interaction cycles
    bool memory_limited = true;

    static LearnerState from_genome(const PSettings& g, bool memory_limited = true);
};

// Working-memory capacity available to a learner of the given age.
int wm_capacity(int age_cycles);

// The update table applied to the first untouched default/unset entry at or
// after `from_index`: (D,1)->(0), (D,0)->(1), (?,-)->(random).  Returns the
// rewritten settings and the index, or nothing when no entry remains.
struct UpdateResult {
    PSettings settings;
    int index;
};
std::optional<UpdateResult> update(const PSettings& ps,
                                   const std::array<bool, kNumParams>& touched,
                                   Rng& rng, int from_index = 0);

// True unless memory-limited learning rules the trigger out at this age:
// an attempted parse must keep the peak stack WML within capacity.
bool admissible_trigger(const LearnerState& state, const SentenceType& st);

struct LearnOutcome {
    LearnerState state;
    bool admissible = false;
    bool parsed = false;       // trigger parsed before any update
    int updated_index = -1;    // retained parameter index, -1 if none
    bool reverted = false;     // some candidate was tried and rolled back
};

// One presentation of a trigger.  At most one parameter changes, and only
// to a value under which the trigger parses.
LearnOutcome learn_step(const LearnerState& state, const SentenceType& trigger,
                        Rng& rng);

// Stringset equality of the learner's current grammar against a target.
bool converged(const LearnerState& state, const Grammar& target);

}  // namespace gcg

#endif
