#include "gcg/learner.hpp"

namespace gcg {

LearnerState LearnerState::from_genome(const PSettings& g, bool memory_limited) {
    LearnerState s;
    s.genome = g;
    s.current = g;
    s.memory_limited = memory_limited;
    return s;
}

int wm_capacity(int age_cycles) { return 6 + 6 * age_cycles; }

std::optional<UpdateResult> update(const PSettings& ps,
                                   const std::array<bool, kNumParams>& touched,
                                   Rng& rng, int from_index) {
    for (int i = from_index; i < kNumParams; ++i) {
        const PSetting& e = ps.at(i);
        if (touched[static_cast<std::size_t>(i)]) continue;
        if (e.status == PStatus::Absolute) continue;
        UpdateResult r{ps, i};
        PSetting& t = r.settings.at(i);
        if (e.status == PStatus::Default) {
            t.value = !*e.value;  // D 1 -> 0, D 0 -> 1
        } else {
            t.value = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
        }
        return r;
    }
    return std::nullopt;
}

bool admissible_trigger(const LearnerState& state, const SentenceType& st) {
    if (!state.memory_limited) return true;
    auto g = decode(state.current);
    if (!g) return true;
    // The gate rates the type's intrinsic processing cost: the machine runs
    // over the input under the learner's rule switches with lexical
    // licensing disabled, and the peak stack load must fit in memory.
    ParseOutcome o = parse(st, *g, /*check_licensing=*/false);
    return o.peak_wml <= wm_capacity(state.age_cycles);
}

namespace {

ParamId category_param(Atom a) {
    switch (a) {
        case Atom::N: return ParamId::N;
        case Atom::Rc: return ParamId::Rc;
        case Atom::PP: return ParamId::PP;
        case Atom::Sc: return ParamId::Sc;
        default: return ParamId::S;
    }
}

void collect_atoms(const Category& c, std::array<bool, 6>& seen) {
    if (c.is_atom()) {
        seen[static_cast<std::size_t>(c.atom_kind())] = true;
    } else {
        collect_atoms(c.result(), seen);
        collect_atoms(c.argument(), seen);
    }
}

// First unset, untouched category switch whose atom occurs in the trigger.
std::optional<ParamId> unseen_category(const LearnerState& state,
                                       const SentenceType& trigger) {
    std::array<bool, 6> seen{};
    for (const auto& c : trigger.cats) collect_atoms(c, seen);
    for (Atom a : {Atom::N, Atom::Rc, Atom::PP, Atom::Sc}) {
        if (!seen[static_cast<std::size_t>(a)]) continue;
        ParamId p = category_param(a);
        const PSetting& e = state.current.at(p);
        if (e.status == PStatus::Unset &&
            !state.touched[static_cast<std::size_t>(p)])
            return p;
    }
    return std::nullopt;
}

}  // namespace

LearnOutcome learn_step(const LearnerState& state, const SentenceType& trigger,
                        Rng& rng) {
    LearnOutcome out;
    out.state = state;
    if (!admissible_trigger(state, trigger)) return out;
    out.admissible = true;

    auto parses_under = [&](const PSettings& ps) {
        auto g = decode(ps);
        return g && parse(trigger, *g).success;
    };

    if (parses_under(state.current)) {
        out.parsed = true;
        return out;
    }

    // An atomic category heard in the input is direct evidence that the
    // category exists: the first unset category switch it exhibits is set
    // outright, consuming this trigger's one-parameter budget.
    if (auto cp = unseen_category(state, trigger)) {
        // Status stays Unset; the touched flag records the one-shot setting.
        out.state.current.at(*cp).value = true;
        out.state.touched[static_cast<std::size_t>(*cp)] = true;
        out.updated_index = static_cast<int>(*cp);
        return out;
    }

    // Reset the first (most general) untouched default or unset parameter
    // whose rewritten value makes the trigger parse; candidates that do not
    // rescue it are reverted and the search moves on down the canonical
    // order.  Default entries flip to the opposite value.  Unset entries
    // draw a random value; a memory-limited learner holds only that one
    // hypothesis per trigger, while an unlimited learner can weigh the
    // complementary value against the trigger as well.
    int from = 0;
    while (auto cand = update(state.current, state.touched, rng, from)) {
        bool ok = parses_under(cand->settings);
        if (!ok && !state.memory_limited &&
            state.current.at(cand->index).status == PStatus::Unset) {
            PSetting& e = cand->settings.at(cand->index);
            e.value = !*e.value;
            ok = parses_under(cand->settings);
        }
        if (ok) {
            out.state.current = cand->settings;
            out.state.touched[static_cast<std::size_t>(cand->index)] = true;
            out.updated_index = cand->index;
            return out;
        }
        out.reverted = true;
        from = cand->index + 1;
    }
    return out;
}

bool converged(const LearnerState& state, const Grammar& target) {
    auto g = decode(state.current);
    if (!g) return false;
    return same_stringset(*g, target);
}

}  // namespace gcg
