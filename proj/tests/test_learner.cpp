#include "doctest.h"

#include "gcg/learner.hpp"

using namespace gcg;

namespace {

const SentenceType& type_of(const Grammar& g, int template_id) {
    for (const auto& t : g.types)
        if (t.template_id == template_id) return t;
    REQUIRE(false);
    static SentenceType dummy;
    return dummy;
}

int diff_count(const PSettings& a, const PSettings& b) {
    int n = 0;
    for (int i = 0; i < kNumParams; ++i)
        if (a.at(i).value != b.at(i).value || a.at(i).status != b.at(i).status) ++n;
    return n;
}

}  // namespace

TEST_CASE("update rewrites the first untouched default or unset entry") {
    Rng rng(7);
    PSettings ps = default_learner_genome();
    std::array<bool, kNumParams> touched{};

    auto r = update(ps, touched, rng);
    REQUIRE(r.has_value());
    // First non-absolute entry in canonical order is comp (D, F) -> T.
    CHECK(r->index == static_cast<int>(ParamId::Comp));
    CHECK(r->settings.at(ParamId::Comp).value == true);

    touched[static_cast<std::size_t>(ParamId::Comp)] = true;
    r = update(ps, touched, rng);
    REQUIRE(r.has_value());
    CHECK(r->index == static_cast<int>(ParamId::Perm));

    SUBCASE("direction defaults flip between L and R") {
        std::array<bool, kNumParams> t2{};
        for (int i = 0; i < static_cast<int>(ParamId::Gen); ++i)
            t2[static_cast<std::size_t>(i)] = true;
        auto g = update(ps, t2, rng);
        REQUIRE(g.has_value());
        CHECK(g->index == static_cast<int>(ParamId::Gen));
        CHECK(g->settings.at(ParamId::Gen).value == true);  // R -> L
    }

    SUBCASE("all settable entries touched reports no updatable parameter") {
        std::array<bool, kNumParams> all{};
        all.fill(true);
        CHECK(!update(ps, all, rng).has_value());
    }

    SUBCASE("an all-absolute genome has no updatable parameter") {
        std::array<bool, kNumParams> none{};
        CHECK(!update(canonical(CanonicalLanguage::English), none, rng).has_value());
    }
}

TEST_CASE("error-driven: parsed triggers change nothing") {
    Rng rng(3);
    auto eng = decode(canonical(CanonicalLanguage::English));
    REQUIRE(eng);
    LearnerState s = LearnerState::from_genome(default_learner_genome());
    // The default learner's minimal SVO grammar parses English transitives.
    LearnOutcome o = learn_step(s, type_of(*eng, 2), rng);
    CHECK(o.admissible);
    CHECK(o.parsed);
    CHECK(o.updated_index == -1);
    CHECK(diff_count(o.state.current, s.current) == 0);
}

TEST_CASE("a Japanese transitive flips exactly one direction parameter") {
    Rng rng(11);
    auto jap = decode(canonical(CanonicalLanguage::Japanese));
    REQUIRE(jap);
    LearnerState s = LearnerState::from_genome(default_learner_genome());
    s.memory_limited = false;
    LearnOutcome o = learn_step(s, type_of(*jap, 2), rng);
    CHECK(o.updated_index == static_cast<int>(ParamId::Obj));
    CHECK(o.state.current.at(ParamId::Obj).value == true);  // L
    CHECK(diff_count(o.state.current, s.current) == 1);
    // And the trigger now parses.
    auto g = decode(o.state.current);
    REQUIRE(g);
    CHECK(parse(type_of(*jap, 2), *g).success);
}

TEST_CASE("at most one parameter changes per trigger") {
    auto jap = decode(canonical(CanonicalLanguage::Japanese));
    REQUIRE(jap);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        LearnerState s = LearnerState::from_genome(unset_learner_genome());
        std::uniform_int_distribution<std::size_t> pick(0, jap->types.size() - 1);
        for (int step = 0; step < 50; ++step) {
            const SentenceType& t = jap->types[pick(rng)];
            LearnOutcome o = learn_step(s, t, rng);
            CHECK(diff_count(o.state.current, s.current) <= 1);
            s = o.state;
        }
    }
}

TEST_CASE("one-shot resetting over a full learning trace") {
    auto eng = decode(canonical(CanonicalLanguage::English));
    REQUIRE(eng);
    Rng rng(5);
    LearnerState s = LearnerState::from_genome(unset_learner_genome());
    std::vector<int> change_counts(kNumParams, 0);
    std::uniform_int_distribution<std::size_t> pick(0, eng->types.size() - 1);
    for (int step = 0; step < 400; ++step) {
        s.age_cycles = step / 10;
        LearnOutcome o = learn_step(s, eng->types[pick(rng)], rng);
        for (int i = 0; i < kNumParams; ++i)
            if (o.state.current.at(i).value != s.current.at(i).value)
                ++change_counts[static_cast<std::size_t>(i)];
        s = o.state;
    }
    for (int i = 0; i < kNumParams; ++i) CHECK(change_counts[static_cast<std::size_t>(i)] <= 1);
}

TEST_CASE("absolute settings never differ between genome and current") {
    auto jap = decode(canonical(CanonicalLanguage::Japanese));
    REQUIRE(jap);
    Rng rng(17);
    LearnerState s = LearnerState::from_genome(default_learner_genome());
    std::uniform_int_distribution<std::size_t> pick(0, jap->types.size() - 1);
    for (int step = 0; step < 300; ++step) {
        s.age_cycles = step / 10;
        s = learn_step(s, jap->types[pick(rng)], rng).state;
    }
    for (int i = 0; i < kNumParams; ++i) {
        if (s.genome.at(i).status != PStatus::Absolute) continue;
        CHECK(s.current.at(i).value == s.genome.at(i).value);
        CHECK(s.current.at(i).status == PStatus::Absolute);
    }
}

TEST_CASE("memory gate: capacity grows with age and admits monotonically") {
    CHECK(wm_capacity(0) == 6);
    CHECK(wm_capacity(3) == 24);

    auto eng = decode(canonical(CanonicalLanguage::English));
    REQUIRE(eng);

    // The right-branching transitive peaks at 6: admissible at age 0.
    PSettings noperm = canonical(CanonicalLanguage::English);
    noperm.set(ParamId::Perm, PStatus::Absolute, false);
    LearnerState adultish;
    adultish.genome = noperm;
    adultish.current = noperm;
    adultish.memory_limited = true;
    adultish.age_cycles = 0;
    CHECK(admissible_trigger(adultish, type_of(*eng, 2)));

    // Find peaks over the whole language: all types admissible by age 3.
    auto g = decode(noperm);
    REQUIRE(g);
    int worst = 0;
    for (const auto& t : g->types) {
        ParseOutcome o = parse(t, *g);
        worst = std::max(worst, o.peak_wml);
        adultish.age_cycles = 3;
        CHECK(admissible_trigger(adultish, t));
    }
    CHECK(worst > 6);  // some types are gated early
    CHECK(worst <= wm_capacity(3));

    SUBCASE("gate off admits everything") {
        adultish.memory_limited = false;
        adultish.age_cycles = 0;
        for (const auto& t : g->types) CHECK(admissible_trigger(adultish, t));
    }
}

TEST_CASE("memory-gate monotonicity in age") {
    auto eng = decode(canonical(CanonicalLanguage::English));
    REQUIRE(eng);
    LearnerState s;
    s.genome = canonical(CanonicalLanguage::English);
    s.current = s.genome;
    s.memory_limited = true;
    for (const auto& t : eng->types) {
        bool admitted_before = false;
        for (int age = 0; age <= 4; ++age) {
            s.age_cycles = age;
            bool a = admissible_trigger(s, t);
            if (admitted_before) CHECK(a);
            admitted_before = admitted_before || a;
        }
        CHECK(admitted_before);
    }
}

TEST_CASE("convergence is stringset equality") {
    auto eng = decode(canonical(CanonicalLanguage::English));
    REQUIRE(eng);
    LearnerState s;
    s.genome = canonical(CanonicalLanguage::English);
    s.current = s.genome;
    CHECK(converged(s, *eng));

    LearnerState fresh = LearnerState::from_genome(unset_learner_genome());
    CHECK(!converged(fresh, *eng));
}

TEST_CASE("default learner converges on English within the session budget") {
    auto eng = decode(canonical(CanonicalLanguage::English));
    REQUIRE(eng);
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed * 97 + 13);
        LearnerState s = LearnerState::from_genome(default_learner_genome());
        std::uniform_int_distribution<std::size_t> pick(0, eng->types.size() - 1);
        for (int input = 1; input <= 400; ++input) {
            s.age_cycles = (input - 1) / 10;
            s = learn_step(s, eng->types[pick(rng)], rng).state;
            if (input % 10 == 0 && converged(s, *eng)) {
                ++successes;
                break;
            }
        }
    }
    CHECK(successes == 10);
}

TEST_CASE("unset learner converges on Japanese within the session budget") {
    auto jap = decode(canonical(CanonicalLanguage::Japanese));
    REQUIRE(jap);
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed * 131 + 7);
        LearnerState s = LearnerState::from_genome(unset_learner_genome());
        std::uniform_int_distribution<std::size_t> pick(0, jap->types.size() - 1);
        for (int input = 1; input <= 400; ++input) {
            s.age_cycles = (input - 1) / 10;
            s = learn_step(s, jap->types[pick(rng)], rng).state;
            if (input % 10 == 0 && converged(s, *jap)) {
                ++successes;
                break;
            }
        }
    }
    CHECK(successes == 10);
}
