#include "doctest.h"

#include "gcg/experiments.hpp"

using namespace gcg;

TEST_CASE("fixture names resolve, including ablations") {
    CHECK(fixture_by_name("English").has_value());
    CHECK(fixture_by_name("SVO").has_value());
    CHECK(fixture_by_name("Japanese").has_value());
    CHECK(fixture_by_name("English-noperm").has_value());
    CHECK(fixture_by_name("English-nocomp").has_value());
    CHECK(fixture_by_name("Mixed").has_value());
    CHECK(!fixture_by_name("Klingon").has_value());

    auto np = fixture_by_name("English-noperm");
    CHECK(np->at(ParamId::Perm).value == false);
}

TEST_CASE("learn-effect runs deterministically under a fixed seed") {
    LearnEffectConfig cfg;
    cfg.language = "English";
    cfg.kind = LearnerKind::Default;
    cfg.trials = 3;
    cfg.max_inputs = 300;
    cfg.seed = 1234;
    LearnEffectReport a = run_learn_effect(cfg);
    LearnEffectReport b = run_learn_effect(cfg);
    CHECK(a.inputs_to_convergence == b.inputs_to_convergence);
    CHECK(a.median_inputs == b.median_inputs);
}

TEST_CASE("learn-effect rejects bad configuration") {
    LearnEffectConfig cfg;
    cfg.language = "Klingon";
    CHECK_THROWS(run_learn_effect(cfg));
    cfg.language = "English";
    cfg.trials = 0;
    CHECK_THROWS(run_learn_effect(cfg));
}

TEST_CASE("wml-rank orders English above its permutation-free twin") {
    WmlRankReport rep = run_wml_rank({"English", "English-noperm"});
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].mean_wml < rep.rows[1].mean_wml);
    CHECK(rep.rows[0].types == rep.rows[1].types);
}

TEST_CASE("pref-evolution small smoke run is deterministic") {
    PrefEvolutionConfig cfg;
    cfg.language = "English";
    cfg.runs = 1;
    cfg.cycles = 3;
    cfg.interactions_per_cycle = 120;
    cfg.population_size = 8;
    cfg.seed = 77;
    PrefEvolutionReport a = run_pref_evolution(cfg);
    PrefEvolutionReport b = run_pref_evolution(cfg);
    REQUIRE(a.runs.size() == 1);
    CHECK(a.runs[0].default_share == b.runs[0].default_share);
    CHECK(a.runs[0].preference == b.runs[0].preference);
}

TEST_CASE("emergence smoke run reports status shares") {
    EmergenceConfig cfg;
    cfg.mode = EmergenceMode::Random;
    cfg.runs = 1;
    cfg.cycles = 3;
    cfg.interactions_per_cycle = 100;
    cfg.population_size = 8;
    cfg.seed = 5;
    EmergenceReport rep = run_emergence(cfg);
    REQUIRE(rep.runs.size() == 1);
    const auto& r = rep.runs[0];
    double sum = r.start_shares.absolute + r.start_shares.defaulted +
                 r.start_shares.unset;
    CHECK(sum == doctest::Approx(1.0));
}
