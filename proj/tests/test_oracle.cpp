#include "doctest.h"

#include "gcg/language.hpp"
#include "gcg/parser.hpp"
#include "oracle.hpp"

using namespace gcg;

TEST_CASE("oracle agrees with hand-traced permutation rotations") {
    // Closure sanity: rotating an arity-3 category three times is identity.
    auto c = Category::parse("((S\\NP:s)\\NP:o2)\\NP:o1");
    REQUIRE(c);
    auto perms = all_permutations(*c);
    CHECK(perms.size() == 3);
}

TEST_CASE("every fixture sentence type is unambiguous at the LF level") {
    // For every sentence type of every fixture language, the exhaustive
    // search finds at least one complete derivation and all of them carry
    // the same logical form as the deterministic parser's.
    for (auto l : all_canonical()) {
        auto g = decode(canonical(l));
        REQUIRE(g);
        for (const auto& t : g->types) {
            CAPTURE(canonical_name(l));
            CAPTURE(t.key());
            ParseOutcome det = parse(t, *g);
            REQUIRE(det.success);
            auto lfs = oracle::all_sentence_lfs(t.cats, g->config);
            REQUIRE(lfs.size() >= 1);
            for (const auto& lf : lfs) CHECK(lf == *det.lf);
        }
    }
}

TEST_CASE("oracle also validates the rule-ablated English grammars") {
    for (ParamId off : {ParamId::Perm, ParamId::Comp}) {
        PSettings ps = canonical(CanonicalLanguage::English);
        ps.set(off, PStatus::Absolute, false);
        auto g = decode(ps);
        REQUIRE(g);
        for (const auto& t : g->types) {
            ParseOutcome det = parse(t, *g);
            REQUIRE(det.success);
            auto lfs = oracle::all_sentence_lfs(t.cats, g->config);
            REQUIRE(lfs.size() >= 1);
            for (const auto& lf : lfs) CHECK(lf == *det.lf);
        }
    }
}
