#include "doctest.h"

#include "gcg/language.hpp"
#include "gcg/parser.hpp"

using namespace gcg;

namespace {

GrammarPtr english() {
    auto g = decode(canonical(CanonicalLanguage::English));
    REQUIRE(g);
    return g;
}

GrammarPtr english_without(ParamId p) {
    PSettings ps = canonical(CanonicalLanguage::English);
    ps.set(p, PStatus::Absolute, false);
    auto g = decode(ps);
    REQUIRE(g);
    return g;
}

std::vector<Category> cats(const char* text) {
    auto v = parse_categories(text);
    REQUIRE(v.has_value());
    return *v;
}

}  // namespace

TEST_CASE("worked example without permutation: WML record 1,3,6,5,1") {
    auto g = english_without(ParamId::Perm);
    ParseOutcome o = parse(cats("NP (S\\NP)/NP NP"), *g);
    REQUIRE(o.success);
    CHECK(o.wml_record == std::vector<int>{1, 3, 6, 5, 1});
    CHECK(o.total_wml == 16);
    CHECK(o.peak_wml == 6);
    // Shift, Shift, Shift, Reduce(FA), Reduce(BA), Halt.
    REQUIRE(o.steps.size() == 6);
    CHECK(o.steps[0].kind == StepKind::Shift);
    CHECK(o.steps[1].kind == StepKind::Shift);
    CHECK(o.steps[2].kind == StepKind::Shift);
    CHECK(o.steps[3].kind == StepKind::Reduce);
    CHECK(o.steps[3].rule == RuleSchema::FA);
    CHECK(!o.steps[3].used_permutation());
    CHECK(o.steps[4].rule == RuleSchema::BA);
    CHECK(o.steps[5].kind == StepKind::Halt);
}

TEST_CASE("worked example with permutation: total WML 9") {
    auto g = english();
    ParseOutcome o = parse(cats("NP (S\\NP)/NP NP"), *g);
    REQUIRE(o.success);
    CHECK(o.total_wml == 9);
    // Shift, Shift, Reduce(P+BA), Shift, Reduce(FA), Halt.
    REQUIRE(o.steps.size() == 6);
    CHECK(o.steps[2].kind == StepKind::Reduce);
    CHECK(o.steps[2].rule == RuleSchema::BA);
    CHECK(o.steps[2].used_permutation());
    CHECK(o.steps[4].rule == RuleSchema::FA);
    CHECK(!o.steps[4].used_permutation());
}

TEST_CASE("the two derivations build identical logical forms") {
    auto with_p = parse(cats("NP (S\\NP)/NP NP"), *english());
    auto without_p = parse(cats("NP (S\\NP)/NP NP"), *english_without(ParamId::Perm));
    REQUIRE(with_p.success);
    REQUIRE(without_p.success);
    REQUIRE(with_p.lf.has_value());
    CHECK(*with_p.lf == *without_p.lf);
}

TEST_CASE("single NP does not halt as a sentence") {
    ParseOutcome o = parse(cats("NP"), *english());
    CHECK(!o.success);
    CHECK(o.failure == ParseFailure::NoDerivation);
    CHECK(o.steps.back().kind == StepKind::Halt);
}

TEST_CASE("empty input fails cleanly") {
    ParseOutcome o = parse(std::vector<Category>{}, *english());
    CHECK(!o.success);
    CHECK(o.failure == ParseFailure::EmptyInput);
}

TEST_CASE("unlicensed functor categories fail before any step") {
    // A Japanese-style transitive verb is not in the English lexicon.
    ParseOutcome o = parse(cats("NP:s NP:o1 (S\\NP:s)\\NP:o1"), *english());
    CHECK(!o.success);
    CHECK(o.failure == ParseFailure::Unlicensed);
    CHECK(o.steps.empty());
    CHECK(o.total_wml == 0);
}

TEST_CASE("wml_of_sentence_type and mean_wml") {
    auto g = english();
    SentenceType st;
    st.cats = cats("NP (S\\NP)/NP NP");
    CHECK(wml_of_sentence_type(st, *g) == 9);
    CHECK(wml_of_sentence_type(st, *english_without(ParamId::Perm)) == 16);

    SentenceType failing;
    failing.cats = cats("NP:s NP:o1 (S\\NP:s)\\NP:o1");
    CHECK_THROWS(wml_of_sentence_type(failing, *g));
    CHECK_THROWS(mean_wml({failing}, *g));
    CHECK(mean_wml({st}, *g) == doctest::Approx(9.0));
    CHECK(mean_wml({st, st}, *g) == doctest::Approx(9.0));
}

TEST_CASE("single-word sentence: one shift, WML 1") {
    // A grammar-independent hand check of the WML algorithm: the S category
    // is atomic and licensed by the category inventory.
    auto g = english();
    SentenceType st;
    st.cats = cats("S");
    CHECK(wml_of_sentence_type(st, *g) == 1);
}

TEST_CASE("determinism: identical inputs give step-identical traces") {
    auto g = english();
    auto a = parse(cats("NP (S\\NP)/NP NP"), *g);
    auto b = parse(cats("NP (S\\NP)/NP NP"), *g);
    REQUIRE(a.steps.size() == b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        CHECK(a.steps[i].kind == b.steps[i].kind);
        CHECK(a.steps[i].stack_after == b.steps[i].stack_after);
    }
    CHECK(a.wml_record == b.wml_record);
}

TEST_CASE("greedy: no shift where a reduce was possible") {
    auto g = english();
    for (const auto& st : g->types) {
        ParseOutcome o = parse(st, *g);
        REQUIRE(o.success);
        // Replay: at every Shift step, verify no reduction applied to the
        // pre-shift stack.  We approximate by checking the recorded trace:
        // a Reduce immediately after a Shift whose pre-state allowed that
        // same Reduce would contradict determinism of the implementation,
        // which tries Reduce first; here we check the parser's own
        // invariant that consecutive reduces happen eagerly.
        // Structural check: every Reduce pops exactly one stack level.
        int depth = 0;
        for (const auto& s : o.steps) {
            if (s.kind == StepKind::Shift) depth += 1;
            else if (s.kind == StepKind::Reduce) depth -= 1;
        }
        CHECK(depth == 1);
    }
}

TEST_CASE("WML bookkeeping: cell ages sum to the recorded value") {
    // After any step, each cell's WML equals steps elapsed since its push,
    // counting the pushing step.  Equivalent check: the recorded sums obey
    // sum_t = sum_{t-1} + depth_t where depth resets with each push/pop.
    auto g = english_without(ParamId::Perm);
    ParseOutcome o = parse(cats("NP (S\\NP)/NP NP"), *g);
    REQUIRE(o.success);
    int depth = 0;
    std::vector<int> ages;
    std::size_t w = 0;
    for (const auto& s : o.steps) {
        if (s.kind == StepKind::Halt) break;
        if (s.kind == StepKind::Shift) {
            ages.push_back(0);
        } else {
            ages.pop_back();
            ages.pop_back();
            ages.push_back(0);
        }
        int sum = 0;
        for (int& a : ages) sum += ++a;
        REQUIRE(w < o.wml_record.size());
        CHECK(o.wml_record[w++] == sum);
        depth = static_cast<int>(ages.size());
    }
    CHECK(depth == 1);
}

TEST_CASE("monotone cost: an extra early shift never lowers total WML") {
    // Compare a bare transitive clause against the same clause embedded
    // after sentence-taking prefixes Sc/S and a complementizer-like chain:
    // every added leading shift keeps all later cells on the stack longer.
    auto g = english();
    long base = parse(cats("NP (S\\NP)/NP NP"), *g).total_wml;
    Grammar permissive = *g;
    auto extra = parse_categories("S/S NP (S\\NP)/NP NP");
    REQUIRE(extra.has_value());
    permissive.lexicon.push_back((*extra)[0]);
    long padded = parse(*extra, permissive).total_wml;
    CHECK(padded > base);
}
