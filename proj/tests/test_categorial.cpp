#include "doctest.h"

#include "gcg/category.hpp"
#include "gcg/logical_form.hpp"
#include "gcg/rules.hpp"

using namespace gcg;

namespace {

Category cat(const char* s) {
    auto c = Category::parse(s);
    REQUIRE(c.has_value());
    return *c;
}

Constituent lex(const char* s, int pos, VarSupply& vars) {
    Category c = cat(s);
    return Constituent{c, lexical_sem(pos, c.arity(), vars)};
}

}  // namespace

TEST_CASE("category text syntax round-trips") {
    const char* cases[] = {
        "S", "NP:s", "NP:o1", "(S\\NP:s)/NP:o1",
        "((S\\NP:s)\\NP:o2)\\NP:o1", "Rc\\(S\\NP:o1)", "(NP:s/Rc)/N",
    };
    for (const char* s : cases) {
        Category c = cat(s);
        CHECK(c.str() == s);
        CHECK(Category::parse(c.str()).value() == c);
    }
    CHECK(!Category::parse("Q").has_value());
    CHECK(!Category::parse("S/").has_value());
    CHECK(!Category::parse("(S\\NP").has_value());
    CHECK(!Category::parse("NP:x9").has_value());
}

TEST_CASE("left-associative nesting without parens") {
    CHECK(cat("S\\NP/NP") == cat("(S\\NP)/NP"));
}

TEST_CASE("equality is structural, matching is role-lenient") {
    CHECK(cat("NP:s") != cat("NP:o1"));
    CHECK(cat("NP:s") != cat("NP"));
    CHECK(cat("NP").matches(cat("NP:s")));
    CHECK(cat("NP:s").matches(cat("NP")));
    CHECK(!cat("NP:s").matches(cat("NP:o1")));
    CHECK(cat("(S\\NP)/NP").matches(cat("(S\\NP:s)/NP:o1")));
    CHECK(!cat("(S\\NP)/NP").matches(cat("(S\\NP)\\NP")));
}

TEST_CASE("application: FA then BA") {
    VarSupply vars;
    SUBCASE("FA: S/NP NP => S") {
        auto r = try_apply(lex("S/NP", 0, vars), lex("NP", 1, vars));
        REQUIRE(r.has_value());
        CHECK(r->second == RuleSchema::FA);
        CHECK(r->first.cat == cat("S"));
    }
    SUBCASE("no match when the functor faces the wrong way") {
        auto r = try_apply(lex("NP", 0, vars), lex("(S\\NP)/NP", 1, vars));
        CHECK(!r.has_value());
    }
    SUBCASE("BA consumes the left argument") {
        auto r = try_apply(lex("NP", 0, vars), lex("S\\NP", 1, vars));
        REQUIRE(r.has_value());
        CHECK(r->second == RuleSchema::BA);
        CHECK(r->first.cat == cat("S"));
    }
}

TEST_CASE("composition: FC and BC, depth one") {
    VarSupply vars;
    SUBCASE("FC: S/NP NP/N => S/N") {
        auto r = try_compose(lex("S/NP", 0, vars), lex("NP/N", 1, vars));
        REQUIRE(r.has_value());
        CHECK(r->second == RuleSchema::FC);
        CHECK(r->first.cat == cat("S/N"));
    }
    SUBCASE("BC: NP\\N S\\NP => S\\N") {
        auto r = try_compose(lex("NP\\N", 0, vars), lex("S\\NP", 1, vars));
        REQUIRE(r.has_value());
        CHECK(r->second == RuleSchema::BC);
        CHECK(r->first.cat == cat("S\\N"));
    }
    SUBCASE("slash mismatch composes nothing") {
        CHECK(!try_compose(lex("S/NP", 0, vars), lex("NP\\N", 1, vars)).has_value());
    }
}

TEST_CASE("permutation rotates the outermost argument innermost") {
    CHECK(permute_once(cat("(S\\NP)/NP")).value() == cat("(S/NP)\\NP"));
    CHECK(!permute_once(cat("S")).has_value());
    CHECK(!permute_once(cat("S\\NP")).has_value());
    CHECK(permute_once(cat("((S\\NP:s)\\NP:o2)\\NP:o1")).value() ==
          cat("((S\\NP:o1)\\NP:s)\\NP:o2"));
}

TEST_CASE("all_permutations enumerates distinct rotations from c") {
    auto perms = all_permutations(cat("(S\\NP)/NP"));
    REQUIRE(perms.size() == 2);
    CHECK(perms[0] == cat("(S\\NP)/NP"));
    CHECK(perms[1] == cat("(S/NP)\\NP"));

    CHECK(all_permutations(cat("NP")).size() == 1);
    CHECK(all_permutations(cat("((S\\NP:s)\\NP:o2)\\NP:o1")).size() == 3);
}

TEST_CASE("rotation closure: arity many rotations return the original") {
    const char* cases[] = {"(S\\NP)/NP", "((S\\NP:s)\\NP:o2)\\NP:o1",
                           "((S/PP)/NP:o1)\\NP:s", "(S\\NP:s)/Sc"};
    for (const char* s : cases) {
        Category c = cat(s);
        Category cur = c;
        for (int i = 0; i < c.arity(); ++i) cur = permute_once(cur).value_or(cur);
        CHECK(cur == c);
    }
}

TEST_CASE("direction preservation under rotation") {
    Category c = cat("((S/PP)/NP:o1)\\NP:s");
    auto before = c.args_outside_in();
    auto rotated = permute_once(c).value().args_outside_in();
    // Same multiset of (argument, direction) pairs.
    CHECK(before.size() == rotated.size());
    for (const auto& [arg, dir] : before) {
        bool found = false;
        for (const auto& [arg2, dir2] : rotated)
            if (arg2 == arg && dir2 == dir) { found = true; break; }
        CHECK(found);
    }
}

TEST_CASE("LF is invariant under permutation; consumption order changes") {
    VarSupply vars;
    // loves: (S\NP)/NP with semantics loves(subject, object)
    Constituent loves = lex("(S\\NP)/NP", 1, vars);
    Constituent kim = lex("NP", 0, vars);
    Constituent sandy = lex("NP", 2, vars);

    // Right-branching: FA with sandy, then BA with kim.
    auto vp = try_apply(loves, sandy);
    REQUIRE(vp);
    auto s1 = try_apply(kim, vp->first);
    REQUIRE(s1);

    // Left-branching: permute, BA with kim, then FA with sandy.
    auto p = permute_once(loves);
    REQUIRE(p);
    auto sv = try_apply(kim, *p);
    REQUIRE(sv);
    CHECK(sv->second == RuleSchema::BA);
    auto s2 = try_apply(sv->first, sandy);
    REQUIRE(s2);
    CHECK(s2->second == RuleSchema::FA);

    CHECK(s1->first.sem.close() == s2->first.sem.close());
    // love'(kim' sandy'): head position 1, args [0, 2].
    LogicalForm lf = s1->first.sem.close();
    REQUIRE(lf.kind() == LogicalForm::Kind::App);
    CHECK(lf.head().lex_position() == 1);
    REQUIRE(lf.args().size() == 2);
    CHECK(lf.args()[0].lex_position() == 0);
    CHECK(lf.args()[1].lex_position() == 2);
}

TEST_CASE("composition semantics feed the inner functor first") {
    VarSupply vars;
    Constituent sv = lex("S/NP", 0, vars);     // e.g. "kim loves"
    Constituent det = lex("NP/N", 1, vars);    // determiner
    Constituent noun = lex("N", 2, vars);

    auto composed = try_compose(sv, det);
    REQUIRE(composed);
    auto s1 = try_apply(composed->first, noun);
    REQUIRE(s1);

    auto np = try_apply(det, noun);
    REQUIRE(np);
    auto s2 = try_apply(sv, np->first);
    REQUIRE(s2);

    CHECK(s1->first.sem.close() == s2->first.sem.close());
}

TEST_CASE("every input position appears exactly once in a sentence LF") {
    VarSupply vars;
    Constituent loves = lex("(S\\NP)/NP", 1, vars);
    Constituent kim = lex("NP", 0, vars);
    Constituent sandy = lex("NP", 2, vars);
    auto vp = try_apply(loves, sandy);
    auto s = try_apply(kim, vp->first);
    std::vector<int> pos;
    s->first.sem.close().positions(pos);
    std::sort(pos.begin(), pos.end());
    CHECK(pos == std::vector<int>{0, 1, 2});
}
