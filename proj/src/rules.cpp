#include "gcg/rules.hpp"

namespace gcg {

const char* rule_name(RuleSchema r) {
    switch (r) {
        case RuleSchema::FA: return "FA";
        case RuleSchema::BA: return "BA";
        case RuleSchema::FC: return "FC";
        case RuleSchema::BC: return "BC";
        case RuleSchema::Permute: return "P";
    }
    return "?";
}

std::optional<std::pair<Constituent, RuleSchema>> try_apply(const Constituent& left,
                                                            const Constituent& right) {
    // FA: left = X/Y, right = Y
    if (left.cat.is_functor() && left.cat.dir() == Dir::Right &&
        left.cat.argument().matches(right.cat)) {
        Constituent out{left.cat.result(), apply_sem(left.sem, right.sem)};
        return std::make_pair(out, RuleSchema::FA);
    }
    // BA: right = X\Y, left = Y
    if (right.cat.is_functor() && right.cat.dir() == Dir::Left &&
        right.cat.argument().matches(left.cat)) {
        Constituent out{right.cat.result(), apply_sem(right.sem, left.sem)};
        return std::make_pair(out, RuleSchema::BA);
    }
    return std::nullopt;
}

std::optional<std::pair<Constituent, RuleSchema>> try_compose(const Constituent& left,
                                                              const Constituent& right) {
    // FC: left = X/Y, right = Y/Z  =>  X/Z
    if (left.cat.is_functor() && left.cat.dir() == Dir::Right &&
        right.cat.is_functor() && right.cat.dir() == Dir::Right &&
        left.cat.argument().matches(right.cat.result())) {
        Category cat = Category::functor(left.cat.result(), Dir::Right,
                                         right.cat.argument());
        Constituent out{cat, compose_sem(left.sem, right.sem)};
        return std::make_pair(out, RuleSchema::FC);
    }
    // BC: left = Y\Z, right = X\Y  =>  X\Z
    if (left.cat.is_functor() && left.cat.dir() == Dir::Left &&
        right.cat.is_functor() && right.cat.dir() == Dir::Left &&
        right.cat.argument().matches(left.cat.result())) {
        Category cat = Category::functor(right.cat.result(), Dir::Left,
                                         left.cat.argument());
        Constituent out{cat, compose_sem(right.sem, left.sem)};
        return std::make_pair(out, RuleSchema::BC);
    }
    return std::nullopt;
}

std::optional<Category> permute_once(const Category& c) {
    if (c.arity() < 2) return std::nullopt;
    auto args = c.args_outside_in();
    // Outermost argument moves innermost; everything else shifts outward.
    std::vector<std::pair<Category, Dir>> rotated(args.begin() + 1, args.end());
    rotated.push_back(args.front());
    return Category::build(c.base(), rotated);
}

std::optional<Constituent> permute_once(const Constituent& c) {
    auto cat = permute_once(c.cat);
    if (!cat) return std::nullopt;
    return Constituent{*cat, permute_sem(c.sem)};
}

std::vector<Category> all_permutations(const Category& c) {
    std::vector<Category> out{c};
    Category cur = c;
    int n = c.arity();
    for (int i = 1; i < n; ++i) {
        auto next = permute_once(cur);
        if (!next) break;
        if (*next == c) break;
        bool seen = false;
        for (const auto& p : out)
            if (p == *next) { seen = true; break; }
        if (seen) break;
        out.push_back(*next);
        cur = *next;
    }
    return out;
}

std::vector<Constituent> all_permutations(const Constituent& c) {
    std::vector<Constituent> out{c};
    Constituent cur = c;
    int n = c.cat.arity();
    for (int i = 1; i < n; ++i) {
        auto next = permute_once(cur);
        if (!next) break;
        if (next->cat == c.cat) break;
        bool seen = false;
        for (const auto& p : out)
            if (p.cat == next->cat) { seen = true; break; }
        if (seen) break;
        out.push_back(*next);
        cur = *next;
    }
    return out;
}

}  // namespace gcg
