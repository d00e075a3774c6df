// The five GCG rule schemata over (category, semantics) pairs:
// forward/backward application, forward/backward composition, and
// generalized weak permutation as cyclic argument rotation.

#ifndef GCG_RULES_HPP
#define GCG_RULES_HPP

#include <optional>
#include <vector>

#include "gcg/category.hpp"
#include "gcg/logical_form.hpp"

namespace gcg {

enum class RuleSchema : std::uint8_t { FA, BA, FC, BC, Permute };

const char* rule_name(RuleSchema r);

struct Constituent {
    Category cat;
    SemValue sem;
};

// FA: X/Y Y => X, then BA: Y X\Y => X.  Left operand precedes right in the
// input string.  Absent result means no schema matched.
std::optional<std::pair<Constituent, RuleSchema>> try_apply(const Constituent& left,
                                                            const Constituent& right);

// FC: X/Y Y/Z => X/Z, then BC: Y\Z X\Y => X\Z (depth-1 composition).
std::optional<std::pair<Constituent, RuleSchema>> try_compose(const Constituent& left,
                                                              const Constituent& right);

// One cyclic rotation: outermost argument becomes innermost, every argument
// keeps its own slash.  Absent for atoms and arity-1 functors.
std::optional<Category> permute_once(const Category& c);
std::optional<Constituent> permute_once(const Constituent& c);

// All distinct rotations starting from c itself (at most arity(c) of them).
std::vector<Category> all_permutations(const Category& c);
std::vector<Constituent> all_permutations(const Constituent& c);

}  // namespace gcg

#endif
