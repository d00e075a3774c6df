// Decoded grammar: rule switches, atomic category inventory, resolved
// direction parameters, and the licensed lexical categories derived from the
// grammar's own construction templates.

#ifndef GCG_GRAMMAR_HPP
#define GCG_GRAMMAR_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gcg/category.hpp"

namespace gcg {

// The nine direction parameters, most general first.
enum class DirParam : std::uint8_t {
    Gen, N, Subj, Obj, Mod, Spec, Relcl, Adpos, Compl
};
inline constexpr int kNumDirParams = 9;

struct GrammarConfig {
    bool comp = false;  // composition rule available (application always is)
    bool perm = false;  // generalized weak permutation available
    bool v1 = false;    // main-clause verbs subject-outermost
    bool v2 = false;    // main-clause verbs: non-subject arguments rightward
    std::array<bool, 6> atom_on{};                      // indexed by Atom
    std::array<std::optional<Dir>, kNumDirParams> dir{};  // resolved

    bool atom(Atom a) const { return atom_on[static_cast<std::size_t>(a)]; }
    std::optional<Dir> d(DirParam p) const {
        return dir[static_cast<std::size_t>(p)];
    }
};

struct SentenceType {
    int template_id = 0;
    std::vector<Category> cats;
    std::string name;

    std::string key() const { return categories_str(cats); }
    std::size_t size() const { return cats.size(); }
};

// A usable grammar: config plus its generated sentence types and the lexical
// categories they license.
struct Grammar {
    GrammarConfig config;
    std::vector<SentenceType> types;
    std::vector<Category> lexicon;

    // Atoms are licensed by the category inventory alone; functor categories
    // must match (role-leniently) some lexical entry.
    bool licensed(const Category& c) const;
    bool full() const { return types.size() == 12; }
    // Canonical sorted key of the generated stringset.
    std::string stringset_key() const;
};

bool same_stringset(const Grammar& a, const Grammar& b);

}  // namespace gcg

#endif
