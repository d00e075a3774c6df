// Grammar decoding and the twelve construction templates that realize a
// grammar as a finite set of degree-1 sentence types.

#ifndef GCG_LANGUAGE_HPP
#define GCG_LANGUAGE_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcg/grammar.hpp"
#include "gcg/psettings.hpp"

namespace gcg {

using GrammarPtr = std::shared_ptr<const Grammar>;

// Decode a p-setting sequence into a grammar.  Returns nullptr for
// impossible grammars (no application, missing S or NP, clashing v1+v2, or
// unresolvable directions); `why` receives the reason.  Results are
// memoized per effective configuration.
GrammarPtr decode(const PSettings& ps, std::string* why = nullptr);

// The construction templates available under a config, as sentence types
// verified to parse.  Used by decode; exposed for tests and tools.
std::vector<SentenceType> generate_language(const GrammarConfig& config);

enum class CanonicalLanguage {
    English, Welsh, Malagasy, Tagalog, Japanese, German, Hixkaryana, OSV
};

const std::vector<CanonicalLanguage>& all_canonical();
const char* canonical_name(CanonicalLanguage l);
const char* canonical_family(CanonicalLanguage l);  // SVO, SVOv1, ...
std::optional<CanonicalLanguage> canonical_from_name(std::string_view name);

// Fixture genome (all entries absolute except where noted) for a named
// language.
PSettings canonical(CanonicalLanguage l);
inline PSettings canonical(std::string_view name) {
    auto l = canonical_from_name(name);
    if (!l) throw std::invalid_argument("unknown language: " + std::string(name));
    return canonical(*l);
}

// Hypothetical SOV clausal order with English-style phrasal syntax.
PSettings mixed_clausal_fixture();

// Family + subset label for an arbitrary grammar, e.g. "SOV-v2-N-COMP".
std::string language_label(const Grammar& g);

struct GrammarEnumeration {
    // One representative genome per distinct generated stringset.
    std::vector<PSettings> representatives;
    std::size_t raw_valid = 0;   // valid combinations before deduplication
    std::size_t distinct = 0;    // after stringset deduplication
};

// Enumerate all value combinations of the non-core binary parameters (all
// entries absolute), keep those that decode to valid harmonic grammars, and
// deduplicate by generated stringset.
GrammarEnumeration enumerate_grammars();

// Multiset containment of sentence-type category strings.
bool is_subset_language(const std::vector<SentenceType>& a,
                        const std::vector<SentenceType>& b);

}  // namespace gcg

#endif
