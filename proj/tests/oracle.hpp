// Test-only exhaustive derivation search: a CKY-style enumeration of every
// constituent derivable from a category string under the enabled rule
// schemata, with permutation closure applied to each cell.  Independent of
// the deterministic shift-reduce parser it is used to check.

#ifndef GCG_TESTS_ORACLE_HPP
#define GCG_TESTS_ORACLE_HPP

#include <vector>

#include "gcg/grammar.hpp"
#include "gcg/logical_form.hpp"

namespace gcg::oracle {

// Logical forms of every complete derivation of the input to the sentence
// category, deduplicated.
std::vector<LogicalForm> all_sentence_lfs(const std::vector<Category>& input,
                                          const GrammarConfig& rules);

}  // namespace gcg::oracle

#endif
