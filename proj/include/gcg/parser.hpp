// Deterministic bounded-context shift-reduce parser with working-memory-load
// accounting.  Reduce is tried before Shift; within Reduce, application
// before composition before permutation-assisted retries.

#ifndef GCG_PARSER_HPP
#define GCG_PARSER_HPP

#include <optional>
#include <string>
#include <vector>

#include "gcg/grammar.hpp"
#include "gcg/logical_form.hpp"
#include "gcg/rules.hpp"

namespace gcg {

enum class StepKind : std::uint8_t { Shift, Reduce, Halt };

struct Step {
    StepKind kind;
    int shift_index = -1;          // Shift: input position moved
    RuleSchema rule = RuleSchema::FA;  // Reduce
    int perm_top = 0;   // rotations applied to the top cell before the rule
    int perm_next = 0;  // rotations applied to the cell below
    bool halt_success = false;
    std::string stack_after;  // top-first rendering, for traces

    bool used_permutation() const { return perm_top > 0 || perm_next > 0; }
    std::string label() const;  // "Shift", "Reduce (P+BA)", "Halt", ...
};

enum class ParseFailure : std::uint8_t { None, EmptyInput, Unlicensed, NoDerivation };

struct ParseOutcome {
    bool success = false;
    ParseFailure failure = ParseFailure::None;
    std::vector<Step> steps;
    std::optional<LogicalForm> lf;
    std::vector<int> wml_record;  // one entry per Shift/Reduce step
    long total_wml = 0;
    int peak_wml = 0;
};

// With check_licensing off the machine runs over arbitrary categories under
// g's rule switches alone; used to rate a type's intrinsic complexity.
ParseOutcome parse(const std::vector<Category>& input, const Grammar& g,
                   bool check_licensing = true);
inline ParseOutcome parse(const SentenceType& st, const Grammar& g,
                          bool check_licensing = true) {
    return parse(st.cats, g, check_licensing);
}

// Total WML of the deterministic derivation; throws std::runtime_error if the
// type does not parse under g.
long wml_of_sentence_type(const SentenceType& st, const Grammar& g);

// Arithmetic mean of per-type total WML; throws listing failing types.
double mean_wml(const std::vector<SentenceType>& language, const Grammar& g);

// Fixed-width trace table: Stack / Operation / Step / WML.
std::string render_trace(const std::vector<Category>& input,
                         const ParseOutcome& outcome);

}  // namespace gcg

#endif
