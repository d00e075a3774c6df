// Logical forms built during parsing: applicative trees over input
// positions, with lambda nodes only where a functor-typed constituent is
// consumed whole.  Bound variables use (levels-up, index) coordinates, so
// structural equality is alpha-invariant by construction.

#ifndef GCG_LOGICAL_FORM_HPP
#define GCG_LOGICAL_FORM_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gcg {

class LogicalForm {
public:
    enum class Kind : std::uint8_t { Lex, FreeVar, BoundVar, App, Lam };

    LogicalForm() = default;
    bool valid() const { return node_ != nullptr; }

    static LogicalForm lex(int position);
    static LogicalForm free_var(int id);
    static LogicalForm bound_var(int up, int index);
    // head applied to args in semantic order (innermost argument first)
    static LogicalForm app(const LogicalForm& head,
                           std::vector<LogicalForm> args);
    static LogicalForm lam(int n_params, const LogicalForm& body);

    Kind kind() const;
    int lex_position() const;
    int var_id() const;        // FreeVar
    int bound_up() const;      // BoundVar
    int bound_index() const;   // BoundVar
    LogicalForm head() const;  // App
    const std::vector<LogicalForm>& args() const;  // App
    int lam_params() const;    // Lam
    LogicalForm lam_body() const;  // Lam

    bool operator==(const LogicalForm& other) const;
    bool operator!=(const LogicalForm& other) const { return !(*this == other); }

    // Replace FreeVar(id) with value, adjusting bound-variable levels when
    // the value is inserted under Lam nodes.
    LogicalForm substitute(int id, const LogicalForm& value) const;

    // Collect input positions of all Lex leaves.
    void positions(std::vector<int>& out) const;

    std::string str() const;

private:
    struct Node;
    explicit LogicalForm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Partially applied semantic value of a stack cell: the body uses one free
// variable per pending top-level argument of the cell's category, listed in
// consumption order (outermost argument first).
struct SemValue {
    std::vector<int> binders;
    LogicalForm body;

    // Closed value of this cell: lambda-wraps any pending binders.
    LogicalForm close() const;
};

// Fresh free-variable ids drawn from a per-parse counter.
class VarSupply {
public:
    int fresh() { return next_++; }

private:
    int next_ = 0;
};

// Semantic value of a lexical item at `position` with `n_args` pending
// arguments; body = item(arg_innermost, ..., arg_outermost).
SemValue lexical_sem(int position, int n_args, VarSupply& vars);

// Application: functor consumes argument's closed value in its next slot.
SemValue apply_sem(const SemValue& functor, const SemValue& argument);

// Composition (X|Y Y|Z -> X|Z family): `outer` is the functor whose Y
// argument is fed by `inner` once inner's own outermost argument (Z) is
// available.  Z's binder transfers to the composed value.
SemValue compose_sem(const SemValue& outer, const SemValue& inner);

// Rotate binders to track a single category permutation (outermost argument
// becomes innermost).
SemValue permute_sem(const SemValue& v);

}  // namespace gcg

#endif
