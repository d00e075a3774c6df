// Categories of the generalized categorial grammar: atoms with optional
// semantic-role tags, and directional functors over them.  Values are
// immutable shared trees; equality is structural.

#ifndef GCG_CATEGORY_HPP
#define GCG_CATEGORY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gcg {

enum class Atom : std::uint8_t { S, NP, N, Rc, PP, Sc };

enum class Role : std::uint8_t { None, Subj, Obj1, Obj2 };

// Slash direction of a functor: Right = '/', argument to the right;
// Left = '\', argument to the left.
enum class Dir : std::uint8_t { Left, Right };

const char* atom_name(Atom a);
const char* role_name(Role r);

class Category {
public:
    Category() = default;  // empty handle; only parse/factories make valid ones

    static Category atom(Atom a, Role r = Role::None);
    static Category functor(const Category& result, Dir d, const Category& arg);

    bool valid() const { return node_ != nullptr; }
    bool is_atom() const;
    bool is_functor() const;

    Atom atom_kind() const;   // pre: is_atom()
    Role role() const;        // pre: is_atom()
    Category result() const;    // pre: is_functor()
    Category argument() const;  // pre: is_functor()
    Dir dir() const;          // pre: is_functor()

    // Number of outer functor arguments (0 for atoms).
    int arity() const;

    // Outer argument list, outermost first, as (argument, direction) pairs.
    std::vector<std::pair<Category, Dir>> args_outside_in() const;

    // Rebuild base|a_k...|a_1 from a base and an outside-in argument list.
    static Category build(const Category& base,
                          const std::vector<std::pair<Category, Dir>>& outside_in);

    // Innermost result after stripping all outer arguments.
    Category base() const;

    bool operator==(const Category& other) const;
    bool operator!=(const Category& other) const { return !(*this == other); }

    // Rule-matching compatibility: structural equality except that a missing
    // role tag on either side matches any role on the other.
    bool matches(const Category& other) const;

    // Text form: `S`, `NP:s`, `(S\NP:s)/NP:o1`, `Rc\(S\NP:o1)`.
    std::string str() const;
    static std::optional<Category> parse(std::string_view text);

    std::size_t hash() const;

private:
    struct Node;
    explicit Category(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// A whitespace-separated sequence of category strings.
std::string categories_str(const std::vector<Category>& cats);
std::optional<std::vector<Category>> parse_categories(std::string_view text);

}  // namespace gcg

#endif
