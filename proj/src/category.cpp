#include "gcg/category.hpp"

#include <functional>
#include <sstream>

namespace gcg {

struct Category::Node {
    bool atom;
    // atom payload
    Atom kind = Atom::S;
    Role role = Role::None;
    // functor payload
    std::shared_ptr<const Node> result;
    std::shared_ptr<const Node> arg;
    Dir dir = Dir::Right;
};

const char* atom_name(Atom a) {
    switch (a) {
        case Atom::S: return "S";
        case Atom::NP: return "NP";
        case Atom::N: return "N";
        case Atom::Rc: return "Rc";
        case Atom::PP: return "PP";
        case Atom::Sc: return "Sc";
    }
    return "?";
}

const char* role_name(Role r) {
    switch (r) {
        case Role::None: return "";
        case Role::Subj: return "s";
        case Role::Obj1: return "o1";
        case Role::Obj2: return "o2";
    }
    return "";
}

Category Category::atom(Atom a, Role r) {
    auto n = std::make_shared<Node>();
    n->atom = true;
    n->kind = a;
    n->role = r;
    return Category(std::move(n));
}

Category Category::functor(const Category& result, Dir d, const Category& arg) {
    auto n = std::make_shared<Node>();
    n->atom = false;
    n->result = result.node_;
    n->arg = arg.node_;
    n->dir = d;
    return Category(std::move(n));
}

bool Category::is_atom() const { return node_ && node_->atom; }
bool Category::is_functor() const { return node_ && !node_->atom; }

Atom Category::atom_kind() const { return node_->kind; }
Role Category::role() const { return node_->role; }

Category Category::result() const { return Category(node_->result); }

Category Category::argument() const { return Category(node_->arg); }

Dir Category::dir() const { return node_->dir; }

int Category::arity() const {
    int k = 0;
    const Node* n = node_.get();
    while (n && !n->atom) {
        ++k;
        n = n->result.get();
    }
    return k;
}

std::vector<std::pair<Category, Dir>> Category::args_outside_in() const {
    std::vector<std::pair<Category, Dir>> out;
    std::shared_ptr<const Node> n = node_;
    while (n && !n->atom) {
        out.emplace_back(Category(n->arg), n->dir);
        n = n->result;
    }
    return out;
}

Category Category::build(const Category& base,
                         const std::vector<std::pair<Category, Dir>>& outside_in) {
    Category c = base;
    for (auto it = outside_in.rbegin(); it != outside_in.rend(); ++it)
        c = functor(c, it->second, it->first);
    return c;
}

Category Category::base() const {
    std::shared_ptr<const Node> n = node_;
    while (n && !n->atom) n = n->result;
    return Category(n);
}

bool Category::operator==(const Category& other) const {
    if (node_ == other.node_) return true;
    if (!node_ || !other.node_) return false;
    if (is_atom() != other.is_atom()) return false;
    if (is_atom())
        return atom_kind() == other.atom_kind() && role() == other.role();
    return dir() == other.dir() && result() == other.result() &&
           argument() == other.argument();
}

bool Category::matches(const Category& other) const {
    if (!node_ || !other.node_) return false;
    if (is_atom() != other.is_atom()) return false;
    if (is_atom()) {
        if (atom_kind() != other.atom_kind()) return false;
        Role ra = role(), rb = other.role();
        return ra == Role::None || rb == Role::None || ra == rb;
    }
    return dir() == other.dir() && result().matches(other.result()) &&
           argument().matches(other.argument());
}

std::string Category::str() const {
    if (!node_) return "<null>";
    if (is_atom()) {
        std::string s = atom_name(atom_kind());
        if (role() != Role::None) {
            s += ':';
            s += role_name(role());
        }
        return s;
    }
    auto wrap = [](const Category& c) {
        std::string s = c.str();
        if (c.is_functor()) return "(" + s + ")";
        return s;
    };
    return wrap(result()) + (dir() == Dir::Right ? '/' : '\\') + wrap(argument());
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    std::optional<Category> parse_atom() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])))) ++i;
        std::string_view name = s.substr(start, i - start);
        std::optional<Atom> a;
        if (name == "S") a = Atom::S;
        else if (name == "NP") a = Atom::NP;
        else if (name == "N") a = Atom::N;
        else if (name == "Rc") a = Atom::Rc;
        else if (name == "PP") a = Atom::PP;
        else if (name == "Sc") a = Atom::Sc;
        if (!a) return std::nullopt;
        Role r = Role::None;
        if (i < s.size() && s[i] == ':') {
            ++i;
            std::size_t rs = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i]))))
                ++i;
            std::string_view rn = s.substr(rs, i - rs);
            if (rn == "s") r = Role::Subj;
            else if (rn == "o1") r = Role::Obj1;
            else if (rn == "o2") r = Role::Obj2;
            else return std::nullopt;
        }
        return Category::atom(*a, r);
    }

    std::optional<Category> parse_primary() {
        skip_ws();
        if (i < s.size() && s[i] == '(') {
            ++i;
            auto inner = parse_expr();
            if (!inner || !eat(')')) return std::nullopt;
            return inner;
        }
        return parse_atom();
    }

    std::optional<Category> parse_expr() {
        auto left = parse_primary();
        if (!left) return std::nullopt;
        for (;;) {
            skip_ws();
            if (i < s.size() && (s[i] == '/' || s[i] == '\\')) {
                Dir d = s[i] == '/' ? Dir::Right : Dir::Left;
                ++i;
                auto right = parse_primary();
                if (!right) return std::nullopt;
                left = Category::functor(*left, d, *right);
            } else {
                break;
            }
        }
        return left;
    }
};

}  // namespace

std::optional<Category> Category::parse(std::string_view text) {
    Parser p{text};
    auto c = p.parse_expr();
    if (!c) return std::nullopt;
    p.skip_ws();
    if (p.i != text.size()) return std::nullopt;
    return c;
}

std::size_t Category::hash() const {
    // Cheap structural hash via the printed form.
    return std::hash<std::string>{}(str());
}

std::string categories_str(const std::vector<Category>& cats) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cats.size(); ++i) {
        if (i) os << ' ';
        os << cats[i].str();
    }
    return os.str();
}

std::optional<std::vector<Category>> parse_categories(std::string_view text) {
    std::vector<Category> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        int depth = 0;
        while (j < text.size() && (text[j] != ' ' || depth > 0)) {
            if (text[j] == '(') ++depth;
            if (text[j] == ')') --depth;
            ++j;
        }
        auto c = Category::parse(text.substr(i, j - i));
        if (!c) return std::nullopt;
        out.push_back(*c);
        i = j;
    }
    return out;
}

}  // namespace gcg
