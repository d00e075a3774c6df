#include "gcg/logical_form.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace gcg {

struct LogicalForm::Node {
    Kind kind;
    int a = 0;  // Lex: position; FreeVar: id; BoundVar: up; Lam: n_params
    int b = 0;  // BoundVar: index
    std::shared_ptr<const Node> head;  // App head / Lam body
    std::vector<LogicalForm> args;     // App args
};

LogicalForm LogicalForm::lex(int position) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Lex;
    n->a = position;
    return LogicalForm(std::move(n));
}

LogicalForm LogicalForm::free_var(int id) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::FreeVar;
    n->a = id;
    return LogicalForm(std::move(n));
}

LogicalForm LogicalForm::bound_var(int up, int index) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::BoundVar;
    n->a = up;
    n->b = index;
    return LogicalForm(std::move(n));
}

LogicalForm LogicalForm::app(const LogicalForm& head, std::vector<LogicalForm> args) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::App;
    n->head = head.node_;
    n->args = std::move(args);
    return LogicalForm(std::move(n));
}

LogicalForm LogicalForm::lam(int n_params, const LogicalForm& body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Lam;
    n->a = n_params;
    n->head = body.node_;
    return LogicalForm(std::move(n));
}

LogicalForm::Kind LogicalForm::kind() const { return node_->kind; }
int LogicalForm::lex_position() const { return node_->a; }
int LogicalForm::var_id() const { return node_->a; }
int LogicalForm::bound_up() const { return node_->a; }
int LogicalForm::bound_index() const { return node_->b; }
LogicalForm LogicalForm::head() const { return LogicalForm(node_->head); }
const std::vector<LogicalForm>& LogicalForm::args() const { return node_->args; }
int LogicalForm::lam_params() const { return node_->a; }
LogicalForm LogicalForm::lam_body() const { return LogicalForm(node_->head); }

bool LogicalForm::operator==(const LogicalForm& other) const {
    if (node_ == other.node_) return true;
    if (!node_ || !other.node_) return false;
    if (node_->kind != other.node_->kind) return false;
    switch (node_->kind) {
        case Kind::Lex:
        case Kind::FreeVar:
            return node_->a == other.node_->a;
        case Kind::BoundVar:
            return node_->a == other.node_->a && node_->b == other.node_->b;
        case Kind::Lam:
            return node_->a == other.node_->a && lam_body() == other.lam_body();
        case Kind::App: {
            if (!(head() == other.head())) return false;
            if (node_->args.size() != other.node_->args.size()) return false;
            for (std::size_t i = 0; i < node_->args.size(); ++i)
                if (!(node_->args[i] == other.node_->args[i])) return false;
            return true;
        }
    }
    return false;
}

namespace {

LogicalForm subst_rec(const LogicalForm& t, int id, const LogicalForm& value,
                      int depth);

// Shift bound variables that point above `cutoff` lambda levels by `delta`.
LogicalForm shift_bound(const LogicalForm& t, int cutoff, int delta) {
    switch (t.kind()) {
        case LogicalForm::Kind::Lex:
        case LogicalForm::Kind::FreeVar:
            return t;
        case LogicalForm::Kind::BoundVar:
            if (t.bound_up() >= cutoff)
                return LogicalForm::bound_var(t.bound_up() + delta, t.bound_index());
            return t;
        case LogicalForm::Kind::Lam:
            return LogicalForm::lam(t.lam_params(),
                                    shift_bound(t.lam_body(), cutoff + 1, delta));
        case LogicalForm::Kind::App: {
            std::vector<LogicalForm> args;
            args.reserve(t.args().size());
            for (const auto& a : t.args()) args.push_back(shift_bound(a, cutoff, delta));
            return LogicalForm::app(shift_bound(t.head(), cutoff, delta), std::move(args));
        }
    }
    return t;
}

LogicalForm subst_rec(const LogicalForm& t, int id, const LogicalForm& value,
                      int depth) {
    switch (t.kind()) {
        case LogicalForm::Kind::Lex:
        case LogicalForm::Kind::BoundVar:
            return t;
        case LogicalForm::Kind::FreeVar:
            if (t.var_id() == id) return depth == 0 ? value : shift_bound(value, 0, depth);
            return t;
        case LogicalForm::Kind::Lam:
            return LogicalForm::lam(t.lam_params(),
                                    subst_rec(t.lam_body(), id, value, depth + 1));
        case LogicalForm::Kind::App: {
            std::vector<LogicalForm> args;
            args.reserve(t.args().size());
            for (const auto& a : t.args()) args.push_back(subst_rec(a, id, value, depth));
            return LogicalForm::app(subst_rec(t.head(), id, value, depth), std::move(args));
        }
    }
    return t;
}

// Replace FreeVar(ids[i]) with BoundVar(depth, i) for a new enclosing Lam.
LogicalForm bind_rec(const LogicalForm& t, const std::vector<int>& ids, int depth) {
    switch (t.kind()) {
        case LogicalForm::Kind::Lex:
        case LogicalForm::Kind::BoundVar:
            return t;
        case LogicalForm::Kind::FreeVar: {
            auto it = std::find(ids.begin(), ids.end(), t.var_id());
            if (it != ids.end())
                return LogicalForm::bound_var(depth, static_cast<int>(it - ids.begin()));
            return t;
        }
        case LogicalForm::Kind::Lam:
            return LogicalForm::lam(t.lam_params(), bind_rec(t.lam_body(), ids, depth + 1));
        case LogicalForm::Kind::App: {
            std::vector<LogicalForm> args;
            args.reserve(t.args().size());
            for (const auto& a : t.args()) args.push_back(bind_rec(a, ids, depth));
            return LogicalForm::app(bind_rec(t.head(), ids, depth), std::move(args));
        }
    }
    return t;
}

}  // namespace

LogicalForm LogicalForm::substitute(int id, const LogicalForm& value) const {
    return subst_rec(*this, id, value, 0);
}

void LogicalForm::positions(std::vector<int>& out) const {
    switch (kind()) {
        case Kind::Lex:
            out.push_back(lex_position());
            return;
        case Kind::FreeVar:
        case Kind::BoundVar:
            return;
        case Kind::Lam:
            lam_body().positions(out);
            return;
        case Kind::App:
            head().positions(out);
            for (const auto& a : args()) a.positions(out);
            return;
    }
}

std::string LogicalForm::str() const {
    std::ostringstream os;
    switch (kind()) {
        case Kind::Lex:
            os << 'w' << lex_position();
            break;
        case Kind::FreeVar:
            os << '?' << var_id();
            break;
        case Kind::BoundVar:
            os << 'x' << bound_up() << '.' << bound_index();
            break;
        case Kind::Lam:
            os << "\\" << lam_params() << '[' << lam_body().str() << ']';
            break;
        case Kind::App: {
            os << head().str() << '(';
            for (std::size_t i = 0; i < args().size(); ++i) {
                if (i) os << ' ';
                os << args()[i].str();
            }
            os << ')';
            break;
        }
    }
    return os.str();
}

LogicalForm SemValue::close() const {
    if (binders.empty()) return body;
    return LogicalForm::lam(static_cast<int>(binders.size()),
                            bind_rec(body, binders, 0));
}

namespace {
LogicalForm close_tail(const SemValue& v, std::size_t from) {
    if (v.binders.size() <= from) return v.body;
    std::vector<int> tail(v.binders.begin() + static_cast<long>(from), v.binders.end());
    return LogicalForm::lam(static_cast<int>(tail.size()), bind_rec(v.body, tail, 0));
}
}  // namespace

SemValue lexical_sem(int position, int n_args, VarSupply& vars) {
    SemValue v;
    if (n_args == 0) {
        v.body = LogicalForm::lex(position);
        return v;
    }
    v.binders.reserve(static_cast<std::size_t>(n_args));
    for (int i = 0; i < n_args; ++i) v.binders.push_back(vars.fresh());
    // Semantic argument order: innermost (last-consumed) first.
    std::vector<LogicalForm> args;
    args.reserve(static_cast<std::size_t>(n_args));
    for (int i = n_args - 1; i >= 0; --i)
        args.push_back(LogicalForm::free_var(v.binders[static_cast<std::size_t>(i)]));
    v.body = LogicalForm::app(LogicalForm::lex(position), std::move(args));
    return v;
}

SemValue apply_sem(const SemValue& functor, const SemValue& argument) {
    SemValue out;
    out.binders.assign(functor.binders.begin() + 1, functor.binders.end());
    out.body = functor.body.substitute(functor.binders.front(), argument.close());
    return out;
}

SemValue compose_sem(const SemValue& outer, const SemValue& inner) {
    // inner = Y|Z with binders [z, ...Y-args]; its Y-value keeps z free.
    SemValue out;
    out.binders.push_back(inner.binders.front());
    out.binders.insert(out.binders.end(), outer.binders.begin() + 1,
                       outer.binders.end());
    out.body = outer.body.substitute(outer.binders.front(), close_tail(inner, 1));
    return out;
}

SemValue permute_sem(const SemValue& v) {
    SemValue out = v;
    if (out.binders.size() >= 2) {
        int first = out.binders.front();
        out.binders.erase(out.binders.begin());
        out.binders.push_back(first);
    }
    return out;
}

}  // namespace gcg
