#include "gcg/parser.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace gcg {

std::string Step::label() const {
    switch (kind) {
        case StepKind::Shift:
            return "Shift";
        case StepKind::Reduce: {
            std::string s = "Reduce (";
            if (used_permutation()) s += "P+";
            s += rule_name(rule);
            s += ')';
            return s;
        }
        case StepKind::Halt:
            return halt_success ? "Halt (Success)" : "Halt (Fail)";
    }
    return "?";
}

namespace {

struct Cell {
    Constituent c;
    int wml = 0;
};

std::string render_stack(const std::vector<Cell>& cells) {
    std::ostringstream os;
    for (std::size_t i = cells.size(); i-- > 0;) {
        os << cells[i].c.cat.str();
        if (i) os << " | ";
    }
    return os.str();
}

bool is_sentence(const Category& c) {
    return c.is_atom() && c.atom_kind() == Atom::S;
}

}  // namespace

ParseOutcome parse(const std::vector<Category>& input, const Grammar& g,
                   bool check_licensing) {
    ParseOutcome out;
    if (input.empty()) {
        out.failure = ParseFailure::EmptyInput;
        return out;
    }
    if (check_licensing) {
        for (const auto& c : input) {
            if (!g.licensed(c)) {
                out.failure = ParseFailure::Unlicensed;
                return out;
            }
        }
    }

    VarSupply vars;
    std::vector<Cell> cells;
    std::size_t next = 0;

    auto account = [&](Step step) {
        // New top entry was pushed with wml 0; now age every cell and record.
        int sum = 0;
        for (auto& cell : cells) {
            cell.wml += 1;
            sum += cell.wml;
        }
        out.wml_record.push_back(sum);
        out.total_wml += sum;
        out.peak_wml = std::max(out.peak_wml, sum);
        step.stack_after = render_stack(cells);
        out.steps.push_back(std::move(step));
    };

    auto reduce_with = [&](const Constituent& result, RuleSchema rule, int pt, int pn) {
        cells.pop_back();
        cells.pop_back();
        cells.push_back(Cell{result, 0});
        Step s;
        s.kind = StepKind::Reduce;
        s.rule = rule;
        s.perm_top = pt;
        s.perm_next = pn;
        account(std::move(s));
    };

    for (;;) {
        bool reduced = false;
        if (cells.size() >= 2) {
            const Constituent& left = cells[cells.size() - 2].c;
            const Constituent& right = cells.back().c;
            if (auto r = try_apply(left, right)) {
                reduce_with(r->first, r->second, 0, 0);
                reduced = true;
            } else if (g.config.comp) {
                if (auto r2 = try_compose(left, right)) {
                    reduce_with(r2->first, r2->second, 0, 0);
                    reduced = true;
                }
            }
            if (!reduced && g.config.perm) {
                auto perms_next = all_permutations(left);
                auto perms_top = all_permutations(right);
                for (std::size_t j = 0; j < perms_next.size() && !reduced; ++j) {
                    for (std::size_t i = 0; i < perms_top.size() && !reduced; ++i) {
                        if (i == 0 && j == 0) continue;  // already tried above
                        if (auto r = try_apply(perms_next[j], perms_top[i])) {
                            reduce_with(r->first, r->second, static_cast<int>(i),
                                        static_cast<int>(j));
                            reduced = true;
                        } else if (g.config.comp) {
                            if (auto r2 = try_compose(perms_next[j], perms_top[i])) {
                                reduce_with(r2->first, r2->second,
                                            static_cast<int>(i), static_cast<int>(j));
                                reduced = true;
                            }
                        }
                    }
                }
            }
        }
        if (reduced) continue;

        if (next < input.size()) {
            int n_args = input[next].arity();
            Constituent c{input[next], lexical_sem(static_cast<int>(next), n_args, vars)};
            cells.push_back(Cell{std::move(c), 0});
            Step s;
            s.kind = StepKind::Shift;
            s.shift_index = static_cast<int>(next);
            ++next;
            account(std::move(s));
            continue;
        }

        Step halt;
        halt.kind = StepKind::Halt;
        halt.halt_success = cells.size() == 1 && is_sentence(cells.front().c.cat);
        halt.stack_after = render_stack(cells);
        out.success = halt.halt_success;
        if (out.success) {
            out.lf = cells.front().c.sem.close();
        } else {
            out.failure = ParseFailure::NoDerivation;
        }
        out.steps.push_back(std::move(halt));
        return out;
    }
}

long wml_of_sentence_type(const SentenceType& st, const Grammar& g) {
    ParseOutcome o = parse(st, g);
    if (!o.success)
        throw std::runtime_error("sentence type does not parse: " + st.key());
    return o.total_wml;
}

double mean_wml(const std::vector<SentenceType>& language, const Grammar& g) {
    if (language.empty()) throw std::runtime_error("mean_wml of empty language");
    long sum = 0;
    std::string failing;
    for (const auto& st : language) {
        ParseOutcome o = parse(st, g);
        if (!o.success) {
            failing += failing.empty() ? "" : "; ";
            failing += st.key();
            continue;
        }
        sum += o.total_wml;
    }
    if (!failing.empty())
        throw std::runtime_error("mean_wml: unparsable types: " + failing);
    return static_cast<double>(sum) / static_cast<double>(language.size());
}

std::string render_trace(const std::vector<Category>& input,
                         const ParseOutcome& outcome) {
    std::ostringstream os;
    os << "Input: " << categories_str(input) << '\n';
    os << std::left << std::setw(58) << "Stack" << std::setw(16) << "Operation"
       << std::setw(6) << "Step" << "WML\n";
    std::size_t wml_i = 0;
    for (std::size_t i = 0; i < outcome.steps.size(); ++i) {
        const Step& s = outcome.steps[i];
        int wml = 0;
        if (s.kind != StepKind::Halt && wml_i < outcome.wml_record.size())
            wml = outcome.wml_record[wml_i++];
        os << std::left << std::setw(58)
           << (s.stack_after.empty() ? "(empty)" : s.stack_after)
           << std::setw(16) << s.label() << std::setw(6)
           << (s.kind == StepKind::Halt ? std::string("-") : std::to_string(wml_i))
           << (s.kind == StepKind::Halt ? std::string("-") : std::to_string(wml))
           << '\n';
    }
    os << "Total WML: " << outcome.total_wml << '\n';
    return os.str();
}

}  // namespace gcg
