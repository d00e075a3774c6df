#include "oracle.hpp"

#include <set>
#include <string>

#include "gcg/rules.hpp"

namespace gcg::oracle {

namespace {

std::string key_of(const Constituent& c) {
    std::string k = c.cat.str();
    k += '|';
    for (int b : c.sem.binders) {
        k += std::to_string(b);
        k += ',';
    }
    k += '|';
    k += c.sem.body.str();
    return k;
}

void add_with_permutations(std::vector<Constituent>& cell, std::set<std::string>& seen,
                           const Constituent& c, bool perm) {
    std::vector<Constituent> closure =
        perm ? all_permutations(c) : std::vector<Constituent>{c};
    for (const auto& p : closure) {
        if (seen.insert(key_of(p)).second) cell.push_back(p);
    }
}

}  // namespace

std::vector<LogicalForm> all_sentence_lfs(const std::vector<Category>& input,
                                          const GrammarConfig& rules) {
    const std::size_t n = input.size();
    std::vector<LogicalForm> out;
    if (n == 0) return out;

    VarSupply vars;
    // chart[i][j] = constituents spanning positions [i, i+j+1)
    std::vector<std::vector<std::vector<Constituent>>> chart(n);
    std::vector<std::vector<std::set<std::string>>> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
        chart[i].resize(n - i);
        seen[i].resize(n - i);
        Constituent lex{input[i], lexical_sem(static_cast<int>(i),
                                              input[i].arity(), vars)};
        add_with_permutations(chart[i][0], seen[i][0], lex, rules.perm);
    }

    for (std::size_t len = 2; len <= n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            auto& cell = chart[i][len - 1];
            auto& cellseen = seen[i][len - 1];
            for (std::size_t split = 1; split < len; ++split) {
                const auto& lefts = chart[i][split - 1];
                const auto& rights = chart[i + split][len - split - 1];
                for (const auto& a : lefts) {
                    for (const auto& b : rights) {
                        if (auto r = try_apply(a, b))
                            add_with_permutations(cell, cellseen, r->first, rules.perm);
                        if (rules.comp) {
                            if (auto r = try_compose(a, b))
                                add_with_permutations(cell, cellseen, r->first,
                                                      rules.perm);
                        }
                    }
                }
            }
        }
    }

    std::set<std::string> lf_seen;
    for (const auto& c : chart[0][n - 1]) {
        if (!c.cat.is_atom() || c.cat.atom_kind() != Atom::S) continue;
        if (!c.sem.binders.empty()) continue;
        LogicalForm lf = c.sem.close();
        if (lf_seen.insert(lf.str()).second) out.push_back(lf);
    }
    return out;
}

}  // namespace gcg::oracle
