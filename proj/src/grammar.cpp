#include "gcg/grammar.hpp"

#include <algorithm>
#include <sstream>

namespace gcg {

bool Grammar::licensed(const Category& c) const {
    if (c.is_atom()) return config.atom(c.atom_kind());
    for (const auto& e : lexicon)
        if (c.matches(e)) return true;
    return false;
}

std::string Grammar::stringset_key() const {
    std::vector<std::string> keys;
    keys.reserve(types.size());
    for (const auto& t : types) keys.push_back(t.key());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::ostringstream os;
    for (const auto& k : keys) os << k << '\n';
    return os.str();
}

bool same_stringset(const Grammar& a, const Grammar& b) {
    return a.stringset_key() == b.stringset_key();
}

}  // namespace gcg
