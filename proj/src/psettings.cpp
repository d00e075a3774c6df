#include "gcg/psettings.hpp"

#include <sstream>

namespace gcg {

namespace {
constexpr const char* kNames[kNumParams] = {
    "applic", "comp", "perm", "S", "NP", "N", "Rc", "PP", "Sc",
    "gen", "v1", "n", "subj", "obj", "v2", "mod", "spec", "relcl",
    "adpos", "compl",
};
}

const char* param_name(ParamId p) { return kNames[static_cast<int>(p)]; }

std::optional<ParamId> param_from_name(std::string_view name) {
    for (int i = 0; i < kNumParams; ++i)
        if (name == kNames[i]) return static_cast<ParamId>(i);
    return std::nullopt;
}

bool is_direction_param(ParamId p) {
    switch (p) {
        case ParamId::Gen:
        case ParamId::NDir:
        case ParamId::Subj:
        case ParamId::Obj:
        case ParamId::Mod:
        case ParamId::Spec:
        case ParamId::Relcl:
        case ParamId::Adpos:
        case ParamId::Compl:
            return true;
        default:
            return false;
    }
}

std::string PSetting::value_str() const {
    if (!value) return "-";
    if (is_direction_param(id)) return *value ? "L" : "R";
    return *value ? "T" : "F";
}

PSettings::PSettings() {
    for (int i = 0; i < kNumParams; ++i) {
        entries_[static_cast<std::size_t>(i)].id = static_cast<ParamId>(i);
        entries_[static_cast<std::size_t>(i)].status = PStatus::Unset;
    }
}

const PSetting& PSettings::at(ParamId p) const {
    return entries_[static_cast<std::size_t>(p)];
}

PSetting& PSettings::at(ParamId p) { return entries_[static_cast<std::size_t>(p)]; }

void PSettings::set(ParamId p, PStatus st, std::optional<bool> value) {
    PSetting& e = at(p);
    e.status = st;
    e.value = value;
}

bool PSettings::on(ParamId p) const {
    const PSetting& e = at(p);
    return e.value.has_value() && *e.value;
}

std::optional<Dir> PSettings::own_dir(ParamId p) const {
    const PSetting& e = at(p);
    if (!e.value) return std::nullopt;
    return dir_of(*e.value);
}

bool PSettings::operator==(const PSettings& other) const {
    for (int i = 0; i < kNumParams; ++i) {
        const PSetting& a = entries_[static_cast<std::size_t>(i)];
        const PSetting& b = other.entries_[static_cast<std::size_t>(i)];
        if (a.status != b.status || a.value != b.value) return false;
    }
    return true;
}

std::string PSettings::encode() const {
    std::ostringstream os;
    for (const auto& e : entries_) {
        char st = e.status == PStatus::Absolute ? 'A'
                  : e.status == PStatus::Default ? 'D'
                                                 : '?';
        os << param_name(e.id) << ' ' << st << ' ' << e.value_str() << '\n';
    }
    return os.str();
}

std::optional<PSettings> PSettings::decode_text(std::string_view text) {
    PSettings ps;
    std::array<bool, kNumParams> seen{};
    std::istringstream is{std::string(text)};
    std::string line;
    int n = 0;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string name, st, val;
        if (!(ls >> name >> st >> val)) return std::nullopt;
        auto id = param_from_name(name);
        if (!id) return std::nullopt;
        if (seen[static_cast<std::size_t>(*id)]) return std::nullopt;
        seen[static_cast<std::size_t>(*id)] = true;
        PStatus status;
        if (st == "A") status = PStatus::Absolute;
        else if (st == "D") status = PStatus::Default;
        else if (st == "?") status = PStatus::Unset;
        else return std::nullopt;
        std::optional<bool> value;
        if (val == "T" || val == "L") value = true;
        else if (val == "F" || val == "R") value = false;
        else if (val == "-") value = std::nullopt;
        else return std::nullopt;
        if (status == PStatus::Unset && value) return std::nullopt;
        if (status != PStatus::Unset && !value) return std::nullopt;
        ps.set(*id, status, value);
        ++n;
    }
    if (n != kNumParams) return std::nullopt;
    return ps;
}

PSettings unset_learner_genome() {
    PSettings ps;
    ps.set(ParamId::Applic, PStatus::Absolute, true);
    ps.set(ParamId::S, PStatus::Absolute, true);
    ps.set(ParamId::NP, PStatus::Absolute, true);
    return ps;
}

PSettings default_learner_genome() {
    PSettings ps = unset_learner_genome();
    // Minimal SVO right-branching defaults plus default-off comp/perm.
    ps.set(ParamId::Gen, PStatus::Default, false);    // R
    ps.set(ParamId::Subj, PStatus::Default, true);    // L
    ps.set(ParamId::Obj, PStatus::Default, false);    // R
    ps.set(ParamId::Comp, PStatus::Default, false);   // off
    ps.set(ParamId::Perm, PStatus::Default, false);   // off
    return ps;
}

}  // namespace gcg
