// The 20-entry p-setting sequence: rule availability, atomic category
// switches, and ordering parameters, each with an absolute/default/unset
// status and a binary value (coded 1 = T/L, 0 = F/R).

#ifndef GCG_PSETTINGS_HPP
#define GCG_PSETTINGS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcg/grammar.hpp"

namespace gcg {

enum class ParamId : std::uint8_t {
    Applic, Comp, Perm,
    S, NP, N, Rc, PP, Sc,
    Gen, V1, NDir, Subj, Obj, V2, Mod, Spec, Relcl, Adpos, Compl,
};
inline constexpr int kNumParams = 20;

const char* param_name(ParamId p);
std::optional<ParamId> param_from_name(std::string_view name);

// Direction parameters display L/R; the rest display T/F.
bool is_direction_param(ParamId p);

enum class PStatus : std::uint8_t { Absolute, Default, Unset };

struct PSetting {
    ParamId id{};
    PStatus status = PStatus::Unset;
    std::optional<bool> value;  // 1 = T/L, 0 = F/R; empty iff Unset

    bool settable() const { return status != PStatus::Absolute; }
    std::string value_str() const;
};

class PSettings {
public:
    // All entries unset, canonical order.
    PSettings();

    static constexpr int size() { return kNumParams; }
    const PSetting& at(ParamId p) const;
    const PSetting& at(int index) const { return entries_[static_cast<std::size_t>(index)]; }
    PSetting& at(ParamId p);
    PSetting& at(int index) { return entries_[static_cast<std::size_t>(index)]; }

    void set(ParamId p, PStatus st, std::optional<bool> value);

    // Effective boolean of a presence/rule parameter (unset counts as off).
    bool on(ParamId p) const;
    // Effective direction of an ordering parameter before inheritance.
    std::optional<Dir> own_dir(ParamId p) const;

    bool operator==(const PSettings& other) const;

    // One entry per line: `<id> <A|D|?> <T|F|L|R|->`, canonical order.
    std::string encode() const;
    static std::optional<PSettings> decode_text(std::string_view text);

private:
    std::array<PSetting, kNumParams> entries_;
};

inline Dir dir_of(bool one) { return one ? Dir::Left : Dir::Right; }
inline bool one_of(Dir d) { return d == Dir::Left; }

// Genomes of the two predefined learner kinds: a minimal absolute core
// (application, S, NP) with either everything else unset, or default
// SVO-right-branching direction values plus default-off composition and
// permutation.
PSettings unset_learner_genome();
PSettings default_learner_genome();

}  // namespace gcg

#endif
