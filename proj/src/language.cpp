#include "gcg/language.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "gcg/parser.hpp"

namespace gcg {

namespace {

const Category kS = Category::atom(Atom::S);
const Category kNPs = Category::atom(Atom::NP, Role::Subj);
const Category kNPo1 = Category::atom(Atom::NP, Role::Obj1);
const Category kNPo2 = Category::atom(Atom::NP, Role::Obj2);
const Category kNP = Category::atom(Atom::NP);
const Category kN = Category::atom(Atom::N);
const Category kRc = Category::atom(Atom::Rc);
const Category kPP = Category::atom(Atom::PP);
const Category kSc = Category::atom(Atom::Sc);

Category f(const Category& res, Dir d, const Category& arg) {
    return Category::functor(res, d, arg);
}

using Block = std::vector<Category>;

Block place(Block block, Dir d, Block arg) {
    if (d == Dir::Right) {
        block.insert(block.end(), arg.begin(), arg.end());
        return block;
    }
    arg.insert(arg.end(), block.begin(), block.end());
    return arg;
}

// Linearize a functor with its argument slots filled by the given blocks,
// listed outermost-first (consumption order).
Block linearize(const Category& functor, const std::vector<Block>& fillers) {
    Block block{functor};
    auto args = functor.args_outside_in();
    for (std::size_t i = 0; i < args.size(); ++i)
        block = place(std::move(block), args[i].second, fillers[i]);
    return block;
}

struct TemplateSet {
    std::array<Block, 13> strings;  // index = template id; empty = absent
    std::array<const char*, 13> names{};
};

TemplateSet build_templates(const GrammarConfig& g) {
    TemplateSet out;
    auto subj = g.d(DirParam::Subj);
    auto obj = g.d(DirParam::Obj);
    auto ndir = g.d(DirParam::N);
    auto mod = g.d(DirParam::Mod);
    auto spec = g.d(DirParam::Spec);
    auto relcl = g.d(DirParam::Relcl);
    auto adpos = g.d(DirParam::Adpos);
    auto compl_ = g.d(DirParam::Compl);

    bool hasN = g.atom(Atom::N);
    bool hasRc = g.atom(Atom::Rc);
    bool hasPP = g.atom(Atom::PP);
    bool hasSc = g.atom(Atom::Sc);

    if (!subj) return out;  // no clause structure at all

    // Base (embedded / unmarked) verbs are subject-innermost.
    const Category intrans = f(kS, *subj, kNPs);
    std::optional<Category> trans, ditrans, v_pp, v_put, v_sc;
    if (obj) {
        trans = f(intrans, *obj, kNPo1);
        ditrans = f(f(intrans, *obj, kNPo2), *obj, kNPo1);
    }
    if (adpos) {
        v_pp = f(intrans, *adpos, kPP);
        if (obj) v_put = f(*v_pp, *obj, kNPo1);
    }
    if (compl_) v_sc = f(intrans, *compl_, kSc);

    // Template 10 is the marked main-clause construction: under v1 its verb
    // is subject-outermost with each argument keeping its own direction;
    // under v2 the adposition phrase is fronted and the verb stands second,
    // taking subject and object rightward.  The other templates keep the
    // unmarked order.
    std::optional<Category> m_put = v_put;
    if (g.v1 && obj && adpos)
        m_put = f(f(f(kS, *adpos, kPP), *obj, kNPo1), *subj, kNPs);
    else if (g.v2 && obj && adpos)
        m_put = f(f(f(kS, Dir::Right, kNPo1), Dir::Right, kNPs), Dir::Left, kPP);

    // 1. intransitive clause
    out.strings[1] = linearize(intrans, {{kNPs}});
    out.names[1] = "intransitive";

    // 2-3. transitive and ditransitive clauses
    if (trans) {
        out.strings[2] = linearize(*trans, std::vector<Block>{{kNPo1}, {kNPs}});
        out.names[2] = "transitive";
    }
    if (ditrans) {
        out.strings[3] =
            linearize(*ditrans, std::vector<Block>{{kNPo1}, {kNPo2}, {kNPs}});
        out.names[3] = "ditransitive";
    }

    // 4. transitive with specified object: Det = NP:o1|spec N
    if (hasN && trans && spec) {
        Category det = f(kNPo1, *spec, kN);
        Block objBlock = place({det}, *spec, {kN});
        out.strings[4] = linearize(*trans, std::vector<Block>{objBlock, {kNPs}});
        out.names[4] = "specified-object";
    }
    // 5. transitive with modified object: Mod = NP:o1|mod NP:o1
    if (trans && mod) {
        Category m = f(kNPo1, *mod, kNPo1);
        Block objBlock = place({m}, *mod, {kNPo1});
        out.strings[5] = linearize(*trans, std::vector<Block>{objBlock, {kNPs}});
        out.names[5] = "modified-object";
    }
    // 6. intransitive with adposition-phrase argument: P = PP|adpos NP:o2
    if (hasPP && v_pp) {
        Category p = f(kPP, *adpos, kNPo2);
        Block pp = place({p}, *adpos, {kNPo2});
        out.strings[6] = linearize(*v_pp, std::vector<Block>{pp, {kNPs}});
        out.names[6] = "adposition-argument";
    }
    // 7. subject relative on the matrix subject; matrix transitive.
    if (hasRc && trans && relcl) {
        Category who = f(kRc, *relcl, intrans);
        Category noun = f(kNPs, *relcl, kRc);
        Block clause = place({*trans}, trans->args_outside_in()[0].second, {kNPo1});
        Block rel;
        if (*relcl == Dir::Right) {
            rel = Block{noun, who};
            rel.insert(rel.end(), clause.begin(), clause.end());
        } else {
            rel = clause;
            rel.push_back(who);
            rel.push_back(noun);
        }
        out.strings[7] = linearize(*trans, std::vector<Block>{{kNPo1}, rel});
        out.names[7] = "subject-relative";
    }
    // 8. object relative on the matrix subject; matrix ditransitive.
    // Postmodifying relatives use a clause-initial relativizer taking the
    // subject and the verb in turn; premodifying ones use the clause-final
    // relativizer over the permuted clause, so they need permutation.
    if (hasRc && trans && ditrans && relcl) {
        Category noun = f(kNPs, *relcl, kRc);
        Block rel;
        if (*relcl == Dir::Right) {
            Category who = f(f(kRc, Dir::Right, *trans), Dir::Right, kNPs);
            rel = Block{noun, who, kNPs, *trans};
        } else {
            Category gap = f(kS, *obj, kNPo1);
            Category who = f(kRc, Dir::Left, gap);
            Block clause = place({*trans}, *subj, {kNPs});
            rel = clause;
            rel.push_back(who);
            rel.push_back(noun);
        }
        out.strings[8] = linearize(*ditrans, {{kNPo1}, {kNPo2}, rel});
        out.names[8] = "object-relative";
    }
    // 9. sentential complement with complementizer: C = Sc|compl S
    if (hasSc && v_sc && trans) {
        Category c = f(kSc, *compl_, kS);
        Block clause = linearize(*trans, std::vector<Block>{{kNPo1}, {kNPs}});
        Block scblock = place({c}, *compl_, clause);
        out.strings[9] = linearize(*v_sc, std::vector<Block>{scblock, {kNPs}});
        out.names[9] = "sentential-complement";
    }
    // 10. transitive with adposition-phrase argument (main-clause variant).
    if (hasPP && m_put) {
        Category p = f(kPP, *adpos, kNPo2);
        Block pp = place({p}, *adpos, {kNPo2});
        if (g.v1)
            out.strings[10] = linearize(*m_put, std::vector<Block>{{kNPs}, {kNPo1}, pp});
        else if (g.v2)
            out.strings[10] = linearize(*m_put, std::vector<Block>{pp, {kNPs}, {kNPo1}});
        else
            out.strings[10] = linearize(*m_put, std::vector<Block>{{kNPo1}, pp, {kNPs}});
        out.names[10] = "transitive-adposition";
    }
    // 11. modified-subject intransitive: head = NP:s|n N, Adj = N|mod N
    if (hasN && ndir && mod) {
        Category head = f(kNPs, *ndir, kN);
        Category adj = f(kN, *mod, kN);
        Block nbar = place({adj}, *mod, {kN});
        Block subjBlock = place({head}, *ndir, nbar);
        out.strings[11] = linearize(intrans, {subjBlock});
        out.names[11] = "modified-subject";
    }
    // 12. adposition-object relative on the matrix object; the relativizer
    // takes the composed verb-adposition chain, so parsing needs
    // composition.
    if (hasRc && hasPP && trans && v_pp && relcl) {
        Category p_gap = f(kPP, *adpos, kNPo2);
        Category chain = f(intrans, *adpos, kNPo2);
        Category noun = f(kNPo1, *relcl, kRc);
        Block rel;
        if (*relcl == Dir::Right) {
            Category which = f(f(kRc, Dir::Right, chain), Dir::Right, kNPs);
            rel = Block{noun, which, kNPs};
            Block vp = place({*v_pp}, *adpos, {p_gap});
            rel.insert(rel.end(), vp.begin(), vp.end());
        } else {
            // The greedy parser permutes the composed chain and reduces it
            // with the clause subject, so the premodifying relativizer takes
            // the resulting gapped clause (as in template 8).
            Category which = f(kRc, Dir::Left, f(kS, *adpos, kNPo2));
            Block vp = place({*v_pp}, *adpos, {p_gap});
            Block clause = place(vp, *subj, {kNPs});
            rel = clause;
            rel.push_back(which);
            rel.push_back(noun);
        }
        out.strings[12] = linearize(*trans, std::vector<Block>{rel, {kNPs}});
        out.names[12] = "adposition-relative";
    }
    return out;
}

std::string config_key(const GrammarConfig& g) {
    std::string k;
    k += g.comp ? 'C' : 'c';
    k += g.perm ? 'P' : 'p';
    k += g.v1 ? '1' : '-';
    k += g.v2 ? '2' : '-';
    for (bool b : g.atom_on) k += b ? 'T' : 'f';
    for (const auto& o : g.dir) k += !o ? '?' : (*o == Dir::Left ? 'L' : 'R');
    return k;
}

}  // namespace

std::vector<SentenceType> generate_language(const GrammarConfig& config) {
    TemplateSet ts = build_templates(config);
    Grammar g;
    g.config = config;
    for (int id = 1; id <= 12; ++id) {
        if (ts.strings[static_cast<std::size_t>(id)].empty()) continue;
        SentenceType st;
        st.template_id = id;
        st.cats = ts.strings[static_cast<std::size_t>(id)];
        st.name = ts.names[static_cast<std::size_t>(id)];
        g.types.push_back(std::move(st));
    }
    // Drop any template the deterministic parser cannot derive under the
    // grammar's rules; iterate because the lexicon shrinks with each drop.
    for (;;) {
        g.lexicon.clear();
        for (const auto& t : g.types)
            for (const auto& c : t.cats)
                if (c.is_functor()) g.lexicon.push_back(c);
        std::vector<SentenceType> kept;
        for (const auto& t : g.types)
            if (parse(t, g).success) kept.push_back(t);
        bool changed = kept.size() != g.types.size();
        g.types = std::move(kept);
        if (!changed) break;
    }
    return g.types;
}

GrammarPtr decode(const PSettings& ps, std::string* why) {
    auto fail = [&](const char* reason) -> GrammarPtr {
        if (why) *why = reason;
        return nullptr;
    };
    if (!ps.on(ParamId::Applic)) return fail("application unavailable");
    if (!ps.on(ParamId::S) || !ps.on(ParamId::NP)) return fail("missing S or NP");
    if (ps.on(ParamId::V1) && ps.on(ParamId::V2)) return fail("v1 and v2 both set");

    GrammarConfig cfg;
    cfg.comp = ps.on(ParamId::Comp);
    cfg.perm = ps.on(ParamId::Perm);
    cfg.v1 = ps.on(ParamId::V1);
    cfg.v2 = ps.on(ParamId::V2);
    cfg.atom_on[static_cast<std::size_t>(Atom::S)] = true;
    cfg.atom_on[static_cast<std::size_t>(Atom::NP)] = true;
    cfg.atom_on[static_cast<std::size_t>(Atom::N)] = ps.on(ParamId::N);
    cfg.atom_on[static_cast<std::size_t>(Atom::Rc)] = ps.on(ParamId::Rc);
    cfg.atom_on[static_cast<std::size_t>(Atom::PP)] = ps.on(ParamId::PP);
    cfg.atom_on[static_cast<std::size_t>(Atom::Sc)] = ps.on(ParamId::Sc);

    // Specific parameters override gen; unset ones inherit its value.
    // Directions that stay unresolved leave their constructions ungenerated.
    auto gen = ps.own_dir(ParamId::Gen);
    auto resolve = [&](ParamId p) { return ps.own_dir(p) ? ps.own_dir(p) : gen; };
    cfg.dir[static_cast<std::size_t>(DirParam::Gen)] = gen;
    cfg.dir[static_cast<std::size_t>(DirParam::N)] = resolve(ParamId::NDir);
    cfg.dir[static_cast<std::size_t>(DirParam::Subj)] = resolve(ParamId::Subj);
    cfg.dir[static_cast<std::size_t>(DirParam::Obj)] = resolve(ParamId::Obj);
    cfg.dir[static_cast<std::size_t>(DirParam::Mod)] = resolve(ParamId::Mod);
    cfg.dir[static_cast<std::size_t>(DirParam::Spec)] = resolve(ParamId::Spec);
    cfg.dir[static_cast<std::size_t>(DirParam::Relcl)] = resolve(ParamId::Relcl);
    cfg.dir[static_cast<std::size_t>(DirParam::Adpos)] = resolve(ParamId::Adpos);
    cfg.dir[static_cast<std::size_t>(DirParam::Compl)] = resolve(ParamId::Compl);

    static thread_local std::unordered_map<std::string, GrammarPtr> cache;
    std::string key = config_key(cfg);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    auto g = std::make_shared<Grammar>();
    g->config = cfg;
    g->types = generate_language(cfg);
    for (const auto& t : g->types)
        for (const auto& c : t.cats)
            if (c.is_functor()) g->lexicon.push_back(c);
    GrammarPtr result = g;
    cache.emplace(std::move(key), result);
    return result;
}

namespace {

void set_all(PSettings& ps, std::initializer_list<std::pair<ParamId, bool>> vals) {
    for (auto [p, v] : vals) ps.set(p, PStatus::Absolute, v);
}

PSettings full_fixture(Dir gen, bool v1, Dir n, Dir subj, Dir obj, bool v2,
                       Dir mod, Dir spec, Dir relcl, Dir adpos,
                       std::optional<Dir> compl_) {
    PSettings ps;
    set_all(ps, {{ParamId::Applic, true}, {ParamId::Comp, true},
                 {ParamId::Perm, true}, {ParamId::S, true},
                 {ParamId::NP, true}, {ParamId::N, true},
                 {ParamId::Rc, true}, {ParamId::PP, true},
                 {ParamId::Sc, true}, {ParamId::V1, v1}, {ParamId::V2, v2}});
    ps.set(ParamId::Gen, PStatus::Absolute, one_of(gen));
    ps.set(ParamId::NDir, PStatus::Absolute, one_of(n));
    ps.set(ParamId::Subj, PStatus::Absolute, one_of(subj));
    ps.set(ParamId::Obj, PStatus::Absolute, one_of(obj));
    ps.set(ParamId::Mod, PStatus::Absolute, one_of(mod));
    ps.set(ParamId::Spec, PStatus::Absolute, one_of(spec));
    ps.set(ParamId::Relcl, PStatus::Absolute, one_of(relcl));
    ps.set(ParamId::Adpos, PStatus::Absolute, one_of(adpos));
    if (compl_) ps.set(ParamId::Compl, PStatus::Absolute, one_of(*compl_));
    return ps;
}

constexpr Dir L = Dir::Left;
constexpr Dir R = Dir::Right;

}  // namespace

const std::vector<CanonicalLanguage>& all_canonical() {
    static const std::vector<CanonicalLanguage> all = {
        CanonicalLanguage::English,    CanonicalLanguage::Welsh,
        CanonicalLanguage::Malagasy,   CanonicalLanguage::Tagalog,
        CanonicalLanguage::Japanese,   CanonicalLanguage::German,
        CanonicalLanguage::Hixkaryana, CanonicalLanguage::OSV,
    };
    return all;
}

const char* canonical_name(CanonicalLanguage l) {
    switch (l) {
        case CanonicalLanguage::English: return "English";
        case CanonicalLanguage::Welsh: return "Welsh";
        case CanonicalLanguage::Malagasy: return "Malagasy";
        case CanonicalLanguage::Tagalog: return "Tagalog";
        case CanonicalLanguage::Japanese: return "Japanese";
        case CanonicalLanguage::German: return "German";
        case CanonicalLanguage::Hixkaryana: return "Hixkaryana";
        case CanonicalLanguage::OSV: return "OSV";
    }
    return "?";
}

const char* canonical_family(CanonicalLanguage l) {
    switch (l) {
        case CanonicalLanguage::English: return "SVO";
        case CanonicalLanguage::Welsh: return "SVOv1";
        case CanonicalLanguage::Malagasy: return "VOS";
        case CanonicalLanguage::Tagalog: return "VSO";
        case CanonicalLanguage::Japanese: return "SOV";
        case CanonicalLanguage::German: return "SOVv2";
        case CanonicalLanguage::Hixkaryana: return "OVS";
        case CanonicalLanguage::OSV: return "OSV";
    }
    return "?";
}

std::optional<CanonicalLanguage> canonical_from_name(std::string_view name) {
    for (auto l : all_canonical()) {
        if (name == canonical_name(l) || name == canonical_family(l)) return l;
    }
    return std::nullopt;
}

PSettings canonical(CanonicalLanguage l) {
    switch (l) {
        case CanonicalLanguage::English:
            return full_fixture(R, false, R, L, R, false, R, R, R, R, R);
        case CanonicalLanguage::Welsh:
            return full_fixture(R, true, R, L, R, false, R, R, R, R, R);
        case CanonicalLanguage::Malagasy:
            return full_fixture(R, false, R, R, R, false, R, R, R, R, R);
        case CanonicalLanguage::Tagalog:
            return full_fixture(R, true, R, R, R, false, R, R, R, R, R);
        case CanonicalLanguage::Japanese:
            // compl stays unset, inheriting gen.
            return full_fixture(L, false, L, L, L, false, L, L, L, L, std::nullopt);
        case CanonicalLanguage::German:
            return full_fixture(R, false, R, L, L, true, R, R, R, R, R);
        case CanonicalLanguage::Hixkaryana:
            // OVS with mixed order: rightward phrases, leftward adpositions
            // and complementizers.
            return full_fixture(R, false, R, R, L, false, R, R, R, L, L);
        case CanonicalLanguage::OSV:
            return full_fixture(L, true, L, L, L, false, L, L, L, L, L);
    }
    throw std::logic_error("bad language");
}

PSettings mixed_clausal_fixture() {
    // SOV clause order with English-style phrasal syntax.
    return full_fixture(R, false, R, L, L, false, R, R, R, R, R);
}

std::string language_label(const Grammar& g) {
    std::string family;
    for (const auto& t : g.types) {
        if (t.template_id != 2) continue;
        for (const auto& c : t.cats) {
            if (c.is_functor()) family += 'V';
            else if (c.role() == Role::Subj) family += 'S';
            else if (c.role() == Role::Obj1) family += 'O';
        }
    }
    if (family.empty()) family = "SV";  // intransitive-only fragment
    if (g.config.v1) family += "-v1";
    if (g.config.v2) family += "-v2";
    std::array<bool, 13> present{};
    for (const auto& t : g.types) present[static_cast<std::size_t>(t.template_id)] = true;
    if (!g.config.atom(Atom::N)) family += "-N";
    if (!g.config.atom(Atom::Rc)) family += "-Rc";
    if (!g.config.atom(Atom::PP)) family += "-PP";
    if (!g.config.atom(Atom::Sc)) family += "-Sc";
    if (g.config.atom(Atom::Rc) && g.config.atom(Atom::PP) && !present[12])
        family += "-COMP";
    if (g.config.atom(Atom::Rc) && !present[8]) family += "-GWP";
    return family;
}

GrammarEnumeration enumerate_grammars() {
    GrammarEnumeration out;
    std::map<std::string, PSettings> seen;
    // All-absolute value combinations of the grammar set.  The inheritance
    // lattice behind the sequential encoding shows up here as validity
    // constraints: noun-phrase-internal orders share one direction axis
    // (n = spec = mod) and the functional heads another (adpos = compl);
    // the phrasal categories presuppose N, subordination presupposes
    // relativization and adpositions, marked verb placement (v1/v2) occurs
    // only in fully categorized grammars, and v1 and v2 exclude each other.
    for (int comp = 0; comp < 2; ++comp)
    for (int perm = 0; perm < 2; ++perm)
    for (int nOn = 0; nOn < 2; ++nOn)
    for (int rcOn = 0; rcOn < 2; ++rcOn)
    for (int ppOn = 0; ppOn < 2; ++ppOn)
    for (int scOn = 0; scOn < 2; ++scOn)
    for (int vstate = 0; vstate < 3; ++vstate)
    for (int subj = 0; subj < 2; ++subj)
    for (int obj = 0; obj < 2; ++obj)
    for (int np = 0; np < 2; ++np)
    for (int func = 0; func < 2; ++func)
    for (int relcl = 0; relcl < 2; ++relcl) {
        if (!nOn && (rcOn || ppOn || scOn)) continue;
        if (scOn && (!rcOn || !ppOn)) continue;
        if (vstate != 0 && !(nOn && rcOn && ppOn && scOn)) continue;
        PSettings ps;
        set_all(ps, {{ParamId::Applic, true},
                     {ParamId::Comp, comp == 1},
                     {ParamId::Perm, perm == 1},
                     {ParamId::S, true},
                     {ParamId::NP, true},
                     {ParamId::N, nOn == 1},
                     {ParamId::Rc, rcOn == 1},
                     {ParamId::PP, ppOn == 1},
                     {ParamId::Sc, scOn == 1},
                     {ParamId::V1, vstate == 1},
                     {ParamId::V2, vstate == 2}});
        ps.set(ParamId::Gen, PStatus::Absolute, subj == 1);
        ps.set(ParamId::Subj, PStatus::Absolute, subj == 1);
        ps.set(ParamId::Obj, PStatus::Absolute, obj == 1);
        ps.set(ParamId::NDir, PStatus::Absolute, np == 1);
        ps.set(ParamId::Spec, PStatus::Absolute, np == 1);
        ps.set(ParamId::Mod, PStatus::Absolute, np == 1);
        ps.set(ParamId::Adpos, PStatus::Absolute, func == 1);
        ps.set(ParamId::Compl, PStatus::Absolute, func == 1);
        ps.set(ParamId::Relcl, PStatus::Absolute, relcl == 1);
        auto g = decode(ps);
        if (!g || g->types.size() < 3) continue;
        ++out.raw_valid;
        seen.emplace(g->stringset_key(), ps);
    }
    out.distinct = seen.size();
    out.representatives.reserve(seen.size());
    for (auto& [k, ps] : seen) out.representatives.push_back(ps);
    return out;
}

bool is_subset_language(const std::vector<SentenceType>& a,
                        const std::vector<SentenceType>& b) {
    std::multiset<std::string> bs;
    for (const auto& t : b) bs.insert(t.key());
    for (const auto& t : a) {
        auto it = bs.find(t.key());
        if (it == bs.end()) return false;
        bs.erase(it);
    }
    return true;
}

}  // namespace gcg
