#include "gcg/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace gcg {

LAgt make_adult(int id, const PSettings& genome, const PSettings& language,
                int age) {
    LAgt a;
    a.id = id;
    a.genome = genome;
    a.learner = LearnerState::from_genome(genome);
    a.age = age;
    // Adopt the language's values on every non-absolute entry, as if
    // learning had completed; the genome is untouched.  Entries whose birth
    // value already matches count as never reset.
    for (int i = 0; i < kNumParams; ++i) {
        const PSetting& want = language.at(i);
        PSetting& cur = a.learner.current.at(i);
        if (cur.status == PStatus::Absolute) continue;
        if (want.value && cur.value != want.value) {
            cur.value = want.value;
            a.learner.touched[static_cast<std::size_t>(i)] = true;
        }
    }
    a.learner.age_cycles = age - 1;
    return a;
}

double fitness_of(const Counters& c, bool use_wml) {
    if (c.GC + c.PC == 0 || c.GC + c.GSC == 0) return 0.0;
    double f = static_cast<double>(c.SI) / static_cast<double>(c.GC + c.PC);
    f *= static_cast<double>(c.GC) / static_cast<double>(c.GC + c.GSC);
    if (use_wml) {
        if (c.PC - c.PF == 0 || c.WML_sum == 0) return 0.0;
        f *= 1.0 / (static_cast<double>(c.WML_sum) /
                    static_cast<double>(c.PC - c.PF));
    }
    return f;
}

InteractOutcome interact(LAgt& speaker, LAgt& hearer, const SimConfig& cfg,
                         Rng& rng) {
    InteractOutcome out;
    auto g = decode(speaker.learner.current);
    if (!g || g->types.size() < 3) return out;  // speaker has no language
    out.spoke = true;

    const auto& types = g->types;
    std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
    const SentenceType& st = types[pick(rng)];

    speaker.counters.GC += 1;
    if (types.size() < 12) speaker.counters.GSC += 1;
    hearer.counters.PC += 1;

    auto hg = decode(hearer.learner.current);
    ParseOutcome po;
    if (hg) po = parse(st, *hg);
    hearer.counters.WML_sum += po.total_wml;
    if (po.success) {
        out.success = true;
        speaker.counters.SI += 1;
        hearer.counters.SI += 1;
        speaker.partner_success[hearer.id] += 1;
        hearer.partner_success[speaker.id] += 1;
    } else {
        hearer.counters.PF += 1;
    }
    if (hearer.in_critical_period()) {
        hearer.learner.memory_limited = cfg.memory_limited_learning;
        hearer.learner = learn_step(hearer.learner, st, rng).state;
    }
    return out;
}

namespace {

// Shares of the population's birth settings: the heritable state whose
// drift the emergence runs measure.
StatusShares genome_shares_over(const Population& pop,
                                const std::vector<ParamId>& params) {
    StatusShares s;
    long a = 0, d = 0, u = 0, total = 0;
    for (const auto& agt : pop.agents) {
        for (ParamId p : params) {
            ++total;
            switch (agt.genome.at(p).status) {
                case PStatus::Absolute: ++a; break;
                case PStatus::Default: ++d; break;
                case PStatus::Unset: ++u; break;
            }
        }
    }
    if (total == 0) return s;
    s.absolute = static_cast<double>(a) / static_cast<double>(total);
    s.defaulted = static_cast<double>(d) / static_cast<double>(total);
    s.unset = static_cast<double>(u) / static_cast<double>(total);
    return s;
}

// Shares of the population's current settings.  A default entry that has
// been reset carries the table's R code: it is no longer a default setting
// and joins neither bucket.  A randomly assigned unset entry keeps its "?"
// status.
StatusShares shares_over(const Population& pop, const std::vector<ParamId>& params) {
    StatusShares s;
    long a = 0, d = 0, u = 0, total = 0;
    for (const auto& agt : pop.agents) {
        for (ParamId p : params) {
            ++total;
            bool touched = agt.learner.touched[static_cast<std::size_t>(p)];
            switch (agt.learner.current.at(p).status) {
                case PStatus::Absolute: ++a; break;
                case PStatus::Default:
                    if (!touched) ++d;
                    break;
                case PStatus::Unset: ++u; break;
            }
        }
    }
    if (total == 0) return s;
    s.absolute = static_cast<double>(a) / static_cast<double>(total);
    s.defaulted = static_cast<double>(d) / static_cast<double>(total);
    s.unset = static_cast<double>(u) / static_cast<double>(total);
    return s;
}

const std::vector<ParamId>& tracked_params() {
    static const std::vector<ParamId> t = {ParamId::Gen, ParamId::Subj,
                                           ParamId::Obj, ParamId::Comp,
                                           ParamId::Perm};
    return t;
}

const std::vector<ParamId>& every_param() {
    static std::vector<ParamId> all = [] {
        std::vector<ParamId> v;
        for (int i = 0; i < kNumParams; ++i) v.push_back(static_cast<ParamId>(i));
        return v;
    }();
    return all;
}

}  // namespace

StatusShares genome_status_shares(const Population& pop, bool tracked_only) {
    return genome_shares_over(pop, tracked_only ? tracked_params() : every_param());
}

LAgt reproduce(const LAgt& a, const LAgt& b, const SimConfig& cfg, Rng& rng,
               int child_id) {
    PSettings child = a.genome;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (coin(rng) < cfg.crossover_prob) {
        // One-point crossover over birth settings; the point keeps at least
        // one entry from each parent.
        std::uniform_int_distribution<int> point_dist(1, kNumParams - 1);
        int point = point_dist(rng);
        for (int i = point; i < kNumParams; ++i) child.at(i) = b.genome.at(i);
    }
    if (coin(rng) < cfg.mutation_prob) {
        std::uniform_int_distribution<int> pick(0, kNumParams - 1);
        int i = pick(rng);
        PSetting& e = child.at(i);
        // Perturb to a uniformly chosen legal alternative of (status, value).
        std::uniform_int_distribution<int> st(0, 2);
        std::uniform_int_distribution<int> val(0, 1);
        PStatus ns = static_cast<PStatus>(st(rng));
        e.status = ns;
        if (ns == PStatus::Unset) e.value = std::nullopt;
        else e.value = val(rng) == 1;
    }
    LAgt kid;
    kid.id = child_id;
    kid.genome = child;
    kid.learner = LearnerState::from_genome(child);
    kid.age = 1;
    return kid;
}

CycleRecord run_cycle(Population& pop, const SimConfig& cfg, Rng& rng,
                      int cycle_index) {
    CycleRecord rec;
    rec.cycle = cycle_index;
    if (pop.agents.empty()) {
        rec.extinct = true;
        return rec;
    }

    for (auto& a : pop.agents) {
        a.learner.memory_limited = cfg.memory_limited_learning;
        a.learner.age_cycles = a.age - 1;
        a.partner_success.clear();
    }

    std::uniform_int_distribution<std::size_t> pick(0, pop.agents.size() - 1);
    for (int i = 0; i < cfg.interactions_per_cycle; ++i) {
        if (pop.agents.size() < 2) break;
        std::size_t s = pick(rng);
        std::size_t h = pick(rng);
        while (h == s) h = pick(rng);
        interact(pop.agents[s], pop.agents[h], cfg, rng);
    }

    double mean = 0.0;
    for (auto& a : pop.agents) {
        a.fitness = fitness_of(a.counters, cfg.memory_limited_parsing);
        mean += a.fitness;
    }
    mean /= static_cast<double>(pop.agents.size());
    rec.mean_fitness = mean;

    // Mortality: hard age cap, plus stochastic death for the relatively
    // unfit.
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::size_t before = pop.agents.size();
    std::vector<LAgt> survivors;
    survivors.reserve(pop.agents.size());
    for (auto& a : pop.agents) {
        if (a.age > 10) continue;
        if (a.fitness < 0.5 * mean && coin(rng) < cfg.mortality_prob) continue;
        survivors.push_back(std::move(a));
    }
    std::size_t deaths = before - survivors.size();
    pop.agents = std::move(survivors);

    // Reproduction: pairs of adults at or above the median fitness with a
    // mutually successful history this cycle.
    if (!pop.agents.empty()) {
        std::vector<double> fits;
        for (const auto& a : pop.agents) fits.push_back(a.fitness);
        std::nth_element(fits.begin(), fits.begin() + fits.size() / 2, fits.end());
        double median = fits[fits.size() / 2];

        std::vector<std::size_t> eligible;
        for (std::size_t i = 0; i < pop.agents.size(); ++i) {
            const LAgt& a = pop.agents[i];
            if (a.adult() && a.fitness >= median) eligible.push_back(i);
        }
        std::size_t births_target =
            std::max(deaths, static_cast<std::size_t>(std::floor(
                                 cfg.growth_cap * static_cast<double>(before))));
        std::vector<LAgt> children;
        if (eligible.size() >= 2) {
            std::uniform_int_distribution<std::size_t> pe(0, eligible.size() - 1);
            int attempts = 0;
            while (children.size() < births_target &&
                   attempts < static_cast<int>(births_target) * 20) {
                ++attempts;
                std::size_t ia = eligible[pe(rng)];
                std::size_t ib = eligible[pe(rng)];
                if (ia == ib) continue;
                const LAgt& pa = pop.agents[ia];
                const LAgt& pb = pop.agents[ib];
                auto it = pa.partner_success.find(pb.id);
                if (it == pa.partner_success.end() || it->second < 1) continue;
                children.push_back(reproduce(pa, pb, cfg, rng, pop.next_id++));
            }
        }

        for (auto& a : pop.agents) {
            a.age += 1;
            a.counters.reset();
        }
        for (auto& c : children) pop.agents.push_back(std::move(c));
    }

    rec.population = static_cast<int>(pop.agents.size());
    rec.extinct = pop.agents.empty();
    rec.tracked = shares_over(pop, tracked_params());
    rec.all_params = genome_shares_over(pop, every_param());
    for (const auto& a : pop.agents) {
        auto g = decode(a.learner.current);
        if (!g || g->types.size() < 3) continue;
        std::string label = language_label(*g);
        std::ostringstream os;
        os << label << '#' << std::hex
           << (std::hash<std::string>{}(g->stringset_key()) & 0xffff);
        rec.speakers[os.str()] += 1;
    }
    return rec;
}

SimResult run_simulation(Population pop, const SimConfig& cfg) {
    SimResult res;
    Rng rng(cfg.seed);
    for (int c = 0; c < cfg.cycles; ++c) {
        CycleRecord rec = run_cycle(pop, cfg, rng, c);
        res.history.push_back(rec);
        if (rec.extinct) {
            res.extinct = true;
            break;
        }
    }
    return res;
}

}  // namespace gcg
