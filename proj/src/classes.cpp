#include "hclab/classes.hpp"

namespace hclab {

bool is_nilpotent(const GroupPtr& g) {
    bool via_series = nilpotent_residual(g).is_trivial();
    bool via_sylows = true;
    for (int p : prime_divisors(g->order()))
        if (!is_normal(sylow_subgroup(g, p))) {
            via_sylows = false;
            break;
        }
    if (via_series != via_sylows)
        throw Error("nilpotency criteria disagree on " + g->name());
    return via_series;
}

bool is_nilpotent_subgroup(const Subgroup& h) {
    if (h.is_whole_group()) return is_nilpotent(h.parent());
    return is_nilpotent(as_group(h).group);
}

bool is_p_nilpotent(const GroupPtr& g, int p) {
    int target = g->order() / p_part(g->order(), p);
    for (const auto& n : normal_subgroups(g))
        if (n.size() == target) return true;
    return false;
}

bool is_solvable(const GroupPtr& g) { return derived_series(g).terms.back().is_trivial(); }

bool is_solvable_subgroup(const Subgroup& h) {
    if (h.is_whole_group()) return is_solvable(h.parent());
    // The derived series of a subgroup lives inside the parent.
    Subgroup t = h;
    for (;;) {
        Subgroup next = derived_subgroup_of(t);
        if (next.same_set(t)) return t.is_trivial();
        t = std::move(next);
        if (t.is_trivial()) return true;
    }
}

bool is_supersolvable(const GroupPtr& g) {
    for (int f : chief_factor_orders(chief_series(g)))
        if (!is_prime(f)) return false;
    return true;
}

bool has_sylow_tower_supersolvable_type(const GroupPtr& g) {
    GroupPtr cur = g;
    while (cur->order() > 1) {
        auto primes = prime_divisors(cur->order());
        int p = primes.back(); // largest prime first
        Subgroup syl = sylow_subgroup(cur, p);
        if (!is_normal(syl)) return false;
        cur = quotient(cur, syl).first;
    }
    return true;
}

bool is_quasinilpotent(const GroupPtr& g) { return generalized_fitting(g).is_whole_group(); }

std::pair<bool, std::optional<SchmidtDecomposition>>
is_minimal_nonnilpotent(const GroupPtr& g, const SubgroupLattice& lat) {
    if (is_nilpotent(g)) return {false, std::nullopt};
    for (int i = 0; i < lat.size(); ++i) {
        if (i == lat.full_index()) continue;
        if (!is_nilpotent_subgroup(lat[i])) return {false, std::nullopt};
    }

    // Schmidt structure: G = P x| Q with P the normal Sylow p-subgroup, Q a
    // nonnormal cyclic Sylow q-subgroup, P/Phi(P) a chief factor, and
    // exp(P) = p for odd p, at most 4 for p = 2.
    auto primes = prime_divisors(g->order());
    if (primes.size() != 2) throw Error("Schmidt group without exactly two primes: " + g->name());
    Subgroup s0 = sylow_subgroup(g, primes[0]);
    Subgroup s1 = sylow_subgroup(g, primes[1]);
    bool first_normal = is_normal(s0);
    SchmidtDecomposition d{first_normal ? std::move(s0) : std::move(s1),
                           first_normal ? std::move(s1) : std::move(s0),
                           first_normal ? primes[0] : primes[1],
                           first_normal ? primes[1] : primes[0], 0, false};
    if (!is_normal(d.sylow_p) || is_normal(d.sylow_q) || !is_cyclic(d.sylow_q))
        throw Error("Schmidt structure violated in " + g->name());
    GroupView pv = as_group(d.sylow_p);
    d.exp_p = pv.group->exponent();
    if (d.p > 2 ? d.exp_p != d.p : d.exp_p > 4)
        throw Error("Schmidt exponent bound violated in " + g->name());
    Subgroup phi = frattini(lat, d.sylow_p);
    d.frattini_chief = is_chief_factor(g, phi, d.sylow_p);
    if (!d.frattini_chief) throw Error("P/Phi(P) is not a chief factor in " + g->name());
    return {true, std::move(d)};
}

bool in_formation(const GroupPtr& g, FormationTag f) {
    return f == FormationTag::Supersolvable ? is_supersolvable(g) : is_solvable(g);
}

const char* formation_name(FormationTag f) {
    return f == FormationTag::Supersolvable ? "supersolvable" : "solvable";
}

} // namespace hclab
