#include "hclab/series.hpp"

#include <algorithm>

namespace hclab {

Subgroup center(const GroupPtr& g) { return centralizer(g, g->full_bitset()); }

NormalSeries upper_central_series(const GroupPtr& g) {
    NormalSeries s{g, {}, SeriesKind::UpperCentral};
    s.terms.push_back(trivial_subgroup(g));
    for (;;) {
        const Subgroup& z = s.terms.back();
        if (z.is_whole_group()) break;
        auto [q, pi] = quotient(g, z);
        Subgroup next = pi.pull(center(q));
        if (next.same_set(z)) break;
        s.terms.push_back(std::move(next));
    }
    return s;
}

Subgroup hypercenter(const GroupPtr& g) { return upper_central_series(g).terms.back(); }

Subgroup derived_subgroup_of(const Subgroup& h) {
    const Group& g = *h.parent();
    ElementBitset seed(g.order());
    seed.set(0);
    for (int a : h.elements())
        for (int b : h.elements())
            seed.set(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    return generated_subgroup(h.parent(), seed);
}

Subgroup derived_subgroup(const GroupPtr& g) { return derived_subgroup_of(whole_group(g)); }

NormalSeries derived_series(const GroupPtr& g) {
    NormalSeries s{g, {}, SeriesKind::Derived};
    s.terms.push_back(whole_group(g));
    for (;;) {
        Subgroup next = derived_subgroup_of(s.terms.back());
        if (next.same_set(s.terms.back())) break;
        s.terms.push_back(std::move(next));
        if (s.terms.back().is_trivial()) break;
    }
    return s;
}

Subgroup commutator_with_group(const Subgroup& a) {
    const Group& g = *a.parent();
    ElementBitset seed(g.order());
    seed.set(0);
    for (int x : a.elements())
        for (int y = 0; y < g.order(); ++y)
            seed.set(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
    return generated_subgroup(a.parent(), seed);
}

NormalSeries lower_central_series(const GroupPtr& g) {
    NormalSeries s{g, {}, SeriesKind::LowerCentral};
    s.terms.push_back(whole_group(g));
    for (;;) {
        Subgroup next = commutator_with_group(s.terms.back());
        if (next.same_set(s.terms.back())) break;
        s.terms.push_back(std::move(next));
        if (s.terms.back().is_trivial()) break;
    }
    return s;
}

Subgroup nilpotent_residual(const GroupPtr& g) { return lower_central_series(g).terms.back(); }

Subgroup fitting(const GroupPtr& g) {
    Subgroup f = trivial_subgroup(g);
    for (int p : prime_divisors(g->order())) f = join(f, p_radicals(g, p).o_p);
    return f;
}

Subgroup fitting_of(const Subgroup& h) {
    if (h.is_whole_group()) return fitting(h.parent());
    GroupView v = as_group(h);
    return v.lift(fitting(v.group));
}

Subgroup generalized_fitting(const GroupPtr& g) {
    Subgroup f = fitting(g);
    if (f.is_whole_group()) return f;
    Subgroup c = centralizer(g, f.bits());
    // R = F(G) C_G(F(G)) is a normal subgroup; F*/F is the socle of R/F.
    Subgroup r = join(f, c);
    GroupView rv = as_group(r);
    Subgroup f_local = rv.restrict_to_view(f);
    auto [q, pi] = quotient(rv.group, f_local);
    Subgroup s = socle(q);
    return rv.lift(pi.pull(s));
}

Subgroup generalized_fitting_of(const Subgroup& h) {
    if (h.is_whole_group()) return generalized_fitting(h.parent());
    GroupView v = as_group(h);
    return v.lift(generalized_fitting(v.group));
}

NormalSeries chief_series(const GroupPtr& g, bool reversed) {
    NormalSeries s{g, {}, SeriesKind::Chief};
    s.terms.push_back(trivial_subgroup(g));
    while (!s.terms.back().is_whole_group()) {
        const Subgroup& bottom = s.terms.back();
        auto [q, pi] = quotient(g, bottom);
        // Minimal normal subgroups of G/bottom that are G-invariant are the
        // minimal normals of the quotient; pull back and take the extreme
        // preimage bitset.
        auto mins = minimal_normal_subgroups(q);
        if (mins.empty()) throw Error("no minimal normal subgroup in nontrivial quotient");
        Subgroup best = pi.pull(mins[0]);
        for (std::size_t i = 1; i < mins.size(); ++i) {
            Subgroup cand = pi.pull(mins[i]);
            bool better = cand.less_than(best);
            if (reversed ? !better && !cand.same_set(best) : better) best = std::move(cand);
        }
        s.terms.push_back(std::move(best));
    }
    return s;
}

std::vector<int> chief_factor_orders(const NormalSeries& s) {
    std::vector<int> out;
    for (std::size_t i = 1; i < s.terms.size(); ++i)
        out.push_back(s.terms[i].size() / s.terms[i - 1].size());
    return out;
}

bool is_chief_factor(const GroupPtr& g, const Subgroup& k, const Subgroup& h) {
    if (!k.bits().is_subset_of(h.bits())) throw Error("K must be contained in H");
    if (!is_normal(k)) throw NotNormal("K is not normal");
    if (!is_normal(h)) throw NotNormal("H is not normal");
    if (k.same_set(h)) return false;
    auto [q, pi] = quotient(g, k);
    Subgroup hq = pi.push(h);
    for (const auto& m : normal_subgroups(q))
        if (!m.is_trivial() && m.size() < hq.size() && m.bits().is_subset_of(hq.bits()))
            return false;
    return true;
}

} // namespace hclab
