#include "hclab/embedding.hpp"

#include <algorithm>

namespace hclab {

namespace {

// First (g, x) with x in H^g n N \ H, if any; N is the relevant normalizer.
std::optional<EmbeddingVerdict::Counterexample>
violating_pair(const Group& g, const ElementBitset& h, const ElementBitset& n,
               const std::vector<int>& conjugators) {
    for (int x : conjugators) {
        ElementBitset cut = conjugate_bits(g, h, x);
        cut &= n;
        if (cut.is_subset_of(h)) continue;
        for (int e : cut.members())
            if (!h.test(e)) return EmbeddingVerdict::Counterexample{x, e};
    }
    return std::nullopt;
}

} // namespace

EmbeddingVerdict is_h_subgroup(const Subgroup& h) {
    return is_h_subgroup_in(whole_group(h.parent()), h);
}

EmbeddingVerdict is_h_subgroup_in(const Subgroup& ambient, const Subgroup& h) {
    const Group& g = *h.parent();
    Subgroup n = intersect(normalizer(h), ambient);
    auto bad = violating_pair(g, h.bits(), n.bits(), ambient.elements());
    EmbeddingVerdict v;
    v.holds = !bad.has_value();
    v.counterexample = bad;
    return v;
}

EmbeddingVerdict is_hc_subgroup(const Subgroup& h, HcVariant variant) {
    return is_hc_subgroup(h, normal_subgroups(h.parent()), variant);
}

EmbeddingVerdict is_hc_subgroup(const Subgroup& h, const std::vector<Subgroup>& normals,
                                HcVariant variant) {
    return is_hc_subgroup_in(whole_group(h.parent()), h, normals, variant);
}

EmbeddingVerdict is_hc_subgroup_in(const Subgroup& ambient, const Subgroup& h,
                                   const std::vector<Subgroup>& normals_in_ambient,
                                   HcVariant variant) {
    const Group& g = *h.parent();
    Subgroup ngh = intersect(normalizer(h), ambient);
    for (const auto& t : normals_in_ambient) {
        ElementBitset ht = product_set(g, h.bits(), t.bits());
        if (ht.count() != ambient.size()) continue;
        if (variant == HcVariant::DropContainmentClause) {
            EmbeddingVerdict v;
            v.holds = true;
            v.witness = t;
            return v;
        }
        ElementBitset nth =
            variant == HcVariant::AmbientNormalizer ? ngh.bits() : (ngh.bits() & t.bits());
        if (!violating_pair(g, h.bits(), nth, ambient.elements())) {
            EmbeddingVerdict v;
            v.holds = true;
            v.witness = t;
            return v;
        }
    }
    // No T works; in particular T = ambient fails, so the plain H-subgroup
    // condition has a violating pair worth reporting.
    EmbeddingVerdict v;
    v.counterexample = violating_pair(g, h.bits(), ngh.bits(), ambient.elements());
    return v;
}

EmbeddingVerdict is_c_normal(const Subgroup& h) {
    return is_c_normal(h, normal_subgroups(h.parent()));
}

EmbeddingVerdict is_c_normal(const Subgroup& h, const std::vector<Subgroup>& normals) {
    const Group& g = *h.parent();
    Subgroup core = normal_core(h);
    for (const auto& k : normals) {
        ElementBitset hk = product_set(g, h.bits(), k.bits());
        if (hk.count() != g.order()) continue;
        ElementBitset cut = h.bits() & k.bits();
        if (cut.is_subset_of(core.bits())) {
            EmbeddingVerdict v;
            v.holds = true;
            v.witness = k;
            return v;
        }
    }
    return {};
}

EmbeddingVerdict is_weakly_h_subgroup(const Subgroup& h) {
    return is_weakly_h_subgroup(h, normal_subgroups(h.parent()));
}

EmbeddingVerdict is_weakly_h_subgroup(const Subgroup& h, const std::vector<Subgroup>& normals) {
    const Group& g = *h.parent();
    for (const auto& t : normals) {
        ElementBitset ht = product_set(g, h.bits(), t.bits());
        if (ht.count() != g.order()) continue;
        if (is_h_subgroup(intersect(h, t)).holds) {
            EmbeddingVerdict v;
            v.holds = true;
            v.witness = t;
            return v;
        }
    }
    return {};
}

EmbeddingVerdict is_quasinormal_in(const SubgroupLattice& lat, const Subgroup& ambient,
                                   const Subgroup& h) {
    const Group& g = *h.parent();
    for (int i = 0; i < lat.size(); ++i) {
        const Subgroup& x = lat[i];
        if (!x.bits().is_subset_of(ambient.bits())) continue;
        ElementBitset hx = product_set(g, h.bits(), x.bits());
        ElementBitset xh = product_set(g, x.bits(), h.bits());
        if (hx != xh) {
            EmbeddingVerdict v;
            v.offending_subgroup = x;
            return v;
        }
    }
    EmbeddingVerdict v;
    v.holds = true;
    return v;
}

EmbeddingVerdict is_quasinormal_in(const SubgroupLattice& lat, const Subgroup& h) {
    return is_quasinormal_in(lat, whole_group(h.parent()), h);
}

EmbeddingVerdict is_quasinormal_in(const Subgroup& ambient, const Subgroup& h, int cap) {
    GroupView v = as_group(ambient);
    SubgroupLattice lat = all_subgroups(v.group, cap);
    EmbeddingVerdict local = is_quasinormal_in(lat, v.restrict_to_view(h));
    EmbeddingVerdict out;
    out.holds = local.holds;
    if (local.offending_subgroup) out.offending_subgroup = v.lift(*local.offending_subgroup);
    return out;
}

bool is_subnormal(const Subgroup& h) {
    Subgroup term = whole_group(h.parent());
    for (;;) {
        if (term.same_set(h)) return true;
        Subgroup next = normal_closure_in(term, h);
        if (next.same_set(term)) return false;
        term = std::move(next);
    }
}

} // namespace hclab
