#pragma once

#include <optional>

#include "hclab/group.hpp"
#include "hclab/lattice.hpp"

namespace hclab {

// Outcome of one embedding-property decision. Existential predicates carry
// the realizing T/K; failed universal conditions carry a conjugator g and an
// element x violating the containment. Quasinormality failures carry the
// offending subgroup instead.
struct EmbeddingVerdict {
    bool holds = false;
    std::optional<Subgroup> witness;
    struct Counterexample {
        int g;
        int x;
    };
    std::optional<Counterexample> counterexample;
    std::optional<Subgroup> offending_subgroup;
};

// Test-only mutations of the HC decision used by the mutation-sensitivity
// suite; Standard is the real predicate.
enum class HcVariant {
    Standard,
    DropContainmentClause, // keep only "exists normal T with G = HT"
    AmbientNormalizer,     // check H^g n N_G(H) <= H instead of N_T(H)
};

// H^g n N_G(H) <= H for all g.
EmbeddingVerdict is_h_subgroup(const Subgroup& h);
// Same condition evaluated inside an ambient subgroup K (H <= K).
EmbeddingVerdict is_h_subgroup_in(const Subgroup& ambient, const Subgroup& h);

// Exists normal T with G = HT and H^g n N_T(H) <= H for all g. Witness is
// the first T in ascending (size, bitset) order. Candidate normal subgroups
// may be supplied to avoid recomputation.
EmbeddingVerdict is_hc_subgroup(const Subgroup& h, HcVariant variant = HcVariant::Standard);
EmbeddingVerdict is_hc_subgroup(const Subgroup& h, const std::vector<Subgroup>& normals,
                                HcVariant variant = HcVariant::Standard);
// Evaluated inside an ambient subgroup K: T ranges over K-invariant
// subgroups of K, products and conjugations stay within K.
EmbeddingVerdict is_hc_subgroup_in(const Subgroup& ambient, const Subgroup& h,
                                   const std::vector<Subgroup>& normals_in_ambient,
                                   HcVariant variant = HcVariant::Standard);

// Exists normal K with G = HK and H n K <= H_G.
EmbeddingVerdict is_c_normal(const Subgroup& h);
EmbeddingVerdict is_c_normal(const Subgroup& h, const std::vector<Subgroup>& normals);

// Exists normal T with G = HT and H n T an H-subgroup of G.
EmbeddingVerdict is_weakly_h_subgroup(const Subgroup& h);
EmbeddingVerdict is_weakly_h_subgroup(const Subgroup& h, const std::vector<Subgroup>& normals);

// HX = XH for every subgroup X of the ambient group; the subgroups of the
// ambient are drawn from the supplied lattice of the parent.
EmbeddingVerdict is_quasinormal_in(const SubgroupLattice& lat, const Subgroup& ambient,
                                   const Subgroup& h);
EmbeddingVerdict is_quasinormal_in(const SubgroupLattice& lat, const Subgroup& h);
// Convenience form that enumerates the ambient's own lattice (cap applies to
// the ambient order).
EmbeddingVerdict is_quasinormal_in(const Subgroup& ambient, const Subgroup& h,
                                   int cap = Caps{}.lattice);

// The descending chain G > H^G > H^{H^G} > ... reaches H.
bool is_subnormal(const Subgroup& h);

} // namespace hclab
