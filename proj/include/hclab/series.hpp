#pragma once

#include <vector>

#include "hclab/group.hpp"
#include "hclab/lattice.hpp"

namespace hclab {

enum class SeriesKind { UpperCentral, LowerCentral, Derived, Chief };

// A chain of subgroups normal in the parent, monotone under inclusion, with
// the stabilized term recorded once.
struct NormalSeries {
    GroupPtr parent;
    std::vector<Subgroup> terms;
    SeriesKind kind;
};

Subgroup center(const GroupPtr& g);

// Limit of the upper central series, iterated through quotients.
Subgroup hypercenter(const GroupPtr& g);
NormalSeries upper_central_series(const GroupPtr& g);

Subgroup derived_subgroup(const GroupPtr& g);
// Derived subgroup of a subgroup, computed inside the parent.
Subgroup derived_subgroup_of(const Subgroup& h);
NormalSeries derived_series(const GroupPtr& g);

// [A, G] = <[a, g] : a in A, g in G> for A a subgroup of G.
Subgroup commutator_with_group(const Subgroup& a);
NormalSeries lower_central_series(const GroupPtr& g);
// Limit of the lower central series; equals the smallest normal subgroup
// with nilpotent quotient (cross-checked by tests).
Subgroup nilpotent_residual(const GroupPtr& g);

// Largest normal nilpotent subgroup: the product of the O_p over p | |G|.
Subgroup fitting(const GroupPtr& g);
Subgroup fitting_of(const Subgroup& h); // of a subgroup, as subgroup of the parent

// F*(G) via F*(G)/F(G) = soc(F(G) C_G(F(G)) / F(G)).
Subgroup generalized_fitting(const GroupPtr& g);
Subgroup generalized_fitting_of(const Subgroup& h);

// Ascending chief series 1 = T0 < T1 < ... < G; each factor pulled back from
// a minimal normal subgroup of the successive quotient, smallest preimage
// bitset first. `reversed` flips the tie-break for series-independence tests.
NormalSeries chief_series(const GroupPtr& g, bool reversed = false);
std::vector<int> chief_factor_orders(const NormalSeries& s);

// True iff H/K is a minimal normal subgroup of G/K (K <= H, both normal).
bool is_chief_factor(const GroupPtr& g, const Subgroup& k, const Subgroup& h);

} // namespace hclab
