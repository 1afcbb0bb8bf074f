#pragma once

#include <optional>

#include "hclab/lattice.hpp"
#include "hclab/series.hpp"

namespace hclab {

// The two instantiated saturated formations containing all supersolvable
// groups.
enum class FormationTag { Supersolvable, Solvable };

// Lower central series reaches the trivial subgroup; cross-checked in place
// against all Sylow subgroups being normal.
bool is_nilpotent(const GroupPtr& g);
bool is_nilpotent_subgroup(const Subgroup& h);

// G has a normal p-complement (a normal subgroup of order |G| / |G|_p).
bool is_p_nilpotent(const GroupPtr& g, int p);

bool is_solvable(const GroupPtr& g);
bool is_solvable_subgroup(const Subgroup& h);

// Every chief factor of the computed chief series has prime order.
bool is_supersolvable(const GroupPtr& g);

// Sylow subgroups become normal one prime at a time, largest prime first.
bool has_sylow_tower_supersolvable_type(const GroupPtr& g);

// F*(G) = G.
bool is_quasinilpotent(const GroupPtr& g);

// The structure attached to a minimal nonnilpotent (Schmidt) group.
struct SchmidtDecomposition {
    Subgroup sylow_p;  // normal Sylow p-subgroup
    Subgroup sylow_q;  // nonnormal cyclic Sylow q-subgroup
    int p = 0;
    int q = 0;
    int exp_p = 0;             // exponent of the normal Sylow
    bool frattini_chief = false; // P/Phi(P) is a chief factor of G
};

// Not nilpotent while every proper subgroup is; verifies and returns the
// Schmidt structure when it holds.
std::pair<bool, std::optional<SchmidtDecomposition>>
is_minimal_nonnilpotent(const GroupPtr& g, const SubgroupLattice& lat);

bool in_formation(const GroupPtr& g, FormationTag f);
const char* formation_name(FormationTag f);

} // namespace hclab
