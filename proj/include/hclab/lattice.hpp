#pragma once

#include <vector>

#include "hclab/group.hpp"

namespace hclab {

// Every subgroup of a group, deduplicated and sorted by (size, bitset), with
// conjugacy classes, normality/maximality flags and cached normalizers.
class SubgroupLattice {
public:
    const GroupPtr& parent() const { return parent_; }
    int size() const { return int(subgroups_.size()); }
    const Subgroup& operator[](int i) const { return subgroups_[i]; }
    const std::vector<Subgroup>& subgroups() const { return subgroups_; }

    int index_of(const ElementBitset& bits) const; // -1 when absent
    int index_of(const Subgroup& h) const { return index_of(h.bits()); }

    bool normal(int i) const { return normal_[i]; }
    bool maximal(int i) const { return maximal_[i]; }
    int normalizer_index(int i) const { return normalizer_[i]; }
    int class_of(int i) const { return class_of_[i]; }
    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }

    int trivial_index() const { return 0; }
    int full_index() const { return size() - 1; }

    // Indices of normal subgroups in ascending (size, bitset) order.
    const std::vector<int>& normal_indices() const { return normals_; }

private:
    friend SubgroupLattice all_subgroups(const GroupPtr& g, int cap);
    GroupPtr parent_;
    std::vector<Subgroup> subgroups_;
    std::vector<int> normalizer_;
    std::vector<char> normal_;
    std::vector<char> maximal_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> normals_;
};

// Cyclic-extension enumeration: seed with all cyclic subgroups, extend each
// known subgroup by normalizer elements, then a pairwise-join completion pass
// picks up the nonsolvable subgroups cyclic extension cannot reach.
SubgroupLattice all_subgroups(const GroupPtr& g, int cap = Caps{}.lattice);

Subgroup normalizer(const Subgroup& h);
// Centralizer of a subgroup or of an arbitrary element subset.
Subgroup centralizer(const GroupPtr& g, const ElementBitset& x);
Subgroup centralizer(const Subgroup& h);

// Largest normal subgroup of the parent contained in H (intersection of all
// conjugates).
Subgroup normal_core(const Subgroup& h);
// Smallest normal subgroup containing H.
Subgroup normal_closure(const Subgroup& h);
// Normal closure of H inside an ambient subgroup T (H <= T).
Subgroup normal_closure_in(const Subgroup& ambient, const Subgroup& h);

// All normal subgroups, ascending (size, bitset); computed directly from
// normal closures of cyclic subgroups plus join fixpoint, no lattice needed.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

// Canonical Sylow p-subgroup: the conjugacy-class member with the smallest
// bitset. sylow_subgroups returns the whole class sorted by bitset.
Subgroup sylow_subgroup(const GroupPtr& g, int p);
std::vector<Subgroup> sylow_subgroups(const GroupPtr& g, int p);

// Subgroups maximal below the given subgroup, drawn from the ambient lattice.
std::vector<int> maximal_subgroups_of(const SubgroupLattice& lat, int i);
std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lat, const Subgroup& h);

// Intersection of all maximal subgroups (the whole input when it is trivial).
Subgroup frattini(const SubgroupLattice& lat, const Subgroup& h);
Subgroup frattini(const SubgroupLattice& lat); // of the whole group

std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& g);
Subgroup socle(const GroupPtr& g);

struct PRadicals {
    Subgroup o_p;       // largest normal p-subgroup
    Subgroup o_p_prime; // largest normal subgroup of order coprime to p
    Subgroup o_upper_p; // smallest normal subgroup with p-group quotient
};
PRadicals p_radicals(const GroupPtr& g, int p);

// Subgroup generated by the elements of order dividing p^i of a p-group.
Subgroup omega(const Subgroup& p_group, int p, int i);
Subgroup omega(const GroupPtr& p_group, int p, int i);

} // namespace hclab
