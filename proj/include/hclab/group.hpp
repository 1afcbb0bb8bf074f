#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hclab/bitset.hpp"
#include "hclab/errors.hpp"

namespace hclab {

struct Caps {
    int construction = 512;
    int lattice = 384;
    int isomorphism = 256;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// A finite group of order n given by its full Cayley table over element
// indices 0..n-1. Index 0 is always the identity. Immutable once built.
class Group {
public:
    int order() const { return n_; }
    int mul(int a, int b) const { return table_[std::size_t(a) * n_ + b]; }
    int inv(int a) const { return inverses_[a]; }
    int conj(int h, int g) const { return mul(mul(inv(g), h), g); } // g^-1 h g

    const std::string& name() const { return name_; }
    bool has_labels() const { return !labels_.empty(); }
    // Falls back to the decimal index when no labels were attached.
    std::string label(int x) const;

    int element_order(int x) const;
    int exponent() const; // lcm of element orders

    ElementBitset full_bitset() const;

    // Raw table access for oracles and serialization.
    const std::vector<std::uint16_t>& table() const { return table_; }

private:
    friend GroupPtr make_group(std::vector<std::uint16_t> table, int n, std::string name,
                               std::vector<std::string> labels, int cap);
    Group() = default;

    int n_ = 0;
    std::vector<std::uint16_t> table_;
    std::vector<std::uint16_t> inverses_;
    std::string name_;
    std::vector<std::string> labels_;
};

// Validates and builds a Group: identity at index 0, Latin square, full
// associativity check. Throws IdentityNotZero / NotLatinSquare /
// NotAssociative naming the first offending cell or triple, or
// OrderCapExceeded when n exceeds the construction cap.
GroupPtr make_group(std::vector<std::uint16_t> table, int n, std::string name,
                    std::vector<std::string> labels = {}, int cap = Caps{}.construction);

GroupPtr from_cayley_table(const std::vector<std::vector<int>>& table, std::string name,
                           int cap = Caps{}.construction);

// An element subset of a parent group, closed under the table. Carries both
// the bitset and the sorted member list.
class Subgroup {
public:
    // Validating constructor: identity present, closed under products,
    // Lagrange. Use for externally supplied member sets.
    static Subgroup from_members(GroupPtr parent, const std::vector<int>& members);

    // Trusted constructor for sets already known to be closed.
    struct unchecked_t {};
    Subgroup(GroupPtr parent, ElementBitset bits, unchecked_t);

    const GroupPtr& parent() const { return parent_; }
    const ElementBitset& bits() const { return bits_; }
    const std::vector<int>& elements() const { return elems_; }
    int size() const { return int(elems_.size()); }
    bool contains(int x) const { return bits_.test(x); }
    bool contains(const Subgroup& other) const { return other.bits_.is_subset_of(bits_); }
    bool is_whole_group() const { return size() == parent_->order(); }
    bool is_trivial() const { return size() == 1; }

    bool same_set(const Subgroup& o) const { return bits_ == o.bits_; }
    // (size, bitset) order used for all deterministic scans.
    bool less_than(const Subgroup& o) const {
        if (size() != o.size()) return size() < o.size();
        return bits_ < o.bits_;
    }

private:
    GroupPtr parent_;
    ElementBitset bits_;
    std::vector<int> elems_;
};

// A multiplication-preserving total map between two groups; map[0] = 0.
struct Morphism {
    GroupPtr source;
    GroupPtr target;
    std::vector<int> map;

    Morphism(GroupPtr src, GroupPtr tgt, std::vector<int> m);

    Subgroup kernel() const;
    Subgroup image() const;
    Subgroup push(const Subgroup& h) const; // image of a subgroup of source
    Subgroup pull(const Subgroup& h) const; // preimage of a subgroup of target
};

// Closure of a seed set under products; the smallest subgroup containing it.
Subgroup generated_subgroup(const GroupPtr& g, std::span<const int> seed);
Subgroup generated_subgroup(const GroupPtr& g, const ElementBitset& seed);

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);

// H^g = { g^-1 h g : h in H }.
Subgroup conjugate_subgroup(const Subgroup& h, int g);
ElementBitset conjugate_bits(const Group& g, const ElementBitset& h, int x);

bool is_normal(const Subgroup& h);

// Setwise product AB as a bitset; a subgroup iff AB = BA.
ElementBitset product_set(const Group& g, const ElementBitset& a, const ElementBitset& b);

// Intersection of two subgroups of the same parent.
Subgroup intersect(const Subgroup& a, const Subgroup& b);
// Join <A, B>.
Subgroup join(const Subgroup& a, const Subgroup& b);

// Quotient G/N on cosets labeled by their minimal element, identity coset
// first; returns the quotient and the projection. Throws NotNormal.
std::pair<GroupPtr, Morphism> quotient(const GroupPtr& g, const Subgroup& n);

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, int cap = Caps{}.construction);

int element_order(const Group& g, int x);

// A subgroup materialized as a standalone group, with index maps back to
// the parent. Element i of `group` is parent element to_parent[i].
struct GroupView {
    GroupPtr group;
    GroupPtr parent;
    std::vector<int> to_parent;
    std::vector<int> from_parent; // -1 for elements outside the subgroup

    Subgroup lift(const Subgroup& local) const;          // subgroup of view -> subgroup of parent
    Subgroup restrict_to_view(const Subgroup& sub) const; // subgroup of parent inside view -> local
};

GroupView as_group(const Subgroup& h);

// Invariant pre-screen (order, element-order multiset, abelianness, center
// size, conjugacy class sizes) followed by backtracking over generator
// images. Throws OrderCapExceeded past the isomorphism cap.
bool is_isomorphic(const GroupPtr& a, const GroupPtr& b, int cap = Caps{}.isomorphism);

bool is_abelian(const Group& g);
bool is_cyclic(const Group& g);
bool is_cyclic(const Subgroup& h);

// Largest power of p dividing |G|.
int p_part(int order, int p);
std::vector<int> prime_divisors(int n);
bool is_prime(int n);
bool is_prime_power(int n, int p); // n a power of p (1 counts)

} // namespace hclab
