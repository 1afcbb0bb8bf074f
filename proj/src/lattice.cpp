#include "hclab/lattice.hpp"

#include <algorithm>
#include <map>

namespace hclab {

namespace {

struct BitsLess {
    bool operator()(const ElementBitset& a, const ElementBitset& b) const { return a.compare(b) < 0; }
};

bool subgroup_order_less(const Subgroup& a, const Subgroup& b) { return a.less_than(b); }

} // namespace

int SubgroupLattice::index_of(const ElementBitset& bits) const {
    int sz = bits.count();
    auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), sz,
                               [](const Subgroup& s, int k) { return s.size() < k; });
    for (; it != subgroups_.end() && it->size() == sz; ++it)
        if (it->bits() == bits) return int(it - subgroups_.begin());
    return -1;
}

Subgroup normalizer(const Subgroup& h) {
    const Group& g = *h.parent();
    ElementBitset out(g.order());
    for (int x = 0; x < g.order(); ++x) {
        int xi = g.inv(x);
        bool stable = true;
        for (int e : h.elements())
            if (!h.contains(g.mul(g.mul(xi, e), x))) {
                stable = false;
                break;
            }
        if (stable) out.set(x);
    }
    return Subgroup(h.parent(), std::move(out), Subgroup::unchecked_t{});
}

Subgroup centralizer(const GroupPtr& g, const ElementBitset& x) {
    const Group& grp = *g;
    ElementBitset out(grp.order());
    auto mem = x.members();
    for (int c = 0; c < grp.order(); ++c) {
        bool commutes = true;
        for (int e : mem)
            if (grp.mul(c, e) != grp.mul(e, c)) {
                commutes = false;
                break;
            }
        if (commutes) out.set(c);
    }
    return Subgroup(g, std::move(out), Subgroup::unchecked_t{});
}

Subgroup centralizer(const Subgroup& h) { return centralizer(h.parent(), h.bits()); }

Subgroup normal_core(const Subgroup& h) {
    const Group& g = *h.parent();
    ElementBitset core = h.bits();
    for (int x = 0; x < g.order(); ++x) {
        core &= conjugate_bits(g, h.bits(), x);
        if (core.count() == 1) break;
    }
    return Subgroup(h.parent(), std::move(core), Subgroup::unchecked_t{});
}

Subgroup normal_closure(const Subgroup& h) {
    const Group& g = *h.parent();
    ElementBitset seed(g.order());
    for (int x = 0; x < g.order(); ++x) seed |= conjugate_bits(g, h.bits(), x);
    return generated_subgroup(h.parent(), seed);
}

Subgroup normal_closure_in(const Subgroup& ambient, const Subgroup& h) {
    const Group& g = *h.parent();
    ElementBitset seed(g.order());
    for (int x : ambient.elements()) seed |= conjugate_bits(g, h.bits(), x);
    return generated_subgroup(h.parent(), seed);
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
    // Normal closures of cyclic subgroups, closed under joins. Every normal
    // subgroup is the join of the closures of its elements.
    const Group& grp = *g;
    std::map<ElementBitset, int, BitsLess> seen;
    std::vector<Subgroup> out;
    auto add = [&](Subgroup s) -> bool {
        if (seen.count(s.bits())) return false;
        seen.emplace(s.bits(), int(out.size()));
        out.push_back(std::move(s));
        return true;
    };
    add(trivial_subgroup(g));
    for (int x = 1; x < grp.order(); ++x) {
        int xs[1] = {x};
        add(normal_closure(generated_subgroup(g, xs)));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t count = out.size();
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = i + 1; j < count; ++j)
                if (add(join(out[i], out[j]))) grew = true;
    }
    std::sort(out.begin(), out.end(), subgroup_order_less);
    return out;
}

// Groups whose subgroup count explodes (large elementary abelian sections)
// can sit under the order cap yet be hopeless to enumerate; fail loudly
// instead of degrading into an hours-long run.
constexpr int kMaxLatticeSubgroups = 20000;

SubgroupLattice all_subgroups(const GroupPtr& g, int cap) {
    const Group& grp = *g;
    if (grp.order() > cap)
        throw OrderCapExceeded("lattice enumeration at order " + std::to_string(grp.order()) +
                               " exceeds cap " + std::to_string(cap));

    std::map<ElementBitset, int, BitsLess> seen;
    std::vector<Subgroup> subs;
    std::vector<int> fresh; // indices not yet extended
    auto add = [&](Subgroup s) -> bool {
        auto it = seen.find(s.bits());
        if (it != seen.end()) return false;
        if (int(subs.size()) >= kMaxLatticeSubgroups)
            throw OrderCapExceeded("subgroup count exceeds " +
                                   std::to_string(kMaxLatticeSubgroups) + " for " + grp.name());
        seen.emplace(s.bits(), int(subs.size()));
        fresh.push_back(int(subs.size()));
        subs.push_back(std::move(s));
        return true;
    };

    add(trivial_subgroup(g));
    for (int x = 1; x < grp.order(); ++x) {
        int xs[1] = {x};
        add(generated_subgroup(g, xs));
    }

    auto extend_within_normalizers = [&]() {
        while (!fresh.empty()) {
            int i = fresh.back();
            fresh.pop_back();
            Subgroup h = subs[i];
            if (h.is_whole_group()) continue;
            Subgroup n = normalizer(h);
            for (int x : n.elements()) {
                if (h.contains(x)) continue;
                ElementBitset seed = h.bits();
                seed.set(x);
                add(generated_subgroup(g, seed));
            }
        }
    };

    extend_within_normalizers();

    // Completion: cyclic extension reaches exactly the subgroups with a chain
    // of normal single-element extensions, which misses nonsolvable members
    // (a perfect subgroup has no proper normal part it extends from). Joins
    // of existing members restore completeness; iterate to fixpoint. In a
    // solvable group every subgroup is solvable, so the pass is needed only
    // when the derived chain of G fails to reach the trivial subgroup.
    ElementBitset derived = grp.full_bitset();
    for (;;) {
        ElementBitset commutators(grp.order());
        commutators.set(0);
        auto members = derived.members();
        for (int a : members)
            for (int b : members)
                commutators.set(grp.mul(grp.mul(grp.inv(a), grp.inv(b)), grp.mul(a, b)));
        ElementBitset next = generated_subgroup(g, commutators).bits();
        if (next == derived) break;
        derived = std::move(next);
    }
    bool solvable = derived.count() == 1;

    bool grew = !solvable;
    while (grew) {
        grew = false;
        std::size_t count = subs.size();
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = i + 1; j < count; ++j) {
                const Subgroup& a = subs[i];
                const Subgroup& b = subs[j];
                if (a.bits().is_subset_of(b.bits()) || b.bits().is_subset_of(a.bits())) continue;
                if (add(join(a, b))) grew = true;
            }
        if (!fresh.empty()) {
            extend_within_normalizers();
            grew = true;
        }
    }

    std::sort(subs.begin(), subs.end(), subgroup_order_less);

    SubgroupLattice lat;
    lat.parent_ = g;
    lat.subgroups_ = std::move(subs);
    int count = lat.size();

    // Conjugacy classes and normality.
    lat.class_of_.assign(count, -1);
    for (int i = 0; i < count; ++i) {
        if (lat.class_of_[i] >= 0) continue;
        int cls = int(lat.classes_.size());
        std::vector<int> members;
        for (int x = 0; x < grp.order(); ++x) {
            ElementBitset cb = conjugate_bits(grp, lat.subgroups_[i].bits(), x);
            int j = lat.index_of(cb);
            if (j < 0) throw Error("lattice not closed under conjugation");
            if (lat.class_of_[j] < 0) {
                lat.class_of_[j] = cls;
                members.push_back(j);
            }
        }
        std::sort(members.begin(), members.end());
        lat.classes_.push_back(std::move(members));
    }
    lat.normal_.assign(count, 0);
    for (int i = 0; i < count; ++i)
        lat.normal_[i] = lat.classes_[lat.class_of_[i]].size() == 1;
    for (int i = 0; i < count; ++i)
        if (lat.normal_[i]) lat.normals_.push_back(i);

    // Normalizers resolved to lattice indices.
    lat.normalizer_.assign(count, -1);
    for (int i = 0; i < count; ++i) {
        Subgroup n = normalizer(lat.subgroups_[i]);
        lat.normalizer_[i] = lat.index_of(n);
        if (lat.normalizer_[i] < 0) throw Error("normalizer missing from lattice");
    }

    // Maximality: nothing properly between H and G.
    lat.maximal_.assign(count, 0);
    for (int i = 0; i < count; ++i) {
        if (i == lat.full_index()) continue;
        bool maximal = true;
        for (int j = 0; j < count && maximal; ++j) {
            if (j == i || j == lat.full_index()) continue;
            if (lat.subgroups_[j].size() > lat.subgroups_[i].size() &&
                lat.subgroups_[i].bits().is_subset_of(lat.subgroups_[j].bits()))
                maximal = false;
        }
        lat.maximal_[i] = maximal;
    }
    return lat;
}

Subgroup sylow_subgroup(const GroupPtr& g, int p) {
    auto all = sylow_subgroups(g, p);
    return all.front();
}

std::vector<Subgroup> sylow_subgroups(const GroupPtr& g, int p) {
    if (!is_prime(p)) throw Error("p must be prime: " + std::to_string(p));
    const Group& grp = *g;
    int target = p_part(grp.order(), p);

    // Grow a p-subgroup by p-elements of its normalizer; |N_G(P):P| is
    // divisible by p while P is not yet Sylow, so an extension always exists.
    Subgroup pgrp = trivial_subgroup(g);
    while (pgrp.size() < target) {
        Subgroup n = normalizer(pgrp);
        bool extended = false;
        for (int x : n.elements()) {
            if (pgrp.contains(x)) continue;
            if (!is_prime_power(grp.element_order(x), p)) continue;
            ElementBitset seed = pgrp.bits();
            seed.set(x);
            Subgroup cand = generated_subgroup(g, seed);
            if (is_prime_power(cand.size(), p) && cand.size() <= target) {
                pgrp = std::move(cand);
                extended = true;
                break;
            }
        }
        if (!extended) throw Error("Sylow construction stalled"); // unreachable for valid groups
    }

    std::map<ElementBitset, char, BitsLess> cls;
    cls.emplace(pgrp.bits(), 1);
    for (int x = 0; x < grp.order(); ++x) cls.emplace(conjugate_bits(grp, pgrp.bits(), x), 1);
    std::vector<Subgroup> out;
    for (auto& [bits, tag] : cls) out.emplace_back(g, bits, Subgroup::unchecked_t{});
    return out;
}

std::vector<int> maximal_subgroups_of(const SubgroupLattice& lat, int i) {
    const Subgroup& h = lat[i];
    std::vector<int> below;
    for (int j = 0; j < lat.size(); ++j)
        if (j != i && lat[j].bits().is_subset_of(h.bits())) below.push_back(j);
    std::vector<int> out;
    for (int j : below) {
        bool maximal = true;
        for (int k : below)
            if (k != j && lat[j].size() < lat[k].size() &&
                lat[j].bits().is_subset_of(lat[k].bits())) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(j);
    }
    return out;
}

std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lat, const Subgroup& h) {
    int i = lat.index_of(h);
    if (i < 0) throw Error("subgroup not found in lattice");
    std::vector<Subgroup> out;
    for (int j : maximal_subgroups_of(lat, i)) out.push_back(lat[j]);
    return out;
}

Subgroup frattini(const SubgroupLattice& lat, const Subgroup& h) {
    int i = lat.index_of(h);
    if (i < 0) throw Error("subgroup not found in lattice");
    auto maxes = maximal_subgroups_of(lat, i);
    if (maxes.empty()) return h; // trivial input has no maximal subgroups
    ElementBitset out = lat[maxes[0]].bits();
    for (std::size_t k = 1; k < maxes.size(); ++k) out &= lat[maxes[k]].bits();
    return Subgroup(lat.parent(), std::move(out), Subgroup::unchecked_t{});
}

Subgroup frattini(const SubgroupLattice& lat) { return frattini(lat, lat[lat.full_index()]); }

std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& g) {
    auto normals = normal_subgroups(g);
    std::vector<Subgroup> out;
    for (const auto& n : normals) {
        if (n.is_trivial()) continue;
        bool minimal = true;
        for (const auto& m : normals) {
            if (m.is_trivial() || m.same_set(n)) continue;
            if (m.size() < n.size() && m.bits().is_subset_of(n.bits())) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(n);
    }
    return out;
}

Subgroup socle(const GroupPtr& g) {
    auto mins = minimal_normal_subgroups(g);
    ElementBitset seed(g->order());
    seed.set(0);
    for (const auto& m : mins) seed |= m.bits();
    return generated_subgroup(g, seed);
}

PRadicals p_radicals(const GroupPtr& g, int p) {
    if (!is_prime(p)) throw Error("p must be prime: " + std::to_string(p));
    auto normals = normal_subgroups(g);
    Subgroup op = trivial_subgroup(g);
    Subgroup opp = trivial_subgroup(g);
    for (const auto& n : normals) {
        if (is_prime_power(n.size(), p)) op = join(op, n);
        if (n.size() % p != 0) opp = join(opp, n);
    }
    Subgroup oup = whole_group(g);
    for (const auto& n : normals)
        if (is_prime_power(g->order() / n.size(), p)) oup = intersect(oup, n);
    return {std::move(op), std::move(opp), std::move(oup)};
}

Subgroup omega(const Subgroup& p_group, int p, int i) {
    if (!is_prime_power(p_group.size(), p))
        throw NotPGroup("omega of a non-p-group of order " + std::to_string(p_group.size()));
    const Group& g = *p_group.parent();
    int bound = 1;
    for (int k = 0; k < i; ++k) bound *= p;
    ElementBitset seed(g.order());
    seed.set(0);
    for (int x : p_group.elements())
        if (bound % g.element_order(x) == 0) seed.set(x);
    return generated_subgroup(p_group.parent(), seed);
}

Subgroup omega(const GroupPtr& p_group, int p, int i) { return omega(whole_group(p_group), p, i); }

} // namespace hclab
