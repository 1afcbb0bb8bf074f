#include "hclab/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hclab {

std::string Group::label(int x) const {
    if (x >= 0 && x < int(labels_.size()) && !labels_[x].empty()) return labels_[x];
    return std::to_string(x);
}

int Group::element_order(int x) const {
    int k = 1;
    int acc = x;
    while (acc != 0) {
        acc = mul(acc, x);
        ++k;
    }
    return k;
}

int Group::exponent() const {
    long long e = 1;
    for (int x = 0; x < n_; ++x) e = std::lcm(e, (long long)element_order(x));
    return int(e);
}

ElementBitset Group::full_bitset() const {
    ElementBitset b(n_);
    for (int i = 0; i < n_; ++i) b.set(i);
    return b;
}

int element_order(const Group& g, int x) { return g.element_order(x); }

GroupPtr make_group(std::vector<std::uint16_t> table, int n, std::string name,
                    std::vector<std::string> labels, int cap) {
    if (n <= 0) throw NotLatinSquare("group order must be positive");
    if (n > cap)
        throw OrderCapExceeded("order " + std::to_string(n) + " exceeds construction cap " +
                               std::to_string(cap));
    if (int64_t(table.size()) != int64_t(n) * n) throw NotLatinSquare("table is not n x n");

    auto at = [&](int a, int b) -> int { return table[std::size_t(a) * n + b]; };

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (at(a, b) >= n)
                throw NotLatinSquare("entry out of range at cell (" + std::to_string(a) + "," +
                                     std::to_string(b) + ")");

    // Identity fixed at index 0.
    for (int a = 0; a < n; ++a) {
        if (at(0, a) != a)
            throw IdentityNotZero("row 0 is not the identity at cell (0," + std::to_string(a) + ")");
        if (at(a, 0) != a)
            throw IdentityNotZero("column 0 is not the identity at cell (" + std::to_string(a) + ",0)");
    }

    // Latin square: every row and column a permutation.
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int v = at(a, b);
            if (seen[v])
                throw NotLatinSquare("row " + std::to_string(a) + " repeats value " +
                                     std::to_string(v) + " at column " + std::to_string(b));
            seen[v] = 1;
        }
    }
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < n; ++a) {
            int v = at(a, b);
            if (seen[v])
                throw NotLatinSquare("column " + std::to_string(b) + " repeats value " +
                                     std::to_string(v) + " at row " + std::to_string(a));
            seen[v] = 1;
        }
    }

    // Exhaustive associativity; everything downstream rests on this.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = at(a, b);
            for (int c = 0; c < n; ++c)
                if (at(ab, c) != at(a, at(b, c)))
                    throw NotAssociative("associativity fails at triple (" + std::to_string(a) +
                                         "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }

    auto g = std::shared_ptr<Group>(new Group());
    g->n_ = n;
    g->table_ = std::move(table);
    g->inverses_.resize(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g->table_[std::size_t(a) * n + b] == 0) {
                g->inverses_[a] = std::uint16_t(b);
                break;
            }
    g->name_ = std::move(name);
    g->labels_ = std::move(labels);
    return g;
}

GroupPtr from_cayley_table(const std::vector<std::vector<int>>& table, std::string name, int cap) {
    int n = int(table.size());
    if (n == 0) throw NotLatinSquare("empty table");
    std::vector<std::uint16_t> flat;
    flat.reserve(std::size_t(n) * n);
    for (int a = 0; a < n; ++a) {
        if (int(table[a].size()) != n) throw NotLatinSquare("table is not n x n");
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n)
                throw NotLatinSquare("entry out of range at cell (" + std::to_string(a) + "," +
                                     std::to_string(b) + ")");
            flat.push_back(std::uint16_t(v));
        }
    }
    return make_group(std::move(flat), n, std::move(name), {}, cap);
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(GroupPtr parent, ElementBitset bits, unchecked_t)
    : parent_(std::move(parent)), bits_(std::move(bits)), elems_(bits_.members()) {}

Subgroup Subgroup::from_members(GroupPtr parent, const std::vector<int>& members) {
    const Group& g = *parent;
    ElementBitset bits(g.order());
    for (int x : members) {
        if (x < 0 || x >= g.order()) throw Error("element index out of range: " + std::to_string(x));
        bits.set(x);
    }
    if (!bits.test(0)) throw Error("subgroup must contain the identity");
    auto elems = bits.members();
    for (int a : elems)
        for (int b : elems)
            if (!bits.test(g.mul(a, b)))
                throw Error("set not closed under products at (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
    if (g.order() % int(elems.size()) != 0) throw Error("subgroup size does not divide group order");
    return Subgroup(std::move(parent), std::move(bits), unchecked_t{});
}

Subgroup trivial_subgroup(const GroupPtr& g) {
    ElementBitset b(g->order());
    b.set(0);
    return Subgroup(g, std::move(b), Subgroup::unchecked_t{});
}

Subgroup whole_group(const GroupPtr& g) {
    return Subgroup(g, g->full_bitset(), Subgroup::unchecked_t{});
}

namespace {

ElementBitset close_under_products(const Group& g, ElementBitset seed) {
    seed.set(0);
    std::vector<int> worklist = seed.members();
    // A subgroup of more than half the order is the whole group, so the
    // closure can stop as soon as the worklist passes that bound.
    std::size_t half = std::size_t(g.order()) / 2;
    for (std::size_t i = 0; i < worklist.size(); ++i) {
        if (worklist.size() > half) return g.full_bitset();
        int a = worklist[i];
        for (std::size_t j = 0; j < worklist.size(); ++j) {
            int p = g.mul(a, worklist[j]);
            if (!seed.test(p)) {
                seed.set(p);
                worklist.push_back(p);
            }
            p = g.mul(worklist[j], a);
            if (!seed.test(p)) {
                seed.set(p);
                worklist.push_back(p);
            }
        }
    }
    return seed;
}

} // namespace

Subgroup generated_subgroup(const GroupPtr& g, std::span<const int> seed) {
    ElementBitset b(g->order());
    for (int x : seed) {
        if (x < 0 || x >= g->order()) throw Error("element index out of range: " + std::to_string(x));
        b.set(x);
    }
    return generated_subgroup(g, b);
}

Subgroup generated_subgroup(const GroupPtr& g, const ElementBitset& seed) {
    return Subgroup(g, close_under_products(*g, seed), Subgroup::unchecked_t{});
}

ElementBitset conjugate_bits(const Group& g, const ElementBitset& h, int x) {
    ElementBitset out(g.order());
    int xi = g.inv(x);
    for (int e : h.members()) out.set(g.mul(g.mul(xi, e), x));
    return out;
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
    const Group& grp = *h.parent();
    ElementBitset out(grp.order());
    int gi = grp.inv(g);
    for (int e : h.elements()) out.set(grp.mul(grp.mul(gi, e), g));
    return Subgroup(h.parent(), std::move(out), Subgroup::unchecked_t{});
}

bool is_normal(const Subgroup& h) {
    const Group& g = *h.parent();
    for (int x = 0; x < g.order(); ++x) {
        int xi = g.inv(x);
        for (int e : h.elements())
            if (!h.contains(g.mul(g.mul(xi, e), x))) return false;
    }
    return true;
}

ElementBitset product_set(const Group& g, const ElementBitset& a, const ElementBitset& b) {
    ElementBitset out(g.order());
    auto bm = b.members();
    for (int x : a.members())
        for (int y : bm) out.set(g.mul(x, y));
    return out;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    return Subgroup(a.parent(), a.bits() & b.bits(), Subgroup::unchecked_t{});
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
    if (a.contains(b)) return a;
    if (b.contains(a)) return b;
    return generated_subgroup(a.parent(), a.bits() | b.bits());
}

// ---------------------------------------------------------------------------
// Morphism

Morphism::Morphism(GroupPtr src, GroupPtr tgt, std::vector<int> m)
    : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
    if (int(map.size()) != source->order()) throw Error("morphism map has wrong length");
    if (map[0] != 0) throw Error("morphism must send identity to identity");
    for (int a = 0; a < source->order(); ++a)
        for (int b = 0; b < source->order(); ++b)
            if (map[source->mul(a, b)] != target->mul(map[a], map[b]))
                throw Error("map does not preserve multiplication at (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
}

Subgroup Morphism::kernel() const {
    ElementBitset b(source->order());
    for (int a = 0; a < source->order(); ++a)
        if (map[a] == 0) b.set(a);
    return Subgroup(source, std::move(b), Subgroup::unchecked_t{});
}

Subgroup Morphism::image() const {
    ElementBitset b(target->order());
    for (int a = 0; a < source->order(); ++a) b.set(map[a]);
    return Subgroup(target, std::move(b), Subgroup::unchecked_t{});
}

Subgroup Morphism::push(const Subgroup& h) const {
    ElementBitset b(target->order());
    for (int a : h.elements()) b.set(map[a]);
    return Subgroup(target, std::move(b), Subgroup::unchecked_t{});
}

Subgroup Morphism::pull(const Subgroup& h) const {
    ElementBitset b(source->order());
    for (int a = 0; a < source->order(); ++a)
        if (h.contains(map[a])) b.set(a);
    return Subgroup(source, std::move(b), Subgroup::unchecked_t{});
}

// ---------------------------------------------------------------------------
// Quotients and products

std::pair<GroupPtr, Morphism> quotient(const GroupPtr& g, const Subgroup& n) {
    if (!is_normal(n)) throw NotNormal("subgroup of order " + std::to_string(n.size()) +
                                       " is not normal in " + g->name());
    const Group& grp = *g;
    int order = grp.order();
    // Cosets labeled by minimal element; sorting by label puts the identity
    // coset first, so coset 0 is the identity of the quotient.
    std::vector<int> coset_of(order, -1);
    std::vector<int> reps;
    for (int x = 0; x < order; ++x) {
        if (coset_of[x] >= 0) continue;
        int c = int(reps.size());
        reps.push_back(x);
        for (int e : n.elements()) coset_of[grp.mul(x, e)] = c;
    }
    int q = int(reps.size());
    std::vector<std::uint16_t> table(std::size_t(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) table[std::size_t(i) * q + j] = std::uint16_t(coset_of[grp.mul(reps[i], reps[j])]);
    auto qg = make_group(std::move(table), q, grp.name() + "/" + std::to_string(n.size()), {},
                         std::max(Caps{}.construction, order));
    std::vector<int> m(coset_of.begin(), coset_of.end());
    return {qg, Morphism(g, qg, std::move(m))};
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, int cap) {
    long long order = (long long)a->order() * b->order();
    if (order > cap)
        throw OrderCapExceeded("product order " + std::to_string(order) + " exceeds cap " +
                               std::to_string(cap));
    int na = a->order(), nb = b->order(), n = int(order);
    std::vector<std::uint16_t> table(std::size_t(n) * n);
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int b2 = 0; b2 < nb; ++b2) {
                    int x = a1 * nb + b1, y = a2 * nb + b2;
                    table[std::size_t(x) * n + y] =
                        std::uint16_t(a->mul(a1, a2) * nb + b->mul(b1, b2));
                }
    std::vector<std::string> labels;
    if (a->has_labels() || b->has_labels()) {
        labels.resize(n);
        for (int a1 = 0; a1 < na; ++a1)
            for (int b1 = 0; b1 < nb; ++b1)
                labels[a1 * nb + b1] = "(" + a->label(a1) + "," + b->label(b1) + ")";
    }
    return make_group(std::move(table), n, a->name() + "x" + b->name(), std::move(labels), cap);
}

// ---------------------------------------------------------------------------
// Subgroup as standalone group

Subgroup GroupView::lift(const Subgroup& local) const {
    ElementBitset b(parent->order());
    for (int e : local.elements()) b.set(to_parent[e]);
    return Subgroup(parent, std::move(b), Subgroup::unchecked_t{});
}

Subgroup GroupView::restrict_to_view(const Subgroup& sub) const {
    ElementBitset b(group->order());
    for (int e : sub.elements()) {
        int l = from_parent[e];
        if (l < 0) throw Error("subgroup not contained in the view");
        b.set(l);
    }
    return Subgroup(group, std::move(b), Subgroup::unchecked_t{});
}

GroupView as_group(const Subgroup& h) {
    const Group& g = *h.parent();
    const auto& elems = h.elements(); // ascending, so identity stays at 0
    int k = int(elems.size());
    std::vector<int> from_parent(g.order(), -1);
    for (int i = 0; i < k; ++i) from_parent[elems[i]] = i;
    std::vector<std::uint16_t> table(std::size_t(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            table[std::size_t(i) * k + j] = std::uint16_t(from_parent[g.mul(elems[i], elems[j])]);
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(k);
        for (int e : elems) labels.push_back(g.label(e));
    }
    GroupView view;
    view.group = make_group(std::move(table), k,
                            g.name() + "[" + std::to_string(k) + "]", std::move(labels),
                            std::max(Caps{}.construction, g.order()));
    view.parent = h.parent();
    view.to_parent.assign(elems.begin(), elems.end());
    view.from_parent = std::move(from_parent);
    return view;
}

// ---------------------------------------------------------------------------
// Isomorphism testing

bool is_abelian(const Group& g) {
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

bool is_cyclic(const Group& g) {
    for (int x = 0; x < g.order(); ++x)
        if (g.element_order(x) == g.order()) return true;
    return false;
}

bool is_cyclic(const Subgroup& h) {
    const Group& g = *h.parent();
    for (int x : h.elements())
        if (g.element_order(x) == h.size()) return true;
    return false;
}

namespace {

std::vector<int> order_profile(const Group& g) {
    std::vector<int> orders(g.order());
    for (int x = 0; x < g.order(); ++x) orders[x] = g.element_order(x);
    std::sort(orders.begin(), orders.end());
    return orders;
}

int center_size(const Group& g) {
    int c = 0;
    for (int x = 0; x < g.order(); ++x) {
        bool central = true;
        for (int y = 0; y < g.order() && central; ++y)
            if (g.mul(x, y) != g.mul(y, x)) central = false;
        if (central) ++c;
    }
    return c;
}

std::vector<int> conj_class_profile(const Group& g) {
    std::vector<char> done(g.order(), 0);
    std::vector<int> sizes;
    for (int x = 0; x < g.order(); ++x) {
        if (done[x]) continue;
        int sz = 0;
        for (int y = 0; y < g.order(); ++y) {
            int c = g.conj(x, y);
            if (!done[c]) {
                done[c] = 1;
                ++sz;
            }
        }
        sizes.push_back(sz);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

struct IsoSearch {
    const Group& a;
    const Group& b;
    std::vector<int> gens;              // generating sequence of a
    std::vector<std::vector<int>> cand; // candidate images per generator

    bool extend(std::size_t gi, std::vector<int>& img) {
        if (gi == gens.size()) return check(img);
        for (int c : cand[gi]) {
            img.push_back(c);
            if (extend(gi + 1, img)) return true;
            img.pop_back();
        }
        return false;
    }

    // Build the map by closing the generator assignment; reject on the first
    // collision, then verify the homomorphism property on all pairs.
    bool check(const std::vector<int>& img) const {
        int n = a.order();
        std::vector<int> map(n, -1);
        std::vector<char> used(n, 0);
        map[0] = 0;
        used[0] = 1;
        std::vector<int> work{0};
        for (std::size_t i = 0; i < work.size(); ++i) {
            int x = work[i];
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                int xa = a.mul(x, gens[gi]);
                int xb = b.mul(map[x], img[gi]);
                if (map[xa] == -1) {
                    if (used[xb]) return false;
                    map[xa] = xb;
                    used[xb] = 1;
                    work.push_back(xa);
                } else if (map[xa] != xb) {
                    return false;
                }
            }
        }
        if (int(work.size()) != n) return false;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
        return true;
    }
};

} // namespace

bool is_isomorphic(const GroupPtr& pa, const GroupPtr& pb, int cap) {
    const Group& a = *pa;
    const Group& b = *pb;
    if (a.order() != b.order()) return false;
    if (a.order() > cap)
        throw OrderCapExceeded("isomorphism test at order " + std::to_string(a.order()) +
                               " exceeds cap " + std::to_string(cap));
    if (order_profile(a) != order_profile(b)) return false;
    if (is_abelian(a) != is_abelian(b)) return false;
    if (center_size(a) != center_size(b)) return false;
    if (conj_class_profile(a) != conj_class_profile(b)) return false;

    // Greedy generating sequence of a.
    IsoSearch search{a, b, {}, {}};
    ElementBitset closure(a.order());
    closure.set(0);
    for (int x = 0; x < a.order(); ++x) {
        if (closure.test(x)) continue;
        search.gens.push_back(x);
        closure.set(x);
        closure = close_under_products(a, std::move(closure));
    }
    for (int gen : search.gens) {
        std::vector<int> c;
        int ord = a.element_order(gen);
        for (int y = 0; y < b.order(); ++y)
            if (b.element_order(y) == ord) c.push_back(y);
        search.cand.push_back(std::move(c));
    }
    std::vector<int> img;
    return search.extend(0, img);
}

// ---------------------------------------------------------------------------
// Arithmetic helpers

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_power(int n, int p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

int p_part(int order, int p) {
    int q = 1;
    while (order % p == 0) {
        order /= p;
        q *= p;
    }
    return q;
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int p = 2; p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    return out;
}

} // namespace hclab
