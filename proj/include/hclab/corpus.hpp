#pragma once

#include <string>
#include <vector>

#include "hclab/group.hpp"

namespace hclab {

// Constructor expression for corpus groups. Dihedral n has order 2n,
// Dicyclic n order 4n (Q8 = Dicyclic 2); SemidirectCyclic(m,n,k) is
// C_m x| C_n with the action x -> x^k.
struct GroupSpec {
    enum class Kind {
        Cyclic,
        Dihedral,
        Dicyclic,
        ElementaryAbelian,
        Symmetric,
        Alternating,
        SL23,
        SemidirectCyclic,
        Product,
        FromFile,
    };
    Kind kind = Kind::Cyclic;
    int a = 1;
    int b = 0;
    int c = 0;
    std::string path;
    std::vector<GroupSpec> factors;

    std::string canonical_name() const;

    static GroupSpec cyclic(int n) { return {Kind::Cyclic, n}; }
    static GroupSpec dihedral(int n) { return {Kind::Dihedral, n}; }
    static GroupSpec dicyclic(int n) { return {Kind::Dicyclic, n}; }
    static GroupSpec elementary_abelian(int p, int k) { return {Kind::ElementaryAbelian, p, k}; }
    static GroupSpec symmetric(int n) { return {Kind::Symmetric, n}; }
    static GroupSpec alternating(int n) { return {Kind::Alternating, n}; }
    static GroupSpec sl23() { return {Kind::SL23}; }
    static GroupSpec semidirect_cyclic(int m, int n, int k) {
        return {Kind::SemidirectCyclic, m, n, k};
    }
    static GroupSpec product(GroupSpec x, GroupSpec y);
    static GroupSpec from_file(std::string path);
};

// Realizes the spec as a validated group, identity at index 0, deterministic
// element order. Throws InvalidAction / OrderCapExceeded / FileFormatError.
GroupPtr realize(const GroupSpec& spec, int cap = Caps{}.construction);

// The fixed default corpus (~35 groups, all of order <= 120); append-only
// across versions.
std::vector<std::pair<GroupSpec, GroupPtr>> standard_corpus(int cap = Caps{}.construction);

extern const char* const kCorpusVersion;

// Cayley-table text format: line 1 = n, lines 2..n+1 = rows, then optional
// `name <string>` and `label <i> <string>` lines.
GroupPtr load_group(const std::string& path, int cap = Caps{}.construction);
void write_cayley_file(const std::string& path, const Group& g);

// CLI grammar: C12, D8, Q8, Dic3, S4, A5, EA(3,2), SD(5,4,2), SL23,
// prod(C3,S3), file:PATH. Throws Error with the failing position.
GroupSpec parse_group_spec(const std::string& text);

} // namespace hclab
