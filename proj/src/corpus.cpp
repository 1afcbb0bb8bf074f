#include "hclab/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace hclab {

const char* const kCorpusVersion = "hclab-corpus-1";

GroupSpec GroupSpec::product(GroupSpec x, GroupSpec y) {
    GroupSpec s;
    s.kind = Kind::Product;
    s.factors.push_back(std::move(x));
    s.factors.push_back(std::move(y));
    return s;
}

GroupSpec GroupSpec::from_file(std::string path) {
    GroupSpec s;
    s.kind = Kind::FromFile;
    s.path = std::move(path);
    return s;
}

std::string GroupSpec::canonical_name() const {
    switch (kind) {
    case Kind::Cyclic: return "C" + std::to_string(a);
    case Kind::Dihedral: return "D" + std::to_string(2 * a);
    case Kind::Dicyclic: return a == 2 ? "Q8" : "Dic" + std::to_string(a);
    case Kind::ElementaryAbelian:
        return "EA(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::Symmetric: return "S" + std::to_string(a);
    case Kind::Alternating: return "A" + std::to_string(a);
    case Kind::SL23: return "SL(2,3)";
    case Kind::SemidirectCyclic:
        return "SD(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    case Kind::Product: return factors[0].canonical_name() + "x" + factors[1].canonical_name();
    case Kind::FromFile: {
        auto slash = path.find_last_of("/\\");
        std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
        auto dot = stem.find_last_of('.');
        if (dot != std::string::npos) stem = stem.substr(0, dot);
        return stem;
    }
    }
    return "?";
}

namespace {

GroupPtr build(int n, const std::string& name, std::vector<std::string> labels,
               int cap, auto&& mul) {
    std::vector<std::uint16_t> table(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[std::size_t(a) * n + b] = std::uint16_t(mul(a, b));
    return make_group(std::move(table), n, name, std::move(labels), cap);
}

GroupPtr make_cyclic(int n, const std::string& name, int cap) {
    if (n < 1) throw Error("cyclic order must be positive");
    std::vector<std::string> labels(n);
    labels[0] = "e";
    for (int i = 1; i < n; ++i) labels[i] = i == 1 ? "g" : "g^" + std::to_string(i);
    return build(n, name, std::move(labels), cap, [n](int a, int b) { return (a + b) % n; });
}

// Elements s^e r^i with index e*n + i; s r^i s = r^-i.
GroupPtr make_dihedral(int n, const std::string& name, int cap) {
    if (n < 1) throw Error("dihedral parameter must be positive");
    int order = 2 * n;
    std::vector<std::string> labels(order);
    for (int i = 0; i < n; ++i) {
        labels[i] = i == 0 ? "e" : "r^" + std::to_string(i);
        labels[n + i] = i == 0 ? "s" : "s.r^" + std::to_string(i);
    }
    auto mul = [n](int x, int y) {
        int e1 = x / n, i1 = x % n, e2 = y / n, i2 = y % n;
        int i = e2 ? ((n - i1) % n + i2) % n : (i1 + i2) % n;
        return ((e1 + e2) % 2) * n + i;
    };
    return build(order, name, std::move(labels), cap, mul);
}

// <a, b | a^{2n} = 1, b^2 = a^n, b a b^-1 = a^-1>; elements a^i b^e,
// index e*2n + i.
GroupPtr make_dicyclic(int n, const std::string& name, int cap) {
    if (n < 1) throw Error("dicyclic parameter must be positive");
    int m = 2 * n, order = 4 * n;
    std::vector<std::string> labels(order);
    for (int i = 0; i < m; ++i) {
        labels[i] = i == 0 ? "e" : "a^" + std::to_string(i);
        labels[m + i] = i == 0 ? "b" : "a^" + std::to_string(i) + ".b";
    }
    auto mul = [n, m](int x, int y) {
        int e1 = x / m, i1 = x % m, e2 = y / m, i2 = y % m;
        if (e1 == 0) return e2 * m + (i1 + i2) % m;
        // a^i1 b * a^i2 b^e2 = a^{i1 - i2} b^{1+e2}
        int i = ((i1 - i2) % m + m) % m;
        if (e2 == 0) return m + i;
        return (i + n) % m; // b^2 = a^n
    };
    return build(order, name, std::move(labels), cap, mul);
}

GroupPtr make_elementary_abelian(int p, int k, const std::string& name, int cap) {
    if (!is_prime(p) || k < 1) throw Error("elementary abelian needs prime p and k >= 1");
    int n = 1;
    for (int i = 0; i < k; ++i) {
        n *= p;
        if (n > cap) throw OrderCapExceeded("elementary abelian order exceeds cap");
    }
    std::vector<std::string> labels(n);
    for (int x = 0; x < n; ++x) {
        std::string s = "(";
        int v = x;
        for (int i = 0; i < k; ++i) {
            s += std::to_string(v % p);
            v /= p;
            if (i + 1 < k) s += ",";
        }
        labels[x] = s + ")";
    }
    auto mul = [p, k](int x, int y) {
        int out = 0, mult = 1;
        for (int i = 0; i < k; ++i) {
            out += ((x % p + y % p) % p) * mult;
            x /= p;
            y /= p;
            mult *= p;
        }
        return out;
    };
    return build(n, name, std::move(labels), cap, mul);
}

std::string cycle_notation(const std::vector<int>& perm) {
    int n = int(perm.size());
    std::vector<char> seen(n, 0);
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || perm[i] == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = perm[j];
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

bool perm_even(const std::vector<int>& perm) {
    int n = int(perm.size());
    std::vector<char> seen(n, 0);
    int transpositions = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = perm[j];
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

// Permutations in lexicographic word order (identity first); product pq
// applies p first, then q.
GroupPtr make_permutation_group(int n, bool even_only, const std::string& name, int cap) {
    if (n < 1) throw Error("degree must be positive");
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 0);
    std::vector<std::vector<int>> perms;
    std::map<std::vector<int>, int> index;
    do {
        if (even_only && !perm_even(word)) continue;
        index.emplace(word, int(perms.size()));
        perms.push_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    int order = int(perms.size());
    if (order > cap) throw OrderCapExceeded("permutation group order " + std::to_string(order) +
                                            " exceeds cap " + std::to_string(cap));
    std::vector<std::string> labels(order);
    for (int i = 0; i < order; ++i) labels[i] = cycle_notation(perms[i]);
    std::vector<int> composed(n);
    auto mul = [&](int x, int y) {
        for (int i = 0; i < n; ++i) composed[i] = perms[y][perms[x][i]];
        return index.at(composed);
    };
    return build(order, name, std::move(labels), cap, mul);
}

// 2x2 matrices over F_3 of determinant 1, identity first then lexicographic
// on (a,b,c,d).
GroupPtr make_sl23(const std::string& name, int cap) {
    std::vector<std::array<int, 4>> mats;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    if (((a * d - b * c) % 3 + 3) % 3 == 1) mats.push_back({a, b, c, d});
    std::array<int, 4> id{1, 0, 0, 1};
    auto it = std::find(mats.begin(), mats.end(), id);
    std::rotate(mats.begin(), it, it + 1);
    std::map<std::array<int, 4>, int> index;
    for (int i = 0; i < int(mats.size()); ++i) index.emplace(mats[i], i);
    int order = int(mats.size());
    std::vector<std::string> labels(order);
    for (int i = 0; i < order; ++i) {
        const auto& m = mats[i];
        labels[i] = "[" + std::to_string(m[0]) + std::to_string(m[1]) + ";" +
                    std::to_string(m[2]) + std::to_string(m[3]) + "]";
    }
    auto mul = [&](int x, int y) {
        const auto& p = mats[x];
        const auto& q = mats[y];
        std::array<int, 4> r{(p[0] * q[0] + p[1] * q[2]) % 3, (p[0] * q[1] + p[1] * q[3]) % 3,
                             (p[2] * q[0] + p[3] * q[2]) % 3, (p[2] * q[1] + p[3] * q[3]) % 3};
        return index.at(r);
    };
    return build(order, name, std::move(labels), cap, mul);
}

// C_m x| C_n, action x -> x^k; elements (a, b) with index a*n + b.
GroupPtr make_semidirect_cyclic(int m, int n, int k, const std::string& name, int cap) {
    if (m < 1 || n < 1) throw Error("semidirect parameters must be positive");
    if (std::gcd(k % m, m) != 1)
        throw InvalidAction("gcd(k,m) != 1 for SD(" + std::to_string(m) + "," + std::to_string(n) +
                            "," + std::to_string(k) + ")");
    long long kn = 1;
    for (int i = 0; i < n; ++i) kn = (kn * k) % m;
    if (kn % m != 1 % m)
        throw InvalidAction("k^n != 1 (mod m) for SD(" + std::to_string(m) + "," +
                            std::to_string(n) + "," + std::to_string(k) + ")");
    long long order = (long long)m * n;
    if (order > cap) throw OrderCapExceeded("semidirect order exceeds cap");
    std::vector<int> kpow(n);
    kpow[0] = 1 % m;
    for (int i = 1; i < n; ++i) kpow[i] = int(((long long)kpow[i - 1] * k) % m);
    std::vector<std::string> labels(m * n);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b)
            labels[a * n + b] = "x^" + std::to_string(a) + ".y^" + std::to_string(b);
    labels[0] = "e";
    auto mul = [m, n, &kpow](int x, int y) {
        int a1 = x / n, b1 = x % n, a2 = y / n, b2 = y % n;
        int a = int((a1 + (long long)kpow[b1] * a2) % m);
        return a * n + (b1 + b2) % n;
    };
    return build(int(order), name, std::move(labels), cap, mul);
}

} // namespace

GroupPtr realize(const GroupSpec& spec, int cap) {
    const std::string name = spec.canonical_name();
    switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: return make_cyclic(spec.a, name, cap);
    case GroupSpec::Kind::Dihedral: return make_dihedral(spec.a, name, cap);
    case GroupSpec::Kind::Dicyclic: return make_dicyclic(spec.a, name, cap);
    case GroupSpec::Kind::ElementaryAbelian:
        return make_elementary_abelian(spec.a, spec.b, name, cap);
    case GroupSpec::Kind::Symmetric: return make_permutation_group(spec.a, false, name, cap);
    case GroupSpec::Kind::Alternating: return make_permutation_group(spec.a, true, name, cap);
    case GroupSpec::Kind::SL23: return make_sl23(name, cap);
    case GroupSpec::Kind::SemidirectCyclic:
        return make_semidirect_cyclic(spec.a, spec.b, spec.c, name, cap);
    case GroupSpec::Kind::Product: {
        auto a = realize(spec.factors[0], cap);
        auto b = realize(spec.factors[1], cap);
        return direct_product(a, b, cap);
    }
    case GroupSpec::Kind::FromFile: return load_group(spec.path, cap);
    }
    throw Error("unknown group spec");
}

std::vector<std::pair<GroupSpec, GroupPtr>> standard_corpus(int cap) {
    std::vector<GroupSpec> specs;
    for (int n = 1; n <= 12; ++n) specs.push_back(GroupSpec::cyclic(n));
    specs.push_back(GroupSpec::cyclic(16));
    specs.push_back(GroupSpec::cyclic(27));
    specs.push_back(GroupSpec::elementary_abelian(2, 3));
    specs.push_back(GroupSpec::elementary_abelian(3, 2));
    for (int n = 4; n <= 8; ++n) specs.push_back(GroupSpec::dihedral(n)); // orders 8..16
    specs.push_back(GroupSpec::dicyclic(2)); // Q8
    specs.push_back(GroupSpec::dicyclic(3)); // order 12
    specs.push_back(GroupSpec::symmetric(3));
    specs.push_back(GroupSpec::symmetric(4));
    specs.push_back(GroupSpec::symmetric(5));
    specs.push_back(GroupSpec::alternating(4));
    specs.push_back(GroupSpec::alternating(5));
    specs.push_back(GroupSpec::sl23());
    specs.push_back(GroupSpec::product(GroupSpec::cyclic(3), GroupSpec::symmetric(3)));
    specs.push_back(GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::alternating(4)));
    specs.push_back(GroupSpec::product(GroupSpec::dihedral(4), GroupSpec::cyclic(3)));
    specs.push_back(GroupSpec::semidirect_cyclic(5, 4, 2));
    specs.push_back(GroupSpec::semidirect_cyclic(7, 3, 2));

    std::vector<std::pair<GroupSpec, GroupPtr>> out;
    out.reserve(specs.size());
    for (auto& s : specs) {
        GroupPtr g = realize(s, cap);
        out.emplace_back(std::move(s), std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cayley-table files

GroupPtr load_group(const std::string& path, int cap) {
    std::ifstream in(path);
    if (!in) throw FileFormatError(path + ": cannot open");
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    auto fail = [&](const std::string& msg) -> FileFormatError {
        return FileFormatError(path + ":" + std::to_string(lineno) + ": " + msg);
    };

    if (!next_line()) throw fail("missing order line");
    int n = 0;
    {
        std::istringstream ss(line);
        if (!(ss >> n)) throw fail("order is not an integer");
        std::string rest;
        if (ss >> rest) throw fail("trailing tokens after order");
    }
    if (n <= 0) throw fail("order must be positive");

    std::vector<std::vector<int>> table;
    table.reserve(n);
    for (int r = 0; r < n; ++r) {
        if (!next_line()) throw fail("missing row " + std::to_string(r));
        std::istringstream ss(line);
        std::vector<int> row;
        int v;
        while (ss >> v) row.push_back(v);
        if (!ss.eof()) throw fail("row " + std::to_string(r) + " has a non-integer token");
        if (int(row.size()) != n)
            throw fail("row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(n));
        table.push_back(std::move(row));
    }

    std::string name;
    std::vector<std::string> labels(n);
    bool any_label = false;
    while (next_line()) {
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "name") {
            std::string rest;
            std::getline(ss, rest);
            auto pos = rest.find_first_not_of(" \t");
            name = pos == std::string::npos ? "" : rest.substr(pos);
            if (name.empty()) throw fail("empty name");
        } else if (key == "label") {
            int i;
            if (!(ss >> i) || i < 0 || i >= n) throw fail("bad label index");
            std::string rest;
            std::getline(ss, rest);
            auto pos = rest.find_first_not_of(" \t");
            if (pos == std::string::npos) throw fail("empty label");
            labels[i] = rest.substr(pos);
            any_label = true;
        } else {
            throw fail("unknown directive '" + key + "'");
        }
    }
    if (name.empty()) {
        GroupSpec s = GroupSpec::from_file(path);
        name = s.canonical_name();
    }

    std::vector<std::uint16_t> flat;
    flat.reserve(std::size_t(n) * n);
    for (auto& row : table)
        for (int v : row) {
            if (v < 0 || v >= n) throw FileFormatError(path + ": entry out of range");
            flat.push_back(std::uint16_t(v));
        }
    return make_group(std::move(flat), n, name, any_label ? std::move(labels) : std::vector<std::string>{}, cap);
}

void write_cayley_file(const std::string& path, const Group& g) {
    std::ofstream out(path);
    if (!out) throw FileFormatError(path + ": cannot open for writing");
    int n = g.order();
    out << n << "\n";
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) out << g.mul(a, b) << (b + 1 < n ? " " : "");
        out << "\n";
    }
    out << "name " << g.name() << "\n";
    if (g.has_labels())
        for (int i = 0; i < n; ++i) out << "label " << i << " " << g.label(i) << "\n";
}

// ---------------------------------------------------------------------------
// Spec grammar

namespace {

struct SpecParser {
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("group spec '" + s + "' at position " + std::to_string(pos) + ": " + msg);
    }
    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    int number() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) fail("expected a number");
        return std::stoi(s.substr(start, pos - start));
    }

    GroupSpec parse() {
        GroupSpec out = term();
        if (pos != s.size()) fail("trailing input");
        return out;
    }

    GroupSpec term() {
        if (s.compare(pos, 5, "file:") == 0) {
            pos = s.size();
            return GroupSpec::from_file(s.substr(5));
        }
        if (s.compare(pos, 5, "prod(") == 0) {
            pos += 5;
            GroupSpec a = term();
            expect(',');
            GroupSpec b = term();
            expect(')');
            return GroupSpec::product(std::move(a), std::move(b));
        }
        if (s.compare(pos, 3, "EA(") == 0) {
            pos += 3;
            int p = number();
            expect(',');
            int k = number();
            expect(')');
            return GroupSpec::elementary_abelian(p, k);
        }
        if (s.compare(pos, 3, "SD(") == 0) {
            pos += 3;
            int m = number();
            expect(',');
            int n = number();
            expect(',');
            int k = number();
            expect(')');
            return GroupSpec::semidirect_cyclic(m, n, k);
        }
        if (s.compare(pos, 7, "SL(2,3)") == 0) {
            pos += 7;
            return GroupSpec::sl23();
        }
        if (s.compare(pos, 4, "SL23") == 0) {
            pos += 4;
            return GroupSpec::sl23();
        }
        if (s.compare(pos, 3, "Dic") == 0) {
            pos += 3;
            return GroupSpec::dicyclic(number());
        }
        if (eat('Q')) {
            int n = number();
            if (n % 4 != 0) fail("dicyclic order must be divisible by 4");
            return GroupSpec::dicyclic(n / 4);
        }
        if (eat('C')) return GroupSpec::cyclic(number());
        if (eat('D')) {
            int order = number();
            if (order % 2 != 0) fail("dihedral order must be even");
            return GroupSpec::dihedral(order / 2);
        }
        if (eat('S')) return GroupSpec::symmetric(number());
        if (eat('A')) return GroupSpec::alternating(number());
        fail("unknown constructor");
    }
};

} // namespace

GroupSpec parse_group_spec(const std::string& text) {
    SpecParser p{text};
    return p.parse();
}

} // namespace hclab
