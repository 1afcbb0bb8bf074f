#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hclab/classes.hpp"
#include "hclab/corpus.hpp"
#include "hclab/series.hpp"

using namespace hclab;

namespace {

GroupPtr corpus_group(const char* name) { return realize(parse_group_spec(name)); }

// Smallest normal subgroup with nilpotent quotient, found by direct scan.
Subgroup residual_by_scan(const GroupPtr& g) {
    Subgroup best = whole_group(g);
    for (const auto& n : normal_subgroups(g)) {
        if (n.size() >= best.size()) continue;
        if (is_nilpotent(quotient(g, n).first)) best = n;
    }
    return best;
}

} // namespace

TEST_CASE("centers") {
    CHECK(center(corpus_group("C12")).is_whole_group());
    CHECK(center(corpus_group("S3")).is_trivial());
    CHECK(center(corpus_group("Q8")).size() == 2);
}

TEST_CASE("hypercenter") {
    CHECK(hypercenter(corpus_group("Q8")).is_whole_group()); // nilpotent
    CHECK(hypercenter(corpus_group("C12")).is_whole_group());
    CHECK(hypercenter(corpus_group("S3")).is_trivial());
    CHECK(hypercenter(corpus_group("S4")).is_trivial());
    CHECK(hypercenter(corpus_group("SL23")).size() == 2); // stabilizes at the center

    auto dic3 = corpus_group("Dic3"); // Z = C2 and Dic3/Z = S3 has trivial center
    CHECK(hypercenter(dic3).size() == 2);

    auto d8c3 = corpus_group("prod(D8,C3)");
    auto series = upper_central_series(d8c3);
    CHECK(series.terms.back().is_whole_group());
    for (std::size_t i = 1; i < series.terms.size(); ++i) {
        CHECK(series.terms[i - 1].size() < series.terms[i].size()); // strictly monotone
        CHECK(is_normal(series.terms[i]));
    }
}

TEST_CASE("hypercenter reaches G exactly on the nilpotent corpus members") {
    for (const auto& [spec, g] : standard_corpus())
        CHECK(hypercenter(g).is_whole_group() == is_nilpotent(g));
}

TEST_CASE("derived series") {
    CHECK(derived_subgroup(corpus_group("C12")).is_trivial());

    auto s4 = corpus_group("S4");
    auto ds = derived_series(s4);
    REQUIRE(ds.terms.size() == 4); // S4 > A4 > V4 > 1
    CHECK(ds.terms[0].size() == 24);
    CHECK(ds.terms[1].size() == 12);
    CHECK(ds.terms[2].size() == 4);
    CHECK(ds.terms[3].size() == 1);

    auto a5 = corpus_group("A5");
    CHECK(derived_subgroup(a5).is_whole_group()); // perfect
    CHECK(derived_series(a5).terms.size() == 1);
}

TEST_CASE("nilpotent residual equals smallest normal with nilpotent quotient") {
    CHECK(nilpotent_residual(corpus_group("C16")).is_trivial());
    CHECK(nilpotent_residual(corpus_group("Q8")).is_trivial());
    CHECK(nilpotent_residual(corpus_group("S3")).size() == 3);
    CHECK(nilpotent_residual(corpus_group("S4")).size() == 12); // A4, not V4

    for (const auto& [spec, g] : standard_corpus()) {
        Subgroup lcs = nilpotent_residual(g);
        CHECK(lcs.same_set(residual_by_scan(g)));
    }
}

TEST_CASE("fitting subgroup") {
    CHECK(fitting(corpus_group("Q8")).is_whole_group());
    CHECK(fitting(corpus_group("C12")).is_whole_group());
    CHECK(fitting(corpus_group("S4")).size() == 4); // V4 = O_2(S4)
    CHECK(fitting(corpus_group("S3")).size() == 3); // C3
    CHECK(fitting(corpus_group("A5")).is_trivial());
}

TEST_CASE("generalized fitting subgroup") {
    // solvable: F* = F
    CHECK(generalized_fitting(corpus_group("S4")).size() == 4);
    CHECK(generalized_fitting(corpus_group("SL23")).size() == 8); // Q8
    CHECK(generalized_fitting(corpus_group("A5")).is_whole_group());
    CHECK(generalized_fitting(corpus_group("S5")).size() == 60); // A5

    for (const auto& [spec, g] : standard_corpus()) {
        Subgroup f = fitting(g);
        Subgroup fs = generalized_fitting(g);
        CHECK(f.bits().is_subset_of(fs.bits()));
        if (g->order() > 1) CHECK(fs.size() > 1);
        CHECK(centralizer(fs).bits().is_subset_of(f.bits()));
        if (is_solvable(g)) CHECK(fs.same_set(f));
        CHECK(is_normal(fs));

        // maximality oracle: F* is quasinilpotent and nothing normal strictly
        // above it is
        CHECK(generalized_fitting_of(fs).same_set(fs));
        for (const auto& n : normal_subgroups(g)) {
            if (n.size() <= fs.size()) continue;
            if (fs.bits().is_subset_of(n.bits()))
                CHECK_FALSE(generalized_fitting_of(n).same_set(n));
        }

        // restriction identity on every normal subgroup
        for (const auto& n : normal_subgroups(g))
            CHECK(generalized_fitting_of(n).bits() == (n.bits() & fs.bits()));
    }
}

TEST_CASE("chief series") {
    auto s4 = corpus_group("S4");
    auto cs = chief_series(s4);
    CHECK(chief_factor_orders(cs) == std::vector<int>{4, 3, 2}); // 1 < V4 < A4 < S4

    auto c1 = corpus_group("C1");
    CHECK(chief_series(c1).terms.size() == 1);

    for (const auto& [spec, g] : standard_corpus()) {
        auto series = chief_series(g);
        for (std::size_t i = 0; i < series.terms.size(); ++i) {
            CHECK(is_normal(series.terms[i]));
            if (i > 0) {
                CHECK(series.terms[i - 1].bits().is_subset_of(series.terms[i].bits()));
                CHECK(is_chief_factor(g, series.terms[i - 1], series.terms[i]));
            }
        }
        // Jordan-Hoelder: the reversed tie-break yields the same factor multiset
        auto factors = chief_factor_orders(series);
        auto reversed = chief_factor_orders(chief_series(g, true));
        std::sort(factors.begin(), factors.end());
        std::sort(reversed.begin(), reversed.end());
        CHECK(factors == reversed);
    }
}

TEST_CASE("chief factor predicate") {
    auto s4 = corpus_group("S4");
    auto normals = normal_subgroups(s4); // 1, V4, A4, S4
    REQUIRE(normals.size() == 4);
    const Subgroup& triv = normals[0];
    const Subgroup& v4 = normals[1];
    const Subgroup& a4 = normals[2];
    const Subgroup& s4full = normals[3];

    CHECK(is_chief_factor(s4, triv, v4));       // minimal normal
    CHECK_FALSE(is_chief_factor(s4, triv, a4)); // V4 sits strictly between
    CHECK(is_chief_factor(s4, v4, a4));
    CHECK(is_chief_factor(s4, a4, s4full));
    CHECK_FALSE(is_chief_factor(s4, triv, triv));

    // a non-normal H is rejected
    auto transposition = generated_subgroup(s4, std::vector<int>{1});
    CHECK(transposition.size() == 2);
    CHECK_THROWS_AS(is_chief_factor(s4, trivial_subgroup(s4), transposition), NotNormal);

    // supersolvable corpus members have all chief factors of prime order
    for (const auto& [spec, g] : standard_corpus()) {
        if (!is_supersolvable(g)) continue;
        for (int f : chief_factor_orders(chief_series(g))) CHECK(is_prime(f));
    }
}
