#include <doctest.h>

#include <set>

#include "superder/roots.hpp"

using namespace superder;

namespace {

RootDatum decompose(const CatalogEntry& e) { return root_decompose(e.algebra, e.meta.cartan); }

int total_root_dim(const RootDatum& rd) {
    int s = 0;
    for (const auto& r : rd.roots) s += r.dim();
    return s;
}

}  // namespace

TEST_CASE("sl2 decomposes into the two one-dimensional root spaces +-2") {
    const CatalogEntry sl2 = make_sl2();
    const RootDatum rd = decompose(sl2);
    REQUIRE(rd.roots.size() == 2);
    std::set<Rational> funcs;
    for (const auto& r : rd.roots) {
        CHECK(r.dim() == 1);
        CHECK(r.parity == 0);
        funcs.insert(r.functional[0]);
    }
    CHECK(funcs == std::set<Rational>{Rational(-2), Rational(2)});
    CHECK(verify_theorem2(sl2.algebra, rd).empty());
}

TEST_CASE("a non-diagonal Cartan choice is rejected") {
    const CatalogEntry sl2 = make_sl2();
    CHECK_THROWS_WITH(root_decompose(sl2.algebra, {1}), "basis is not a root basis");
}

TEST_CASE("root space dimensions sum to the algebra dimension") {
    for (const char* spec : {"A:1,0", "B:0,1", "B:1,1", "C:2", "D:2,1", "P:2", "Q:2", "D21:1"}) {
        const CatalogEntry e = construct(FamilySpec::parse(spec));
        const RootDatum rd = decompose(e);
        CAPTURE(spec);
        CHECK(total_root_dim(rd) + rd.zero_space.dim() == e.algebra.dim());
        // roots come in +- pairs, except for P(n) whose system is one-sided
        // (2e_i is a root via the symmetric block, -2e_i has no antisymmetric
        // counterpart)
        if (spec[0] == 'P') continue;
        std::set<std::vector<Rational>> funcs;
        for (const auto& r : rd.roots) funcs.insert(r.functional);
        for (const auto& f : funcs) {
            std::vector<Rational> neg;
            for (const auto& c : f) neg.push_back(-c);
            CHECK(funcs.count(neg) == 1);
        }
    }
}

TEST_CASE("theorem 2 verification is empty on the basic instances") {
    for (const char* spec : {"A:1,0", "A:2,1", "B:0,1", "B:1,1", "C:2", "D:2,1", "D21:2"}) {
        const CatalogEntry e = construct(FamilySpec::parse(spec));
        CAPTURE(spec);
        CHECK(verify_theorem2(e.algebra, decompose(e)).empty());
    }
}

TEST_CASE("non-basic families are decomposed and reported, not asserted") {
    // Q(n) has odd zero-weight vectors: (a) must flag the excess
    const CatalogEntry q2 = construct(FamilySpec::parse("Q:2"));
    const RootDatum rd = decompose(q2);
    CHECK(rd.zero_space.dim() > static_cast<int>(rd.cartan.size()));
    const auto report = verify_theorem2(q2.algebra, rd);
    REQUIRE(!report.empty());
    CHECK(report.front().find("(a)") != std::string::npos);
    // the same functional appears with both parities: multiplicity 2 under (b)
    bool mult = false;
    for (const auto& line : report)
        if (line.find("(b)") != std::string::npos) mult = true;
    CHECK(mult);

    const CatalogEntry p2 = construct(FamilySpec::parse("P:2"));
    CHECK_NOTHROW(verify_theorem2(p2.algebra, decompose(p2)));
}

TEST_CASE("computed roots match the family tables") {
    for (const char* spec : {"B:0,1", "B:1,1", "C:2", "A:1,0", "D:2,1", "D21:2/3"}) {
        const CatalogEntry e = construct(FamilySpec::parse(spec));
        CAPTURE(spec);
        CHECK(match_root_table(decompose(e), FamilySpec::parse(spec)));
    }
}

TEST_CASE("B(0,1): even roots {+-2d}, odd roots {+-d}") {
    const CatalogEntry e = construct(FamilySpec::parse("B:0,1"));
    const RootDatum rd = decompose(e);
    REQUIRE(rd.roots.size() == 4);
    int odd = 0;
    for (const auto& r : rd.roots) {
        REQUIRE(r.functional.size() == 1);
        if (r.parity == 1) {
            ++odd;
            CHECK((r.functional[0] == Rational(1) || r.functional[0] == Rational(-1)));
        } else {
            CHECK((r.functional[0] == Rational(2) || r.functional[0] == Rational(-2)));
        }
    }
    CHECK(odd == 2);
}

TEST_CASE("A(1,0): two even and four odd roots as in the table") {
    const CatalogEntry e = construct(FamilySpec::parse("A:1,0"));
    const RootDatum rd = decompose(e);
    int even = 0, odd = 0;
    for (const auto& r : rd.roots) (r.parity == 0 ? even : odd) += r.dim();
    CHECK(even == 2);
    CHECK(odd == 4);
}

TEST_CASE("a mislabeled family does not match") {
    const CatalogEntry b01 = construct(FamilySpec::parse("B:0,1"));
    CHECK_FALSE(match_root_table(decompose(b01), FamilySpec::parse("C:2")));
    const CatalogEntry c2 = construct(FamilySpec::parse("C:2"));
    CHECK_FALSE(match_root_table(decompose(c2), FamilySpec::parse("B:1,1")));
    CHECK_THROWS_AS(match_root_table(decompose(c2), FamilySpec::parse("Q:2")), std::domain_error);
}

TEST_CASE("root report JSON") {
    const CatalogEntry sl2 = make_sl2();
    const RootDatum rd = decompose(sl2);
    const auto j = root_report(sl2.algebra, rd);
    CHECK(j.at("cartan_dim") == 1);
    CHECK(j.at("theorem2") == "ok");
    CHECK(j.at("roots").size() == 2);
    CHECK(j.at("roots").at(0).at("dim") == 1);
}
