#include <doctest.h>

#include "superder/deltader.hpp"
#include "superder/catalog.hpp"

using namespace superder;

namespace {

SuperAlgebra abelian1() { return SuperAlgebra("abelian1", {0}, {}); }

SuperAlgebra corrupted_sl2() {
    BracketTable table;
    table.emplace(std::make_pair(0, 1), SparseVec{{1, Rational(2)}});
    table.emplace(std::make_pair(0, 2), SparseVec{{2, Rational(-2)}});
    table.emplace(std::make_pair(1, 2), SparseVec{{0, Rational(1)}, {1, Rational(1)}});
    return SuperAlgebra("sl2_corrupt", {0, 0, 0}, std::move(table));
}

// Lemma-6 shape in the (h,e,f) column convention; solving for the five
// parameters is reading entries, membership is the four residual identities.
bool in_antider_family(const std::vector<Rational>& flat) {
    auto M = [&](int r, int c) { return flat[static_cast<size_t>(r * 3 + c)]; };
    const Rational a = M(1, 1), b = M(0, 1), c = M(0, 2);
    return M(2, 2) == a && M(0, 0) == Rational(-2) * a && M(1, 0) == Rational(2) * c &&
           M(2, 0) == Rational(2) * b;
}

SuperAlgebra scale_constants(const SuperAlgebra& a, const Rational& s) {
    BracketTable table = a.table();
    for (auto& [key, vec] : table) vec = sv_scale(vec, s);
    return SuperAlgebra(a.name() + "_scaled", a.parities(), std::move(table));
}

int nullity(const SuperAlgebra& a, const Rational& d, ElimOrder o = ElimOrder::Forward) {
    return derivation_space(a, d, o).dim();
}

}  // namespace

TEST_CASE("system size bounds") {
    const SuperAlgebra sl2 = make_sl2().algebra;
    const auto rows = assemble_system(sl2, Rational(1));
    const int n = sl2.dim();
    CHECK(static_cast<int>(rows.size()) <= n * n * (n + 1) / 2);
    for (const auto& r : rows)
        for (const auto& [col, v] : r) {
            CHECK(col >= 0);
            CHECK(col < n * n);
            CHECK(!v.is_zero());
        }
}

TEST_CASE("zero-bracket pairs contribute only delta rows") {
    const SuperAlgebra d21 = construct(FamilySpec::parse("D21:1")).algebra;
    const auto at0 = assemble_system(d21, Rational(0));
    const auto at1 = assemble_system(d21, Rational(1));
    CHECK(at0.size() < at1.size());
}

TEST_CASE("sl2 derivations at delta = 1 are the three inner maps") {
    const SuperAlgebra sl2 = make_sl2().algebra;
    const DerivationSpace s = derivation_space(sl2, Rational(1));
    CHECK(s.dim() == 3);
    const SpaceAnalysis an = analyze_space(sl2, s);
    CHECK(an.inner_dim == 3);
    CHECK(an.inner_contained);
    CHECK(an.outer_dim == 0);
    CHECK(an.grading_preserving);
}

TEST_CASE("scalar line at delta = 1/2") {
    for (const char* spec : {"sl2", "A:1,0", "B:0,1"}) {
        const SuperAlgebra a = construct_by_name(spec).algebra;
        const DerivationSpace s = derivation_space(a, Rational(1, 2));
        CAPTURE(spec);
        CHECK(s.dim() == 1);
        const SpaceAnalysis an = analyze_space(a, s);
        CHECK(an.scalar_line);
        CHECK(an.grading_preserving);
    }
}

TEST_CASE("sl2 antiderivations: dimension 5, inside the five-parameter family") {
    const SuperAlgebra sl2 = make_sl2().algebra;
    const DerivationSpace s = derivation_space(sl2, Rational(-1));
    REQUIRE(s.dim() == 5);
    for (const auto& flat : s.basis) CHECK(in_antider_family(flat));
    const SpaceAnalysis an = analyze_space(sl2, s);
    CHECK(an.grading_preserving);  // no odd part
    CHECK_FALSE(an.scalar_line);
}

TEST_CASE("off-critical deltas give the zero space") {
    const SuperAlgebra a10 = construct(FamilySpec::parse("A:1,0")).algebra;
    CHECK(nullity(a10, Rational(3, 7)) == 0);
    CHECK(nullity(a10, Rational(0)) == 0);
    CHECK(nullity(a10, Rational(-1)) == 0);
    const SuperAlgebra b11 = construct(FamilySpec::parse("B:1,1")).algebra;
    CHECK(nullity(b11, Rational(1, 2)) == 1);
    CHECK(nullity(b11, Rational(0)) == 0);
}

TEST_CASE("delta = 1 space of B(1,1): the even inner derivations") {
    // ad of an odd element is a superderivation, not a plain 1-derivation, so
    // the delta=1 space is spanned by ad of the even part (all derivations of
    // B(1,1) are inner)
    const SuperAlgebra b11 = construct(FamilySpec::parse("B:1,1")).algebra;
    const DerivationSpace s = derivation_space(b11, Rational(1));
    CHECK(s.dim() == b11.even_dim());
    const SpaceAnalysis an = analyze_space(b11, s);
    CHECK(an.inner_dim == b11.dim());   // the 12 ad maps stay independent
    CHECK_FALSE(an.inner_contained);    // the odd ones are not 1-derivations
    CHECK(an.outer_dim == 0);
    CHECK(an.grading_preserving);
    // ad of every even basis vector solves the system exactly
    Subspace space;
    for (const auto& flat : s.basis) {
        SparseVec sv;
        for (size_t c = 0; c < flat.size(); ++c)
            if (!flat[c].is_zero()) sv.emplace_back(static_cast<int>(c), flat[c]);
        space.insert(std::move(sv));
    }
    const int n = b11.dim();
    for (int i = 0; i < n; ++i) {
        if (b11.parity(i) != 0) continue;
        SparseVec ad;
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : b11.bracket_basis(i, j)) ad.emplace_back(k * n + j, c);
        std::sort(ad.begin(), ad.end());
        CHECK(space.contains(ad));
    }
}

TEST_CASE("degenerate abelian input is reported, not rejected") {
    const SuperAlgebra ab = abelian1();
    CHECK(nullity(ab, Rational(7, 3)) == 1);  // full endomorphism space
    const CriticalReport r = critical_deltas(ab);
    CHECK(r.generic_rank == 0);
    CHECK(r.degenerate);
    CHECK(r.critical.empty());
    CHECK(r.probes.ok);
}

TEST_CASE("critical scan of sl2 finds -1, 1/2, 1") {
    const CriticalReport r = critical_deltas(make_sl2().algebra);
    CHECK(r.generic_rank == 9);
    CHECK(r.unresolved_factors.empty());
    REQUIRE(r.critical.size() == 3);
    CHECK(r.critical[0].delta == Rational(-1));
    CHECK(r.critical[0].nullity == 5);
    CHECK(r.critical[1].delta == Rational(1, 2));
    CHECK(r.critical[1].nullity == 1);
    CHECK(r.critical[2].delta == Rational(1));
    CHECK(r.critical[2].nullity == 3);
    CHECK(r.probes.ok);
    CHECK(r.probes.deltas.size() == 5);
}

TEST_CASE("oracle equivalence: both elimination orders agree on small fixtures") {
    const SuperAlgebra fixtures[] = {make_sl2().algebra, abelian1(), corrupted_sl2()};
    const Rational deltas[] = {Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
    for (const auto& a : fixtures)
        for (const auto& d : deltas) {
            CAPTURE(a.name());
            CAPTURE(d.str());
            CHECK(nullity(a, d, ElimOrder::Forward) == nullity(a, d, ElimOrder::Reversed));
        }
}

TEST_CASE("scaling all structure constants preserves every nullity") {
    const SuperAlgebra sl2 = make_sl2().algebra;
    const SuperAlgebra scaled = scale_constants(sl2, Rational(3, 5));
    for (const Rational& d :
         {Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)})
        CHECK(nullity(sl2, d) == nullity(scaled, d));
}

TEST_CASE("delta = 0 on simple algebras forces the zero map") {
    for (const char* spec : {"A:1,0", "C:2", "Q:2"}) {
        CAPTURE(spec);
        CHECK(nullity(construct_by_name(spec).algebra, Rational(0)) == 0);
    }
}

TEST_CASE("derive and scan reports are well-formed JSON") {
    const SuperAlgebra sl2 = make_sl2().algebra;
    const DerivationSpace s = derivation_space(sl2, Rational(1, 2));
    const auto dj = derive_report(sl2, s);
    CHECK(dj.at("delta") == "1/2");
    CHECK(dj.at("nullity") == 1);
    CHECK(dj.at("analysis").at("scalar_line") == true);
    CHECK(dj.at("analysis").at("inner_dim").is_null());
    const auto dj1 = derive_report(sl2, derivation_space(sl2, Rational(1)));
    CHECK(dj1.at("analysis").at("inner_dim") == 3);

    const auto sj = scan_report(critical_deltas(sl2));
    CHECK(sj.at("generic_rank") == 9);
    CHECK(sj.at("critical").size() == 3);
    CHECK(sj.at("probes").at("ok") == true);
}
