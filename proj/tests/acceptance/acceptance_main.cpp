// Acceptance suite: machine-checks the headline results over the whole
// implemented catalog and prints one PASS/FAIL line per criterion.
//
// Everything is exact arithmetic; a criterion passes only on exact equality.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "superder/catalog.hpp"
#include "superder/deltader.hpp"
#include "superder/json_io.hpp"
#include "superder/report.hpp"
#include "superder/roots.hpp"

using namespace superder;

namespace {

struct SolveResult {
    int nullity = -1;
    bool scalar_line = false;
    bool grading = false;
    int inner_dim = -1;
    bool inner_contained = false;
    int outer_dim = -1;
    std::string report_json;
};

struct InstanceResult {
    std::string spec;
    CatalogEntry entry;
    bool identities_ok = false;
    std::string algebra_json;
    std::string root_json;
    bool theorem2_ok = false;
    std::map<std::string, SolveResult> by_delta;
};

struct Pass {
    std::vector<InstanceResult> instances;
    std::string sl2_antider_json;
    int sl2_antider_dim = -1;
    bool sl2_antider_family = false;
    std::string scan_a10_json, scan_b01_json;
    CriticalReport scan_a10, scan_b01;

    std::string fingerprint() const {
        std::string fp;
        for (const auto& inst : instances) {
            fp += inst.algebra_json;
            fp += inst.root_json;
            for (const auto& [d, r] : inst.by_delta) fp += r.report_json;
        }
        fp += sl2_antider_json;
        fp += scan_a10_json;
        fp += scan_b01_json;
        return fp;
    }
};

bool in_antider_family(const std::vector<Rational>& flat) {
    auto M = [&](int r, int c) { return flat[static_cast<size_t>(r * 3 + c)]; };
    const Rational a = M(1, 1), b = M(0, 1), c = M(0, 2);
    return M(2, 2) == a && M(0, 0) == Rational(-2) * a && M(1, 0) == Rational(2) * c &&
           M(2, 0) == Rational(2) * b;
}

Pass run_pass(int jobs) {
    Pass pass;
    const auto families = report_families();
    const auto deltas = report_deltas();
    pass.instances.reserve(families.size());
    for (const auto& f : families) pass.instances.push_back({f, construct_by_name(f)});

    struct Task {
        size_t inst;
        int kind;  // 0: identities+roots+json, 1: solve delta #k, 2: fixture/scan
        int k;
    };
    std::vector<Task> tasks;
    for (size_t i = 0; i < pass.instances.size(); ++i) {
        tasks.push_back({i, 0, 0});
        for (size_t k = 0; k < deltas.size(); ++k) tasks.push_back({i, 1, static_cast<int>(k)});
    }
    tasks.push_back({0, 2, 0});  // sl2 antiderivations
    tasks.push_back({0, 2, 1});  // scan A:1,0
    tasks.push_back({0, 2, 2});  // scan B:0,1

    parallel_for(static_cast<int>(tasks.size()), jobs, [&](int ti) {
        const Task& t = tasks[static_cast<size_t>(ti)];
        InstanceResult& inst = pass.instances[t.inst];
        if (t.kind == 0) {
            inst.identities_ok = inst.entry.algebra.check_superidentities().empty();
            inst.algebra_json = dump_json(algebra_to_json(inst.entry.algebra));
            const RootDatum rd = root_decompose(inst.entry.algebra, inst.entry.meta.cartan);
            inst.root_json = dump_json(root_report(inst.entry.algebra, rd));
            inst.theorem2_ok = verify_theorem2(inst.entry.algebra, rd).empty();
        } else if (t.kind == 1) {
            const Rational d = deltas[static_cast<size_t>(t.k)];
            const DerivationSpace s = derivation_space(inst.entry.algebra, d);
            const SpaceAnalysis an = analyze_space(inst.entry.algebra, s);
            SolveResult r;
            r.nullity = s.dim();
            r.scalar_line = an.scalar_line;
            r.grading = an.grading_preserving;
            r.inner_dim = an.inner_dim;
            r.inner_contained = an.inner_contained;
            r.outer_dim = an.outer_dim;
            r.report_json = dump_json(derive_report(inst.entry.algebra, s));
            static std::mutex mu;
            std::lock_guard<std::mutex> lock(mu);
            inst.by_delta[d.str()] = std::move(r);
        } else if (t.k == 0) {
            const SuperAlgebra sl2 = make_sl2().algebra;
            const DerivationSpace s = derivation_space(sl2, Rational(-1));
            pass.sl2_antider_dim = s.dim();
            pass.sl2_antider_family = true;
            for (const auto& flat : s.basis)
                if (!in_antider_family(flat)) pass.sl2_antider_family = false;
            pass.sl2_antider_json = dump_json(derive_report(sl2, s));
        } else if (t.k == 1) {
            pass.scan_a10 = critical_deltas(construct_by_name("A:1,0").algebra);
            pass.scan_a10_json = dump_json(scan_report(pass.scan_a10));
        } else {
            pass.scan_b01 = critical_deltas(construct_by_name("B:0,1").algebra);
            pass.scan_b01_json = dump_json(scan_report(pass.scan_b01));
        }
    });
    return pass;
}

int g_failures = 0;

void verdict(int criterion, bool ok, const std::string& text, const std::string& detail = "") {
    std::printf("CRITERION %2d: %s - %s\n", criterion, ok ? "PASS" : "FAIL", text.c_str());
    if (!ok && !detail.empty()) std::printf("              %s\n", detail.c_str());
    if (!ok) ++g_failures;
}

bool is_basic(const std::string& spec) {
    return spec.rfind("Aqq", 0) != 0 && spec.rfind("P", 0) != 0 && spec.rfind("Q", 0) != 0;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    const int jobs_a = std::min(hw > 0 ? hw : 4, 8);
    const auto t0 = std::chrono::steady_clock::now();

    std::printf("running acceptance pass (jobs=%d)...\n", jobs_a);
    Pass pass = run_pass(jobs_a);
    const double pass_time = seconds_since(t0);

    // 1. superidentities, exhaustively, on all instances
    {
        std::string bad;
        for (const auto& inst : pass.instances)
            if (!inst.identities_ok) bad += inst.spec + " ";
        verdict(1, bad.empty(),
                "superidentities hold exhaustively on all 15 catalog instances", bad);
    }

    // 2. delta = 1/2: nullity exactly 1, basis map a rational multiple of the identity
    {
        std::string bad;
        for (const auto& inst : pass.instances) {
            const SolveResult& r = inst.by_delta.at("1/2");
            if (r.nullity != 1 || !r.scalar_line) bad += inst.spec + " ";
        }
        verdict(2, bad.empty(), "delta=1/2 space is exactly the scalar line on every instance",
                bad);
    }

    // 3. off-critical deltas: nullity 0 everywhere
    {
        std::string bad;
        for (const auto& inst : pass.instances)
            for (const char* d : {"0/1", "-1/1", "-1/2", "2/1", "3/7"})
                if (inst.by_delta.at(d).nullity != 0) bad += inst.spec + "@" + d + " ";
        verdict(3, bad.empty(),
                "nullity 0 at delta in {0, -1, -1/2, 2, 3/7} on every instance", bad);
    }

    // 4. sl2 antiderivations: dimension 5 inside the five-parameter family
    verdict(4,
            pass.sl2_antider_dim == 5 && pass.sl2_antider_family,
            "sl2 antiderivation space has dim 5 and matches the five-parameter family",
            "dim=" + std::to_string(pass.sl2_antider_dim));

    // 5. delta = 1: the criterion asserts that all n maps ad e_i lie in the
    // space with inner_dim = dim A. For an algebra with odd part, ad of an odd
    // basis vector satisfies the signed super-Leibniz rule, not the plain
    // delta=1 identity, so this holds only for the even ad maps; the criterion
    // is checked as stated and the measured values are reported alongside.
    {
        std::string bad, info;
        for (const auto& inst : pass.instances) {
            const SolveResult& r = inst.by_delta.at("1/1");
            if (r.inner_dim != inst.entry.algebra.dim() || !r.inner_contained)
                bad += inst.spec + " ";
            info += inst.spec + ":nullity=" + std::to_string(r.nullity) +
                    "(even_dim=" + std::to_string(inst.entry.algebra.even_dim()) +
                    ",outer=" + std::to_string(r.outer_dim) + ") ";
        }
        verdict(5, bad.empty(),
                "delta=1 space contains all n ad maps with inner_dim = dim A (as stated)", bad);
        std::printf("              measured delta=1 spaces: %s\n", info.c_str());
        std::printf("              note: ad of an odd basis vector is a superderivation, not a "
                    "plain 1-derivation;\n");
        std::printf("              the delta=1 space equals the even derivation algebra "
                    "(plus outer parts where they exist).\n");
    }

    // 6. parametric scans of A(1,0) and B(0,1): critical set exactly {1/2, 1},
    // empty unresolved factors, nullities as in criteria 2 and 5 (the stated
    // delta=1 nullity inherits criterion 5's "all ad maps" expectation of at
    // least dim A; the measured nullity is the even derivation dimension)
    {
        auto scan_set_ok = [](const CriticalReport& r) {
            return r.unresolved_factors.empty() && r.critical.size() == 2 &&
                   r.critical[0].delta == Rational(1, 2) && r.critical[0].nullity == 1 &&
                   r.critical[1].delta == Rational(1) && r.probes.ok;
        };
        const bool sets_ok = scan_set_ok(pass.scan_a10) && scan_set_ok(pass.scan_b01);
        const bool nullities_as_stated =
            pass.scan_a10.critical.size() == 2 && pass.scan_b01.critical.size() == 2 &&
            pass.scan_a10.critical[1].nullity >= 8 && pass.scan_b01.critical[1].nullity >= 5;
        verdict(6, sets_ok && nullities_as_stated,
                "parametric scan: critical set exactly {1/2, 1} with the stated nullities");
        std::printf("              A(1,0): %s", pass.scan_a10_json.c_str());
        std::printf("              B(0,1): %s", pass.scan_b01_json.c_str());
        if (sets_ok && !nullities_as_stated)
            std::printf("              critical sets and 1/2-nullities are exact; the delta=1 "
                        "nullities are the even derivation dimensions (see criterion 5)\n");
    }

    // 7. grading preservation of the delta = 1/2 spaces on basic instances
    {
        std::string bad;
        for (const auto& inst : pass.instances) {
            if (!is_basic(inst.spec)) continue;
            const SolveResult& r = inst.by_delta.at("1/2");
            if (r.nullity > 0 && !r.grading) bad += inst.spec + " ";
        }
        verdict(7, bad.empty(), "delta=1/2 spaces preserve the grading on basic instances", bad);
    }

    // 8. theorem 2 and the root tables
    {
        std::string bad;
        for (const auto& inst : pass.instances)
            if (is_basic(inst.spec) && !inst.theorem2_ok) bad += inst.spec + " ";
        for (const char* spec : {"B:0,1", "B:1,1", "C:2", "A:1,0"}) {
            const CatalogEntry e = construct_by_name(spec);
            const RootDatum rd = root_decompose(e.algebra, e.meta.cartan);
            if (!match_root_table(rd, FamilySpec::parse(spec)))
                bad += std::string(spec) + "(table) ";
        }
        verdict(8, bad.empty(),
                "theorem 2 verified on basic instances; root tables match for B(0,1), B(1,1), "
                "C(2), A(1,0)",
                bad);
    }

    // 9. oracle equivalence of two elimination orders on the small fixtures
    {
        BracketTable corrupt;
        corrupt.emplace(std::make_pair(0, 1), SparseVec{{1, Rational(2)}});
        corrupt.emplace(std::make_pair(0, 2), SparseVec{{2, Rational(-2)}});
        corrupt.emplace(std::make_pair(1, 2), SparseVec{{0, Rational(1)}, {1, Rational(1)}});
        const SuperAlgebra fixtures[] = {make_sl2().algebra, SuperAlgebra("abelian1", {0}, {}),
                                         SuperAlgebra("sl2_corrupt", {0, 0, 0}, corrupt)};
        std::string bad;
        for (const auto& a : fixtures)
            for (const Rational& d :
                 {Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
                const int n1 = derivation_space(a, d, ElimOrder::Forward).dim();
                const int n2 = derivation_space(a, d, ElimOrder::Reversed).dim();
                if (n1 != n2) bad += a.name() + "@" + d.str() + " ";
            }
        verdict(9, bad.empty(), "independent elimination orders agree on all dim<=6 fixtures",
                bad);
    }

    // 10. determinism across runs and jobs settings
    {
        std::printf("re-running the full pass (jobs=3) for the determinism check...\n");
        Pass pass_b = run_pass(3);
        const bool fp_ok = pass.fingerprint() == pass_b.fingerprint();
        const std::string csv1 = report_csv(1, 14, kDefaultSeed);
        const std::string csv4 = report_csv(4, 14, kDefaultSeed);
        verdict(10, fp_ok && csv1 == csv4,
                "all outputs byte-identical across runs and --jobs settings");
    }

    std::printf("acceptance: %d/10 criteria passed (first pass %.1fs, total %.1fs)\n",
                10 - g_failures, pass_time, seconds_since(t0));
    return g_failures == 0 ? 0 : 1;
}
