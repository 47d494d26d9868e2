#include "superder/report.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "superder/catalog.hpp"

namespace superder {

std::vector<std::string> report_families() {
    return {"A:1,0", "A:2,1", "Aqq:1",  "B:0,1",  "B:1,1",    "C:2",     "D:2,1", "P:2",
            "P:3",   "Q:2",   "Q:3",    "D21:1",  "D21:2",    "D21:-1/2", "D21:3/5"};
}

std::vector<Rational> report_deltas() {
    return {Rational(-1), Rational(-1, 2), Rational(0), Rational(3, 7),
            Rational(1, 2), Rational(1),   Rational(2)};
}

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min(jobs, count);
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

std::string report_csv(int jobs, int max_dim, std::uint64_t seed) {
    (void)seed;  // reserved for randomized probe columns; the matrix is fixed
    struct Task {
        std::string family;
        int index_in_family;
        Rational delta;
    };
    std::vector<std::string> families = report_families();
    std::sort(families.begin(), families.end());
    const std::vector<Rational> deltas = report_deltas();

    std::vector<CatalogEntry> entries;
    entries.reserve(families.size());
    for (const auto& f : families) entries.push_back(construct_by_name(f));

    std::vector<Task> tasks;
    for (size_t e = 0; e < entries.size(); ++e) {
        if (max_dim > 0 && entries[e].algebra.dim() > max_dim) continue;
        for (const auto& d : deltas) tasks.push_back({families[e], static_cast<int>(e), d});
    }
    std::vector<std::string> rows(tasks.size());
    parallel_for(static_cast<int>(tasks.size()), jobs, [&](int i) {
        const Task& t = tasks[static_cast<size_t>(i)];
        const SuperAlgebra& a = entries[static_cast<size_t>(t.index_in_family)].algebra;
        DerivationSpace s = derivation_space(a, t.delta);
        SpaceAnalysis an = analyze_space(a, s);
        rows[static_cast<size_t>(i)] = t.family + "," + std::to_string(a.even_dim()) + "+" +
                                       std::to_string(a.odd_dim()) + "," + t.delta.str() + "," +
                                       std::to_string(s.dim()) + "," +
                                       (an.scalar_line ? "true" : "false") + "," +
                                       (an.grading_preserving ? "true" : "false");
    });
    std::string csv = "family,dims,delta,nullity,scalar_line,grading_ok\n";
    for (const auto& r : rows) csv += r + "\n";
    return csv;
}

}  // namespace superder
