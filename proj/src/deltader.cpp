#include "superder/deltader.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace superder {

namespace {

// Structure-constant tensor reindexed for row assembly:
//   left[j][k]  = { (l, [e_l,e_j]_k) },  right[i][k] = { (l, [e_i,e_l]_k) }.
struct SystemTensors {
    int n;
    std::vector<std::vector<std::pair<int, Rational>>> left, right;

    explicit SystemTensors(const SuperAlgebra& a) : n(a.dim()) {
        left.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
        right.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (const auto& [k, c] : a.bracket_basis(i, j)) {
                    left[static_cast<size_t>(j) * static_cast<size_t>(n) + static_cast<size_t>(k)]
                        .emplace_back(i, c);
                    right[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(k)]
                        .emplace_back(j, c);
                }
            }
        }
    }
};

// One row as (column -> constant part, delta part).
using RawRow = std::map<int, std::pair<Rational, Rational>>;

// Rows for pair (i, j), output coordinate k; the delta part carries the
// -([phi(e_i),e_j] + [e_i,phi(e_j)]) contribution.
RawRow raw_row(const SuperAlgebra& a, const SystemTensors& t, int i, int j, int k) {
    RawRow row;
    const int n = t.n;
    for (const auto& [l, c] : a.bracket_basis(i, j)) row[k * n + l].first += c;
    for (const auto& [l, c] : t.left[static_cast<size_t>(j) * static_cast<size_t>(n) + static_cast<size_t>(k)])
        row[l * n + i].second -= c;
    for (const auto& [l, c] : t.right[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(k)])
        row[l * n + j].second -= c;
    return row;
}

// The (j,i) equation is a scalar multiple of (i,j) only for even-even pairs;
// pairs touching the odd part contribute both orientations.
std::vector<std::pair<int, int>> equation_pairs(const SuperAlgebra& a) {
    std::vector<std::pair<int, int>> pairs;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            pairs.emplace_back(i, j);
            if (i < j && (a.parity(i) != 0 || a.parity(j) != 0)) pairs.emplace_back(j, i);
        }
    return pairs;
}

template <typename Fn>
void for_each_row(const SuperAlgebra& a, const SystemTensors& t, Fn&& fn) {
    const int n = a.dim();
    for (const auto& [i, j] : equation_pairs(a))
        for (int k = 0; k < n; ++k) {
            RawRow row = raw_row(a, t, i, j, k);
            if (!row.empty()) fn(row);
        }
}

// Echelon (leading coefficient 1) without back-substitution; columns are
// compared through a fixed order transform.
class RowEchelon {
public:
    explicit RowEchelon(int ncols, ElimOrder order) : ncols_(ncols), order_(order) {}

    int tf(int col) const { return order_ == ElimOrder::Forward ? col : ncols_ - 1 - col; }

    bool insert(SparseVec v) {
        size_t k = 0;
        while (k < v.size()) {
            auto it = rows_.find(v[k].first);
            if (it == rows_.end()) {
                ++k;
                continue;
            }
            v = sv_axpy(v, -v[k].second, it->second);
        }
        if (v.empty()) return false;
        v = sv_scale(v, v.front().second.inverse());
        rows_.emplace(v.front().first, std::move(v));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

    /// Nullspace basis as dense vectors over the natural column order.
    std::vector<std::vector<Rational>> nullspace() const {
        std::vector<std::vector<Rational>> out;
        std::vector<Rational> vt(static_cast<size_t>(ncols_));
        for (int f = 0; f < ncols_; ++f) {
            if (rows_.count(f)) continue;  // pivot column
            std::fill(vt.begin(), vt.end(), Rational(0));
            vt[static_cast<size_t>(f)] = Rational(1);
            for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
                const int p = it->first;
                if (p > f) continue;  // columns beyond f are all zero in vt
                Rational acc(0);
                for (const auto& [c, coef] : it->second)
                    if (c != p && !vt[static_cast<size_t>(c)].is_zero())
                        acc += coef * vt[static_cast<size_t>(c)];
                vt[static_cast<size_t>(p)] = -acc;
            }
            std::vector<Rational> v(static_cast<size_t>(ncols_), Rational(0));
            for (int c = 0; c < ncols_; ++c) v[static_cast<size_t>(tf(c))] = vt[static_cast<size_t>(c)];
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    int ncols_;
    ElimOrder order_;
    std::map<int, SparseVec> rows_;  // keyed by transformed pivot column
};

SparseVec raw_to_sparse(const RawRow& row, const Rational& delta) {
    SparseVec v;
    for (const auto& [col, parts] : row) {
        Rational val = parts.first + delta * parts.second;
        if (!val.is_zero()) v.emplace_back(col, std::move(val));
    }
    return v;
}

void verify_solution(const SuperAlgebra& a, const Rational& delta,
                     const std::vector<Rational>& flat) {
    const int n = a.dim();
    auto column = [&](int j) {
        SparseVec col;
        for (int k = 0; k < n; ++k) {
            const Rational& c = flat[static_cast<size_t>(k * n + j)];
            if (!c.is_zero()) col.emplace_back(k, c);
        }
        return col;
    };
    std::vector<SparseVec> cols(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) cols[static_cast<size_t>(j)] = column(j);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            SparseVec lhs;
            for (const auto& [l, c] : a.bracket_basis(i, j))
                lhs = sv_axpy(lhs, c, cols[static_cast<size_t>(l)]);
            SparseVec rhs = a.bracket(cols[static_cast<size_t>(i)], sv_unit(j));
            rhs = sv_axpy(rhs, Rational(1), a.bracket(sv_unit(i), cols[static_cast<size_t>(j)]));
            lhs = sv_axpy(lhs, -delta, rhs);
            if (!sv_is_zero(lhs))
                throw std::logic_error("derivation_space produced a map violating the defining identity");
        }
    }
}

}  // namespace

std::vector<SparseVec> assemble_system(const SuperAlgebra& a, const Rational& delta) {
    SystemTensors t(a);
    std::vector<SparseVec> rows;
    for_each_row(a, t, [&](const RawRow& raw) {
        SparseVec v = raw_to_sparse(raw, delta);
        if (!v.empty()) rows.push_back(std::move(v));
    });
    return rows;
}

std::vector<PolyRow> assemble_system_symbolic(const SuperAlgebra& a) {
    SystemTensors t(a);
    std::vector<PolyRow> rows;
    for_each_row(a, t, [&](const RawRow& raw) {
        Integer lcm = 1;
        for (const auto& [col, parts] : raw) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), parts.first.den().get_mpz_t());
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), parts.second.den().get_mpz_t());
        }
        PolyRow row;
        Integer content = 0;
        for (const auto& [col, parts] : raw) {
            Integer c0 = parts.first.num() * (lcm / parts.first.den());
            Integer c1 = parts.second.num() * (lcm / parts.second.den());
            IntPolynomial p({c0, c1});
            if (p.is_zero()) continue;
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), p.content().get_mpz_t());
            row.emplace_back(col, std::move(p));
        }
        if (row.empty()) return;
        if (content > 1)
            for (auto& [col, p] : row) {
                std::vector<Integer> cs;
                for (const auto& c : p.coeffs()) cs.push_back(c / content);
                p = IntPolynomial(std::move(cs));
            }
        rows.push_back(std::move(row));
    });
    return rows;
}

DerivationSpace derivation_space(const SuperAlgebra& a, const Rational& delta, ElimOrder order) {
    const int n = a.dim();
    const int ncols = n * n;
    SystemTensors tensors(a);
    RowEchelon ech(ncols, order);
    bool full = false;
    for (const auto& [i, j] : equation_pairs(a)) {
        if (full) break;
        for (int k = 0; k < n; ++k) {
            RawRow raw = raw_row(a, tensors, i, j, k);
            if (raw.empty()) continue;
            SparseVec v = raw_to_sparse(raw, delta);
            if (v.empty()) continue;
            if (order == ElimOrder::Reversed) {
                SparseVec w;
                w.reserve(v.size());
                for (auto it = v.rbegin(); it != v.rend(); ++it)
                    w.emplace_back(ech.tf(it->first), it->second);
                v = std::move(w);
            }
            ech.insert(std::move(v));
            if (ech.rank() == ncols) {
                full = true;
                break;
            }
        }
    }

    DerivationSpace space;
    space.delta = delta;
    space.algebra_name = a.name();
    if (!full) {
        // canonical reduced echelon basis in the natural column order
        Subspace canon;
        for (auto& v : ech.nullspace()) {
            SparseVec sv;
            for (int c = 0; c < ncols; ++c)
                if (!v[static_cast<size_t>(c)].is_zero()) sv.emplace_back(c, v[static_cast<size_t>(c)]);
            canon.insert(std::move(sv));
        }
        for (const auto& row : canon.rows()) {
            std::vector<Rational> dense(static_cast<size_t>(ncols), Rational(0));
            for (const auto& [c, coef] : row) dense[static_cast<size_t>(c)] = coef;
            verify_solution(a, delta, dense);
            space.basis.push_back(std::move(dense));
        }
    }
    return space;
}

SpaceAnalysis analyze_space(const SuperAlgebra& a, const DerivationSpace& s) {
    const int n = a.dim();
    SpaceAnalysis out;
    for (const auto& flat : s.basis) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            for (int k = 0; k < n; ++k)
                if (!flat[static_cast<size_t>(k * n + j)].is_zero() && a.parity(k) != a.parity(j)) {
                    ok = false;
                    break;
                }
        out.per_map_grading.push_back(ok);
        out.grading_preserving = out.grading_preserving && ok;
    }
    if (s.dim() == 1) {
        const auto& flat = s.basis[0];
        Rational scale(0);
        bool scalar = true;
        for (int k = 0; k < n && scalar; ++k)
            for (int l = 0; l < n; ++l) {
                const Rational& v = flat[static_cast<size_t>(k * n + l)];
                if (k == l) {
                    if (scale.is_zero())
                        scale = v;
                    else if (v != scale)
                        scalar = false;
                } else if (!v.is_zero()) {
                    scalar = false;
                    break;
                }
            }
        out.scalar_line = scalar && !scale.is_zero();
    }
    if (s.delta == Rational(1)) {
        Subspace inner;
        Subspace space_ech;
        Subspace joint;
        for (const auto& flat : s.basis) {
            SparseVec sv;
            for (size_t c = 0; c < flat.size(); ++c)
                if (!flat[c].is_zero()) sv.emplace_back(static_cast<int>(c), flat[c]);
            space_ech.insert(sv);
            joint.insert(sv);
        }
        out.inner_contained = true;
        for (int i = 0; i < n; ++i) {
            SparseVec ad;
            for (int j = 0; j < n; ++j)
                for (const auto& [k, c] : a.bracket_basis(i, j)) ad.emplace_back(k * n + j, c);
            std::sort(ad.begin(), ad.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            if (!space_ech.contains(ad)) out.inner_contained = false;
            inner.insert(ad);
            joint.insert(std::move(ad));
        }
        out.inner_dim = inner.dim();
        out.outer_dim = s.dim() - (inner.dim() + s.dim() - joint.dim());
    }
    return out;
}

namespace {

struct ElimResult {
    std::vector<IntPolynomial> pivots;    // one per elimination step, primitive
    std::vector<IntPolynomial> contents;  // stripped positive-degree row contents
};

// Fraction-free elimination over Z[t] with per-row content stripping. Any
// specialization that keeps every pivot (and every stripped content) nonzero
// has the generic rank, so their roots are the complete candidate set.
ElimResult symbolic_eliminate(std::vector<PolyRow> active, bool reversed_cols) {
    ElimResult out;

    auto strip_row = [&](PolyRow& row) {
        Integer content = 0;
        for (const auto& [c, p] : row)
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), p.content().get_mpz_t());
        if (content > 1)
            for (auto& [c, p] : row) {
                std::vector<Integer> cs;
                for (const auto& x : p.coeffs()) cs.push_back(x / content);
                p = IntPolynomial(std::move(cs));
            }
        // a positive-degree content vanishes somewhere: dividing it out can
        // inflate the specialized rank at its roots, so it joins the candidates
        IntPolynomial g;
        for (const auto& [c, p] : row) {
            g = poly_gcd(g, p);
            if (g.degree() == 0) break;
        }
        if (g.degree() >= 1) {
            for (auto& [c, p] : row) p = p.divide_exact(g);
            out.contents.push_back(g);
        }
    };

    while (true) {
        // pivot choice: lowest degree, then sparsest row, then column order
        int best_row = -1, best_col = -1;
        long best_key = 0;
        int best_deg = 0;
        size_t best_nnz = 0;
        for (size_t r = 0; r < active.size(); ++r) {
            for (const auto& [col, p] : active[r]) {
                const int deg = p.degree();
                const long key = reversed_cols ? -static_cast<long>(col) : col;
                const bool better =
                    best_row < 0 || deg < best_deg ||
                    (deg == best_deg &&
                     (active[r].size() < best_nnz || (active[r].size() == best_nnz && key < best_key)));
                if (better) {
                    best_row = static_cast<int>(r);
                    best_col = col;
                    best_key = key;
                    best_deg = deg;
                    best_nnz = active[r].size();
                }
            }
        }
        if (best_row < 0) break;
        PolyRow piv = std::move(active[static_cast<size_t>(best_row)]);
        active.erase(active.begin() + best_row);
        IntPolynomial piv_poly;
        for (const auto& [c, p] : piv)
            if (c == best_col) piv_poly = p;
        out.pivots.push_back(piv_poly.primitive_part());

        std::vector<PolyRow> next;
        next.reserve(active.size());
        for (auto& row : active) {
            IntPolynomial e;
            for (const auto& [c, p] : row)
                if (c == best_col) {
                    e = p;
                    break;
                }
            if (e.is_zero()) {
                next.push_back(std::move(row));
                continue;
            }
            // fraction-free update: piv_poly * row - e * piv
            std::map<int, IntPolynomial> acc;
            for (const auto& [c, p] : row) acc[c] = p * piv_poly;
            for (const auto& [c, p] : piv) {
                auto it = acc.find(c);
                if (it == acc.end()) {
                    IntPolynomial q = -(p * e);
                    if (!q.is_zero()) acc[c] = std::move(q);
                } else {
                    it->second = it->second - p * e;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
            acc.erase(best_col);
            if (acc.empty()) continue;
            PolyRow updated(acc.begin(), acc.end());
            strip_row(updated);
            if (!updated.empty()) next.push_back(std::move(updated));
        }
        active = std::move(next);
    }
    return out;
}

std::vector<IntPolynomial> candidate_pool(const ElimResult& e) {
    std::vector<IntPolynomial> pool = e.pivots;
    pool.insert(pool.end(), e.contents.begin(), e.contents.end());
    return pool;
}

}  // namespace

CriticalReport critical_deltas(const SuperAlgebra& a, std::uint64_t seed) {
    const int n = a.dim();
    const int ncols = n * n;
    CriticalReport report;
    report.probes.seed = seed;

    const std::vector<PolyRow> rows = assemble_system_symbolic(a);
    const ElimResult pass1 = symbolic_eliminate(rows, false);
    const ElimResult pass2 = symbolic_eliminate(rows, true);
    if (pass1.pivots.size() != pass2.pivots.size())
        throw std::logic_error("elimination passes disagree on the generic rank");

    report.generic_rank = static_cast<int>(pass1.pivots.size());
    report.degenerate = report.generic_rank == 0;
    const int generic_nullity = ncols - report.generic_rank;

    const std::vector<IntPolynomial> pool = candidate_pool(pass1);
    const std::vector<IntPolynomial> pool2 = candidate_pool(pass2);

    // candidate critical values: rational roots of every pivot polynomial and
    // of every stripped polynomial content; each confirmed pointwise
    std::set<Rational> candidates;
    for (const auto& p : pool) {
        if (p.degree() < 1) continue;
        for (const auto& r : rational_roots(p)) candidates.insert(r);
    }
    for (const auto& cand : candidates) {
        const int nullity = derivation_space(a, cand).dim();
        if (nullity > generic_nullity) report.critical.push_back({cand, nullity});
    }

    // residual factors with no rational roots (degree >= 2), squarefree-reduced;
    // a rank drop must annihilate a pivot in *every* elimination order, so a
    // residual sharing no root with the second pass is an artifact and is
    // discarded (pure gcd reasoning, no algebraic numbers)
    std::set<IntPolynomial> residuals;
    for (const auto& p : pool) {
        if (p.degree() < 2) continue;
        IntPolynomial q = p.primitive_part();
        for (const auto& root : rational_roots(q)) {
            IntPolynomial lin({-root.num(), root.den()});
            while (true) {
                try {
                    IntPolynomial divided = q.divide_exact(lin);
                    q = std::move(divided);
                } catch (const std::domain_error&) {
                    break;
                }
            }
            q = q.primitive_part();
        }
        if (q.degree() < 2) continue;
        q = squarefree_part(q);
        bool shared = false;
        for (const auto& p2 : pool2)
            if (!p2.is_zero() && poly_gcd(q, p2).degree() >= 1) {
                shared = true;
                break;
            }
        if (shared) residuals.insert(q);
    }
    report.unresolved_factors.assign(residuals.begin(), residuals.end());

    // pointwise consistency probes at seeded random non-root deltas
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num_dist(-99, 99);
    std::uniform_int_distribution<long> den_dist(1, 20);
    auto is_pivot_root = [&](const Rational& r) {
        for (const auto& p : pool)
            if (p.degree() >= 1 && p.eval(r).is_zero()) return true;
        return false;
    };
    for (int k = 0; k < 5; ++k) {
        Rational probe(0);
        for (int attempts = 0; attempts < 1000; ++attempts) {
            probe = Rational(num_dist(rng), den_dist(rng));
            if (!is_pivot_root(probe)) break;
        }
        report.probes.deltas.push_back(probe);
        if (derivation_space(a, probe).dim() != generic_nullity) report.probes.ok = false;
    }
    return report;
}

nlohmann::ordered_json derive_report(const SuperAlgebra& a, const DerivationSpace& s) {
    SpaceAnalysis an = analyze_space(a, s);
    nlohmann::ordered_json j;
    j["delta"] = s.delta.str();
    j["nullity"] = s.dim();
    auto basis = nlohmann::ordered_json::array();
    for (const auto& flat : s.basis) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& c : flat) row.push_back(c.str());
        basis.push_back(std::move(row));
    }
    j["basis"] = std::move(basis);
    nlohmann::ordered_json analysis;
    analysis["grading_preserving"] = an.grading_preserving;
    analysis["scalar_line"] = an.scalar_line;
    if (s.delta == Rational(1))
        analysis["inner_dim"] = an.inner_dim;
    else
        analysis["inner_dim"] = nullptr;
    j["analysis"] = std::move(analysis);
    return j;
}

nlohmann::ordered_json scan_report(const CriticalReport& r) {
    nlohmann::ordered_json j;
    j["generic_rank"] = r.generic_rank;
    j["degenerate"] = r.degenerate;
    auto crit = nlohmann::ordered_json::array();
    for (const auto& c : r.critical) {
        nlohmann::ordered_json e;
        e["delta"] = c.delta.str();
        e["nullity"] = c.nullity;
        crit.push_back(std::move(e));
    }
    j["critical"] = std::move(crit);
    auto factors = nlohmann::ordered_json::array();
    for (const auto& p : r.unresolved_factors) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
        factors.push_back(std::move(arr));
    }
    j["unresolved_factors"] = std::move(factors);
    nlohmann::ordered_json probes;
    probes["seed"] = r.probes.seed;
    auto deltas = nlohmann::ordered_json::array();
    for (const auto& d : r.probes.deltas) deltas.push_back(d.str());
    probes["deltas"] = std::move(deltas);
    probes["ok"] = r.probes.ok;
    j["probes"] = std::move(probes);
    return j;
}

}  // namespace superder
