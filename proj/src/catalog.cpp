#include "superder/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace superder {

// --- matrix scaffolding ------------------------------------------------------

MatrixElement MatrixElement::unit(int n, int r, int c) {
    MatrixElement m{n, n, {}};
    m.entries[{r, c}] = Rational(1);
    return m;
}

void MatrixElement::add(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::domain_error("matrix index out of range");
    if (v.is_zero()) return;
    auto it = entries.find({r, c});
    if (it == entries.end()) {
        entries.emplace(std::make_pair(r, c), v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) entries.erase(it);
}

MatrixElement operator*(const MatrixElement& a, const MatrixElement& b) {
    if (a.cols != b.rows) throw std::domain_error("matrix size mismatch");
    MatrixElement r{a.rows, b.cols, {}};
    for (const auto& [rc1, v1] : a.entries)
        for (const auto& [rc2, v2] : b.entries)
            if (rc1.second == rc2.first) r.add(rc1.first, rc2.second, v1 * v2);
    return r;
}

MatrixElement operator+(const MatrixElement& a, const MatrixElement& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::domain_error("matrix size mismatch");
    MatrixElement r = a;
    for (const auto& [rc, v] : b.entries) r.add(rc.first, rc.second, v);
    return r;
}

MatrixElement operator-(const MatrixElement& a, const MatrixElement& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::domain_error("matrix size mismatch");
    MatrixElement r = a;
    for (const auto& [rc, v] : b.entries) r.add(rc.first, rc.second, -v);
    return r;
}

MatrixElement matrix_superbracket(const MatrixElement& x, const MatrixElement& y, int px, int py) {
    if (x.rows != x.cols || y.rows != y.cols || x.rows != y.rows)
        throw std::domain_error("matrix size mismatch");
    MatrixElement r = x * y;
    const Rational sign((px && py) ? 1 : -1);
    for (const auto& [rc, v] : (y * x).entries) r.add(rc.first, rc.second, sign * v);
    return r;
}

namespace {

SparseVec flatten(const MatrixElement& m) {
    SparseVec v;
    v.reserve(m.entries.size());
    for (const auto& [rc, c] : m.entries) v.emplace_back(rc.first * m.cols + rc.second, c);
    return v;
}

// Echelon over [flattened matrix | basis coordinates]; expresses elements of
// the span exactly, reused across all bracket pairs of a construction.
class BasisSolver {
public:
    explicit BasisSolver(const std::vector<MatrixElement>& basis) {
        if (basis.empty()) throw std::domain_error("empty basis");
        flat_dim_ = basis[0].rows * basis[0].cols;
        for (size_t b = 0; b < basis.size(); ++b) {
            SparseVec row = flatten(basis[b]);
            row.emplace_back(flat_dim_ + static_cast<int>(b), Rational(1));
            ech_.insert(std::move(row));
        }
        for (int p : ech_.pivots())
            if (p >= flat_dim_) throw std::domain_error("basis is linearly dependent");
    }

    SparseVec express(const MatrixElement& x) const {
        SparseVec residual = ech_.reduce(flatten(x));
        SparseVec coords;
        for (const auto& [idx, c] : residual) {
            if (idx < flat_dim_) throw std::domain_error("bracket left the subalgebra");
            coords.emplace_back(idx - flat_dim_, -c);
        }
        return coords;
    }

private:
    int flat_dim_;
    Subspace ech_;
};

struct MatrixBasis {
    std::vector<MatrixElement> mats;
    std::vector<int> parity;
    std::vector<std::string> labels;
    std::vector<int> cartan;

    void push(MatrixElement m, int p, std::string label) {
        mats.push_back(std::move(m));
        parity.push_back(p);
        labels.push_back(std::move(label));
    }
};

CatalogEntry build_from_matrices(const std::string& name, const std::string& family,
                                 const MatrixBasis& basis) {
    BasisSolver solver(basis.mats);
    const int n = static_cast<int>(basis.mats.size());
    BracketTable table;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            MatrixElement mb =
                matrix_superbracket(basis.mats[static_cast<size_t>(i)], basis.mats[static_cast<size_t>(j)],
                                    basis.parity[static_cast<size_t>(i)], basis.parity[static_cast<size_t>(j)]);
            if (mb.is_zero()) continue;
            table.emplace(std::make_pair(i, j), solver.express(mb));
        }
    }
    AlgebraMeta meta;
    meta.family = family;
    meta.cartan = basis.cartan;
    for (int i = 0; i < n; ++i) meta.labels[basis.labels[static_cast<size_t>(i)]] = i;
    return {SuperAlgebra(name, basis.parity, std::move(table)), std::move(meta)};
}

// weight -> "e1-d1", "2d1", "-e1+e2-e3", ...
std::string weight_str(const std::vector<std::pair<std::string, int>>& terms) {
    std::string s;
    for (const auto& [sym, k] : terms) {
        if (k == 0) continue;
        if (s.empty())
            s += (k < 0) ? "-" : "";
        else
            s += (k < 0) ? "-" : "+";
        if (std::abs(k) != 1) s += std::to_string(std::abs(k));
        s += sym;
    }
    return s.empty() ? "0" : s;
}

std::string root_label(const std::vector<std::pair<std::string, int>>& terms) {
    return "g_{" + weight_str(terms) + "}";
}

}  // namespace

SparseVec express_in_basis(const MatrixElement& x, const std::vector<MatrixElement>& basis) {
    return BasisSolver(basis).express(x);
}

// --- family specs ------------------------------------------------------------

namespace {

int parse_int(const std::string& s) {
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::domain_error("invalid spec: bad integer '" + s + "'");
    }
    if (pos != s.size()) throw std::domain_error("invalid spec: bad integer '" + s + "'");
    return v;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= s.size())
        throw std::domain_error("invalid spec '" + s + "': expected FAMILY:ARGS");
    const std::string fam = s.substr(0, colon);
    const std::string args = s.substr(colon + 1);
    FamilySpec spec;
    if (fam == "A" || fam == "B" || fam == "D") {
        spec.family = (fam == "A") ? A : (fam == "B") ? B : D;
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            throw std::domain_error("invalid spec '" + s + "': expected two parameters m,n");
        spec.m = parse_int(args.substr(0, comma));
        spec.n = parse_int(args.substr(comma + 1));
    } else if (fam == "Aqq" || fam == "C" || fam == "P" || fam == "Q") {
        spec.family = (fam == "Aqq") ? Aqq : (fam == "C") ? C : (fam == "P") ? P : Q;
        spec.n = parse_int(args);
    } else if (fam == "D21") {
        spec.family = D21;
        spec.alpha = Rational::parse(args);
    } else {
        throw std::domain_error("invalid spec '" + s + "': unknown family '" + fam + "'");
    }
    spec.validate();
    return spec;
}

void FamilySpec::validate() const {
    switch (family) {
        case A:
            if (m < 0 || n < 0) throw std::domain_error("invalid spec: A(m,n) needs m,n >= 0");
            if (m == 0 && n == 0)
                throw std::domain_error(
                    "invalid spec A:0,0: sl(1,1) is three-dimensional and nilpotent, not classical");
            if (m == n)
                throw std::domain_error(
                    "invalid spec: A(n,n) is the quotient family; use Aqq:" + std::to_string(n));
            break;
        case Aqq:
            if (n < 1)
                throw std::domain_error(
                    "invalid spec: Aqq needs n >= 1 (Aqq:0 would be the nilpotent sl(1,1))");
            break;
        case B:
            if (m < 0 || n < 1) throw std::domain_error("invalid spec: B(m,n) needs m >= 0, n >= 1");
            break;
        case C:
            if (n < 2) throw std::domain_error("invalid spec: C(n) needs n >= 2");
            break;
        case D:
            if (m < 2 || n < 1) throw std::domain_error("invalid spec: D(m,n) needs m >= 2, n >= 1");
            break;
        case P:
            if (n < 2) throw std::domain_error("invalid spec: P(n) needs n >= 2");
            break;
        case Q:
            if (n < 2) throw std::domain_error("invalid spec: Q(n) needs n >= 2");
            break;
        case D21:
            if (alpha.is_zero() || alpha == Rational(-1))
                throw std::domain_error("invalid spec: D21 needs alpha outside {0, -1}");
            break;
    }
}

std::string FamilySpec::str() const {
    switch (family) {
        case A: return "A:" + std::to_string(m) + "," + std::to_string(n);
        case Aqq: return "Aqq:" + std::to_string(n);
        case B: return "B:" + std::to_string(m) + "," + std::to_string(n);
        case C: return "C:" + std::to_string(n);
        case D: return "D:" + std::to_string(m) + "," + std::to_string(n);
        case P: return "P:" + std::to_string(n);
        case Q: return "Q:" + std::to_string(n);
        case D21: return "D21:" + alpha.str();
    }
    return {};
}

std::string FamilySpec::display_name() const {
    switch (family) {
        case A: return "A(" + std::to_string(m) + "," + std::to_string(n) + ")";
        case Aqq: return "A(" + std::to_string(n) + "," + std::to_string(n) + ")";
        case B: return "B(" + std::to_string(m) + "," + std::to_string(n) + ")";
        case C: return "C(" + std::to_string(n) + ")";
        case D: return "D(" + std::to_string(m) + "," + std::to_string(n) + ")";
        case P: return "P(" + std::to_string(n) + ")";
        case Q: return "Q(" + std::to_string(n) + ")";
        case D21: return "D(2,1;" + alpha.str() + ")";
    }
    return {};
}

// --- sl(p,q) and the A families ----------------------------------------------

CatalogEntry make_sl(int p, int q) {
    if (p < 1 || q < 1) throw std::domain_error("sl(p,q) needs p,q >= 1");
    const int N = p + q;
    MatrixBasis basis;
    auto wsym = [&](int r) {
        return (r < p) ? "e" + std::to_string(r + 1) : "d" + std::to_string(r - p + 1);
    };
    // diagonal part, adjusted so that tr(A) = tr(D)
    for (int i = 0; i < N - 1; ++i) {
        MatrixElement h = MatrixElement::unit(N, i, i);
        h.add(N - 1, N - 1, Rational(i < p ? 1 : -1));
        basis.push(std::move(h), 0, "h" + std::to_string(i + 1));
        basis.cartan.push_back(i);
    }
    for (int r = 0; r < N; ++r) {
        for (int c = 0; c < N; ++c) {
            if (r == c) continue;
            const int parity = (r < p) != (c < p);
            basis.push(MatrixElement::unit(N, r, c), parity,
                       root_label({{wsym(r), 1}, {wsym(c), -1}}));
        }
    }
    return build_from_matrices("sl(" + std::to_string(p) + "," + std::to_string(q) + ")",
                               "sl:" + std::to_string(p) + "," + std::to_string(q), basis);
}

namespace {

CatalogEntry make_A(const FamilySpec& spec) {
    CatalogEntry e = make_sl(spec.m + 1, spec.n + 1);
    return {SuperAlgebra(spec.display_name(), e.algebra.parities(), e.algebra.table()),
            AlgebraMeta{spec.str(), e.meta.labels, e.meta.cartan}};
}

CatalogEntry quotient_entry(const CatalogEntry& ambient, const SparseVec& ideal_seed,
                            const FamilySpec& spec) {
    Subspace ideal;
    ideal.insert(ideal_seed);
    std::vector<int> old_of_new;
    SuperAlgebra qa = ambient.algebra.quotient(ideal, &old_of_new, spec.display_name());
    AlgebraMeta meta;
    meta.family = spec.str();
    std::vector<std::string> old_labels(static_cast<size_t>(ambient.algebra.dim()));
    for (const auto& [lbl, idx] : ambient.meta.labels) old_labels[static_cast<size_t>(idx)] = lbl;
    std::vector<int> new_of(static_cast<size_t>(ambient.algebra.dim()), -1);
    for (size_t k = 0; k < old_of_new.size(); ++k) {
        meta.labels[old_labels[static_cast<size_t>(old_of_new[k])]] = static_cast<int>(k);
        new_of[static_cast<size_t>(old_of_new[k])] = static_cast<int>(k);
    }
    for (int c : ambient.meta.cartan)
        if (new_of[static_cast<size_t>(c)] >= 0) meta.cartan.push_back(new_of[static_cast<size_t>(c)]);
    return {std::move(qa), std::move(meta)};
}

CatalogEntry make_Aqq(const FamilySpec& spec) {
    const int p = spec.n + 1;
    CatalogEntry ambient = make_sl(p, p);
    // E_{2n+2} = sum of all diagonal basis vectors
    SparseVec scalar;
    for (int i = 0; i < 2 * p - 1; ++i) scalar.emplace_back(i, Rational(1));
    return quotient_entry(ambient, scalar, spec);
}

// --- orthosymplectic families --------------------------------------------------
//
// Even bilinear form: split symmetric S on the orthogonal block
// ([[0,I_m],[I_m,0]], plus a trailing 1 when the block has odd size) and the
// standard antisymmetric J = [[0,I],[-I,0]] on the symplectic block. An odd
// element is determined by its upper-right block B via C = -J B^T S.
CatalogEntry make_osp(const FamilySpec& spec) {
    const int m = (spec.family == FamilySpec::C) ? 1 : spec.m;
    const int nsp = (spec.family == FamilySpec::C) ? spec.n - 1 : spec.n;
    const bool oddM = spec.family == FamilySpec::B;
    const int M = 2 * m + (oddM ? 1 : 0);
    const int N = M + 2 * nsp;
    const int z = 2 * m;  // valid only when oddM

    auto esym = [](int i) { return "e" + std::to_string(i + 1); };
    auto dsym = [](int j) { return "d" + std::to_string(j + 1); };
    // split-pair partner inside the orthogonal block
    auto sigma = [&](int r) { return (oddM && r == z) ? r : (r < m ? r + m : r - m); };
    auto row_weight = [&](int r) -> std::vector<std::pair<std::string, int>> {
        if (oddM && r == z) return {};
        return {{esym(r % m), r < m ? 1 : -1}};
    };

    MatrixBasis basis;
    for (int i = 0; i < m; ++i) {
        MatrixElement h = MatrixElement::unit(N, i, i);
        h.add(m + i, m + i, Rational(-1));
        basis.push(std::move(h), 0, "h" + std::to_string(i + 1));
        basis.cartan.push_back(static_cast<int>(basis.mats.size()) - 1);
    }
    for (int j = 0; j < nsp; ++j) {
        MatrixElement h = MatrixElement::unit(N, M + j, M + j);
        h.add(M + nsp + j, M + nsp + j, Rational(-1));
        basis.push(std::move(h), 0, "h" + std::to_string(m + j + 1));
        basis.cartan.push_back(static_cast<int>(basis.mats.size()) - 1);
    }
    // so(S): e_i - e_j
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            MatrixElement x = MatrixElement::unit(N, i, j);
            x.add(m + j, m + i, Rational(-1));
            basis.push(std::move(x), 0, root_label({{esym(i), 1}, {esym(j), -1}}));
        }
    // so(S): e_i + e_j and -(e_i + e_j), i < j
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            MatrixElement x = MatrixElement::unit(N, i, m + j);
            x.add(j, m + i, Rational(-1));
            basis.push(std::move(x), 0, root_label({{esym(i), 1}, {esym(j), 1}}));
            MatrixElement y = MatrixElement::unit(N, m + i, j);
            y.add(m + j, i, Rational(-1));
            basis.push(std::move(y), 0, root_label({{esym(i), -1}, {esym(j), -1}}));
        }
    // so(S), odd block size: +-e_i
    if (oddM)
        for (int i = 0; i < m; ++i) {
            MatrixElement x = MatrixElement::unit(N, i, z);
            x.add(z, m + i, Rational(-1));
            basis.push(std::move(x), 0, root_label({{esym(i), 1}}));
            MatrixElement y = MatrixElement::unit(N, m + i, z);
            y.add(z, i, Rational(-1));
            basis.push(std::move(y), 0, root_label({{esym(i), -1}}));
        }
    // sp(J): d_i - d_j
    for (int i = 0; i < nsp; ++i)
        for (int j = 0; j < nsp; ++j) {
            if (i == j) continue;
            MatrixElement x = MatrixElement::unit(N, M + i, M + j);
            x.add(M + nsp + j, M + nsp + i, Rational(-1));
            basis.push(std::move(x), 0, root_label({{dsym(i), 1}, {dsym(j), -1}}));
        }
    // sp(J): d_i + d_j (i < j), 2 d_i, and negatives
    for (int i = 0; i < nsp; ++i)
        for (int j = i + 1; j < nsp; ++j) {
            MatrixElement x = MatrixElement::unit(N, M + i, M + nsp + j);
            x.add(M + j, M + nsp + i, Rational(1));
            basis.push(std::move(x), 0, root_label({{dsym(i), 1}, {dsym(j), 1}}));
        }
    for (int i = 0; i < nsp; ++i)
        basis.push(MatrixElement::unit(N, M + i, M + nsp + i), 0, root_label({{dsym(i), 2}}));
    for (int i = 0; i < nsp; ++i)
        for (int j = i + 1; j < nsp; ++j) {
            MatrixElement x = MatrixElement::unit(N, M + nsp + i, M + j);
            x.add(M + nsp + j, M + i, Rational(1));
            basis.push(std::move(x), 0, root_label({{dsym(i), -1}, {dsym(j), -1}}));
        }
    for (int i = 0; i < nsp; ++i)
        basis.push(MatrixElement::unit(N, M + nsp + i, M + i), 0, root_label({{dsym(i), -2}}));
    // odd part: B = e_{r,c} with C = -J B^T S
    for (int r = 0; r < M; ++r) {
        for (int j = 0; j < nsp; ++j) {
            MatrixElement x = MatrixElement::unit(N, r, M + j);
            x.add(M + nsp + j, sigma(r), Rational(1));
            auto w = row_weight(r);
            w.emplace_back(dsym(j), -1);
            basis.push(std::move(x), 1, root_label(w));
        }
        for (int j = 0; j < nsp; ++j) {
            MatrixElement x = MatrixElement::unit(N, r, M + nsp + j);
            x.add(M + j, sigma(r), Rational(-1));
            auto w = row_weight(r);
            w.emplace_back(dsym(j), 1);
            basis.push(std::move(x), 1, root_label(w));
        }
    }
    // block grading: orthogonal rows/cols even, symplectic even; crossing odd
    return build_from_matrices(spec.display_name(), spec.str(), basis);
}

// --- P(n) and Q(n) -------------------------------------------------------------

CatalogEntry make_P(const FamilySpec& spec) {
    const int n = spec.n;
    const int p = n + 1;
    const int N = 2 * p;
    MatrixBasis basis;
    auto lbl = [](const char* base, int i, int j) {
        return std::string(base) + "_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
    };
    for (int i = 0; i < n; ++i) {
        MatrixElement h = MatrixElement::unit(N, i, i);
        h.add(i + 1, i + 1, Rational(-1));
        h.add(p + i, p + i, Rational(-1));
        h.add(p + i + 1, p + i + 1, Rational(1));
        basis.push(std::move(h), 0, "h" + std::to_string(i + 1));
        basis.cartan.push_back(i);
    }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            if (i == j) continue;
            MatrixElement x = MatrixElement::unit(N, i, j);
            x.add(p + j, p + i, Rational(-1));
            basis.push(std::move(x), 0, lbl("a", i, j));
        }
    for (int i = 0; i < p; ++i)
        for (int j = i; j < p; ++j) {
            MatrixElement x = MatrixElement::unit(N, i, p + j);
            x.add(j, p + i, Rational(1));
            basis.push(std::move(x), 1, lbl("b", i, j));
        }
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            MatrixElement x = MatrixElement::unit(N, p + i, j);
            x.add(p + j, i, Rational(-1));
            basis.push(std::move(x), 1, lbl("c", i, j));
        }
    return build_from_matrices(spec.display_name(), spec.str(), basis);
}

CatalogEntry make_Q(const FamilySpec& spec) {
    const int n = spec.n;
    const int p = n + 1;
    const int N = 2 * p;
    MatrixBasis basis;
    auto lbl = [](const char* base, int i, int j) {
        return std::string(base) + "_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
    };
    for (int i = 0; i < p; ++i) {
        MatrixElement x = MatrixElement::unit(N, i, i);
        x.add(p + i, p + i, Rational(1));
        basis.push(std::move(x), 0, lbl("a", i, i));
        basis.cartan.push_back(i);
    }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            if (i == j) continue;
            MatrixElement x = MatrixElement::unit(N, i, j);
            x.add(p + i, p + j, Rational(1));
            basis.push(std::move(x), 0, lbl("a", i, j));
        }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            if (i == j) continue;
            MatrixElement x = MatrixElement::unit(N, i, p + j);
            x.add(p + i, j, Rational(1));
            basis.push(std::move(x), 1, lbl("b", i, j));
        }
    for (int i = 0; i < n; ++i) {
        MatrixElement x = MatrixElement::unit(N, i, p + i);
        x.add(p + i, i, Rational(1));
        x.add(i + 1, p + i + 1, Rational(-1));
        x.add(p + i + 1, i + 1, Rational(-1));
        basis.push(std::move(x), 1, lbl("c", i, i + 1));
    }
    CatalogEntry ambient =
        build_from_matrices("Qtilde(" + std::to_string(n) + ")", spec.str(), basis);
    // the scalar matrix E = sum of the diagonal a_{i,i}
    SparseVec scalar;
    for (int i = 0; i < p; ++i) scalar.emplace_back(i, Rational(1));
    return quotient_entry(ambient, scalar, spec);
}

// --- D(2,1;alpha) ---------------------------------------------------------------
//
// Even part: three copies of sl2 with bases (h_i, e_i, f_i); odd part: the
// eight tensors x^{s_1} (x) x^{s_2} (x) x^{s_3}. Odd-odd brackets contract two
// factors with the symplectic pairing and symmetrize the third, with weights
// sigma = (1, alpha, -1-alpha); the super Jacobi identity holds exactly when
// sigma_1 + sigma_2 + sigma_3 = 0 (checked exhaustively by the test suite).
CatalogEntry make_D21(const FamilySpec& spec) {
    const Rational sigma[3] = {Rational(1), spec.alpha, Rational(-1) - spec.alpha};
    const int n = 17;
    std::vector<int> parity(n, 0);
    for (int s = 0; s < 8; ++s) parity[static_cast<size_t>(9 + s)] = 1;
    auto h = [](int i) { return 3 * i; };
    auto e = [](int i) { return 3 * i + 1; };
    auto f = [](int i) { return 3 * i + 2; };
    auto odd = [](int s) { return 9 + s; };
    auto sbit = [](int s, int i) { return (s >> (2 - i)) & 1; };  // 0 = '+', 1 = '-'
    auto flip = [](int s, int i) { return s ^ (1 << (2 - i)); };

    BracketTable table;
    auto put = [&table](int i, int j, SparseVec v) {
        std::sort(v.begin(), v.end());
        if (!v.empty()) table.emplace(std::make_pair(i, j), std::move(v));
    };
    for (int i = 0; i < 3; ++i) {
        put(h(i), e(i), {{e(i), Rational(2)}});
        put(h(i), f(i), {{f(i), Rational(-2)}});
        put(e(i), f(i), {{h(i), Rational(1)}});
    }
    for (int s = 0; s < 8; ++s) {
        for (int i = 0; i < 3; ++i) {
            put(h(i), odd(s), {{odd(s), Rational(sbit(s, i) ? -1 : 1)}});
            if (sbit(s, i) == 1) put(e(i), odd(s), {{odd(flip(s, i)), Rational(1)}});
            if (sbit(s, i) == 0) put(f(i), odd(s), {{odd(flip(s, i)), Rational(1)}});
        }
    }
    // psi(+,-) = 1, psi(-,+) = -1; p(+,+) = 2e, p(-,-) = -2f, p(+,-) = p(-,+) = -h
    auto psi = [&](int a, int b) -> int { return (a == b) ? 0 : (a == 0 ? 1 : -1); };
    for (int s = 0; s < 8; ++s) {
        for (int t = s; t < 8; ++t) {
            SparseVec acc;
            for (int i = 0; i < 3; ++i) {
                int c = 1;
                bool zero = false;
                for (int j = 0; j < 3; ++j) {
                    if (j == i) continue;
                    const int ps = psi(sbit(s, j), sbit(t, j));
                    if (ps == 0) zero = true;
                    c *= ps;
                }
                if (zero) continue;
                const int si = sbit(s, i), ti = sbit(t, i);
                const Rational w = sigma[i] * Rational(c);
                if (si == 0 && ti == 0)
                    acc = sv_axpy(acc, w * Rational(2), sv_unit(e(i)));
                else if (si == 1 && ti == 1)
                    acc = sv_axpy(acc, w * Rational(-2), sv_unit(f(i)));
                else
                    acc = sv_axpy(acc, -w, sv_unit(h(i)));
            }
            put(odd(s), odd(t), std::move(acc));
        }
    }

    AlgebraMeta meta;
    meta.family = spec.str();
    meta.cartan = {h(0), h(1), h(2)};
    for (int i = 0; i < 3; ++i) {
        const std::string ei = "e" + std::to_string(i + 1);
        meta.labels["h" + std::to_string(i + 1)] = h(i);
        meta.labels[root_label({{ei, 2}})] = e(i);
        meta.labels[root_label({{ei, -2}})] = f(i);
    }
    for (int s = 0; s < 8; ++s) {
        std::vector<std::pair<std::string, int>> w;
        for (int i = 0; i < 3; ++i) w.emplace_back("e" + std::to_string(i + 1), sbit(s, i) ? -1 : 1);
        meta.labels[root_label(w)] = odd(s);
    }
    return {SuperAlgebra(spec.display_name(), parity, std::move(table)), std::move(meta)};
}

}  // namespace

CatalogEntry construct(const FamilySpec& spec) {
    spec.validate();
    switch (spec.family) {
        case FamilySpec::A: return make_A(spec);
        case FamilySpec::Aqq: return make_Aqq(spec);
        case FamilySpec::B:
        case FamilySpec::C:
        case FamilySpec::D: return make_osp(spec);
        case FamilySpec::P: return make_P(spec);
        case FamilySpec::Q: return make_Q(spec);
        case FamilySpec::D21: return make_D21(spec);
    }
    throw std::domain_error("invalid spec");
}

CatalogEntry make_sl2() {
    BracketTable table;
    table.emplace(std::make_pair(0, 1), SparseVec{{1, Rational(2)}});
    table.emplace(std::make_pair(0, 2), SparseVec{{2, Rational(-2)}});
    table.emplace(std::make_pair(1, 2), SparseVec{{0, Rational(1)}});
    AlgebraMeta meta;
    meta.family = "sl2";
    meta.cartan = {0};
    meta.labels = {{"h", 0}, {"e", 1}, {"f", 2}};
    return {SuperAlgebra("sl2", {0, 0, 0}, std::move(table)), std::move(meta)};
}

CatalogEntry construct_by_name(const std::string& spec) {
    if (spec == "sl2") return make_sl2();
    return construct(FamilySpec::parse(spec));
}

}  // namespace superder
