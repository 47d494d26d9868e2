#include "superder/element.hpp"

namespace superder {

SparseVec sv_unit(int idx) { return {{idx, Rational(1)}}; }

Rational sv_get(const SparseVec& v, int idx) {
    for (const auto& [i, c] : v)
        if (i == idx) return c;
    return Rational(0);
}

SparseVec sv_axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
    if (c.is_zero()) return a;
    SparseVec r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            Rational s = a[i].second + c * b[j].second;
            if (!s.is_zero()) r.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return r;
}

SparseVec sv_scale(const SparseVec& v, const Rational& c) {
    if (c.is_zero()) return {};
    SparseVec r;
    r.reserve(v.size());
    for (const auto& [i, x] : v) r.emplace_back(i, c * x);
    return r;
}

bool sv_is_zero(const SparseVec& v) { return v.empty(); }

SparseVec Subspace::reduce(SparseVec v) const {
    size_t k = 0;
    while (k < v.size()) {
        auto it = rows_.find(v[k].first);
        if (it == rows_.end()) {
            ++k;  // pivotless column stays
            continue;
        }
        v = sv_axpy(v, -v[k].second, it->second);
        // entries before k are pivotless and untouched by a reduced row
    }
    return v;
}

bool Subspace::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const int pivot = v.front().first;
    v = sv_scale(v, v.front().second.inverse());
    for (auto& [p, row] : rows_) {
        Rational c = sv_get(row, pivot);
        if (!c.is_zero()) row = sv_axpy(row, -c, v);
    }
    rows_.emplace(pivot, std::move(v));
    return true;
}

std::vector<SparseVec> Subspace::rows() const {
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (const auto& [p, r] : rows_) out.push_back(r);
    return out;
}

std::vector<int> Subspace::pivots() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& [p, r] : rows_) out.push_back(p);
    return out;
}

}  // namespace superder
