#include "hopfcalc/sparse.hpp"

#include <algorithm>
#include <map>

namespace hopf {

SparseTensor3 SparseTensor3::from_entries(int d1, int d2, int d3,
                                          std::vector<Entry> entries) {
    SparseTensor3 t(d1, d2, d3);
    std::map<std::tuple<int, int, int>, Scalar> acc;
    for (auto& e : entries) {
        if (e.i < 0 || e.i >= d1 || e.j < 0 || e.j >= d2 || e.k < 0 || e.k >= d3)
            throw Error("SparseTensor3: index (" + std::to_string(e.i) + "," +
                        std::to_string(e.j) + "," + std::to_string(e.k) + ") out of range");
        auto it = acc.find({e.i, e.j, e.k});
        if (it == acc.end())
            acc.emplace(std::make_tuple(e.i, e.j, e.k), e.c);
        else
            it->second += e.c;
    }
    for (auto& [idx, c] : acc)
        if (!c.is_zero())
            t.e_.push_back(Entry{std::get<0>(idx), std::get<1>(idx), std::get<2>(idx), c});
    return t;
}

void SparseTensor3::for_first(int i, const std::function<void(int, int, const Scalar&)>& fn) const {
    auto lo = std::lower_bound(e_.begin(), e_.end(), i,
                               [](const Entry& e, int v) { return e.i < v; });
    for (auto it = lo; it != e_.end() && it->i == i; ++it) fn(it->j, it->k, it->c);
}

void SparseTensor3::for_first_two(int i, int j,
                                  const std::function<void(int, const Scalar&)>& fn) const {
    auto lo = std::lower_bound(e_.begin(), e_.end(), std::make_pair(i, j),
                               [](const Entry& e, const std::pair<int, int>& v) {
                                   return std::tie(e.i, e.j) < std::tie(v.first, v.second);
                               });
    for (auto it = lo; it != e_.end() && it->i == i && it->j == j; ++it) fn(it->k, it->c);
}

SparseTensor3 SparseTensor3::swap12() const {
    std::vector<Entry> es;
    es.reserve(e_.size());
    for (const auto& e : e_) es.push_back(Entry{e.j, e.i, e.k, e.c});
    return from_entries(d2_, d1_, d3_, std::move(es));
}

SparseTensor3 SparseTensor3::swap23() const {
    std::vector<Entry> es;
    es.reserve(e_.size());
    for (const auto& e : e_) es.push_back(Entry{e.i, e.k, e.j, e.c});
    return from_entries(d1_, d3_, d2_, std::move(es));
}

SparseTensor3 SparseTensor3::rotate() const {
    std::vector<Entry> es;
    es.reserve(e_.size());
    for (const auto& e : e_) es.push_back(Entry{e.k, e.i, e.j, e.c});
    return from_entries(d3_, d1_, d2_, std::move(es));
}

bool operator==(const SparseTensor3& a, const SparseTensor3& b) {
    if (a.d1_ != b.d1_ || a.d2_ != b.d2_ || a.d3_ != b.d3_) return false;
    if (a.e_.size() != b.e_.size()) return false;
    for (std::size_t n = 0; n < a.e_.size(); ++n) {
        const auto& x = a.e_[n];
        const auto& y = b.e_[n];
        if (x.i != y.i || x.j != y.j || x.k != y.k || x.c != y.c) return false;
    }
    return true;
}

SparseVec sparse_axpy(const SparseVec& r, const Scalar& c, const SparseVec& p) {
    SparseVec out;
    out.reserve(r.size() + p.size());
    std::size_t a = 0, b = 0;
    while (a < r.size() || b < p.size()) {
        if (b == p.size() || (a < r.size() && r[a].key > p[b].key)) {
            out.push_back(r[a++]);
        } else if (a == r.size() || p[b].key > r[a].key) {
            Scalar v = c * p[b].coeff;
            if (!v.is_zero()) out.push_back(SparseTerm{p[b].key, std::move(v)});
            ++b;
        } else {
            Scalar v = r[a].coeff + c * p[b].coeff;
            if (!v.is_zero()) out.push_back(SparseTerm{r[a].key, std::move(v)});
            ++a;
            ++b;
        }
    }
    return out;
}

SparseVec SparseEchelon::reduce(SparseVec v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
        auto it = rows_.find(v[pos].key);
        if (it == rows_.end()) {
            ++pos;
            continue;
        }
        // Kill the term at pos; only strictly smaller keys get introduced,
        // so positions before pos stay untouched.
        v = sparse_axpy(v, -v[pos].coeff, it->second);
    }
    return v;
}

bool SparseEchelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const Scalar inv = v.front().coeff.inverse();
    for (auto& t : v) t.coeff *= inv;
    const std::uint64_t lead = v.front().key;
    rows_.emplace(lead, std::move(v));
    return true;
}

void SparseEchelon::for_each_pivot(const std::function<void(std::uint64_t)>& fn) const {
    for (const auto& [k, row] : rows_) fn(k);
}

}  // namespace hopf
