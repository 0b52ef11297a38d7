#ifndef HOPFCALC_SPARSE_HPP
#define HOPFCALC_SPARSE_HPP

#include <cstdint>
#include <functional>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "hopfcalc/field.hpp"
#include "hopfcalc/matrix.hpp"

namespace hopf {

/// Sparse 3-index tensor of structure constants. Entries are sorted by
/// (i,j,k), duplicate triples are summed at construction, explicit zeros
/// dropped.
class SparseTensor3 {
public:
    struct Entry {
        int i, j, k;
        Scalar c;
    };

    SparseTensor3(int d1, int d2, int d3) : d1_(d1), d2_(d2), d3_(d3) {}

    static SparseTensor3 from_entries(int d1, int d2, int d3,
                                      std::vector<Entry> entries);

    int d1() const { return d1_; }
    int d2() const { return d2_; }
    int d3() const { return d3_; }
    const std::vector<Entry>& entries() const { return e_; }

    /// Entries with first index i (contiguous range of the sorted list).
    void for_first(int i, const std::function<void(int, int, const Scalar&)>& fn) const;
    /// Entries with first indices (i, j).
    void for_first_two(int i, int j, const std::function<void(int, const Scalar&)>& fn) const;

    /// Index permutations behind op / cop / duality.
    SparseTensor3 swap12() const;  // (i,j,k) -> entry at (j,i,k)
    SparseTensor3 swap23() const;  // (i,j,k) -> entry at (i,k,j)
    SparseTensor3 rotate() const;  // entry (i,j,k) lands at (k,i,j)

    friend bool operator==(const SparseTensor3& a, const SparseTensor3& b);
    friend bool operator!=(const SparseTensor3& a, const SparseTensor3& b) { return !(a == b); }

private:
    int d1_, d2_, d3_;
    std::vector<Entry> e_;
};

/// One term of a sparse vector indexed by arbitrary 64-bit keys.
struct SparseTerm {
    std::uint64_t key;
    Scalar coeff;
};

/// Sparse vector, terms sorted by key descending, no zero coefficients.
using SparseVec = std::vector<SparseTerm>;

/// r -= c * p, merging sorted term lists.
SparseVec sparse_axpy(const SparseVec& r, const Scalar& c, const SparseVec& p);

/// Incremental sparse row echelon over 64-bit indexed coordinates.
/// The pivot of a row is its largest key; insertion fully reduces the
/// incoming row against the current pivot set, so the stored rows have
/// pairwise distinct leads and dims can be read off the pivot counts.
class SparseEchelon {
public:
    explicit SparseEchelon(const FieldSpec& f) : field_(f) {}

    /// Reduce every term of v that is a pivot key; the result has no
    /// pivot keys left. Termination: each substitution replaces a key by
    /// strictly smaller ones.
    SparseVec reduce(SparseVec v) const;

    /// Reduce, then adopt as a new pivot row (lead normalized to 1).
    /// Returns false iff the row reduced to zero.
    bool insert(SparseVec v);

    bool has_pivot(std::uint64_t key) const { return rows_.count(key) != 0; }
    std::size_t pivot_count() const { return rows_.size(); }
    void for_each_pivot(const std::function<void(std::uint64_t)>& fn) const;

private:
    FieldSpec field_;
    std::unordered_map<std::uint64_t, SparseVec> rows_;
};

}  // namespace hopf

#endif
