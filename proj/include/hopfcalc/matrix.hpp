#ifndef HOPFCALC_MATRIX_HPP
#define HOPFCALC_MATRIX_HPP

#include <optional>
#include <vector>

#include "hopfcalc/field.hpp"

namespace hopf {

/// Dense exact matrix. Entries all share one FieldSpec. Tensor-product
/// index flattening is row-major throughout the project:
/// e_i (x) e_j  <->  i * dim_second + j.
class Matrix {
public:
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const FieldSpec& f, std::size_t n);
    static Matrix from_rows(const FieldSpec& f,
                            const std::vector<std::vector<Scalar>>& rows);
    static Matrix column(const std::vector<Scalar>& v);
    static Matrix row(const std::vector<Scalar>& v);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Scalar> col(std::size_t j) const;
    void set_col(std::size_t j, const std::vector<Scalar>& v);

    bool is_zero() const;
    bool is_identity() const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    Matrix pow(unsigned k) const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    std::size_t rank() const;
    /// Columns of `kernel` form a basis of the null space; columns of
    /// `image` are the pivot columns of the original matrix.
    struct RKI {
        std::size_t rank;
        Matrix kernel;
        Matrix image;
    };
    RKI rank_kernel_image() const;

    /// Exact solve of (*this) * x = b, b may have several columns.
    /// Free variables are set to zero. nullopt iff no solution exists.
    std::optional<Matrix> solve(const Matrix& b) const;
    std::optional<Matrix> inverse() const;

    /// Reduced row echelon form; returns pivot column indices.
    /// Over Q the forward phase is fraction-free (Bareiss) to control
    /// coefficient growth; over F_p plain elimination.
    std::vector<std::size_t> rref_in_place();

    std::string str() const;

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

/// Kronecker product with the fixed row-major basis order
/// (a (x) b)(e_i (x) e_j) = a(e_i) (x) b(e_j).
Matrix kron(const Matrix& a, const Matrix& b);

/// [a | b] side by side.
Matrix hstack(const Matrix& a, const Matrix& b);

/// True iff every column of v lies in the column space of basis.
bool span_contains(const Matrix& basis, const Matrix& v);

/// True iff the two column spans coincide.
bool same_span(const Matrix& a, const Matrix& b);

}  // namespace hopf

#endif
