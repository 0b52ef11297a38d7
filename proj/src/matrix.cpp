#include "hopfcalc/matrix.hpp"

#include <sstream>

namespace hopf {

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& f,
                         const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error("Matrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
    if (v.empty()) throw Error("Matrix::column: empty vector");
    Matrix m(v[0].field(), v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

Matrix Matrix::row(const std::vector<Scalar>& v) {
    if (v.empty()) throw Error("Matrix::row: empty vector");
    Matrix m(v[0].field(), 1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
    return m;
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
    std::vector<Scalar> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

void Matrix::set_col(std::size_t j, const std::vector<Scalar>& v) {
    if (v.size() != rows_) throw Error("Matrix::set_col: size mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return a.e_ == b.e_;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("Matrix: shape mismatch in +");
    Matrix m(*this);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] += o.e_[k];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("Matrix: shape mismatch in -");
    Matrix m(*this);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] -= o.e_[k];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("Matrix: shape mismatch in *");
    Matrix m(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) m.at(i, j) += a * b;
            }
        }
    return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix m(*this);
    for (auto& x : m.e_) x *= c;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::pow(unsigned k) const {
    if (rows_ != cols_) throw Error("Matrix::pow: not square");
    Matrix acc = identity(field_, rows_);
    Matrix base(*this);
    while (k) {
        if (k & 1u) acc = acc * base;
        base = base * base;
        k >>= 1u;
    }
    return acc;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw Error("Matrix::apply: size mismatch");
    std::vector<Scalar> r(rows_, Scalar::zero(field_));
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& a = at(i, j);
            if (!a.is_zero()) r[i] += a * v[j];
        }
    }
    return r;
}

std::vector<std::size_t> Matrix::rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    if (field_.is_rational()) {
        // Clear denominators and common factors so every row is a primitive
        // integer vector, then run one-step Bareiss (Montante) forward
        // elimination. Divisions below are exact by Sylvester's identity.
        for (std::size_t i = 0; i < rows_; ++i) {
            mpz_class l(1);
            for (std::size_t j = 0; j < cols_; ++j)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).rat().get_den().get_mpz_t());
            mpz_class g(0);
            for (std::size_t j = 0; j < cols_; ++j) {
                mpz_class n = at(i, j).rat().get_num() * (l / at(i, j).rat().get_den());
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
            }
            if (g == 0) continue;
            const Scalar f = Scalar::rational(mpq_class(l, g));
            for (std::size_t j = 0; j < cols_; ++j) at(i, j) *= f;
        }
        Scalar prev = Scalar::one(field_);
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && at(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
            const Scalar piv = at(r, c);
            for (std::size_t i = r + 1; i < rows_; ++i) {
                const Scalar m = at(i, c);
                for (std::size_t j = 0; j < cols_; ++j)
                    at(i, j) = (at(i, j) * piv - m * at(r, j)) / prev;
            }
            prev = piv;
            pivots.push_back(c);
            ++r;
        }
    } else {
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && at(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
            const Scalar inv = at(r, c).inverse();
            for (std::size_t j = 0; j < cols_; ++j) at(r, j) *= inv;
            for (std::size_t i = r + 1; i < rows_; ++i) {
                const Scalar m = at(i, c);
                if (m.is_zero()) continue;
                for (std::size_t j = 0; j < cols_; ++j) at(i, j) -= m * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
    }
    // Back substitution, exact rational division where needed.
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t c = pivots[k];
        const Scalar inv = at(k, c).inverse();
        for (std::size_t j = 0; j < cols_; ++j) at(k, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            const Scalar m = at(i, c);
            if (m.is_zero()) continue;
            for (std::size_t j = 0; j < cols_; ++j) at(i, j) -= m * at(k, j);
        }
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix m(*this);
    return m.rref_in_place().size();
}

Matrix::RKI Matrix::rank_kernel_image() const {
    Matrix m(*this);
    const auto pivots = m.rref_in_place();
    const std::size_t rk = pivots.size();

    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    Matrix kernel(field_, cols_, cols_ - rk);
    std::size_t kc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        kernel.at(c, kc) = Scalar::one(field_);
        for (std::size_t k = 0; k < rk; ++k)
            kernel.at(pivots[k], kc) = -m.at(k, c);
        ++kc;
    }

    Matrix image(field_, rows_, rk);
    for (std::size_t k = 0; k < rk; ++k)
        for (std::size_t i = 0; i < rows_; ++i) image.at(i, k) = at(i, pivots[k]);

    return RKI{rk, std::move(kernel), std::move(image)};
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    if (b.rows() != rows_) throw Error("Matrix::solve: row counts disagree");
    if (b.field() != field_) throw Error("Matrix::solve: field mismatch");
    Matrix aug = hstack(*this, b);
    const auto pivots = aug.rref_in_place();
    for (std::size_t c : pivots)
        if (c >= cols_) return std::nullopt;  // pivot in the rhs block
    Matrix x(field_, cols_, b.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(pivots[k], j) = aug.at(k, cols_ + j);
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solve(identity(field_, rows_));
    if (!x) return std::nullopt;
    if (!((*this) * *x).is_identity()) return std::nullopt;  // rank deficient
    return x;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).str();
        os << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw Error("kron: field mismatch");
    Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& x = a.at(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Scalar& y = b.at(k, l);
                    if (!y.is_zero())
                        m.at(i * b.rows() + k, j * b.cols() + l) = x * y;
                }
        }
    return m;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error("hstack: row mismatch");
    if (a.field() != b.field()) throw Error("hstack: field mismatch");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

bool span_contains(const Matrix& basis, const Matrix& v) {
    return basis.solve(v).has_value();
}

bool same_span(const Matrix& a, const Matrix& b) {
    return span_contains(a, b) && span_contains(b, a);
}

}  // namespace hopf
