#include "hopfcalc/objects.hpp"

#include <map>
#include <sstream>

namespace hopf {

namespace {

std::string default_name(int i) { return "e" + std::to_string(i); }

Matrix unit_vector(const FieldSpec& f, int dim, int i) {
    Matrix m(f, dim, 1);
    m.at(i, 0) = Scalar::one(f);
    return m;
}

// Accumulator for sparse multi-index comparisons: add lhs, subtract rhs,
// equality iff everything cancels.
struct Acc {
    std::map<std::vector<int>, Scalar> m;
    void add(std::vector<int> idx, const Scalar& c) {
        auto it = m.find(idx);
        if (it == m.end())
            m.emplace(std::move(idx), c);
        else {
            it->second += c;
            if (it->second.is_zero()) m.erase(it);
        }
    }
    bool empty() const { return m.empty(); }
};

std::vector<Scalar> basis_vec(const FieldSpec& f, int dim, int i) {
    std::vector<Scalar> v(dim, Scalar::zero(f));
    v[i] = Scalar::one(f);
    return v;
}

}  // namespace

std::vector<Scalar> Algebra::multiply(const std::vector<Scalar>& x,
                                      const std::vector<Scalar>& y) const {
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
        throw Error("Algebra::multiply: dimension mismatch");
    std::vector<Scalar> r(dim, Scalar::zero(field));
    for (const auto& e : mult.entries()) {
        if (x[e.i].is_zero() || y[e.j].is_zero()) continue;
        r[e.k] += x[e.i] * y[e.j] * e.c;
    }
    return r;
}

Matrix Algebra::left_mult(const std::vector<Scalar>& x) const {
    Matrix m(field, dim, dim);
    for (const auto& e : mult.entries()) {
        if (x[e.i].is_zero()) continue;
        m.at(e.k, e.j) += x[e.i] * e.c;
    }
    return m;
}

Matrix Algebra::mult_matrix() const {
    Matrix m(field, dim, dim * dim);
    for (const auto& e : mult.entries()) m.at(e.k, e.i * dim + e.j) += e.c;
    return m;
}

Matrix Algebra::unit_matrix() const { return Matrix::column(unit); }

std::string Algebra::basis_name(int i) const {
    return basis_names.empty() ? default_name(i) : basis_names[i];
}

Matrix Coalgebra::comult_matrix() const {
    Matrix m(field, dim * dim, dim);
    for (const auto& e : comult.entries()) m.at(e.j * dim + e.k, e.i) += e.c;
    return m;
}

Matrix Coalgebra::counit_matrix() const { return Matrix::row(counit); }

std::string Coalgebra::basis_name(int i) const {
    return basis_names.empty() ? default_name(i) : basis_names[i];
}

// ---- checkers --------------------------------------------------------------

CheckResult check_algebra(const Algebra& a) {
    if (static_cast<int>(a.unit.size()) != a.dim)
        throw Error("check_algebra: unit vector has wrong length");
    const auto& t = a.mult;
    // Associativity on basis triples, iterating stored entries only:
    // (e_i e_j) e_k expands via entries (i,j,l),(l,k,m); the mirror via
    // (j,k,l),(i,l,m).
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            for (int k = 0; k < a.dim; ++k) {
                Acc acc;
                t.for_first_two(i, j, [&](int l, const Scalar& c1) {
                    t.for_first_two(l, k, [&](int m, const Scalar& c2) {
                        acc.add({m}, c1 * c2);
                    });
                });
                t.for_first_two(j, k, [&](int l, const Scalar& c1) {
                    t.for_first_two(i, l, [&](int m, const Scalar& c2) {
                        acc.add({m}, -(c1 * c2));
                    });
                });
                if (!acc.empty()) {
                    std::ostringstream os;
                    os << "associativity fails at basis triple (" << a.basis_name(i)
                       << ", " << a.basis_name(j) << ", " << a.basis_name(k) << ")";
                    Matrix w(a.field, a.dim, 1);
                    for (const auto& [idx, c] : acc.m) w.at(idx[0], 0) = c;
                    return CheckResult::fail(std::move(w), os.str());
                }
            }
        }
    // Unit laws.
    for (int i = 0; i < a.dim; ++i) {
        const auto ei = basis_vec(a.field, a.dim, i);
        if (a.multiply(a.unit, ei) != ei || a.multiply(ei, a.unit) != ei) {
            return CheckResult::fail(unit_vector(a.field, a.dim, i),
                                     "unit law fails at basis element " + a.basis_name(i));
        }
    }
    return CheckResult::pass("algebra axioms hold");
}

CheckResult check_coalgebra(const Coalgebra& c) {
    if (static_cast<int>(c.counit.size()) != c.dim)
        throw Error("check_coalgebra: counit vector has wrong length");
    const auto& t = c.comult;
    for (int i = 0; i < c.dim; ++i) {
        // (Delta (x) id) Delta vs (id (x) Delta) Delta on e_i.
        Acc acc;
        t.for_first(i, [&](int j, int k, const Scalar& c1) {
            t.for_first(j, [&](int aa, int bb, const Scalar& c2) {
                acc.add({aa, bb, k}, c1 * c2);
            });
            t.for_first(k, [&](int aa, int bb, const Scalar& c2) {
                acc.add({j, aa, bb}, -(c1 * c2));
            });
        });
        if (!acc.empty())
            return CheckResult::fail(unit_vector(c.field, c.dim, i),
                                     "coassociativity fails at basis index " +
                                         std::to_string(i) + " (" + c.basis_name(i) + ")");
        // Counit laws.
        std::vector<Scalar> left(c.dim, Scalar::zero(c.field));
        std::vector<Scalar> right(c.dim, Scalar::zero(c.field));
        t.for_first(i, [&](int j, int k, const Scalar& c1) {
            left[k] += c.counit[j] * c1;
            right[j] += c.counit[k] * c1;
        });
        const auto ei = basis_vec(c.field, c.dim, i);
        if (left != ei || right != ei)
            return CheckResult::fail(unit_vector(c.field, c.dim, i),
                                     "counit law fails at basis index " + std::to_string(i) +
                                         " (" + c.basis_name(i) + ")");
    }
    return CheckResult::pass("coalgebra axioms hold");
}

CheckResult check_bialgebra(const Bialgebra& b) {
    if (b.algebra.dim != b.coalgebra.dim || b.algebra.field != b.coalgebra.field)
        throw Error("check_bialgebra: algebra and coalgebra parts disagree");
    if (auto r = check_algebra(b.algebra); !r.ok()) return r;
    if (auto r = check_coalgebra(b.coalgebra); !r.ok()) return r;

    const int d = b.dim();
    const auto& mul = b.algebra.mult;
    const auto& com = b.coalgebra.comult;
    const auto& eps = b.coalgebra.counit;

    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            // Delta(e_i e_j) = Delta(e_i) Delta(e_j) in B (x) B.
            Acc acc;
            mul.for_first_two(i, j, [&](int k, const Scalar& c1) {
                com.for_first(k, [&](int aa, int bb, const Scalar& c2) {
                    acc.add({aa, bb}, c1 * c2);
                });
            });
            com.for_first(i, [&](int a1, int b1, const Scalar& c1) {
                com.for_first(j, [&](int a2, int b2, const Scalar& c2) {
                    mul.for_first_two(a1, a2, [&](int x, const Scalar& c3) {
                        mul.for_first_two(b1, b2, [&](int y, const Scalar& c4) {
                            acc.add({x, y}, -(c1 * c2 * c3 * c4));
                        });
                    });
                });
            });
            if (!acc.empty())
                return CheckResult::fail(unit_vector(b.field(), d, i),
                                         "Delta is not multiplicative at basis pair (" +
                                             b.algebra.basis_name(i) + ", " +
                                             b.algebra.basis_name(j) + ")");
            // eps(e_i e_j) = eps(e_i) eps(e_j).
            Scalar lhs = Scalar::zero(b.field());
            mul.for_first_two(i, j, [&](int k, const Scalar& c1) { lhs += eps[k] * c1; });
            if (lhs != eps[i] * eps[j])
                return CheckResult::fail(unit_vector(b.field(), d, i),
                                         "counit is not multiplicative at basis pair (" +
                                             b.algebra.basis_name(i) + ", " +
                                             b.algebra.basis_name(j) + ")");
        }

    // Delta(1) = 1 (x) 1 and eps(1) = 1.
    Acc acc;
    for (int i = 0; i < d; ++i) {
        if (b.algebra.unit[i].is_zero()) continue;
        com.for_first(i, [&](int j, int k, const Scalar& c) {
            acc.add({j, k}, b.algebra.unit[i] * c);
        });
    }
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            const Scalar v = b.algebra.unit[j] * b.algebra.unit[k];
            if (!v.is_zero()) acc.add({j, k}, -v);
        }
    if (!acc.empty())
        return CheckResult::fail(b.algebra.unit_matrix(), "Delta(1) differs from 1 (x) 1");
    Scalar e1 = Scalar::zero(b.field());
    for (int i = 0; i < d; ++i) e1 += b.algebra.unit[i] * eps[i];
    if (!e1.is_one())
        return CheckResult::fail(b.algebra.unit_matrix(), "eps(1) differs from 1");
    return CheckResult::pass("bialgebra axioms hold");
}

CheckResult check_hopf(const HopfAlgebra& h) {
    if (!h.antipode)
        throw Error("check_hopf: antipode is absent");
    if (auto r = check_bialgebra(h.bialgebra); !r.ok()) return r;
    const int d = h.dim();
    const Matrix& S = *h.antipode;
    if (S.rows() != static_cast<std::size_t>(d) || S.cols() != static_cast<std::size_t>(d))
        throw Error("check_hopf: antipode matrix has wrong shape");

    const Matrix m = h.bialgebra.algebra.mult_matrix();
    const Matrix delta = h.bialgebra.coalgebra.comult_matrix();
    const Matrix id = Matrix::identity(h.field(), d);
    const Matrix eta_eps =
        h.bialgebra.algebra.unit_matrix() * h.bialgebra.coalgebra.counit_matrix();

    const Matrix left = m * kron(S, id) * delta;
    const Matrix right = m * kron(id, S) * delta;
    for (int i = 0; i < d; ++i) {
        for (int r = 0; r < d; ++r) {
            if (left.at(r, i) != eta_eps.at(r, i) || right.at(r, i) != eta_eps.at(r, i)) {
                return CheckResult::fail(
                    unit_vector(h.field(), d, i),
                    "antipode identity fails at basis element " +
                        h.bialgebra.algebra.basis_name(i));
            }
        }
    }
    return CheckResult::pass("Hopf algebra axioms hold");
}

// ---- op / cop / dual -------------------------------------------------------

Algebra opposite(const Algebra& a) {
    return Algebra{a.field, a.dim, a.mult.swap12(), a.unit, a.basis_names};
}

Bialgebra opposite(const Bialgebra& b) {
    return Bialgebra{opposite(b.algebra), b.coalgebra};
}

HopfAlgebra opposite(const HopfAlgebra& h) {
    std::optional<Matrix> s;
    if (h.antipode) s = h.antipode->inverse();  // nullopt when not invertible
    return HopfAlgebra{opposite(h.bialgebra), std::move(s)};
}

Coalgebra coopposite(const Coalgebra& c) {
    return Coalgebra{c.field, c.dim, c.comult.swap23(), c.counit, c.basis_names};
}

Bialgebra coopposite(const Bialgebra& b) {
    return Bialgebra{b.algebra, coopposite(b.coalgebra)};
}

HopfAlgebra coopposite(const HopfAlgebra& h) {
    std::optional<Matrix> s;
    if (h.antipode) s = h.antipode->inverse();
    return HopfAlgebra{coopposite(h.bialgebra), std::move(s)};
}

HopfAlgebra op_cop(const HopfAlgebra& h) {
    // The antipode of H^{op,cop} is S itself: with both structure twists
    // the defining identity transforms back into the one S satisfies.
    return HopfAlgebra{coopposite(opposite(h.bialgebra)), h.antipode};
}

namespace {
std::vector<std::string> dual_names(const std::vector<std::string>& names, int dim) {
    std::vector<std::string> out;
    if (names.empty()) return out;
    out.reserve(dim);
    for (const auto& n : names) out.push_back(n + "*");
    return out;
}
}  // namespace

Coalgebra dual(const Algebra& a) {
    return Coalgebra{a.field, a.dim, a.mult.rotate(), a.unit, dual_names(a.basis_names, a.dim)};
}

Algebra dual(const Coalgebra& c) {
    // Inverse rotation of the one used for algebra -> coalgebra, so
    // dual(dual(x)) has identical structure constants.
    return Algebra{c.field, c.dim, c.comult.rotate().rotate(), c.counit,
                   dual_names(c.basis_names, c.dim)};
}

Bialgebra dual(const Bialgebra& b) {
    Bialgebra d{dual(b.coalgebra), dual(b.algebra)};
    d.algebra.basis_names = dual_names(b.algebra.basis_names, b.dim());
    d.coalgebra.basis_names = d.algebra.basis_names;
    return d;
}

HopfAlgebra dual(const HopfAlgebra& h) {
    std::optional<Matrix> s;
    if (h.antipode) s = h.antipode->transpose();
    return HopfAlgebra{dual(h.bialgebra), std::move(s)};
}

// ---- Object / LinearMap ----------------------------------------------------

const char* to_string(Level l) {
    switch (l) {
        case Level::algebra: return "algebra";
        case Level::coalgebra: return "coalgebra";
        case Level::bialgebra: return "bialgebra";
        default: return "hopf";
    }
}

Level level_from_string(const std::string& s) {
    if (s == "algebra") return Level::algebra;
    if (s == "coalgebra") return Level::coalgebra;
    if (s == "bialgebra") return Level::bialgebra;
    if (s == "hopf") return Level::hopf;
    throw Error("unknown level '" + s + "'");
}

Level Object::level() const {
    return static_cast<Level>(v_.index());
}

int Object::dim() const {
    return std::visit([](const auto& x) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Algebra>) return x.dim;
        else if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Coalgebra>) return x.dim;
        else return x.dim();
    }, v_);
}

const FieldSpec& Object::field() const {
    return std::visit([](const auto& x) -> const FieldSpec& {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Algebra>) return x.field;
        else if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Coalgebra>) return x.field;
        else return x.field();
    }, v_);
}

std::string Object::basis_name(int i) const {
    if (const auto* a = algebra_part()) return a->basis_name(i);
    return coalgebra_part()->basis_name(i);
}

const Algebra* Object::algebra_part() const {
    switch (level()) {
        case Level::algebra: return &std::get<Algebra>(v_);
        case Level::bialgebra: return &std::get<Bialgebra>(v_).algebra;
        case Level::hopf: return &std::get<HopfAlgebra>(v_).bialgebra.algebra;
        default: return nullptr;
    }
}

const Coalgebra* Object::coalgebra_part() const {
    switch (level()) {
        case Level::coalgebra: return &std::get<Coalgebra>(v_);
        case Level::bialgebra: return &std::get<Bialgebra>(v_).coalgebra;
        case Level::hopf: return &std::get<HopfAlgebra>(v_).bialgebra.coalgebra;
        default: return nullptr;
    }
}

const Bialgebra* Object::bialgebra_part() const {
    switch (level()) {
        case Level::bialgebra: return &std::get<Bialgebra>(v_);
        case Level::hopf: return &std::get<HopfAlgebra>(v_).bialgebra;
        default: return nullptr;
    }
}

const HopfAlgebra* Object::hopf_part() const {
    return level() == Level::hopf ? &std::get<HopfAlgebra>(v_) : nullptr;
}

CheckResult Object::check() const {
    switch (level()) {
        case Level::algebra: return check_algebra(std::get<Algebra>(v_));
        case Level::coalgebra: return check_coalgebra(std::get<Coalgebra>(v_));
        case Level::bialgebra: return check_bialgebra(std::get<Bialgebra>(v_));
        default: return check_hopf(std::get<HopfAlgebra>(v_));
    }
}

LinearMap make_map(Object source, Object target, Matrix mat) {
    if (mat.rows() != static_cast<std::size_t>(target.dim()) ||
        mat.cols() != static_cast<std::size_t>(source.dim()))
        throw Error("make_map: matrix shape does not match source/target dims");
    if (source.field() != target.field() || mat.field() != source.field())
        throw Error("make_map: field mismatch");
    return LinearMap{std::make_shared<Object>(std::move(source)),
                     std::make_shared<Object>(std::move(target)), std::move(mat)};
}

LinearMap identity_map(Object o) {
    Matrix id = Matrix::identity(o.field(), o.dim());
    Object copy = o;
    return make_map(std::move(copy), std::move(o), std::move(id));
}

LinearMap antipode_map(const HopfAlgebra& h) {
    if (!h.antipode) throw Error("antipode_map: antipode is absent");
    return make_map(Object(h), Object(op_cop(h)), *h.antipode);
}

LinearMap dual_map(const LinearMap& f) {
    auto dualize = [](const Object& o) -> Object {
        switch (o.level()) {
            case Level::algebra: return Object(dual(*o.algebra_part()));
            case Level::coalgebra: return Object(dual(*o.coalgebra_part()));
            case Level::bialgebra: return Object(dual(*o.bialgebra_part()));
            default: return Object(dual(*o.hopf_part()));
        }
    };
    return make_map(dualize(*f.target), dualize(*f.source), f.mat.transpose());
}

CheckResult is_algebra_morphism(const LinearMap& f) {
    const Algebra* A = f.source->algebra_part();
    const Algebra* B = f.target->algebra_part();
    if (!A || !B) throw Error("is_algebra_morphism: source or target has no algebra structure");
    // f(1) = 1.
    if (f.mat.apply(A->unit) != B->unit)
        return CheckResult::fail(Matrix::column(A->unit), "f(1) differs from 1");
    // f(e_i e_j) = f(e_i) f(e_j).
    for (int i = 0; i < A->dim; ++i)
        for (int j = 0; j < A->dim; ++j) {
            std::vector<Scalar> lhs(B->dim, Scalar::zero(B->field));
            A->mult.for_first_two(i, j, [&](int k, const Scalar& c) {
                for (int r = 0; r < B->dim; ++r) lhs[r] += f.mat.at(r, k) * c;
            });
            const auto rhs = B->multiply(f.mat.col(i), f.mat.col(j));
            if (lhs != rhs)
                return CheckResult::fail(
                    unit_vector(A->field, A->dim, i),
                    "multiplicativity fails at basis pair (" + A->basis_name(i) + ", " +
                        A->basis_name(j) + ")");
        }
    return CheckResult::pass("algebra morphism");
}

CheckResult is_coalgebra_morphism(const LinearMap& f) {
    const Coalgebra* C = f.source->coalgebra_part();
    const Coalgebra* D = f.target->coalgebra_part();
    if (!C || !D) throw Error("is_coalgebra_morphism: source or target has no coalgebra structure");
    // eps_D f = eps_C.
    const Matrix lhs_eps = D->counit_matrix() * f.mat;
    for (int i = 0; i < C->dim; ++i)
        if (lhs_eps.at(0, i) != C->counit[i])
            return CheckResult::fail(unit_vector(C->field, C->dim, i),
                                     "counit compatibility fails at basis index " +
                                         std::to_string(i));
    // Delta_D f = (f (x) f) Delta_C.
    const Matrix lhs = D->comult_matrix() * f.mat;
    const Matrix rhs = kron(f.mat, f.mat) * C->comult_matrix();
    for (int i = 0; i < C->dim; ++i)
        for (std::size_t r = 0; r < lhs.rows(); ++r)
            if (lhs.at(r, i) != rhs.at(r, i))
                return CheckResult::fail(unit_vector(C->field, C->dim, i),
                                         "comultiplication compatibility fails at basis index " +
                                             std::to_string(i) + " (" + C->basis_name(i) + ")");
    return CheckResult::pass("coalgebra morphism");
}

CheckResult is_bialgebra_morphism(const LinearMap& f) {
    if (auto r = is_algebra_morphism(f); !r.ok()) return r;
    if (auto r = is_coalgebra_morphism(f); !r.ok()) return r;
    return CheckResult::pass("bialgebra morphism");
}

CheckResult is_hopf_morphism(const LinearMap& f) {
    const HopfAlgebra* H = f.source->hopf_part();
    const HopfAlgebra* K = f.target->hopf_part();
    if (!H || !K) throw Error("is_hopf_morphism: source or target is not a Hopf algebra");
    if (!H->antipode || !K->antipode) throw Error("is_hopf_morphism: an antipode is absent");
    if (auto r = is_bialgebra_morphism(f); !r.ok()) return r;
    const Matrix lhs = f.mat * *H->antipode;
    const Matrix rhs = *K->antipode * f.mat;
    for (std::size_t j = 0; j < lhs.cols(); ++j)
        for (std::size_t i = 0; i < lhs.rows(); ++i)
            if (lhs.at(i, j) != rhs.at(i, j))
                return CheckResult::fail(unit_vector(H->field(), H->dim(), static_cast<int>(j)),
                                         "antipode compatibility fails at basis index " +
                                             std::to_string(j));
    return CheckResult::pass("Hopf algebra morphism");
}

CheckResult is_morphism_at(Level l, const LinearMap& f) {
    switch (l) {
        case Level::algebra: return is_algebra_morphism(f);
        case Level::coalgebra: return is_coalgebra_morphism(f);
        case Level::bialgebra: return is_bialgebra_morphism(f);
        default: return is_hopf_morphism(f);
    }
}

}  // namespace hopf
