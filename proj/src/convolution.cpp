#include "hopfcalc/convolution.hpp"

namespace hopf {

namespace {

void require_hom_shape(const Coalgebra& c, const Algebra& a, const Matrix& f) {
    if (f.rows() != static_cast<std::size_t>(a.dim) ||
        f.cols() != static_cast<std::size_t>(c.dim))
        throw Error("convolution: map shape does not match Hom(C, A)");
    if (c.field != a.field || f.field() != c.field)
        throw Error("convolution: field mismatch");
}

}  // namespace

Matrix convolution_unit(const Coalgebra& c, const Algebra& a) {
    if (c.field != a.field) throw Error("convolution: field mismatch");
    return Matrix::column(a.unit) * c.counit_matrix();
}

Matrix convolve(const Coalgebra& c, const Algebra& a, const Matrix& f, const Matrix& g) {
    require_hom_shape(c, a, f);
    require_hom_shape(c, a, g);
    return a.mult_matrix() * kron(f, g) * c.comult_matrix();
}

namespace {

std::pair<const Coalgebra*, const Algebra*> hom_context(const LinearMap& f) {
    const Coalgebra* c = f.source->coalgebra_part();
    const Algebra* a = f.target->algebra_part();
    if (!c) throw Error("convolution: source has no coalgebra structure");
    if (!a) throw Error("convolution: target has no algebra structure");
    return {c, a};
}

}  // namespace

Matrix convolve(const LinearMap& f, const LinearMap& g) {
    auto [c, a] = hom_context(f);
    return convolve(*c, *a, f.mat, g.mat);
}

std::optional<Matrix> convolution_inverse(const Coalgebra& c, const Algebra& a,
                                          const Matrix& f) {
    require_hom_shape(c, a, f);
    const int dc = c.dim, da = a.dim;
    // (f * g)(e_i) = sum_{j,k} comult[i,j,k] f(e_j) g(e_k); linear in the
    // da*dc unknowns g[r][k], flattened as k*da + r.
    Matrix sys(c.field, da * dc, da * dc);
    for (const auto& e : c.comult.entries()) {
        // contribution to column e.i: left multiplication by f(e_j)
        // applied to the unknown column g(e_k)
        const Matrix lf = a.left_mult(f.col(e.j));  // da x da
        for (int m = 0; m < da; ++m)
            for (int r = 0; r < da; ++r) {
                if (lf.at(m, r).is_zero()) continue;
                sys.at(e.i * da + m, e.k * da + r) += e.c * lf.at(m, r);
            }
    }
    const Matrix u = convolution_unit(c, a);
    Matrix rhs(c.field, da * dc, 1);
    for (int i = 0; i < dc; ++i)
        for (int m = 0; m < da; ++m) rhs.at(i * da + m, 0) = u.at(m, i);
    auto sol = sys.solve(rhs);
    if (!sol) return std::nullopt;
    Matrix g(c.field, da, dc);
    for (int k = 0; k < dc; ++k)
        for (int r = 0; r < da; ++r) g.at(r, k) = sol->at(k * da + r, 0);
    if (convolve(c, a, f, g) != u) return std::nullopt;
    if (convolve(c, a, g, f) != u) return std::nullopt;  // two-sidedness
    return g;
}

std::optional<Matrix> convolution_inverse(const LinearMap& f) {
    auto [c, a] = hom_context(f);
    return convolution_inverse(*c, *a, f.mat);
}

std::optional<Matrix> antipode_solve(const Bialgebra& b) {
    const Matrix id = Matrix::identity(b.field(), b.dim());
    // The left identity m (S (x) id) Delta = eta eps is solved as a linear
    // system; the right identity is then verified rather than doubling the
    // system. One-sided solutions failing two-sidedness come back nullopt.
    return convolution_inverse(b.coalgebra, b.algebra, id);
}

std::optional<Matrix> skew_antipode(const HopfAlgebra& h) {
    if (!h.antipode) throw Error("skew_antipode: antipode is absent");
    auto sbar = antipode_solve(coopposite(h.bialgebra));
    if (!sbar) return std::nullopt;
    // For finite-dimensional Hopf algebras the skew antipode is S^-1.
    auto inv = h.antipode->inverse();
    if (!inv || *inv != *sbar)
        throw Error("skew_antipode: result is not the matrix inverse of S (invalid input?)");
    return sbar;
}

std::optional<int> matrix_order(const Matrix& m, int bound) {
    Matrix p = m;
    for (int n = 1; n <= bound; ++n) {
        if (p.is_identity()) return n;
        p = p * m;
    }
    return std::nullopt;
}

AntipodeReport antipode_report(const HopfAlgebra& h, int max_order) {
    if (!h.antipode) throw Error("antipode_report: antipode is absent");
    const Matrix& S = *h.antipode;
    AntipodeReport r;
    r.bijective = S.inverse().has_value();
    r.order = matrix_order(S, max_order);
    r.order_bound = max_order;
    r.image_dim = static_cast<int>(S.rank());
    return r;
}

}  // namespace hopf
