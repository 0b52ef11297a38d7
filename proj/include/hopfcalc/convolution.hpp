#ifndef HOPFCALC_CONVOLUTION_HPP
#define HOPFCALC_CONVOLUTION_HPP

#include <optional>

#include "hopfcalc/objects.hpp"

namespace hopf {

/// The convolution algebra Hom(C, A): maps are dim A x dim C matrices,
/// the product is m_A (f (x) g) Delta_C, the unit is eta_A eps_C.
struct ConvolutionProblem {
    Coalgebra source;
    Algebra target;
    std::optional<Matrix> candidate;

    Matrix unit() const;
    Matrix convolve(const Matrix& f, const Matrix& g) const;
    /// Solves f * g = unit as a linear system in g, then verifies
    /// g * f = unit. nullopt iff no two-sided inverse exists.
    std::optional<Matrix> inverse(const Matrix& f) const;
};

Matrix convolution_unit(const Coalgebra& c, const Algebra& a);
Matrix convolve(const Coalgebra& c, const Algebra& a, const Matrix& f, const Matrix& g);
/// Convolution of two maps C -> A presented as LinearMaps over the same
/// coalgebra source and algebra target.
Matrix convolve(const LinearMap& f, const LinearMap& g);
std::optional<Matrix> convolution_inverse(const Coalgebra& c, const Algebra& a, const Matrix& f);
std::optional<Matrix> convolution_inverse(const LinearMap& f);

/// The antipode as the two-sided convolution inverse of the identity.
/// nullopt means the bialgebra is not Hopf.
std::optional<Matrix> antipode_solve(const Bialgebra& b);

/// Antipode of the coopposite; equals S^-1 when it exists (checked).
std::optional<Matrix> skew_antipode(const HopfAlgebra& h);

struct AntipodeReport {
    bool bijective;
    std::optional<int> order;  // least n with S^n = id; nullopt if beyond the bound
    int order_bound;
    int image_dim;
};

AntipodeReport antipode_report(const HopfAlgebra& h, int max_order = 64);

/// Least n >= 1 with m^n = id, or nullopt past the bound.
std::optional<int> matrix_order(const Matrix& m, int bound);

}  // namespace hopf

#endif
