#ifndef HOPFCALC_OBJECTS_HPP
#define HOPFCALC_OBJECTS_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hopfcalc/check_result.hpp"
#include "hopfcalc/matrix.hpp"
#include "hopfcalc/sparse.hpp"

namespace hopf {

/// Based finite-dimensional algebra given by structure constants:
/// e_i . e_j = sum_k mult[i,j,k] e_k, with unit written in coordinates.
struct Algebra {
    FieldSpec field;
    int dim;
    SparseTensor3 mult;         // dims (dim, dim, dim)
    std::vector<Scalar> unit;   // coordinates of 1
    std::vector<std::string> basis_names;  // optional; empty means e0, e1, ...

    std::vector<Scalar> multiply(const std::vector<Scalar>& x,
                                 const std::vector<Scalar>& y) const;
    /// Operator of left multiplication by x.
    Matrix left_mult(const std::vector<Scalar>& x) const;
    /// m : A (x) A -> A as a dim x dim^2 matrix (row-major tensor order).
    Matrix mult_matrix() const;
    Matrix unit_matrix() const;  // dim x 1

    std::string basis_name(int i) const;
};

/// Based finite-dimensional coalgebra:
/// Delta(e_i) = sum_{j,k} comult[i,j,k] e_j (x) e_k.
struct Coalgebra {
    FieldSpec field;
    int dim;
    SparseTensor3 comult;        // dims (dim, dim, dim)
    std::vector<Scalar> counit;  // row vector of epsilon
    std::vector<std::string> basis_names;

    /// Delta : C -> C (x) C as a dim^2 x dim matrix.
    Matrix comult_matrix() const;
    Matrix counit_matrix() const;  // 1 x dim

    std::string basis_name(int i) const;
};

/// An algebra and a coalgebra on the same based space.
struct Bialgebra {
    Algebra algebra;
    Coalgebra coalgebra;

    const FieldSpec& field() const { return algebra.field; }
    int dim() const { return algebra.dim; }
};

/// A bialgebra with an antipode matrix. The antipode may be absent
/// transiently (mid-construction); check_hopf fails loudly on absence.
struct HopfAlgebra {
    Bialgebra bialgebra;
    std::optional<Matrix> antipode;

    const FieldSpec& field() const { return bialgebra.field(); }
    int dim() const { return bialgebra.dim(); }
};

// ---- axiom checkers -------------------------------------------------------

CheckResult check_algebra(const Algebra& a);
CheckResult check_coalgebra(const Coalgebra& c);
CheckResult check_bialgebra(const Bialgebra& b);
CheckResult check_hopf(const HopfAlgebra& h);

// ---- opposite / coopposite / dual -----------------------------------------

Algebra opposite(const Algebra& a);
Bialgebra opposite(const Bialgebra& b);
/// The antipode of H^op is S^-1; stored when S is invertible, absent
/// otherwise (recoverable later with antipode_solve).
HopfAlgebra opposite(const HopfAlgebra& h);

Coalgebra coopposite(const Coalgebra& c);
Bialgebra coopposite(const Bialgebra& b);
HopfAlgebra coopposite(const HopfAlgebra& h);

HopfAlgebra op_cop(const HopfAlgebra& h);

Coalgebra dual(const Algebra& a);
Algebra dual(const Coalgebra& c);
Bialgebra dual(const Bialgebra& b);
HopfAlgebra dual(const HopfAlgebra& h);

// ---- objects of mixed level and morphisms ---------------------------------

enum class Level { algebra, coalgebra, bialgebra, hopf };

const char* to_string(Level l);
Level level_from_string(const std::string& s);

/// A value of any of the four levels, as stored in files and morphisms.
class Object {
public:
    explicit Object(Algebra a) : v_(std::move(a)) {}
    explicit Object(Coalgebra c) : v_(std::move(c)) {}
    explicit Object(Bialgebra b) : v_(std::move(b)) {}
    explicit Object(HopfAlgebra h) : v_(std::move(h)) {}

    Level level() const;
    int dim() const;
    const FieldSpec& field() const;
    std::string basis_name(int i) const;

    /// nullptr when the object has no structure of that kind.
    const Algebra* algebra_part() const;
    const Coalgebra* coalgebra_part() const;
    const Bialgebra* bialgebra_part() const;
    const HopfAlgebra* hopf_part() const;

    CheckResult check() const;

private:
    std::variant<Algebra, Coalgebra, Bialgebra, HopfAlgebra> v_;
};

/// A matrix between two based objects (column convention:
/// f(e_j) = sum_i mat[i][j] e'_i).
struct LinearMap {
    std::shared_ptr<const Object> source;
    std::shared_ptr<const Object> target;
    Matrix mat;
};

LinearMap make_map(Object source, Object target, Matrix mat);
LinearMap identity_map(Object o);
/// The antipode as a Hopf algebra map H -> H^{op,cop}.
LinearMap antipode_map(const HopfAlgebra& h);
/// Transpose of f between the dual objects.
LinearMap dual_map(const LinearMap& f);

CheckResult is_algebra_morphism(const LinearMap& f);
CheckResult is_coalgebra_morphism(const LinearMap& f);
CheckResult is_bialgebra_morphism(const LinearMap& f);
CheckResult is_hopf_morphism(const LinearMap& f);
CheckResult is_morphism_at(Level l, const LinearMap& f);

}  // namespace hopf

#endif
