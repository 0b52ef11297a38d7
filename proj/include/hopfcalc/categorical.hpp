#ifndef HOPFCALC_CATEGORICAL_HPP
#define HOPFCALC_CATEGORICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfcalc/objects.hpp"

namespace hopf {

/// A subspace of a based object, spanned by independent columns.
struct Subspace {
    int ambient_dim;
    Matrix basis;

    int dim() const { return static_cast<int>(basis.cols()); }
    bool contains(const Matrix& v) const { return span_contains(basis, v); }
};

/// B (x)_A B for an algebra map f : A -> B, realized as the quotient of
/// B (x) B by span{ b f(a) (x) b' - b (x) f(a) b' }. Quotient coordinates
/// are the non-pivot coordinates of the reduced relation span.
struct RelativeTensorSquare {
    int quotient_dim;
    /// b |-> class of b (x) 1 and b |-> class of 1 (x) b.
    Matrix left_insertion;
    Matrix right_insertion;
};

RelativeTensorSquare relative_tensor_square(const LinearMap& f);

/// Epimorphism test in Alg: f is epi iff b (x) 1 = 1 (x) b in B (x)_A B
/// for every b.
CheckResult epi_test_alg(const LinearMap& f);
/// Hopf morphisms are epi iff epi in Alg; delegates.
CheckResult epi_test_hopf(const LinearMap& f);

/// C box_D C and the corestriction of Delta_C into it.
struct CotensorSpace {
    Subspace subspace;      // inside C (x) C
    Matrix corestriction;   // Delta_C as a map into the ambient C (x) C
};

CotensorSpace cotensor_square(const LinearMap& f);

/// Monomorphism test in CoAlg: f is mono iff Delta_C is a bijection of C
/// onto C box_D C.
CheckResult mono_test_coalg(const LinearMap& f);
CheckResult mono_test_hopf(const LinearMap& f);

/// Coradical H_0 = (J(C^*))^perp, J computed by the trace-form radical.
/// Valid over Q, and over F_p only when p > dim (error otherwise).
Subspace coradical(const Coalgebra& c);

struct ScoradReport {
    bool contains_coradical;
    bool surjective;
    CheckResult result;
};

/// Reports whether H_0 is contained in S(H) and whether S is surjective;
/// containment with non-surjectivity is a consistency violation and throws.
ScoradReport scorad_check(const HopfAlgebra& h);

struct FlatnessOptions {
    std::uint64_t seed = 0;
    int samples = 32;
    /// Exhaustive enumeration over F_p is used when the candidate space
    /// has at most this many points.
    std::uint64_t exhaustive_limit = 1u << 16;
};

/// Freeness of B as a left A-module along an injective algebra map
/// (the faithful-flatness surrogate for this finite-dimensional scope):
/// yes with a certificate basis, no with a dimension or rank obstruction,
/// or inconclusive after the sampling budget.
CheckResult faithful_flatness_test(const LinearMap& f, const FlatnessOptions& opts = {});
/// Dualizes a surjective coalgebra map to the module setting and
/// transports the verdict back.
CheckResult faithful_coflatness_test(const LinearMap& f, const FlatnessOptions& opts = {});

struct HarnessEntry {
    std::string name;
    Level level;
    LinearMap map;
};

struct HarnessLine {
    std::string name;
    std::optional<Verdict> epi, mono, flat, coflat;
    bool bijective;
    bool violation;
};

struct HarnessReport {
    std::vector<HarnessLine> lines;
    int violations = 0;
    int inconclusive_skips = 0;
    std::string str() const;
};

/// Asserts (epi and faithfully flat => bijective) and the dual implication
/// on every corpus entry. Inconclusive flatness verdicts are skipped and
/// counted.
HarnessReport consistency_harness(const std::vector<HarnessEntry>& corpus,
                                  const FlatnessOptions& opts = {});

}  // namespace hopf

#endif
