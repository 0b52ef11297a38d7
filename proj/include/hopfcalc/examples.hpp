#ifndef HOPFCALC_EXAMPLES_HPP
#define HOPFCALC_EXAMPLES_HPP

#include <string>
#include <vector>

#include "hopfcalc/objects.hpp"

namespace hopf::examples {

/// Group algebra kG from a Cayley table (table[i][j] = index of g_i g_j,
/// identity at index 0), with antipode g -> g^-1.
HopfAlgebra group_algebra(const FieldSpec& f, const std::vector<std::vector<int>>& table,
                          std::vector<std::string> names = {});
HopfAlgebra cyclic_group_algebra(const FieldSpec& f, int n);
HopfAlgebra symmetric3_group_algebra(const FieldSpec& f);

/// Sweedler's 4-dimensional Hopf algebra (characteristic != 2).
HopfAlgebra sweedler(const FieldSpec& f = FieldSpec::rationals());

/// Taft algebra of dimension n^2 over F_p; q must be a primitive n-th
/// root of unity mod p.
HopfAlgebra taft(int n, std::uint64_t q, const FieldSpec& f);

/// The matrix algebra M_n(k) with basis E_ij.
Algebra matrix_algebra(const FieldSpec& f, int n);
/// Its dual coalgebra M_n(k)^*: Delta(e_ij) = sum_l e_il (x) e_lj.
Coalgebra matrix_coalgebra(const FieldSpec& f, int n);

/// Monoid bialgebra k[M] from a monoid Cayley table (identity at 0);
/// every basis element grouplike.
Bialgebra monoid_bialgebra(const FieldSpec& f, const std::vector<std::vector<int>>& table,
                           std::vector<std::string> names = {});
/// k[{1, z}] with z^2 = z, the smallest non-Hopf bialgebra here.
Bialgebra idempotent_monoid_bialgebra(const FieldSpec& f = FieldSpec::rationals());

/// Coalgebra spanned by m grouplikes.
Coalgebra grouplike_coalgebra(const FieldSpec& f, int m);

/// Named example dispatch used by the CLI: "sweedler", "cyclic:4", "s3",
/// "taft:3:3", "matrix-coalgebra:2", "matrix-algebra:2",
/// "idempotent-monoid", "grouplikes:2", "dual:<spec>".
Object make_example(const std::string& spec, const FieldSpec& f);
std::vector<std::string> example_names();

}  // namespace hopf::examples

#endif
