#ifndef VNSKEW_INTEGRALS_HPP
#define VNSKEW_INTEGRALS_HPP

#include <utility>

#include "vnskew/dims.hpp"
#include "vnskew/poly_value.hpp"

namespace vnskew {

/// The two evaluated ln^3 integrals feeding I_A: the diagonal
/// C_{m-1,m-1}^{(n-m+1,n-m+1)}(n-m+3) block and the off-diagonal
/// C_{m-2,m}^{(n-m+1,n-m+1)}(n-m+3) block. At m = 1 the second block is
/// absent (L_{-1} = 0) and evaluates to zero.
std::pair<PolyValue, PolyValue> ias_blocks(const Dims& d);

enum class IbsBlock { IBS1, IBS2, IBS3, IBS4, IBS5, IBS6, IBS7 };

/// The evaluated A- and B-integrals appearing in the I_B assembly. IBS1/IBS2
/// take the diagonal index k; IBS3/IBS5/IBS6 take j; IBS4 takes (j, k) with
/// k > 0 and IBS7 takes (j, k) with k > 1. Out-of-range indices or a wrong
/// branch are rejected.
PolyValue ibs_blocks(const Dims& d, IbsBlock which, long j, long k = 0);

/// Finite-sum assemblies of the three integrals over the block formulas.
PolyValue integral_IA(const Dims& d);
PolyValue integral_IB(const Dims& d);
PolyValue integral_IC(const Dims& d);

/// I_A - 3 I_B + 2 I_C from the finite-sum route; equals the closed-form
/// third cumulant of T for every 1 <= m <= n, including m = n.
PolyValue kappa3T_from_integrals(const Dims& d);

/// Table-driven closed forms. Require m < n strictly: the expansions carry
/// psi_j(n-m) terms that are indeterminate at m = n (the finite-sum route
/// covers that case).
PolyValue closed_IA(const Dims& d);
PolyValue closed_IB(const Dims& d);
PolyValue closed_IC(const Dims& d);

/// Table coefficients (1-based): a_i for I_A (i <= 18), b_i for I_B
/// (i <= 25), c_i for I_C (i <= 29). Most are integer polynomials in (m, n);
/// a_17, b_23, c_27 additionally carry psi_0(n) and psi_0(n-m) parts.
PolyValue table_a(int i, const Dims& d);
PolyValue table_b(int i, const Dims& d);
PolyValue table_c(int i, const Dims& d);

/// The unsimplifiable basis sums: sum_{k=1}^{m} psi_0(k+n-m)/k,
/// psi_0^2(k+n-m)/k, psi_1(k+n-m)/k for which = 1, 2, 3.
PolyValue unsimplifiable_sum(const Dims& d, int which);

}  // namespace vnskew

#endif  // VNSKEW_INTEGRALS_HPP
