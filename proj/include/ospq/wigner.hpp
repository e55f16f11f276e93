#pragma once

#include <vector>

#include "ospq/coupling.hpp"
#include "ospq/irreps.hpp"

namespace ospq {

/// Orthonormal basis of a solution space from an SVD nullspace, with the
/// singular-value bookkeeping that makes degenerate cases visible.
struct NullspaceInfo {
    double sigma_max = 0.0;
    double smallest_kept = 0.0;    // smallest singular value counted nonzero
    double largest_dropped = 0.0;  // largest singular value counted zero
    /// smallest_kept / largest_dropped; +inf when nothing was dropped.
    double gap() const;
};

struct IntertwinerBasis {
    std::vector<GradedMatrix> basis;
    NullspaceInfo info;
    int dimension() const { return static_cast<int>(basis.size()); }
};

/// Basis of maps f of the given degree with f pi_A(g) = (-1)^{deg |g|} pi_B(g) f
/// for g in {H, v+, v-}. The H constraint is imposed structurally through the
/// weight support; v+- through an SVD nullspace. `include_group_like` adds the
/// q^H constraint rows (used to check they are implied).
IntertwinerBasis intertwiner_basis(const GeneratorImages& a, const GeneratorImages& b,
                                   Parity degree, double tol,
                                   bool include_group_like = false);

/// Components T_{m1} : V^{l2} -> V^{l3} of a tensor operator of type (l1, lambda1),
/// stored by descending m1, plus the fitted reduced matrix element.
struct TensorOperatorFamily {
    int l1 = 0;
    Parity lambda1;
    IrrepLabel source;  // l2
    IrrepLabel target;  // l3
    Parity degree;
    std::vector<GradedMatrix> components;
    double alpha = 0.0;
    double residual = 0.0;

    const GradedMatrix& component(int m1) const;
    double norm() const;
};

/// Solves the component equations of an irreducible tensor operator as a
/// graded-intertwiner problem into the Hom module. Returns a basis of families
/// (dimension 1 exactly when the triangle condition holds with
/// lambda3 = l1+l2+l3+lambda1+lambda2 mod 2 at the matching degree).
struct TensorOperatorSolve {
    std::vector<TensorOperatorFamily> families;
    NullspaceInfo info;
};
TensorOperatorSolve tensor_operator_basis(int l1, Parity lambda1, const Irrep& rep2,
                                          const Irrep& rep3, Parity degree);

/// Curry inverse: the map V^{l1} x V^{l2} -> V^{l3} with
/// uncurried(e_{m1} x e_{m2}) = T_{m1} e_{m2}; same degree as the family.
GradedMatrix uncurry(const TensorOperatorFamily& t);

struct WignerEckartFit {
    double alpha = 0.0;
    double residual = 0.0;  // relative rank-1 misfit
    /// Least-squares alpha restricted to a single component m1; entries in
    /// descending m1. Components with negligible norm are skipped (NaN).
    std::vector<double> alpha_per_component;
};

/// Least-squares reduced matrix element of the family against a modified CGC
/// table (the table must contain the block l = l3 of the l1 x l2 coupling).
WignerEckartFit wigner_eckart_fit(const TensorOperatorFamily& t, const CGCTable& modified);

}  // namespace ospq
