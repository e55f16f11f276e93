#pragma once

#include <vector>

#include "ospq/coupling.hpp"
#include "ospq/irreps.hpp"
#include "ospq/wigner.hpp"

namespace ospq {

/// The adjoint-orbit family t^l_m realized in one irrep: component m is
/// homogeneous of degree m mod 2 and shifts weight by m/2. The top component
/// is pi(v+)^l pi(q^H)^l; the rest follow by adjoint lowering.
struct AdjointFamily {
    int l = 0;
    IrrepLabel rep_label;
    std::vector<GradedMatrix> components;  // m = l, l-1, ..., -l
    double raising_resid = 0.0;            // adjoint raising back-check
    double weight_resid = 0.0;             // ad_H eigenvalue check

    const GradedMatrix& component(int m) const;
    bool is_zero(double eps = 0.0) const;
};

/// Builds the family for even l >= 2 inside `rep` and back-checks the adjoint
/// raising and weight relations. Throws ResidualTooLarge when the raising
/// consistency fails.
AdjointFamily build_t_family(int l, const Irrep& rep);

struct ReducedAlpha {
    double value = 0.0;
    bool degenerate = false;  // 2j < l
};

/// Closed-form reduced matrix element of the t^l family in V^j:
///   alpha = (-1)^{l(l+1)/2} q^{-l(l+1)/4} [l]!
///           ([2j+l+1]! / ([2l]! [2j-l]! [2j+1]!) gamma^l)^{1/2}.
ReducedAlpha reduced_alpha_closed_form(int l, int j, const QParams& p);

/// Closed form of the top component, pi^j(t^l_l)_{mn} with n = m - l.
double t_top_closed_form(int l, int j, int m, const QParams& p);

/// Closed form of the modified coupling coefficient [l l 0, j n lambda | j m lambda]_q
/// appearing in the reduced-matrix-element derivation (n = m - l).
double t_top_cgc_closed_form(int l, int j, int m, const QParams& p);

struct ClosedFormReport {
    int l = 0, j = 0;
    double top_vs_closed_form = 0.0;   // entrywise residual of pi(t^l_l)
    double ratio_spread = 0.0;         // m-dependence of built / closed-form-CGC
    double ratio_vs_alpha = 0.0;       // that ratio against the closed-form alpha
    double alpha_closed = 0.0;
    double alpha_ratio = 0.0;          // the measured m-independent ratio
    double max_resid() const;
};

/// Three-way consistency check of the closed forms against the built family.
ClosedFormReport verify_closed_forms(int l, int j, Parity lambda, const QParams& p);

/// Convention translation between the artifact's Euclidean-normalized coupled
/// basis and the closed-form coupling coefficients: the m-independent ratio of
/// the two, measured on the top slice of block j of the (l x j) coupling.
double cgc_convention_scale(int l, int j, Parity lambda, const QParams& p);

struct CenterElementReport {
    double scalar = 0.0;             // best-fit c with C = c Id
    double deviation_from_scalar = 0.0;
    double max_centrality_resid = 0.0;  // graded commutators with all generators
};

/// Builds sum_m C^j_{m,-m}(0)/sqrt([2j+1]) pi(t^j_m) pi(t^j_{-m}) in `rep`
/// (an even matrix) for even j.
GradedMatrix center_element(int j, const Irrep& rep);

/// Scalar-ness and graded-centrality measurements of the center element.
CenterElementReport verify_center_element(int j, const Irrep& rep);

}  // namespace ospq
