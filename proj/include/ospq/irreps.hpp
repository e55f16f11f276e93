#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ospq/grading.hpp"
#include "ospq/qarith.hpp"

namespace ospq {

/// (l, lambda, phi, psi) identifying a grade-star irrep; epsilon is derived.
struct IrrepLabel {
    int l = 0;
    Parity lambda;
    int phi = 0;
    int psi = 0;

    IrrepLabel() = default;
    IrrepLabel(int l_, Parity lambda_, int phi_ = 0, int psi_ = 0);

    int dimension() const { return 2 * l + 1; }
    Parity epsilon() const { return Parity(lambda.value() + phi + 1); }
};

/// Generator matrices of one module: images of H, v+, v-, q^H, q^{-H}.
/// All five act on the same graded space; H is diagonal with the weights.
struct GeneratorImages {
    GradedMatrix h;
    GradedMatrix v_plus;
    GradedMatrix v_minus;
    GradedMatrix q_h;
    GradedMatrix q_h_inv;

    Eigen::Index dim() const { return h.rows(); }
    const ParityVec& parities() const { return h.row_parity; }
    /// Diagonal of h (weights m/2 for irreps; differences/sums for derived modules).
    Eigen::VectorXd weights() const { return h.mat.diagonal(); }
};

/// A built grade-star irrep: generator matrices, basis parities, and the
/// diagonal signature form (-1)^{phi(l-m)+psi}.
struct Irrep {
    IrrepLabel label;
    QParams params;
    GeneratorImages gens;
    Eigen::VectorXd form;

    Eigen::Index dim() const { return gens.dim(); }
    const ParityVec& basis_parities() const { return gens.parities(); }
    /// Weight of basis row i is ms()[i]; rows are ordered m = l, l-1, ..., -l.
    std::vector<int> ms() const;
};

/// Constructs the 2l+1 dimensional irrep with basis e_m ordered by descending
/// weight (row 0 is the highest weight vector).
Irrep build_irrep(const IrrepLabel& label, const QParams& p);

struct DefiningRelationsReport {
    double commutator_resid = 0.0;      // [H, v+-] -+ v+-/2
    double anticommutator_resid = 0.0;  // {v+, v-} vs -sinh(eta m/2)/sinh(2 eta)
    double max_resid() const { return std::max(commutator_resid, anticommutator_resid); }
};

/// Evaluates both defining relations as matrix residuals, relative to the
/// largest operator norm involved.
DefiningRelationsReport verify_defining_relations(const Irrep& rep);

struct ClassicalLimitRow {
    double eta = 0.0;
    int m = 0;
    double raising_ratio = 0.0;
    double raising_classical = 0.0;
    double lowering_ratio = 0.0;
    double lowering_classical = 0.0;
    double max_err = 0.0;
};

struct ClassicalLimitProfile {
    int l = 0;
    std::vector<ClassicalLimitRow> rows;
    /// Worst ratio error per eta grid point, in grid order.
    std::vector<double> max_err_per_eta;
};

/// Ratios of consecutive raising/lowering matrix elements for a grid of small
/// eta, compared against the ratios of the classical formulas
/// (l-m even: raising ~  (l-m)^{1/2}/2,  lowering ~ (l+m)^{1/2}/2;
///  l-m odd : raising ~ -(l+m+1)^{1/2}/2, lowering ~ (l-m+1)^{1/2}/2).
ClassicalLimitProfile classical_limit_profile(int l, const std::vector<double>& eta_grid);

}  // namespace ospq
