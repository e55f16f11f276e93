#include "ospq/adjointops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ospq/errors.hpp"
#include "ospq/hopfrep.hpp"

namespace ospq {

const GradedMatrix& AdjointFamily::component(int m) const {
    if (m < -l || m > l) throw std::invalid_argument("AdjointFamily: m out of range");
    return components[static_cast<std::size_t>(l - m)];
}

bool AdjointFamily::is_zero(double eps) const {
    for (const auto& c : components) {
        if (c.mat.norm() > eps) return false;
    }
    return true;
}

AdjointFamily build_t_family(int l, const Irrep& rep) {
    if (l < 2 || l % 2 != 0) {
        throw std::invalid_argument("build_t_family: l must be an even integer >= 2");
    }
    const QParams& p = rep.params;

    AdjointFamily fam;
    fam.l = l;
    fam.rep_label = rep.label;

    // top component pi(v+)^l pi(q^H)^l
    GradedMatrix top = graded_identity(rep.basis_parities());
    for (int k = 0; k < l; ++k) top = graded_compose(top, rep.gens.v_plus);
    for (int k = 0; k < l; ++k) top = graded_compose(top, rep.gens.q_h);
    fam.components.push_back(top);

    for (int m = l; m > -l; --m) {
        const double c =
            std::sqrt(super_bracket(l + m, p) * super_bracket(l - m + 1, p) * p.gamma());
        GradedMatrix next = ad_action(Gen::Vminus, fam.components.back(), rep);
        next.mat /= c;
        // component m-1 is homogeneous of degree (m-1) mod 2; the ad image
        // already carries that tag, reconstructing revalidates the pattern
        fam.components.emplace_back(next.mat, next.row_parity, next.col_parity, Parity(m - 1));
    }

    // back-checks: raising (signed, gamma-weighted coefficients) and weight.
    // Residuals are relative to the norm of the operator products entering
    // each identity, which is the scale cancellation happens against.
    const double vp_scale = rep.gens.v_plus.mat.norm() * rep.gens.q_h_inv.mat.norm();
    const double h_scale = std::max(1.0, 2.0 * rep.gens.h.mat.norm());
    for (int m = -l; m <= l; ++m) {
        const GradedMatrix& comp = fam.component(m);
        GradedMatrix raised = ad_action(Gen::Vplus, comp, rep);
        Eigen::MatrixXd expected;
        if (m == l) {
            expected = Eigen::MatrixXd::Zero(rep.dim(), rep.dim());
        } else {
            const double sgn = ((l - m) % 2 == 0) ? 1.0 : -1.0;
            const double c =
                std::sqrt(super_bracket(l - m, p) * super_bracket(l + m + 1, p) * p.gamma());
            expected = sgn * c * fam.component(m + 1).mat;
        }
        const double scale = std::max(1e-300, vp_scale * comp.mat.norm());
        fam.raising_resid = std::max(fam.raising_resid, (raised.mat - expected).norm() / scale);

        GradedMatrix weighted = ad_action(Gen::H, comp, rep);
        fam.weight_resid =
            std::max(fam.weight_resid, (weighted.mat - 0.5 * m * comp.mat).norm() /
                                           std::max(1e-300, h_scale * comp.mat.norm()));
    }
    if (!fam.is_zero(1e-300) && fam.raising_resid > p.tol()) {
        throw ResidualTooLarge("build_t_family: raising back-check residual " +
                               std::to_string(fam.raising_resid));
    }
    return fam;
}

ReducedAlpha reduced_alpha_closed_form(int l, int j, const QParams& p) {
    if (l < 2 || l % 2 != 0) {
        throw std::invalid_argument("reduced_alpha_closed_form: l must be even and >= 2");
    }
    if (j < 0) throw std::invalid_argument("reduced_alpha_closed_form: j must be non-negative");
    ReducedAlpha out;
    if (2 * j < l) {
        out.degenerate = true;
        out.value = 0.0;
        return out;
    }
    const double sign = ((l * (l + 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    out.value = sign * std::pow(p.q(), -0.25 * l * (l + 1)) * super_factorial(l, p) *
                std::sqrt(super_factorial(2 * j + l + 1, p) /
                          (super_factorial(2 * l, p) * super_factorial(2 * j - l, p) *
                           super_factorial(2 * j + 1, p)) *
                          std::pow(p.gamma(), l));
    return out;
}

double t_top_closed_form(int l, int j, int m, const QParams& p) {
    const int n = m - l;
    if (m < -j || m > j || n < -j || n > j) return 0.0;
    const long e = static_cast<long>(l) * (l + 1) / 2 + static_cast<long>(l) * (j - m + l);
    const double sign = (e % 2 == 0) ? 1.0 : -1.0;
    return sign *
           std::sqrt(super_factorial(j - m + l, p) * super_factorial(j + m, p) /
                     (super_factorial(j + m - l, p) * super_factorial(j - m, p)) *
                     std::pow(p.gamma(), l)) *
           std::pow(p.q(), 0.5 * l * (m - l));
}

double t_top_cgc_closed_form(int l, int j, int m, const QParams& p) {
    const int n = m - l;
    if (m < -j || m > j || n < -j || n > j) return 0.0;
    return std::pow(p.q(), -0.5 * n) *
           std::pow(p.q(), 0.25 * (2 * j - l) * (l + 1) - 0.5 * (j - m) * (l + 1)) *
           std::sqrt(super_factorial(2 * j + 1, p) * super_factorial(2 * l, p) *
                     super_factorial(2 * j - l, p) * super_factorial(j + m, p) *
                     super_factorial(j - m + l, p) /
                     (super_factorial(2 * j + l + 1, p) * super_factorial(l, p) *
                      super_factorial(l, p) * super_factorial(j - m, p) *
                      super_factorial(j + m - l, p)));
}

double ClosedFormReport::max_resid() const {
    return std::max({top_vs_closed_form, ratio_spread, ratio_vs_alpha});
}

ClosedFormReport verify_closed_forms(int l, int j, Parity lambda, const QParams& p) {
    if (2 * j < l) {
        throw std::invalid_argument("verify_closed_forms: requires 2j >= l");
    }
    Irrep rep = build_irrep(IrrepLabel(j, lambda), p);
    AdjointFamily fam = build_t_family(l, rep);
    const GradedMatrix& top = fam.component(l);

    ClosedFormReport report;
    report.l = l;
    report.j = j;

    // (i) entrywise comparison with the closed form, delta_{m, n+l} support
    Eigen::MatrixXd closed = Eigen::MatrixXd::Zero(rep.dim(), rep.dim());
    for (int mi = 0; mi < rep.dim(); ++mi) {
        const int m = j - mi;
        const int n = m - l;
        if (n >= -j && n <= j) closed(mi, j - n) = t_top_closed_form(l, j, m, p);
    }
    report.top_vs_closed_form = (top.mat - closed).norm() / std::max(closed.norm(), 1e-300);

    // (ii) the ratio built / closed-form coupling coefficient is m-independent
    double rmin = 0.0, rmax = 0.0, rsum = 0.0;
    int count = 0;
    for (int m = -j + l; m <= j; ++m) {
        const int n = m - l;
        const double built = top.mat(j - m, j - n);
        const double cgc = t_top_cgc_closed_form(l, j, m, p);
        const double r = built / cgc;
        if (count == 0) {
            rmin = rmax = r;
        } else {
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
        }
        rsum += r;
        ++count;
    }
    const double rmean = rsum / count;
    report.alpha_ratio = rmean;
    report.ratio_spread = (rmax - rmin) / std::max(std::abs(rmean), 1e-300);

    // (iii) that ratio equals the closed-form reduced matrix element
    ReducedAlpha alpha = reduced_alpha_closed_form(l, j, p);
    report.alpha_closed = alpha.value;
    report.ratio_vs_alpha = std::abs(rmean - alpha.value) / std::max(std::abs(alpha.value), 1e-300);
    return report;
}

double cgc_convention_scale(int l, int j, Parity lambda, const QParams& p) {
    if (2 * j < l) throw std::invalid_argument("cgc_convention_scale: requires 2j >= l");
    Irrep op_rep = build_irrep(IrrepLabel(l, Parity(0)), p);
    Irrep rep = build_irrep(IrrepLabel(j, lambda), p);
    CGCTable table = modified_cgc(decompose(op_rep, rep));
    // top slice m = j (coupled highest of block j), operator index m1 = l
    const double mine = table.coefficient(j, l, j - l, j);
    const double printed = t_top_cgc_closed_form(l, j, j, p);
    return std::abs(mine / printed);
}

GradedMatrix center_element(int j, const Irrep& rep) {
    if (j < 2 || j % 2 != 0) {
        throw std::invalid_argument("center_element: j must be an even integer >= 2");
    }
    const QParams& p = rep.params;
    AdjointFamily fam = build_t_family(j, rep);
    // ordinary q-number [2j+1] (the geometric sum of q^m), used by the
    // invariant-metric normalization
    double qsum = 0.0;
    for (int m = -j; m <= j; ++m) qsum += std::pow(p.q(), m);
    const double norm = std::sqrt(qsum);

    GradedMatrix acc = graded_zero(rep.basis_parities(), rep.basis_parities(), Parity(0));
    acc.degree = std::nullopt;
    for (int m = -j; m <= j; ++m) {
        const double c = invariant_metric_coefficient(j, m, -m, Parity(0), p.q()) / norm;
        acc.mat += c * (fam.component(m).mat * fam.component(-m).mat);
    }
    acc.degree = Parity(0);
    if (!GradedMatrix::pattern_matches(acc.mat, acc.row_parity, acc.col_parity, Parity(0))) {
        throw std::logic_error("center_element: result is not even");
    }
    return acc;
}

CenterElementReport verify_center_element(int j, const Irrep& rep) {
    GradedMatrix c = center_element(j, rep);
    CenterElementReport report;
    const auto d = rep.dim();
    report.scalar = c.mat.trace() / static_cast<double>(d);
    Eigen::MatrixXd dev = c.mat - report.scalar * Eigen::MatrixXd::Identity(d, d);
    const double scale = std::max(c.mat.norm(), 1.0);
    report.deviation_from_scalar = dev.norm() / scale;
    for (Gen g : {Gen::H, Gen::Vplus, Gen::Vminus, Gen::QH, Gen::QHinv}) {
        GradedMatrix image = realize_word({g}, rep.gens);
        GradedMatrix comm = graded_commutator(c, image);
        report.max_centrality_resid =
            std::max(report.max_centrality_resid, comm.mat.norm() / scale);
    }
    return report;
}

}  // namespace ospq
