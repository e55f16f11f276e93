#include "ospq/irreps.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ospq {

IrrepLabel::IrrepLabel(int l_, Parity lambda_, int phi_, int psi_)
    : l(l_), lambda(lambda_), phi(phi_ & 1), psi(psi_ & 1) {
    if (l_ < 0) {
        throw std::invalid_argument("IrrepLabel: l must be a non-negative integer");
    }
}

std::vector<int> Irrep::ms() const {
    std::vector<int> out(static_cast<std::size_t>(dim()));
    for (int i = 0; i < dim(); ++i) out[static_cast<std::size_t>(i)] = label.l - i;
    return out;
}

Irrep build_irrep(const IrrepLabel& label, const QParams& p) {
    const int l = label.l;
    const int d = 2 * l + 1;
    const double g = p.gamma();

    ParityVec parities;
    parities.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const int m = l - i;
        parities.emplace_back(l - m + label.lambda.value());
    }

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
    Eigen::MatrixXd qh = Eigen::MatrixXd::Zero(d, d);
    Eigen::MatrixXd qhi = Eigen::MatrixXd::Zero(d, d);
    Eigen::MatrixXd vp = Eigen::MatrixXd::Zero(d, d);
    Eigen::MatrixXd vm = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const int m = l - i;
        h(i, i) = 0.5 * m;
        qh(i, i) = std::pow(p.q(), 0.5 * m);
        qhi(i, i) = std::pow(p.q(), -0.5 * m);
        if (m < l) {
            const double sgn = ((l - m) % 2 == 0) ? 1.0 : -1.0;
            vp(i - 1, i) = sgn * std::sqrt(super_bracket(l - m, p) * super_bracket(l + m + 1, p) * g);
        }
        if (m > -l) {
            vm(i + 1, i) = std::sqrt(super_bracket(l + m, p) * super_bracket(l - m + 1, p) * g);
        }
    }

    Eigen::VectorXd form(d);
    for (int i = 0; i < d; ++i) {
        const int m = l - i;
        form(i) = ((label.phi * (l - m) + label.psi) % 2 == 0) ? 1.0 : -1.0;
    }

    GeneratorImages gens{
        GradedMatrix(std::move(h), parities, parities, Parity(0)),
        GradedMatrix(std::move(vp), parities, parities, Parity(1)),
        GradedMatrix(std::move(vm), parities, parities, Parity(1)),
        GradedMatrix(std::move(qh), parities, parities, Parity(0)),
        GradedMatrix(std::move(qhi), parities, parities, Parity(0)),
    };
    return Irrep{label, p, std::move(gens), std::move(form)};
}

DefiningRelationsReport verify_defining_relations(const Irrep& rep) {
    const auto& g = rep.gens;
    const double eta = rep.params.eta();
    const int d = static_cast<int>(rep.dim());

    DefiningRelationsReport report;

    for (int s : {+1, -1}) {
        const GradedMatrix& v = (s > 0) ? g.v_plus : g.v_minus;
        Eigen::MatrixXd lhs = g.h.mat * v.mat - v.mat * g.h.mat - 0.5 * s * v.mat;
        const double scale = std::max(1.0e-300, v.mat.norm());
        report.commutator_resid =
            std::max(report.commutator_resid, scale > 0 ? lhs.norm() / scale : lhs.norm());
    }

    Eigen::MatrixXd anti = g.v_plus.mat * g.v_minus.mat + g.v_minus.mat * g.v_plus.mat;
    Eigen::MatrixXd target = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const int m = rep.label.l - i;
        target(i, i) = -std::sinh(eta * m / 2.0) / std::sinh(2.0 * eta);
    }
    const double scale = std::max({anti.norm(), target.norm(), 1.0e-300});
    report.anticommutator_resid = (anti - target).norm() / scale;
    return report;
}

namespace {

double classical_raising(int l, int m) {
    return ((l - m) % 2 == 0) ? 0.5 * std::sqrt(double(l - m)) : -0.5 * std::sqrt(double(l + m + 1));
}

double classical_lowering(int l, int m) {
    return ((l - m) % 2 == 0) ? 0.5 * std::sqrt(double(l + m)) : 0.5 * std::sqrt(double(l - m + 1));
}

}  // namespace

ClassicalLimitProfile classical_limit_profile(int l, const std::vector<double>& eta_grid) {
    if (l < 0) throw std::invalid_argument("classical_limit_profile: l must be non-negative");
    ClassicalLimitProfile profile;
    profile.l = l;
    for (double eta : eta_grid) {
        if (!(eta > 0.0)) {
            throw std::invalid_argument("classical_limit_profile: eta values must be positive");
        }
        const double q = std::exp(-0.5 * eta);
        QParams p(q);
        Irrep rep = build_irrep(IrrepLabel(l, Parity(0)), p);
        double max_err = 0.0;
        // raising coefficient e_m -> e_{m+1} sits at (row l-m-1, col l-m)
        auto cp = [&](int m) { return rep.gens.v_plus.mat(l - m - 1, l - m); };
        auto cm = [&](int m) { return rep.gens.v_minus.mat(l - m + 1, l - m); };
        for (int m = -l + 1; m < l; ++m) {
            ClassicalLimitRow row;
            row.eta = eta;
            row.m = m;
            row.raising_ratio = cp(m) / cp(m - 1);
            row.raising_classical = classical_raising(l, m) / classical_raising(l, m - 1);
            row.lowering_ratio = cm(m + 1) / cm(m);
            row.lowering_classical = classical_lowering(l, m + 1) / classical_lowering(l, m);
            row.max_err = std::max(std::abs(row.raising_ratio - row.raising_classical),
                                   std::abs(row.lowering_ratio - row.lowering_classical));
            max_err = std::max(max_err, row.max_err);
            profile.rows.push_back(row);
        }
        profile.max_err_per_eta.push_back(max_err);
    }
    return profile;
}

}  // namespace ospq
