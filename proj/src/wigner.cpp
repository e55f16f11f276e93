#include "ospq/wigner.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ospq/errors.hpp"

namespace ospq {

double NullspaceInfo::gap() const {
    if (largest_dropped <= 0.0) return std::numeric_limits<double>::infinity();
    return smallest_kept / largest_dropped;
}

namespace {

bool is_diagonal(const Eigen::MatrixXd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i != j && m(i, j) != 0.0) return false;
        }
    }
    return true;
}

}  // namespace

IntertwinerBasis intertwiner_basis(const GeneratorImages& a, const GeneratorImages& b,
                                   Parity degree, double tol, bool include_group_like) {
    if (!is_diagonal(a.h.mat) || !is_diagonal(b.h.mat)) {
        throw std::invalid_argument("intertwiner_basis: weight operators must be diagonal");
    }
    const Eigen::Index da = a.dim();
    const Eigen::Index db = b.dim();
    const Eigen::VectorXd wa = a.weights();
    const Eigen::VectorXd wb = b.weights();
    const ParityVec& pa = a.parities();
    const ParityVec& pb = b.parities();

    // The H equation forces f to be supported on equal-weight pairs; the
    // requested degree fixes the parity pattern.
    std::vector<std::pair<Eigen::Index, Eigen::Index>> support;
    for (Eigen::Index i = 0; i < db; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            if (std::abs(wb(i) - wa(j)) < 1e-9 &&
                pb[static_cast<std::size_t>(i)] + pa[static_cast<std::size_t>(j)] == degree) {
                support.emplace_back(i, j);
            }
        }
    }

    IntertwinerBasis out;
    if (support.empty()) return out;
    const auto n_unknown = static_cast<Eigen::Index>(support.size());

    std::vector<const GradedMatrix*> gens_a = {&a.v_plus, &a.v_minus};
    std::vector<const GradedMatrix*> gens_b = {&b.v_plus, &b.v_minus};
    std::vector<double> signs = {degree.sign(), degree.sign()};
    if (include_group_like) {
        gens_a.push_back(&a.q_h);
        gens_b.push_back(&b.q_h);
        signs.push_back(1.0);
    }

    Eigen::MatrixXd system =
        Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(gens_a.size()) * db * da, n_unknown);
    for (std::size_t gi = 0; gi < gens_a.size(); ++gi) {
        const Eigen::MatrixXd& ga = gens_a[gi]->mat;
        const Eigen::MatrixXd& gb = gens_b[gi]->mat;
        const double sign = signs[gi];
        const Eigen::Index row0 = static_cast<Eigen::Index>(gi) * db * da;
        for (Eigen::Index u = 0; u < n_unknown; ++u) {
            const auto [i, j] = support[static_cast<std::size_t>(u)];
            // f[i,j] contributes to (f ga)[i, c] and to (gb f)[r, j]
            for (Eigen::Index c = 0; c < da; ++c) {
                if (ga(j, c) != 0.0) system(row0 + i * da + c, u) += ga(j, c);
            }
            for (Eigen::Index r = 0; r < db; ++r) {
                if (gb(r, i) != 0.0) system(row0 + r * da + j, u) -= sign * gb(r, i);
            }
        }
    }

    Eigen::BDCSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    out.info.sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    const double cut = std::max(tol * out.info.sigma_max, 1e-12);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cut) ++rank;
    }
    out.info.smallest_kept = rank > 0 ? sv(rank - 1) : 0.0;
    out.info.largest_dropped = rank < sv.size() ? sv(rank) : 0.0;

    for (Eigen::Index c = rank; c < n_unknown; ++c) {
        Eigen::MatrixXd f = Eigen::MatrixXd::Zero(db, da);
        for (Eigen::Index u = 0; u < n_unknown; ++u) {
            const auto [i, j] = support[static_cast<std::size_t>(u)];
            f(i, j) = svd.matrixV()(u, c);
        }
        out.basis.emplace_back(std::move(f), pb, pa, degree);
    }
    return out;
}

const GradedMatrix& TensorOperatorFamily::component(int m1) const {
    if (m1 < -l1 || m1 > l1) {
        throw std::invalid_argument("TensorOperatorFamily: m1 out of range");
    }
    return components[static_cast<std::size_t>(l1 - m1)];
}

double TensorOperatorFamily::norm() const {
    double s = 0.0;
    for (const auto& c : components) s += c.mat.squaredNorm();
    return std::sqrt(s);
}

TensorOperatorSolve tensor_operator_basis(int l1, Parity lambda1, const Irrep& rep2,
                                          const Irrep& rep3, Parity degree) {
    if (l1 < 0) throw std::invalid_argument("tensor_operator_basis: l1 must be non-negative");
    const QParams& p = rep2.params;
    Irrep op_rep = build_irrep(IrrepLabel(l1, lambda1), p);
    GeneratorImages hom = hom_module(rep2, rep3);
    IntertwinerBasis inter = intertwiner_basis(op_rep.gens, hom, degree, p.tol());

    TensorOperatorSolve out;
    out.info = inter.info;
    const auto d2 = rep2.dim();
    const auto d3 = rep3.dim();
    for (const auto& f : inter.basis) {
        TensorOperatorFamily fam;
        fam.l1 = l1;
        fam.lambda1 = lambda1;
        fam.source = rep2.label;
        fam.target = rep3.label;
        fam.degree = degree;
        for (int c = 0; c < 2 * l1 + 1; ++c) {
            Eigen::MatrixXd comp(d3, d2);
            for (Eigen::Index a = 0; a < d3; ++a) {
                for (Eigen::Index b = 0; b < d2; ++b) {
                    comp(a, b) = f.mat(a * d2 + b, c);
                }
            }
            const Parity comp_degree =
                degree + op_rep.basis_parities()[static_cast<std::size_t>(c)];
            fam.components.emplace_back(std::move(comp), rep3.basis_parities(),
                                        rep2.basis_parities(), comp_degree);
        }
        out.families.push_back(std::move(fam));
    }
    return out;
}

GradedMatrix uncurry(const TensorOperatorFamily& t) {
    const auto& first = t.components.front();
    const Eigen::Index d3 = first.rows();
    const Eigen::Index d2 = first.cols();
    const Eigen::Index d1 = static_cast<Eigen::Index>(t.components.size());
    const ParityVec& p2 = first.col_parity;
    const ParityVec& p3 = first.row_parity;
    ParityVec p1;
    for (Eigen::Index c = 0; c < d1; ++c) {
        p1.emplace_back(static_cast<int>(c) + t.lambda1.value());
    }
    Eigen::MatrixXd out(d3, d1 * d2);
    for (Eigen::Index c = 0; c < d1; ++c) {
        out.middleCols(c * d2, d2) = t.components[static_cast<std::size_t>(c)].mat;
    }
    return GradedMatrix(std::move(out), p3, tensor_parities(p1, p2), t.degree);
}

WignerEckartFit wigner_eckart_fit(const TensorOperatorFamily& t, const CGCTable& table) {
    if (!table.modified) {
        throw std::invalid_argument("wigner_eckart_fit: table must be in the modified convention");
    }
    if (table.l1 != t.l1 || table.lambda1 != t.lambda1 || table.l2 != t.source.l) {
        throw std::invalid_argument("wigner_eckart_fit: table labels do not match the family");
    }
    const double tnorm = t.norm();
    if (tnorm < 1e-14) throw ZeroOperator("wigner_eckart_fit: family is numerically zero");

    const int l3 = t.target.l;
    const int l2 = t.source.l;
    WignerEckartFit fit;
    double num = 0.0, den = 0.0;
    std::vector<double> num_m(t.components.size(), 0.0), den_m(t.components.size(), 0.0);
    for (std::size_t ci = 0; ci < t.components.size(); ++ci) {
        const int m1 = t.l1 - static_cast<int>(ci);
        const auto& comp = t.components[ci].mat;
        for (Eigen::Index r = 0; r < comp.rows(); ++r) {
            const int m3 = l3 - static_cast<int>(r);
            for (Eigen::Index c = 0; c < comp.cols(); ++c) {
                const int m2 = l2 - static_cast<int>(c);
                const double cg = table.coefficient(l3, m1, m2, m3);
                num += comp(r, c) * cg;
                den += cg * cg;
                num_m[ci] += comp(r, c) * cg;
                den_m[ci] += cg * cg;
            }
        }
    }
    if (den == 0.0) throw ZeroOperator("wigner_eckart_fit: coupling block has no support");
    fit.alpha = num / den;
    double rss = 0.0;
    for (std::size_t ci = 0; ci < t.components.size(); ++ci) {
        const int m1 = t.l1 - static_cast<int>(ci);
        const auto& comp = t.components[ci].mat;
        for (Eigen::Index r = 0; r < comp.rows(); ++r) {
            const int m3 = l3 - static_cast<int>(r);
            for (Eigen::Index c = 0; c < comp.cols(); ++c) {
                const int m2 = l2 - static_cast<int>(c);
                const double cg = table.coefficient(l3, m1, m2, m3);
                const double diff = comp(r, c) - fit.alpha * cg;
                rss += diff * diff;
            }
        }
        fit.alpha_per_component.push_back(
            den_m[ci] > 1e-28 ? num_m[ci] / den_m[ci] : std::numeric_limits<double>::quiet_NaN());
    }
    fit.residual = std::sqrt(rss) / tnorm;
    return fit;
}

}  // namespace ospq
