#include "ospq/coupling.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ospq/errors.hpp"

namespace ospq {

const CGCBlock& CGCTable::block(int l) const {
    for (const auto& b : blocks) {
        if (b.l == l) return b;
    }
    throw std::invalid_argument("CGCTable: no block with l = " + std::to_string(l));
}

int CGCTable::product_index(int m1, int m2) const {
    return (l1 - m1) * dim2() + (l2 - m2);
}

double CGCTable::coefficient(int l, int m1, int m2, int m) const {
    if (m1 + m2 != m || l < std::abs(l1 - l2) || l > l1 + l2 || std::abs(m) > l) return 0.0;
    if (std::abs(m1) > l1 || std::abs(m2) > l2) return 0.0;
    return block(l).coeffs(product_index(m1, m2), l - m);
}

Eigen::MatrixXd CGCTable::stacked() const {
    const int dim = dim1() * dim2();
    Eigen::MatrixXd p(dim, dim);
    int col = 0;
    for (const auto& b : blocks) {
        p.middleCols(col, b.coeffs.cols()) = b.coeffs;
        col += static_cast<int>(b.coeffs.cols());
    }
    return p;
}

GradedMatrix tensor_rep(const Irrep& rep1, const Irrep& rep2, Gen g) {
    if (rep1.params.q() != rep2.params.q()) {
        throw std::invalid_argument("tensor_rep: mismatched QParams");
    }
    const double q = rep1.params.q();
    ParityVec parities = tensor_parities(rep1.basis_parities(), rep2.basis_parities());
    GradedMatrix acc = graded_zero(parities, parities, gen_parity(g));
    acc.degree = std::nullopt;
    for (const auto& t : coproduct_terms(g, q)) {
        GradedMatrix left = realize_word(t.left, rep1.gens, t.coeff);
        GradedMatrix right = realize_word(t.right, rep2.gens);
        acc.mat += graded_tensor(left, right).mat;
    }
    acc.degree = gen_parity(g);
    return acc;
}

GeneratorImages tensor_module(const Irrep& rep1, const Irrep& rep2) {
    return GeneratorImages{tensor_rep(rep1, rep2, Gen::H),  tensor_rep(rep1, rep2, Gen::Vplus),
                           tensor_rep(rep1, rep2, Gen::Vminus), tensor_rep(rep1, rep2, Gen::QH),
                           tensor_rep(rep1, rep2, Gen::QHinv)};
}

CGCTable decompose(const Irrep& rep1, const Irrep& rep2) {
    const int l1 = rep1.label.l;
    const int l2 = rep2.label.l;
    const int d1 = 2 * l1 + 1;
    const int d2 = 2 * l2 + 1;
    const int dim = d1 * d2;
    const QParams& p = rep1.params;
    const double tol = p.tol();

    GradedMatrix raise = tensor_rep(rep1, rep2, Gen::Vplus);
    GradedMatrix lower = tensor_rep(rep1, rep2, Gen::Vminus);

    CGCTable table;
    table.l1 = l1;
    table.l2 = l2;
    table.lambda1 = rep1.label.lambda;
    table.lambda2 = rep2.label.lambda;
    table.q = p.q();

    for (int l = l1 + l2; l >= std::abs(l1 - l2); --l) {
        // support of the weight-l subspace: pairs (m1, l - m1), ordered by m1
        std::vector<int> idx;
        for (int m1 = std::max(-l1, l - l2); m1 <= std::min(l1, l + l2); ++m1) {
            idx.push_back(table.product_index(m1, l - m1));
        }
        // The raising action couples adjacent support entries pairwise (each
        // weight-(l+1) image component receives from at most two of them), so
        // the one-dimensional nullspace follows from an exact ratio recursion,
        // which keeps every entry accurate relative to its own size.
        Eigen::VectorXd chain = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(idx.size()));
        chain(0) = 1.0;
        for (std::size_t c = 1; c < idx.size(); ++c) {
            // the image component fed by both idx[c-1] and idx[c]
            const int m1 = std::max(-l1, l - l2) + static_cast<int>(c);
            const int out = table.product_index(m1, l + 1 - m1);
            const double a = raise.mat(out, idx[c - 1]);
            const double b = raise.mat(out, idx[c]);
            if (b == 0.0) {
                throw DegenerateNullspace("decompose: broken raising chain in block " +
                                          std::to_string(l));
            }
            chain(static_cast<Eigen::Index>(c)) =
                -a * chain(static_cast<Eigen::Index>(c - 1)) / b;
        }
        Eigen::VectorXd highest = Eigen::VectorXd::Zero(dim);
        for (std::size_t c = 0; c < idx.size(); ++c) {
            highest(idx[c]) = chain(static_cast<Eigen::Index>(c));
        }
        highest.normalize();
        // nullspace verification: the recursion makes this the only candidate
        // direction, so annihilation confirms a one-dimensional nullspace
        const double raise_scale = std::max(raise.mat.norm(), 1.0);
        if ((raise.mat * highest).norm() > std::max(tol, 1e-12) * raise_scale) {
            throw DegenerateNullspace("decompose: weight-" + std::to_string(l) +
                                      " chain vector fails to span the raising nullspace");
        }
        // phase: coefficient on e^{l1}_{l1} x e^{l2}_{l-l1} strictly positive
        const double lead = highest(0 * d2 + (l2 - (l - l1)));
        if (lead == 0.0) {
            throw DegenerateNullspace("decompose: vanishing leading coefficient in block " +
                                      std::to_string(l));
        }
        if (lead < 0.0) highest = -highest;

        CGCBlock block;
        block.l = l;
        block.lambda = Parity(l1 + l2 + l + rep1.label.lambda.value() + rep2.label.lambda.value());
        block.L = l1 + l2 + l;
        block.coeffs.resize(dim, 2 * l + 1);
        block.coeffs.col(0) = highest;
        Eigen::VectorXd v = highest;
        for (int m = l; m > -l; --m) {
            const double c =
                std::sqrt(super_bracket(l + m, p) * super_bracket(l - m + 1, p) * p.gamma());
            v = (lower.mat * v) / c;
            block.coeffs.col(l - (m - 1)) = v;
        }
        table.blocks.push_back(std::move(block));
    }
    return table;
}

namespace {

double modification_phase(int l1, int m1, int l2, int m2, int l, int m) {
    const long e = static_cast<long>(l1 - m1) * (l2 - m2) +
                   static_cast<long>(l - m) * (l1 + l2 + l);
    return (e % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

CGCTable modified_cgc(const CGCTable& table) {
    CGCTable out = table;
    out.modified = !table.modified;
    for (auto& b : out.blocks) {
        for (int i = 0; i < out.dim1(); ++i) {
            for (int k = 0; k < out.dim2(); ++k) {
                const int m1 = out.l1 - i;
                const int m2 = out.l2 - k;
                for (int c = 0; c < b.coeffs.cols(); ++c) {
                    const int m = b.l - c;
                    b.coeffs(i * out.dim2() + k, c) *=
                        modification_phase(out.l1, m1, out.l2, m2, b.l, m);
                }
            }
        }
    }
    return out;
}

std::vector<Eigen::VectorXd> invariant_vectors(const Irrep& rep1, const Irrep& rep2) {
    GradedMatrix h = tensor_rep(rep1, rep2, Gen::H);
    GradedMatrix vp = tensor_rep(rep1, rep2, Gen::Vplus);
    GradedMatrix vm = tensor_rep(rep1, rep2, Gen::Vminus);
    const Eigen::Index dim = h.rows();
    Eigen::MatrixXd stacked(3 * dim, dim);
    stacked << h.mat, vp.mat, vm.mat;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    const double tol = rep1.params.tol();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > std::max(tol * smax, 1e-12)) ++rank;
    }
    std::vector<Eigen::VectorXd> out;
    for (Eigen::Index c = rank; c < dim; ++c) {
        out.push_back(svd.matrixV().col(c));
    }
    return out;
}

double invariant_metric_coefficient(int l, int m, int n, Parity lambda, double q) {
    if (m + n != 0 || std::abs(m) > l) return 0.0;
    const long e = static_cast<long>(l - m) * lambda.value() +
                   static_cast<long>(l - m) * (l - m - 1) / 2;
    const double sign = (e % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(q, 0.5 * m);
}

std::vector<CouplingCheckReport> verify_blocks(const CGCTable& table, const Irrep& rep1,
                                               const Irrep& rep2) {
    if (table.modified) {
        throw std::invalid_argument("verify_blocks: expects a standard (unmodified) table");
    }
    const QParams& p = rep1.params;
    Eigen::MatrixXd stacked = table.stacked();
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(stacked);
    Eigen::MatrixXd inv = lu.inverse();

    std::vector<CouplingCheckReport> reports;
    int col = 0;
    for (const auto& b : table.blocks) {
        CouplingCheckReport rep;
        rep.l = b.l;
        Irrep fresh = build_irrep(IrrepLabel(b.l, b.lambda), p);
        const int bd = 2 * b.l + 1;
        for (Gen g : {Gen::H, Gen::Vplus, Gen::Vminus, Gen::QH}) {
            Eigen::MatrixXd action = tensor_rep(rep1, rep2, g).mat;
            Eigen::MatrixXd reduced =
                inv.middleRows(col, bd) * action * stacked.middleCols(col, bd);
            Eigen::MatrixXd expected = realize_word({g}, fresh.gens).mat;
            const double scale = std::max(expected.norm(), 1e-300);
            rep.intertwining_resid =
                std::max(rep.intertwining_resid, (reduced - expected).norm() / scale);
        }
        // parity coherence: every product term in e^l_m has parity (l - m + lambda)
        for (int c = 0; c < bd; ++c) {
            const int m = b.l - c;
            const Parity expect = Parity(b.l - m + b.lambda.value());
            for (int i = 0; i < table.dim1(); ++i) {
                for (int k = 0; k < table.dim2(); ++k) {
                    const double v = b.coeffs(i * table.dim2() + k, c);
                    const Parity par = rep1.basis_parities()[static_cast<std::size_t>(i)] +
                                       rep2.basis_parities()[static_cast<std::size_t>(k)];
                    if (par != expect) {
                        rep.parity_violation = std::max(rep.parity_violation, std::abs(v));
                    }
                }
            }
        }
        reports.push_back(rep);
        col += bd;
    }
    return reports;
}

RoundTrip round_trip(const CGCTable& table) {
    Eigen::MatrixXd stacked = table.stacked();
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(stacked);
    Eigen::MatrixXd inv = lu.inverse();
    RoundTrip out;
    out.error = (stacked * inv - Eigen::MatrixXd::Identity(stacked.rows(), stacked.cols())).norm();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
    const auto& sv = svd.singularValues();
    out.condition = sv(0) / sv(sv.size() - 1);
    return out;
}

}  // namespace ospq
