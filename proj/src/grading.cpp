#include "ospq/grading.hpp"

#include <stdexcept>
#include <string>

namespace ospq {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

GradedMatrix::GradedMatrix(Eigen::MatrixXd m, ParityVec rows, ParityVec cols,
                           std::optional<Parity> deg)
    : mat(std::move(m)), row_parity(std::move(rows)), col_parity(std::move(cols)), degree(deg) {
    require(static_cast<Eigen::Index>(row_parity.size()) == mat.rows(),
            "GradedMatrix: row parity size mismatch");
    require(static_cast<Eigen::Index>(col_parity.size()) == mat.cols(),
            "GradedMatrix: col parity size mismatch");
    if (degree) {
        require(pattern_matches(mat, row_parity, col_parity, *degree),
                "GradedMatrix: entries violate the homogeneous parity pattern");
    }
}

bool GradedMatrix::pattern_matches(const Eigen::MatrixXd& m, const ParityVec& rows,
                                   const ParityVec& cols, Parity deg) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (m(i, j) != 0.0 && rows[i] + cols[j] != deg) return false;
        }
    }
    return true;
}

GradedMatrix graded_identity(const ParityVec& parities) {
    const auto n = static_cast<Eigen::Index>(parities.size());
    return GradedMatrix(Eigen::MatrixXd::Identity(n, n), parities, parities, Parity(0));
}

GradedMatrix graded_zero(const ParityVec& rows, const ParityVec& cols, Parity deg) {
    return GradedMatrix(
        Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                              static_cast<Eigen::Index>(cols.size())),
        rows, cols, deg);
}

GradedMatrix graded_compose(const GradedMatrix& a, const GradedMatrix& b) {
    require(a.mat.cols() == b.mat.rows(), "graded_compose: dimension mismatch");
    require(a.col_parity == b.row_parity, "graded_compose: parity mismatch at the interface");
    std::optional<Parity> deg;
    if (a.degree && b.degree) deg = *a.degree + *b.degree;
    return GradedMatrix(a.mat * b.mat, a.row_parity, b.col_parity, deg);
}

GradedMatrix graded_add(const GradedMatrix& a, const GradedMatrix& b, double c) {
    require(a.mat.rows() == b.mat.rows() && a.mat.cols() == b.mat.cols(),
            "graded_add: dimension mismatch");
    require(a.row_parity == b.row_parity && a.col_parity == b.col_parity,
            "graded_add: parity mismatch");
    std::optional<Parity> deg;
    if (a.degree && b.degree && *a.degree == *b.degree) deg = *a.degree;
    return GradedMatrix(a.mat + c * b.mat, a.row_parity, a.col_parity, deg);
}

ParityVec tensor_parities(const ParityVec& a, const ParityVec& b) {
    ParityVec out;
    out.reserve(a.size() * b.size());
    for (Parity pa : a) {
        for (Parity pb : b) out.push_back(pa + pb);
    }
    return out;
}

GradedMatrix graded_tensor(const GradedMatrix& a, const GradedMatrix& b) {
    require(a.degree.has_value() && b.degree.has_value(),
            "graded_tensor: both factors must be homogeneous");
    const Parity db = *b.degree;
    // Column-dependent Koszul sign folded into A before the Kronecker product.
    Eigen::MatrixXd a_signed = a.mat;
    if (db == Parity(1)) {
        for (Eigen::Index j = 0; j < a_signed.cols(); ++j) {
            if (a.col_parity[static_cast<std::size_t>(j)] == Parity(1)) a_signed.col(j) *= -1.0;
        }
    }
    Eigen::MatrixXd out(a.mat.rows() * b.mat.rows(), a.mat.cols() * b.mat.cols());
    for (Eigen::Index i = 0; i < a.mat.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.mat.cols(); ++j) {
            out.block(i * b.mat.rows(), j * b.mat.cols(), b.mat.rows(), b.mat.cols()) =
                a_signed(i, j) * b.mat;
        }
    }
    return GradedMatrix(std::move(out), tensor_parities(a.row_parity, b.row_parity),
                        tensor_parities(a.col_parity, b.col_parity), *a.degree + db);
}

GradedMatrix graded_commutator(const GradedMatrix& a, const GradedMatrix& b) {
    require(a.degree.has_value() && b.degree.has_value(),
            "graded_commutator: both inputs must be homogeneous");
    const double sign = (*a.degree == Parity(1) && *b.degree == Parity(1)) ? -1.0 : 1.0;
    GradedMatrix ab = graded_compose(a, b);
    GradedMatrix ba = graded_compose(b, a);
    return graded_add(ab, ba, -sign);
}

}  // namespace ospq
