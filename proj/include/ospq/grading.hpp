#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace ospq {

/// Element of Z2. Addition is mod 2.
class Parity {
public:
    constexpr Parity() : v_(0) {}
    constexpr Parity(int v) : v_(v & 1) {}

    constexpr int value() const { return v_; }
    constexpr double sign() const { return v_ ? -1.0 : 1.0; }

    friend constexpr Parity operator+(Parity a, Parity b) { return Parity(a.v_ ^ b.v_); }
    friend constexpr bool operator==(Parity a, Parity b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Parity a, Parity b) { return a.v_ != b.v_; }

private:
    int v_;
};

using ParityVec = std::vector<Parity>;

/// Dense real matrix together with the parities of its output and input basis
/// vectors and, when homogeneous, its degree. A homogeneous matrix may have
/// nonzero entries only where row and column parity differ by the degree.
struct GradedMatrix {
    Eigen::MatrixXd mat;
    ParityVec row_parity;
    ParityVec col_parity;
    std::optional<Parity> degree;

    GradedMatrix() = default;
    GradedMatrix(Eigen::MatrixXd m, ParityVec rows, ParityVec cols,
                 std::optional<Parity> deg = std::nullopt);

    Eigen::Index rows() const { return mat.rows(); }
    Eigen::Index cols() const { return mat.cols(); }

    bool is_square() const { return mat.rows() == mat.cols(); }

    /// Checks the parity support pattern against `deg` without constructing.
    static bool pattern_matches(const Eigen::MatrixXd& m, const ParityVec& rows,
                                const ParityVec& cols, Parity deg);
};

/// Identity on a space with the given basis parities (degree 0).
GradedMatrix graded_identity(const ParityVec& parities);

/// Zero map between graded spaces, homogeneous of the given degree.
GradedMatrix graded_zero(const ParityVec& rows, const ParityVec& cols, Parity deg);

/// Ordinary matrix product; requires col parities of A to equal row parities
/// of B. Degree adds when both factors are homogeneous.
GradedMatrix graded_compose(const GradedMatrix& a, const GradedMatrix& b);

/// Scaled sum a + c*b on matching parity data.
GradedMatrix graded_add(const GradedMatrix& a, const GradedMatrix& b, double c = 1.0);

/// Koszul-signed tensor product of homogeneous matrices:
///   entry[(i,k),(j,l)] = (-1)^{deg(B) * col_parity_A[j]} A[i,j] B[k,l]
/// with tensor index (i,k) -> i*cols(B)+k and parities adding entrywise.
GradedMatrix graded_tensor(const GradedMatrix& a, const GradedMatrix& b);

/// AB - (-1)^{deg(A) deg(B)} BA for homogeneous square inputs.
GradedMatrix graded_commutator(const GradedMatrix& a, const GradedMatrix& b);

/// Parities of the tensor-product basis, index (i,k) -> i*b.size()+k.
ParityVec tensor_parities(const ParityVec& a, const ParityVec& b);

}  // namespace ospq
