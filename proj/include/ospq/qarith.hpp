#pragma once

#include <cmath>

namespace ospq {

/// Deformation-parameter bundle: q in (0,1), eta = -2 ln q, the normalization
/// gamma fixed by the defining anticommutator, and the default relative
/// tolerance used by the residual checks.
class QParams {
public:
    explicit QParams(double q, double tol = 1e-9);

    double q() const { return q_; }
    double eta() const { return eta_; }
    double gamma() const { return gamma_; }
    double tol() const { return tol_; }

private:
    double q_;
    double eta_;
    double gamma_;
    double tol_;
};

/// Super q-bracket [n] = (q^{-n/2} - (-1)^n q^{n/2}) / (q^{-1/2} - q^{1/2}).
/// Positive for n >= 1 when 0 < q < 1. Throws on negative n.
double super_bracket(int n, const QParams& p);

/// [n]! = [n][n-1]...[1], with [0]! = 1. Throws on negative n.
double super_factorial(int n, const QParams& p);

/// Solves the scalar gamma that makes the anticommutator of the raising and
/// lowering matrices equal diag(-sinh(eta*m/2)/sinh(2*eta)) in the
/// highest-weight-l module, by one-parameter least squares over the weights.
/// The solved value is independent of l and of the weight used.
double gamma_param(double q, double tol = 1e-9, int l = 2);

}  // namespace ospq
