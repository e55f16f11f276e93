#include "ospq/qarith.hpp"

#include <stdexcept>
#include <string>

#include "ospq/errors.hpp"

namespace ospq {

namespace {

double bracket_raw(int n, double q) {
    const double sq = std::sqrt(q);
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    return (std::pow(q, -0.5 * n) - sgn * std::pow(q, 0.5 * n)) / (1.0 / sq - sq);
}

}  // namespace

QParams::QParams(double q, double tol) : q_(q), tol_(tol) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::invalid_argument("QParams: q must lie in (0, 1), got " + std::to_string(q));
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("QParams: tol must be positive");
    }
    eta_ = -2.0 * std::log(q);
    gamma_ = gamma_param(q, tol);
}

double super_bracket(int n, const QParams& p) {
    if (n < 0) {
        throw std::invalid_argument("super_bracket: n must be non-negative");
    }
    if (n == 0) return 0.0;
    return bracket_raw(n, p.q());
}

double super_factorial(int n, const QParams& p) {
    if (n < 0) {
        throw std::invalid_argument("super_factorial: n must be non-negative");
    }
    double r = 1.0;
    for (int k = 1; k <= n; ++k) {
        r *= bracket_raw(k, p.q());
    }
    return r;
}

double gamma_param(double q, double tol, int l) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::invalid_argument("gamma_param: q must lie in (0, 1)");
    }
    if (l < 1) {
        throw std::invalid_argument("gamma_param: l must be >= 1");
    }
    const double eta = -2.0 * std::log(q);
    // With gamma = 1 the anticommutator of the raising/lowering matrices is
    // diagonal with entries a_m; the target diagonal is b_m. The one-parameter
    // least-squares solution is <a,b>/<a,a>.
    double ab = 0.0, aa = 0.0;
    for (int m = -l; m <= l; ++m) {
        const double sgn = ((l - m) % 2 == 0) ? 1.0 : -1.0;
        const double a_m = sgn * (bracket_raw(l - m, q) * bracket_raw(l + m + 1, q) -
                                  bracket_raw(l + m, q) * bracket_raw(l - m + 1, q));
        const double b_m = -std::sinh(eta * m / 2.0) / std::sinh(2.0 * eta);
        ab += a_m * b_m;
        aa += a_m * a_m;
    }
    const double gamma = ab / aa;
    // residual of the solved diagonal, relative to the target scale
    double resid = 0.0, scale = 0.0;
    for (int m = -l; m <= l; ++m) {
        const double sgn = ((l - m) % 2 == 0) ? 1.0 : -1.0;
        const double a_m = sgn * (bracket_raw(l - m, q) * bracket_raw(l + m + 1, q) -
                                  bracket_raw(l + m, q) * bracket_raw(l - m + 1, q));
        const double b_m = -std::sinh(eta * m / 2.0) / std::sinh(2.0 * eta);
        resid = std::max(resid, std::abs(gamma * a_m - b_m));
        scale = std::max(scale, std::abs(b_m));
    }
    if (resid > tol * scale) {
        throw NoSolution("gamma_param: least-squares residual " + std::to_string(resid) +
                         " exceeds tolerance");
    }
    return gamma;
}

}  // namespace ospq
