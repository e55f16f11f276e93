#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ospq/grading.hpp"
#include "ospq/irreps.hpp"
#include "oracles.hpp"

using namespace ospq;

namespace {

Irrep rep_l(int l, double q = 0.25) { return build_irrep(IrrepLabel(l, Parity(0)), QParams(q)); }

}  // namespace

TEST_CASE("graded matrix construction validates the parity pattern") {
    ParityVec p = {Parity(0), Parity(1)};
    Eigen::MatrixXd ok(2, 2);
    ok << 1.0, 0.0, 0.0, 2.0;
    CHECK_NOTHROW(GradedMatrix(ok, p, p, Parity(0)));
    Eigen::MatrixXd bad(2, 2);
    bad << 1.0, 1.0, 0.0, 2.0;
    CHECK_THROWS_AS(GradedMatrix(bad, p, p, Parity(0)), std::invalid_argument);
    CHECK_NOTHROW(GradedMatrix(bad, p, p));  // non-homogeneous storage is allowed
}

TEST_CASE("compose: identity, parity bookkeeping, mismatch errors") {
    Irrep r = rep_l(1);
    GradedMatrix id = graded_identity(r.basis_parities());
    CHECK((graded_compose(id, r.gens.v_plus).mat - r.gens.v_plus.mat).norm() == 0.0);

    GradedMatrix pm = graded_compose(r.gens.v_plus, r.gens.v_minus);
    REQUIRE(pm.degree.has_value());
    CHECK(*pm.degree == Parity(0));

    // entrywise multiply-sum oracle for v+ v+
    GradedMatrix pp = graded_compose(r.gens.v_plus, r.gens.v_plus);
    const auto& a = r.gens.v_plus.mat;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(i, k) * a(k, j);
            CHECK(pp.mat(i, j) == doctest::Approx(s).epsilon(1e-15));
        }
    }

    Irrep r2 = rep_l(2);
    CHECK_THROWS_AS(graded_compose(r.gens.v_plus, r2.gens.v_plus), std::invalid_argument);
    Irrep r1_odd = build_irrep(IrrepLabel(1, Parity(1)), QParams(0.25));
    CHECK_THROWS_AS(graded_compose(r.gens.v_plus, r1_odd.gens.v_plus), std::invalid_argument);
}

TEST_CASE("graded tensor: trivial cases and the Koszul-signed oracle") {
    Irrep r = rep_l(1);
    GradedMatrix id = graded_identity(r.basis_parities());
    GradedMatrix idid = graded_tensor(id, id);
    CHECK((idid.mat - Eigen::MatrixXd::Identity(9, 9)).norm() == 0.0);

    // even x even has no signs
    GradedMatrix qq = graded_tensor(r.gens.q_h, r.gens.q_h_inv);
    Eigen::MatrixXd plain = Eigen::MatrixXd::Zero(9, 9);
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) {
            plain(i * 3 + k, i * 3 + k) = r.gens.q_h.mat(i, i) * r.gens.q_h_inv.mat(k, k);
        }
    }
    CHECK((qq.mat - plain).norm() == 0.0);

    // odd second factor: vector-by-vector signed-rule oracle
    GradedMatrix t = graded_tensor(r.gens.q_h_inv, r.gens.v_plus);
    Eigen::MatrixXd expect =
        oracles::koszul_tensor(r.gens.q_h_inv.mat, r.gens.q_h_inv.col_parity, r.gens.v_plus.mat, 1);
    CHECK((t.mat - expect).norm() == 0.0);
    CHECK(*t.degree == Parity(1));

    GradedMatrix inhomog(r.gens.v_plus.mat + r.gens.q_h.mat, r.basis_parities(),
                         r.basis_parities());
    CHECK_THROWS_AS(graded_tensor(inhomog, id), std::invalid_argument);
}

TEST_CASE("graded commutator") {
    Irrep r2 = rep_l(2);
    const auto& vp = r2.gens.v_plus;
    // odd with itself: anticommutator, equals 2 A^2
    GradedMatrix self = graded_commutator(vp, vp);
    CHECK((self.mat - 2.0 * (vp.mat * vp.mat)).norm() == 0.0);

    GradedMatrix id = graded_identity(r2.basis_parities());
    CHECK(graded_commutator(id, vp).mat.norm() == 0.0);

    // {v+, v-} = diag(-sinh(eta m / 2) / sinh(2 eta))
    GradedMatrix anti = graded_commutator(vp, r2.gens.v_minus);
    const double eta = r2.params.eta();
    for (int i = 0; i < 5; ++i) {
        const int m = 2 - i;
        CHECK(anti.mat(i, i) ==
              doctest::Approx(-std::sinh(eta * m / 2) / std::sinh(2 * eta)).epsilon(1e-12));
    }
}

TEST_CASE("tensor associativity up to the canonical re-indexing") {
    Irrep r = rep_l(1);
    std::mt19937 rng(7);
    const ParityVec& p = r.basis_parities();
    for (int da = 0; da <= 1; ++da) {
        for (int db = 0; db <= 1; ++db) {
            for (int dc = 0; dc <= 1; ++dc) {
                GradedMatrix a = oracles::random_homogeneous(p, p, Parity(da), rng);
                GradedMatrix b = oracles::random_homogeneous(p, p, Parity(db), rng);
                GradedMatrix c = oracles::random_homogeneous(p, p, Parity(dc), rng);
                GradedMatrix left = graded_tensor(graded_tensor(a, b), c);
                GradedMatrix right = graded_tensor(a, graded_tensor(b, c));
                CHECK((left.mat - right.mat).norm() < 1e-14 * left.mat.norm());
                CHECK(left.row_parity == right.row_parity);
            }
        }
    }
}

TEST_CASE("multiplication sign rule of the tensor product") {
    // (A x B)(C x D) = (-1)^{deg(C) deg(B)} (AC x BD)
    Irrep r = rep_l(1);
    std::mt19937 rng(11);
    const ParityVec& p = r.basis_parities();
    for (int db = 0; db <= 1; ++db) {
        for (int dc = 0; dc <= 1; ++dc) {
            GradedMatrix a = oracles::random_homogeneous(p, p, Parity(0), rng);
            GradedMatrix b = oracles::random_homogeneous(p, p, Parity(db), rng);
            GradedMatrix c = oracles::random_homogeneous(p, p, Parity(dc), rng);
            GradedMatrix d = oracles::random_homogeneous(p, p, Parity(1), rng);
            GradedMatrix lhs = graded_compose(graded_tensor(a, b), graded_tensor(c, d));
            GradedMatrix rhs = graded_tensor(graded_compose(a, c), graded_compose(b, d));
            const double sign = (db * dc) % 2 == 1 ? -1.0 : 1.0;
            CHECK((lhs.mat - sign * rhs.mat).norm() < 1e-13 * std::max(1.0, lhs.mat.norm()));
        }
    }
}

TEST_CASE("operations preserve parity metadata") {
    Irrep r = rep_l(2);
    GradedMatrix t = graded_tensor(r.gens.v_plus, r.gens.v_minus);
    CHECK(t.row_parity == tensor_parities(r.basis_parities(), r.basis_parities()));
    CHECK(*t.degree == Parity(0));
    GradedMatrix c = graded_compose(r.gens.h, r.gens.v_plus);
    CHECK(c.row_parity == r.basis_parities());
    CHECK(*c.degree == Parity(1));
}
