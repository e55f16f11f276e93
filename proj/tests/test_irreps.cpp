#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ospq/irreps.hpp"
#include "ospq/json_io.hpp"
#include "ospq/qarith.hpp"

using namespace ospq;

TEST_CASE("trivial representation") {
    QParams p(0.5);
    Irrep r = build_irrep(IrrepLabel(0, Parity(0)), p);
    CHECK(r.dim() == 1);
    CHECK(r.gens.h.mat(0, 0) == 0.0);
    CHECK(r.gens.v_plus.mat(0, 0) == 0.0);
    CHECK(r.gens.v_minus.mat(0, 0) == 0.0);
    CHECK(r.gens.q_h.mat(0, 0) == 1.0);
    auto rep = verify_defining_relations(r);
    CHECK(rep.commutator_resid == 0.0);
    CHECK(rep.anticommutator_resid == 0.0);
}

TEST_CASE("l = 1 matrices") {
    QParams p(0.25);
    Irrep r = build_irrep(IrrepLabel(1, Parity(0)), p);
    CHECK(r.gens.h.mat(0, 0) == 0.5);
    CHECK(r.gens.h.mat(1, 1) == 0.0);
    CHECK(r.gens.h.mat(2, 2) == -0.5);
    // lowering entry e_1 -> e_0 is sqrt([2][1] gamma)
    const double expect = std::sqrt(super_bracket(2, p) * super_bracket(1, p) * p.gamma());
    CHECK(r.gens.v_minus.mat(1, 0) == doctest::Approx(expect).epsilon(1e-15));
    // q^H and its inverse are exact entrywise inverses
    for (int i = 0; i < 3; ++i) {
        CHECK(r.gens.q_h.mat(i, i) * r.gens.q_h_inv.mat(i, i) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("basis parities and signature form") {
    QParams p(0.25);
    for (int lambda = 0; lambda <= 1; ++lambda) {
        for (int phi = 0; phi <= 1; ++phi) {
            for (int psi = 0; psi <= 1; ++psi) {
                Irrep r = build_irrep(IrrepLabel(2, Parity(lambda), phi, psi), p);
                for (int i = 0; i < r.dim(); ++i) {
                    const int m = 2 - i;
                    CHECK(r.basis_parities()[i] == Parity(2 - m + lambda));
                    const double expect = ((phi * (2 - m) + psi) % 2 == 0) ? 1.0 : -1.0;
                    CHECK(r.form(i) == expect);
                }
                CHECK(r.label.epsilon() == Parity(lambda + phi + 1));
            }
        }
    }
}

TEST_CASE("action does not depend on lambda, phi, psi") {
    QParams p(0.6);
    Irrep base = build_irrep(IrrepLabel(3, Parity(0), 0, 0), p);
    for (int lambda = 0; lambda <= 1; ++lambda) {
        for (int phi = 0; phi <= 1; ++phi) {
            Irrep other = build_irrep(IrrepLabel(3, Parity(lambda), phi, 1), p);
            CHECK((base.gens.h.mat - other.gens.h.mat).norm() == 0.0);
            CHECK((base.gens.v_plus.mat - other.gens.v_plus.mat).norm() == 0.0);
            CHECK((base.gens.v_minus.mat - other.gens.v_minus.mat).norm() == 0.0);
        }
    }
}

TEST_CASE("weight structure and highest/lowest weight rows") {
    QParams p(0.3);
    Irrep r = build_irrep(IrrepLabel(3, Parity(1)), p);
    const int d = static_cast<int>(r.dim());
    // raising maps weight m to m+1 only; top vector is annihilated
    CHECK(r.gens.v_plus.mat.col(0).norm() == 0.0);
    CHECK(r.gens.v_minus.mat.col(d - 1).norm() == 0.0);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            if (r.gens.v_plus.mat(i, j) != 0.0) CHECK(i == j - 1);
            if (r.gens.v_minus.mat(i, j) != 0.0) CHECK(i == j + 1);
        }
    }
    // raising and lowering flip parity
    CHECK(*r.gens.v_plus.degree == Parity(1));
    CHECK(*r.gens.v_minus.degree == Parity(1));
    CHECK(*r.gens.h.degree == Parity(0));
}

TEST_CASE("defining relations across l and q") {
    {
        QParams p(0.25);
        auto rep = verify_defining_relations(build_irrep(IrrepLabel(3, Parity(0)), p));
        CHECK(rep.max_resid() < 1e-10);
    }
    {
        QParams p(0.9);
        auto rep = verify_defining_relations(build_irrep(IrrepLabel(5, Parity(0)), p));
        CHECK(rep.max_resid() < 1e-9);
    }
}

TEST_CASE("invalid labels") {
    CHECK_THROWS_AS(IrrepLabel(-1, Parity(0)), std::invalid_argument);
}

TEST_CASE("classical limit profile") {
    auto empty = classical_limit_profile(0, {1e-2});
    CHECK(empty.rows.empty());

    auto prof = classical_limit_profile(2, {1e-2, 1e-3});
    REQUIRE(prof.max_err_per_eta.size() == 2);
    const double order =
        std::log(prof.max_err_per_eta[0] / prof.max_err_per_eta[1]) / std::log(10.0);
    CHECK(order >= 1.0);

    auto prof4 = classical_limit_profile(4, {1e-3});
    CHECK(prof4.max_err_per_eta[0] < 1e-2);

    CHECK_THROWS_AS(classical_limit_profile(2, {-1.0}), std::invalid_argument);
}

TEST_CASE("json dump carries the full build") {
    QParams p(0.25);
    Irrep r = build_irrep(IrrepLabel(1, Parity(0)), p);
    auto j = irrep_to_json(r, verify_defining_relations(r));
    CHECK(j["label"]["l"] == 1);
    CHECK(j["label"]["epsilon"] == 1);
    CHECK(j["q"] == 0.25);
    CHECK(j["matrices"]["H"][0][0] == 0.5);
    CHECK(j["basis_parities"].size() == 3);
    // round-trips through text without loss
    auto parsed = ordered_json::parse(j.dump());
    CHECK(parsed["matrices"]["v_minus"][1][0].get<double>() == r.gens.v_minus.mat(1, 0));
}
