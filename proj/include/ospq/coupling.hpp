#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ospq/hopfrep.hpp"
#include "ospq/irreps.hpp"

namespace ospq {

/// One irreducible block of a tensor-product decomposition. `coeffs` has one
/// column per coupled vector e^l_m (m = l, l-1, ..., -l) expressed in the
/// product basis (m1, m2) -> i1*dim2 + i2.
struct CGCBlock {
    int l = 0;
    Parity lambda;
    int L = 0;  // l1 + l2 + l
    Eigen::MatrixXd coeffs;
};

/// Clebsch-Gordan data of V^{l1}(lambda1) x V^{l2}(lambda2). Blocks are kept
/// in descending l. `modified` marks tables whose entries carry the
/// (-1)^{(l1-m1)(l2-m2)} (-1)^{(l-m)L} phase.
struct CGCTable {
    int l1 = 0, l2 = 0;
    Parity lambda1, lambda2;
    double q = 0.0;
    bool modified = false;
    std::vector<CGCBlock> blocks;

    int dim1() const { return 2 * l1 + 1; }
    int dim2() const { return 2 * l2 + 1; }

    const CGCBlock& block(int l) const;
    /// Coefficient (l1 m1 lambda1, l2 m2 lambda2 | l m lambda)_q; zero when
    /// m1 + m2 != m or the block is absent.
    double coefficient(int l, int m1, int m2, int m) const;
    /// Product-basis index of (m1, m2).
    int product_index(int m1, int m2) const;
    /// Stacked change-of-basis matrix, coupled columns ordered (l desc, m desc).
    Eigen::MatrixXd stacked() const;
};

/// The (pi1 x pi2) Delta(g) action matrix on the product space, with Koszul
/// signs; basis index (i1, i2) -> i1*dim2 + i2.
GradedMatrix tensor_rep(const Irrep& rep1, const Irrep& rep2, Gen g);

/// All five generator images of the tensor-product module.
GeneratorImages tensor_module(const Irrep& rep1, const Irrep& rep2);

/// Decomposes the product into one block per l in |l1-l2| .. l1+l2 by
/// highest-weight extraction (restricted nullspace of the raising action) and
/// lowering. Highest vectors have unit Euclidean norm and a positive
/// coefficient on e^{l1}_{l1} x e^{l2}_{l-l1}; lower vectors follow the
/// lowering-normalization of the irrep construction.
CGCTable decompose(const Irrep& rep1, const Irrep& rep2);

/// Phase-twisted copy: each entry times (-1)^{(l1-m1)(l2-m2)} (-1)^{(l-m)L}.
CGCTable modified_cgc(const CGCTable& table);

/// Basis of vectors v with Delta(g) v = eps(g) v for all generators; dimension
/// is 1 when l1 == l2 and 0 otherwise.
std::vector<Eigen::VectorXd> invariant_vectors(const Irrep& rep1, const Irrep& rep2);

/// The closed-form invariant-metric coefficient
///   C^l_{m,n}(lambda) = (-1)^{(l-m)lambda} (-1)^{(l-m)(l-m-1)/2} q^{m/2} delta_{m,-n}.
double invariant_metric_coefficient(int l, int m, int n, Parity lambda, double q);

struct CouplingCheckReport {
    int l = 0;
    double intertwining_resid = 0.0;  // reduced action vs freshly built irrep
    double parity_violation = 0.0;    // largest coefficient off the parity pattern
};

/// Per-block intertwining check: the product action in the coupled basis of
/// block l equals the generator matrices of a freshly built irrep.
std::vector<CouplingCheckReport> verify_blocks(const CGCTable& table, const Irrep& rep1,
                                               const Irrep& rep2);

/// Round-trip error || P P^{-1} - I || of the stacked change of basis, and its
/// condition number.
struct RoundTrip {
    double error = 0.0;
    double condition = 0.0;
};
RoundTrip round_trip(const CGCTable& table);

}  // namespace ospq
