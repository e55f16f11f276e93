#pragma once

#include <string>
#include <vector>

#include "ospq/grading.hpp"
#include "ospq/irreps.hpp"

namespace ospq {

/// Generator symbols of the algebra. Odd: Vplus, Vminus; the rest even.
enum class Gen { One, H, Vplus, Vminus, QH, QHinv };

Parity gen_parity(Gen g);
const char* gen_name(Gen g);

/// All six symbols, in a fixed order used by tables and reports.
const std::vector<Gen>& all_generators();

/// A formal word: real coefficient times an ordered product of generators.
/// Words are never normal-ordered; they are evaluated inside representations.
struct Word {
    double coeff = 1.0;
    std::vector<Gen> letters;

    Word() = default;
    Word(double c, std::vector<Gen> ls) : coeff(c), letters(std::move(ls)) {}
    explicit Word(Gen g) : letters{g} {}

    Parity parity() const;
};

/// One term of a coproduct: coeff * (left  tensor  right).
struct CoprodTerm {
    double coeff = 1.0;
    std::vector<Gen> left;
    std::vector<Gen> right;
};

/// Coproduct of a single generator as word pairs:
///   D(H)  = H x 1 + 1 x H,   D(v+-) = v+- x q^H + q^{-H} x v+-,
///   D(q^{+-H}) = q^{+-H} x q^{+-H},  D(1) = 1 x 1.
std::vector<CoprodTerm> coproduct_terms(Gen g, double q);

/// Coproduct of a word, multiplying termwise in A x A with the rule
/// (a x b)(c x d) = (-1)^{|c||b|} (ac x bd).
std::vector<CoprodTerm> coproduct_word(const Word& w, double q);

/// Antipode of a word: letters reversed, S applied per letter
/// (S(H) = -H, S(v+-) = -q^{+-1/2} v+-, S(q^{+-H}) = q^{-+H}), with the
/// Koszul sign of the reversal.
Word antipode_word(const Word& w, double q);

/// Counit: 1 on words of group-like letters, 0 if any letter is H or v+-.
double counit_word(const Word& w);

/// Evaluates a word in the module (product of the generator images).
GradedMatrix realize_word(const std::vector<Gen>& letters, const GeneratorImages& gens,
                          double coeff = 1.0);

/// Adjoint action ad_g(X) = sum_i (-1)^{|g_i''| |X|} pi(g_i') X pi(S(g_i''))
/// for homogeneous X acting on the module of `rep`.
GradedMatrix ad_action(Gen g, const GradedMatrix& x, const Irrep& rep);

/// Hom-module action on f : rep_from -> rep_to,
///   delta(g)(f) = sum_i (-1)^{|g_i''| |f|} pi_to(g_i') f pi_from(S(g_i'')).
GradedMatrix hom_action(Gen g, const GradedMatrix& f, const Irrep& rep_from,
                        const Irrep& rep_to);

/// Generator images of the Hom(V_from, V_to) module in the matrix-unit basis
/// E_{ab} -> index a*dim_from + b; parities add, weights subtract.
GeneratorImages hom_module(const Irrep& rep_from, const Irrep& rep_to);

struct HopfAxiomReport {
    std::string generator;
    double coassociativity = 0.0;  // on V1 x V2 x V3
    double counit = 0.0;           // both one-sided counit contractions, on V1
    double antipode = 0.0;         // m(id x S)Delta and m(S x id)Delta vs eps * Id
    double antipode_collapse = 0.0;  // triple-coproduct antipode collapse, on V1 x V1
    double max_resid() const;
};

/// Runs the graded Hopf-axiom identities through three representations and
/// reports the residual per generator.
std::vector<HopfAxiomReport> check_hopf_axioms_in_rep(const Irrep& r1, const Irrep& r2,
                                                      const Irrep& r3);

/// Residual of the antipode axiom m(id x S)Delta(w) = eps(w) Id evaluated on a
/// word; exercises the anti-homomorphism extension of S on products.
double antipode_axiom_residual(const Word& w, const Irrep& rep);

}  // namespace ospq
