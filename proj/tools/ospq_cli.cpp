#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "ospq/adjointops.hpp"
#include "ospq/coupling.hpp"
#include "ospq/errors.hpp"
#include "ospq/hopfrep.hpp"
#include "ospq/irreps.hpp"
#include "ospq/json_io.hpp"
#include "ospq/wigner.hpp"

namespace {

using ospq::ordered_json;

struct Options {
    double q = 0.5;
    double tol = 1e-9;
    bool tol_set = false;
    int l = 1, l1 = 1, l2 = 1, l3 = 1, j = 2;
    int lambda = 0, lambda1 = 0, lambda2 = 0;
    int phi = 0, psi = 0;
    int lmax = 3;
    std::vector<double> etas = {1e-2, 1e-3, 1e-4};
    std::string out;
    std::string format = "json";
};

// JSON has no infinity literal; report unbounded gaps as a string
ordered_json jgap(double v) {
    if (std::isinf(v)) return "inf";
    return v;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + opt.out);
    f << text;
}

void emit_json(const Options& opt, const ordered_json& j) { emit(opt, j.dump(2) + "\n"); }

// exit 1 carrier: the named residual that broke the tolerance
struct ResidualFailure {
    std::string name;
    double value;
};

void require_below(std::vector<ResidualFailure>& failures, const std::string& name, double value,
                   double tol) {
    if (!(value < tol)) failures.push_back({name, value});
}

int run_irrep(const Options& opt) {
    ospq::QParams p(opt.q, opt.tol);
    ospq::Irrep rep = ospq::build_irrep(
        ospq::IrrepLabel(opt.l, ospq::Parity(opt.lambda), opt.phi, opt.psi), p);
    auto report = ospq::verify_defining_relations(rep);
    emit_json(opt, ospq::irrep_to_json(rep, report));
    std::vector<ResidualFailure> failures;
    require_below(failures, "commutator", report.commutator_resid, opt.tol);
    require_below(failures, "anticommutator", report.anticommutator_resid, opt.tol);
    for (const auto& f : failures) {
        std::cerr << "residual '" << f.name << "' = " << f.value << " exceeds tol\n";
    }
    return failures.empty() ? 0 : 1;
}

int run_axioms(const Options& opt) {
    ospq::QParams p(opt.q, opt.tol);
    ospq::Irrep r1 = ospq::build_irrep(ospq::IrrepLabel(opt.l, ospq::Parity(opt.lambda)), p);
    auto reports = ospq::check_hopf_axioms_in_rep(r1, r1, r1);
    ordered_json j;
    j["q"] = opt.q;
    j["l"] = opt.l;
    j["reports"] = ospq::hopf_axioms_to_json(reports);
    emit_json(opt, j);
    std::vector<ResidualFailure> failures;
    for (const auto& r : reports) {
        require_below(failures, "axioms(" + r.generator + ")", r.max_resid(), opt.tol);
    }
    for (const auto& f : failures) {
        std::cerr << "residual '" << f.name << "' = " << f.value << " exceeds tol\n";
    }
    return failures.empty() ? 0 : 1;
}

int run_cgc(const Options& opt) {
    ospq::QParams p(opt.q, opt.tol);
    ospq::Irrep r1 = ospq::build_irrep(ospq::IrrepLabel(opt.l1, ospq::Parity(opt.lambda1)), p);
    ospq::Irrep r2 = ospq::build_irrep(ospq::IrrepLabel(opt.l2, ospq::Parity(opt.lambda2)), p);
    ospq::CGCTable table = ospq::decompose(r1, r2);
    if (opt.format == "csv") {
        emit(opt, ospq::cgc_table_to_csv(table));
    } else {
        emit_json(opt, ospq::cgc_table_to_json(table));
    }
    auto checks = ospq::verify_blocks(table, r1, r2);
    auto rt = ospq::round_trip(table);
    std::vector<ResidualFailure> failures;
    for (const auto& c : checks) {
        require_below(failures, "intertwining(l=" + std::to_string(c.l) + ")",
                      c.intertwining_resid, opt.tol);
        require_below(failures, "parity(l=" + std::to_string(c.l) + ")", c.parity_violation,
                      opt.tol);
    }
    require_below(failures, "round_trip", rt.error, opt.tol);
    for (const auto& f : failures) {
        std::cerr << "residual '" << f.name << "' = " << f.value << " exceeds tol\n";
    }
    return failures.empty() ? 0 : 1;
}

int run_schur(const Options& opt) {
    ospq::QParams p(opt.q, opt.tol);
    ordered_json rows = ordered_json::array();
    bool table_ok = true;
    for (int l1 = 0; l1 <= opt.lmax; ++l1) {
        for (int l2 = 0; l2 <= opt.lmax; ++l2) {
            for (int lam1 = 0; lam1 <= 1; ++lam1) {
                for (int lam2 = 0; lam2 <= 1; ++lam2) {
                    ospq::Irrep a = ospq::build_irrep(ospq::IrrepLabel(l1, ospq::Parity(lam1)), p);
                    ospq::Irrep b = ospq::build_irrep(ospq::IrrepLabel(l2, ospq::Parity(lam2)), p);
                    auto even = ospq::intertwiner_basis(a.gens, b.gens, ospq::Parity(0), opt.tol);
                    auto odd = ospq::intertwiner_basis(a.gens, b.gens, ospq::Parity(1), opt.tol);
                    const int expect_even = (l1 == l2 && lam1 == lam2) ? 1 : 0;
                    // an odd intertwiner connects an irrep with its parity flip
                    const int expect_odd = (l1 == l2 && lam1 != lam2) ? 1 : 0;
                    if (even.dimension() != expect_even || odd.dimension() != expect_odd) {
                        table_ok = false;
                    }
                    rows.push_back({{"l1", l1},
                                    {"lambda1", lam1},
                                    {"l2", l2},
                                    {"lambda2", lam2},
                                    {"dim_even", even.dimension()},
                                    {"dim_odd", odd.dimension()},
                                    {"gap_even", jgap(even.info.gap())},
                                    {"gap_odd", jgap(odd.info.gap())}});
                }
            }
        }
    }
    ordered_json j;
    j["q"] = opt.q;
    j["lmax"] = opt.lmax;
    j["table"] = std::move(rows);
    j["table_ok"] = table_ok;
    emit_json(opt, j);
    if (!table_ok) {
        std::cerr << "schur: dimension table deviates from the expected pattern\n";
        return 1;
    }
    return 0;
}

int run_wigner_eckart(const Options& opt) {
    ospq::QParams p(opt.q, opt.tol);
    const int lambda3 =
        (opt.l1 + opt.l2 + opt.l3 + opt.lambda1 + opt.lambda2) % 2;
    ospq::Irrep r2 = ospq::build_irrep(ospq::IrrepLabel(opt.l2, ospq::Parity(opt.lambda2)), p);
    ospq::Irrep r3 = ospq::build_irrep(ospq::IrrepLabel(opt.l3, ospq::Parity(lambda3)), p);
    auto even =
        ospq::tensor_operator_basis(opt.l1, ospq::Parity(opt.lambda1), r2, r3, ospq::Parity(0));
    auto odd =
        ospq::tensor_operator_basis(opt.l1, ospq::Parity(opt.lambda1), r2, r3, ospq::Parity(1));

    ordered_json j;
    j["l1"] = opt.l1;
    j["lambda1"] = opt.lambda1;
    j["l2"] = opt.l2;
    j["lambda2"] = opt.lambda2;
    j["l3"] = opt.l3;
    j["lambda3"] = lambda3;
    j["q"] = opt.q;
    j["dim_even"] = static_cast<int>(even.families.size());
    j["dim_odd"] = static_cast<int>(odd.families.size());
    j["singular_value_gap"] = jgap(even.info.gap());

    std::vector<ResidualFailure> failures;
    if (!even.families.empty()) {
        ospq::Irrep r1 = ospq::build_irrep(ospq::IrrepLabel(opt.l1, ospq::Parity(opt.lambda1)), p);
        ospq::CGCTable table = ospq::modified_cgc(ospq::decompose(r1, r2));
        auto fit = ospq::wigner_eckart_fit(even.families.front(), table);
        j["alpha"] = fit.alpha;
        j["residual"] = fit.residual;
        require_below(failures, "wigner_eckart_residual", fit.residual, opt.tol);
    }
    emit_json(opt, j);
    for (const auto& f : failures) {
        std::cerr << "residual '" << f.name << "' = " << f.value << " exceeds tol\n";
    }
    return failures.empty() ? 0 : 1;
}

int run_tfamily(const Options& opt) {
    ospq::QParams p(opt.q, opt.tol);
    ospq::Irrep rep = ospq::build_irrep(ospq::IrrepLabel(opt.j, ospq::Parity(opt.lambda)), p);
    ospq::AdjointFamily fam = ospq::build_t_family(opt.l, rep);
    ordered_json j;
    j["l"] = opt.l;
    j["j"] = opt.j;
    j["lambda"] = opt.lambda;
    j["q"] = opt.q;
    j["zero_family"] = fam.is_zero();
    j["residuals"] = {{"raising", fam.raising_resid}, {"weight", fam.weight_resid}};
    ordered_json comps = ordered_json::array();
    for (int m = opt.l; m >= -opt.l; --m) {
        comps.push_back({{"m", m},
                         {"degree", fam.component(m).degree ? fam.component(m).degree->value() : -1},
                         {"matrix", ospq::matrix_to_json(fam.component(m).mat)}});
    }
    j["components"] = std::move(comps);
    emit_json(opt, j);
    std::vector<ResidualFailure> failures;
    require_below(failures, "raising", fam.raising_resid, opt.tol);
    require_below(failures, "weight", fam.weight_resid, opt.tol);
    for (const auto& f : failures) {
        std::cerr << "residual '" << f.name << "' = " << f.value << " exceeds tol\n";
    }
    return failures.empty() ? 0 : 1;
}

int run_theorem2(const Options& opt) {
    ospq::QParams p(opt.q, opt.tol);
    auto report = ospq::verify_closed_forms(opt.l, opt.j, ospq::Parity(opt.lambda), p);
    auto alpha = ospq::reduced_alpha_closed_form(opt.l, opt.j, p);

    ospq::Irrep rep = ospq::build_irrep(ospq::IrrepLabel(opt.j, ospq::Parity(opt.lambda)), p);
    ospq::AdjointFamily fam = ospq::build_t_family(opt.l, rep);
    ospq::TensorOperatorFamily tf;
    tf.l1 = opt.l;
    tf.lambda1 = ospq::Parity(0);
    tf.source = rep.label;
    tf.target = rep.label;
    tf.degree = ospq::Parity(0);
    tf.components = fam.components;
    ospq::Irrep op_rep = ospq::build_irrep(ospq::IrrepLabel(opt.l, ospq::Parity(0)), p);
    ospq::CGCTable table = ospq::modified_cgc(ospq::decompose(op_rep, rep));
    auto fit = ospq::wigner_eckart_fit(tf, table);
    const double scale = ospq::cgc_convention_scale(opt.l, opt.j, ospq::Parity(opt.lambda), p);

    ordered_json j;
    j["l"] = opt.l;
    j["j"] = opt.j;
    j["lambda"] = opt.lambda;
    j["q"] = opt.q;
    j["alpha_fitted"] = fit.alpha;
    j["alpha_closed_form"] = alpha.value;
    j["cgc_convention_scale"] = scale;
    j["residuals"] = {{"top_vs_closed_form", report.top_vs_closed_form},
                      {"ratio_spread", report.ratio_spread},
                      {"ratio_vs_alpha", report.ratio_vs_alpha},
                      {"rank1", fit.residual}};
    emit_json(opt, j);

    std::vector<ResidualFailure> failures;
    require_below(failures, "top_vs_closed_form", report.top_vs_closed_form, opt.tol);
    require_below(failures, "ratio_spread", report.ratio_spread, opt.tol);
    require_below(failures, "ratio_vs_alpha", report.ratio_vs_alpha, opt.tol);
    require_below(failures, "rank1", fit.residual, opt.tol);
    require_below(failures, "alpha_consistency",
                  std::abs(std::abs(fit.alpha) * scale - std::abs(alpha.value)) /
                      std::abs(alpha.value),
                  opt.tol);
    for (const auto& f : failures) {
        std::cerr << "residual '" << f.name << "' = " << f.value << " exceeds tol\n";
    }
    return failures.empty() ? 0 : 1;
}

int run_center(const Options& opt) {
    ospq::QParams p(opt.q, opt.tol);
    ospq::Irrep rep = ospq::build_irrep(ospq::IrrepLabel(opt.l, ospq::Parity(opt.lambda)), p);
    auto report = ospq::verify_center_element(opt.j, rep);
    ordered_json j;
    j["j"] = opt.j;
    j["l"] = opt.l;
    j["lambda"] = opt.lambda;
    j["q"] = opt.q;
    j["scalar"] = report.scalar;
    j["residuals"] = {{"scalarness", report.deviation_from_scalar},
                      {"centrality", report.max_centrality_resid}};
    emit_json(opt, j);
    std::vector<ResidualFailure> failures;
    require_below(failures, "scalarness", report.deviation_from_scalar, opt.tol);
    require_below(failures, "centrality", report.max_centrality_resid, opt.tol);
    for (const auto& f : failures) {
        std::cerr << "residual '" << f.name << "' = " << f.value << " exceeds tol\n";
    }
    return failures.empty() ? 0 : 1;
}

int run_classical_limit(const Options& opt) {
    auto profile = ospq::classical_limit_profile(opt.l, opt.etas);
    emit_json(opt, ospq::classical_limit_to_json(profile));
    // convergence order between consecutive grid points
    for (std::size_t i = 0; i + 1 < profile.max_err_per_eta.size(); ++i) {
        const double e0 = profile.max_err_per_eta[i];
        const double e1 = profile.max_err_per_eta[i + 1];
        if (e0 < 1e-11 || e1 < 1e-11) continue;  // converged to noise
        const double order = std::log(e0 / e1) / std::log(opt.etas[i] / opt.etas[i + 1]);
        if (order < 1.0) {
            std::cerr << "residual 'convergence_order' = " << order << " below 1\n";
            return 1;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"U_q[osp(1|2)] representation toolkit"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("OSPQ_TOL")) {
        opt.tol = std::atof(env);
    }

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--q", opt.q, "deformation parameter, in (0,1)");
        cmd->add_option("--tol", opt.tol, "relative tolerance, in (0, 1e-3]");
        cmd->add_option("--out", opt.out, "output file (default: stdout)");
        cmd->add_option("--format", opt.format, "json|csv (csv only for cgc)");
    };

    auto* c_irrep = app.add_subcommand("irrep", "build an irrep and verify the relations");
    c_irrep->add_option("--l", opt.l, "highest weight");
    c_irrep->add_option("--lambda", opt.lambda, "highest-weight parity");
    c_irrep->add_option("--phi", opt.phi, "signature parameter");
    c_irrep->add_option("--psi", opt.psi, "signature parameter");
    add_common(c_irrep);

    auto* c_axioms = app.add_subcommand("axioms", "Hopf axiom residuals in representation");
    c_axioms->add_option("--l", opt.l, "highest weight of the test module");
    c_axioms->add_option("--lambda", opt.lambda, "parity of the test module");
    add_common(c_axioms);

    auto* c_cgc = app.add_subcommand("cgc", "Clebsch-Gordan table of V^l1 x V^l2");
    c_cgc->add_option("--l1", opt.l1, "first factor");
    c_cgc->add_option("--lambda1", opt.lambda1, "first parity");
    c_cgc->add_option("--l2", opt.l2, "second factor");
    c_cgc->add_option("--lambda2", opt.lambda2, "second parity");
    add_common(c_cgc);

    auto* c_schur = app.add_subcommand("schur", "intertwiner dimension table");
    c_schur->add_option("--lmax", opt.lmax, "largest highest weight");
    add_common(c_schur);

    auto* c_we = app.add_subcommand("wigner-eckart", "tensor-operator solve and rank-1 fit");
    c_we->add_option("--l1", opt.l1, "operator label");
    c_we->add_option("--lambda1", opt.lambda1, "operator parity");
    c_we->add_option("--l2", opt.l2, "source irrep");
    c_we->add_option("--lambda2", opt.lambda2, "source parity");
    c_we->add_option("--l3", opt.l3, "target irrep");
    add_common(c_we);

    auto* c_tf = app.add_subcommand("tfamily", "adjoint-orbit operator family in an irrep");
    c_tf->add_option("--l", opt.l, "family label (even)");
    c_tf->add_option("--j", opt.j, "target irrep");
    c_tf->add_option("--lambda", opt.lambda, "target parity");
    add_common(c_tf);

    auto* c_t2 = app.add_subcommand("theorem2", "closed-form reduced matrix element checks");
    c_t2->add_option("--l", opt.l, "family label (even)");
    c_t2->add_option("--j", opt.j, "target irrep");
    c_t2->add_option("--lambda", opt.lambda, "target parity");
    add_common(c_t2);

    auto* c_center = app.add_subcommand("center", "central element checks");
    c_center->add_option("--j", opt.j, "family label (even)");
    c_center->add_option("--l", opt.l, "target irrep");
    c_center->add_option("--lambda", opt.lambda, "target parity");
    add_common(c_center);

    auto* c_cl = app.add_subcommand("classical-limit", "ratio profiles for small eta");
    c_cl->add_option("--l", opt.l, "highest weight");
    c_cl->add_option("--eta", opt.etas, "eta grid (repeatable)");
    add_common(c_cl);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            return app.exit(e);
        }
        app.exit(e);
        return 2;
    }

    try {
        if (!(opt.q > 0.0 && opt.q < 1.0)) {
            throw std::invalid_argument("q must lie in (0, 1)");
        }
        if (!(opt.tol > 0.0 && opt.tol <= 1e-3)) {
            throw std::invalid_argument("tol must lie in (0, 1e-3]");
        }
        if (c_irrep->parsed()) return run_irrep(opt);
        if (c_axioms->parsed()) return run_axioms(opt);
        if (c_cgc->parsed()) return run_cgc(opt);
        if (c_schur->parsed()) return run_schur(opt);
        if (c_we->parsed()) return run_wigner_eckart(opt);
        if (c_tf->parsed()) return run_tfamily(opt);
        if (c_t2->parsed()) return run_theorem2(opt);
        if (c_center->parsed()) return run_center(opt);
        if (c_cl->parsed()) return run_classical_limit(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const ospq::NoSolution& e) {
        std::cerr << "residual failure: " << e.what() << "\n";
        return 1;
    } catch (const ospq::DegenerateNullspace& e) {
        std::cerr << "residual failure: " << e.what() << "\n";
        return 1;
    } catch (const ospq::ResidualTooLarge& e) {
        std::cerr << "residual failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
