#include "ospq/json_io.hpp"

#include <cstdio>
#include <string>

namespace ospq {

ordered_json matrix_to_json(const Eigen::MatrixXd& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json parities_to_json(const ParityVec& p) {
    ordered_json out = ordered_json::array();
    for (Parity x : p) out.push_back(x.value());
    return out;
}

ordered_json irrep_to_json(const Irrep& rep, const DefiningRelationsReport& report) {
    ordered_json j;
    j["label"] = {{"l", rep.label.l},
                  {"lambda", rep.label.lambda.value()},
                  {"phi", rep.label.phi},
                  {"psi", rep.label.psi},
                  {"epsilon", rep.label.epsilon().value()}};
    j["q"] = rep.params.q();
    j["eta"] = rep.params.eta();
    j["gamma"] = rep.params.gamma();
    j["tol"] = rep.params.tol();
    j["basis_parities"] = parities_to_json(rep.basis_parities());
    ordered_json form = ordered_json::array();
    for (Eigen::Index i = 0; i < rep.form.size(); ++i) form.push_back(rep.form(i));
    j["form"] = std::move(form);
    j["matrices"] = {{"H", matrix_to_json(rep.gens.h.mat)},
                     {"v_plus", matrix_to_json(rep.gens.v_plus.mat)},
                     {"v_minus", matrix_to_json(rep.gens.v_minus.mat)},
                     {"q_H", matrix_to_json(rep.gens.q_h.mat)},
                     {"q_H_inv", matrix_to_json(rep.gens.q_h_inv.mat)}};
    j["residuals"] = {{"commutator", report.commutator_resid},
                      {"anticommutator", report.anticommutator_resid}};
    return j;
}

ordered_json cgc_table_to_json(const CGCTable& table) {
    ordered_json j;
    j["l1"] = table.l1;
    j["lambda1"] = table.lambda1.value();
    j["l2"] = table.l2;
    j["lambda2"] = table.lambda2.value();
    j["q"] = table.q;
    j["modified"] = table.modified;
    ordered_json blocks = ordered_json::array();
    for (const auto& b : table.blocks) {
        ordered_json jb;
        jb["l"] = b.l;
        jb["lambda"] = b.lambda.value();
        jb["L"] = b.L;
        ordered_json entries = ordered_json::array();
        for (int c = 0; c < b.coeffs.cols(); ++c) {
            const int m = b.l - c;
            for (int m1 = table.l1; m1 >= -table.l1; --m1) {
                const int m2 = m - m1;
                if (m2 < -table.l2 || m2 > table.l2) continue;
                const double v = b.coeffs(table.product_index(m1, m2), c);
                entries.push_back({{"m1", m1}, {"m2", m2}, {"m", m}, {"value", v}});
            }
        }
        jb["entries"] = std::move(entries);
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

std::string cgc_table_to_csv(const CGCTable& table) {
    std::string out = "l1,lambda1,l2,lambda2,q,l,lambda,m1,m2,m,value\n";
    char buf[128];
    for (const auto& b : table.blocks) {
        for (int c = 0; c < b.coeffs.cols(); ++c) {
            const int m = b.l - c;
            for (int m1 = table.l1; m1 >= -table.l1; --m1) {
                const int m2 = m - m1;
                if (m2 < -table.l2 || m2 > table.l2) continue;
                const double v = b.coeffs(table.product_index(m1, m2), c);
                std::snprintf(buf, sizeof(buf), "%d,%d,%d,%d,%.17g,%d,%d,%d,%d,%d,%.17g\n",
                              table.l1, table.lambda1.value(), table.l2, table.lambda2.value(),
                              table.q, b.l, b.lambda.value(), m1, m2, m, v);
                out += buf;
            }
        }
    }
    return out;
}

ordered_json hopf_axioms_to_json(const std::vector<HopfAxiomReport>& reports) {
    ordered_json out = ordered_json::array();
    for (const auto& r : reports) {
        out.push_back({{"generator", r.generator},
                       {"coassociativity", r.coassociativity},
                       {"counit", r.counit},
                       {"antipode", r.antipode},
                       {"antipode_collapse", r.antipode_collapse}});
    }
    return out;
}

ordered_json classical_limit_to_json(const ClassicalLimitProfile& profile) {
    ordered_json j;
    j["l"] = profile.l;
    ordered_json rows = ordered_json::array();
    for (const auto& r : profile.rows) {
        rows.push_back({{"eta", r.eta},
                        {"m", r.m},
                        {"raising_ratio", r.raising_ratio},
                        {"raising_classical", r.raising_classical},
                        {"lowering_ratio", r.lowering_ratio},
                        {"lowering_classical", r.lowering_classical},
                        {"max_err", r.max_err}});
    }
    j["rows"] = std::move(rows);
    j["max_err_per_eta"] = profile.max_err_per_eta;
    return j;
}

}  // namespace ospq
