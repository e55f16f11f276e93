#pragma once

#include <json.hpp>

#include "ospq/adjointops.hpp"
#include "ospq/coupling.hpp"
#include "ospq/hopfrep.hpp"
#include "ospq/irreps.hpp"
#include "ospq/wigner.hpp"

namespace ospq {

using ordered_json = nlohmann::ordered_json;

ordered_json matrix_to_json(const Eigen::MatrixXd& m);
ordered_json parities_to_json(const ParityVec& p);

ordered_json irrep_to_json(const Irrep& rep, const DefiningRelationsReport& report);
ordered_json cgc_table_to_json(const CGCTable& table);
std::string cgc_table_to_csv(const CGCTable& table);
ordered_json hopf_axioms_to_json(const std::vector<HopfAxiomReport>& reports);
ordered_json classical_limit_to_json(const ClassicalLimitProfile& profile);

}  // namespace ospq
