#pragma once

#include "zq/verify/report.hpp"

#include <string>
#include <vector>

namespace zq::verify {

struct RelationInfo {
    std::string id;
    std::string suite;
    std::string description;
    /// levels accepted; 0 means any positive level (abstract W(M) relations)
    std::vector<int> levels;
    /// realized sectors accepted at k = 2 ("NS", "R"); empty when not realized at k = 2
    std::vector<std::string> sectors;
    Model default_model = Model::realized;
    bool abstract_allowed = false;
    /// names of the coefficient tuple components
    std::string coeff_layout;
    /// expansion directions of the series prefactors, empty when none
    std::string direction;
};

const std::vector<RelationInfo>& catalog();
/// throws UnsupportedRelation for an unknown id
const RelationInfo& relation_info(const std::string& id);

/// suite names: drinfeld, zq, clifford, vertex, abstract, modules, all
std::vector<std::string> suite_names();
/// every supported (relation, sector) instance of a suite at level k
std::vector<RelationSpec> suite_specs(const std::string& suite, int k, const CheckWindow& window);

CheckReport run_check(const RelationSpec& spec);

/// x+_0 v = 0, x-_1 K^{-1} v = 0, K and gamma eigenvalues on the candidate vector
CheckReport check_highest_weight(int k, const std::string& label);
/// x+-, Psi and Phi modes preserve the declared k = 2 subspace
CheckReport check_sector_invariance(const std::string& label, int min_degree, int max_mode = 3);
/// classical limits of the generalized commutation relations with s <= max_s
CheckReport check_classical_limits(int max_s = 3);
/// exp of the exponent commutator against the contraction ratio, four sign pairs
CheckReport verify_SS_contraction(int k, int order = 6);

/// highest weight labels at level k
std::vector<std::string> module_labels(int k);

}  // namespace zq::verify
