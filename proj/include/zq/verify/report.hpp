#pragma once

#include "zq/fock/state.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zq::verify {

using json = nlohmann::ordered_json;

/// Mode window and test-vector selector.
struct CheckWindow {
    int max_mode = 3;     // |n| <= max_mode for every mode index
    int min_degree = -4;  // basis vectors of degree >= min_degree
    int max_charge = 2;   // |charge| <= max_charge, charge = alpha(0)/2
};

enum class Model { realized, abstract };

struct RelationSpec {
    std::string relation;
    int k = 1;
    /// k = 2 realized checks: "NS" or "R"
    std::string sector;
    /// realized Fock modules or the abstract W(M); defaults per relation when unset
    std::optional<Model> model;
    CheckWindow window;
    /// module label for "hwv" and "sector" ("L0", "L1", "2L0", "2L1", "L0+L1"); empty means all
    std::string module;
    /// expand series prefactors against the direction the relation fixes (always a clash)
    bool swapped_direction = false;
};

struct Entry {
    json coeff = json::array();
    std::string vector;
    std::string lhs;
    std::string rhs;
    bool equal = false;
};

struct CheckReport {
    RelationSpec spec;
    std::string coeff_layout;
    std::vector<Entry> entries;
    bool passed = true;
    std::optional<double> elapsed_ms;

    /// {relation, params, window, entries, passed, elapsed_ms}; elapsed_ms is null when untimed
    json to_json() const;
};

/// the (relation, level, sector, model) combination is not supported
class UnsupportedRelation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// a series prefactor expanded in a direction that leaves a mode sum untruncated
class DirectionalClash : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

std::string to_string(Model m);

/// worker threads: ZQ_THREADS when set (>= 1), otherwise the hardware concurrency
unsigned thread_count();

}  // namespace zq::verify
