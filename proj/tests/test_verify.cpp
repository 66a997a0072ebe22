#include "doctest.h"

#include "zq/verify/checks.hpp"

#include <cstdlib>
#include <set>

using namespace zq::verify;

namespace {

const CheckWindow small{2, -2, 1};

RelationSpec spec(const std::string& id, int k, const std::string& sector = "") {
    RelationSpec s;
    s.relation = id;
    s.k = k;
    s.sector = sector;
    s.window = small;
    return s;
}

bool holds(const CheckReport& r) {
    bool all = !r.entries.empty();
    for (const auto& e : r.entries) all = all && e.equal;
    return all && r.passed;
}

}  // namespace

TEST_CASE("catalog ids are unique and resolvable") {
    std::set<std::string> ids;
    for (const auto& r : catalog()) {
        CHECK(ids.insert(r.id).second);
        CHECK(relation_info(r.id).suite == r.suite);
    }
    CHECK_THROWS_AS(relation_info("no-such-relation"), UnsupportedRelation);
}

TEST_CASE("small windows of representative relations hold") {
    CHECK(holds(run_check(spec("eq2", 1))));
    CHECK(holds(run_check(spec("eq7", 1))));
    CHECK(holds(run_check(spec("co1", 2, "R"))));
    CHECK(holds(run_check(spec("co2", 2, "NS"))));
    CHECK(holds(run_check(spec("equa1", 1))));
    CHECK(holds(run_check(spec("khal1", 3))));
}

TEST_CASE("commuting currents report one entry per vector and mode pair") {
    const CheckReport r = run_check(spec("eq2", 1));
    std::set<std::string> vectors;
    for (const auto& e : r.entries) vectors.insert(e.vector);
    // Psi has modes a, b in [0, 2] only
    CHECK(r.entries.size() == vectors.size() * 9);
    CHECK(r.coeff_layout == "a,b");
}

TEST_CASE("unsupported pairings are rejected before computing") {
    CHECK_THROWS_AS(run_check(spec("fir1", 2, "NS")), UnsupportedRelation);
    CHECK_THROWS_AS(run_check(spec("fir2", 2, "R")), UnsupportedRelation);
    CHECK_THROWS_AS(run_check(spec("equal2", 1)), UnsupportedRelation);
    CHECK_THROWS_AS(run_check(spec("equa2", 2, "NS")), UnsupportedRelation);
    CHECK_THROWS_AS(run_check(spec("eq7", 3)), UnsupportedRelation);
    CHECK_THROWS_AS(run_check(spec("eq7", 2)), UnsupportedRelation);
    RelationSpec abstract_eq = spec("eq2", 1);
    abstract_eq.model = Model::abstract;
    CHECK_THROWS_AS(run_check(abstract_eq), UnsupportedRelation);
}

TEST_CASE("expanding a prefactor in the swapped direction is a clash") {
    RelationSpec s = spec("equa1", 1);
    s.swapped_direction = true;
    CHECK_THROWS_AS(run_check(s), DirectionalClash);
    RelationSpec plain = spec("eq2", 1);
    plain.swapped_direction = true;
    CHECK_THROWS_AS(run_check(plain), UnsupportedRelation);
}

TEST_CASE("PZ switches to W(M) beyond the realized levels") {
    const CheckReport r = run_check(spec("PZ", 3));
    CHECK(holds(r));
    REQUIRE(r.spec.model.has_value());
    CHECK(*r.spec.model == Model::abstract);
    CHECK(r.entries.front().vector == "v0");
}

TEST_CASE("suites expand level 2 into the sectors a relation accepts") {
    const auto specs = suite_specs("clifford", 2, small);
    std::set<std::string> seen;
    for (const auto& s : specs) seen.insert(s.relation + "/" + s.sector);
    CHECK(seen.count("fir1/R") == 1);
    CHECK(seen.count("fir1/NS") == 0);
    CHECK(seen.count("equala2/NS") == 1);
    CHECK(seen.count("equala2/R") == 1);
    CHECK_THROWS_AS(suite_specs("clifford", 1, small), UnsupportedRelation);
}

TEST_CASE("reports are deterministic once untimed") {
    auto run = [](const char* threads) {
        setenv("ZQ_THREADS", threads, 1);
        CheckReport r = run_check(spec("eq5", 1));
        r.elapsed_ms.reset();
        return r.to_json().dump();
    };
    const std::string one = run("1");
    CHECK(one == run("3"));
    CHECK(one == run("1"));
    unsetenv("ZQ_THREADS");

    const auto doc = json::parse(one);
    std::vector<std::string> keys;
    for (const auto& [key, value] : doc.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"relation", "params", "window", "entries", "passed", "elapsed_ms"});
    CHECK(doc["elapsed_ms"].is_null());
}

TEST_CASE("highest weight and sector checks") {
    for (int k = 1; k <= 2; ++k) {
        for (const auto& l : module_labels(k)) CHECK(holds(check_highest_weight(k, l)));
    }
    CHECK(holds(check_sector_invariance("2L1", -2, 2)));
    CHECK_THROWS_AS(check_highest_weight(1, "2L0"), std::invalid_argument);
}

TEST_CASE("S contraction closes at low order") {
    for (int k = 1; k <= 2; ++k) CHECK(holds(verify_SS_contraction(k, 3)));
}
