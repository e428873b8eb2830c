#pragma once

// Property suites over bounded families of tableaux, weights and operators.
// Each suite counts checked cases and records counterexamples.

#include <cstdint>
#include <string>
#include <vector>

#include "ospbasis/json_io.hpp"

namespace ospbasis {

struct VerifyOptions {
    std::vector<int> n_values{1, 2, 3};
    std::vector<int> p_values{1, 2, 3};
    int max_weight = 4;        // bound on |mu|
    int cases = 500;           // randomized suites
    int max_degree = 4;        // random polynomials in the relations suite
    int max_klm = 3;           // n2-oracle
    std::uint64_t seed = 20240601;
    std::size_t budget = 40320; // largest |S_mu| for permutation sums
    std::size_t max_failures = 20;
};

struct SuiteReport {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    double seconds = 0;
    std::vector<Json> failures; // first max_failures counterexamples
    std::size_t failure_count = 0;

    void fail(Json counterexample, std::size_t keep);
};

// Suite names: relations, expansion, leading, coeff-triple, unitriangular,
// dual-path, n2-oracle, verma. "all" runs every suite.
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown name.
std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& opt);

Json to_json(const SuiteReport& r);
Json verify_document(const std::vector<SuiteReport>& reports);

// Every mu in N_0^n with |mu| <= max_total, graded lex ascending.
std::vector<WeightVector> weights_up_to(int n, int max_total);

} // namespace ospbasis
