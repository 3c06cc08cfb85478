#pragma once

// The acceptance criteria as library code, shared by `galilei verify all`
// and the acceptance test binary.

#include <string>
#include <vector>

namespace galilei::verify {

struct Check {
    std::string claim;
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double wall_time_ms = 0;

    bool pass() const;
    // First failing check, or a short summary when everything passed.
    std::string summary() const;
};

struct Scope {
    int degree = 60;        // series truncation
    int max_k = 6;          // generating-function k range
    int max_l = 12;         // generating-function weight range
    int max_n = 12;         // partition sizes / independence
    int max_depth = 8;      // radical filtrations
    int tensor_bound = 8;   // k, n range for the tensor rules

    static Scope full() { return {}; }
    // Smaller ranges for a fast smoke run; every claim is still exercised.
    static Scope quick() { return {30, 6, 6, 8, 5, 6}; }
};

CriterionResult triple_agreement(const Scope& s);       // 1
CriterionResult closed_form_identities(const Scope& s); // 2
CriterionResult negativity(const Scope& s);             // 3
CriterionResult structure_detection(const Scope& s);    // 4
CriterionResult young_lattice(const Scope& s);          // 5
CriterionResult symmetric_algebra(const Scope& s);      // 6
CriterionResult multiplicities(const Scope& s);         // 7
CriterionResult tensor_calculus(const Scope& s);        // 8
CriterionResult quivers(const Scope& s);                // 9

// Criteria 1..9, run concurrently when parallel is set; results are in id order.
std::vector<CriterionResult> run_all(const Scope& s, bool parallel = true);

}  // namespace galilei::verify
