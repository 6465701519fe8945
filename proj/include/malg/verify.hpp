#pragma once

#include <string>
#include <vector>

#include "malg/oracle.hpp"

namespace malg {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Named cross-validation packs. Each check compares two independent routes
// (structured basis/normal form vs the consequence-space oracle vs the
// differential model) or verifies defining identities.

std::vector<CheckResult> mnov_identities_suite();
std::vector<CheckResult> mnov_basis_suite(int degree, const EliminationOptions& opts = {});
std::vector<CheckResult> mnov_table_suite(int degree);
std::vector<CheckResult> mnov_sym_suite(int degree, bool with_oracle,
                                        const EliminationOptions& opts = {});
std::vector<CheckResult> diffcom_suite(int degree, const EliminationOptions& opts = {});

std::vector<CheckResult> mla_identities_suite();
std::vector<CheckResult> mla_basis_suite(int degree, const EliminationOptions& opts = {});
std::vector<CheckResult> mla_table_suite(int degree);
std::vector<CheckResult> mla_sym_suite(int degree, bool with_oracle,
                                       const EliminationOptions& opts = {});

// suite: identities | basis | table | sym | all
std::vector<CheckResult> verify_suite(const std::string& variety, int degree,
                                      const std::string& suite,
                                      const EliminationOptions& opts = {});

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace malg
