#pragma once

#include <string>
#include <vector>

namespace matcat {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool ok = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    // "" (none), "relation" (drops a relation of the truncated quiver), "counit" (breaks a recollement counit),
    // "approx" (certifies a zero candidate as an approximation)
    std::string fault;
    std::vector<int> only;  // empty = all criteria
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});
std::string format_result(const CriterionResult& r);

}  // namespace matcat
