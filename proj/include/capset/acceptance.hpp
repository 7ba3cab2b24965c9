#pragma once

#include <functional>
#include <string>
#include <vector>

namespace capset {

enum class AcceptanceLevel { Quick, Full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    /// Soft criteria report a warning instead of failing the run.
    bool soft = false;
    std::string detail;
    double seconds = 0;
};

/// Runs the acceptance criteria in order. Quick caps the exhaustive cap search at n = 3;
/// everything else runs at full scale in both levels. The callback sees each result as it lands.
std::vector<CriterionResult> run_acceptance(AcceptanceLevel level,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// True when every non-soft criterion passed.
bool acceptance_passed(const std::vector<CriterionResult>& results);

/// floor(-log10(|a - b| / |b|)) for two decimal strings: the number of significant digits
/// on which a approximates b. Returns a large value for exact equality.
int agreeing_digits(const std::string& a, const std::string& b);

}  // namespace capset
