#pragma once

#include "capset/qnomial.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace capset {

enum class BoundMethod { ForD, Optimal, Theorem, Sharp, Series };

std::string to_string(BoundMethod m);

/// One computed upper bound on a progression-free subset of F_q^n.
struct BoundReport {
    int n = 0;
    int q = 3;
    std::optional<long> d;
    BigInt value;
    BoundMethod method = BoundMethod::ForD;
    /// Exact cross-checks evaluated while producing the value.
    std::vector<std::pair<std::string, bool>> identities;

    bool identities_pass() const;
};

/// 2|M(n, floor(d/2))| + 3^n - |M(n,d)|, valid for every 0 <= d <= 2n. Only q = 3.
BoundReport bound_for_d(int n, long d, int q = 3);

/// Exhaustive argmin of bound_for_d over d in [0, 2n]; ties go to the smaller d.
BoundReport optimal_bound(int n, int q = 3);

/// 3 * sum_{k <= floor(2n/3)} C(n,k)_2.
BoundReport theorem_bound(int n);

/// theorem_bound(n) - C(n, 2n/3)_2 for n divisible by 3, cross-checked against
/// bound_for_d(n, 4n/3) and series_coeff_bound(n, 3).
BoundReport sharp_bound(int n);

/// series_coeff_bound wrapped as a report (any q with (q-1)n divisible by 3).
BoundReport series_bound(int n, int q);

}  // namespace capset
