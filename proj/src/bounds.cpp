#include "capset/bounds.hpp"

#include "capset/errors.hpp"

#include <string>

namespace capset {

namespace {

void require_n(int n) {
    if (n < 0) throw DomainError("bounds: n must be nonnegative, got " + std::to_string(n));
}

// The rank argument uses a+b+c = 0 over F_3 and -2b = b; nothing here generalizes it.
void require_f3(int q) {
    if (q != 3) throw UnsupportedError("bounds: the degree-family bound is implemented for q = 3 only");
}

BigInt family_value(int n, long d) {
    return 2 * mspace_size(n, d / 2, 3) + ipow(3, n) - mspace_size(n, d, 3);
}

}  // namespace

std::string to_string(BoundMethod m) {
    switch (m) {
        case BoundMethod::ForD: return "for_d";
        case BoundMethod::Optimal: return "optimal";
        case BoundMethod::Theorem: return "theorem";
        case BoundMethod::Sharp: return "sharp";
        case BoundMethod::Series: return "series";
    }
    return "unknown";
}

bool BoundReport::identities_pass() const {
    for (const auto& [name, ok] : identities)
        if (!ok) return false;
    return true;
}

BoundReport bound_for_d(int n, long d, int q) {
    require_n(n);
    require_f3(q);
    if (d < 0 || d > 2L * n) {
        throw DomainError("bound_for_d: d = " + std::to_string(d) + " outside [0, " + std::to_string(2L * n) + "]");
    }
    BoundReport r;
    r.n = n;
    r.q = 3;
    r.d = d;
    r.method = BoundMethod::ForD;
    r.value = family_value(n, d);
    return r;
}

BoundReport optimal_bound(int n, int q) {
    require_n(n);
    require_f3(q);
    BoundReport best;
    best.n = n;
    best.q = 3;
    best.method = BoundMethod::Optimal;
    for (long d = 0; d <= 2L * n; ++d) {
        BigInt v = family_value(n, d);
        if (!best.d || v < best.value) {
            best.d = d;
            best.value = std::move(v);
        }
    }
    return best;
}

BoundReport theorem_bound(int n) {
    require_n(n);
    BoundReport r;
    r.n = n;
    r.q = 3;
    r.method = BoundMethod::Theorem;
    r.value = 3 * mspace_size(n, (2L * n) / 3, 3);
    return r;
}

BoundReport sharp_bound(int n) {
    require_n(n);
    if (n % 3 != 0) throw DomainError("sharp_bound: n must be a multiple of 3, got " + std::to_string(n));
    const long t = 2L * n / 3;
    BoundReport r;
    r.n = n;
    r.q = 3;
    r.d = 2 * t;
    r.method = BoundMethod::Sharp;
    r.value = theorem_bound(n).value - qnomial(n, t, 3);
    r.identities.emplace_back("equals bound_for_d(n, 4n/3)", r.value == family_value(n, 2 * t));
    r.identities.emplace_back("equals series_coeff_bound(n, 3)", r.value == series_coeff_bound(n, 3));
    return r;
}

BoundReport series_bound(int n, int q) {
    BoundReport r;
    r.n = n;
    r.q = q;
    r.method = BoundMethod::Series;
    r.value = series_coeff_bound(n, q);
    return r;
}

}  // namespace capset
