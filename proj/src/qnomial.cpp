#include "capset/qnomial.hpp"

#include "capset/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace capset {

namespace {

void check_args(int n, int q) {
    if (n < 0) throw DomainError("qnomial: n must be nonnegative, got " + std::to_string(n));
    if (q < 2) throw DomainError("qnomial: q must be at least 2, got " + std::to_string(q));
}

// Next row by the sliding window C(n,k) = C(n,k-1) + C(n-1,k) - C(n-1,k-q).
std::vector<BigInt> next_row(const std::vector<BigInt>& prev, int q) {
    const std::size_t len = prev.size() + static_cast<std::size_t>(q - 1);
    std::vector<BigInt> next(len);
    BigInt window = 0;
    for (std::size_t k = 0; k < len; ++k) {
        if (k < prev.size()) window += prev[k];
        if (k >= static_cast<std::size_t>(q)) window -= prev[k - q];
        next[k] = window;
    }
    return next;
}

class RowCache {
public:
    std::shared_ptr<const QNomialRow> get(int n, int q) {
        std::vector<BigInt> start;
        int from = 0;
        {
            std::lock_guard lock(mutex_);
            auto key = std::make_pair(q, n);
            if (auto it = rows_.find(key); it != rows_.end()) return it->second;
            // Resume from the largest cached row below n for the same q.
            auto it = rows_.lower_bound(key);
            if (it != rows_.begin()) {
                --it;
                if (it->first.first == q) {
                    start = it->second->coeffs;
                    from = it->first.second;
                }
            }
        }
        if (start.empty()) start = {BigInt(1)};
        for (int i = from; i < n; ++i) start = next_row(start, q);

        auto row = std::make_shared<QNomialRow>();
        row->n = n;
        row->q = q;
        row->coeffs = std::move(start);

        std::lock_guard lock(mutex_);
        auto [it, inserted] = rows_.emplace(std::make_pair(q, n), std::move(row));
        return it->second;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, std::shared_ptr<const QNomialRow>> rows_;
};

RowCache& cache() {
    static RowCache instance;
    return instance;
}

const BigInt& zero() {
    static const BigInt z = 0;
    return z;
}

}  // namespace

const BigInt& QNomialRow::at(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs.size())) return zero();
    return coeffs[static_cast<std::size_t>(k)];
}

std::shared_ptr<const QNomialRow> qnomial_row(int n, int q) {
    check_args(n, q);
    return cache().get(n, q);
}

BigInt qnomial(int n, long k, int q) {
    check_args(n, q);
    if (k < 0 || k > static_cast<long>(q - 1) * n) return 0;
    return qnomial_row(n, q)->at(k);
}

BigInt mspace_size(int n, long d, int q) {
    check_args(n, q);
    if (d < 0) throw DomainError("mspace_size: degree must be nonnegative, got " + std::to_string(d));
    auto row = qnomial_row(n, q);
    const long top = std::min<long>(d, row->degree());
    BigInt sum = 0;
    for (long k = 0; k <= top; ++k) sum += row->at(k);
    return sum;
}

BigInt series_coeff_bound(int n, int q) {
    check_args(n, q);
    const long total = static_cast<long>(q - 1) * n;
    if (total % 3 != 0) {
        throw DomainError("series_coeff_bound: (q-1)*n = " + std::to_string(total) +
                          " is not divisible by 3; one has to replace n by 3n");
    }
    const long t = total / 3;
    auto row = qnomial_row(n, q);
    // (2+z)/(1-z) = 2 + 3z + 3z^2 + ...
    BigInt below = 0;
    for (long k = 0; k < t; ++k) below += row->at(k);
    return 2 * row->at(t) + 3 * below;
}

BigInt ipow(int base, int exponent) {
    if (exponent < 0) throw DomainError("ipow: negative exponent");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
    return r;
}

}  // namespace capset
