#include "capset/matrix_mod_p.hpp"

#include "capset/errors.hpp"

#include <utility>

namespace capset {

bool ModMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && (*this)(r, c) != 0) return false;
    return true;
}

std::uint32_t inverse_mod(std::uint32_t a, int p) {
    if (a % static_cast<std::uint32_t>(p) == 0) throw DomainError("inverse_mod: zero has no inverse");
    // Fermat: a^(p-2)
    std::uint64_t base = a % static_cast<std::uint32_t>(p), result = 1;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % static_cast<std::uint64_t>(p);
        base = base * base % static_cast<std::uint64_t>(p);
    }
    return static_cast<std::uint32_t>(result);
}

std::vector<std::size_t> row_reduce(ModMatrix& m) {
    const std::uint64_t p = static_cast<std::uint64_t>(m.p());
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
        const std::uint64_t inv = inverse_mod(m(row, col), m.p());
        for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = static_cast<std::uint32_t>(m(row, c) * inv % p);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const std::uint64_t factor = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c)
                m(r, c) = static_cast<std::uint32_t>((m(r, c) + (p - factor) * m(row, c)) % p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank_mod_p(ModMatrix m) {
    return static_cast<int>(row_reduce(m).size());
}

std::vector<std::vector<std::uint32_t>> nullspace_mod_p(ModMatrix m) {
    const auto pivots = row_reduce(m);
    const std::uint32_t p = static_cast<std::uint32_t>(m.p());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m(r, free)) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace capset
