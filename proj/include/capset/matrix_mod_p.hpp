#pragma once

#include <cstdint>
#include <vector>

namespace capset {

/// Dense row-major matrix over F_p.
class ModMatrix {
public:
    ModMatrix(int p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    int p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    bool is_diagonal() const;
    bool operator==(const ModMatrix&) const = default;

private:
    int p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

/// Multiplicative inverse of a nonzero a in F_p.
std::uint32_t inverse_mod(std::uint32_t a, int p);

/// In-place reduced row echelon form; returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(ModMatrix& m);

/// Rank over F_p by Gaussian elimination.
int rank_mod_p(ModMatrix m);

/// Basis of {v : M v = 0}, one vector per free column (that column's entry is 1).
std::vector<std::vector<std::uint32_t>> nullspace_mod_p(ModMatrix m);

}  // namespace capset
