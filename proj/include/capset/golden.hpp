#pragma once

// Published reference values the computations are checked against. Each string is copied
// digit for digit from the printed source; trailing "..." in the source is dropped, so the
// last digit shown is the last printed digit (truncated, not rounded, in the source).

#include <array>
#include <string_view>

namespace capset::golden {

// Largest root of 1024 N^2 - 22356 N + 19683, printed to 18 decimals.
inline constexpr std::string_view kCharacteristicRoot = "20.912901011846452219";
// Its cube root, printed to 19 decimals.
inline constexpr std::string_view kAlpha = "2.7551046130236330002";
// Constant C in |A| <= C alpha^n n^(-1/2) (1 + c1/n + ...), and c1.
inline constexpr std::string_view kLeadingConstant = "3.3267627467425979588";
inline constexpr std::string_view kFirstCorrection = "-5.1543714155636062458";

// Coefficients of the constant-coefficient limit recurrence
//   19683 d0(n) - 22356 d0(n+1) + 1024 d0(n+2) = 0.
inline constexpr std::array<long, 3> kLimitRecurrence{19683, -22356, 1024};

struct TableEntry {
    int q;
    std::string_view value;
};

// Growth constants for primes and prime powers 4 <= q <= 31, as printed.
inline constexpr std::array<TableEntry, 15> kGrowthTable{{
    {4, "3.610718613276039349"},
    {5, "4.461577765702577811"},
    {7, "6.156204863216738416"},
    {8, "7.0015547549940074584"},
    {9, "7.846120582585805712"},
    {11, "9.533685392075550992"},
    {13, "11.21990798911487743"},
    {16, "13.74776213458745700"},
    {17, "14.590117162"},
    {19, "16.274551068400264"},
    {23, "19.6426364587288"},
    {25, "21.3264083101"},
    {27, "23.010051182485787"},
    {29, "24.69359086763659"},
    {31, "26.3770467097314914"},
}};

}  // namespace capset::golden
