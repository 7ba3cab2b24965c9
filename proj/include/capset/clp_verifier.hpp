#pragma once

#include "capset/field_poly.hpp"
#include "capset/matrix_mod_p.hpp"
#include "capset/point_set.hpp"

#include <vector>

namespace capset {

/// Basis of the polynomials of degree <= d in n variables over F_p that vanish on every point
/// of `zeros`: the null space of the |zeros| x |M(n,d)| evaluation matrix. Zero polynomials are
/// never returned, and the basis size is |M(n,d)| - rank >= |M(n,d)| - |zeros|.
std::vector<FieldPoly> vanishing_space_basis(int n, int d, const PointSet& zeros, int p = 3);

/// |A| x |A| matrix with entry (a, b) = P(-a-b), rows and columns in base-p code order of A.
ModMatrix product_matrix(const FieldPoly& poly, const PointSet& set);

struct VerifierReport {
    int n = 0;
    int d = 0;
    long set_size = 0;         ///< |A|
    long monomial_count = 0;   ///< |M(n,d)|
    long dim_v = 0;
    long dim_lower_bound = 0;  ///< |M(n,d)| - (3^n - |A|)
    long max_support = 0;      ///< largest support among the basis elements
    long spread_support = 0;   ///< support of a member of V built to be nonzero on dim_v points of A
    long support_cap = 0;      ///< 2 |M(n, floor(d/2))|
    int rank = 0;              ///< largest rank of a product matrix over the basis
    bool diagonal_ok = false;
    bool rank_ok = false;
    bool support_ok = false;
    bool bound_ok = false;

    bool all_ok() const { return diagonal_ok && rank_ok && support_ok && bound_ok; }
};

/// Checks the linear-algebra core of the polynomial-method bound on a progression-free A in F_3^n:
///  - every basis element P of V (degree <= d, zero off A) gives a diagonal product matrix,
///  - whose rank is at most 2|M(n, floor(d/2))|,
///  - and |support(P)| is at most that cap too (a member with support >= dim V is also checked),
///  - dim V >= |M(n,d)| - |F_3^n \ A|, hence |A| <= cap + 3^n - |M(n,d)|.
/// Throws PreconditionError if A is not progression-free, UnsupportedError if p != 3.
VerifierReport verify_support_bound(int n, int d, const PointSet& set, int p = 3);

}  // namespace capset
