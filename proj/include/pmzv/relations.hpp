#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pmzv/index.hpp"
#include "pmzv/symbol_poly.hpp"

namespace pmzv {

// A linear relation "relation = 0" among zeta monomials of one weight.
struct RelationRow {
    int weight = 0;
    SymbolPoly relation;
    std::string origin;
};

// All monomials in admissible zeta symbols of the flavor with total weight w,
// ascending in the pivot order below.
std::vector<Monomial> zeta_monomials(int w, ZetaFlavor flavor);

// Pivot order: the generators of a monomial, each keyed by (weight, depth,
// entries), are listed in descending order and the lists compared
// lexicographically. Products of low-weight symbols sort first and so
// survive as basis elements.
bool monomial_precedes(const Monomial& a, const Monomial& b);

// Rows of weight w (w >= 2):
//   admissible i, j: (shuffle expansion of zeta(i)zeta(j)) - (stuffle expansion)
//     and zeta(i)zeta(j) - (stuffle expansion);
//   (1) x admissible j: the stuffle expansion of zeta(1)zeta(j) with every
//     divergent index given its shuffle-regularized value (C_A = C_B = 0),
//     compared with zero (the regularized zeta(1) vanishes);
//   every row of weight w' <= w - 2 times every zeta monomial of weight w - w'.
// Rows are normalized (leading coefficient 1) and deduplicated; rows that
// expand to zero are dropped.
std::vector<RelationRow> generate_double_shuffle(int w, ZetaFlavor flavor);

struct RelationReduction {
    int weight = 0;
    std::size_t rank = 0;
    std::vector<Monomial> columns;  // ascending pivot order
    std::vector<Monomial> basis;    // non-pivot columns, ascending
    // Each column as a combination of basis monomials.
    std::map<Monomial, std::map<Monomial, Rational>> expression;

    // Rewrites a polynomial of this weight in the basis monomials.
    [[nodiscard]] SymbolPoly reduce(const SymbolPoly& q) const;
};

// Fraction-free elimination over the integers, pivoting on the largest
// monomial of each row, then back-substitution. The column set is the full
// monomial list of the flavor plus any monomial found in the rows.
RelationReduction reduce_relations(const std::vector<RelationRow>& rows, int w, ZetaFlavor flavor);

// Header "weight,lhs_monomial,<basis...>", one line per column.
std::string relations_csv(const RelationReduction& r);

} // namespace pmzv
