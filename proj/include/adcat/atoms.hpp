#pragma once

#include <array>

#include "complex.hpp"

namespace adcat {

/* Atom table of a homogeneous element x of degree i: rows (a^0_k, a^1_k)
   for 0 <= k <= i, built downward from a^0_i = a^1_i = x by
   a^0_{k-1} = d(a^0_k)_-   and   a^1_{k-1} = d(a^1_k)_+. */
struct atom_table {
    chain element;
    std::vector<std::array<chain, 2>> rows;   /* rows[k][eps], k = 0..degree */

    int degree() const { return element.degree(); }
    const chain& row(int k, int eps) const { return rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(eps)]; }
};

inline atom_table make_atom_table(const complex& K, const chain& x) {
    if (!K.supported_on_basis(x))
        throw error("atom table requested for a chain outside the basis lattice");
    atom_table t;
    t.element = x;
    int i = x.degree();
    t.rows.assign(static_cast<std::size_t>(i) + 1, {chain(0), chain(0)});
    t.rows[static_cast<std::size_t>(i)] = {x, x};
    for (int k = i; k > 0; --k) {
        const auto& row = t.rows[static_cast<std::size_t>(k)];
        t.rows[static_cast<std::size_t>(k - 1)] = {K.diff(row[0]).negative_part(),
                                                   K.diff(row[1]).positive_part()};
    }
    return t;
}

inline atom_table make_atom_table(const complex& K, const generator& g) {
    return make_atom_table(K, chain::unit(g.degree, g.name));
}

} // namespace adcat
