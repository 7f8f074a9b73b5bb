#pragma once

#include <array>

#include "atoms.hpp"
#include "morphism.hpp"

namespace adcat {

/* An i-cell presented by its table of chains (x^0_k, x^1_k), 0 <= k <= i,
   with equal top rows.  Rows above the top are implicitly zero. */
struct cell {
    std::shared_ptr<const complex> in;
    int dim = 0;
    std::vector<std::array<chain, 2>> rows;

    const chain& row(int k, int eps) const {
        return rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(eps)];
    }
    const chain& top() const { return rows[static_cast<std::size_t>(dim)][0]; }

    friend bool operator==(const cell& a, const cell& b) {
        return a.dim == b.dim && a.rows == b.rows;
    }
    friend bool operator!=(const cell& a, const cell& b) { return !(a == b); }
    friend bool operator<(const cell& a, const cell& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.rows < b.rows;
    }
};

inline report validate_cell(const cell& c) {
    report r;
    const complex& K = *c.in;
    if (c.rows.size() != static_cast<std::size_t>(c.dim) + 1) {
        r.violations.push_back({"table must have dim+1 rows", std::to_string(c.rows.size())});
        return r;
    }
    for (int k = 0; k <= c.dim; ++k)
        for (int eps = 0; eps < 2; ++eps) {
            const chain& x = c.row(k, eps);
            if (!x.is_zero() && x.degree() != k) {
                r.violations.push_back({"row degree mismatch", "row " + std::to_string(k)});
                return r;
            }
            if (!K.supported_on_basis(x)) {
                r.violations.push_back({"row leaves the basis", "row " + std::to_string(k)});
                return r;
            }
            if (!x.nonnegative())
                r.violations.push_back({"row is not positive", "row " + std::to_string(k) +
                                        " side " + std::to_string(eps)});
        }
    if (c.row(c.dim, 0) != c.row(c.dim, 1))
        r.violations.push_back({"top rows differ", "row " + std::to_string(c.dim)});
    for (int k = 1; k <= c.dim; ++k)
        for (int eps = 0; eps < 2; ++eps) {
            chain want = c.row(k - 1, 1) - c.row(k - 1, 0);
            if (K.diff(c.row(k, eps)) != want)
                r.violations.push_back({"d(x^e_k) != x^1_{k-1} - x^0_{k-1}",
                                        "row " + std::to_string(k) + " side " + std::to_string(eps)});
        }
    for (int eps = 0; eps < 2; ++eps)
        if (K.aug(c.row(0, eps)) != 1)
            r.violations.push_back({"e(x^e_0) != 1", "side " + std::to_string(eps)});
    return r;
}

inline cell require_valid(cell c, const char* who) {
    report r = validate_cell(c);
    if (!r.ok())
        throw error(std::string(who) + " produced an invalid cell: " + r.violations.front().check +
                    " (" + r.violations.front().witness + ")");
    return c;
}

/* j-fold iterated source/target: truncate, keeping the chosen side on top */
inline cell cell_boundary(const cell& c, int j, int eps) {
    if (j < 0 || j > c.dim) throw error("boundary index out of range");
    cell r;
    r.in = c.in;
    r.dim = j;
    r.rows.assign(c.rows.begin(), c.rows.begin() + j + 1);
    chain side = r.rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(eps)];
    r.rows[static_cast<std::size_t>(j)] = {side, side};
    return r;
}

inline cell cell_source(const cell& c, int j) { return cell_boundary(c, j, 0); }
inline cell cell_target(const cell& c, int j) { return cell_boundary(c, j, 1); }

inline cell cell_identity(const cell& c) {
    cell r = c;
    r.dim = c.dim + 1;
    r.rows.push_back({chain(r.dim), chain(r.dim)});
    return r;
}

inline cell cell_iterated_identity(const cell& c, int dim) {
    cell r = c;
    while (r.dim < dim) r = cell_identity(r);
    if (r.dim != dim) throw error("cannot lower a cell's dimension by identities");
    return r;
}

/* strict composition of two i-cells along a j-boundary */
inline cell cell_compose(const cell& x, const cell& y, int j) {
    if (x.dim != y.dim) throw error("cell composition requires equal dimensions");
    if (j < 0 || j >= x.dim) throw error("composition index out of range");
    if (cell_source(x, j) != cell_target(y, j))
        throw error("cells are not composable: s_j(x) != t_j(y)");
    cell r;
    r.in = x.in;
    r.dim = x.dim;
    r.rows.resize(static_cast<std::size_t>(x.dim) + 1);
    for (int k = 0; k <= x.dim; ++k) {
        if (k <= j) r.rows[static_cast<std::size_t>(k)] = {y.row(k, 0), x.row(k, 1)};
        else r.rows[static_cast<std::size_t>(k)] = {x.row(k, 0) + y.row(k, 0),
                                                    x.row(k, 1) + y.row(k, 1)};
    }
    return r;
}

/* whiskering: the lower-dimensional factor is padded with identities */
inline cell cell_compose_pad(const cell& x, const cell& y, int j) {
    int dim = std::max(x.dim, y.dim);
    return cell_compose(cell_iterated_identity(x, dim), cell_iterated_identity(y, dim), j);
}

/* ((base o_0 t[0]) o_1 t[1]) ...: t[m] attaches at the m-source of the base */
inline cell paste_onto_sources(cell base, const std::vector<cell>& tower) {
    for (std::size_t m = 0; m < tower.size(); ++m)
        base = cell_compose_pad(base, tower[m], static_cast<int>(m));
    return base;
}

/* t[k-1] o_{k-1} (... (t[0] o_0 base)): t[m] attaches at the m-target */
inline cell paste_onto_targets(cell base, const std::vector<cell>& tower) {
    for (std::size_t m = 0; m < tower.size(); ++m)
        base = cell_compose_pad(tower[m], base, static_cast<int>(m));
    return base;
}

inline cell atom_cell(const complex& K, std::shared_ptr<const complex> Kp, const chain& x) {
    atom_table t = make_atom_table(K, x);
    cell c;
    c.in = std::move(Kp);
    c.dim = x.degree();
    c.rows = std::move(t.rows);
    report r = validate_cell(c);
    if (!r.ok())
        throw error("atom of '" + chain_to_string(x) + "' is not a cell: " + r.violations.front().check);
    return c;
}

inline cell atom_cell(const std::shared_ptr<const complex>& K, const chain& x) {
    return atom_cell(*K, K, x);
}

inline cell atom_cell(const std::shared_ptr<const complex>& K, const generator& g) {
    return atom_cell(*K, K, chain::unit(g.degree, g.name));
}

inline cell apply_functor(const morphism& f, const cell& c) {
    cell r;
    r.in = f.target_ptr();
    r.dim = c.dim;
    for (const auto& row : c.rows) r.rows.push_back({f.apply(row[0]), f.apply(row[1])});
    return require_valid(std::move(r), "apply_functor");
}

/* image of a cell in the abelianization: its top chain */
inline chain cell_class(const cell& c) { return c.top(); }

namespace detail {

/* all coefficientwise-bounded nonnegative chains on a degree's basis */
inline std::vector<chain> nonneg_chains(const complex& K, int degree, i64 cap) {
    const auto& names = K.basis_at(degree);
    double estimate = 1;
    for (std::size_t i = 0; i < names.size(); ++i) estimate *= static_cast<double>(cap + 1);
    if (estimate > 5e6) throw error("enumeration too large in degree " + std::to_string(degree));
    std::vector<chain> out{chain(degree)};
    for (const auto& n : names) {
        std::vector<chain> next;
        for (const auto& c : out)
            for (i64 v = 0; v <= cap; ++v) {
                chain d = c;
                d.add(n, v);
                next.push_back(std::move(d));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/* All i-cells with coefficients in [0, cap], built top-down: choose the top
   chain, then propagate boundary constraints row by row. */
inline std::vector<cell> enumerate_cells(const std::shared_ptr<const complex>& Kp, int dim, i64 cap) {
    const complex& K = *Kp;
    std::vector<cell> out;

    /* rows from level down to dim are fixed; extend downward */
    auto descend = [&](auto&& self, std::vector<std::array<chain, 2>>& rows, int level) -> void {
        if (level < 0) {
            cell c;
            c.in = Kp;
            c.dim = dim;
            c.rows.assign(rows.rbegin(), rows.rend());
            out.push_back(std::move(c));
            return;
        }
        const auto& above = rows.back();
        chain delta0 = K.diff(above[0]);
        if (delta0 != K.diff(above[1])) return;   /* no level can reconcile the two */
        const auto& names = K.basis_at(level);
        /* per generator: x1 - x0 = delta, both in [0, cap] */
        std::vector<std::pair<std::string, i64>> deltas;
        for (const auto& n : names) deltas.emplace_back(n, delta0.coeff(n));
        for (const auto& [n, d] : delta0.coeffs())
            if (!K.has_generator(level, n)) return;   /* difference leaves the basis */

        std::vector<std::array<chain, 2>> partial{{chain(level), chain(level)}};
        for (const auto& [n, d] : deltas) {
            std::vector<std::array<chain, 2>> next;
            i64 lo = std::max<i64>(0, -d), hi = std::min<i64>(cap, cap - d);
            for (const auto& p : partial)
                for (i64 a = lo; a <= hi; ++a) {
                    std::array<chain, 2> q = p;
                    q[0].add(n, a);
                    q[1].add(n, a + d);
                    next.push_back(std::move(q));
                }
            partial = std::move(next);
        }
        for (auto& p : partial) {
            if (level == 0 && (K.aug(p[0]) != 1 || K.aug(p[1]) != 1)) continue;
            rows.push_back(p);
            self(self, rows, level - 1);
            rows.pop_back();
        }
    };

    for (const auto& top : detail::nonneg_chains(K, dim, cap)) {
        if (dim == 0 && K.aug(top) != 1) continue;
        std::vector<std::array<chain, 2>> rows{{top, top}};
        descend(descend, rows, dim - 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/* All morphisms K -> L with image coefficients in [0, cap], degree by
   degree; the candidate images of a generator are filtered by the
   commutation constraint against the already-chosen lower degrees. */
inline std::vector<morphism> enumerate_adc_morphisms(const std::shared_ptr<const complex>& Kp,
                                                     const std::shared_ptr<const complex>& Lp,
                                                     i64 cap) {
    const complex& K = *Kp;
    const complex& L = *Lp;
    std::vector<generator> gens = K.all_generators();   /* sorted by (degree, name) */
    std::map<int, std::vector<chain>> pool;
    for (const auto& g : gens)
        if (!pool.count(g.degree)) pool[g.degree] = detail::nonneg_chains(L, g.degree, cap);

    std::vector<morphism> out;
    morphism f(Kp, Lp);
    auto place = [&](auto&& self, std::size_t at) -> void {
        if (at == gens.size()) {
            out.push_back(f);
            return;
        }
        const generator& g = gens[at];
        if (g.degree == 0) {
            i64 want = K.aug_gen(g.name);
            for (const auto& c : pool[0]) {
                if (L.aug(c) != want) continue;
                f.set_image(0, g.name, c);
                self(self, at + 1);
            }
        } else {
            chain want = f.apply(K.diff_gen(g));
            for (const auto& c : pool[g.degree]) {
                if (L.diff(c) != want) continue;
                f.set_image(g.degree, g.name, c);
                self(self, at + 1);
            }
        }
        f.set_image(g.degree, g.name, chain(g.degree));
    };
    place(place, 0);
    return out;
}

} // namespace adcat
