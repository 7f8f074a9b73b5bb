#pragma once

#include <functional>
#include <optional>

#include "analysis.hpp"
#include "cells.hpp"
#include "colimit.hpp"

namespace adcat {

namespace detail {

inline bool compound_label(const std::string& s) {
    return s.find("⋆") != std::string::npos || s.find("⊗") != std::string::npos;
}

inline std::string wrap_label(const std::string& s) {
    return compound_label(s) ? "(" + s + ")" : s;
}

inline chain reindex(const chain& c, int degree) {
    chain r(degree);
    for (const auto& [n, v] : c.coeffs()) r.add(n, v);
    return r;
}

} // namespace detail

inline std::string join_label(const std::optional<std::string>& x, const std::optional<std::string>& y) {
    if (!x && !y) throw error("a join generator needs at least one side");
    if (!y) return detail::wrap_label(*x) + "⋆∅";
    if (!x) return "∅⋆" + detail::wrap_label(*y);
    return detail::wrap_label(*x) + "⋆" + detail::wrap_label(*y);
}

inline std::string tensor_label(const std::string& x, const std::string& y) {
    return detail::wrap_label(x) + "⊗" + detail::wrap_label(y);
}

/* ---- suspension ---- */

/* degrees shift up; a fresh bottom generator absorbs the old augmentation
   as the new bottom differential, and itself augments to zero */
inline complex suspend(const complex& K) {
    complex S("S(" + K.name() + ")");
    S.add_generator(0, "⊥");
    for (const auto& [deg, names] : K.basis())
        for (const auto& n : names) S.add_generator(deg + 1, n);
    for (const auto& [deg, names] : K.basis())
        for (const auto& n : names) {
            if (deg == 0) S.set_diff(n, chain::unit(0, "⊥", K.aug_gen(n)));
            else S.set_diff(n, detail::reindex(K.diff_gen({n, deg}), deg));
        }
    return S;
}

inline complex desuspend(const complex& K) {
    const auto& bottom = K.basis_at(0);
    if (bottom.size() != 1 || K.aug_gen(bottom.front()) != 0)
        throw error("desuspension needs exactly one degree 0 generator with zero augmentation");
    const std::string& base = bottom.front();
    complex R("S^-1(" + K.name() + ")");
    for (const auto& [deg, names] : K.basis()) {
        if (deg == 0) continue;
        for (const auto& n : names) R.add_generator(deg - 1, n);
    }
    for (const auto& [deg, names] : K.basis()) {
        if (deg == 0) continue;
        for (const auto& n : names) {
            chain d = K.diff_gen({n, deg});
            if (deg == 1) R.set_aug(n, d.coeff(base));
            else R.set_diff(n, detail::reindex(d, deg - 2));
        }
    }
    return R;
}

/* ---- join ---- */

inline complex join_complex(const complex& K, const complex& L) {
    complex J(detail::wrap_label(K.name()) + "⋆" + detail::wrap_label(L.name()));
    std::vector<generator> xs = K.all_generators(), ys = L.all_generators();
    for (const auto& x : xs) J.add_generator(x.degree, join_label(x.name, {}));
    for (const auto& y : ys) J.add_generator(y.degree, join_label({}, y.name));
    for (const auto& x : xs)
        for (const auto& y : ys)
            J.add_generator(x.degree + 1 + y.degree, join_label(x.name, y.name));

    for (const auto& x : xs) {
        if (x.degree == 0) {
            J.set_aug(join_label(x.name, {}), K.aug_gen(x.name));
        } else {
            chain d(x.degree - 1);
            for (const auto& [u, c] : K.diff_gen(x).coeffs()) d.add(join_label(u, {}), c);
            J.set_diff(join_label(x.name, {}), d);
        }
    }
    for (const auto& y : ys) {
        if (y.degree == 0) {
            J.set_aug(join_label({}, y.name), L.aug_gen(y.name));
        } else {
            chain d(y.degree - 1);
            for (const auto& [v, c] : L.diff_gen(y).coeffs()) d.add(join_label({}, v), c);
            J.set_diff(join_label({}, y.name), d);
        }
    }
    for (const auto& x : xs)
        for (const auto& y : ys) {
            int p = x.degree, q = y.degree;
            chain d(p + q);
            if (p == 0) d.add(join_label({}, y.name), K.aug_gen(x.name));
            else for (const auto& [u, c] : K.diff_gen(x).coeffs()) d.add(join_label(u, y.name), c);
            i64 s = (p % 2 == 1) ? 1 : -1;   /* (-1)^{p+1} */
            if (q == 0) d.add(join_label(x.name, {}), checked_mul(s, L.aug_gen(y.name)));
            else for (const auto& [v, c] : L.diff_gen(y).coeffs())
                d.add(join_label(x.name, v), checked_mul(s, c));
            J.set_diff(join_label(x.name, y.name), d);
        }
    return J;
}

struct join_parts {
    std::shared_ptr<const complex> object;
    morphism i1, i2;
};

inline join_parts make_join(const std::shared_ptr<const complex>& Kp,
                            const std::shared_ptr<const complex>& Lp) {
    join_parts r;
    r.object = share(join_complex(*Kp, *Lp));
    r.i1 = morphism(Kp, r.object);
    for (const auto& x : Kp->all_generators())
        r.i1.set_image(x.degree, x.name, chain::unit(x.degree, join_label(x.name, {})));
    r.i2 = morphism(Lp, r.object);
    for (const auto& y : Lp->all_generators())
        r.i2.set_image(y.degree, y.name, chain::unit(y.degree, join_label({}, y.name)));
    return r;
}

inline morphism join_of_morphisms(const morphism& f, const morphism& g) {
    auto S = share(join_complex(f.source(), g.source()));
    auto T = share(join_complex(f.target(), g.target()));
    morphism r(S, T);
    for (const auto& x : f.source().all_generators()) {
        chain img(x.degree);
        for (const auto& [u, c] : f.image_gen(x).coeffs()) img.add(join_label(u, {}), c);
        r.set_image(x.degree, join_label(x.name, {}), img);
    }
    for (const auto& y : g.source().all_generators()) {
        chain img(y.degree);
        for (const auto& [v, c] : g.image_gen(y).coeffs()) img.add(join_label({}, v), c);
        r.set_image(y.degree, join_label({}, y.name), img);
    }
    for (const auto& x : f.source().all_generators())
        for (const auto& y : g.source().all_generators()) {
            chain img(x.degree + 1 + y.degree);
            for (const auto& [u, cu] : f.image_gen(x).coeffs())
                for (const auto& [v, cv] : g.image_gen(y).coeffs())
                    img.add(join_label(u, v), checked_mul(cu, cv));
            r.set_image(x.degree + 1 + y.degree, join_label(x.name, y.name), img);
        }
    return r;
}

/* ---- tensor ---- */

inline complex tensor_complex(const complex& K, const complex& L) {
    complex T(detail::wrap_label(K.name()) + "⊗" + detail::wrap_label(L.name()));
    std::vector<generator> xs = K.all_generators(), ys = L.all_generators();
    for (const auto& x : xs)
        for (const auto& y : ys)
            T.add_generator(x.degree + y.degree, tensor_label(x.name, y.name));
    for (const auto& x : xs)
        for (const auto& y : ys) {
            int p = x.degree, q = y.degree;
            if (p + q == 0) {
                T.set_aug(tensor_label(x.name, y.name),
                          checked_mul(K.aug_gen(x.name), L.aug_gen(y.name)));
                continue;
            }
            chain d(p + q - 1);
            if (p >= 1)
                for (const auto& [u, c] : K.diff_gen(x).coeffs()) d.add(tensor_label(u, y.name), c);
            i64 s = (p % 2 == 0) ? 1 : -1;   /* (-1)^p */
            if (q >= 1)
                for (const auto& [v, c] : L.diff_gen(y).coeffs())
                    d.add(tensor_label(x.name, v), checked_mul(s, c));
            T.set_diff(tensor_label(x.name, y.name), d);
        }
    return T;
}

inline complex tensor_unit() {
    complex U("1");
    U.add_generator(0, "*");
    U.set_aug("*", 1);
    return U;
}

inline morphism tensor_of_morphisms(const morphism& f, const morphism& g) {
    auto S = share(tensor_complex(f.source(), g.source()));
    auto T = share(tensor_complex(f.target(), g.target()));
    morphism r(S, T);
    for (const auto& x : f.source().all_generators())
        for (const auto& y : g.source().all_generators()) {
            chain img(x.degree + y.degree);
            for (const auto& [u, cu] : f.image_gen(x).coeffs())
                for (const auto& [v, cv] : g.image_gen(y).coeffs())
                    img.add(tensor_label(u, v), checked_mul(cu, cv));
            r.set_image(x.degree + y.degree, tensor_label(x.name, y.name), img);
        }
    return r;
}

/* ---- dualities ---- */

inline complex dual(const complex& K, const std::set<int>& J) {
    for (int n : J)
        if (n <= 0) throw error("dualized degrees must be positive");
    std::string suffix = "^{";
    for (int n : J) suffix += (suffix.size() > 2 ? "," : "") + std::to_string(n);
    suffix += "}";
    complex D(K.name() + suffix);
    for (const auto& [deg, names] : K.basis())
        for (const auto& n : names) D.add_generator(deg, n);
    for (const auto& g : K.all_generators()) {
        if (g.degree == 0) D.set_aug(g.name, K.aug_gen(g.name));
        else D.set_diff(g.name, J.count(g.degree) ? K.diff_gen(g).scaled(-1) : K.diff_gen(g));
    }
    return D;
}

namespace detail {

inline std::set<int> degree_set(const complex& K, int residue_mod2) {
    std::set<int> J;
    for (int n = 1; n <= K.max_degree(); ++n)
        if (residue_mod2 < 0 || n % 2 == residue_mod2) J.insert(n);
    return J;
}

} // namespace detail

inline complex op_dual(const complex& K) {
    complex D = dual(K, detail::degree_set(K, -1));
    D.set_name(K.name() + "^op");
    return D;
}

inline complex opp_dual(const complex& K) {
    complex D = dual(K, detail::degree_set(K, 1));
    D.set_name(K.name() + "^opp");
    return D;
}

inline complex co_dual(const complex& K) {
    complex D = dual(K, detail::degree_set(K, 0));
    D.set_name(K.name() + "^co");
    return D;
}

/* the swap relabeling (K⋆L)^opp -> L^opp ⋆ K^opp */
inline morphism join_swap_dual(const complex& K, const complex& L) {
    auto S = share(opp_dual(join_complex(K, L)));
    auto T = share(join_complex(opp_dual(L), opp_dual(K)));
    morphism f(S, T);
    for (const auto& x : K.all_generators())
        f.set_image(x.degree, join_label(x.name, {}), chain::unit(x.degree, join_label({}, x.name)));
    for (const auto& y : L.all_generators())
        f.set_image(y.degree, join_label({}, y.name), chain::unit(y.degree, join_label(y.name, {})));
    for (const auto& x : K.all_generators())
        for (const auto& y : L.all_generators()) {
            int d = x.degree + 1 + y.degree;
            f.set_image(d, join_label(x.name, y.name), chain::unit(d, join_label(y.name, x.name)));
        }
    return f;
}

/* the swap relabeling (K⊗L)^opp -> L^opp ⊗ K^opp, or the same for ^co */
inline morphism tensor_swap_dual(const complex& K, const complex& L, bool odd_degrees) {
    auto flip = [&](const complex& C) { return odd_degrees ? opp_dual(C) : co_dual(C); };
    auto S = share(flip(tensor_complex(K, L)));
    auto T = share(tensor_complex(flip(L), flip(K)));
    morphism f(S, T);
    for (const auto& x : K.all_generators())
        for (const auto& y : L.all_generators()) {
            int d = x.degree + y.degree;
            f.set_image(d, tensor_label(x.name, y.name), chain::unit(d, tensor_label(y.name, x.name)));
        }
    return f;
}

/* ---- re-association relabelings ---- */

inline morphism join_reassociate(const complex& K, const complex& L, const complex& M) {
    auto S = share(join_complex(join_complex(K, L), M));
    auto T = share(join_complex(K, join_complex(L, M)));
    morphism f(S, T);
    auto put = [&](int deg, const std::string& src, const std::string& dst) {
        f.set_image(deg, src, chain::unit(deg, dst));
    };
    std::vector<generator> xs = K.all_generators(), ys = L.all_generators(), zs = M.all_generators();
    for (const auto& x : xs)
        put(x.degree, join_label(join_label(x.name, {}), {}), join_label(x.name, {}));
    for (const auto& y : ys)
        put(y.degree, join_label(join_label({}, y.name), {}), join_label({}, join_label(y.name, {})));
    for (const auto& z : zs)
        put(z.degree, join_label({}, z.name), join_label({}, join_label({}, z.name)));
    for (const auto& x : xs)
        for (const auto& y : ys)
            put(x.degree + 1 + y.degree, join_label(join_label(x.name, y.name), {}),
                join_label(x.name, join_label(y.name, {})));
    for (const auto& x : xs)
        for (const auto& z : zs)
            put(x.degree + 1 + z.degree, join_label(join_label(x.name, {}), z.name),
                join_label(x.name, join_label({}, z.name)));
    for (const auto& y : ys)
        for (const auto& z : zs)
            put(y.degree + 1 + z.degree, join_label(join_label({}, y.name), z.name),
                join_label({}, join_label(y.name, z.name)));
    for (const auto& x : xs)
        for (const auto& y : ys)
            for (const auto& z : zs)
                put(x.degree + y.degree + z.degree + 2, join_label(join_label(x.name, y.name), z.name),
                    join_label(x.name, join_label(y.name, z.name)));
    return f;
}

inline morphism tensor_reassociate(const complex& K, const complex& L, const complex& M) {
    auto S = share(tensor_complex(tensor_complex(K, L), M));
    auto T = share(tensor_complex(K, tensor_complex(L, M)));
    morphism f(S, T);
    for (const auto& x : K.all_generators())
        for (const auto& y : L.all_generators())
            for (const auto& z : M.all_generators()) {
                int d = x.degree + y.degree + z.degree;
                f.set_image(d, tensor_label(tensor_label(x.name, y.name), z.name),
                            chain::unit(d, tensor_label(x.name, tensor_label(y.name, z.name))));
            }
    return f;
}

/* ---- closed atom-row formulas for joins and tensors ---- */

namespace detail {

/* coefficient of the would-be bottom row one step below degree 0 */
inline i64 below_bottom_coeff(const complex& C, const atom_table& t, int side) {
    i64 e = C.aug(t.row(0, side));
    return side == 0 ? (e < 0 ? -e : 0) : (e > 0 ? e : 0);
}

} // namespace detail

inline chain join_atom_row_formula(const complex& K, const complex& L,
                                   const std::optional<generator>& x,
                                   const std::optional<generator>& y,
                                   int eps, int r) {
    chain res(r);
    if (x && y) {
        atom_table tx = make_atom_table(K, chain::unit(x->degree, x->name));
        atom_table ty = make_atom_table(L, chain::unit(y->degree, y->name));
        for (int p = -1; p <= x->degree; ++p) {
            int q = r - 1 - p;
            if (q < -1 || q > y->degree) continue;
            int eta = (p + 1 + eps) % 2;
            if (p >= 0 && q >= 0) {
                for (const auto& [u, cu] : tx.row(p, eps).coeffs())
                    for (const auto& [v, cv] : ty.row(q, eta).coeffs())
                        res.add(join_label(u, v), checked_mul(cu, cv));
            } else if (p < 0 && q >= 0) {
                i64 s = detail::below_bottom_coeff(K, tx, eps);
                for (const auto& [v, cv] : ty.row(q, eta).coeffs())
                    res.add(join_label({}, v), checked_mul(s, cv));
            } else if (p >= 0 && q < 0) {
                i64 s = detail::below_bottom_coeff(L, ty, eta);
                for (const auto& [u, cu] : tx.row(p, eps).coeffs())
                    res.add(join_label(u, {}), checked_mul(cu, s));
            }
        }
    } else if (x) {
        atom_table tx = make_atom_table(K, chain::unit(x->degree, x->name));
        for (const auto& [u, cu] : tx.row(r, eps).coeffs()) res.add(join_label(u, {}), cu);
    } else if (y) {
        atom_table ty = make_atom_table(L, chain::unit(y->degree, y->name));
        for (const auto& [v, cv] : ty.row(r, eps).coeffs()) res.add(join_label({}, v), cv);
    } else {
        throw error("a join generator needs at least one side");
    }
    return res;
}

inline chain tensor_atom_row_formula(const complex& K, const complex& L,
                                     const generator& x, const generator& y,
                                     int eps, int r) {
    chain res(r);
    atom_table tx = make_atom_table(K, chain::unit(x.degree, x.name));
    atom_table ty = make_atom_table(L, chain::unit(y.degree, y.name));
    for (int p = 0; p <= x.degree; ++p) {
        int q = r - p;
        if (q < 0 || q > y.degree) continue;
        int eta = (p + eps) % 2;
        for (const auto& [u, cu] : tx.row(p, eps).coeffs())
            for (const auto& [v, cv] : ty.row(q, eta).coeffs())
                res.add(tensor_label(u, v), checked_mul(cu, cv));
    }
    return res;
}

/* ---- truncations ---- */

inline complex truncate_bete(const complex& K, int n) {
    if (n < 0) throw error("truncation level must be nonnegative");
    complex R("trunc_b(" + K.name() + "," + std::to_string(n) + ")");
    for (const auto& [deg, names] : K.basis()) {
        if (deg > n) continue;
        for (const auto& nm : names) {
            R.add_generator(deg, nm);
            if (deg == 0) R.set_aug(nm, K.aug_gen(nm));
            else R.set_diff(nm, K.diff_gen({nm, deg}));
        }
    }
    return R;
}

/* raised when a quotient exists abstractly but cannot be re-based on
   generator images; such complexes are reported rather than represented */
struct truncation_unrepresentable : error {
    using error::error;
};

namespace detail {

/* diagonalize an integer matrix by unimodular row and column operations,
   tracking only the row transform; throws when a diagonal entry is not a
   unit, since then the cokernel has torsion */
struct cokernel_basis {
    std::vector<std::vector<i64>> U;   /* row transform, m x m */
    std::size_t rank = 0;
};

inline cokernel_basis diagonalize_rows(std::vector<std::vector<i64>> A, std::size_t m,
                                       const std::string& where) {
    std::size_t k = A.empty() ? 0 : A[0].size();
    cokernel_basis out;
    out.U.assign(m, std::vector<i64>(m, 0));
    for (std::size_t i = 0; i < m; ++i) out.U[i][i] = 1;
    if (A.size() != m) throw error("matrix shape mismatch");

    std::size_t t = 0;
    while (t < m && t < k) {
        /* locate a minimal nonzero entry in the trailing submatrix */
        std::size_t pr = m, pc = k;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < k; ++j)
                if (A[i][j] != 0) {
                    i64 a = A[i][j] < 0 ? -A[i][j] : A[i][j];
                    i64 b = pr == m ? 0 : (A[pr][pc] < 0 ? -A[pr][pc] : A[pr][pc]);
                    if (pr == m || a < b) { pr = i; pc = j; }
                }
        if (pr == m) break;
        std::swap(A[t], A[pr]);
        std::swap(out.U[t], out.U[pr]);
        for (std::size_t i = 0; i < m; ++i) std::swap(A[i][t], A[i][pc]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (A[i][t] == 0) continue;
                i64 q = A[i][t] / A[t][t];
                if (q != 0)
                    for (std::size_t j = 0; j < k; ++j)
                        A[i][j] = checked_sub(A[i][j], checked_mul(q, A[t][j]));
                if (q != 0)
                    for (std::size_t j = 0; j < m; ++j)
                        out.U[i][j] = checked_sub(out.U[i][j], checked_mul(q, out.U[t][j]));
                if (A[i][t] != 0) {   /* remainder smaller than the pivot: swap up */
                    std::swap(A[t], A[i]);
                    std::swap(out.U[t], out.U[i]);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < k; ++j) {
                if (A[t][j] == 0) continue;
                i64 q = A[t][j] / A[t][t];
                if (q != 0)
                    for (std::size_t i = 0; i < m; ++i)
                        A[i][j] = checked_sub(A[i][j], checked_mul(q, A[i][t]));
                if (A[t][j] != 0) {
                    for (std::size_t i = 0; i < m; ++i) std::swap(A[i][t], A[i][j]);
                    dirty = true;
                }
            }
        }
        i64 d = A[t][t] < 0 ? -A[t][t] : A[t][t];
        if (d != 1)
            throw truncation_unrepresentable(where + " is not free: torsion of order " +
                                             std::to_string(d));
        ++t;
    }
    out.rank = t;
    return out;
}

inline i64 bareiss_det(std::vector<std::vector<i64>> a) {
    std::size_t n = a.size();
    i64 prev = 1, sign = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) { std::swap(a[p], a[c]); sign = -sign; }
        for (std::size_t i = c + 1; i < n; ++i)
            for (std::size_t j = c + 1; j < n; ++j)
                a[i][j] = checked_sub(checked_mul(a[i][j], a[c][c]), checked_mul(a[i][c], a[c][j])) / prev;
        prev = a[c][c];
    }
    return n == 0 ? sign : checked_mul(sign, a[n - 1][n - 1]);
}

} // namespace detail

/* structure-preserving with a unimodular matrix in every degree */
inline bool is_isomorphism(const morphism& f) {
    if (!validate_morphism(f).ok()) return false;
    std::set<int> degrees;
    for (const auto& [deg, names] : f.source().basis()) degrees.insert(deg);
    for (const auto& [deg, names] : f.target().basis()) degrees.insert(deg);
    for (int deg : degrees) {
        const auto& src = f.source().basis_at(deg);
        const auto& dst = f.target().basis_at(deg);
        if (src.size() != dst.size()) return false;
        std::map<std::string, std::size_t> at;
        for (std::size_t i = 0; i < dst.size(); ++i) at[dst[i]] = i;
        std::vector<std::vector<i64>> M(dst.size(), std::vector<i64>(src.size(), 0));
        for (std::size_t j = 0; j < src.size(); ++j)
            for (const auto& [n, c] : f.image_gen({src[j], deg}).coeffs())
                M[at.at(n)][j] = c;
        i64 det = detail::bareiss_det(std::move(M));
        if (det != 1 && det != -1) return false;
    }
    return true;
}

/* replace degree n by the quotient of degree n by the boundaries from
   degree n+1, re-based on the images of the old generators */
inline std::pair<std::shared_ptr<const complex>, morphism>
truncate_intelligent_with_projection(const std::shared_ptr<const complex>& Kp, int n) {
    const complex& K = *Kp;
    if (n < 0) throw error("truncation level must be nonnegative");
    const auto& names = K.basis_at(n);
    std::size_t m = names.size();
    std::map<std::string, std::size_t> at;
    for (std::size_t i = 0; i < m; ++i) at[names[i]] = i;

    std::vector<std::vector<i64>> A(m);
    const auto& above = K.basis_at(n + 1);
    for (std::size_t i = 0; i < m; ++i) A[i].assign(above.size(), 0);
    for (std::size_t j = 0; j < above.size(); ++j)
        for (const auto& [u, c] : K.diff_gen({above[j], n + 1}).coeffs())
            A[at.at(u)][j] = c;

    detail::cokernel_basis cb = detail::diagonalize_rows(std::move(A), m,
        "degree " + std::to_string(n) + " quotient");
    std::size_t q = m - cb.rank;

    /* class of each old generator in the cokernel coordinates */
    std::vector<std::vector<i64>> image(m, std::vector<i64>(q, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t w = 0; w < q; ++w) image[i][w] = cb.U[cb.rank + w][i];

    /* distinct nonzero classes, each tagged with its smallest old name */
    std::map<std::vector<i64>, std::string> classes;
    std::vector<i64> zero(q, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (image[i] != zero) classes.emplace(image[i], names[i]);

    /* an integer functional positive on every class certifies that the image
       monoid is pointed and bounds every decomposition search below */
    auto dot = [q](const std::vector<i64>& a, const std::vector<i64>& b) {
        i64 s = 0;
        for (std::size_t w = 0; w < q; ++w) s = checked_add(s, checked_mul(a[w], b[w]));
        return s;
    };
    std::vector<i64> phi(q, 0);
    for (const auto& [v, nm] : classes)
        for (std::size_t w = 0; w < q; ++w) phi[w] = checked_add(phi[w], v[w]);
    for (int sweep = 0; ; ++sweep) {
        bool moved = false;
        for (const auto& [v, nm] : classes)
            if (dot(phi, v) <= 0) {
                for (std::size_t w = 0; w < q; ++w) phi[w] = checked_add(phi[w], v[w]);
                moved = true;
            }
        if (!moved) break;
        if (sweep > 50000)
            throw truncation_unrepresentable(
                "degree " + std::to_string(n) + " cone is not generated by a basis: "
                "image positivity is not pointed");
    }

    /* representation of a class as a nonnegative combination of given ones;
       the functional makes the depth finite, dead targets are remembered */
    auto represent = [&](const std::vector<i64>& target,
                         const std::vector<const std::vector<i64>*>& gens,
                         std::vector<i64>* counts) -> bool {
        std::set<std::vector<i64>> dead;
        std::function<bool(std::vector<i64>&)> go = [&](std::vector<i64>& t) -> bool {
            if (t == zero) return true;
            if (dead.count(t)) return false;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                std::vector<i64> t2 = t;
                for (std::size_t w = 0; w < q; ++w) t2[w] -= (*gens[g])[w];
                if (dot(phi, t2) < 0) continue;
                if (counts) (*counts)[g] += 1;
                if (go(t2)) return true;
                if (counts) (*counts)[g] -= 1;
            }
            dead.insert(t);
            return false;
        };
        std::vector<i64> t = target;
        return go(t);
    };

    /* the basis candidates are the classes no other classes can assemble */
    std::vector<std::pair<std::vector<i64>, std::string>> ordered(classes.begin(), classes.end());
    std::vector<std::pair<std::vector<i64>, std::string>> basis;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        std::vector<const std::vector<i64>*> others;
        for (std::size_t j = 0; j < ordered.size(); ++j)
            if (j != i) others.push_back(&ordered[j].first);
        if (!represent(ordered[i].first, others, nullptr)) basis.push_back(ordered[i]);
    }
    if (basis.size() != q)
        throw truncation_unrepresentable(
            "degree " + std::to_string(n) + " cone is not generated by a basis: " +
            std::to_string(basis.size()) + " irreducible classes for rank " + std::to_string(q));
    {
        std::vector<std::vector<i64>> M(q, std::vector<i64>(q, 0));
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t w = 0; w < q; ++w) M[w][j] = basis[j].first[w];
        i64 det = q == 0 ? 1 : detail::bareiss_det(std::move(M));
        if (det != 1 && det != -1)
            throw truncation_unrepresentable(
                "degree " + std::to_string(n) + " cone is not generated by a basis: "
                "class matrix has determinant " + std::to_string(det));
    }
    std::vector<const std::vector<i64>*> bvecs;
    for (const auto& [v, nm] : basis) bvecs.push_back(&v);
    std::map<std::vector<i64>, chain> in_basis;
    for (const auto& [v, nm] : classes) {
        std::vector<i64> counts(q, 0);
        if (!represent(v, bvecs, &counts))
            throw truncation_unrepresentable(
                "degree " + std::to_string(n) + " cone is not generated by a basis: "
                "a class escapes the irreducible ones");
        chain c(n);
        for (std::size_t j = 0; j < q; ++j) c.add(basis[j].second, counts[j]);
        in_basis.emplace(v, std::move(c));
    }

    complex R("trunc(" + K.name() + "," + std::to_string(n) + ")");
    for (const auto& [deg, lower] : K.basis()) {
        if (deg >= n) continue;
        for (const auto& nm : lower) {
            R.add_generator(deg, nm);
            if (deg == 0) R.set_aug(nm, K.aug_gen(nm));
            else R.set_diff(nm, K.diff_gen({nm, deg}));
        }
    }
    for (const auto& [img, nm] : basis) {
        R.add_generator(n, nm);
        if (n == 0) R.set_aug(nm, K.aug_gen(nm));
        else R.set_diff(nm, K.diff_gen({nm, n}));
    }

    auto Rp = share(std::move(R));
    morphism proj(Kp, Rp);
    for (const auto& [deg, lower] : K.basis()) {
        if (deg >= n) continue;
        for (const auto& nm : lower) proj.set_image(deg, nm, chain::unit(deg, nm));
    }
    for (std::size_t i = 0; i < m; ++i)
        if (image[i] != zero) proj.set_image(n, names[i], in_basis.at(image[i]));
    return {Rp, proj};
}

inline complex truncate_intelligent(const complex& K, int n) {
    return *truncate_intelligent_with_projection(share(K), n).first;
}

/* agreement of truncation with the join after truncating the factors */
struct truncation_comparison {
    bool factorizes = true;
    bool isomorphism = false;
    morphism iso;
    bool ok() const { return factorizes && isomorphism; }
};

inline truncation_comparison compare_join_truncation(const std::shared_ptr<const complex>& Kp,
                                                     const std::shared_ptr<const complex>& Lp,
                                                     int n) {
    truncation_comparison out;
    auto KLp = share(join_complex(*Kp, *Lp));
    auto [left, pi_left] = truncate_intelligent_with_projection(KLp, n);
    auto [tK, pK] = truncate_intelligent_with_projection(Kp, n);
    auto [tL, pL] = truncate_intelligent_with_projection(Lp, n);
    morphism j = join_of_morphisms(pK, pL);
    auto [right, pi_right] = truncate_intelligent_with_projection(share(j.target()), n);
    morphism through = compose_morphisms(pi_right, j);   /* K⋆L -> right */

    /* the candidate comparison takes every left generator (a surviving name
       of K⋆L) to its image through the factorwise route */
    out.iso = morphism(left, right);
    for (const auto& g : left->all_generators())
        out.iso.set_image(g.degree, g.name, through.image_gen(g));
    for (const auto& g : KLp->all_generators()) {
        if (g.degree > n) continue;
        if (out.iso.apply(pi_left.image_gen(g)) != through.image_gen(g)) {
            out.factorizes = false;
            break;
        }
    }
    out.isomorphism = is_isomorphism(out.iso);
    return out;
}

/* ---- disks, cocategory maps, globular sums ---- */

inline std::string disk_gen(int i, int k, int eps) {
    if (k >= i) return "x" + std::to_string(i);
    return "x" + std::to_string(k) + (eps ? "t" : "s");
}

inline complex disk_complex(int i) {
    if (i < 0) throw error("disk dimension must be nonnegative");
    complex D("D" + std::to_string(i));
    if (i == 0) {
        D.add_generator(0, "x0");
        D.set_aug("x0", 1);
        return D;
    }
    for (int k = 0; k < i; ++k) {
        D.add_generator(k, disk_gen(i, k, 0));
        D.add_generator(k, disk_gen(i, k, 1));
    }
    D.add_generator(i, disk_gen(i, i, 0));
    for (int k = 1; k <= i; ++k) {
        chain d = chain::unit(k - 1, disk_gen(i, k - 1, 1)) - chain::unit(k - 1, disk_gen(i, k - 1, 0));
        if (k < i) {
            D.set_diff(disk_gen(i, k, 0), d);
            D.set_diff(disk_gen(i, k, 1), d);
        } else {
            D.set_diff(disk_gen(i, i, 0), d);
        }
    }
    D.set_aug(disk_gen(i, 0, 0), 1);
    if (i > 0) D.set_aug(disk_gen(i, 0, 1), 1);
    return D;
}

inline morphism cocat_sigma(int i, int j) {
    if (!(i >= j && j >= 0)) throw error("source map needs i >= j >= 0");
    auto S = share(disk_complex(j)), T = share(disk_complex(i));
    morphism f(S, T);
    for (int k = 0; k < j; ++k)
        for (int eps = 0; eps < 2; ++eps)
            f.set_image(k, disk_gen(j, k, eps), chain::unit(k, disk_gen(i, k, eps)));
    f.set_image(j, disk_gen(j, j, 0), chain::unit(j, i == j ? disk_gen(i, i, 0) : disk_gen(i, j, 0)));
    return f;
}

inline morphism cocat_tau(int i, int j) {
    if (!(i >= j && j >= 0)) throw error("target map needs i >= j >= 0");
    auto S = share(disk_complex(j)), T = share(disk_complex(i));
    morphism f(S, T);
    for (int k = 0; k < j; ++k)
        for (int eps = 0; eps < 2; ++eps)
            f.set_image(k, disk_gen(j, k, eps), chain::unit(k, disk_gen(i, k, eps)));
    f.set_image(j, disk_gen(j, j, 0), chain::unit(j, i == j ? disk_gen(i, i, 0) : disk_gen(i, j, 1)));
    return f;
}

inline morphism cocat_kappa(int i, int j) {
    if (!(i >= j && j >= 0)) throw error("identity collapse needs i >= j >= 0");
    auto S = share(disk_complex(i)), T = share(disk_complex(j));
    morphism f(S, T);
    for (int k = 0; k < j; ++k)
        for (int eps = 0; eps < 2; ++eps)
            f.set_image(k, disk_gen(i, k, eps), chain::unit(k, disk_gen(j, k, eps)));
    if (i == j) {
        f.set_image(i, disk_gen(i, i, 0), chain::unit(i, disk_gen(j, j, 0)));
    } else {
        f.set_image(j, disk_gen(i, j, 0), chain::unit(j, disk_gen(j, j, 0)));
        f.set_image(j, disk_gen(i, j, 1), chain::unit(j, disk_gen(j, j, 0)));
    }
    return f;
}

struct globular_signature {
    std::vector<int> dims;   /* i_1 .. i_l */
    std::vector<int> glue;   /* j_1 .. j_{l-1} */
};

inline colimit_result globular_sum_result(const globular_signature& sig) {
    if (sig.dims.empty()) throw error("a globular signature needs at least one dimension");
    if (sig.glue.size() + 1 != sig.dims.size())
        throw error("a globular signature needs one glue level between consecutive dimensions");
    for (std::size_t t = 0; t < sig.glue.size(); ++t)
        if (sig.glue[t] < 0 || sig.glue[t] >= sig.dims[t] || sig.glue[t] >= sig.dims[t + 1])
            throw error("glue levels must sit strictly below their neighbors");
    for (int d : sig.dims)
        if (d < 0) throw error("disk dimension must be nonnegative");

    std::string name = "S(";
    for (std::size_t t = 0; t < sig.dims.size(); ++t) {
        if (t) name += ";" + std::to_string(sig.glue[t - 1]) + ";";
        name += std::to_string(sig.dims[t]);
    }
    name += ")";

    std::size_t l = sig.dims.size();
    std::vector<std::shared_ptr<const complex>> objects;
    for (int d : sig.dims) objects.push_back(share(disk_complex(d)));
    for (int g : sig.glue) objects.push_back(share(disk_complex(g)));
    std::vector<colimit_edge> edges;
    for (std::size_t t = 0; t + 1 < l; ++t) {
        edges.push_back({l + t, t, cocat_tau(sig.dims[t], sig.glue[t])});
        edges.push_back({l + t, t + 1, cocat_sigma(sig.dims[t + 1], sig.glue[t])});
    }
    return colimit(objects, edges, name);
}

inline complex globular_sum(const globular_signature& sig) {
    return *globular_sum_result(sig).object;
}

inline morphism cocat_nabla(int i, int j) {
    if (!(i > j && j >= 0)) throw error("composition map needs i > j >= 0");
    colimit_result sum = globular_sum_result({{i, i}, {j}});
    auto S = share(disk_complex(i));
    morphism f(S, sum.object);
    const morphism& z = sum.legs[0];   /* glued along its target side */
    const morphism& y = sum.legs[1];   /* glued along its source side */
    for (int k = 0; k <= j; ++k) {
        f.set_image(k, disk_gen(i, k, 0), z.image_gen({disk_gen(i, k, 0), k}));
        f.set_image(k, disk_gen(i, k, 1), y.image_gen({disk_gen(i, k, 1), k}));
    }
    for (int k = j + 1; k <= i; ++k)
        for (int eps = 0; eps < 2; ++eps) {
            if (k == i && eps == 1) continue;
            std::string g = disk_gen(i, k, eps);
            f.set_image(k, g, z.image_gen({g, k}) + y.image_gen({g, k}));
        }
    return f;
}

/* ---- simplices ---- */

namespace detail {

inline std::vector<std::vector<int>> all_tuples(int m) {
    std::vector<std::vector<int>> out;
    if (m < 0) return out;
    for (unsigned mask = 1; mask < (1u << (m + 1)); ++mask) {
        std::vector<int> t;
        for (int v = 0; v <= m; ++v)
            if (mask & (1u << v)) t.push_back(v);
        out.push_back(std::move(t));
    }
    return out;
}

inline std::string tuple_label(const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

} // namespace detail

inline complex simplex_complex(int m) {
    if (m < -1) throw error("simplex dimension must be at least -1");
    complex C("Delta" + std::to_string(m));
    for (const auto& t : detail::all_tuples(m)) {
        int deg = static_cast<int>(t.size()) - 1;
        std::string nm = detail::tuple_label(t);
        C.add_generator(deg, nm);
        if (deg == 0) {
            C.set_aug(nm, 1);
        } else {
            chain d(deg - 1);
            for (std::size_t k = 0; k < t.size(); ++k) {
                std::vector<int> face = t;
                face.erase(face.begin() + k);
                d.add(detail::tuple_label(face), k % 2 == 0 ? 1 : -1);
            }
            C.set_diff(nm, d);
        }
    }
    return C;
}

/* the relabeling c(Δ^m) ⋆ c(Δ^n) -> c(Δ^{m+1+n}) */
inline morphism chi_join_simplices(int m, int n) {
    auto S = share(join_complex(simplex_complex(m), simplex_complex(n)));
    auto T = share(simplex_complex(m + 1 + n));
    morphism f(S, T);
    auto shift = [&](const std::vector<int>& t) {
        std::vector<int> s = t;
        for (int& v : s) v += m + 1;
        return s;
    };
    for (const auto& t : detail::all_tuples(m)) {
        int deg = static_cast<int>(t.size()) - 1;
        f.set_image(deg, join_label(detail::tuple_label(t), {}),
                    chain::unit(deg, detail::tuple_label(t)));
    }
    for (const auto& t : detail::all_tuples(n)) {
        int deg = static_cast<int>(t.size()) - 1;
        f.set_image(deg, join_label({}, detail::tuple_label(t)),
                    chain::unit(deg, detail::tuple_label(shift(t))));
    }
    for (const auto& a : detail::all_tuples(m))
        for (const auto& b : detail::all_tuples(n)) {
            std::vector<int> c = a;
            for (int v : shift(b)) c.push_back(v);
            int deg = static_cast<int>(a.size() + b.size()) - 1;
            f.set_image(deg, join_label(detail::tuple_label(a), detail::tuple_label(b)),
                        chain::unit(deg, detail::tuple_label(c)));
        }
    return f;
}

/* chain functor on a monotone map [m] -> [n]; degenerate tuples die */
inline morphism c_of_monotone(const std::vector<int>& phi, int n) {
    int m = static_cast<int>(phi.size()) - 1;
    for (std::size_t k = 0; k < phi.size(); ++k) {
        if (phi[k] < 0 || phi[k] > n) throw error("monotone map leaves its codomain");
        if (k > 0 && phi[k] < phi[k - 1]) throw error("map is not monotone");
    }
    auto S = share(simplex_complex(m)), T = share(simplex_complex(n));
    morphism f(S, T);
    for (const auto& t : detail::all_tuples(m)) {
        std::vector<int> img;
        bool strict = true;
        for (int v : t) {
            if (!img.empty() && phi[v] <= img.back()) { strict = false; break; }
            img.push_back(phi[v]);
        }
        int deg = static_cast<int>(t.size()) - 1;
        if (strict) f.set_image(deg, detail::tuple_label(t), chain::unit(deg, detail::tuple_label(img)));
    }
    return f;
}

inline std::vector<int> monotone_face(int n, int i) {
    std::vector<int> phi;
    for (int v = 0; v <= n; ++v)
        if (v != i) phi.push_back(v);
    return phi;
}

inline std::vector<int> monotone_degeneracy(int n, int i) {
    std::vector<int> phi;
    for (int v = 0; v <= n; ++v) {
        phi.push_back(v);
        if (v == i) phi.push_back(v);
    }
    return phi;
}

inline std::vector<morphism> street_nerve(const std::shared_ptr<const complex>& Kp, int n, i64 cap) {
    return enumerate_adc_morphisms(share(simplex_complex(n)), Kp, cap);
}

} // namespace adcat
