#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cells.hpp"
#include "monoidal.hpp"
#include "nu_homotopy.hpp"
#include "slice.hpp"

namespace adcat {

/* Which side of the glued boundary the composition clauses read in row k
   when composing at level j: the row just above the glue level keeps its
   own side, every higher row takes a fixed one. */
inline int slice_eta(int k, int j, int eps) { return k == j + 1 ? eps : 1; }
inline int cylinder_eta0(int k, int j, int eps) { return k == j + 1 ? eps : 0; }
inline int cylinder_eta1(int k, int j, int eps) { return k == j + 1 ? eps : 1; }

/* An i-cell of the slice category over the object c: a cell d together
   with a triangle tower alpha connecting c to the boundaries of d. */
struct slice_cell {
    int dim = 0;
    cell c;                                    /* the base object, a 0-cell */
    cell d;
    std::vector<std::array<cell, 2>> alpha;    /* alpha[k][eps] has dim k+1 */
};

inline bool operator==(const slice_cell& a, const slice_cell& b) {
    return a.dim == b.dim && a.c == b.c && a.d == b.d && a.alpha == b.alpha;
}
inline bool operator!=(const slice_cell& a, const slice_cell& b) { return !(a == b); }
inline bool operator<(const slice_cell& a, const slice_cell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.c != b.c) return a.c < b.c;
    if (a.d != b.d) return a.d < b.d;
    return a.alpha < b.alpha;
}

/* An i-cell of the cylinder category: two parallel towers c, d joined by
   a tower alpha with a two-sided boundary condition. */
struct cylinder_cell {
    int dim = 0;
    cell c, d;
    std::vector<std::array<cell, 2>> alpha;
};

inline bool operator==(const cylinder_cell& a, const cylinder_cell& b) {
    return a.dim == b.dim && a.c == b.c && a.d == b.d && a.alpha == b.alpha;
}
inline bool operator!=(const cylinder_cell& a, const cylinder_cell& b) { return !(a == b); }
inline bool operator<(const cylinder_cell& a, const cylinder_cell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.c != b.c) return a.c < b.c;
    if (a.d != b.d) return a.d < b.d;
    return a.alpha < b.alpha;
}

namespace detail {

inline void merge_report(report& r, const report& s, const std::string& where) {
    for (const auto& v : s.violations)
        r.violations.push_back({where + ": " + v.check, v.witness});
}

} // namespace detail

inline report slice_cell_validate(const slice_cell& S) {
    report r;
    if (S.c.dim != 0) r.violations.push_back({"base object is not a 0-cell", ""});
    detail::merge_report(r, validate_cell(S.c), "base object");
    if (S.d.dim != S.dim) r.violations.push_back({"cell dimension differs from the slice dimension", ""});
    detail::merge_report(r, validate_cell(S.d), "underlying cell");
    if (static_cast<int>(S.alpha.size()) != S.dim + 1) {
        r.violations.push_back({"triangle tower has the wrong height", ""});
        return r;
    }
    for (int k = 0; k <= S.dim; ++k)
        for (int eps = 0; eps < 2; ++eps) {
            if (S.alpha[k][eps].dim != k + 1)
                r.violations.push_back({"triangle row has the wrong dimension",
                                        "row " + std::to_string(k)});
            detail::merge_report(r, validate_cell(S.alpha[k][eps]),
                                 "triangle row " + std::to_string(k) + " side " + std::to_string(eps));
        }
    if (!r.ok()) return r;
    if (S.alpha[S.dim][0] != S.alpha[S.dim][1])
        r.violations.push_back({"top triangle rows differ", ""});
    for (int k = 0; k <= S.dim; ++k)
        for (int eps = 0; eps < 2; ++eps) {
            const cell& A = S.alpha[k][eps];
            const cell& from = k == 0 ? S.c : S.alpha[k - 1][1];
            std::string at = "row " + std::to_string(k) + " side " + std::to_string(eps);
            if (cell_source(A, k) != from)
                r.violations.push_back({"triangle source is not the previous row", at});
            try {
                std::vector<cell> tower;
                for (int m = 0; m < k; ++m) tower.push_back(S.alpha[m][0]);
                if (cell_target(A, k) != paste_onto_sources(cell_boundary(S.d, k, eps), tower))
                    r.violations.push_back({"triangle target is not the pasted boundary", at});
            } catch (const error& e) {
                r.violations.push_back({std::string("boundary tower does not paste: ") + e.what(), at});
            }
        }
    return r;
}

inline slice_cell slice_source(const slice_cell& S) {
    if (S.dim < 1) throw error("slice source needs dimension >= 1");
    slice_cell r;
    r.dim = S.dim - 1;
    r.c = S.c;
    r.d = cell_source(S.d, S.dim - 1);
    r.alpha.assign(S.alpha.begin(), S.alpha.begin() + S.dim - 1);
    r.alpha.push_back({S.alpha[S.dim - 1][0], S.alpha[S.dim - 1][0]});
    return r;
}

inline slice_cell slice_target(const slice_cell& S) {
    if (S.dim < 1) throw error("slice target needs dimension >= 1");
    slice_cell r;
    r.dim = S.dim - 1;
    r.c = S.c;
    r.d = cell_target(S.d, S.dim - 1);
    r.alpha.assign(S.alpha.begin(), S.alpha.begin() + S.dim - 1);
    r.alpha.push_back({S.alpha[S.dim - 1][1], S.alpha[S.dim - 1][1]});
    return r;
}

inline slice_cell slice_identity(const slice_cell& S) {
    slice_cell r;
    r.dim = S.dim + 1;
    r.c = S.c;
    r.d = cell_identity(S.d);
    r.alpha = S.alpha;
    cell id = cell_identity(S.alpha[S.dim][0]);
    r.alpha.push_back({id, id});
    return r;
}

/* x after y at level j; the rows above the glue level whisker the inner
   triangle through the boundary of the outer cell before stacking */
inline slice_cell slice_compose(const slice_cell& x, const slice_cell& y, int j) {
    if (x.dim != y.dim) throw error("slice composition needs equal dimensions");
    int i = x.dim;
    if (j < 0 || j >= i) throw error("slice composition level out of range");
    {
        slice_cell sx = x, ty = y;
        while (sx.dim > j) sx = slice_source(sx);
        while (ty.dim > j) ty = slice_target(ty);
        if (sx != ty) throw error("slice cells are not composable at level " + std::to_string(j));
    }
    slice_cell r;
    r.dim = i;
    r.c = x.c;
    r.d = cell_compose(x.d, y.d, j);
    for (int k = 0; k <= j; ++k) r.alpha.push_back({y.alpha[k][0], x.alpha[k][1]});
    for (int k = j + 1; k <= i; ++k) {
        std::array<cell, 2> row;
        for (int eps = 0; eps < 2; ++eps) {
            if (k == i && eps == 1) {
                row[1] = row[0];
                break;
            }
            cell cur = cell_boundary(x.d, j + 1, slice_eta(k, j, eps));
            for (int m = 0; m < j; ++m) cur = cell_compose_pad(cur, y.alpha[m][0], m);
            cur = cell_compose_pad(cur, y.alpha[k][eps], j);
            row[static_cast<std::size_t>(eps)] = cell_compose_pad(cur, x.alpha[k][eps], j + 1);
        }
        r.alpha.push_back(std::move(row));
    }
    return r;
}

inline report cylinder_validate(const cylinder_cell& C) {
    report r;
    if (C.c.dim != C.dim || C.d.dim != C.dim)
        r.violations.push_back({"side dimensions differ from the cylinder dimension", ""});
    detail::merge_report(r, validate_cell(C.c), "left side");
    detail::merge_report(r, validate_cell(C.d), "right side");
    if (static_cast<int>(C.alpha.size()) != C.dim + 1) {
        r.violations.push_back({"connecting tower has the wrong height", ""});
        return r;
    }
    for (int k = 0; k <= C.dim; ++k)
        for (int eps = 0; eps < 2; ++eps) {
            if (C.alpha[k][eps].dim != k + 1)
                r.violations.push_back({"connecting row has the wrong dimension",
                                        "row " + std::to_string(k)});
            detail::merge_report(r, validate_cell(C.alpha[k][eps]),
                                 "connecting row " + std::to_string(k) + " side " + std::to_string(eps));
        }
    if (!r.ok()) return r;
    if (C.alpha[C.dim][0] != C.alpha[C.dim][1])
        r.violations.push_back({"top connecting rows differ", ""});
    for (int k = 0; k <= C.dim; ++k)
        for (int eps = 0; eps < 2; ++eps) {
            const cell& A = C.alpha[k][eps];
            std::string at = "row " + std::to_string(k) + " side " + std::to_string(eps);
            try {
                std::vector<cell> up, down;
                for (int m = 0; m < k; ++m) {
                    up.push_back(C.alpha[m][1]);
                    down.push_back(C.alpha[m][0]);
                }
                if (cell_source(A, k) != paste_onto_targets(cell_boundary(C.c, k, eps), up))
                    r.violations.push_back({"connecting source is not the pasted left boundary", at});
                if (cell_target(A, k) != paste_onto_sources(cell_boundary(C.d, k, eps), down))
                    r.violations.push_back({"connecting target is not the pasted right boundary", at});
            } catch (const error& e) {
                r.violations.push_back({std::string("boundary tower does not paste: ") + e.what(), at});
            }
        }
    return r;
}

inline cylinder_cell cylinder_source(const cylinder_cell& C) {
    if (C.dim < 1) throw error("cylinder source needs dimension >= 1");
    cylinder_cell r;
    r.dim = C.dim - 1;
    r.c = cell_source(C.c, C.dim - 1);
    r.d = cell_source(C.d, C.dim - 1);
    r.alpha.assign(C.alpha.begin(), C.alpha.begin() + C.dim - 1);
    r.alpha.push_back({C.alpha[C.dim - 1][0], C.alpha[C.dim - 1][0]});
    return r;
}

inline cylinder_cell cylinder_target(const cylinder_cell& C) {
    if (C.dim < 1) throw error("cylinder target needs dimension >= 1");
    cylinder_cell r;
    r.dim = C.dim - 1;
    r.c = cell_target(C.c, C.dim - 1);
    r.d = cell_target(C.d, C.dim - 1);
    r.alpha.assign(C.alpha.begin(), C.alpha.begin() + C.dim - 1);
    r.alpha.push_back({C.alpha[C.dim - 1][1], C.alpha[C.dim - 1][1]});
    return r;
}

inline cylinder_cell cylinder_identity(const cylinder_cell& C) {
    cylinder_cell r;
    r.dim = C.dim + 1;
    r.c = cell_identity(C.c);
    r.d = cell_identity(C.d);
    r.alpha = C.alpha;
    cell id = cell_identity(C.alpha[C.dim][0]);
    r.alpha.push_back({id, id});
    return r;
}

inline cylinder_cell cylinder_compose(const cylinder_cell& x, const cylinder_cell& y, int j) {
    if (x.dim != y.dim) throw error("cylinder composition needs equal dimensions");
    int i = x.dim;
    if (j < 0 || j >= i) throw error("cylinder composition level out of range");
    {
        cylinder_cell sx = x, ty = y;
        while (sx.dim > j) sx = cylinder_source(sx);
        while (ty.dim > j) ty = cylinder_target(ty);
        if (sx != ty) throw error("cylinder cells are not composable at level " + std::to_string(j));
    }
    cylinder_cell r;
    r.dim = i;
    r.c = cell_compose(x.c, y.c, j);
    r.d = cell_compose(x.d, y.d, j);
    for (int k = 0; k <= j; ++k) r.alpha.push_back({y.alpha[k][0], x.alpha[k][1]});
    for (int k = j + 1; k <= i; ++k) {
        std::array<cell, 2> row;
        for (int eps = 0; eps < 2; ++eps) {
            if (k == i && eps == 1) {
                row[1] = row[0];
                break;
            }
            cell left = cell_boundary(x.d, j + 1, cylinder_eta1(k, j, eps));
            for (int m = 0; m < j; ++m) left = cell_compose_pad(left, y.alpha[m][0], m);
            left = cell_compose_pad(left, y.alpha[k][eps], j);
            cell right = cell_boundary(y.c, j + 1, cylinder_eta0(k, j, eps));
            for (int m = 0; m < j; ++m) right = cell_compose_pad(x.alpha[m][1], right, m);
            right = cell_compose_pad(x.alpha[k][eps], right, j);
            row[static_cast<std::size_t>(eps)] = cell_compose_pad(left, right, j + 1);
        }
        r.alpha.push_back(std::move(row));
    }
    return r;
}

inline const cell& cylinder_pi0(const cylinder_cell& C) { return C.c; }
inline const cell& cylinder_pi1(const cylinder_cell& C) { return C.d; }

/* a slice cell is a cylinder whose left side is constant on the base */
inline cylinder_cell slice_into_cylinder(const slice_cell& S) {
    cylinder_cell r;
    r.dim = S.dim;
    r.c = cell_iterated_identity(S.c, S.dim);
    r.d = S.d;
    r.alpha = S.alpha;
    return r;
}

inline slice_cell slice_from_cylinder(const cylinder_cell& C) {
    cell base = cell_boundary(C.c, 0, 0);
    if (C.c != cell_iterated_identity(base, C.dim))
        throw error("cylinder is not constant on its left side");
    slice_cell r;
    r.dim = C.dim;
    r.c = base;
    r.d = C.d;
    r.alpha = C.alpha;
    return r;
}

/* ---- translation to chain-level data ---- */

/* The slice cell packaged as the chain map it classifies: a morphism out
   of the join of a point with a disk, sending the point to the base, the
   disk boundaries to the underlying cell and the cone part to the tower. */
inline morphism slice_cell_to_join_functor(const slice_cell& S) {
    int i = S.dim;
    auto Jp = share(join_complex(disk_complex(0), disk_complex(i)));
    morphism F(Jp, S.d.in);
    F.set_image(0, join_label(std::string("x0"), std::nullopt), cell_class(S.c));
    for (int k = 0; k <= i; ++k)
        for (int eps = 0; eps < 2; ++eps) {
            if (k == i && eps == 1) continue;
            std::string g = disk_gen(i, k, eps);
            F.set_image(k, join_label(std::nullopt, g), cell_class(cell_boundary(S.d, k, eps)));
            F.set_image(k + 1, join_label(std::string("x0"), g), cell_class(S.alpha[k][eps]));
        }
    return F;
}

inline slice_cell slice_cell_from_join_functor(const morphism& F, int i) {
    const auto& Jp = F.source_ptr();
    slice_cell r;
    r.dim = i;
    r.c = apply_functor(F, atom_cell(Jp, generator{join_label(std::string("x0"), std::nullopt), 0}));
    r.d = apply_functor(F, atom_cell(Jp, generator{join_label(std::nullopt, disk_gen(i, i, 0)), i}));
    for (int k = 0; k <= i; ++k) {
        cell a = apply_functor(
            F, atom_cell(Jp, generator{join_label(std::string("x0"), disk_gen(i, k, 0)), k + 1}));
        cell b = k == i ? a
                        : apply_functor(F, atom_cell(Jp, generator{join_label(std::string("x0"),
                                                                              disk_gen(i, k, 1)),
                                                                   k + 1}));
        r.alpha.push_back({std::move(a), std::move(b)});
    }
    return r;
}

inline morphism cylinder_cell_to_tensor_functor(const cylinder_cell& C) {
    int i = C.dim;
    auto Tp = share(tensor_complex(disk_complex(1), disk_complex(i)));
    morphism F(Tp, C.d.in);
    for (int k = 0; k <= i; ++k)
        for (int eps = 0; eps < 2; ++eps) {
            if (k == i && eps == 1) continue;
            std::string g = disk_gen(i, k, eps);
            F.set_image(k, tensor_label("x0s", g), cell_class(cell_boundary(C.c, k, eps)));
            F.set_image(k, tensor_label("x0t", g), cell_class(cell_boundary(C.d, k, eps)));
            F.set_image(k + 1, tensor_label("x1", g), cell_class(C.alpha[k][eps]));
        }
    return F;
}

inline cylinder_cell cylinder_cell_from_tensor_functor(const morphism& F, int i) {
    const auto& Tp = F.source_ptr();
    cylinder_cell r;
    r.dim = i;
    r.c = apply_functor(F, atom_cell(Tp, generator{tensor_label("x0s", disk_gen(i, i, 0)), i}));
    r.d = apply_functor(F, atom_cell(Tp, generator{tensor_label("x0t", disk_gen(i, i, 0)), i}));
    for (int k = 0; k <= i; ++k) {
        cell a = apply_functor(
            F, atom_cell(Tp, generator{tensor_label("x1", disk_gen(i, k, 0)), k + 1}));
        cell b = k == i ? a
                        : apply_functor(F, atom_cell(Tp, generator{tensor_label("x1", disk_gen(i, k, 1)),
                                                                   k + 1}));
        r.alpha.push_back({std::move(a), std::move(b)});
    }
    return r;
}

/* ---- the boundary and composition actions recomputed through chains ---- */

namespace detail {

inline std::string sole_generator(const chain& x) {
    if (x.coeffs().size() != 1 || x.coeffs().begin()->second != 1)
        throw error("expected a single generator image");
    return x.coeffs().begin()->first;
}

} // namespace detail

/* reindex a slice cell along a disk morphism, through its chain map */
inline slice_cell slice_reindex(const slice_cell& S, const morphism& u, int new_dim) {
    morphism F = slice_cell_to_join_functor(S);
    morphism under = join_of_morphisms(morphism::identity(share(disk_complex(0))), u);
    return slice_cell_from_join_functor(compose_morphisms(F, under), new_dim);
}

inline slice_cell slice_source_via_tables(const slice_cell& S) {
    return slice_reindex(S, cocat_sigma(S.dim, S.dim - 1), S.dim - 1);
}
inline slice_cell slice_target_via_tables(const slice_cell& S) {
    return slice_reindex(S, cocat_tau(S.dim, S.dim - 1), S.dim - 1);
}
inline slice_cell slice_identity_via_tables(const slice_cell& S) {
    return slice_reindex(S, cocat_kappa(S.dim + 1, S.dim), S.dim + 1);
}

/* The two chain maps glue over the shared boundary to one map out of the
   globular sum; composing with the cocategory composition recovers the
   composite slice cell.  Overlapping images agree exactly when the cells
   are composable. */
inline slice_cell slice_compose_via_tables(const slice_cell& x, const slice_cell& y, int j) {
    int i = x.dim;
    morphism Fx = slice_cell_to_join_functor(x);
    morphism Fy = slice_cell_to_join_functor(y);
    colimit_result sum = globular_sum_result({{i, i}, {j}});
    auto JB = share(join_complex(disk_complex(0), *sum.object));
    morphism CG(JB, x.d.in);
    CG.set_image(0, join_label(std::string("x0"), std::nullopt), cell_class(x.c));
    const morphism* legs[2] = {&sum.legs[0], &sum.legs[1]};
    const morphism* funs[2] = {&Fy, &Fx};
    for (int side = 0; side < 2; ++side)
        for (int k = 0; k <= i; ++k)
            for (int eps = 0; eps < 2; ++eps) {
                if (k == i && eps == 1) continue;
                std::string g = disk_gen(i, k, eps);
                std::string rep = detail::sole_generator(legs[side]->image_gen({g, k}));
                CG.set_image(k, join_label(std::nullopt, rep),
                             funs[side]->image_gen({join_label(std::nullopt, g), k}));
                CG.set_image(k + 1, join_label(std::string("x0"), rep),
                             funs[side]->image_gen({join_label(std::string("x0"), g), k + 1}));
            }
    morphism under = join_of_morphisms(morphism::identity(share(disk_complex(0))), cocat_nabla(i, j));
    return slice_cell_from_join_functor(compose_morphisms(CG, under), i);
}

inline cylinder_cell cylinder_reindex(const cylinder_cell& C, const morphism& u, int new_dim) {
    morphism F = cylinder_cell_to_tensor_functor(C);
    morphism under = tensor_of_morphisms(morphism::identity(share(disk_complex(1))), u);
    return cylinder_cell_from_tensor_functor(compose_morphisms(F, under), new_dim);
}

inline cylinder_cell cylinder_source_via_tables(const cylinder_cell& C) {
    return cylinder_reindex(C, cocat_sigma(C.dim, C.dim - 1), C.dim - 1);
}
inline cylinder_cell cylinder_target_via_tables(const cylinder_cell& C) {
    return cylinder_reindex(C, cocat_tau(C.dim, C.dim - 1), C.dim - 1);
}
inline cylinder_cell cylinder_identity_via_tables(const cylinder_cell& C) {
    return cylinder_reindex(C, cocat_kappa(C.dim + 1, C.dim), C.dim + 1);
}

inline cylinder_cell cylinder_compose_via_tables(const cylinder_cell& x, const cylinder_cell& y,
                                                 int j) {
    int i = x.dim;
    morphism Fx = cylinder_cell_to_tensor_functor(x);
    morphism Fy = cylinder_cell_to_tensor_functor(y);
    colimit_result sum = globular_sum_result({{i, i}, {j}});
    auto TB = share(tensor_complex(disk_complex(1), *sum.object));
    morphism CG(TB, x.d.in);
    const morphism* legs[2] = {&sum.legs[0], &sum.legs[1]};
    const morphism* funs[2] = {&Fy, &Fx};
    for (int side = 0; side < 2; ++side)
        for (int k = 0; k <= i; ++k)
            for (int eps = 0; eps < 2; ++eps) {
                if (k == i && eps == 1) continue;
                std::string g = disk_gen(i, k, eps);
                std::string rep = detail::sole_generator(legs[side]->image_gen({g, k}));
                CG.set_image(k, tensor_label("x0s", rep), funs[side]->image_gen({tensor_label("x0s", g), k}));
                CG.set_image(k, tensor_label("x0t", rep), funs[side]->image_gen({tensor_label("x0t", g), k}));
                CG.set_image(k + 1, tensor_label("x1", rep),
                             funs[side]->image_gen({tensor_label("x1", g), k + 1}));
            }
    morphism under = tensor_of_morphisms(morphism::identity(share(disk_complex(1))), cocat_nabla(i, j));
    return cylinder_cell_from_tensor_functor(compose_morphisms(CG, under), i);
}

/* ---- cylinders carried by oplax transformations ---- */

inline cylinder_cell oplax_cylinder(const oplax_on_atoms& a, const cell& x) {
    homotopy h = oplax_to_homotopy(a);
    cylinder_cell r;
    r.dim = x.dim;
    r.c = apply_functor(a.f, x);
    r.d = apply_functor(a.g, x);
    for (int k = 0; k < x.dim; ++k)
        r.alpha.push_back({oplax_component(a.f, a.g, h, cell_boundary(x, k, 0)),
                           oplax_component(a.f, a.g, h, cell_boundary(x, k, 1))});
    cell top = oplax_component(a.f, a.g, h, x);
    r.alpha.push_back({top, top});
    return r;
}

/* b after a: the composite component over x pastes boundary components of
   both factors around the two top cylinders, one level at a time */
inline oplax_on_atoms oplax_vertical_compose(const oplax_on_atoms& b, const oplax_on_atoms& a) {
    if (!(a.g == b.f)) throw error("vertical composition needs a shared middle functor");
    homotopy ha = oplax_to_homotopy(a);
    homotopy hb = oplax_to_homotopy(b);
    auto paste = [&](auto&& self, int m, const cell& u, const cell& v, const cell& x) -> cell {
        if (m == 0) return cell_compose_pad(u, v, 0);
        cell left = self(self, m - 1, u, oplax_component(a.f, a.g, ha, cell_source(x, m - 1)), x);
        cell right = self(self, m - 1, oplax_component(b.f, b.g, hb, cell_target(x, m - 1)), v, x);
        return cell_compose_pad(left, right, m);
    };
    oplax_on_atoms r;
    r.f = a.f;
    r.g = b.g;
    for (const auto& g : a.f.source().all_generators()) {
        cell xb = atom_cell(a.f.source_ptr(), g);
        cell u = oplax_component(b.f, b.g, hb, xb);
        cell v = oplax_component(a.f, a.g, ha, xb);
        r.comp.emplace(g, paste(paste, xb.dim, u, v, xb));
    }
    return r;
}

/* Validity of a transformation given on atoms: endpoints parallel, each
   component a cell of the right shape whose tops assemble into a valid
   homotopy, each component the cylinder transport of that homotopy, the
   assembled cylinders valid, and the extension to sampled composites and
   identities consistent between its two derivations. */
inline report oplax_validate(const oplax_on_atoms& a, int sample = 8) {
    report r;
    detail::merge_report(r, validate_morphism(a.f), "left functor");
    detail::merge_report(r, validate_morphism(a.g), "right functor");
    if (!(a.f.source() == a.g.source()) || !(a.f.target() == a.g.target()))
        r.violations.push_back({"endpoint functors are not parallel", ""});
    if (!r.ok()) return r;
    const auto& Kp = a.f.source_ptr();
    for (const auto& b : Kp->all_generators()) {
        auto it = a.comp.find(b);
        if (it == a.comp.end()) {
            r.violations.push_back({"missing component", b.name});
            continue;
        }
        if (it->second.dim != b.degree + 1)
            r.violations.push_back({"component dimension is not one above its atom", b.name});
        detail::merge_report(r, validate_cell(it->second), "component of " + b.name);
    }
    if (!r.ok()) return r;
    homotopy h = oplax_to_homotopy(a);
    detail::merge_report(r, validate_homotopy(h), "component tops");
    if (!r.ok()) return r;
    for (const auto& b : Kp->all_generators()) {
        cell xb = atom_cell(Kp, b);
        if (a.comp.at(b) != oplax_component(a.f, a.g, h, xb))
            r.violations.push_back({"component is not the cylinder transport of its top", b.name});
        detail::merge_report(r, cylinder_validate(oplax_cylinder(a, xb)), "cylinder over " + b.name);
    }
    if (!r.ok()) return r;
    int done = 0;
    int top = std::min(Kp->max_degree() + 1, 3);
    for (int d = 1; d <= top && done < sample; ++d) {
        std::vector<cell> cs = enumerate_cells(Kp, d, 1);
        for (std::size_t ix = 0; ix < cs.size() && done < sample; ++ix) {
            cell s0 = cell_source(cs[ix], d - 1);
            if (cylinder_identity(oplax_cylinder(a, s0)) != oplax_cylinder(a, cell_identity(s0)))
                r.violations.push_back({"identity clause fails", chain_to_string(s0.top())});
            for (std::size_t iy = 0; iy < cs.size() && done < sample; ++iy)
                for (int j = 0; j < d; ++j) {
                    if (cell_source(cs[ix], j) != cell_target(cs[iy], j)) continue;
                    cylinder_cell lhs = oplax_cylinder(a, cell_compose(cs[ix], cs[iy], j));
                    cylinder_cell rhs =
                        cylinder_compose(oplax_cylinder(a, cs[ix]), oplax_cylinder(a, cs[iy]), j);
                    if (lhs != rhs)
                        r.violations.push_back({"composition clause fails",
                                                chain_to_string(cs[ix].top()) + " after " +
                                                    chain_to_string(cs[iy].top()) + " at " +
                                                    std::to_string(j)});
                    ++done;
                }
        }
    }
    return r;
}

/* ---- enumeration and the chain-level cross-check ---- */

inline std::vector<slice_cell> enumerate_slice_cells(const std::shared_ptr<const complex>& Lp,
                                                     const cell& c, int dim, i64 cap) {
    auto Jp = share(join_complex(disk_complex(0), disk_complex(dim)));
    std::vector<slice_cell> out;
    for (const auto& F : enumerate_adc_morphisms(Jp, Lp, cap)) {
        if (F.image_gen({join_label(std::string("x0"), std::nullopt), 0}) != cell_class(c)) continue;
        slice_cell S = slice_cell_from_join_functor(F, dim);
        report v = slice_cell_validate(S);
        if (!v.ok())
            throw error("chain map produced an invalid slice cell: " + v.violations.front().check);
        out.push_back(std::move(S));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<cylinder_cell> enumerate_cylinder_cells(const std::shared_ptr<const complex>& Lp,
                                                           int dim, i64 cap) {
    auto Tp = share(tensor_complex(disk_complex(1), disk_complex(dim)));
    std::vector<cylinder_cell> out;
    for (const auto& F : enumerate_adc_morphisms(Tp, Lp, cap)) {
        cylinder_cell C = cylinder_cell_from_tensor_functor(F, dim);
        report v = cylinder_validate(C);
        if (!v.ok())
            throw error("chain map produced an invalid cylinder cell: " + v.violations.front().check);
        out.push_back(std::move(C));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/* Dimension by dimension, the slice cells over c enumerated through chain
   maps out of joins must biject with the positive element tables of the
   algebraic slice complex, through the adjunction transport; composition
   must be preserved on sampled pairs. */
inline report crosscheck_slice(const std::shared_ptr<const complex>& Lp, const cell& c, int imax,
                               i64 cap) {
    report r;
    auto D0p = share(disk_complex(0));
    morphism g0(D0p, Lp);
    g0.set_image(0, "x0", cell_class(c));
    slice_complex SL(g0);
    using table = std::vector<std::array<slice_element, 2>>;

    auto functor_table = [&](const morphism& F, const join_parts& jp, int i) {
        slice_valued_map G = slice_adjunction_phi(F, jp, SL);
        table t;
        for (int k = 0; k <= i; ++k)
            t.push_back({G.image({disk_gen(i, k, 0), k}), G.image({disk_gen(i, k, 1), k})});
        return t;
    };

    for (int i = 0; i <= imax; ++i) {
        auto Dip = share(disk_complex(i));
        join_parts jp = make_join(D0p, Dip);
        std::vector<morphism> funs;
        for (auto& F : enumerate_adc_morphisms(jp.object, Lp, cap))
            if (F.image_gen({join_label(std::string("x0"), std::nullopt), 0}) == cell_class(c))
                funs.push_back(std::move(F));

        std::vector<std::vector<slice_element>> pool;
        for (int k = 0; k <= i; ++k) pool.push_back(SL.enumerate_positive(k, cap));
        std::vector<table> tables;
        table cur(static_cast<std::size_t>(i) + 1, {zero_slice_element(0), zero_slice_element(0)});
        auto down = [&](auto&& self, int level) -> void {
            if (level < 0) {
                tables.push_back(cur);
                return;
            }
            slice_element d0 = SL.diff(cur[static_cast<std::size_t>(level) + 1][0]);
            if (!(d0 == SL.diff(cur[static_cast<std::size_t>(level) + 1][1]))) return;
            for (const auto& u : pool[static_cast<std::size_t>(level)]) {
                slice_element v = add_elements(u, d0);
                if (!SL.positive(v) || !SL.validate(v).ok()) continue;
                if (level == 0 && (SL.aug(u) != 1 || SL.aug(v) != 1)) continue;
                cur[static_cast<std::size_t>(level)] = {u, v};
                self(self, level - 1);
            }
        };
        for (const auto& t : pool[static_cast<std::size_t>(i)]) {
            if (i == 0 && SL.aug(t) != 1) continue;
            cur[static_cast<std::size_t>(i)] = {t, t};
            down(down, i - 1);
        }
        std::sort(tables.begin(), tables.end());

        std::vector<table> images;
        for (const auto& F : funs) {
            report v = slice_cell_validate(slice_cell_from_join_functor(F, i));
            if (!v.ok())
                r.violations.push_back({"chain map fails to give a valid slice cell",
                                        "dimension " + std::to_string(i) + ": " + v.violations.front().check});
            slice_valued_map G = slice_adjunction_phi(F, jp, SL);
            report w = validate_slice_map(G, SL);
            if (!w.ok())
                r.violations.push_back({"transported map is invalid",
                                        "dimension " + std::to_string(i) + ": " + w.violations.front().check});
            images.push_back(functor_table(F, jp, i));
        }
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end())
            r.violations.push_back({"adjunction transport is not injective", "dimension " + std::to_string(i)});
        if (images != tables)
            r.violations.push_back({"cell sets do not biject",
                                    "dimension " + std::to_string(i) + ": " +
                                        std::to_string(images.size()) + " chain maps vs " +
                                        std::to_string(tables.size()) + " element tables"});
    }

    if (imax >= 1 && r.ok()) {
        int i = imax;
        join_parts jp = make_join(D0p, share(disk_complex(i)));
        std::vector<slice_cell> cells = enumerate_slice_cells(Lp, c, i, cap);
        auto composable = [&](const slice_cell& x, const slice_cell& y, int j) {
            slice_cell sx = x, ty = y;
            while (sx.dim > j) sx = slice_source(sx);
            while (ty.dim > j) ty = slice_target(ty);
            return sx == ty;
        };
        int done = 0;
        for (std::size_t ix = 0; ix < cells.size() && done < 10; ++ix)
            for (std::size_t iy = 0; iy < cells.size() && done < 10; ++iy)
                for (int j = 0; j < i && done < 10; ++j) {
                    if (!composable(cells[ix], cells[iy], j)) continue;
                    slice_cell sc = slice_compose(cells[ix], cells[iy], j);
                    table tx = functor_table(slice_cell_to_join_functor(cells[ix]), jp, i);
                    table ty = functor_table(slice_cell_to_join_functor(cells[iy]), jp, i);
                    table got = functor_table(slice_cell_to_join_functor(sc), jp, i);
                    table want;
                    for (int k = 0; k <= i; ++k) {
                        if (k <= j) want.push_back({ty[static_cast<std::size_t>(k)][0],
                                                    tx[static_cast<std::size_t>(k)][1]});
                        else want.push_back({add_elements(tx[static_cast<std::size_t>(k)][0],
                                                          ty[static_cast<std::size_t>(k)][0]),
                                             add_elements(tx[static_cast<std::size_t>(k)][1],
                                                          ty[static_cast<std::size_t>(k)][1])});
                    }
                    if (!(got == want))
                        r.violations.push_back({"composition is not preserved",
                                                "dimension " + std::to_string(i) + " level " +
                                                    std::to_string(j)});
                    ++done;
                }
    }
    return r;
}

} // namespace adcat
