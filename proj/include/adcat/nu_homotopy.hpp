#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cells.hpp"
#include "homotopy.hpp"
#include "monoidal.hpp"

namespace adcat {

/* A homotopy h : f => g of morphisms K -> L is the same thing as a chain
   map cylinder(K) = interval (x) K -> L restricting to f and g on the two
   ends; this packages h as that chain map.  Validity of h as a homotopy is
   exactly validity of the result as a morphism. */
inline morphism cylinder_morphism(const homotopy& h) {
    if (h.level != 1 || h.anti) throw error("cylinder morphisms encode level-1 homotopies");
    if (!h.lo || !h.hi) throw error("cylinder morphism needs both endpoints");
    morphism f = to_morphism(*h.lo);
    morphism g = to_morphism(*h.hi);
    auto Tp = share(tensor_complex(disk_complex(1), *h.src));
    morphism H(Tp, h.dst);
    for (const auto& b : h.src->all_generators()) {
        H.set_image(b.degree, tensor_label("x0s", b.name), f.image_gen(b));
        H.set_image(b.degree, tensor_label("x0t", b.name), g.image_gen(b));
        H.set_image(b.degree + 1, tensor_label("x1", b.name), h.component(b));
    }
    return H;
}

/* The cylinder cell a homotopy h : f => g induces over an i-cell x: row l
   glues f of the source side of x to g of the target side through the h
   images of the rows one dimension down, and the top is h of the top of x. */
inline cell oplax_component(const morphism& f, const morphism& g, const homotopy& h, const cell& x) {
    cell r;
    r.in = f.target_ptr();
    r.dim = x.dim + 1;
    for (int l = 0; l <= x.dim; ++l) {
        chain lo = f.apply(x.row(l, 0));
        chain hi = g.apply(x.row(l, 1));
        if (l > 0) {
            lo = lo + h.apply(x.row(l - 1, 1));
            hi = hi + h.apply(x.row(l - 1, 0));
        }
        r.rows.push_back({std::move(lo), std::move(hi)});
    }
    chain top = h.apply(x.top());
    r.rows.push_back({top, top});
    return require_valid(std::move(r), "oplax_component");
}

/* an oplax transformation, recorded by its component cells on atoms */
struct oplax_on_atoms {
    morphism f, g;
    std::map<generator, cell> comp;
};

inline bool operator==(const oplax_on_atoms& a, const oplax_on_atoms& b) {
    return a.f == b.f && a.g == b.g && a.comp == b.comp;
}
inline bool operator!=(const oplax_on_atoms& a, const oplax_on_atoms& b) { return !(a == b); }

/* the component tops assemble back into the underlying homotopy */
inline homotopy oplax_to_homotopy(const oplax_on_atoms& a) {
    homotopy h;
    h.level = 1;
    h.anti = false;
    h.src = a.f.source_ptr();
    h.dst = a.f.target_ptr();
    h.lo = std::make_shared<homotopy>(from_morphism(a.f));
    h.hi = std::make_shared<homotopy>(from_morphism(a.g));
    for (const auto& [b, c] : a.comp) h.set_component(b.degree, b.name, c.top());
    return h;
}

inline cell oplax_component(const oplax_on_atoms& a, const cell& x) {
    return oplax_component(a.f, a.g, oplax_to_homotopy(a), x);
}

/* the identity transformation on f: every component is an identity cell */
inline oplax_on_atoms oplax_identity(const morphism& f) {
    oplax_on_atoms a;
    a.f = f;
    a.g = f;
    for (const auto& b : f.source().all_generators())
        a.comp.emplace(b, cell_identity(apply_functor(f, atom_cell(f.source_ptr(), b))));
    return a;
}

/* A homotopy h : f => g induces an oplax transformation between the cell
   structures: pass through the cylinder chain map and read each component
   off the atom of the corresponding cylinder generator.  The boundary of
   every component is then checked to paste as an oplax naturality square:
   the i-source of the component over b is the component tower over the
   targets of <b> applied to f<b>, and dually for the i-target. */
inline oplax_on_atoms nu_of_homotopy(const homotopy& h) {
    report ok = validate_homotopy(h);
    if (!ok.ok()) throw error("nu_of_homotopy needs a valid homotopy: " + ok.violations.front().check);
    morphism H = cylinder_morphism(h);
    ok = validate_morphism(H);
    if (!ok.ok()) throw error("cylinder morphism invalid: " + ok.violations.front().check);

    oplax_on_atoms a;
    a.f = to_morphism(*h.lo);
    a.g = to_morphism(*h.hi);
    const auto& Tp = H.source_ptr();
    for (const auto& b : h.src->all_generators()) {
        generator cyl{tensor_label("x1", b.name), b.degree + 1};
        a.comp.emplace(b, apply_functor(H, atom_cell(Tp, cyl)));
    }

    for (const auto& b : h.src->all_generators()) {
        cell xb = atom_cell(h.src, b);
        const cell& ab = a.comp.at(b);
        std::vector<cell> up, down;
        for (int m = 0; m < xb.dim; ++m) {
            up.push_back(oplax_component(a.f, a.g, h, cell_target(xb, m)));
            down.push_back(oplax_component(a.f, a.g, h, cell_source(xb, m)));
        }
        if (cell_source(ab, xb.dim) != paste_onto_targets(apply_functor(a.f, xb), up))
            throw error("component source does not paste over '" + b.name + "'");
        if (cell_target(ab, xb.dim) != paste_onto_sources(apply_functor(a.g, xb), down))
            throw error("component target does not paste over '" + b.name + "'");
    }
    return a;
}

/* restriction along a morphism into the source: components at the images */
inline oplax_on_atoms oplax_precompose(const oplax_on_atoms& a, const morphism& u) {
    homotopy h = oplax_to_homotopy(a);
    oplax_on_atoms r;
    r.f = compose_morphisms(a.f, u);
    r.g = compose_morphisms(a.g, u);
    for (const auto& b : u.source().all_generators())
        r.comp.emplace(b, oplax_component(a.f, a.g, h, apply_functor(u, atom_cell(u.source_ptr(), b))));
    return r;
}

/* pushforward along a morphism out of the target */
inline oplax_on_atoms oplax_postcompose(const morphism& u, const oplax_on_atoms& a) {
    oplax_on_atoms r;
    r.f = compose_morphisms(u, a.f);
    r.g = compose_morphisms(u, a.g);
    for (const auto& [b, c] : a.comp) r.comp.emplace(b, apply_functor(u, c));
    return r;
}

} // namespace adcat
