#pragma once

#include "homotopy.hpp"
#include "monoidal.hpp"

#include <functional>

namespace adcat {

/* An element of degree i of the slice of M under g: K -> M carries the
   distinguished chain u_{-1}(1) of degree i and, for each source
   generator x of degree j, a chain u_j(x) of degree i+j+1 in M.  The
   degree 0 part is the subset cut out by an affine relation, not a
   subgroup, so the slice is handled through element operations. */
struct slice_element {
    int degree = 0;
    chain base;                                         /* u_{-1}(1) */
    std::map<int, std::map<std::string, chain>> maps;   /* j >= 0 */

    chain component(const generator& x) const {
        auto it = maps.find(x.degree);
        if (it != maps.end()) {
            auto jt = it->second.find(x.name);
            if (jt != it->second.end()) return jt->second;
        }
        return chain(degree + x.degree + 1);
    }

    chain apply(const chain& c) const {
        chain r(degree + c.degree() + 1);
        for (const auto& [n, k] : c.coeffs()) r.add(component({n, c.degree()}), k);
        return r;
    }

    void set_component(int j, const std::string& name, chain value) {
        auto it = maps.find(j);
        if (value.is_zero()) {
            if (it != maps.end()) {
                it->second.erase(name);
                if (it->second.empty()) maps.erase(it);
            }
        } else {
            maps[j][name] = std::move(value);
        }
    }

    bool is_zero() const { return base.is_zero() && maps.empty(); }
};

inline bool operator==(const slice_element& a, const slice_element& b) {
    return a.degree == b.degree && a.base == b.base && a.maps == b.maps;
}

inline bool operator!=(const slice_element& a, const slice_element& b) { return !(a == b); }

inline bool operator<(const slice_element& a, const slice_element& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.base != b.base) return a.base < b.base;
    return a.maps < b.maps;
}

inline slice_element zero_slice_element(int degree) {
    slice_element u;
    u.degree = degree;
    u.base = chain(degree);
    return u;
}

inline slice_element scaled_element(const slice_element& u, i64 k) {
    slice_element r;
    r.degree = u.degree;
    r.base = u.base.scaled(k);
    for (const auto& [j, table] : u.maps)
        for (const auto& [n, c] : table) r.set_component(j, n, c.scaled(k));
    return r;
}

inline slice_element add_elements(const slice_element& a, const slice_element& b) {
    if (a.degree != b.degree) throw error("cannot add slice elements of different degrees");
    slice_element r = a;
    r.base = a.base + b.base;
    for (const auto& [j, table] : b.maps)
        for (const auto& [n, c] : table) r.set_component(j, n, r.component({n, j}) + c);
    return r;
}

class slice_complex {
public:
    explicit slice_complex(morphism g) : g_(std::move(g)) {
        report r = validate_morphism(g_);
        if (!r.ok()) throw error("slice over an invalid morphism: " + r.violations.front().check);
    }

    const morphism& over() const { return g_; }
    const complex& index() const { return g_.source(); }
    const complex& ambient() const { return g_.target(); }
    std::shared_ptr<const complex> index_ptr() const { return g_.source_ptr(); }
    std::shared_ptr<const complex> ambient_ptr() const { return g_.target_ptr(); }

    /* augmentation extended by zero away from degree 0 */
    i64 extended_aug(const chain& z) const { return ambient().aug_extended(z); }

    report validate(const slice_element& u) const {
        report r;
        if (u.degree < 0) {
            r.violations.push_back({"slice element has negative degree", ""});
            return r;
        }
        if (!u.base.is_zero() &&
            (u.base.degree() != u.degree || !ambient().supported_on_basis(u.base)))
            r.violations.push_back({"distinguished chain is not ambient of the element degree", ""});
        for (const auto& [j, table] : u.maps)
            for (const auto& [n, c] : table) {
                if (j < 0 || !index().has_generator(j, n)) {
                    r.violations.push_back({"component key is not a source generator", n});
                    continue;
                }
                if (!c.is_zero() &&
                    (c.degree() != u.degree + j + 1 || !ambient().supported_on_basis(c)))
                    r.violations.push_back({"component is not ambient of the shifted degree", n});
            }
        if (!r.ok() || u.degree != 0) return r;
        i64 e0 = ambient().aug_extended(u.base);
        for (const auto& x : index().all_generators()) {
            int j = x.degree;
            chain du = ambient().diff(u.component(x));
            chain ud = j == 0 ? u.base.scaled(index().aug_gen(x.name)) : u.apply(index().diff_gen(x));
            chain lhs = (du - ud).scaled(j % 2 == 0 ? -1 : 1);
            if (lhs != g_.image_gen(x).scaled(e0))
                r.violations.push_back({"degree 0 relation fails", x.name});
        }
        return r;
    }

    bool positive(const slice_element& u) const {
        if (!u.base.nonnegative()) return false;
        for (const auto& [j, table] : u.maps)
            for (const auto& [n, c] : table) {
                (void)n;
                if (!c.nonnegative()) return false;
            }
        return true;
    }

    slice_element diff(const slice_element& u) const {
        if (u.degree < 1) throw error("slice differential starts in degree 1");
        slice_element r;
        r.degree = u.degree - 1;
        r.base = ambient().diff(u.base);
        for (const auto& x : index().all_generators()) {
            int j = x.degree;
            chain du = ambient().diff(u.component(x));
            chain ud = j == 0 ? u.base.scaled(index().aug_gen(x.name)) : u.apply(index().diff_gen(x));
            r.set_component(j, x.name, (du - ud).scaled(j % 2 == 0 ? -1 : 1));
        }
        return r;
    }

    i64 aug(const slice_element& u) const {
        if (u.degree != 0) throw error("slice augmentation lives in degree 0");
        return ambient().aug(u.base);
    }

    /* one element per nonzero slot: group generators of the degreewise product */
    std::vector<slice_element> elementary(int degree) const {
        std::vector<slice_element> out;
        for (const auto& m : ambient().basis_at(degree)) {
            slice_element u = zero_slice_element(degree);
            u.base = chain::unit(degree, m);
            out.push_back(std::move(u));
        }
        for (const auto& x : index().all_generators())
            for (const auto& m : ambient().basis_at(degree + x.degree + 1)) {
                slice_element u = zero_slice_element(degree);
                u.set_component(x.degree, x.name, chain::unit(degree + x.degree + 1, m));
                out.push_back(std::move(u));
            }
        return out;
    }

    /* all positive elements with entries bounded by cap; in degree 0 only
       the ones satisfying the defining relation */
    std::vector<slice_element> enumerate_positive(int degree, i64 cap) const {
        struct slot {
            int j;                 /* -1 marks the distinguished slot */
            std::string gen;
            std::string target;
            int target_degree;
        };
        std::vector<slot> slots;
        for (const auto& m : ambient().basis_at(degree)) slots.push_back({-1, "", m, degree});
        for (const auto& x : index().all_generators())
            for (const auto& m : ambient().basis_at(degree + x.degree + 1))
                slots.push_back({x.degree, x.name, m, degree + x.degree + 1});
        double size = 1;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            size *= static_cast<double>(cap + 1);
            if (size > 5e6) throw error("enumeration too large");
        }
        std::vector<i64> odo(slots.size(), 0);
        std::vector<slice_element> out;
        for (;;) {
            slice_element u = zero_slice_element(degree);
            for (std::size_t i = 0; i < slots.size(); ++i) {
                if (odo[i] == 0) continue;
                if (slots[i].j < 0) u.base.add(slots[i].target, odo[i]);
                else u.set_component(slots[i].j, slots[i].gen,
                                     u.component({slots[i].gen, slots[i].j}) +
                                         chain::unit(slots[i].target_degree, slots[i].target).scaled(odo[i]));
            }
            if (degree != 0 || validate(u).ok()) out.push_back(std::move(u));
            std::size_t pos = 0;
            while (pos < slots.size() && odo[pos] == cap) odo[pos++] = 0;
            if (pos == slots.size()) break;
            ++odo[pos];
        }
        return out;
    }

private:
    morphism g_;
};

inline const chain& slice_forget(const slice_element& u) { return u.base; }

/* a morphism from a based complex into a slice, one element per generator */
struct slice_valued_map {
    std::shared_ptr<const complex> source;
    std::map<int, std::map<std::string, slice_element>> images;

    slice_element image(const generator& y) const {
        auto it = images.find(y.degree);
        if (it != images.end()) {
            auto jt = it->second.find(y.name);
            if (jt != it->second.end()) return jt->second;
        }
        return zero_slice_element(y.degree);
    }

    slice_element apply(const chain& c) const {
        slice_element r = zero_slice_element(c.degree());
        for (const auto& [n, k] : c.coeffs())
            r = add_elements(r, scaled_element(image({n, c.degree()}), k));
        return r;
    }

    void set_image(int degree, const std::string& name, slice_element u) {
        auto it = images.find(degree);
        if (u.is_zero()) {
            if (it != images.end()) {
                it->second.erase(name);
                if (it->second.empty()) images.erase(it);
            }
        } else {
            images[degree][name] = std::move(u);
        }
    }
};

inline bool operator==(const slice_valued_map& a, const slice_valued_map& b) {
    return *a.source == *b.source && a.images == b.images;
}

inline bool operator!=(const slice_valued_map& a, const slice_valued_map& b) { return !(a == b); }

inline bool operator<(const slice_valued_map& a, const slice_valued_map& b) {
    return a.images < b.images;
}

inline report validate_slice_map(const slice_valued_map& G, const slice_complex& S) {
    report r;
    const complex& L = *G.source;
    for (const auto& y : L.all_generators()) {
        slice_element img = G.image(y);
        if (img.degree != y.degree) {
            r.violations.push_back({"image degree mismatch", y.name});
            continue;
        }
        report e = S.validate(img);
        if (!e.ok()) {
            r.violations.push_back({"image is not a slice element: " + e.violations.front().check, y.name});
            continue;
        }
        if (!S.positive(img))
            r.violations.push_back({"image of a generator is not positive", y.name});
        if (y.degree == 0) {
            if (S.aug(img) != L.aug_gen(y.name))
                r.violations.push_back({"augmentation not preserved", y.name});
        } else if (S.diff(img) != G.apply(L.diff_gen(y))) {
            r.violations.push_back({"differential not preserved", y.name});
        }
    }
    return r;
}

/* all morphisms L -> M//g with entries bounded by cap, lexicographically */
inline std::vector<slice_valued_map> enumerate_slice_maps(std::shared_ptr<const complex> Lp,
                                                          const slice_complex& S, i64 cap) {
    const complex& L = *Lp;
    std::vector<generator> gens = L.all_generators();
    std::map<int, std::vector<slice_element>> pool;
    for (const auto& y : gens)
        if (!pool.count(y.degree)) pool[y.degree] = S.enumerate_positive(y.degree, cap);
    std::vector<slice_valued_map> out;
    slice_valued_map cur;
    cur.source = Lp;
    std::function<void(std::size_t)> rec = [&](std::size_t at) {
        if (at == gens.size()) {
            out.push_back(cur);
            return;
        }
        const generator& y = gens[at];
        for (const auto& cand : pool[y.degree]) {
            if (y.degree == 0) {
                if (S.aug(cand) != L.aug_gen(y.name)) continue;
            } else if (S.diff(cand) != cur.apply(L.diff_gen(y))) {
                continue;
            }
            cur.set_image(y.degree, y.name, cand);
            rec(at + 1);
            cur.set_image(y.degree, y.name, zero_slice_element(y.degree));
        }
    };
    rec(0);
    return out;
}

/* ---- the join adjunction ---- */

/* F: K*L -> M under K becomes L -> M//g, reading components off the
   mixed generators of the join */
inline slice_valued_map slice_adjunction_phi(const morphism& F, const join_parts& jp,
                                             const slice_complex& S) {
    if (!(F.source() == *jp.object)) throw error("morphism does not start at the given join");
    if (!(F.target() == S.ambient())) throw error("morphism does not land in the ambient complex");
    if (!(compose_morphisms(F, jp.i1) == S.over()))
        throw error("morphism is not under the base complex");
    const complex& K = jp.i1.source();
    const complex& L = jp.i2.source();
    slice_valued_map G;
    G.source = jp.i2.source_ptr();
    for (const auto& y : L.all_generators()) {
        slice_element u = zero_slice_element(y.degree);
        u.base = F.image_gen({join_label(std::nullopt, y.name), y.degree});
        for (const auto& x : K.all_generators())
            u.set_component(x.degree, x.name,
                            F.image_gen({join_label(x.name, y.name),
                                         x.degree + 1 + y.degree}));
        G.set_image(y.degree, y.name, u);
    }
    return G;
}

inline morphism slice_adjunction_psi(const slice_valued_map& G, const join_parts& jp,
                                     const slice_complex& S) {
    if (!(*G.source == jp.i2.source())) throw error("map does not start at the join factor");
    const complex& K = jp.i1.source();
    const complex& L = jp.i2.source();
    morphism F(jp.object, S.ambient_ptr());
    for (const auto& x : K.all_generators())
        F.set_image(x.degree, join_label(x.name, std::nullopt), S.over().image_gen(x));
    for (const auto& y : L.all_generators()) {
        slice_element u = G.image(y);
        F.set_image(y.degree, join_label(std::nullopt, y.name), u.base);
        for (const auto& x : K.all_generators())
            F.set_image(x.degree + 1 + y.degree, join_label(x.name, y.name),
                        u.component(x));
    }
    return F;
}

/* ---- pullback along a triangle with an antihomotopy ---- */

struct slice_pullback {
    morphism f;    /* K -> K' */
    homotopy h;    /* antihomotopy g -> g'∘f, components K_j -> L_{j+1} */
    slice_complex src;   /* L//g' */
    slice_complex dst;   /* L//g  */

    slice_element apply(const slice_element& up) const {
        slice_element r;
        r.degree = up.degree;
        r.base = up.base;
        i64 e0 = src.extended_aug(up.base);
        for (const auto& x : dst.index().all_generators()) {
            chain val = up.apply(f.image_gen(x));
            if (e0 != 0) val = val + h.component(x).scaled(e0);
            r.set_component(x.degree, x.name, val);
        }
        return r;
    }
};

inline slice_pullback triangle_pullback(const morphism& f, const homotopy& h,
                                        const morphism& g, const morphism& gp) {
    if (!is_decent(gp.target())) throw error("pullback needs a decent ambient complex");
    if (h.level != 1 || !h.anti) throw error("pullback needs a level 1 antihomotopy");
    report hr = validate_homotopy(h);
    if (!hr.ok()) throw error("pullback given an invalid antihomotopy: " + hr.violations.front().check);
    if (!(*h.lo == from_morphism(g)) || !(*h.hi == from_morphism(compose_morphisms(gp, f))))
        throw error("antihomotopy endpoints do not match the triangle");
    return {f, h, slice_complex(gp), slice_complex(g)};
}

/* ---- homotopy between pullbacks, from a cone ---- */

struct slice_cone {
    homotopy k;    /* antihomotopy f -> f', components K_j -> K'_{j+1} */
    homotopy H;    /* 2-antihomotopy g'k + h -> h', components K_j -> L_{j+2} */
    slice_complex src;   /* L//g' */
    slice_complex dst;   /* L//g  */

    /* raises element degree by one; the distinguished slot is zero */
    slice_element apply(const slice_element& up) const {
        slice_element r;
        r.degree = up.degree + 1;
        r.base = chain(up.degree + 1);
        i64 e0 = src.extended_aug(up.base);
        for (const auto& x : dst.index().all_generators()) {
            chain val = up.apply(k.component(x));
            if (e0 != 0) val = val + H.component(x).scaled(e0);
            r.set_component(x.degree, x.name, val);
        }
        return r;
    }
};

inline slice_cone cone_homotopy(const homotopy& k, const homotopy& H,
                                const morphism& g, const morphism& gp) {
    if (!is_decent(gp.target())) throw error("cone needs a decent ambient complex");
    if (k.level != 1 || !k.anti) throw error("cone needs a level 1 antihomotopy between morphisms");
    if (H.level != 2 || !H.anti) throw error("cone needs a level 2 antihomotopy");
    report kr = validate_homotopy(k);
    if (!kr.ok()) throw error("cone given an invalid antihomotopy: " + kr.violations.front().check);
    report Hr = validate_homotopy(H);
    if (!Hr.ok()) throw error("cone given an invalid 2-antihomotopy: " + Hr.violations.front().check);
    if (!(*H.src == *k.src) || !(*H.dst == gp.target()))
        throw error("cone data does not run between the expected complexes");
    morphism fp = to_morphism(*k.hi);
    if (!(*H.lo->lo == from_morphism(g)) ||
        !(*H.lo->hi == from_morphism(compose_morphisms(gp, fp))))
        throw error("cone endpoints do not match the triangle");
    homotopy gpk = whisker_left(gp, k);
    for (const auto& x : k.src->all_generators()) {
        chain hc = H.lo->component(x) - gpk.component(x);
        if (!hc.nonnegative()) throw error("lower cone face does not contain a positive antihomotopy");
    }
    return {k, H, slice_complex(gp), slice_complex(g)};
}

/* ---- coslice, by duality ---- */

inline morphism opp_morphism(const morphism& g) {
    morphism r(share(opp_dual(g.source())), share(opp_dual(g.target())));
    for (const auto& [deg, table] : g.maps())
        for (const auto& [n, c] : table) r.set_image(deg, n, c);
    return r;
}

/* elements coincide with those of the slice over the odd-dual data; the
   outer dual flips the differential out of odd degrees */
class coslice_complex {
public:
    explicit coslice_complex(const morphism& g) : inner_(opp_morphism(g)) {}

    const slice_complex& inner() const { return inner_; }
    report validate(const slice_element& u) const { return inner_.validate(u); }
    bool positive(const slice_element& u) const { return inner_.positive(u); }
    i64 aug(const slice_element& u) const { return inner_.aug(u); }

    slice_element diff(const slice_element& u) const {
        slice_element r = inner_.diff(u);
        if (u.degree % 2 == 1) r = scaled_element(r, -1);
        return r;
    }

private:
    slice_complex inner_;
};

} // namespace adcat
