#pragma once

#include "morphism.hpp"

#include <optional>

namespace adcat {

/* A level n family K -> L raises degrees by n; level 0 is a morphism.
   At positive levels the endpoints lo, hi sit one level down, and the
   components obey
       d H_i - (-1)^n H_{i-1} d = hi_i - lo_i          (plain)
       d H_i -        H_{i-1} d = (-1)^i (hi_i - lo_i)  (anti)
   together with positivity of every component on basis elements. */
struct homotopy {
    int level = 0;
    bool anti = false;
    std::shared_ptr<const complex> src, dst;
    std::map<int, std::map<std::string, chain>> comp;
    std::shared_ptr<const homotopy> lo, hi;

    chain component(const generator& g) const {
        auto it = comp.find(g.degree);
        if (it != comp.end()) {
            auto jt = it->second.find(g.name);
            if (jt != it->second.end()) return jt->second;
        }
        return chain(g.degree + level);
    }

    chain apply(const chain& x) const {
        chain r(x.degree() + level);
        for (const auto& [n, c] : x.coeffs()) r.add(component({n, x.degree()}), c);
        return r;
    }

    void set_component(int degree, const std::string& name, chain value) {
        if (value.is_zero()) {
            auto it = comp.find(degree);
            if (it != comp.end()) {
                it->second.erase(name);
                if (it->second.empty()) comp.erase(it);
            }
        } else {
            comp[degree][name] = std::move(value);
        }
    }
};

inline bool operator==(const homotopy& a, const homotopy& b) {
    if (a.level != b.level || a.anti != b.anti) return false;
    if (!(*a.src == *b.src) || !(*a.dst == *b.dst)) return false;
    if (a.comp != b.comp) return false;
    if (static_cast<bool>(a.lo) != static_cast<bool>(b.lo)) return false;
    if (static_cast<bool>(a.hi) != static_cast<bool>(b.hi)) return false;
    if (a.lo && !(*a.lo == *b.lo)) return false;
    if (a.hi && !(*a.hi == *b.hi)) return false;
    return true;
}

inline bool operator!=(const homotopy& a, const homotopy& b) { return !(a == b); }

inline homotopy from_morphism(const morphism& f) {
    homotopy h;
    h.level = 0;
    h.src = f.source_ptr();
    h.dst = f.target_ptr();
    h.comp = f.maps();
    return h;
}

inline morphism to_morphism(const homotopy& h) {
    if (h.level != 0) throw error("only a level 0 family is a morphism");
    morphism f(h.src, h.dst);
    for (const auto& [deg, table] : h.comp)
        for (const auto& [n, c] : table) f.set_image(deg, n, c);
    return f;
}

inline report validate_homotopy(const homotopy& H) {
    if (H.level == 0) return validate_morphism(to_morphism(H));
    report r;
    const complex& K = *H.src;
    const complex& L = *H.dst;
    if (!H.lo || !H.hi) {
        r.violations.push_back({"a positive level family needs both endpoints", ""});
        return r;
    }
    if (H.lo->level != H.level - 1 || H.hi->level != H.level - 1) {
        r.violations.push_back({"endpoints must sit one level down", ""});
        return r;
    }
    if (!(*H.lo->src == K) || !(*H.lo->dst == L) || !(*H.hi->src == K) || !(*H.hi->dst == L)) {
        r.violations.push_back({"endpoints must run between the same complexes", ""});
        return r;
    }
    if (H.level >= 2) {
        bool parallel = H.lo->lo && H.hi->lo && H.lo->hi && H.hi->hi &&
                        *H.lo->lo == *H.hi->lo && *H.lo->hi == *H.hi->hi &&
                        H.lo->anti == H.hi->anti;
        if (!parallel) {
            r.violations.push_back({"endpoints must be parallel", ""});
            return r;
        }
    }
    for (const auto& side : {H.lo, H.hi}) {
        report e = validate_homotopy(*side);
        for (auto& v : e.violations) r.violations.push_back(std::move(v));
    }
    if (!r.ok()) return r;

    for (const auto& [deg, table] : H.comp)
        for (const auto& [name, value] : table) {
            if (!K.has_generator(deg, name))
                r.violations.push_back({"component key is not a source generator", name});
            else if (!value.is_zero() &&
                     (value.degree() != deg + H.level || !L.supported_on_basis(value)))
                r.violations.push_back({"component is not a target chain of the shifted degree", name});
        }
    int n = H.level;
    for (const auto& g : K.all_generators()) {
        chain c = H.component(g);
        if (!c.nonnegative())
            r.violations.push_back({"component of a basis element is not positive", g.name});
        chain hd = H.apply(K.diff_gen(g));
        chain lhs = L.diff(c) - hd.scaled(H.anti ? 1 : (n % 2 == 0 ? 1 : -1));
        chain rhs = H.hi->component(g) - H.lo->component(g);
        if (H.anti && g.degree % 2 == 1) rhs = rhs.scaled(-1);
        if (lhs != rhs)
            r.violations.push_back({"boundary relation fails", g.name});
    }
    return r;
}

inline homotopy homotopy_identity(const homotopy& h, bool anti) {
    homotopy H;
    H.level = h.level + 1;
    H.anti = anti;
    H.src = h.src;
    H.dst = h.dst;
    H.lo = std::make_shared<const homotopy>(h);
    H.hi = H.lo;
    return H;
}

inline homotopy homotopy_identity(const morphism& f, bool anti) {
    return homotopy_identity(from_morphism(f), anti);
}

/* precompose with a morphism: a family h -> h' becomes h∘g -> h'∘g */
inline homotopy whisker_right(const homotopy& H, const morphism& g) {
    if (H.level == 0) return from_morphism(compose_morphisms(to_morphism(H), g));
    if (g.target() != *H.src) throw error("whiskering needs a matching middle complex");
    homotopy R;
    R.level = H.level;
    R.anti = H.anti;
    R.src = g.source_ptr();
    R.dst = H.dst;
    for (const auto& x : g.source().all_generators())
        R.set_component(x.degree, x.name, H.apply(g.image_gen(x)));
    R.lo = std::make_shared<const homotopy>(whisker_right(*H.lo, g));
    R.hi = std::make_shared<const homotopy>(whisker_right(*H.hi, g));
    return R;
}

/* postcompose with a morphism: a family h -> h' becomes g∘h -> g∘h' */
inline homotopy whisker_left(const morphism& g, const homotopy& H) {
    if (H.level == 0) return from_morphism(compose_morphisms(g, to_morphism(H)));
    if (*H.dst != g.source()) throw error("whiskering needs a matching middle complex");
    homotopy R;
    R.level = H.level;
    R.anti = H.anti;
    R.src = H.src;
    R.dst = g.target_ptr();
    for (const auto& x : H.src->all_generators())
        R.set_component(x.degree, x.name, g.apply(H.component(x)));
    R.lo = std::make_shared<const homotopy>(whisker_left(g, *H.lo));
    R.hi = std::make_shared<const homotopy>(whisker_left(g, *H.hi));
    return R;
}

/* b: h0 -> h1 then a: h1 -> h2 gives a+b: h0 -> h2 */
inline homotopy vertical_sum(const homotopy& a, const homotopy& b) {
    if (a.level != b.level || a.level < 1) throw error("sum needs equal positive levels");
    if (a.anti != b.anti) throw error("sum needs matching variance");
    if (!(*a.src == *b.src) || !(*a.dst == *b.dst)) throw error("sum needs parallel families");
    if (!(*a.lo == *b.hi)) throw error("sum needs a shared middle endpoint");
    homotopy R;
    R.level = a.level;
    R.anti = a.anti;
    R.src = a.src;
    R.dst = a.dst;
    R.comp = a.comp;
    for (const auto& [deg, table] : b.comp)
        for (const auto& [nm, c] : table)
            R.set_component(deg, nm, R.component({nm, deg}) + c);
    R.lo = b.lo;
    R.hi = a.hi;
    return R;
}

/* sum across the next boundary direction: endpoints compose end-to-end
   one level further down */
inline homotopy cod2_sum(const homotopy& a, const homotopy& b) {
    if (a.level != b.level || a.level < 2) throw error("this sum needs equal levels of at least 2");
    if (a.anti != b.anti) throw error("sum needs matching variance");
    if (!(*a.src == *b.src) || !(*a.dst == *b.dst)) throw error("sum needs parallel families");
    homotopy R;
    R.level = a.level;
    R.anti = a.anti;
    R.src = a.src;
    R.dst = a.dst;
    R.comp = a.comp;
    for (const auto& [deg, table] : b.comp)
        for (const auto& [nm, c] : table)
            R.set_component(deg, nm, R.component({nm, deg}) + c);
    R.lo = std::make_shared<const homotopy>(vertical_sum(*a.lo, *b.lo));
    R.hi = std::make_shared<const homotopy>(vertical_sum(*a.hi, *b.hi));
    return R;
}

/* the interchange square of two level 1 families, one level up */
inline homotopy gray_interchange(const homotopy& hp, const homotopy& h) {
    if (h.level != 1 || hp.level != 1) throw error("interchange needs two level 1 families");
    if (hp.anti != h.anti) throw error("interchange needs matching variance");
    if (!(*h.dst == *hp.src)) throw error("interchange needs composable families");
    morphism f = to_morphism(*h.lo), g = to_morphism(*h.hi);
    morphism fp = to_morphism(*hp.lo), gp = to_morphism(*hp.hi);
    homotopy R;
    R.level = 2;
    R.anti = h.anti;
    R.src = h.src;
    R.dst = hp.dst;
    for (const auto& x : h.src->all_generators())
        R.set_component(x.degree, x.name, hp.apply(h.component(x)));
    homotopy near = vertical_sum(whisker_right(hp, g), whisker_left(fp, h));
    homotopy far = vertical_sum(whisker_left(gp, h), whisker_right(hp, f));
    if (h.anti) {
        R.lo = std::make_shared<const homotopy>(std::move(far));
        R.hi = std::make_shared<const homotopy>(std::move(near));
    } else {
        R.lo = std::make_shared<const homotopy>(std::move(near));
        R.hi = std::make_shared<const homotopy>(std::move(far));
    }
    return R;
}

/* ---- seeded single-draw sampling; positivity rejection returns absent ---- */

struct sampled_homotopy {
    morphism derived;   /* the forced lower endpoint */
    homotopy h;         /* derived -> g'∘f */
};

namespace detail {

inline std::optional<sampled_homotopy> sample_level1(const morphism& f, const morphism& gp,
                                                     std::uint64_t seed, bool anti) {
    if (f.target() != gp.source()) throw error("sampling needs composable morphisms");
    morphism base = compose_morphisms(gp, f);
    const complex& K = f.source();
    const complex& L = gp.target();
    rng r(seed);
    homotopy h;
    h.level = 1;
    h.anti = anti;
    h.src = f.source_ptr();
    h.dst = gp.target_ptr();
    for (const auto& x : K.all_generators()) {
        chain c(x.degree + 1);
        for (const auto& nm : L.basis_at(x.degree + 1)) {
            i64 v = r.below(6);
            if (v >= 4) c.add(nm, v - 3);
        }
        h.set_component(x.degree, x.name, c);
    }
    morphism derived(f.source_ptr(), gp.target_ptr());
    for (const auto& x : K.all_generators()) {
        chain dh = L.diff(h.component(x));
        chain hd = h.apply(K.diff_gen(x));
        chain img;
        if (anti) img = base.image_gen(x) - (dh - hd).scaled(x.degree % 2 == 0 ? 1 : -1);
        else img = base.image_gen(x) - dh - hd;
        if (!img.nonnegative()) return std::nullopt;
        derived.set_image(x.degree, x.name, img);
    }
    h.lo = std::make_shared<const homotopy>(from_morphism(derived));
    h.hi = std::make_shared<const homotopy>(from_morphism(base));
    return sampled_homotopy{std::move(derived), std::move(h)};
}

} // namespace detail

/* draw components for a level 1 anti family ending at g'∘f; the other
   endpoint is forced by the boundary relation and must come out positive */
inline std::optional<sampled_homotopy> random_antihomotopy(const morphism& f, const morphism& gp,
                                                           std::uint64_t seed) {
    return detail::sample_level1(f, gp, seed, true);
}

inline std::optional<sampled_homotopy> random_homotopy(const morphism& f, const morphism& gp,
                                                       std::uint64_t seed) {
    return detail::sample_level1(f, gp, seed, false);
}

struct sampled_homotopy2 {
    homotopy hi;   /* the forced upper endpoint */
    homotopy H;    /* lo -> hi, one level up */
};

/* draw a level 2 family out of a given level 1 family, same variance */
inline std::optional<sampled_homotopy2> random_step2(const homotopy& lo, std::uint64_t seed) {
    if (lo.level != 1) throw error("level 2 sampling starts from a level 1 family");
    const complex& K = *lo.src;
    const complex& L = *lo.dst;
    rng r(seed);
    homotopy H;
    H.level = 2;
    H.anti = lo.anti;
    H.src = lo.src;
    H.dst = lo.dst;
    for (const auto& x : K.all_generators()) {
        chain c(x.degree + 2);
        for (const auto& nm : L.basis_at(x.degree + 2)) {
            i64 v = r.below(6);
            if (v >= 4) c.add(nm, v - 3);
        }
        H.set_component(x.degree, x.name, c);
    }
    homotopy hi;
    hi.level = 1;
    hi.anti = lo.anti;
    hi.src = lo.src;
    hi.dst = lo.dst;
    hi.lo = lo.lo;
    hi.hi = lo.hi;
    for (const auto& x : K.all_generators()) {
        chain corr = L.diff(H.component(x)) - H.apply(K.diff_gen(x));
        if (lo.anti && x.degree % 2 == 1) corr = corr.scaled(-1);
        chain val = lo.component(x) + corr;
        if (!val.nonnegative()) return std::nullopt;
        hi.set_component(x.degree, x.name, val);
    }
    H.lo = std::make_shared<const homotopy>(lo);
    H.hi = std::make_shared<const homotopy>(hi);
    return sampled_homotopy2{std::move(hi), std::move(H)};
}

} // namespace adcat
