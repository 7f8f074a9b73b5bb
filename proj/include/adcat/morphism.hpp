#pragma once

#include <memory>

#include "complex.hpp"

namespace adcat {

/* Morphism of augmented directed complexes.  Generator images absent from
   the table are zero.  Complexes are shared immutably. */
class morphism {
public:
    morphism() = default;

    morphism(std::shared_ptr<const complex> source, std::shared_ptr<const complex> target)
        : source_(std::move(source)), target_(std::move(target)) {}

    static morphism identity(std::shared_ptr<const complex> K) {
        morphism f(K, K);
        for (const auto& [deg, names] : K->basis())
            for (const auto& n : names) f.set_image(deg, n, chain::unit(deg, n));
        return f;
    }

    const complex& source() const { return *source_; }
    const complex& target() const { return *target_; }
    const std::shared_ptr<const complex>& source_ptr() const { return source_; }
    const std::shared_ptr<const complex>& target_ptr() const { return target_; }

    void set_image(int degree, const std::string& name, chain value) {
        if (value.is_zero()) {
            auto it = maps_.find(degree);
            if (it != maps_.end()) {
                it->second.erase(name);
                if (it->second.empty()) maps_.erase(it);
            }
        } else {
            maps_[degree][name] = std::move(value);
        }
    }

    chain image_gen(const generator& g) const {
        auto it = maps_.find(g.degree);
        if (it != maps_.end()) {
            auto jt = it->second.find(g.name);
            if (jt != it->second.end()) return jt->second;
        }
        return chain(g.degree);
    }

    chain apply(const chain& x) const {
        chain r(x.degree());
        for (const auto& [name, c] : x.coeffs())
            r.add(image_gen({name, x.degree()}), c);
        return r;
    }

    const std::map<int, std::map<std::string, chain>>& maps() const { return maps_; }

    friend bool operator==(const morphism& a, const morphism& b) {
        return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.maps_ == b.maps_;
    }
    friend bool operator!=(const morphism& a, const morphism& b) { return !(a == b); }

private:
    std::shared_ptr<const complex> source_, target_;
    std::map<int, std::map<std::string, chain>> maps_;
};

inline report validate_morphism(const morphism& f) {
    report r;
    const complex& K = f.source();
    const complex& L = f.target();
    for (const auto& [deg, table] : f.maps())
        for (const auto& [name, value] : table) {
            if (!K.has_generator(deg, name))
                r.violations.push_back({"image key is not a source generator", name});
            else if (!value.is_zero() && (value.degree() != deg || !L.supported_on_basis(value)))
                r.violations.push_back({"image is not a target chain of matching degree", name});
        }
    for (const auto& [deg, names] : K.basis())
        for (const auto& n : names) {
            generator g{n, deg};
            chain img = f.image_gen(g);
            if (!img.nonnegative())
                r.violations.push_back({"image of a basis element is not positive", n});
            if (deg >= 1) {
                chain lhs = L.diff(img);
                chain rhs = f.apply(K.diff_gen(g));
                if (lhs != rhs)
                    r.violations.push_back({"f(d(x)) != d(f(x))", n});
            } else if (L.aug(img) != K.aug_gen(n)) {
                r.violations.push_back({"e(f(x)) != e(x)", n});
            }
        }
    return r;
}

inline morphism compose_morphisms(const morphism& g, const morphism& f) {
    if (f.target() != g.source())
        throw error("morphism composition mismatch: target of first != source of second");
    morphism r(f.source_ptr(), g.target_ptr());
    for (const auto& [deg, table] : f.maps())
        for (const auto& [name, value] : table)
            r.set_image(deg, name, g.apply(value));
    return r;
}

inline std::shared_ptr<const complex> share(complex K) {
    return std::make_shared<const complex>(std::move(K));
}

} // namespace adcat
