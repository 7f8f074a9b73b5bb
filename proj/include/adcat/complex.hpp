#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chain.hpp"

namespace adcat {

/* One violated identity; a check report is a list of these. */
struct violation {
    std::string check;
    std::string witness;
};

struct report {
    std::vector<violation> violations;
    bool ok() const { return violations.empty(); }
};

/* Augmented directed complex with distinguished basis.  The positivity
   submonoid in each degree is the one generated by the basis, so membership
   is coefficientwise nonnegativity.  Differentials and augmentations absent
   from the tables are zero. */
class complex {
public:
    complex() = default;
    explicit complex(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    void add_generator(int degree, const std::string& name) {
        if (degree < 0) throw error("generator degree must be nonnegative: " + name);
        auto& names = basis_[degree];
        auto it = std::lower_bound(names.begin(), names.end(), name);
        if (it != names.end() && *it == name)
            throw error("duplicate generator in degree " + std::to_string(degree) + ": " + name);
        names.insert(it, name);
    }

    void set_diff(const std::string& name, chain value) {
        if (value.is_zero()) return;
        auto it = diff_.find(name);
        if (it != diff_.end() && it->second.degree() != value.degree())
            throw error("generator name carries two differentials across degrees: " + name);
        diff_[name] = std::move(value);
    }

    void set_aug(const std::string& name, i64 value) {
        if (value != 0) aug_[name] = value;
    }

    bool has_generator(int degree, const std::string& name) const {
        auto it = basis_.find(degree);
        if (it == basis_.end()) return false;
        return std::binary_search(it->second.begin(), it->second.end(), name);
    }

    const std::map<int, std::vector<std::string>>& basis() const { return basis_; }

    const std::vector<std::string>& basis_at(int degree) const {
        static const std::vector<std::string> none;
        auto it = basis_.find(degree);
        return it == basis_.end() ? none : it->second;
    }

    std::vector<generator> all_generators() const {
        std::vector<generator> out;
        for (const auto& [deg, names] : basis_)
            for (const auto& n : names) out.push_back({n, deg});
        return out;
    }

    std::size_t basis_size() const {
        std::size_t n = 0;
        for (const auto& [deg, names] : basis_) n += names.size();
        return n;
    }

    int max_degree() const {
        int m = -1;
        for (const auto& [deg, names] : basis_)
            if (!names.empty()) m = std::max(m, deg);
        return m;
    }

    chain diff_gen(const generator& g) const {
        if (g.degree == 0) return chain(0);
        auto it = diff_.find(g.name);
        /* an entry of the wrong degree belongs to a name-sharing generator */
        if (it == diff_.end() || it->second.degree() != g.degree - 1) return chain(g.degree - 1);
        return it->second;
    }

    /* raw table access, used for validation and serialization */
    const std::map<std::string, chain>& diff_table() const { return diff_; }
    const std::map<std::string, i64>& aug_table() const { return aug_; }

    chain diff(const chain& x) const {
        chain r(x.degree() > 0 ? x.degree() - 1 : 0);
        if (x.degree() == 0) return r;
        for (const auto& [name, c] : x.coeffs())
            r.add(diff_gen({name, x.degree()}), c);
        return r;
    }

    i64 aug_gen(const std::string& name) const {
        auto it = aug_.find(name);
        return it == aug_.end() ? 0 : it->second;
    }

    i64 aug(const chain& x) const {
        if (x.degree() != 0) throw error("augmentation applies to degree 0 chains");
        i64 r = 0;
        for (const auto& [name, c] : x.coeffs())
            r = checked_add(r, checked_mul(c, aug_gen(name)));
        return r;
    }

    /* augmentation extended by zero to positive degrees */
    i64 aug_extended(const chain& x) const {
        return x.degree() == 0 ? aug(x) : 0;
    }

    bool supported_on_basis(const chain& x) const {
        for (const auto& [name, c] : x.coeffs())
            if (!has_generator(x.degree(), name)) return false;
        return true;
    }

    friend bool operator==(const complex& a, const complex& b) {
        return a.basis_ == b.basis_ && a.diff_ == b.diff_ && a.aug_ == b.aug_;
    }
    friend bool operator!=(const complex& a, const complex& b) { return !(a == b); }

private:
    std::string name_;
    std::map<int, std::vector<std::string>> basis_;
    std::map<std::string, chain> diff_;   /* keyed by name; degree recovered from the chain */
    std::map<std::string, i64> aug_;
};

/* Every structural identity is checked and every violation reported; an
   empty report is the definition of validity. */
inline report validate_complex(const complex& K) {
    report r;
    std::map<std::string, std::vector<int>> degrees_of;
    for (const auto& [deg, names] : K.basis())
        for (const auto& n : names) degrees_of[n].push_back(deg);

    for (const auto& [name, value] : K.diff_table()) {
        auto it = degrees_of.find(name);
        int expect = value.degree() + 1;
        if (it == degrees_of.end() ||
            std::find(it->second.begin(), it->second.end(), expect) == it->second.end()) {
            r.violations.push_back({"differential key is not a basis generator of the right degree", name});
            continue;
        }
        if (!K.supported_on_basis(value))
            r.violations.push_back({"differential value leaves the basis", name});
    }
    for (const auto& [name, value] : K.aug_table()) {
        auto it = degrees_of.find(name);
        if (it == degrees_of.end() ||
            std::find(it->second.begin(), it->second.end(), 0) == it->second.end())
            r.violations.push_back({"augmentation key is not a degree 0 generator", name});
    }

    for (const auto& [deg, names] : K.basis()) {
        for (const auto& n : names) {
            generator g{n, deg};
            if (deg >= 2) {
                chain dd = K.diff(K.diff_gen(g));
                if (!dd.is_zero())
                    r.violations.push_back({"d(d(x)) != 0", n + " -> " + chain_to_string(dd)});
            }
            if (deg == 1) {
                i64 ed = K.aug(K.diff_gen(g));
                if (ed != 0)
                    r.violations.push_back({"e(d(x)) != 0", n + " -> " + std::to_string(ed)});
            }
        }
    }
    return r;
}

/* decent: every degree 0 basis element has nonnegative augmentation */
inline bool is_decent(const complex& K) {
    for (const auto& n : K.basis_at(0))
        if (K.aug_gen(n) < 0) return false;
    return true;
}

inline generator require_generator(const complex& K, int degree, const std::string& name) {
    if (!K.has_generator(degree, name))
        throw error("no generator '" + name + "' in degree " + std::to_string(degree) +
                    " of complex '" + K.name() + "'");
    return {name, degree};
}

} // namespace adcat
