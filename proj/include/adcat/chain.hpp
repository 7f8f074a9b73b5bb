#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "ints.hpp"

namespace adcat {

/* A generator is identified by name and degree; names are unique within a
   degree but may repeat across degrees. */
struct generator {
    std::string name;
    int degree = 0;

    friend bool operator==(const generator& a, const generator& b) {
        return a.degree == b.degree && a.name == b.name;
    }
    friend bool operator<(const generator& a, const generator& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.name < b.name;
    }
};

/* Homogeneous integer combination of same-degree generators.  The zero chain
   of any degree has an empty coefficient map; coefficients are never zero. */
class chain {
public:
    chain() = default;
    explicit chain(int degree) : degree_(degree) {}

    static chain unit(int degree, const std::string& name, i64 coeff = 1) {
        chain c(degree);
        c.add(name, coeff);
        return c;
    }

    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    /* a temporary hands the map over by value so range-fors stay safe */
    const std::map<std::string, i64>& coeffs() const& { return coeffs_; }
    std::map<std::string, i64> coeffs() && { return std::move(coeffs_); }

    i64 coeff(const std::string& name) const {
        auto it = coeffs_.find(name);
        return it == coeffs_.end() ? 0 : it->second;
    }

    void add(const std::string& name, i64 coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = coeffs_.emplace(name, coeff);
        if (!inserted) {
            it->second = checked_add(it->second, coeff);
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    void add(const chain& other, i64 scale = 1) {
        if (scale == 0) return;
        if (!other.is_zero() && other.degree_ != degree_)
            throw error("degree mismatch in chain addition");
        for (const auto& [name, c] : other.coeffs_) add(name, checked_mul(c, scale));
    }

    chain scaled(i64 scale) const {
        chain r(degree_);
        r.add(*this, scale);
        return r;
    }

    friend chain operator+(const chain& a, const chain& b) {
        chain r = a;
        if (r.is_zero() && !b.is_zero()) r.degree_ = b.degree_;
        r.add(b);
        return r;
    }

    friend chain operator-(const chain& a, const chain& b) {
        chain r = a;
        if (r.is_zero() && !b.is_zero()) r.degree_ = b.degree_;
        r.add(b, -1);
        return r;
    }

    friend bool operator==(const chain& a, const chain& b) {
        /* zero chains of different recorded degrees compare equal */
        if (a.coeffs_.empty() && b.coeffs_.empty()) return true;
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const chain& a, const chain& b) { return !(a == b); }
    friend bool operator<(const chain& a, const chain& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
        return a.coeffs_ < b.coeffs_;
    }

    bool nonnegative() const {
        for (const auto& [name, c] : coeffs_)
            if (c < 0) return false;
        return true;
    }

    std::set<generator> support() const {
        std::set<generator> s;
        for (const auto& [name, c] : coeffs_) s.insert({name, degree_});
        return s;
    }

    /* x = positive_part - negative_part with disjoint supports */
    chain positive_part() const {
        chain r(degree_);
        for (const auto& [name, c] : coeffs_)
            if (c > 0) r.add(name, c);
        return r;
    }

    chain negative_part() const {
        chain r(degree_);
        for (const auto& [name, c] : coeffs_)
            if (c < 0) r.add(name, checked_neg(c));
        return r;
    }

private:
    int degree_ = 0;
    std::map<std::string, i64> coeffs_;
};

inline std::string chain_to_string(const chain& c) {
    if (c.is_zero()) return "0";
    std::string s;
    for (const auto& [name, k] : c.coeffs()) {
        if (!s.empty()) s += k < 0 ? " - " : " + ";
        else if (k < 0) s += "-";
        i64 a = k < 0 ? -k : k;
        if (a != 1) s += std::to_string(a) + "*";
        s += name;
    }
    return s;
}

} // namespace adcat
