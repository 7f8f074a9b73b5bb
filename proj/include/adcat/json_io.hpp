#pragma once

#include <json.hpp>

#include "atoms.hpp"
#include "cells.hpp"
#include "homotopy.hpp"
#include "morphism.hpp"

namespace adcat {

using json = nlohmann::ordered_json;

/* Malformed input is its own failure class so the CLI can exit differently. */
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

inline json chain_to_json(const chain& c) {
    json o = json::object();
    for (const auto& [name, k] : c.coeffs()) o[name] = k;
    return o;
}

inline chain chain_from_json(const json& o, int degree) {
    if (!o.is_object()) throw parse_error("chain must be an object of integer coefficients");
    chain c(degree);
    for (const auto& [name, v] : o.items()) {
        if (!v.is_number_integer()) throw parse_error("coefficient of '" + name + "' is not an integer");
        c.add(name, v.get<i64>());
    }
    return c;
}

inline json complex_to_json(const complex& K) {
    json o = json::object();
    o["name"] = K.name();
    json basis = json::object();
    for (const auto& [deg, names] : K.basis()) {
        if (names.empty()) continue;
        basis[std::to_string(deg)] = names;
    }
    o["basis"] = basis;
    json d = json::object();
    for (const auto& [deg, names] : K.basis()) {
        if (deg == 0) continue;
        for (const auto& n : names) {
            chain v = K.diff_gen({n, deg});
            if (!v.is_zero()) d[n] = chain_to_json(v);
        }
    }
    if (!d.empty()) o["d"] = d;
    json aug = json::object();
    for (const auto& n : K.basis_at(0)) {
        i64 v = K.aug_gen(n);
        if (v != 0) aug[n] = v;
    }
    if (!aug.empty()) o["aug"] = aug;
    return o;
}

/* "d" and "aug" are keyed by bare generator names; a name used as a key must
   determine its generator uniquely across degrees. */
inline complex complex_from_json(const json& o) {
    if (!o.is_object()) throw parse_error("complex must be a JSON object");
    complex K;
    if (o.contains("name")) {
        if (!o.at("name").is_string()) throw parse_error("complex name must be a string");
        K.set_name(o.at("name").get<std::string>());
    }
    std::map<std::string, std::vector<int>> degrees_of;
    if (o.contains("basis")) {
        if (!o.at("basis").is_object()) throw parse_error("basis must be an object keyed by degree");
        for (const auto& [key, names] : o.at("basis").items()) {
            int deg;
            try {
                std::size_t used = 0;
                deg = std::stoi(key, &used);
                if (used != key.size() || deg < 0) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw parse_error("basis degree key is not a nonnegative integer: " + key);
            }
            if (!names.is_array()) throw parse_error("basis entry for degree " + key + " must be an array");
            for (const auto& n : names) {
                if (!n.is_string()) throw parse_error("generator names must be strings");
                try {
                    K.add_generator(deg, n.get<std::string>());
                } catch (const error& e) {
                    throw parse_error(e.what());
                }
                degrees_of[n.get<std::string>()].push_back(deg);
            }
        }
    }
    auto resolve = [&](const std::string& name, bool for_aug) -> int {
        auto it = degrees_of.find(name);
        if (it == degrees_of.end())
            throw parse_error("key '" + name + "' is not a basis generator");
        if (it->second.size() > 1)
            throw parse_error("key '" + name + "' is ambiguous: it names generators in several degrees");
        int deg = it->second.front();
        if (for_aug && deg != 0)
            throw parse_error("augmentation key '" + name + "' is not in degree 0");
        if (!for_aug && deg < 1)
            throw parse_error("differential key '" + name + "' is in degree 0");
        return deg;
    };
    if (o.contains("d")) {
        if (!o.at("d").is_object()) throw parse_error("d must be an object");
        for (const auto& [name, value] : o.at("d").items()) {
            int deg = resolve(name, false);
            K.set_diff(name, chain_from_json(value, deg - 1));
        }
    }
    if (o.contains("aug")) {
        if (!o.at("aug").is_object()) throw parse_error("aug must be an object");
        for (const auto& [name, value] : o.at("aug").items()) {
            resolve(name, true);
            if (!value.is_number_integer()) throw parse_error("augmentation of '" + name + "' is not an integer");
            K.set_aug(name, value.get<i64>());
        }
    }
    return K;
}

inline json morphism_to_json(const morphism& f) {
    json o = json::object();
    o["source"] = f.source().name();
    o["target"] = f.target().name();
    json maps = json::object();
    for (const auto& [deg, names] : f.source().basis())
        for (const auto& n : names) {
            chain v = f.image_gen({n, deg});
            if (!v.is_zero()) maps[n] = chain_to_json(v);
        }
    o["maps"] = maps;
    return o;
}

inline morphism morphism_from_json(const json& o,
                                   std::shared_ptr<const complex> source,
                                   std::shared_ptr<const complex> target) {
    if (!o.is_object()) throw parse_error("morphism must be a JSON object");
    morphism f(std::move(source), std::move(target));
    std::map<std::string, std::vector<int>> degrees_of;
    for (const auto& [deg, names] : f.source().basis())
        for (const auto& n : names) degrees_of[n].push_back(deg);
    if (o.contains("maps")) {
        if (!o.at("maps").is_object()) throw parse_error("maps must be an object");
        for (const auto& [name, value] : o.at("maps").items()) {
            auto it = degrees_of.find(name);
            if (it == degrees_of.end())
                throw parse_error("maps key '" + name + "' is not a source generator");
            if (it->second.size() > 1)
                throw parse_error("maps key '" + name + "' is ambiguous across degrees");
            int deg = it->second.front();
            f.set_image(deg, name, chain_from_json(value, deg));
        }
    }
    return f;
}

inline json atom_table_to_json(const atom_table& t) {
    json rows = json::array();
    for (const auto& row : t.rows)
        rows.push_back(json::array({chain_to_json(row[0]), chain_to_json(row[1])}));
    json o = json::object();
    o["element"] = chain_to_json(t.element);
    o["degree"] = t.degree();
    o["rows"] = rows;
    return o;
}

inline json cell_to_json(const cell& c) {
    json rows = json::array();
    for (const auto& row : c.rows)
        rows.push_back(json::array({chain_to_json(row[0]), chain_to_json(row[1])}));
    json o = json::object();
    o["dim"] = c.dim;
    o["rows"] = rows;
    return o;
}

/* components are keyed by bare generator names, like morphism maps */
inline json homotopy_to_json(const homotopy& h) {
    json comps = json::object();
    for (const auto& [deg, table] : h.comp)
        for (const auto& [name, value] : table) {
            if (comps.contains(name))
                throw error("component name '" + name + "' appears in several degrees");
            comps[name] = chain_to_json(value);
        }
    json o = json::object();
    o["components"] = comps;
    o["variance"] = h.anti ? "anti" : "homo";
    o["level"] = h.level;
    return o;
}

/* the raw family data of a homotopy file; endpoints come from context */
struct homotopy_file {
    int level = 1;
    bool anti = true;
    json components;
};

inline homotopy_file homotopy_file_from_json(const json& o) {
    if (!o.is_object()) throw parse_error("homotopy must be a JSON object");
    homotopy_file hf;
    if (!o.contains("variance") || !o.at("variance").is_string())
        throw parse_error("homotopy needs a string 'variance'");
    std::string v = o.at("variance").get<std::string>();
    if (v == "anti") hf.anti = true;
    else if (v == "homo") hf.anti = false;
    else throw parse_error("variance must be 'anti' or 'homo'");
    if (!o.contains("level") || !o.at("level").is_number_integer())
        throw parse_error("homotopy needs an integer 'level'");
    hf.level = o.at("level").get<int>();
    if (hf.level < 1) throw parse_error("homotopy level must be at least 1");
    hf.components = o.contains("components") ? o.at("components") : json::object();
    if (!hf.components.is_object()) throw parse_error("components must be an object");
    return hf;
}

inline homotopy build_homotopy(const homotopy_file& hf,
                               std::shared_ptr<const complex> src,
                               std::shared_ptr<const complex> dst,
                               std::shared_ptr<const homotopy> lo,
                               std::shared_ptr<const homotopy> hi) {
    homotopy h;
    h.level = hf.level;
    h.anti = hf.anti;
    h.src = std::move(src);
    h.dst = std::move(dst);
    h.lo = std::move(lo);
    h.hi = std::move(hi);
    std::map<std::string, std::vector<int>> degrees_of;
    for (const auto& g : h.src->all_generators()) degrees_of[g.name].push_back(g.degree);
    for (const auto& [name, value] : hf.components.items()) {
        auto it = degrees_of.find(name);
        if (it == degrees_of.end())
            throw parse_error("component key '" + name + "' is not a source generator");
        if (it->second.size() > 1)
            throw parse_error("component key '" + name + "' is ambiguous across degrees");
        int deg = it->second.front();
        h.set_component(deg, name, chain_from_json(value, deg + h.level));
    }
    return h;
}

inline json report_to_json(const report& r) {
    json arr = json::array();
    for (const auto& v : r.violations) {
        json o = json::object();
        o["check"] = v.check;
        o["ok"] = false;
        o["witness"] = json::array({v.witness});
        arr.push_back(o);
    }
    return arr;
}

} // namespace adcat
