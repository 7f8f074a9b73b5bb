#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "acceptance.hpp"
#include "json_io.hpp"
#include "omega_slice.hpp"
#include "slice.hpp"

namespace adcat {

namespace cli_detail {

/* Named complexes loaded so far; morphism files refer to them by name.
   Standard input may back at most one "-" argument per run. */
struct session {
    std::istream* in = nullptr;
    bool stdin_used = false;
    std::map<std::string, std::shared_ptr<const complex>> complexes;

    json read_json(const std::string& path) {
        std::string text;
        if (path == "-") {
            if (stdin_used) throw parse_error("standard input can back only one argument");
            stdin_used = true;
            std::ostringstream buf;
            buf << in->rdbuf();
            text = buf.str();
        } else {
            std::ifstream f(path);
            if (!f) throw parse_error("cannot read file: " + path);
            std::ostringstream buf;
            buf << f.rdbuf();
            text = buf.str();
        }
        try {
            return json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw parse_error(path + ": " + e.what());
        }
    }

    std::shared_ptr<const complex> register_complex(complex K) {
        std::string name = K.name();
        auto it = complexes.find(name);
        if (it != complexes.end()) {
            if (!(*it->second == K))
                throw error("two different complexes are both named '" + name + "'");
            return it->second;
        }
        auto p = share(std::move(K));
        complexes.emplace(name, p);
        return p;
    }

    std::shared_ptr<const complex> load_complex(const std::string& path) {
        json o = read_json(path);
        if (o.is_object() && (o.contains("maps") || o.contains("components")))
            throw error(path + ": expected a complex, not a morphism or homotopy");
        return register_complex(complex_from_json(o));
    }

    std::shared_ptr<const complex> resolve(const std::string& name) {
        auto it = complexes.find(name);
        if (it == complexes.end()) throw error("no loaded complex is named '" + name + "'");
        return it->second;
    }

    morphism load_morphism(const std::string& path) {
        json o = read_json(path);
        if (!o.is_object() || o.contains("basis") || o.contains("components") ||
            !o.contains("source") || !o.contains("target"))
            throw error(path + ": expected a morphism with 'source' and 'target' names");
        if (!o.at("source").is_string() || !o.at("target").is_string())
            throw parse_error(path + ": morphism source and target must be complex names");
        auto src = resolve(o.at("source").get<std::string>());
        auto tgt = resolve(o.at("target").get<std::string>());
        return morphism_from_json(o, src, tgt);
    }

    homotopy_file load_homotopy(const std::string& path) {
        json o = read_json(path);
        if (o.is_object() && (o.contains("basis") || o.contains("maps")))
            throw error(path + ": expected a homotopy family, not a complex or morphism");
        return homotopy_file_from_json(o);
    }
};

inline json names_json(const std::vector<generator>& gens) {
    json a = json::array();
    for (const auto& g : gens) a.push_back(g.name);
    return a;
}

inline json steiner_to_json(const steiner_check& c) {
    json o = json::object();
    o["unitary"] = c.unitary.ok();
    o["loop_free"] = c.loop_free;
    o["strongly_loop_free"] = c.strongly_loop_free;
    o["steiner"] = c.is_steiner();
    o["strong_steiner"] = c.is_strong_steiner();
    o["violations"] = report_to_json(c.unitary);
    if (c.loop_witness && c.loop_witness->cycle_witness)
        o["loop_witness"] = names_json(*c.loop_witness->cycle_witness);
    if (c.strong_witness && c.strong_witness->cycle_witness)
        o["strong_witness"] = names_json(*c.strong_witness->cycle_witness);
    if (c.natural_order) o["natural_order"] = names_json(*c.natural_order);
    return o;
}

inline json slice_element_to_json(const slice_element& u) {
    json comps = json::array();
    for (const auto& [j, table] : u.maps)
        for (const auto& [n, c] : table) {
            json e = json::object();
            e["generator"] = n;
            e["degree"] = j;
            e["value"] = chain_to_json(c);
            comps.push_back(e);
        }
    json o = json::object();
    o["degree"] = u.degree;
    o["base"] = chain_to_json(u.base);
    o["components"] = comps;
    return o;
}

inline json slice_cell_to_json(const slice_cell& S) {
    json alpha = json::array();
    for (const auto& pair : S.alpha)
        alpha.push_back(json::array({cell_to_json(pair[0]), cell_to_json(pair[1])}));
    json o = json::object();
    o["dim"] = S.dim;
    o["c"] = cell_to_json(S.c);
    o["d"] = cell_to_json(S.d);
    o["alpha"] = alpha;
    return o;
}

inline json cylinder_cell_to_json(const cylinder_cell& C) {
    json alpha = json::array();
    for (const auto& pair : C.alpha)
        alpha.push_back(json::array({cell_to_json(pair[0]), cell_to_json(pair[1])}));
    json o = json::object();
    o["dim"] = C.dim;
    o["c"] = cell_to_json(C.c);
    o["d"] = cell_to_json(C.d);
    o["alpha"] = alpha;
    return o;
}

inline i64 cap_from_env() {
    const char* e = std::getenv("ADCAT_CAP");
    if (!e) return 3;
    std::string s = e;
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size() || v < 0) throw std::invalid_argument(s);
        return static_cast<i64>(v);
    } catch (const std::exception&) {
        throw error("ADCAT_CAP must be a nonnegative integer, got '" + s + "'");
    }
}

inline std::set<int> parse_dual_degrees(const std::string& text, const complex& K) {
    if (text == "op") return detail::degree_set(K, -1);
    if (text == "opp") return detail::degree_set(K, 1);
    if (text == "co") return detail::degree_set(K, 0);
    std::set<int> J;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(cur, &used);
            if (used != cur.size() || v <= 0) throw std::invalid_argument(cur);
            J.insert(v);
        } catch (const std::exception&) {
            throw error("dual degrees must be op, opp, co, or comma-separated positive integers");
        }
    }
    if (J.empty()) throw error("dual degrees must be op, opp, co, or comma-separated positive integers");
    return J;
}

inline globular_signature parse_theta_signature(const std::string& text) {
    std::vector<int> nums;
    std::string cur;
    for (char ch : text + " ") {
        if (ch == ' ' || ch == ',' || ch == ';') {
            if (cur.empty()) continue;
            try {
                std::size_t used = 0;
                int v = std::stoi(cur, &used);
                if (used != cur.size()) throw std::invalid_argument(cur);
                nums.push_back(v);
            } catch (const std::exception&) {
                throw error("globular signature entries must be integers");
            }
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (nums.empty() || nums.size() % 2 == 0)
        throw error("a globular signature alternates i1 j1 i2 ... ik and has odd length");
    globular_signature sig;
    for (std::size_t p = 0; p < nums.size(); ++p)
        (p % 2 == 0 ? sig.dims : sig.glue).push_back(nums[p]);
    return sig;
}

inline generator object_generator(const std::shared_ptr<const complex>& Kp, const std::string& name) {
    if (!Kp->has_generator(0, name))
        throw error("'" + name + "' is not a degree 0 generator of " + Kp->name());
    return {name, 0};
}

} // namespace cli_detail

/* Entry point shared by the binary and the tests.  Exit codes: 0 success,
   1 failure with {"error": ...}, 2 unreadable or malformed input. */
inline int cli_run(std::vector<std::string> args, std::istream& in, std::ostream& out) {
    using cli_detail::session;
    session s;
    s.in = &in;

    json doc;
    bool have_doc = false;
    int code = 0;

    CLI::App app{"calculator for augmented directed complexes"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int trials = 25;
    i64 cap = cli_detail::cap_from_env();
    int max_dim = 2;
    std::vector<std::string> preload;
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--trials", trials, "instance count for randomized checks");
    app.add_option("--cap", cap, "coefficient cap for enumerations (env ADCAT_CAP)");
    app.add_option("--max-dim", max_dim, "largest degree reported by slice operations");
    app.add_option("--load", preload, "extra complex files to load into the workspace");

    auto sub = [&](const std::string& name, const std::string& desc) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->fallthrough();
        return c;
    };
    auto emit = [&](json j) {
        doc = std::move(j);
        have_doc = true;
    };
    auto load_preloads = [&]() {
        for (const auto& p : preload) s.load_complex(p);
    };

    std::string a_file, b_file, gen_name, dual_set, theta_sig, object_name;
    std::string f_file, g_file, gp_file, h_file, k_file, H_file, fp_file, hlo_file, hhi_file;
    int level = 0, dim = 0;
    bool bete = false;
    std::string slice_object;
    bool cylinder = false;
    bool enumerate_counts = false;

    CLI::App* c_validate = sub("validate", "check a complex or morphism file and report violations");
    c_validate->add_option("file", a_file, "complex or morphism JSON")->required();

    CLI::App* c_info = sub("info", "basis sizes and decency of a complex");
    c_info->add_option("file", a_file, "complex JSON")->required();

    CLI::App* c_atoms = sub("atoms", "atom tables of one or all generators");
    c_atoms->add_option("file", a_file, "complex JSON")->required();
    c_atoms->add_option("generator", gen_name, "restrict to one generator name");

    CLI::App* c_steiner = sub("check-steiner", "unitarity and loop-freeness report");
    c_steiner->add_option("file", a_file, "complex JSON")->required();

    CLI::App* c_rigid = sub("check-rigid", "prerigidity and rigidity of a morphism");
    c_rigid->add_option("file", f_file, "morphism JSON")->required();

    CLI::App* c_join = sub("join", "join of two complexes");
    c_join->add_option("left", a_file, "complex JSON")->required();
    c_join->add_option("right", b_file, "complex JSON")->required();

    CLI::App* c_tensor = sub("tensor", "tensor product of two complexes");
    c_tensor->add_option("left", a_file, "complex JSON")->required();
    c_tensor->add_option("right", b_file, "complex JSON")->required();

    CLI::App* c_dual = sub("dual", "dual with signs flipped in the chosen degrees");
    c_dual->add_option("file", a_file, "complex JSON")->required();
    c_dual->add_option("degrees", dual_set, "op, opp, co, or a comma list like 1,3")->required();

    CLI::App* c_trunc = sub("trunc", "truncation at a level");
    c_trunc->add_option("file", a_file, "complex JSON")->required();
    c_trunc->add_option("level", level, "truncation level")->required();
    c_trunc->add_flag("--bete", bete, "keep degree n as is instead of quotienting");

    CLI::App* c_disk = sub("disk", "the i-disk complex");
    c_disk->add_option("i", dim, "dimension")->required();

    CLI::App* c_simplex = sub("simplex", "chains of the m-simplex");
    c_simplex->add_option("m", dim, "dimension")->required();

    CLI::App* c_theta = sub("theta", "globular sum for a signature");
    c_theta->add_option("signature", theta_sig, "alternating list i1 j1 i2 ... ik")->required();

    CLI::App* c_pushout = sub("pushout", "amalgamation along two ordered rigid inclusions");
    c_pushout->add_option("left", f_file, "morphism JSON")->required();
    c_pushout->add_option("right", g_file, "morphism JSON")->required();

    CLI::App* c_slice = sub("slice", "the slice complex of a morphism into M");
    c_slice->add_option("ambient", a_file, "complex JSON for M")->required();
    c_slice->add_option("over", g_file, "morphism JSON landing in M")->required();
    c_slice->add_flag("--enumerate", enumerate_counts, "count positive elements up to the cap");

    CLI::App* c_coslice = sub("coslice", "the coslice complex of a morphism into M");
    c_coslice->add_option("ambient", a_file, "complex JSON for M")->required();
    c_coslice->add_option("over", g_file, "morphism JSON landing in M")->required();
    c_coslice->add_flag("--enumerate", enumerate_counts, "count positive elements up to the cap");

    CLI::App* c_pullback = sub("pullback", "slice pullback along a triangle up to an antihomotopy");
    c_pullback->add_option("f", f_file, "morphism JSON, the index map")->required();
    c_pullback->add_option("homotopy", h_file, "level 1 antihomotopy components")->required();
    c_pullback->add_option("g", g_file, "morphism JSON, the lower leg")->required();
    c_pullback->add_option("gp", gp_file, "morphism JSON, the upper leg")->required();

    CLI::App* c_cone = sub("cone", "homotopy between slice pullbacks from a cone");
    c_cone->add_option("k", k_file, "level 1 antihomotopy components")->required();
    c_cone->add_option("H", H_file, "level 2 antihomotopy components")->required();
    c_cone->add_option("f", f_file, "morphism JSON, lower index map")->required();
    c_cone->add_option("fp", fp_file, "morphism JSON, upper index map")->required();
    c_cone->add_option("g", g_file, "morphism JSON, the lower leg")->required();
    c_cone->add_option("gp", gp_file, "morphism JSON, the upper leg")->required();
    c_cone->add_option("hlow", hlo_file, "level 1 components of the lower face of H")->required();
    c_cone->add_option("hhigh", hhi_file, "level 1 components of the upper face of H")->required();

    CLI::App* c_nerve = sub("nerve", "bounded nerve: simplex images in a complex");
    c_nerve->add_option("file", a_file, "complex JSON")->required();
    c_nerve->add_option("n", dim, "simplicial degree")->required();

    CLI::App* c_cells = sub("cells", "cells of the complex, its slices, or its cylinder");
    c_cells->add_option("file", a_file, "complex JSON")->required();
    c_cells->add_option("dim", dim, "cell dimension")->required();
    c_cells->add_option("--slice", slice_object, "slice cells over this degree 0 generator");
    c_cells->add_flag("--cylinder", cylinder, "cylinder cells instead of plain cells");

    CLI::App* c_crosscheck = sub("crosscheck", "slice cells against the slice complex");
    c_crosscheck->add_option("file", a_file, "complex JSON")->required();
    c_crosscheck->add_option("object", object_name, "degree 0 generator name")->required();

    CLI::App* c_acceptance = sub("acceptance", "run the full acceptance suite");

    c_validate->callback([&] {
        load_preloads();
        json o = s.read_json(a_file);
        report r;
        if (o.is_object() && o.contains("basis")) {
            r = validate_complex(complex_from_json(o));
        } else if (o.is_object() && o.contains("source") && o.contains("target")) {
            auto src = s.resolve(o.at("source").get<std::string>());
            auto tgt = s.resolve(o.at("target").get<std::string>());
            r = validate_morphism(morphism_from_json(o, src, tgt));
        } else if (o.is_object() && (o.contains("components") || o.contains("variance"))) {
            throw error("a homotopy family cannot be validated without its endpoints");
        } else {
            throw parse_error(a_file + ": cannot classify the JSON input");
        }
        json j = json::object();
        j["ok"] = r.ok();
        j["violations"] = report_to_json(r);
        emit(std::move(j));
    });

    c_info->callback([&] {
        load_preloads();
        auto Kp = s.load_complex(a_file);
        json sizes = json::array();
        for (int d = 0; d <= Kp->max_degree(); ++d) sizes.push_back(Kp->basis_at(d).size());
        json j = json::object();
        j["name"] = Kp->name();
        j["basis_sizes"] = sizes;
        j["decent"] = is_decent(*Kp);
        emit(std::move(j));
    });

    c_atoms->callback([&] {
        load_preloads();
        auto Kp = s.load_complex(a_file);
        std::vector<generator> gens;
        if (gen_name.empty()) {
            gens = Kp->all_generators();
        } else {
            for (const auto& g : Kp->all_generators())
                if (g.name == gen_name) gens.push_back(g);
            if (gens.empty()) throw error("no generator is named '" + gen_name + "'");
            if (gens.size() > 1) throw error("'" + gen_name + "' names generators in several degrees");
        }
        json arr = json::array();
        for (const auto& g : gens) {
            json e = json::object();
            e["generator"] = g.name;
            e["degree"] = g.degree;
            e["table"] = atom_table_to_json(make_atom_table(*Kp, g));
            arr.push_back(std::move(e));
        }
        emit(std::move(arr));
    });

    c_steiner->callback([&] {
        load_preloads();
        auto Kp = s.load_complex(a_file);
        emit(cli_detail::steiner_to_json(check_steiner(*Kp)));
    });

    c_rigid->callback([&] {
        load_preloads();
        morphism f = s.load_morphism(f_file);
        report pre = is_prerigid(f);
        report rig = is_rigid(f);
        json j = json::object();
        j["prerigid"] = pre.ok();
        j["prerigid_violations"] = report_to_json(pre);
        j["rigid"] = rig.ok();
        j["rigid_violations"] = report_to_json(rig);
        j["monomorphism"] = is_monomorphism(f);
        emit(std::move(j));
    });

    c_join->callback([&] {
        load_preloads();
        auto Kp = s.load_complex(a_file);
        auto Lp = s.load_complex(b_file);
        emit(complex_to_json(join_complex(*Kp, *Lp)));
    });

    c_tensor->callback([&] {
        load_preloads();
        auto Kp = s.load_complex(a_file);
        auto Lp = s.load_complex(b_file);
        emit(complex_to_json(tensor_complex(*Kp, *Lp)));
    });

    c_dual->callback([&] {
        load_preloads();
        auto Kp = s.load_complex(a_file);
        if (dual_set == "op") emit(complex_to_json(op_dual(*Kp)));
        else if (dual_set == "opp") emit(complex_to_json(opp_dual(*Kp)));
        else if (dual_set == "co") emit(complex_to_json(co_dual(*Kp)));
        else emit(complex_to_json(dual(*Kp, cli_detail::parse_dual_degrees(dual_set, *Kp))));
    });

    c_trunc->callback([&] {
        load_preloads();
        auto Kp = s.load_complex(a_file);
        emit(complex_to_json(bete ? truncate_bete(*Kp, level) : truncate_intelligent(*Kp, level)));
    });

    c_disk->callback([&] { emit(complex_to_json(disk_complex(dim))); });
    c_simplex->callback([&] { emit(complex_to_json(simplex_complex(dim))); });
    c_theta->callback([&] {
        emit(complex_to_json(globular_sum(cli_detail::parse_theta_signature(theta_sig))));
    });

    c_pushout->callback([&] {
        load_preloads();
        morphism f = s.load_morphism(f_file);
        morphism g = s.load_morphism(g_file);
        pushout_steiner_report r = check_pushout_steiner(f, g);
        json j = json::object();
        j["ok"] = r.ok();
        j["preconditions"] = report_to_json(r.preconditions);
        if (r.preconditions.ok()) {
            j["pushout"] = complex_to_json(*r.pushout.object);
            j["strongly_loop_free"] = r.pushout_strongly_loop_free;
            j["left_leg"] = report_to_json(r.left_leg);
            j["right_leg"] = report_to_json(r.right_leg);
        } else {
            j["pushout"] = nullptr;
        }
        emit(std::move(j));
    });

    auto slice_payload = [&](bool coslice) {
        load_preloads();
        auto Mp = s.load_complex(a_file);
        morphism g = s.load_morphism(g_file);
        if (!(g.target() == *Mp))
            throw error("the morphism does not land in " + Mp->name());
        json j = json::object();
        j["kind"] = coslice ? "coslice" : "slice";
        j["index"] = g.source().name();
        j["ambient"] = Mp->name();
        std::optional<slice_complex> S;
        std::optional<coslice_complex> C;
        if (coslice) C.emplace(g);
        else S.emplace(g);
        const slice_complex& inner = coslice ? C->inner() : *S;
        auto take_diff = [&](const slice_element& u) {
            return coslice ? C->diff(u) : S->diff(u);
        };
        json ranks = json::array();
        report troubles;
        int checked = 0;
        for (int d = 0; d <= max_dim; ++d) {
            std::vector<slice_element> elems = inner.elementary(d);
            ranks.push_back(elems.size());
            for (std::size_t ix = 0; ix < elems.size(); ++ix) {
                std::string where = "degree " + std::to_string(d) + " element " + std::to_string(ix);
                if (d >= 1) {
                    report v = inner.validate(elems[ix]);
                    for (const auto& viol : v.violations)
                        troubles.violations.push_back({viol.check, where});
                    ++checked;
                }
                if (d >= 2 && !take_diff(take_diff(elems[ix])).is_zero())
                    troubles.violations.push_back({"d^2 is nonzero", where});
            }
        }
        j["ranks"] = ranks;
        if (enumerate_counts) {
            json counts = json::array();
            for (int d = 0; d <= max_dim; ++d)
                counts.push_back(coslice ? C->inner().enumerate_positive(d, cap).size()
                                         : S->enumerate_positive(d, cap).size());
            j["positive_counts"] = counts;
        }
        j["elements_checked"] = checked;
        j["ok"] = troubles.ok();
        j["violations"] = report_to_json(troubles);
        emit(std::move(j));
    };
    c_slice->callback([&] { slice_payload(false); });
    c_coslice->callback([&] { slice_payload(true); });

    auto matrices_payload = [&](const slice_complex& src, int raise,
                                const std::function<slice_element(const slice_element&)>& op) {
        json mats = json::array();
        for (int d = 0; d <= max_dim; ++d) {
            json cols = json::array();
            for (const auto& u : src.elementary(d)) {
                json e = json::object();
                e["slot"] = cli_detail::slice_element_to_json(u);
                e["image"] = cli_detail::slice_element_to_json(op(u));
                cols.push_back(std::move(e));
            }
            json entry = json::object();
            entry["degree"] = d;
            entry["image_degree"] = d + raise;
            entry["columns"] = std::move(cols);
            mats.push_back(std::move(entry));
        }
        return mats;
    };

    c_pullback->callback([&] {
        load_preloads();
        morphism f = s.load_morphism(f_file);
        morphism g = s.load_morphism(g_file);
        morphism gp = s.load_morphism(gp_file);
        homotopy_file hf = s.load_homotopy(h_file);
        auto lo = std::make_shared<const homotopy>(from_morphism(g));
        auto hi = std::make_shared<const homotopy>(from_morphism(compose_morphisms(gp, f)));
        homotopy h = build_homotopy(hf, g.source_ptr(), g.target_ptr(), lo, hi);
        slice_pullback P = triangle_pullback(f, h, g, gp);
        json j = json::object();
        j["operator"] = "pullback";
        j["from"] = gp.source().name();
        j["to"] = g.source().name();
        j["ambient"] = g.target().name();
        json pre = json::object();
        pre["decent_ambient"] = true;
        pre["level_1_antihomotopy"] = true;
        pre["valid_antihomotopy"] = true;
        pre["endpoints_match"] = true;
        j["preconditions"] = pre;
        j["matrices"] = matrices_payload(P.src, 0, [&](const slice_element& u) { return P.apply(u); });
        emit(std::move(j));
    });

    c_cone->callback([&] {
        load_preloads();
        morphism f = s.load_morphism(f_file);
        morphism fp = s.load_morphism(fp_file);
        morphism g = s.load_morphism(g_file);
        morphism gp = s.load_morphism(gp_file);
        homotopy_file kf = s.load_homotopy(k_file);
        homotopy_file Hf = s.load_homotopy(H_file);
        homotopy_file lof = s.load_homotopy(hlo_file);
        homotopy_file hif = s.load_homotopy(hhi_file);
        homotopy k = build_homotopy(kf, f.source_ptr(), f.target_ptr(),
                                    std::make_shared<const homotopy>(from_morphism(f)),
                                    std::make_shared<const homotopy>(from_morphism(fp)));
        auto face_lo = std::make_shared<const homotopy>(from_morphism(g));
        auto face_hi =
            std::make_shared<const homotopy>(from_morphism(compose_morphisms(gp, fp)));
        auto hlo = std::make_shared<const homotopy>(
            build_homotopy(lof, g.source_ptr(), g.target_ptr(), face_lo, face_hi));
        auto hhi = std::make_shared<const homotopy>(
            build_homotopy(hif, g.source_ptr(), g.target_ptr(), face_lo, face_hi));
        homotopy H = build_homotopy(Hf, g.source_ptr(), g.target_ptr(), hlo, hhi);
        slice_cone K = cone_homotopy(k, H, g, gp);
        json j = json::object();
        j["operator"] = "cone";
        j["from"] = gp.source().name();
        j["to"] = g.source().name();
        j["ambient"] = g.target().name();
        json pre = json::object();
        pre["decent_ambient"] = true;
        pre["level_1_antihomotopy"] = true;
        pre["level_2_antihomotopy"] = true;
        pre["valid_families"] = true;
        pre["endpoints_match"] = true;
        pre["positive_lower_face"] = true;
        j["preconditions"] = pre;
        j["matrices"] = matrices_payload(K.src, 1, [&](const slice_element& u) { return K.apply(u); });
        emit(std::move(j));
    });

    c_nerve->callback([&] {
        load_preloads();
        auto Kp = s.load_complex(a_file);
        std::vector<morphism> fs = street_nerve(Kp, dim, cap);
        json arr = json::array();
        for (const auto& F : fs) arr.push_back(morphism_to_json(F));
        json j = json::object();
        j["n"] = dim;
        j["count"] = fs.size();
        j["elements"] = std::move(arr);
        emit(std::move(j));
    });

    c_cells->callback([&] {
        load_preloads();
        auto Kp = s.load_complex(a_file);
        if (!slice_object.empty() && cylinder)
            throw error("choose at most one of --slice and --cylinder");
        json arr = json::array();
        json j = json::object();
        j["dim"] = dim;
        if (!slice_object.empty()) {
            cell c = atom_cell(Kp, cli_detail::object_generator(Kp, slice_object));
            for (const auto& S : enumerate_slice_cells(Kp, c, dim, cap))
                arr.push_back(cli_detail::slice_cell_to_json(S));
            j["object"] = slice_object;
        } else if (cylinder) {
            for (const auto& C : enumerate_cylinder_cells(Kp, dim, cap))
                arr.push_back(cli_detail::cylinder_cell_to_json(C));
        } else {
            for (const auto& c : enumerate_cells(Kp, dim, cap)) arr.push_back(cell_to_json(c));
        }
        j["count"] = arr.size();
        j["cells"] = std::move(arr);
        emit(std::move(j));
    });

    c_crosscheck->callback([&] {
        load_preloads();
        auto Kp = s.load_complex(a_file);
        cell c = atom_cell(Kp, cli_detail::object_generator(Kp, object_name));
        report r = crosscheck_slice(Kp, c, max_dim, cap);
        json j = json::object();
        j["ok"] = r.ok();
        j["violations"] = report_to_json(r);
        emit(std::move(j));
    });

    c_acceptance->callback([&] {
        std::vector<criterion_result> rs = run_acceptance(seed, trials);
        json arr = json::array();
        int failed = 0;
        for (const auto& r : rs) {
            json e = json::object();
            e["criterion"] = r.id;
            e["name"] = r.name;
            e["pass"] = r.pass;
            e["detail"] = r.detail;
            arr.push_back(std::move(e));
            if (!r.pass) ++failed;
        }
        json j = json::object();
        if (failed > 0) {
            j["error"] = std::to_string(failed) + " acceptance criteria failed";
            code = 1;
        }
        j["seed"] = seed;
        j["trials"] = trials;
        j["pass"] = failed == 0;
        j["criteria"] = std::move(arr);
        emit(std::move(j));
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        json j = json::object();
        j["error"] = std::string(e.what());
        out << j.dump(2) << "\n";
        return 1;
    } catch (const parse_error& e) {
        json j = json::object();
        j["error"] = std::string(e.what());
        out << j.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        json j = json::object();
        j["error"] = std::string(e.what());
        out << j.dump(2) << "\n";
        return 1;
    }

    if (have_doc) out << doc.dump(2) << "\n";
    return code;
}

} // namespace adcat
