#pragma once

#include <optional>
#include <queue>

#include "atoms.hpp"
#include "colimit.hpp"

namespace adcat {

/* A preorder presented by generating pairs on basis elements.  is_order is
   false exactly when the generating graph has a cycle of length >= 2 or a
   generating self-pair; reflexive closure pairs do not count. */
struct preorder_report {
    std::string kind;
    std::vector<std::pair<generator, generator>> pairs;
    bool is_order = true;
    std::optional<std::vector<generator>> cycle_witness;
    std::optional<std::vector<generator>> topological_order;
};

namespace detail {

/* Deterministic DFS in (degree, name) order; the witness is the first cycle
   met.  Nodes and adjacency arrive sorted. */
inline void detect_cycle(preorder_report& r, const std::vector<generator>& nodes) {
    std::map<generator, std::size_t> id;
    for (std::size_t i = 0; i < nodes.size(); ++i) id[nodes[i]] = i;
    std::vector<std::vector<std::size_t>> adj(nodes.size());
    for (const auto& [a, b] : r.pairs) adj[id.at(a)].push_back(id.at(b));

    std::vector<int> color(nodes.size(), 0);
    std::vector<std::size_t> stack;
    std::vector<std::size_t> cycle;

    auto dfs = [&](auto&& self, std::size_t v) -> bool {
        color[v] = 1;
        stack.push_back(v);
        for (std::size_t w : adj[v]) {
            if (!cycle.empty()) return true;
            if (color[w] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                cycle.assign(it, stack.end());
                return true;
            }
            if (color[w] == 0 && self(self, w)) return true;
        }
        color[v] = 2;
        stack.pop_back();
        return false;
    };
    for (std::size_t v = 0; v < nodes.size() && cycle.empty(); ++v)
        if (color[v] == 0) dfs(dfs, v);

    if (!cycle.empty()) {
        r.is_order = false;
        std::vector<generator> witness;
        for (std::size_t v : cycle) witness.push_back(nodes[v]);
        r.cycle_witness = std::move(witness);
        return;
    }

    /* acyclic: deterministic topological order, smallest node first */
    std::vector<std::size_t> indeg(nodes.size(), 0);
    for (const auto& a : adj)
        for (std::size_t w : a) ++indeg[w];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < nodes.size(); ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<generator> topo;
    while (!ready.empty()) {
        std::size_t v = ready.top();
        ready.pop();
        topo.push_back(nodes[v]);
        for (std::size_t w : adj[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    r.topological_order = std::move(topo);
}

inline std::map<generator, atom_table> all_atom_tables(const complex& K) {
    std::map<generator, atom_table> t;
    for (const auto& g : K.all_generators()) t.emplace(g, make_atom_table(K, g));
    return t;
}

} // namespace detail

inline report is_unitary(const complex& K) {
    report r;
    for (const auto& g : K.all_generators()) {
        atom_table t = make_atom_table(K, g);
        if (K.aug(t.row(0, 0)) != 1)
            r.violations.push_back({"e(<x>^0_0) != 1", g.name});
        else if (K.aug(t.row(0, 1)) != 1)
            r.violations.push_back({"e(<x>^1_0) != 1", g.name});
    }
    return r;
}

inline preorder_report leq_i_preorder(const complex& K, int i) {
    preorder_report r;
    r.kind = "leq_" + std::to_string(i);
    std::vector<generator> nodes;
    std::map<generator, atom_table> tables;
    for (const auto& g : K.all_generators())
        if (g.degree > i) {
            nodes.push_back(g);
            tables.emplace(g, make_atom_table(K, g));
        }
    for (const auto& x : nodes) {
        const chain& upper = tables.at(x).row(i, 1);
        for (const auto& y : nodes) {
            const chain& lower = tables.at(y).row(i, 0);
            bool meets = false;
            for (const auto& [n, c] : upper.coeffs())
                if (lower.coeff(n) != 0) { meets = true; break; }
            if (meets) r.pairs.emplace_back(x, y);
        }
    }
    detail::detect_cycle(r, nodes);
    return r;
}

inline preorder_report natural_preorder(const complex& K) {
    preorder_report r;
    r.kind = "leq_N";
    std::vector<generator> nodes = K.all_generators();
    std::set<std::pair<generator, generator>> pairs;
    for (const auto& b : nodes) {
        if (b.degree == 0) continue;
        chain d = K.diff_gen(b);
        for (const auto& [n, c] : d.negative_part().coeffs())
            pairs.emplace(generator{n, b.degree - 1}, b);
        for (const auto& [n, c] : d.positive_part().coeffs())
            pairs.emplace(b, generator{n, b.degree - 1});
    }
    r.pairs.assign(pairs.begin(), pairs.end());
    detail::detect_cycle(r, nodes);
    return r;
}

inline bool is_loop_free(const complex& K, preorder_report* failure = nullptr) {
    int top = K.max_degree();
    for (int i = 0; i + 1 <= top; ++i) {
        preorder_report r = leq_i_preorder(K, i);
        if (!r.is_order) {
            if (failure) *failure = std::move(r);
            return false;
        }
    }
    return true;
}

inline bool is_strongly_loop_free(const complex& K, preorder_report* failure = nullptr) {
    preorder_report r = natural_preorder(K);
    if (!r.is_order) {
        if (failure) *failure = std::move(r);
        return false;
    }
    return true;
}

struct steiner_check {
    report unitary;
    bool loop_free = false;
    bool strongly_loop_free = false;
    std::optional<preorder_report> loop_witness;
    std::optional<preorder_report> strong_witness;
    std::optional<std::vector<generator>> natural_order;

    bool is_steiner() const { return unitary.ok() && loop_free; }
    bool is_strong_steiner() const { return unitary.ok() && strongly_loop_free; }
};

inline steiner_check check_steiner(const complex& K) {
    steiner_check c;
    c.unitary = is_unitary(K);
    preorder_report weak, strong;
    c.loop_free = is_loop_free(K, &weak);
    if (!c.loop_free) c.loop_witness = std::move(weak);
    preorder_report natural = natural_preorder(K);
    c.strongly_loop_free = natural.is_order;
    if (!natural.is_order) c.strong_witness = natural;
    else c.natural_order = natural.topological_order;
    return c;
}

inline bool is_steiner(const complex& K) { return check_steiner(K).is_steiner(); }
inline bool is_strong_steiner(const complex& K) { return check_steiner(K).is_strong_steiner(); }

inline report is_prerigid(const morphism& f) {
    report r;
    for (const auto& g : f.source().all_generators()) {
        chain img = f.image_gen(g);
        if (img.coeffs().size() != 1 || img.coeffs().begin()->second != 1 ||
            !f.target().has_generator(g.degree, img.coeffs().begin()->first))
            r.violations.push_back({"image of a basis element is not a basis element", g.name});
    }
    return r;
}

inline std::map<generator, generator> prerigid_generator_map(const morphism& f) {
    report r = is_prerigid(f);
    if (!r.ok()) throw error("morphism is not prerigid (at '" + r.violations.front().witness + "')");
    std::map<generator, generator> m;
    for (const auto& g : f.source().all_generators())
        m[g] = generator{f.image_gen(g).coeffs().begin()->first, g.degree};
    return m;
}

inline report is_rigid(const morphism& f) {
    report r = is_prerigid(f);
    if (!r.ok()) return r;
    for (const auto& g : f.source().all_generators()) {
        atom_table src = make_atom_table(f.source(), g);
        atom_table dst = make_atom_table(f.target(), f.image_gen(g));
        for (int k = 0; k <= g.degree; ++k)
            for (int eps = 0; eps < 2; ++eps)
                if (f.apply(src.row(k, eps)) != dst.row(k, eps)) {
                    r.violations.push_back({"f(<b>^" + std::to_string(eps) + "_" +
                                            std::to_string(k) + ") != <f(b)>^" +
                                            std::to_string(eps) + "_" + std::to_string(k),
                                            g.name});
                    k = g.degree + 1;
                    break;
                }
    }
    return r;
}

/* injectivity of the underlying graded map, by fraction-free elimination */
inline bool is_monomorphism(const morphism& f) {
    for (const auto& [deg, names] : f.source().basis()) {
        if (names.empty()) continue;
        std::vector<std::string> target_names = f.target().basis_at(deg);
        std::map<std::string, std::size_t> row_of;
        for (std::size_t i = 0; i < target_names.size(); ++i) row_of[target_names[i]] = i;
        std::vector<std::vector<i64>> m(target_names.size(), std::vector<i64>(names.size(), 0));
        for (std::size_t j = 0; j < names.size(); ++j)
            for (const auto& [n, c] : f.image_gen({names[j], deg}).coeffs())
                m[row_of.at(n)][j] = c;
        /* Bareiss elimination; injective iff column rank equals #columns */
        std::size_t rank = 0;
        i64 prev = 1;
        for (std::size_t col = 0; col < names.size(); ++col) {
            std::size_t pivot = rank;
            while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
            if (pivot == m.size()) return false;
            std::swap(m[rank], m[pivot]);
            for (std::size_t i = rank + 1; i < m.size(); ++i) {
                for (std::size_t j = col + 1; j < names.size(); ++j)
                    m[i][j] = checked_sub(checked_mul(m[rank][col], m[i][j]),
                                          checked_mul(m[i][col], m[rank][j])) / prev;
                m[i][col] = 0;
            }
            prev = m[rank][col];
            ++rank;
        }
    }
    return true;
}

namespace detail {

/* reflexive-transitive closure of the natural preorder, as reachability */
inline std::map<generator, std::set<generator>> natural_reachability(const complex& K) {
    preorder_report r = natural_preorder(K);
    std::map<generator, std::vector<generator>> adj;
    for (const auto& [a, b] : r.pairs) adj[a].push_back(b);
    std::map<generator, std::set<generator>> reach;
    for (const auto& g : K.all_generators()) {
        std::set<generator>& seen = reach[g];
        std::vector<generator> todo{g};
        seen.insert(g);
        while (!todo.empty()) {
            generator v = todo.back();
            todo.pop_back();
            auto it = adj.find(v);
            if (it == adj.end()) continue;
            for (const auto& w : it->second)
                if (seen.insert(w).second) todo.push_back(w);
        }
    }
    return reach;
}

} // namespace detail

/* rigid monomorphism reflecting (and hence preserving) the natural preorder */
inline report is_rigid_ordered_inclusion(const morphism& f) {
    report r = is_rigid(f);
    if (!r.ok()) return r;
    if (!is_monomorphism(f)) {
        r.violations.push_back({"morphism is not a monomorphism", f.source().name()});
        return r;
    }
    auto gen_map = prerigid_generator_map(f);
    auto src_reach = detail::natural_reachability(f.source());
    auto dst_reach = detail::natural_reachability(f.target());
    for (const auto& x : f.source().all_generators())
        for (const auto& y : f.source().all_generators()) {
            bool src = src_reach.at(x).count(y) > 0;
            bool dst = dst_reach.at(gen_map.at(x)).count(gen_map.at(y)) > 0;
            if (src != dst) {
                r.violations.push_back({src ? "order not preserved" : "order not reflected",
                                        x.name + " <= " + y.name});
                return r;
            }
        }
    return r;
}

/* Amalgamation along two ordered rigid inclusions of strongly loop-free
   based complexes: the pushout is again strongly loop-free and its legs are
   ordered rigid inclusions.  All of that is checked and reported. */
struct pushout_steiner_report {
    report preconditions;
    colimit_result pushout;
    bool pushout_strongly_loop_free = false;
    report left_leg, right_leg;
    bool ok() const {
        return preconditions.ok() && pushout_strongly_loop_free && left_leg.ok() && right_leg.ok();
    }
};

inline pushout_steiner_report check_pushout_steiner(const morphism& f, const morphism& g) {
    pushout_steiner_report out;
    auto require = [&](bool cond, const std::string& what, const std::string& witness) {
        if (!cond) out.preconditions.violations.push_back({what, witness});
    };
    require(f.source() == g.source(), "arms share their source", "pushout");
    report rf = is_rigid_ordered_inclusion(f);
    report rg = is_rigid_ordered_inclusion(g);
    for (const auto& v : rf.violations)
        out.preconditions.violations.push_back({"left arm: " + v.check, v.witness});
    for (const auto& v : rg.violations)
        out.preconditions.violations.push_back({"right arm: " + v.check, v.witness});
    require(is_strongly_loop_free(f.source()), "source strongly loop-free", f.source().name());
    require(is_strongly_loop_free(f.target()), "left target strongly loop-free", f.target().name());
    require(is_strongly_loop_free(g.target()), "right target strongly loop-free", g.target().name());
    if (!out.preconditions.ok()) return out;

    out.pushout = pushout(f, g, f.target().name() + " +_" + f.source().name() + " " + g.target().name());
    out.pushout_strongly_loop_free = is_strongly_loop_free(*out.pushout.object);
    out.left_leg = is_rigid_ordered_inclusion(out.pushout.legs[0]);
    out.right_leg = is_rigid_ordered_inclusion(out.pushout.legs[1]);
    return out;
}

} // namespace adcat
