#pragma once

#include <numeric>

#include "morphism.hpp"

namespace adcat {

/* Finite diagram of based complexes with prerigid maps.  The colimit basis
   is the colimit of the bases: generators are tagged "{index}:{name}" and
   identified along the edges, the class representative being the smallest
   (index, name) member. */
struct colimit_edge {
    std::size_t src = 0, dst = 0;
    morphism map;   /* objects[src] -> objects[dst] */
};

struct colimit_result {
    std::shared_ptr<const complex> object;
    std::vector<morphism> legs;   /* one per diagram object */
};

namespace detail {

struct union_find {
    std::vector<std::size_t> parent;

    explicit union_find(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a); b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace detail

inline colimit_result colimit(const std::vector<std::shared_ptr<const complex>>& objects,
                              const std::vector<colimit_edge>& edges,
                              const std::string& name) {
    struct node { std::size_t obj; generator gen; };
    std::vector<node> nodes;
    std::map<std::pair<std::size_t, generator>, std::size_t> index;
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (const auto& g : objects[i]->all_generators()) {
            index[{i, g}] = nodes.size();
            nodes.push_back({i, g});
        }

    detail::union_find uf(nodes.size());
    for (const auto& e : edges) {
        if (e.src >= objects.size() || e.dst >= objects.size())
            throw error("colimit edge references a missing object");
        if (e.map.source() != *objects[e.src] || e.map.target() != *objects[e.dst])
            throw error("colimit edge endpoints do not match its morphism");
        for (const auto& g : objects[e.src]->all_generators()) {
            chain img = e.map.image_gen(g);
            if (img.coeffs().size() != 1 || img.coeffs().begin()->second != 1)
                throw error("colimit of a non-prerigid diagram has no induced basis (at '" +
                            g.name + "')");
            generator h{img.coeffs().begin()->first, g.degree};
            uf.unite(index.at({e.src, g}), index.at({e.dst, h}));
        }
    }

    /* representative = smallest (object index, name) in the class */
    std::map<std::size_t, std::size_t> rep;   /* class root -> chosen node */
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::size_t root = uf.find(i);
        auto it = rep.find(root);
        if (it == rep.end()) { rep[root] = i; continue; }
        const node& cur = nodes[it->second];
        if (std::pair(nodes[i].obj, nodes[i].gen.name) < std::pair(cur.obj, cur.gen.name))
            it->second = i;
    }
    auto class_name = [&](std::size_t node_id) {
        const node& r = nodes[rep.at(uf.find(node_id))];
        return std::to_string(r.obj) + ":" + r.gen.name;
    };

    complex P(name);
    for (const auto& [root, chosen] : rep)
        P.add_generator(nodes[chosen].gen.degree, class_name(chosen));
    for (const auto& [root, chosen] : rep) {
        const node& r = nodes[chosen];
        const complex& C = *objects[r.obj];
        std::string cname = class_name(chosen);
        if (r.gen.degree >= 1) {
            chain d(r.gen.degree - 1);
            for (const auto& [n, c] : C.diff_gen(r.gen).coeffs())
                d.add(class_name(index.at({r.obj, generator{n, r.gen.degree - 1}})), c);
            P.set_diff(cname, d);
        } else {
            P.set_aug(cname, C.aug_gen(r.gen.name));
        }
    }

    colimit_result result;
    result.object = share(std::move(P));
    for (std::size_t i = 0; i < objects.size(); ++i) {
        morphism leg(objects[i], result.object);
        for (const auto& g : objects[i]->all_generators())
            leg.set_image(g.degree, g.name, chain::unit(g.degree, class_name(index.at({i, g}))));
        result.legs.push_back(std::move(leg));
    }
    return result;
}

/* pushout of K <-f- M -g-> L; legs returned for K and L (and M last) */
inline colimit_result pushout(const morphism& f, const morphism& g, const std::string& name) {
    if (f.source() != g.source())
        throw error("pushout arms must share their source");
    std::vector<std::shared_ptr<const complex>> objects{f.target_ptr(), g.target_ptr(), f.source_ptr()};
    std::vector<colimit_edge> edges{{2, 0, f}, {2, 1, g}};
    return colimit(objects, edges, name);
}

} // namespace adcat
