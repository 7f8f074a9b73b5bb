#include <catch2/catch_amalgamated.hpp>

#include <adcat/nu_homotopy.hpp>

using namespace adcat;

namespace {

morphism vertex(const std::shared_ptr<const complex>& D0,
                const std::shared_ptr<const complex>& L, const std::string& v) {
    morphism f(D0, L);
    f.set_image(0, "x0", chain::unit(0, v));
    return f;
}

homotopy between(const morphism& f, const morphism& g, const chain& component, bool anti) {
    homotopy h;
    h.level = 1;
    h.anti = anti;
    h.src = f.source_ptr();
    h.dst = f.target_ptr();
    h.lo = std::make_shared<const homotopy>(from_morphism(f));
    h.hi = std::make_shared<const homotopy>(from_morphism(g));
    h.set_component(0, "x0", component);
    return h;
}

} // namespace

TEST_CASE("an edge is a homotopy between its endpoint inclusions", "[homotopy]") {
    auto D0 = share(disk_complex(0));
    auto I = share(simplex_complex(1));
    morphism g = vertex(D0, I, "(0)"), gp = vertex(D0, I, "(1)");
    chain e = chain::unit(1, "(0,1)");
    REQUIRE(validate_homotopy(between(g, gp, e, false)).ok());
    REQUIRE(validate_homotopy(between(g, gp, e, true)).ok());
    /* swapping the endpoints breaks the boundary relation */
    REQUIRE_FALSE(validate_homotopy(between(gp, g, e, false)).ok());
    /* negative components are rejected outright */
    REQUIRE_FALSE(validate_homotopy(between(g, gp, e.scaled(-1), false)).ok());
}

TEST_CASE("identity homotopies share both endpoints", "[homotopy]") {
    auto D0 = share(disk_complex(0));
    auto I = share(simplex_complex(1));
    morphism g = vertex(D0, I, "(0)");
    homotopy id = homotopy_identity(g, true);
    REQUIRE(id.level == 1);
    REQUIRE(validate_homotopy(id).ok());
    REQUIRE(*id.lo == *id.hi);
}

TEST_CASE("whiskering transports homotopies along morphisms", "[homotopy]") {
    auto D0 = share(disk_complex(0));
    auto I = share(simplex_complex(1));
    morphism g = vertex(D0, I, "(0)"), gp = vertex(D0, I, "(1)");
    homotopy h = between(g, gp, chain::unit(1, "(0,1)"), false);

    morphism u = c_of_monotone({0, 1}, 2);   /* edge inclusion into the triangle */
    homotopy uh = whisker_left(u, h);
    REQUIRE(validate_homotopy(uh).ok());
    REQUIRE(uh.component({"x0", 0}) == chain::unit(1, "(0,1)"));
    REQUIRE(*uh.hi == from_morphism(compose_morphisms(u, gp)));

    REQUIRE(whisker_right(h, morphism::identity(D0)) == h);
}

TEST_CASE("vertical sums add components and chain endpoints", "[homotopy]") {
    auto D0 = share(disk_complex(0));
    auto T = share(simplex_complex(2));
    morphism g0 = vertex(D0, T, "(0)"), g1 = vertex(D0, T, "(1)"), g2 = vertex(D0, T, "(2)");
    homotopy b = between(g0, g1, chain::unit(1, "(0,1)"), false);
    homotopy a = between(g1, g2, chain::unit(1, "(1,2)"), false);
    homotopy v = vertical_sum(a, b);
    REQUIRE(validate_homotopy(v).ok());
    REQUIRE(v.component({"x0", 0}) == chain::unit(1, "(0,1)") + chain::unit(1, "(1,2)"));
    REQUIRE(*v.lo == from_morphism(g0));
    REQUIRE(*v.hi == from_morphism(g2));
    /* the middle endpoints must actually meet */
    REQUIRE_THROWS_AS(vertical_sum(b, a), error);
}

TEST_CASE("interchanging two families gives a valid square", "[homotopy]") {
    auto D0 = share(disk_complex(0));
    auto I = share(simplex_complex(1));
    morphism g = vertex(D0, I, "(0)"), gp = vertex(D0, I, "(1)");
    homotopy h = between(g, gp, chain::unit(1, "(0,1)"), true);

    /* a family between the two edge inclusions of the triangle */
    morphism u = c_of_monotone({0, 1}, 2), up = c_of_monotone({1, 2}, 2);
    homotopy k;
    k.level = 1;
    k.anti = true;
    k.src = u.source_ptr();
    k.dst = u.target_ptr();
    k.lo = std::make_shared<const homotopy>(from_morphism(u));
    k.hi = std::make_shared<const homotopy>(from_morphism(up));
    k.set_component(0, "(0)", chain::unit(1, "(0,1)"));
    k.set_component(0, "(1)", chain::unit(1, "(1,2)"));
    k.set_component(1, "(0,1)", chain(2));
    REQUIRE(validate_homotopy(k).ok());

    homotopy square = gray_interchange(k, h);
    REQUIRE(square.level == 2);
    REQUIRE(validate_homotopy(square).ok());
}

TEST_CASE("seeded samples are valid homotopies with forced endpoints", "[homotopy]") {
    morphism id = morphism::identity(share(simplex_complex(1)));
    bool found = false;
    for (std::uint64_t s = 0; s < 64 && !found; ++s) {
        auto draw = random_antihomotopy(id, id, s);
        if (!draw) continue;
        found = true;
        REQUIRE(validate_homotopy(draw->h).ok());
        REQUIRE(*draw->h.hi == from_morphism(id));
        REQUIRE(*draw->h.lo == from_morphism(draw->derived));

        auto step = random_step2(draw->h, s + 1);
        if (step) {
            REQUIRE(validate_homotopy(step->H).ok());
            REQUIRE(*step->H.lo == draw->h);
        }
    }
    REQUIRE(found);
}

TEST_CASE("a homotopy is a chain map out of the cylinder", "[homotopy]") {
    auto D0 = share(disk_complex(0));
    auto I = share(simplex_complex(1));
    morphism g = vertex(D0, I, "(0)"), gp = vertex(D0, I, "(1)");
    homotopy h = between(g, gp, chain::unit(1, "(0,1)"), false);
    morphism H = cylinder_morphism(h);
    REQUIRE(validate_morphism(H).ok());
    REQUIRE(H.image_gen({tensor_label("x0s", "x0"), 0}) == chain::unit(0, "(0)"));
    REQUIRE(H.image_gen({tensor_label("x0t", "x0"), 0}) == chain::unit(0, "(1)"));
    REQUIRE(H.image_gen({tensor_label("x1", "x0"), 1}) == chain::unit(1, "(0,1)"));
    REQUIRE_THROWS_AS(cylinder_morphism(between(g, gp, chain::unit(1, "(0,1)"), true)), error);
}

TEST_CASE("a homotopy induces cells between the images of atoms", "[homotopy]") {
    auto D0 = share(disk_complex(0));
    auto I = share(simplex_complex(1));
    morphism g = vertex(D0, I, "(0)"), gp = vertex(D0, I, "(1)");
    homotopy h = between(g, gp, chain::unit(1, "(0,1)"), false);

    oplax_on_atoms a = nu_of_homotopy(h);
    const cell& c = a.comp.at({"x0", 0});
    REQUIRE(c.dim == 1);
    REQUIRE(c.rows[0][0] == chain::unit(0, "(0)"));
    REQUIRE(c.rows[0][1] == chain::unit(0, "(1)"));
    REQUIRE(cell_class(c) == chain::unit(1, "(0,1)"));
    REQUIRE(oplax_to_homotopy(a) == h);
}

TEST_CASE("oplax transformations compose with functors on either side", "[homotopy]") {
    auto D0 = share(disk_complex(0));
    auto I = share(simplex_complex(1));
    morphism g = vertex(D0, I, "(0)"), gp = vertex(D0, I, "(1)");
    homotopy h = between(g, gp, chain::unit(1, "(0,1)"), false);
    oplax_on_atoms a = nu_of_homotopy(h);

    morphism w = c_of_monotone({0, 1}, 2);
    REQUIRE(oplax_postcompose(w, a) == nu_of_homotopy(whisker_left(w, h)));
    REQUIRE(oplax_precompose(a, morphism::identity(D0)) == a);
}

TEST_CASE("the identity transformation has identity components", "[homotopy]") {
    auto D0 = share(disk_complex(0));
    auto I = share(simplex_complex(1));
    morphism g = vertex(D0, I, "(0)");
    oplax_on_atoms a = oplax_identity(g);
    REQUIRE(oplax_to_homotopy(a) == homotopy_identity(g, false));
    for (const auto& [b, c] : a.comp) {
        REQUIRE(c.dim == b.degree + 1);
        REQUIRE(cell_class(c).is_zero());
    }
}
