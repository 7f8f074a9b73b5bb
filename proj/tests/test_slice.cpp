#include <catch2/catch_amalgamated.hpp>

#include <adcat/cells.hpp>
#include <adcat/slice.hpp>

using namespace adcat;

namespace {

morphism vertex(const std::shared_ptr<const complex>& D0,
                const std::shared_ptr<const complex>& L, const std::string& v) {
    morphism f(D0, L);
    f.set_image(0, "x0", chain::unit(0, v));
    return f;
}

homotopy between(const morphism& f, const morphism& g, const chain& component) {
    homotopy h;
    h.level = 1;
    h.anti = true;
    h.src = f.source_ptr();
    h.dst = f.target_ptr();
    h.lo = std::make_shared<const homotopy>(from_morphism(f));
    h.hi = std::make_shared<const homotopy>(from_morphism(g));
    h.set_component(0, "x0", component);
    return h;
}

} // namespace

TEST_CASE("slot counts of a slice drop with the degree", "[slice]") {
    auto D0 = share(disk_complex(0));
    auto I = share(simplex_complex(1));
    slice_complex S(vertex(D0, I, "(0)"));
    REQUIRE(S.elementary(0).size() == 3);
    REQUIRE(S.elementary(1).size() == 1);
    REQUIRE(S.elementary(2).empty());
    REQUIRE(S.index().basis_size() == 1);
    REQUIRE(S.ambient().basis_size() == 3);
}

TEST_CASE("degree 0 slice elements satisfy the defining relation", "[slice]") {
    auto D0 = share(disk_complex(0));
    auto I = share(simplex_complex(1));
    slice_complex S(vertex(D0, I, "(0)"));
    std::vector<slice_element> found = S.enumerate_positive(0, 2);
    int unit_aug = 0;
    for (const auto& u : found) {
        REQUIRE(S.validate(u).ok());
        REQUIRE(S.positive(u));
        if (S.aug(u) == 1) ++unit_aug;
    }
    /* the two cells of the interval under its first vertex */
    REQUIRE(unit_aug == 2);
}

TEST_CASE("the slice differential squares to zero", "[slice]") {
    auto D0 = share(disk_complex(0));
    auto T = share(simplex_complex(2));
    slice_complex S(vertex(D0, T, "(0)"));
    for (const auto& u : S.elementary(2)) {
        slice_element du = S.diff(u);
        REQUIRE(du.degree == 1);
        slice_element ddu = S.diff(du);
        REQUIRE(ddu.base.is_zero());
        for (const auto& [j, table] : ddu.maps)
            for (const auto& [n, c] : table) {
                (void)j;
                (void)n;
                REQUIRE(c.is_zero());
            }
    }
    REQUIRE_THROWS_AS(S.diff(zero_slice_element(0)), error);
}

TEST_CASE("elements off the basis or off degree are rejected", "[slice]") {
    auto D0 = share(disk_complex(0));
    auto I = share(simplex_complex(1));
    slice_complex S(vertex(D0, I, "(0)"));
    slice_element u = zero_slice_element(1);
    u.base = chain::unit(1, "ghost");
    REQUIRE_FALSE(S.validate(u).ok());
    slice_element v = zero_slice_element(1);
    v.set_component(0, "x9", chain::unit(2, "(0,1)"));
    REQUIRE_FALSE(S.validate(v).ok());
}

TEST_CASE("the coslice agrees with the slice of the odd dual", "[slice]") {
    auto D0 = share(disk_complex(0));
    auto I = share(simplex_complex(1));
    morphism g = vertex(D0, I, "(0)");
    coslice_complex C(g);
    REQUIRE(C.inner().over() == opp_morphism(g));
    REQUIRE(C.inner().elementary(0).size() == 3);
    REQUIRE(C.inner().elementary(1).size() == 1);
    /* the outer dual flips the differential out of odd degrees */
    for (const auto& u : C.inner().elementary(1))
        REQUIRE(C.diff(u) == scaled_element(C.inner().diff(u), -1));
}

TEST_CASE("the adjunction between joins and slices is a bijection", "[slice]") {
    auto D0 = share(disk_complex(0));
    auto D1 = share(disk_complex(1));
    auto M = share(simplex_complex(1));
    join_parts jp = make_join(D0, D1);
    morphism g0(D0, M);
    g0.set_image(0, "x0", chain::unit(0, "(0)"));
    slice_complex S(g0);

    int kept = 0;
    for (const auto& F : enumerate_adc_morphisms(jp.object, M, 2)) {
        if (F.image_gen({join_label(std::string("x0"), std::nullopt), 0}) !=
            chain::unit(0, "(0)"))
            continue;
        ++kept;
        slice_valued_map G = slice_adjunction_phi(F, jp, S);
        REQUIRE(validate_slice_map(G, S).ok());
        REQUIRE(slice_adjunction_psi(G, jp, S) == F);
    }
    /* the three one dimensional cells of the interval under its first vertex */
    REQUIRE(kept == 3);
}

TEST_CASE("pulling back along the identity triangle changes nothing", "[slice]") {
    auto D0 = share(disk_complex(0));
    auto I = share(simplex_complex(1));
    morphism g = vertex(D0, I, "(0)");
    morphism f = morphism::identity(D0);
    slice_pullback pb = triangle_pullback(f, homotopy_identity(g, true), g, g);
    for (int d = 0; d <= 1; ++d)
        for (const auto& u : pb.src.elementary(d)) REQUIRE(pb.apply(u) == u);
}

TEST_CASE("pullbacks along a triangle are maps of slice complexes", "[slice]") {
    auto D0 = share(disk_complex(0));
    auto D1 = share(disk_complex(1));
    morphism g = vertex(D0, D1, "x0s"), gp = vertex(D0, D1, "x0t");
    morphism f = morphism::identity(D0);
    homotopy h = between(g, gp, chain::unit(1, "x1"));
    slice_pullback pb = triangle_pullback(f, h, g, gp);

    for (const auto& u : pb.src.enumerate_positive(0, 2)) {
        slice_element v = pb.apply(u);
        REQUIRE(pb.dst.validate(v).ok());
        REQUIRE(pb.dst.positive(v));
    }
    /* the transport commutes with the differentials */
    for (const auto& u : pb.src.elementary(1))
        REQUIRE(pb.dst.diff(pb.apply(u)) == pb.apply(pb.src.diff(u)));
}

TEST_CASE("mismatched triangles are rejected", "[slice]") {
    auto D0 = share(disk_complex(0));
    auto D1 = share(disk_complex(1));
    morphism g = vertex(D0, D1, "x0s"), gp = vertex(D0, D1, "x0t");
    morphism f = morphism::identity(D0);
    homotopy h = between(g, gp, chain::unit(1, "x1"));
    REQUIRE_THROWS_AS(triangle_pullback(f, h, gp, g), error);
}

TEST_CASE("a cone induces a homotopy between the two pullbacks", "[slice]") {
    auto D0 = share(disk_complex(0));
    auto T = share(simplex_complex(2));
    morphism g = vertex(D0, T, "(0)"), gp = vertex(D0, T, "(2)");
    morphism f = morphism::identity(D0);
    homotopy hlo = between(g, gp, chain::unit(1, "(0,2)"));
    homotopy hhi = between(g, gp, chain::unit(1, "(0,1)") + chain::unit(1, "(1,2)"));

    homotopy k = homotopy_identity(f, true);
    homotopy H;
    H.level = 2;
    H.anti = true;
    H.src = D0;
    H.dst = T;
    H.lo = std::make_shared<const homotopy>(hlo);
    H.hi = std::make_shared<const homotopy>(hhi);
    H.set_component(0, "x0", chain::unit(2, "(0,1,2)"));
    REQUIRE(validate_homotopy(H).ok());

    slice_cone cn = cone_homotopy(k, H, g, gp);
    slice_pullback lo = triangle_pullback(f, hlo, g, gp);
    slice_pullback hi = triangle_pullback(f, hhi, g, gp);
    for (const auto& u : cn.src.enumerate_positive(0, 2)) {
        slice_element v = cn.apply(u);
        REQUIRE(v.degree == 1);
        REQUIRE(cn.dst.validate(v).ok());
        /* boundary of the cone value joins the two transports */
        REQUIRE(cn.dst.diff(v) == add_elements(lo.apply(u), scaled_element(hi.apply(u), -1)));
    }
}

TEST_CASE("cones without a positive lower face are rejected", "[slice]") {
    auto D0 = share(disk_complex(0));
    auto T = share(simplex_complex(2));
    morphism g = vertex(D0, T, "(0)"), gp = vertex(D0, T, "(2)");
    morphism f = morphism::identity(D0);
    homotopy hlo = between(g, gp, chain::unit(1, "(0,2)"));
    homotopy k = homotopy_identity(f, true);
    homotopy H;
    H.level = 2;
    H.anti = true;
    H.src = D0;
    H.dst = T;
    H.lo = std::make_shared<const homotopy>(hlo);
    H.hi = H.lo;
    REQUIRE(validate_homotopy(H).ok());
    /* the triangle ends at the wrong vertex for this slice */
    REQUIRE_THROWS_AS(cone_homotopy(k, H, gp, g), error);
}
