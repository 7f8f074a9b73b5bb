#include <catch2/catch_amalgamated.hpp>

#include <adcat/omega_slice.hpp>

using namespace adcat;

namespace {

cell base_vertex(const std::shared_ptr<const complex>& K, const std::string& v) {
    return atom_cell(K, generator{v, 0});
}

} // namespace

TEST_CASE("cells under a vertex of the interval are counted exactly", "[omega-slice]") {
    auto I = share(simplex_complex(1));
    cell v = base_vertex(I, "(0)");
    REQUIRE(enumerate_slice_cells(I, v, 0, 2).size() == 2);
    REQUIRE(enumerate_slice_cells(I, v, 1, 2).size() == 3);
    REQUIRE(enumerate_slice_cells(I, v, 2, 2).size() == 3);
    for (const auto& S : enumerate_slice_cells(I, v, 1, 2)) {
        REQUIRE(slice_cell_validate(S).ok());
        REQUIRE(cell_class(S.c) == chain::unit(0, "(0)"));
    }
}

TEST_CASE("cells under a vertex of the triangle are counted exactly", "[omega-slice]") {
    auto T = share(simplex_complex(2));
    cell v = base_vertex(T, "(0)");
    REQUIRE(enumerate_slice_cells(T, v, 2, 2).size() == 12);
}

TEST_CASE("cylinder cells over the interval are counted exactly", "[omega-slice]") {
    auto I = share(simplex_complex(1));
    REQUIRE(enumerate_cylinder_cells(I, 0, 1).size() == 3);
    REQUIRE(enumerate_cylinder_cells(I, 1, 1).size() == 6);
    REQUIRE(enumerate_cylinder_cells(I, 2, 1).size() == 6);
    for (const auto& C : enumerate_cylinder_cells(I, 1, 1)) REQUIRE(cylinder_validate(C).ok());
}

TEST_CASE("slice boundaries and identities stay valid slice cells", "[omega-slice]") {
    auto I = share(simplex_complex(1));
    cell v = base_vertex(I, "(0)");
    for (const auto& S : enumerate_slice_cells(I, v, 1, 2)) {
        slice_cell s = slice_source(S), t = slice_target(S);
        REQUIRE(slice_cell_validate(s).ok());
        REQUIRE(slice_cell_validate(t).ok());
        REQUIRE(s.dim == 0);
        REQUIRE(t.dim == 0);
        slice_cell i = slice_identity(S);
        REQUIRE(i.dim == 2);
        REQUIRE(slice_cell_validate(i).ok());
        REQUIRE(slice_source(i) == S);
        REQUIRE(slice_target(i) == S);
    }
}

TEST_CASE("slice composition pastes under the base and matches tables", "[omega-slice]") {
    auto I = share(simplex_complex(1));
    cell v = base_vertex(I, "(0)");
    std::vector<slice_cell> ones = enumerate_slice_cells(I, v, 1, 2);
    int composed = 0;
    for (const auto& x : ones)
        for (const auto& y : ones) {
            if (slice_source(x) != slice_target(y)) continue;
            slice_cell xy = slice_compose(x, y, 0);
            REQUIRE(slice_cell_validate(xy).ok());
            REQUIRE(xy == slice_compose_via_tables(x, y, 0));
            ++composed;
        }
    REQUIRE(composed > 0);
    for (const auto& x : ones) {
        REQUIRE(slice_source_via_tables(x) == slice_source(x));
        REQUIRE(slice_target_via_tables(x) == slice_target(x));
        REQUIRE(slice_identity_via_tables(x) == slice_identity(x));
    }
}

TEST_CASE("a slice cell is a constant sided cylinder cell", "[omega-slice]") {
    auto I = share(simplex_complex(1));
    cell v = base_vertex(I, "(0)");
    for (const auto& S : enumerate_slice_cells(I, v, 1, 2)) {
        cylinder_cell C = slice_into_cylinder(S);
        REQUIRE(cylinder_validate(C).ok());
        REQUIRE(slice_from_cylinder(C) == S);
        REQUIRE(cylinder_pi0(C).dim == 1);
    }
    /* a cylinder with a moving left side does not restrict */
    for (const auto& C : enumerate_cylinder_cells(I, 1, 1)) {
        cell base = cell_boundary(C.c, 0, 0);
        if (C.c != cell_iterated_identity(base, C.dim)) {
            REQUIRE_THROWS_AS(slice_from_cylinder(C), error);
            break;
        }
    }
}

TEST_CASE("slice cells and join chain maps determine each other", "[omega-slice]") {
    auto I = share(simplex_complex(1));
    cell v = base_vertex(I, "(0)");
    for (int dim = 0; dim <= 2; ++dim)
        for (const auto& S : enumerate_slice_cells(I, v, dim, 2)) {
            morphism F = slice_cell_to_join_functor(S);
            REQUIRE(validate_morphism(F).ok());
            REQUIRE(slice_cell_from_join_functor(F, dim) == S);
        }
}

TEST_CASE("cylinder cells and tensor chain maps determine each other", "[omega-slice]") {
    auto I = share(simplex_complex(1));
    for (int dim = 0; dim <= 1; ++dim)
        for (const auto& C : enumerate_cylinder_cells(I, dim, 1)) {
            morphism F = cylinder_cell_to_tensor_functor(C);
            REQUIRE(validate_morphism(F).ok());
            REQUIRE(cylinder_cell_from_tensor_functor(F, dim) == C);
        }
}

TEST_CASE("cylinder composition agrees with its table form", "[omega-slice]") {
    auto I = share(simplex_complex(1));
    std::vector<cylinder_cell> ones = enumerate_cylinder_cells(I, 1, 1);
    int composed = 0;
    for (const auto& x : ones)
        for (const auto& y : ones) {
            if (cylinder_source(x) != cylinder_target(y)) continue;
            cylinder_cell xy = cylinder_compose(x, y, 0);
            REQUIRE(cylinder_validate(xy).ok());
            REQUIRE(xy == cylinder_compose_via_tables(x, y, 0));
            ++composed;
        }
    REQUIRE(composed > 0);
}

TEST_CASE("reindexing a slice cell along a collapse keeps validity", "[omega-slice]") {
    auto I = share(simplex_complex(1));
    cell v = base_vertex(I, "(0)");
    morphism k = cocat_kappa(1, 0);
    for (const auto& S : enumerate_slice_cells(I, v, 0, 2)) {
        slice_cell up = slice_reindex(S, k, 1);   /* degenerate 1-cell on S */
        REQUIRE(slice_cell_validate(up).ok());
        REQUIRE(slice_source(up) == S);
        REQUIRE(slice_target(up) == S);
    }
}

TEST_CASE("transformations validate through their cylinders", "[omega-slice]") {
    auto D0 = share(disk_complex(0));
    auto I = share(simplex_complex(1));
    morphism g(D0, I), gp(D0, I);
    g.set_image(0, "x0", chain::unit(0, "(0)"));
    gp.set_image(0, "x0", chain::unit(0, "(1)"));
    homotopy h;
    h.level = 1;
    h.anti = false;
    h.src = D0;
    h.dst = I;
    h.lo = std::make_shared<const homotopy>(from_morphism(g));
    h.hi = std::make_shared<const homotopy>(from_morphism(gp));
    h.set_component(0, "x0", chain::unit(1, "(0,1)"));

    oplax_on_atoms a = nu_of_homotopy(h);
    REQUIRE(oplax_validate(a).ok());
    cylinder_cell C = oplax_cylinder(a, atom_cell(D0, generator{"x0", 0}));
    REQUIRE(cylinder_validate(C).ok());
    REQUIRE(cell_class(cylinder_pi0(C)) == chain::unit(0, "(0)"));
    REQUIRE(cell_class(cylinder_pi1(C)) == chain::unit(0, "(1)"));

    oplax_on_atoms two = oplax_vertical_compose(oplax_identity(gp), a);
    REQUIRE(oplax_validate(two).ok());
    REQUIRE(oplax_to_homotopy(two).component({"x0", 0}) == chain::unit(1, "(0,1)"));
}

TEST_CASE("chain level and cell level slices agree through the adjunction", "[omega-slice]") {
    auto I = share(simplex_complex(1));
    REQUIRE(crosscheck_slice(I, base_vertex(I, "(0)"), 2, 2).ok());
    auto T = share(simplex_complex(2));
    REQUIRE(crosscheck_slice(T, base_vertex(T, "(2)"), 1, 2).ok());
}
