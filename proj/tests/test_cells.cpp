#include <catch2/catch_amalgamated.hpp>

#include <adcat/cells.hpp>
#include <adcat/monoidal.hpp>

using namespace adcat;

namespace {

cell edge(const std::shared_ptr<const complex>& K, const std::string& name) {
    return atom_cell(K, generator{name, 1});
}

} // namespace

TEST_CASE("atom cells validate on every generator of a disk", "[cells]") {
    auto K = share(disk_complex(3));
    for (const auto& g : K->all_generators()) {
        cell c = atom_cell(K, g);
        REQUIRE(c.dim == g.degree);
        REQUIRE(validate_cell(c).ok());
        REQUIRE(cell_class(c) == chain::unit(g.degree, g.name));
    }
}

TEST_CASE("cell tables with unequal top rows are rejected", "[cells]") {
    auto K = share(disk_complex(1));
    cell c = edge(K, "x1");
    c.rows[1][1] = chain(1);
    REQUIRE_FALSE(validate_cell(c).ok());
}

TEST_CASE("boundaries restrict the table and pinch the last row", "[cells]") {
    auto K = share(simplex_complex(2));
    cell t = atom_cell(K, generator{"(0,1,2)", 2});
    cell s = cell_source(t, 1);
    REQUIRE(s.dim == 1);
    REQUIRE(s.rows[1][0] == chain::unit(1, "(0,2)"));
    REQUIRE(s.rows[1][1] == s.rows[1][0]);
    cell u = cell_target(t, 1);
    REQUIRE(u.rows[1][0] == chain::unit(1, "(0,1)") + chain::unit(1, "(1,2)"));
    REQUIRE(cell_source(t, 0).rows[0][0] == chain::unit(0, "(0)"));
    REQUIRE(cell_target(t, 0).rows[0][0] == chain::unit(0, "(2)"));
}

TEST_CASE("identities add a zero row and are neutral for composition", "[cells]") {
    auto K = share(simplex_complex(1));
    cell e = edge(K, "(0,1)");
    cell i = cell_identity(e);
    REQUIRE(i.dim == 2);
    REQUIRE(validate_cell(i).ok());
    REQUIRE(i.rows[2][0].is_zero());
    REQUIRE(cell_compose_pad(e, cell_source(e, 0), 0) == e);
    REQUIRE(cell_compose_pad(cell_target(e, 0), e, 0) == e);
}

TEST_CASE("composing edges of a glued pair of intervals adds tables", "[cells]") {
    auto S = share(globular_sum({{1, 1}, {0}}));
    cell a = edge(S, "0:x1");
    cell b = edge(S, "1:x1");
    REQUIRE(cell_source(b, 0) == cell_target(a, 0));
    cell ba = cell_compose(b, a, 0);
    REQUIRE(validate_cell(ba).ok());
    REQUIRE(ba.rows[0][0] == chain::unit(0, "0:x0s"));
    REQUIRE(ba.rows[0][1] == chain::unit(0, "1:x0t"));
    REQUIRE(cell_class(ba) == chain::unit(1, "0:x1") + chain::unit(1, "1:x1"));
    REQUIRE_THROWS_AS(cell_compose(a, b, 0), error);
}

TEST_CASE("edge composition is associative", "[cells]") {
    auto K = share(simplex_complex(3));
    cell a = edge(K, "(0,1)"), b = edge(K, "(1,2)"), c = edge(K, "(2,3)");
    cell left = cell_compose(cell_compose(c, b, 0), a, 0);
    cell right = cell_compose(c, cell_compose(b, a, 0), 0);
    REQUIRE(left == right);
    REQUIRE(validate_cell(left).ok());
}

TEST_CASE("two cells compose vertically in a glued pair of disks", "[cells]") {
    auto S = share(globular_sum({{2, 2}, {1}}));
    cell alpha = atom_cell(S, generator{"0:x2", 2});
    cell beta = atom_cell(S, generator{"1:x2", 2});
    REQUIRE(cell_source(beta, 1) == cell_target(alpha, 1));
    cell v = cell_compose(beta, alpha, 1);
    REQUIRE(validate_cell(v).ok());
    REQUIRE(cell_class(v) == chain::unit(2, "0:x2") + chain::unit(2, "1:x2"));
    /* the 0-boundaries agree with the common ones */
    REQUIRE(v.rows[0][0] == chain::unit(0, "0:x0s"));
    REQUIRE(v.rows[0][1] == chain::unit(0, "0:x0t"));
}

TEST_CASE("functors transport cells and collapse to identities", "[cells]") {
    auto D1 = share(disk_complex(1));
    morphism k = cocat_kappa(1, 0);
    cell image = apply_functor(k, edge(D1, "x1"));
    REQUIRE(validate_cell(image).ok());
    cell expect = cell_identity(atom_cell(k.target_ptr(), generator{"x0", 0}));
    REQUIRE(image == expect);
}

TEST_CASE("cell counts over small complexes are exact", "[cells]") {
    auto count = [](const complex& K, int dim) {
        return enumerate_cells(share(K), dim, 2).size();
    };
    complex D2 = disk_complex(2);
    REQUIRE(count(D2, 0) == 2);
    REQUIRE(count(D2, 1) == 4);
    REQUIRE(count(D2, 2) == 5);
    REQUIRE(count(D2, 3) == 5);

    complex T = simplex_complex(2);
    REQUIRE(count(T, 0) == 3);
    REQUIRE(count(T, 1) == 7);
    REQUIRE(count(T, 2) == 8);
    REQUIRE(count(T, 3) == 8);

    complex S = globular_sum({{1, 1}, {0}});
    REQUIRE(count(S, 0) == 4);
    REQUIRE(count(S, 1) == 6);
    REQUIRE(count(S, 2) == 6);
}

TEST_CASE("enumerated cells are valid, distinct and sorted", "[cells]") {
    auto K = share(simplex_complex(2));
    std::vector<cell> cs = enumerate_cells(K, 2, 2);
    for (const auto& c : cs) REQUIRE(validate_cell(c).ok());
    for (std::size_t i = 1; i < cs.size(); ++i) REQUIRE(cs[i - 1] < cs[i]);
}

TEST_CASE("chain maps out of simplex chains enumerate nerve elements", "[cells]") {
    auto K = share(simplex_complex(1));
    REQUIRE(street_nerve(K, 0, 3).size() == 2);
    REQUIRE(street_nerve(K, 1, 3).size() == 3);
    REQUIRE(street_nerve(K, 2, 3).size() == 4);
    for (const auto& f : street_nerve(K, 2, 3)) REQUIRE(validate_morphism(f).ok());
}

TEST_CASE("nerve elements satisfy the simplicial identities", "[cells]") {
    auto K = share(simplex_complex(1));
    morphism d1 = c_of_monotone(monotone_face(2, 1), 2);
    morphism s0 = c_of_monotone(monotone_degeneracy(1, 0), 1);
    for (const auto& f : street_nerve(K, 1, 3)) {
        morphism deg = compose_morphisms(f, s0);   /* degenerate 2-simplex on f */
        REQUIRE(validate_morphism(deg).ok());
        REQUIRE(compose_morphisms(deg, d1) == f);
    }
}
