#include <catch2/catch_amalgamated.hpp>

#include <adcat/atoms.hpp>
#include <adcat/complex.hpp>
#include <adcat/monoidal.hpp>

using namespace adcat;

TEST_CASE("chains normalize away zero coefficients", "[core]") {
    chain x(1);
    x.add("a", 2);
    x.add("b", -1);
    x.add("a", -2);
    REQUIRE(x.coeffs().size() == 1);
    REQUIRE(x.coeff("a") == 0);
    REQUIRE(x.coeff("b") == -1);
    REQUIRE((x - x).is_zero());
    REQUIRE(chain(0) == chain(3));
}

TEST_CASE("chains split into disjoint positive and negative parts", "[core]") {
    chain x(2);
    x.add("u", 3);
    x.add("v", -2);
    REQUIRE(x.positive_part() == chain::unit(2, "u", 3));
    REQUIRE(x.negative_part() == chain::unit(2, "v", 2));
    REQUIRE(x.positive_part() - x.negative_part() == x);
    REQUIRE_FALSE(x.nonnegative());
    REQUIRE(x.positive_part().nonnegative());
}

TEST_CASE("chain addition refuses mixed degrees", "[core]") {
    chain x = chain::unit(1, "a");
    chain y = chain::unit(2, "b");
    REQUIRE_THROWS_AS(x.add(y), error);
    x.add(chain(5));   /* zero chains are degreeless */
    REQUIRE(x == chain::unit(1, "a"));
}

TEST_CASE("complexes keep a sorted basis and reject duplicates", "[core]") {
    complex K("test");
    K.add_generator(0, "b");
    K.add_generator(0, "a");
    REQUIRE(K.basis_at(0) == std::vector<std::string>{"a", "b"});
    REQUIRE_THROWS_AS(K.add_generator(0, "a"), error);
    REQUIRE_THROWS_AS(K.add_generator(-1, "c"), error);
    K.add_generator(1, "a");   /* same name in another degree is fine */
    REQUIRE(K.has_generator(1, "a"));
    REQUIRE(K.max_degree() == 1);
    REQUIRE(K.basis_size() == 3);
}

TEST_CASE("validation accepts the chain complex of a simplex", "[core]") {
    complex K = simplex_complex(3);
    REQUIRE(validate_complex(K).ok());
    REQUIRE(is_decent(K));
    REQUIRE(K.basis_at(0).size() == 4);
    REQUIRE(K.basis_at(1).size() == 6);
    REQUIRE(K.basis_at(2).size() == 4);
    REQUIRE(K.basis_at(3).size() == 1);
}

TEST_CASE("validation reports a broken boundary of a boundary", "[core]") {
    complex K("bad");
    K.add_generator(0, "p");
    K.add_generator(0, "q");
    K.set_aug("p", 1);
    K.set_aug("q", 1);
    K.add_generator(1, "e");
    K.set_diff("e", chain::unit(0, "q") - chain::unit(0, "p"));
    K.add_generator(2, "s");
    K.set_diff("s", chain::unit(1, "e"));   /* d d s = q - p is nonzero */
    report r = validate_complex(K);
    REQUIRE_FALSE(r.ok());
}

TEST_CASE("validation reports an augmentation that misses the boundary", "[core]") {
    complex K("bad");
    K.add_generator(0, "p");
    K.add_generator(0, "q");
    K.set_aug("p", 1);
    K.set_aug("q", 2);   /* e d(e) = 2 - 1 */
    K.add_generator(1, "e");
    K.set_diff("e", chain::unit(0, "q") - chain::unit(0, "p"));
    REQUIRE_FALSE(validate_complex(K).ok());
    /* decency only inspects degree 0, so this failure does not disturb it */
    REQUIRE(is_decent(K));

    complex N("neg");
    N.add_generator(0, "p");
    N.set_aug("p", -1);
    REQUIRE(validate_complex(N).ok());
    REQUIRE_FALSE(is_decent(N));
}

TEST_CASE("validation reports differentials leaving the basis", "[core]") {
    complex K("bad");
    K.add_generator(0, "p");
    K.set_aug("p", 1);
    K.add_generator(1, "e");
    K.set_diff("e", chain::unit(0, "ghost"));
    REQUIRE_FALSE(validate_complex(K).ok());
}

TEST_CASE("the atom of a triangle lists sources and targets by degree", "[core]") {
    complex K = simplex_complex(2);
    atom_table t = make_atom_table(K, generator{"(0,1,2)", 2});
    REQUIRE(t.rows.size() == 3);
    REQUIRE(t.rows[0][0] == chain::unit(0, "(0)"));
    REQUIRE(t.rows[0][1] == chain::unit(0, "(2)"));
    REQUIRE(t.rows[1][0] == chain::unit(1, "(0,2)"));
    REQUIRE(t.rows[1][1] == chain::unit(1, "(0,1)") + chain::unit(1, "(1,2)"));
    REQUIRE(t.rows[2][0] == chain::unit(2, "(0,1,2)"));
    REQUIRE(t.rows[2][1] == t.rows[2][0]);
}

TEST_CASE("atom rows share augmentation one on decent complexes", "[core]") {
    complex K = disk_complex(3);
    for (const auto& g : K.all_generators()) {
        atom_table t = make_atom_table(K, g);
        REQUIRE(K.aug(t.rows[0][0]) == 1);
        REQUIRE(K.aug(t.rows[0][1]) == 1);
    }
}

TEST_CASE("morphisms apply linearly and compose", "[core]") {
    auto S = share(simplex_complex(1));
    auto T = share(simplex_complex(2));
    morphism f = c_of_monotone({0, 2}, 2);
    REQUIRE(validate_morphism(f).ok());
    REQUIRE(f.image_gen({"(0,1)", 1}) == chain::unit(1, "(0,2)"));
    morphism id = morphism::identity(T);
    REQUIRE(compose_morphisms(id, f) == f);
    chain x = chain::unit(1, "(0,1)", 3);
    REQUIRE(f.apply(x) == chain::unit(1, "(0,2)", 3));
    (void)S;
}

TEST_CASE("morphism validation catches a broken chain map", "[core]") {
    auto S = share(simplex_complex(1));
    auto T = share(simplex_complex(1));
    morphism f(S, T);
    f.set_image(0, "(0)", chain::unit(0, "(0)"));
    f.set_image(0, "(1)", chain::unit(0, "(0)"));
    f.set_image(1, "(0,1)", chain::unit(1, "(0,1)"));   /* d f != f d */
    REQUIRE_FALSE(validate_morphism(f).ok());
}

TEST_CASE("setting an image to zero erases its table entry", "[core]") {
    auto S = share(simplex_complex(0));
    morphism f(S, S);
    f.set_image(0, "(0)", chain::unit(0, "(0)"));
    f.set_image(0, "(0)", chain(0));
    REQUIRE(f.maps().empty());
    REQUIRE(f == morphism(S, S));
}
