#include <catch2/catch_amalgamated.hpp>

#include <adcat/acceptance.hpp>
#include <adcat/analysis.hpp>
#include <adcat/monoidal.hpp>

using namespace adcat;

TEST_CASE("disks and simplex chains are strong Steiner", "[analysis]") {
    for (int i = 0; i <= 4; ++i) {
        steiner_check c = check_steiner(disk_complex(i));
        REQUIRE(c.is_strong_steiner());
    }
    for (int m = 0; m <= 4; ++m)
        REQUIRE(check_steiner(simplex_complex(m)).is_strong_steiner());
}

TEST_CASE("joins and tensors of disks stay strong Steiner", "[analysis]") {
    complex J = join_complex(disk_complex(1), disk_complex(2));
    REQUIRE(check_steiner(J).is_strong_steiner());
    complex T = tensor_complex(disk_complex(1), disk_complex(1));
    REQUIRE(check_steiner(T).is_strong_steiner());
}

TEST_CASE("a two cycle is unitary but not loop free", "[analysis]") {
    complex C = acc::two_cycle_complex();
    REQUIRE(validate_complex(C).ok());
    REQUIRE(is_unitary(C).ok());
    preorder_report why;
    REQUIRE_FALSE(is_loop_free(C, &why));
    REQUIRE_FALSE(why.is_order);
    REQUIRE(why.cycle_witness.has_value());
    REQUIRE_FALSE(check_steiner(C).is_steiner());
}

TEST_CASE("breaking augmentation on an atom breaks unitarity", "[analysis]") {
    complex C("pair");
    C.add_generator(0, "p");
    C.add_generator(0, "q");
    C.set_aug("p", 1);
    C.set_aug("q", 1);
    C.add_generator(1, "e");
    C.set_diff("e", chain::unit(0, "q").scaled(2) - chain::unit(0, "p").scaled(2));
    REQUIRE(validate_complex(C).ok());
    REQUIRE_FALSE(is_unitary(C).ok());   /* both atom ends have augmentation two */
}

TEST_CASE("the natural preorder on a simplex has no cycle", "[analysis]") {
    preorder_report r = natural_preorder(simplex_complex(3));
    REQUIRE(r.is_order);
    REQUIRE(is_strongly_loop_free(simplex_complex(3)));
}

TEST_CASE("strong loop freeness implies loop freeness on the pool", "[analysis]") {
    for (const auto& item : acc::base_pool())
        if (is_strongly_loop_free(*item.K)) REQUIRE(is_loop_free(*item.K));
}

TEST_CASE("disk inclusions are rigid ordered monomorphisms", "[analysis]") {
    morphism s = cocat_sigma(2, 1);
    REQUIRE(validate_morphism(s).ok());
    REQUIRE(is_prerigid(s).ok());
    REQUIRE(is_rigid(s).ok());
    REQUIRE(is_monomorphism(s));
    REQUIRE(is_rigid_ordered_inclusion(s).ok());
    morphism t = cocat_tau(3, 1);
    REQUIRE(is_rigid_ordered_inclusion(t).ok());
}

TEST_CASE("collapsing a disk is not a monomorphism", "[analysis]") {
    morphism k = cocat_kappa(1, 0);
    REQUIRE(validate_morphism(k).ok());
    REQUIRE_FALSE(is_monomorphism(k));
}

TEST_CASE("a basis preserving collapse can fail rigidity", "[analysis]") {
    acc::collapse_fixture fx = acc::square_collapse();
    REQUIRE(validate_morphism(fx.f).ok());
    REQUIRE(is_prerigid(fx.f).ok());
    report r = is_rigid(fx.f);
    REQUIRE_FALSE(r.ok());
    bool mentions_alpha = false;
    for (const auto& v : r.violations)
        if (v.witness.find("alpha") != std::string::npos) mentions_alpha = true;
    REQUIRE(mentions_alpha);
}

TEST_CASE("identities are rigid", "[analysis]") {
    auto K = share(simplex_complex(2));
    morphism id = morphism::identity(K);
    REQUIRE(is_rigid(id).ok());
    REQUIRE(is_monomorphism(id));
}

TEST_CASE("gluing two edges at a vertex keeps strong Steiner", "[analysis]") {
    auto D0 = share(disk_complex(0));
    auto D1 = share(disk_complex(1));
    morphism f(D0, D1), g(D0, D1);
    f.set_image(0, "x0", chain::unit(0, "x0s"));
    g.set_image(0, "x0", chain::unit(0, "x0t"));
    pushout_steiner_report r = check_pushout_steiner(g, f);
    REQUIRE(r.ok());
    REQUIRE(r.pushout.object != nullptr);
    REQUIRE(check_steiner(*r.pushout.object).is_strong_steiner());
    REQUIRE(r.pushout.object->basis_at(0).size() == 3);
    REQUIRE(r.pushout.object->basis_at(1).size() == 2);
}
