#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "derivations.hpp"
#include "embedding.hpp"
#include "functionals.hpp"
#include "oracles.hpp"
#include "sbasis.hpp"

using namespace ydc;
using namespace ydc::test;

namespace {

GraphSum lone(const BipartiteGraph& g, const Rat& c = Rat(1)) {
    GraphSum s;
    s.add(g, c);
    return s;
}

BipartiteGraph disjoint_edges() { return BipartiteGraph(2, 2, {{0, 0}, {1, 1}}); }

// strict profile with an interior kink at z = 0 (slopes +-1/2)
Profile kinked_profile() {
    return Profile({{Rat(-2), Rat(2)}, {Rat(0), Rat(3)}, {Rat(2), Rat(2)}});
}

}  // namespace

TEST_CASE("marked-edge sums interpolate in z") {
    Profile tri = triangle_profile();
    Profile sla = slanted_profile();

    SUBCASE("single edge is the constant 1") {
        ZFit f = interpolate_in_z(del_z(single_edge()), tri);
        CHECK(f.is_polynomial);
        CHECK(f.coeffs == std::vector<Rat>{Rat(1)});
    }

    SUBCASE("disjoint pair pins to twice the area") {
        ZFit f = interpolate_in_z(del_z(disjoint_edges()), tri);
        CHECK(f.is_polynomial);
        CHECK(f.coeffs == std::vector<Rat>{Rat(4)});
        f = interpolate_in_z(del_z(disjoint_edges()), sla);
        CHECK(f.coeffs == std::vector<Rat>{Rat(3)});
    }

    SUBCASE("stars see the extent past the pin") {
        ZFit f = interpolate_in_z(del_z(black_star(2)), tri);
        CHECK(f.is_polynomial);
        CHECK(f.coeffs == std::vector<Rat>{Rat(2), Rat(1)});
        f = interpolate_in_z(del_z(white_star(2)), tri);
        CHECK(f.coeffs == std::vector<Rat>{Rat(2), Rat(-1)});
        f = interpolate_in_z(del_z(black_star(2)), sla);
        CHECK(f.coeffs == std::vector<Rat>{Rat(3, 2), Rat(3, 2)});
    }

    SUBCASE("star difference pins to 2z") {
        std::vector<Rat> expect{Rat(0), Rat(2)};
        CHECK(interpolate_in_z(del_z(star_difference()), tri).coeffs == expect);
        CHECK(interpolate_in_z(del_z(star_difference()), sla).coeffs == expect);
    }

    SUBCASE("node spacing does not matter") {
        for (int off : {1, 5}) {
            CHECK(interpolate_in_z(del_z(black_star(2)), tri, off).coeffs ==
                  interpolate_in_z(del_z(black_star(2)), tri).coeffs);
            CHECK(interpolate_in_z(del_z(star_difference()), sla, off).coeffs ==
                  interpolate_in_z(del_z(star_difference()), sla).coeffs);
        }
    }

    SUBCASE("zero sum") {
        ZFit f = interpolate_in_z(DecoratedSum(), tri);
        CHECK(f.is_polynomial);
        CHECK(f.coeffs.empty());
    }

    SUBCASE("an interior kink breaks polynomiality") {
        ZFit f = interpolate_in_z(del_z(black_star(2)), kinked_profile());
        CHECK_FALSE(f.is_polynomial);
        CHECK(f.witness_z < 0);  // fit nodes sit right of the midpoint
        CHECK(f.coeffs == std::vector<Rat>{Rat(3), Rat(1, 2)});
    }

    SUBCASE("input checks") {
        CHECK_THROWS_AS(interpolate_in_z(del_z(single_edge()), Profile::of_partition(Partition::parse("3,1"))),
                        Error);
        CHECK_THROWS_AS(interpolate_in_z(del_z(four_cycle()), tri), Error);
    }
}

TEST_CASE("volume decomposes over the shape functionals") {
    Profile tri = triangle_profile();
    Profile sla = slanted_profile();

    SUBCASE("single edge gives the area") {
        for (const Profile& om : {tri, sla}) {
            DecompositionReport r = decomposition_identity_check(lone(single_edge()), om);
            CHECK(r.criterion_pass);
            CHECK(r.z_polynomial);
            CHECK(r.vertex_count == 2);
            CHECK(r.coeffs == std::vector<Rat>{Rat(1)});
            CHECK(r.rhs == s_k(om, 2));
            CHECK(r.holds);
        }
        CHECK(decomposition_identity_check(lone(single_edge()), tri).lhs == Rat(2));
        CHECK(decomposition_identity_check(lone(single_edge()), sla).lhs == Rat(3, 2));
    }

    SUBCASE("disjoint pair gives the squared area") {
        DecompositionReport r = decomposition_identity_check(lone(disjoint_edges()), tri);
        CHECK(r.vertex_count == 4);
        CHECK(r.lhs == Rat(4));
        CHECK(r.rhs == Rat(4));
        CHECK(r.holds);
        r = decomposition_identity_check(lone(disjoint_edges()), sla);
        CHECK(r.lhs == Rat(9, 4));
        CHECK(r.holds);
    }

    SUBCASE("star difference gives the cubic functional") {
        DecompositionReport r = decomposition_identity_check(star_difference(), tri);
        CHECK(r.criterion_pass);
        CHECK(r.vertex_count == 3);
        CHECK(r.coeffs == std::vector<Rat>{Rat(0), Rat(2)});
        CHECK(r.lhs == Rat(0));
        CHECK(r.rhs == s_k(tri, 3));
        CHECK(r.holds);
        r = decomposition_identity_check(star_difference(), sla);
        CHECK(r.lhs == Rat(2));
        CHECK(r.rhs == s_k(sla, 3));
        CHECK(r.holds);
    }

    SUBCASE("a lone star fails the criterion but not the pointwise identity") {
        DecompositionReport r = decomposition_identity_check(lone(black_star(2)), tri);
        CHECK_FALSE(r.criterion_pass);
        CHECK(r.z_polynomial);
        CHECK(r.lhs == Rat(8, 3));
        CHECK(r.rhs == Rat(8, 3));
        CHECK(r.holds);
    }

    SUBCASE("empty sum holds trivially") {
        DecompositionReport r = decomposition_identity_check(GraphSum(), tri);
        CHECK(r.criterion_pass);
        CHECK(r.z_polynomial);
        CHECK(r.holds);
        CHECK(r.lhs == Rat(0));
    }

    SUBCASE("the constants are pinned down") {
        DecompositionReport r = decomposition_identity_check(lone(single_edge()), tri);
        CHECK(r.constants_note.find("1/m") != std::string::npos);
        CHECK(r.constants_note.find("(i+2)/(i+1)") != std::string::npos);
    }

    SUBCASE("input checks") {
        CHECK_THROWS_AS(decomposition_identity_check(lone(four_cycle()), tri), Error);
        GraphSum mixed = lone(single_edge());
        mixed.add(black_star(2), Rat(1));
        CHECK_THROWS_WITH(decomposition_identity_check(mixed, tri),
                          doctest::Contains("shared vertex count"));
        CHECK_THROWS_AS(
            decomposition_identity_check(lone(single_edge()), Profile::of_partition(Partition::parse("2"))),
            Error);
    }
}

TEST_CASE("embedding counts fit the functional basis") {
    SUBCASE("single edge is S2") {
        FitReport r = fit_s_basis(lone(single_edge()), default_train(2), default_test(2));
        CHECK(r.status == FitReport::Status::fitted);
        CHECK(r.poly == SPolynomial::generator(2));
        CHECK(r.rank == 1);
        CHECK(r.residuals.empty());
    }

    SUBCASE("disjoint pair is S2 squared") {
        FitReport r = fit_s_basis(lone(disjoint_edges()), default_train(4), default_test(4));
        CHECK(r.status == FitReport::Status::fitted);
        CHECK(r.poly == SPolynomial::monomial({2, 2}, Rat(1)));
        CHECK(r.rank == 2);
    }

    SUBCASE("star difference is S3") {
        FitReport r = fit_s_basis(star_difference(), default_train(3), default_test(3));
        CHECK(r.status == FitReport::Status::fitted);
        CHECK(r.poly == SPolynomial::generator(3));
    }

    SUBCASE("coefficients scale through") {
        FitReport r = fit_s_basis(lone(single_edge(), Rat(3)), default_train(2), default_test(2));
        CHECK(r.status == FitReport::Status::fitted);
        CHECK(r.poly == SPolynomial::generator(2).scaled(Rat(3)));
    }

    SUBCASE("fits reproduce every count") {
        std::vector<GraphSum> sums{lone(single_edge()), lone(disjoint_edges()), star_difference()};
        for (const GraphSum& s : sums) {
            int m = s.terms().begin()->first.vertex_count();
            FitReport r = fit_s_basis(s, default_train(m), default_test(m));
            REQUIRE(r.status == FitReport::Status::fitted);
            for (int n = 0; n <= 6; ++n)
                for (const Partition& lam : partitions_of(n))
                    CHECK(evaluate(r.poly, lam) == count_embeddings_sum(s, lam));
        }
    }

    SUBCASE("a lone star has no fit") {
        FitReport r = fit_s_basis(lone(black_star(2)), default_train(3), default_test(3));
        CHECK(r.status == FitReport::Status::infeasible);
        CHECK_FALSE(r.residuals.empty());
        for (const auto& [lam, res] : r.residuals) CHECK(res != 0);
    }

    SUBCASE("a thin training set is an input error") {
        std::vector<Partition> train{Partition::parse("1")};
        CHECK_THROWS_WITH(fit_s_basis(lone(disjoint_edges()), train, {}),
                          doctest::Contains("unresolved"));
        CHECK_THROWS_WITH(fit_s_basis(lone(single_edge()), {}, {}),
                          doctest::Contains("empty training set"));
    }

    SUBCASE("zero sum fits the zero polynomial") {
        FitReport r = fit_s_basis(GraphSum(), {}, {});
        CHECK(r.status == FitReport::Status::fitted);
        CHECK(r.poly.is_zero());
    }

    SUBCASE("default sample sets are disjoint") {
        for (int m : {2, 3, 4}) {
            std::vector<Partition> train = default_train(m);
            std::vector<Partition> test = default_test(m);
            CHECK(!train.empty());
            CHECK(!test.empty());
            for (const Partition& p : test)
                for (const Partition& q : train) CHECK(p != q);
        }
        std::vector<Partition> train = default_train(3);
        CHECK(std::count(train.begin(), train.end(), Partition::parse("4,4,4,4")) == 1);
        std::vector<Partition> test = default_test(3);
        CHECK(std::count(test.begin(), test.end(), Partition::parse("5,5,5,5,5")) == 1);
    }
}
