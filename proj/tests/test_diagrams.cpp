#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "partition.hpp"
#include "profile.hpp"
#include "rational.hpp"

using namespace ydc;
using namespace ydc::test;

TEST_CASE("partition parsing") {
    Partition p = Partition::parse("4,3,1");
    CHECK(p.length() == 3);
    CHECK(p.size() == 8);
    CHECK(p.row(1) == 4);
    CHECK(p.row(3) == 1);
    CHECK(p.to_string() == "4,3,1");

    CHECK(Partition::parse("").length() == 0);
    CHECK(Partition::parse("0").length() == 0);
    CHECK(Partition::parse("7") == Partition({7}));

    CHECK_THROWS_AS(Partition::parse("3,4"), Error);
    CHECK_THROWS_WITH(Partition::parse("3,4"), "partition not weakly decreasing");
    CHECK_THROWS_AS(Partition::parse("x"), Error);
    CHECK_THROWS_AS(Partition::parse("-1"), Error);
    CHECK_THROWS_AS(Partition::parse("2,,1"), Error);
}

TEST_CASE("partition structure") {
    Partition p({4, 3, 1});
    CHECK(p.conjugate() == Partition({3, 2, 2, 1}));
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.contains_box(4, 1));
    CHECK(p.contains_box(1, 3));
    CHECK_FALSE(p.contains_box(2, 3));
    CHECK_FALSE(p.contains_box(5, 1));
    CHECK_FALSE(p.contains_box(1, 4));

    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        Partition q = random_partition(rng, 10);
        CHECK(q.conjugate().conjugate() == q);
        CHECK(q.conjugate().size() == q.size());
    }
}

TEST_CASE("partition scalings") {
    Partition p({3, 1});
    CHECK(p.anisotropic_scale(2) == Partition({6, 2}));
    CHECK(p.anisotropic_scale(1) == p);
    CHECK(p.dilate(2) == Partition({6, 6, 2, 2}));
    CHECK(p.dilate(3).size() == 9 * p.size());
    CHECK(Profile::of_partition(p.dilate(2)) == Profile::of_partition(p).dilate(Rat(2)));
}

TEST_CASE("partition enumeration") {
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        std::vector<Partition> all = partitions_of(n);
        CHECK(static_cast<int>(all.size()) == expected[n]);
        for (const Partition& q : all) {
            CHECK(q.size() == n);
            for (int i = 2; i <= q.length(); ++i) CHECK(q.row(i - 1) >= q.row(i));
        }
    }
    CHECK(partitions_up_to(3).size() == 7);
}

TEST_CASE("profile of a single box") {
    Profile w = Profile::of_partition(Partition({1}));
    REQUIRE(w.breakpoints().size() == 3);
    CHECK(w.breakpoints()[0].z == Rat(-1));
    CHECK(w.breakpoints()[1].z == Rat(0));
    CHECK(w.breakpoints()[1].w == Rat(2));
    CHECK(w.breakpoints()[2].z == Rat(1));
    CHECK(w(Rat(0)) == Rat(2));
    CHECK(w(Rat(5)) == Rat(5));
    CHECK(w(Rat(-1, 2)) == Rat(3, 2));
    CHECK(w.slope(Rat(-1, 2)) == Rat(1));
    CHECK(w.slope(Rat(1, 2)) == Rat(-1));
    CHECK(w.area() == Rat(1));
}

TEST_CASE("profile of a general diagram") {
    Partition p({4, 3, 1});
    Profile w = Profile::of_partition(p);
    CHECK(w.support_lo() == Rat(-3));
    CHECK(w.support_hi() == Rat(4));
    CHECK(w.x_max() == Rat(4));
    CHECK(w.y_max() == Rat(3));
    CHECK(w.area() == Rat(8));
    CHECK_FALSE(w.is_strict());
    CHECK_FALSE(w.is_flat());
    for (int i = -8; i <= 8; ++i) {
        Rat z(i, 2);
        CHECK(w(z) >= rat_abs(z));
        CHECK(w(z) - rat_abs(z) >= Rat(0));
    }
    CHECK(w(w.support_lo()) == Rat(3));
    CHECK(w(w.support_hi()) == Rat(4));

    CHECK(w.contains(Rat(7, 2), Rat(1, 2)));
    CHECK(w.contains(Rat(1, 2), Rat(5, 2)));
    CHECK_FALSE(w.contains(Rat(7, 2), Rat(3, 2)));
    CHECK_FALSE(w.contains(Rat(9, 2), Rat(1, 2)));

    Profile flat = Profile::of_partition(Partition());
    CHECK(flat.is_flat());
    CHECK(flat.area() == Rat(0));
    CHECK_FALSE(flat.is_strict());
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(Profile({{Rat(-1), Rat(1)}, {Rat(1), Rat(5)}}), Error);  // slope 2
    CHECK_THROWS_AS(Profile({{Rat(-1), Rat(2)}, {Rat(1), Rat(1)}}), Error);  // lifts off |z|
    CHECK_THROWS_AS(Profile({{Rat(1), Rat(1)}, {Rat(-1), Rat(1)}}), Error);  // unsorted
}

TEST_CASE("strict profiles") {
    Profile tri = triangle_profile();
    CHECK(tri.is_strict());
    CHECK(tri.area() == Rat(2));
    CHECK(tri(Rat(0)) == Rat(2));
    CHECK(tri.x_of(Rat(0)) == Rat(1));
    CHECK(tri.y_of(Rat(0)) == Rat(1));
    CHECK(tri.x_max() == Rat(2));
    CHECK(tri.y_max() == Rat(2));
    CHECK(tri.contains(Rat(1, 2), Rat(1, 2)));
    CHECK_FALSE(tri.contains(Rat(3, 2), Rat(3, 2)));

    Profile sl = slanted_profile();
    CHECK(sl.is_strict());
    CHECK(sl.area() == Rat(3, 2));
    CHECK(sl.x_max() == Rat(3));
    CHECK(sl.y_max() == Rat(1));
    CHECK(sl(Rat(1)) == Rat(2));
}

TEST_CASE("extent functions") {
    Profile tri = triangle_profile();
    AffinePieces xe = tri.x_extent();
    AffinePieces ye = tri.y_extent();
    CHECK(xe.domain_lo() == Rat(0));
    CHECK(xe.domain_hi() == Rat(2));
    CHECK(xe.eval(Rat(1, 2)) == Rat(3, 2));
    CHECK(xe.eval(Rat(2)) == Rat(0));
    CHECK(ye.eval(Rat(1, 2)) == Rat(3, 2));

    Profile sl = slanted_profile();
    CHECK(sl.x_extent().eval(Rat(1, 2)) == Rat(3, 2));  // x <= 3(1 - y)
    CHECK(sl.y_extent().eval(Rat(3, 2)) == Rat(1, 2));  // y <= 1 - x/3

    // staircase: extent is the row/column profile
    Profile w = Profile::of_partition(Partition({4, 3, 1}));
    CHECK(w.x_extent().eval(Rat(1, 2)) == Rat(4));
    CHECK(w.x_extent().eval(Rat(3, 2)) == Rat(3));
    CHECK(w.x_extent().eval(Rat(5, 2)) == Rat(1));
    CHECK(w.y_extent().eval(Rat(7, 2)) == Rat(1));
}

TEST_CASE("profile dilation") {
    Profile tri = triangle_profile();
    Profile big = tri.dilate(Rat(3));
    CHECK(big.support_lo() == Rat(-6));
    CHECK(big.support_hi() == Rat(6));
    CHECK(big.area() == Rat(18));
    CHECK(big(Rat(0)) == Rat(6));
    Profile half = tri.dilate(Rat(1, 2));
    CHECK(half.area() == Rat(1, 2));
}
