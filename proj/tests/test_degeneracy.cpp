#include <doctest.h>

#include "chernslope/degeneracy.hpp"
#include "chernslope/errors.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace chernslope;
using fixtures::h;
using fixtures::p1p3;

namespace {

ChowElement parse(std::string_view s) {
    return parse_chow_element(p1p3(), s);
}

}  // namespace

TEST_CASE("tangent classes of products") {
    const auto [c1, c2] = ambient_tangent_of_product(p1p3());
    CHECK(c1 == parse("4*H2^1 + 2*H1^1"));
    CHECK(c2 == parse("6*H2^2 + 8*H1^1*H2^1"));

    const ProductSpace p4({4});
    const auto [d1, d2] = ambient_tangent_of_product(p4);
    CHECK(d1 == Rational(5) * hyperplane(p4, 1));
    CHECK(d2 == Rational(10) * pow(hyperplane(p4, 1), 2));
}

TEST_CASE("input validation") {
    const BundleClass o = trivial_bundle(p1p3(), 1);
    CHECK_THROWS_AS(DegeneracyInput::on_product(p1p3(), o, o), ArgumentError);

    const ProductSpace p3({3});
    CHECK_THROWS_AS(DegeneracyInput::on_product(p3, trivial_bundle(p3, 1), trivial_bundle(p3, 2)), ArgumentError);

    const auto [c1, c2] = ambient_tangent_of_product(p1p3());
    CHECK_THROWS_AS(DegeneracyInput(p1p3(), c1 + c2, c2, o, trivial_bundle(p1p3(), 2)), ArgumentError);
    CHECK_THROWS_AS(DegeneracyInput(p1p3(), c1, c1, o, trivial_bundle(p1p3(), 2)), ArgumentError);
}

TEST_CASE("virtual Chern numbers of the genus 15 family") {
    const VirtualChernNumbers v = virtual_chern_numbers(fixtures::m15_input());
    CHECK(v.c1_sq == 216);
    CHECK(v.c2 == 336);
    CHECK(v.c1_sq_class.is_homogeneous(4));
    CHECK(v.c2_class.is_homogeneous(4));
    CHECK(integrate(v.c1_sq_class) == v.c1_sq);
    CHECK(double_point_check(fixtures::m15_input()) == 336);

    // Independent expansion of the same data with untruncated polynomials.
    const oracle::LineClass b{{{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {0, 1}},
                              {{1, 3}, {1, 3}, {1, 3}, {1, 3}}};
    const oracle::ChernNumbers brute = oracle::brute_force_chern_numbers(b, {});
    CHECK(brute.c1_sq == 216);
    CHECK(brute.c2 == 336);
    CHECK(brute.double_point == 336);
}

TEST_CASE("small instance O -> O(1,0) + O(0,1)") {
    // Frozen from the brute-force expansion.
    const oracle::ChernNumbers brute = oracle::brute_force_chern_numbers({{{1, 0}, {0, 1}}, {}}, {{{0, 0}}, {}});
    REQUIRE(brute.c1_sq == 9);
    REQUIRE(brute.c2 == 3);
    REQUIRE(brute.double_point == 3);

    const VirtualChernNumbers v = virtual_chern_numbers(fixtures::small_input());
    CHECK(v.c1_sq == 9);
    CHECK(v.c2 == 3);
    CHECK(double_point_check(fixtures::small_input()) == 3);
}

TEST_CASE("trivial difference gives zero") {
    const DegeneracyInput in =
        DegeneracyInput::on_product(p1p3(), trivial_bundle(p1p3(), 1), trivial_bundle(p1p3(), 2));
    const VirtualChernNumbers v = virtual_chern_numbers(in);
    CHECK(v.c1_sq == 0);
    CHECK(v.c2 == 0);
    CHECK(double_point_check(in) == 0);
    CHECK(degeneracy_class(in).is_zero());
}

TEST_CASE("degeneracy class degrees") {
    const ChowElement z = degeneracy_class(fixtures::m15_input());
    CHECK(z == parse("14*H2^2 + 16*H1^1*H2^1"));
    CHECK(integrate(z * h(1) * h(2)) == 14);
    CHECK(integrate(z * h(2) * h(2)) == 16);
}

TEST_CASE("agrees with brute force on random line bundle data (property)") {
    gen::Engine rng(0x5eed0201);
    for (int n = 0; n < 200; ++n) {
        oracle::LineClass a, b;
        BundleClass ab = trivial_bundle(p1p3(), 0), bb = trivial_bundle(p1p3(), 0);
        const int rank_a = gen::uniform(rng, 0, 3);
        for (int i = 0; i < rank_a; ++i) {
            const std::vector<int> d = gen::degrees(rng, p1p3(), -2, 2);
            a.plus.push_back(d);
            ab = direct_sum(ab, line_bundle(p1p3(), d));
        }
        for (int i = 0; i <= rank_a; ++i) {
            const std::vector<int> d = gen::degrees(rng, p1p3(), -2, 2);
            b.plus.push_back(d);
            bb = direct_sum(bb, line_bundle(p1p3(), d));
        }
        const VirtualChernNumbers v = virtual_chern_numbers(DegeneracyInput::on_product(p1p3(), ab, bb));
        const oracle::ChernNumbers brute = oracle::brute_force_chern_numbers(b, a);
        CHECK(v.c1_sq == brute.c1_sq);
        CHECK(v.c2 == brute.c2);
    }
}

TEST_CASE("forced cancellation kills both numbers (property)") {
    gen::Engine rng(0x5eed0202);
    for (int n = 0; n < 200; ++n) {
        // B = A + L with c(L) = 1 + c1(L): c2, c3, c4 of B - A vanish.
        const BundleClass a = gen::line_sum(rng, p1p3());
        const BundleClass b = direct_sum(a, line_bundle(p1p3(), gen::degrees(rng, p1p3())));
        const DegeneracyInput in = DegeneracyInput::on_product(p1p3(), a, b);
        const BundleClass d = in.difference();
        REQUIRE(chern(d, 2).is_zero());
        const VirtualChernNumbers v = virtual_chern_numbers(in);
        CHECK(v.c1_sq == 0);
        CHECK(v.c2 == 0);
    }
}

TEST_CASE("trivial twist of both bundles changes nothing (property)") {
    gen::Engine rng(0x5eed0203);
    const BundleClass o = line_bundle(p1p3(), {0, 0});
    for (int n = 0; n < 100; ++n) {
        const BundleClass a = gen::line_sum(rng, p1p3());
        const BundleClass b = direct_sum(a, gen::line_sum(rng, p1p3(), 1));
        const BundleClass bb = b.rank() == a.rank() + 1 ? b : direct_sum(a, line_bundle(p1p3(), {1, 1}));
        const VirtualChernNumbers before = virtual_chern_numbers(DegeneracyInput::on_product(p1p3(), a, bb));
        const VirtualChernNumbers after =
            virtual_chern_numbers(DegeneracyInput::on_product(p1p3(), twist(a, o), twist(bb, o)));
        CHECK(before.c1_sq == after.c1_sq);
        CHECK(before.c2 == after.c2);
    }
}
