#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "oracles.hpp"
#include "staircase/equigen.hpp"

using namespace staircase;

TEST_CASE("index sets behave like integer subsets", "[equigen]") {
    index_set A;
    A.insert(0);
    A.insert(1);
    A.insert(3);
    CHECK(A.count() == 3);
    CHECK(A.contains(3));
    CHECK_FALSE(A.contains(2));
    CHECK(A.max_element() == 3);
    CHECK(A.elements() == std::vector<exp_t>{0, 1, 3});

    index_set far;
    far.insert(0);
    far.insert(200);
    CHECK(sumset(A, far).max_element() == 203);
    CHECK(sumset(A, far).contains(201));
    CHECK_FALSE(sumset(A, far).contains(199));
}

TEST_CASE("sumsets and folds", "[equigen]") {
    index_set A;
    for (exp_t i : {0, 1, 3}) A.insert(i);
    CHECK(sumset(A, A).elements() == std::vector<exp_t>{0, 1, 2, 3, 4, 6});

    index_set B;
    for (exp_t i : {0, 3}) B.insert(i);
    CHECK(k_fold(B, 2).elements() == std::vector<exp_t>{0, 3, 6});
    CHECK(k_fold(A, 1) == A);
    CHECK(k_fold(A, 0) == index_set::single(0));
    CHECK(k_fold(A, 5) == sumset(k_fold(A, 2), k_fold(A, 3)));
}

TEST_CASE("exponent sets validate their members", "[equigen]") {
    CHECK_NOTHROW(exponent_set::of(6, {0, 2, 6}));
    CHECK_THROWS_AS(exponent_set::of(6, {0, 2}), domain_error);    // g missing
    CHECK_THROWS_AS(exponent_set::of(6, {2, 6}), domain_error);    // 0 missing
    CHECK_THROWS_AS(exponent_set::of(6, {0, 7, 6}), domain_error); // out of range
}

TEST_CASE("ideal encoding round trip", "[equigen]") {
    CHECK(to_ideal(exponent_set::of(3, {0, 1, 3}), 3, 3).ideal() ==
          monomial_ideal{{3, 0}, {2, 1}, {0, 3}});
    CHECK(to_ideal(exponent_set::of(4, {0, 2, 4}), 4, 8).ideal() ==
          monomial_ideal{{4, 0}, {2, 4}, {0, 8}});

    for (exp_t g = 1; g <= 10; ++g) {
        for (const auto& elems : oracles::all_member_lists(g)) {
            const exponent_set A = exponent_set::of(g, elems);
            CHECK(from_ideal(to_ideal(A, g, g)) == A);
            CHECK(from_ideal(to_ideal(A, 2 * g, 3 * g)) == A);
        }
    }

    CHECK_THROWS_AS(to_ideal(exponent_set::of(3, {0, 1, 3}), 3, 5), domain_error);
    CHECK_THROWS_AS(
        from_ideal(framed_ideal{monomial_ideal{{4, 0}, {0, 8}, {3, 3}}}),
        domain_error);  // not quasi-equigenerated
}

TEST_CASE("multiplication of encoded ideals is the sumset", "[equigen]") {
    for (exp_t g = 1; g <= 8; ++g) {
        const auto lists = oracles::all_member_lists(g);
        for (const auto& ea : lists) {
            for (const auto& eb : lists) {
                const exponent_set A = exponent_set::of(g, ea);
                const exponent_set B = exponent_set::of(g, eb);
                const exponent_set AB(2 * g, sumset(A.members, B.members));
                CHECK(product(to_ideal(A, g, g).ideal(), to_ideal(B, g, g).ideal()) ==
                      to_ideal(AB, 2 * g, 2 * g).ideal());
            }
        }
    }
}

TEST_CASE("reduction number on the sumset side", "[equigen]") {
    CHECK(r_equigen(exponent_set::of(3, {0, 1, 3})) == 2);
    CHECK(r_equigen(exponent_set::of(5, {0, 1, 2, 3, 4, 5})) == 1);
    CHECK(r_equigen(exponent_set::of(7, {0, 7})) == 0);
    CHECK(r_equigen(exponent_set::of(1, {0, 1})) == 0);
}

TEST_CASE("progression test characterizes reduction number one", "[equigen]") {
    CHECK(redone_characterize(exponent_set::of(6, {0, 2, 4, 6})));
    CHECK_FALSE(redone_characterize(exponent_set::of(6, {0, 2, 6})));
    CHECK_FALSE(redone_characterize(exponent_set::of(6, {0, 6})));

    for (exp_t g = 1; g <= 9; ++g)
        for (const auto& elems : oracles::all_member_lists(g)) {
            const exponent_set A = exponent_set::of(g, elems);
            CHECK(redone_characterize(A) == (r_equigen(A) == 1));
        }
}

TEST_CASE("three-generated closed form", "[equigen]") {
    CHECK(masiproves_formula(6, 4) == 2);
    CHECK(masiproves_formula(5, 2) == 4);
    CHECK(masiproves_formula(8, 4) == 1);
    CHECK_THROWS_AS(masiproves_formula(6, 6), domain_error);
    CHECK_THROWS_AS(masiproves_formula(6, 0), domain_error);

    for (exp_t g = 2; g <= 14; ++g)
        for (exp_t e = 1; e < g; ++e)
            CHECK(r_equigen(exponent_set::of(g, {0, e, g})) ==
                  masiproves_formula(g, e));
}

TEST_CASE("every value up to the bound is realized", "[equigen]") {
    CHECK(somayeh_family(5, 3) == exponent_set::of(5, {0, 1, 4, 5}));
    CHECK(somayeh_family(3, 1) == exponent_set::of(3, {0, 1, 2, 3}));
    CHECK(somayeh_family(4, 3) == exponent_set::of(4, {0, 1, 4}));
    CHECK_THROWS_AS(somayeh_family(4, 4), domain_error);

    for (exp_t g = 2; g <= 10; ++g)
        for (exp_t j = 1; j < g; ++j)
            CHECK(r_equigen(somayeh_family(g, j)) == j);
}

TEST_CASE("maximal reduction number classification", "[equigen]") {
    CHECK(sunshine_classify(exponent_set::of(6, {0, 1, 6})));
    CHECK_FALSE(sunshine_classify(exponent_set::of(6, {0, 2, 6})));
    CHECK(sunshine_classify(exponent_set::of(1, {0, 1})));

    for (exp_t g = 1; g <= 9; ++g)
        for (const auto& elems : oracles::all_member_lists(g)) {
            const exponent_set A = exponent_set::of(g, elems);
            CHECK(sunshine_classify(A) == (r_equigen(A) == g - 1));
        }
}

TEST_CASE("multiplicity and the two upper bounds", "[equigen]") {
    const exponent_set A = exponent_set::of(6, {0, 2, 6});
    CHECK(multiplicity(A) == 3);
    CHECK(upper_bounds(A).glp == 2);
    CHECK(r_equigen(A) == 2);  // attains the finer bound

    CHECK(multiplicity(exponent_set::of(9, {0, 9})) == 1);

    const exponent_set B = exponent_set::of(5, {0, 1, 5});
    CHECK(multiplicity(B) == 5);
    CHECK(upper_bounds(B).glp == 4);
    CHECK(r_equigen(B) == 4);

    for (exp_t g = 1; g <= 9; ++g)
        for (const auto& elems : oracles::all_member_lists(g)) {
            const exponent_set S = exponent_set::of(g, elems);
            const exp_t r = r_equigen(S);
            CHECK(r < multiplicity(S));
            CHECK(r <= upper_bounds(S).glp);
        }
}

TEST_CASE("scaling the set leaves the reduction number alone", "[equigen]") {
    for (exp_t g = 1; g <= 12; ++g)
        for (const auto& elems : oracles::all_member_lists(g)) {
            const exponent_set A = exponent_set::of(g, elems);
            const exp_t t = gcd_of(A.members);
            std::vector<exp_t> scaled;
            for (exp_t i : elems) scaled.push_back(i / t);
            CHECK(r_equigen(A) == r_equigen(exponent_set::of(g / t, scaled)));
        }
}

TEST_CASE("sumset route matches ideal powers", "[equigen]") {
    for (exp_t g = 1; g <= 5; ++g)
        for (const auto& elems : oracles::all_member_lists(g)) {
            const exponent_set A = exponent_set::of(g, elems);
            CHECK(r_equigen(A) == reduction_number(to_ideal(A, g, g)).r);
        }
}
