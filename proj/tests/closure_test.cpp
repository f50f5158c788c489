#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "staircase/closure.hpp"

using namespace staircase;

namespace {

const framed_ideal telegram{monomial_ideal{{4, 0}, {0, 8}, {3, 3}}};
const monomial_ideal telegram_closed{{4, 0}, {0, 8}, {3, 3}, {2, 6}};

}  // namespace

TEST_CASE("violations find the missing witnesses", "[closure]") {
    const auto v = violations(telegram);
    REQUIRE(v.size() == 1);
    CHECK(v[0].p == monomial{3, 3});
    CHECK(v[0].q == monomial{3, 3});
    CHECK(v[0].witness == monomial{2, 6});

    CHECK(violations(framed_ideal{telegram_closed}).empty());

    CHECK_THROWS_AS(violations(framed_ideal{monomial_ideal{{4, 0}, {0, 8}}}),
                    domain_error);
}

TEST_CASE("generators past the half frame never violate", "[closure]") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<exp_t> side(2, 9);
    for (int trial = 0; trial < 40; ++trial) {
        const exp_t a = side(rng), b = side(rng);
        std::vector<monomial> gens{{a, 0}, {0, b}};
        std::uniform_int_distribution<exp_t> cs((a + 1) / 2, a - 1), ds((b + 1) / 2, b - 1);
        for (int i = 0; i < 3; ++i) gens.push_back({cs(rng), ds(rng)});
        const framed_ideal F{monomial_ideal(gens)};
        if (F.ideal().size() <= 2) continue;
        CHECK(violations(F).empty());
        CHECK(reduction_number(F).r <= 1);
    }
}

TEST_CASE("closure reaches the smallest reduction-number-one superset", "[closure]") {
    auto [L, trace] = closure(telegram);
    CHECK(L.ideal() == telegram_closed);
    REQUIRE(trace.added.size() == 1);
    CHECK(trace.added[0] == monomial{2, 6});

    // fixed points stay fixed
    auto [L2, trace2] = closure(framed_ideal{telegram_closed});
    CHECK(L2.ideal() == telegram_closed);
    CHECK(trace2.added.empty());

    // the frame is its own closure
    const framed_ideal J{monomial_ideal{{3, 0}, {0, 5}}};
    CHECK(closure(J).first.ideal() == J.ideal());
}

TEST_CASE("closure via the remainder recurrence", "[closure]") {
    auto [L, trace] = closure_3gen(4, 8, {3, 3});
    CHECK(L.ideal() == telegram_closed);
    REQUIRE(trace.k);
    CHECK(*trace.k == 3);
    REQUIRE(trace.steps.size() == 3);
    CHECK((trace.steps[0].r == 0 && trace.steps[0].s == 0));
    CHECK((trace.steps[1].r == 1 && trace.steps[1].s == 0));
    CHECK((trace.steps[2].r == 2 && trace.steps[2].s == 1));

    auto [L2, trace2] = closure_3gen(4, 8, {3, 5});
    CHECK(*trace2.k == 2);
    CHECK(L2.ideal() == monomial_ideal{{4, 0}, {0, 8}, {3, 5}});

    // a third generator past the half frame is already closed
    auto [L3, trace3] = closure_3gen(6, 10, {5, 8});
    CHECK(*trace3.k == 2);
    CHECK(L3.ideal() == monomial_ideal{{6, 0}, {0, 10}, {5, 8}});

    CHECK_THROWS_AS(closure_3gen(3, 6, monomial{1, 1}), domain_error);
}

TEST_CASE("both closure algorithms agree on every three-generated ideal",
          "[closure]") {
    for (exp_t a = 2; a <= 10; ++a) {
        for (exp_t b = a; b <= 10; ++b) {
            for (exp_t c = 1; c < a; ++c) {
                for (exp_t d = 1; d < b; ++d) {
                    if (b * c + a * d < a * b) continue;
                    const monomial p{c, d};
                    const framed_ideal F{monomial_ideal{{a, 0}, {0, b}, p}};
                    auto [general, gt] = closure(F);
                    auto [explicit_route, et] = closure_3gen(a, b, p);
                    CHECK(general.ideal() == explicit_route.ideal());
                    CHECK(has_reduction_number_one(general));
                    CHECK(closure(general).first.ideal() == general.ideal());

                    // recurrence invariants: quotient sums below the index
                    // until the stop, remainders inside the frame box
                    REQUIRE(et.k);
                    CHECK(*et.k == three_gen_reduction_number(a, b, p) + 1);
                    for (const closure_step& st : et.steps) {
                        if (st.i < *et.k) {
                            CHECK(st.r + st.s == st.i - 1);
                            CHECK(detail::in_frame_box(a, b, {st.x, st.y}));
                        } else {
                            CHECK(st.r + st.s >= st.i);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("all-at-once and one-at-a-time fixpoints coincide", "[closure]") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<exp_t> side(2, 7);
    std::uniform_int_distribution<std::size_t> extras(1, 4);
    for (int trial = 0; trial < 80; ++trial) {
        const framed_ideal F =
            oracles::random_framed(rng, side(rng), side(rng), extras(rng));
        CHECK(closure(F).first.ideal() == oracles::closure_one_at_a_time(F));
    }
}

TEST_CASE("exhaustive minimality certificate", "[closure]") {
    CHECK(minimal_one_oracle(telegram).ideal() == telegram_closed);
    CHECK(minimal_one_oracle(framed_ideal{telegram_closed}).ideal() ==
          telegram_closed);

    const framed_ideal F{monomial_ideal{{3, 0}, {0, 5}, {2, 2}}};
    CHECK(minimal_one_oracle(F).ideal() == closure(F).first.ideal());

    for (exp_t a = 2; a <= 4; ++a)
        for (exp_t b = a; b <= 4; ++b)
            for (exp_t c = 1; c < a; ++c)
                for (exp_t d = 1; d < b; ++d) {
                    if (b * c + a * d < a * b) continue;
                    const framed_ideal I{monomial_ideal{{a, 0}, {0, b}, {c, d}}};
                    CHECK(minimal_one_oracle(I).ideal() == closure(I).first.ideal());
                }

    CHECK_THROWS_AS(minimal_one_oracle(framed_ideal{monomial_ideal{
                        {20, 0}, {0, 20}, {19, 19}}}),
                    domain_error);  // grid too large
}

TEST_CASE("reduction-number-one ideals are closed under intersection",
          "[closure]") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<exp_t> side(2, 6);
    std::uniform_int_distribution<std::size_t> extras(1, 3);
    for (int trial = 0; trial < 120; ++trial) {
        const exp_t a = side(rng), b = side(rng);
        const framed_ideal base = oracles::random_framed(rng, a, b, extras(rng));
        // two different reduction-number-1 ideals above base
        const framed_ideal L1 = closure(base).first;
        const framed_ideal wider{
            sum(base.ideal(), oracles::random_framed(rng, a, b, extras(rng)).ideal())};
        const framed_ideal L2 = closure(wider).first;
        REQUIRE(has_reduction_number_one(L1));
        REQUIRE(has_reduction_number_one(L2));
        const framed_ideal meet{intersection(L1.ideal(), L2.ideal())};
        CHECK(has_reduction_number_one(meet));
    }
}
