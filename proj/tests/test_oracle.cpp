#include <set>

#include <catch2/catch_amalgamated.hpp>

#include <grcodes/oracle.hpp>
#include <grcodes/verify.hpp>

#include "test_util.hpp"

using namespace grcodes;

namespace {

Ambient amb_z4_x2m1() { return Ambient::make(Z4(), P(Z4(), {-1, 0, 1})); }
Ambient amb_z4_x4m1() { return Ambient::make(Z4(), P(Z4(), {-1, 0, 0, 0, 1})); }

}  // namespace

TEST_CASE("codeword enumeration") {
    SECTION("<x+1> in Z4[x]/(x^2-1) is exactly {0, x+1, 2x+2, 3x+3}") {
        Code c(amb_z4_x2m1(), {P(Z4(), {1, 1})});
        auto words = enumerate_codewords(c, {});
        std::set<std::string> got;
        for (auto& w : words) got.insert(w.str());
        REQUIRE(got == std::set<std::string>{"0", "1*x^1 + 1", "2*x^1 + 2", "3*x^1 + 3"});
    }
    SECTION("zero code has only the zero word") {
        Code c(amb_z4_x2m1(), {});
        REQUIRE(enumerate_codewords(c, {}).size() == 1);
    }
    SECTION("whole ring has 256 words") {
        Code c(amb_z4_x2m1(), {Poly::one(Z4())});
        auto words = enumerate_codewords(c, {});
        std::set<std::string> distinct;
        for (auto& w : words) distinct.insert(w.str());
        REQUIRE(words.size() == 256);
        REQUIRE(distinct.size() == 256);  // no duplicates
    }
    SECTION("count always equals the pivot-valuation formula") {
        std::mt19937_64 rng(43);
        for (int it = 0; it < 30; ++it) {
            Code c = verify::detail::random_code(amb_z4_x4m1(), rng);
            auto words = enumerate_codewords(c, {});
            std::set<std::string> distinct;
            for (auto& w : words) distinct.insert(w.str());
            REQUIRE(words.size() == distinct.size());
            REQUIRE(words.size() == c.cardinality_capped(u64(1) << 32));
        }
    }
    SECTION("budget aborts cleanly") {
        EnumerationBudget tiny;
        tiny.max_codewords = 10;
        Code c(amb_z4_x2m1(), {Poly::one(Z4())});
        REQUIRE_THROWS_AS(enumerate_codewords(c, tiny), Error);
    }
}

TEST_CASE("brute minimum weight") {
    CHECK(*brute_min_weight(Code(amb_z4_x2m1(), {P(Z4(), {1, 1})}), {}) == 2);
    CHECK_FALSE(brute_min_weight(Code(amb_z4_x2m1(), {}), {}).has_value());
    CHECK(*brute_min_weight(Code(amb_z4_x4m1(), {P(Z4(), {1, 1}).pow(3)}), {}) == 2);

    SECTION("invariant under unit scaling of the generators") {
        std::mt19937_64 rng(47);
        for (int it = 0; it < 20; ++it) {
            Code c = verify::detail::random_code(amb_z4_x4m1(), rng);
            std::vector<Poly> scaled;
            for (const Poly& g : c.generators()) scaled.push_back(g * Elem::from_int(Z4(), 3));
            Code c2(amb_z4_x4m1(), scaled);
            REQUIRE(brute_min_weight(c, {}) == brute_min_weight(c2, {}));
        }
    }
    SECTION("threaded scan agrees with the single-threaded scan") {
        std::mt19937_64 rng(53);
        EnumerationBudget budget;
        for (int it = 0; it < 10; ++it) {
            Ambient amb = Ambient::make(Z4(), P(Z4(), {-1, 0, 0, 0, 0, 0, 0, 0, 1}));
            Code c = verify::detail::random_code(amb, rng);
            REQUIRE(brute_min_weight(c, budget, 1) == brute_min_weight(c, budget, 4));
        }
    }
}

TEST_CASE("brute torsional degrees") {
    CHECK(brute_torsion_degrees(Code(amb_z4_x2m1(), {P(Z4(), {2}), P(Z4(), {1, 1})}), {})
              .degrees[0] == std::vector<u64>{1, 0});
    CHECK(brute_torsion_degrees(Code(amb_z4_x2m1(), {}), {}).degrees[0] ==
          std::vector<u64>{2, 2});
    CHECK(brute_torsion_degrees(
              Code(amb_z4_x4m1(), {P(Z4(), {1, 1}).pow(3), P(Z4(), {2, 2})}), {})
              .degrees[0] == std::vector<u64>{3, 1});

    SECTION("agrees with the membership-solved profile on random codes") {
        std::mt19937_64 rng(59);
        std::vector<Ambient> ambients = {amb_z4_x4m1(),
                                         Ambient::make(Z9(), P(Z9(), {-1, 0, 0, 1}))};
        for (const Ambient& amb : ambients)
            for (int it = 0; it < 25; ++it) {
                Code c = verify::detail::random_code(amb, rng);
                REQUIRE(c.torsional_degrees().degrees == brute_torsion_degrees(c, {}).degrees);
            }
    }
}

TEST_CASE("ideal equality") {
    Ambient amb = amb_z4_x2m1();
    CHECK(ideals_equal(Code(amb, {P(Z4(), {1, 1})}), Code(amb, {P(Z4(), {3, 3})})));
    CHECK_FALSE(ideals_equal(Code(amb, {P(Z4(), {2})}), Code(amb, {P(Z4(), {1, 1})})));
    Code a(amb, {P(Z4(), {1, 1}), P(Z4(), {2})});
    CHECK(ideals_equal(a, a));
    // <2> and <x+1> are incomparable
    CHECK_FALSE(Code(amb, {P(Z4(), {2})}).contains(P(Z4(), {1, 1})));
    CHECK_FALSE(Code(amb, {P(Z4(), {1, 1})}).contains(P(Z4(), {2})));
}

TEST_CASE("brute chain detection") {
    EnumerationBudget budget;
    CHECK(brute_is_chain(Ambient::make(F2(), P(F2(), {1, 0, 0, 0, 1})), budget));
    CHECK_FALSE(brute_is_chain(amb_z4_x2m1(), budget));
    CHECK(brute_is_chain(Ambient::make(Z4(), P(Z4(), {1, 0, 1})), budget));

    SECTION("matches the closed-form predicate on the small ambients") {
        std::vector<Ambient> list = {
            amb_z4_x2m1(),
            Ambient::make(Z4(), P(Z4(), {1, 0, 1})),
            Ambient::make(Z4(), P(Z4(), {-1, 0, 0, 1})),
            Ambient::make(F3(), P(F3(), {-1, 0, 1})),
        };
        for (const Ambient& amb : list)
            REQUIRE(amb.is_chain_ring() == brute_is_chain(amb, budget));
    }
}

TEST_CASE("distance equals the top torsion projection on samples") {
    std::mt19937_64 rng(61);
    Ambient amb = amb_z4_x4m1();
    for (int it = 0; it < 10; ++it) {
        Code c = verify::detail::random_code(amb, rng);
        if (c.is_zero()) continue;
        // residue-side distance through the last torsion code
        auto lrg = c.last_residue_generator();
        REQUIRE(lrg.has_value());
        Ring res = Z4().residue();
        Ambient res_amb = Ambient::make(res, amb.modulus().project());
        std::optional<u64> d_res = brute_min_weight(Code(res_amb, {*lrg}), {});
        std::optional<u64> d_full = brute_min_weight(c, {});
        if (c.is_whole()) {
            REQUIRE(d_full == 1);
            continue;
        }
        REQUIRE(d_res == d_full);
    }
}
