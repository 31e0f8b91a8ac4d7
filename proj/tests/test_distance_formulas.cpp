#include <catch2/catch_amalgamated.hpp>

#include <grcodes/distance.hpp>
#include <grcodes/oracle.hpp>

#include "test_util.hpp"

using namespace grcodes;

TEST_CASE("binomial power weight") {
    CHECK(weight_of_binomial_power(0, 2) == 1);
    CHECK(weight_of_binomial_power(5, 2) == 4);  // (x+1)^5 = x^5+x^4+x+1 over F_2
    CHECK(weight_of_binomial_power(8, 2) == 2);
    CHECK(weight_of_binomial_power(9, 3) == 2);
    CHECK(weight_of_binomial_power(25, 5) == 2);

    SECTION("matches literal expansion for small exponents") {
        for (u64 p : {2ull, 3ull, 5ull}) {
            Ring field = Ring::make(p, 1, 1);
            Poly base = P(field, {1, 1});
            Poly cur = Poly::one(field);
            for (u64 n = 0; n < 64; ++n) {
                REQUIRE(cur.weight() == weight_of_binomial_power(n, p));
                cur = cur * base;
            }
        }
    }
}

TEST_CASE("index partition") {
    SECTION("examples") {
        PartitionCase c = partition_index(4, 3, 2);
        REQUIRE(c.kind == PartKind::Beta);
        REQUIRE(c.beta == 1);
        c = partition_index(7, 3, 2);
        REQUIRE(c.kind == PartKind::TauK);
        REQUIRE(c.tau == 1);
        REQUIRE(c.k == 1);
        REQUIRE(partition_index(0, 5, 2).kind == PartKind::Zero);
        REQUIRE(partition_index(25, 5, 2).kind == PartKind::Full);
        REQUIRE_THROWS_AS(partition_index(26, 5, 2), Error);
    }
    SECTION("total and consistent with the literal range bounds") {
        for (u64 p : {2ull, 3ull, 5ull})
            for (u64 s = 1; s <= 3; ++s) {
                u64 ps = ipow(p, s), ps1 = ipow(p, s - 1);
                for (u64 i = 0; i <= ps; ++i) {
                    PartitionCase c = partition_index(i, p, s);
                    switch (c.kind) {
                        case PartKind::Zero: REQUIRE(i == 0); break;
                        case PartKind::Full: REQUIRE(i == ps); break;
                        case PartKind::Low:
                            REQUIRE(1 <= i);
                            REQUIRE(i <= ps1);
                            break;
                        case PartKind::Beta:
                            REQUIRE(1 <= c.beta);
                            REQUIRE(c.beta <= p - 2);
                            REQUIRE(c.beta * ps1 + 1 <= i);
                            REQUIRE(i <= (c.beta + 1) * ps1);
                            break;
                        case PartKind::TauK:
                            REQUIRE(1 <= c.tau);
                            REQUIRE(c.tau <= p - 1);
                            REQUIRE(1 <= c.k);
                            REQUIRE(c.k <= s - 1);
                            REQUIRE(ps - ipow(p, s - c.k) + (c.tau - 1) * ipow(p, s - c.k - 1) + 1 <=
                                    i);
                            REQUIRE(i <= ps - ipow(p, s - c.k) + c.tau * ipow(p, s - c.k - 1));
                            break;
                    }
                }
            }
    }
}

TEST_CASE("length eta p^s distance") {
    CHECK(eta_ps_distance(2, 1, 3, 1, 5).distance == 4);
    CHECK(eta_ps_distance(3, 1, 2, 1, 4).distance == 3);
    CHECK(eta_ps_distance(3, 1, 2, 1, 8).distance == 9);
    CHECK(eta_ps_distance(2, 1, 3, 1, 0).distance == 1);
    CHECK_FALSE(eta_ps_distance(2, 1, 3, 1, 8).distance.has_value());

    SECTION("monotone in the exponent away from the zero code") {
        for (u64 p : {2ull, 3ull, 5ull})
            for (u64 s = 1; s <= 3; ++s) {
                u64 prev = 0;
                for (u64 i = 0; i < ipow(p, s); ++i) {
                    u64 d = *eta_ps_distance(p, 1, s, 1, i).distance;
                    REQUIRE(d >= prev);
                    prev = d;
                }
            }
    }
}

TEST_CASE("length 2 eta p^s distance table") {
    CHECK(two_eta_ps_distance(3, 1, 1, 1, 2, 1).distance == 3);
    CHECK(two_eta_ps_distance(3, 1, 1, 1, 0, 0).distance == 1);
    CHECK(two_eta_ps_distance(3, 1, 2, 1, 5, 4).distance == 3);  // min{beta+2, 2(beta'+2)}
    CHECK_FALSE(two_eta_ps_distance(3, 1, 1, 1, 3, 3).distance.has_value());
    CHECK_THROWS_AS(two_eta_ps_distance(2, 1, 1, 1, 0, 0), Error);

    SECTION("row tags") {
        CHECK(two_eta_ps_distance(3, 1, 1, 1, 2, 1).case_tag == "3");
        CHECK(two_eta_ps_distance(3, 1, 2, 1, 9, 4).case_tag == "10");
        CHECK(two_eta_ps_distance(3, 1, 2, 1, 7, 7).case_tag == "7");
        CHECK(two_eta_ps_distance(3, 1, 2, 1, 8, 7).case_tag == "8");
    }
    SECTION("symmetric in (i, j)") {
        for (u64 p : {3ull, 5ull})
            for (u64 s = 1; s <= 2; ++s) {
                u64 ps = ipow(p, s);
                for (u64 i = 0; i <= ps; ++i)
                    for (u64 j = 0; j <= ps; ++j)
                        REQUIRE(two_eta_ps_distance(p, 1, s, 1, i, j).distance ==
                                two_eta_ps_distance(p, 1, s, 1, j, i).distance);
            }
    }
}

TEST_CASE("x^2 + 1 irreducibility criterion") {
    CHECK(x2_plus_1_irreducible(3, 1));
    CHECK_FALSE(x2_plus_1_irreducible(5, 1));
    CHECK_FALSE(x2_plus_1_irreducible(3, 2));
    CHECK(x2_plus_1_irreducible(7, 3));
}

TEST_CASE("negacyclic length 2 p^s distances") {
    CHECK(negacyclic_2ps_distance(3, 1, 1, 1).distance == 2);
    CHECK(negacyclic_2ps_distance(3, 1, 2, 7).distance == 6);
    CHECK_THROWS_AS(negacyclic_2ps_distance(5, 1, 1, 1), Error);
}

TEST_CASE("weight retaining inequality") {
    Ring f2 = F2(), f3 = F3();
    CHECK(weight_retaining_check(Poly::one(f3), 1, Elem::one(f3), 4));
    CHECK(weight_retaining_check(P(f2, {1, 1}), 1, Elem::one(f2), 2));
    SECTION("random instances over F_3") {
        std::mt19937_64 rng(3);
        for (int it = 0; it < 100; ++it) {
            std::vector<Elem> cs;
            for (u64 i = 0; i <= rng() % 12; ++i)
                cs.push_back(Elem::from_int(f3, rng() % 3));
            Poly g(f3, cs);
            REQUIRE(weight_retaining_check(g, 1 + rng() % 2, Elem::from_int(f3, 1 + rng() % 2),
                                           rng() % 32));
        }
    }
}

TEST_CASE("product weight identity") {
    Ring f3 = F3();
    CHECK(product_weight_identity_check(f3, 1, Elem::from_int(f3, 1), Elem::from_int(f3, 2), 1, 1));
    // i = 1: both sides 2 * w(x + gamma) = 4
    Poly lhs = P(f3, {1, 1}).pow(3) * P(f3, {2, 1});
    REQUIRE(lhs.weight() == 4);
    Ring f2 = F2();
    CHECK(product_weight_identity_check(f2, 1, Elem::one(f2), Elem::one(f2), 1, 2));
    CHECK_THROWS_AS(
        product_weight_identity_check(f3, 1, Elem::one(f3), Elem::one(f3), 0, 1), Error);
}

TEST_CASE("lower-bound inequalities by exhaustion") {
    SECTION("beta variant") {
        for (u64 p : {3ull, 5ull})
            for (u64 s = 1; s <= 3; ++s) {
                u64 ps = ipow(p, s), ps1 = ipow(p, s - 1);
                for (u64 beta = 1; beta + 2 <= p; ++beta)
                    for (u64 m = 0; m + beta * ps1 + 1 < ps; ++m)
                        REQUIRE(weight_of_binomial_power(m + beta * ps1 + 1, p) >= beta + 2);
            }
    }
    SECTION("tau-k variant") {
        for (u64 p : {2ull, 3ull, 5ull})
            for (u64 s = 2; s <= 3; ++s)
                for (u64 k = 1; k + 1 <= s; ++k)
                    for (u64 tau = 1; tau <= p - 1; ++tau) {
                        u64 lead = ipow(p, s) - ipow(p, s - k) + (tau - 1) * ipow(p, s - k - 1) + 1;
                        u64 bound = ipow(p, s - k) - (tau - 1) * ipow(p, s - k - 1) - 1;
                        for (u64 m = 0; m < bound; ++m)
                            REQUIRE(weight_of_binomial_power(m + lead, p) >= (tau + 1) * ipow(p, k));
                    }
    }
}

TEST_CASE("distance lifting to Galois rings") {
    SECTION("eta p^s shape over Z4") {
        Ring r = Z4();
        Ambient amb = Ambient::make(r, P(r, {-1, 0, 0, 0, 1}));
        CHECK(gr_distance_eta_ps(Code(amb, {P(r, {1, 1}).pow(3)})).distance == 2);
        CHECK(gr_distance_eta_ps(Code(amb, {Poly::one(r)})).distance == 1);
        CHECK(gr_distance_eta_ps(Code(amb, {P(r, {2, 2})})).distance == 2);
        CHECK_FALSE(gr_distance_eta_ps(Code(amb, {})).distance.has_value());
    }
    SECTION("2 eta p^s shape over Z9") {
        Ring r = Z9();
        Ambient amb = Ambient::make(r, Poly::monomial(r, 6, Elem::one(r)) - Poly::one(r));
        Poly minus = P(r, {-1, 1}), plus = P(r, {1, 1});
        CHECK(gr_distance_2eta_ps(Code(amb, {minus * plus})).distance == 2);
        CHECK(gr_distance_2eta_ps(Code(amb, {Poly::one(r)})).distance == 1);
        CHECK(gr_distance_2eta_ps(Code(amb, {minus.pow(2) * plus})).distance == 3);
    }
    SECTION("wrong shapes are rejected") {
        Ring r = Z4();
        Ambient amb3 = Ambient::make(r, P(r, {-1, 0, 0, 1}));  // two blocks, p = 2
        REQUIRE_THROWS_AS(gr_distance_2eta_ps(Code(amb3, {Poly::one(r)})), Error);
        REQUIRE_THROWS_AS(gr_distance_eta_ps(Code(amb3, {Poly::one(r)})), Error);
    }
}
