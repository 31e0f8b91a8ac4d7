#include <map>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace grcodes;

namespace {

Poly random_poly(const Ring& r, u64 max_deg, std::mt19937_64& rng) {
    std::vector<Elem> cs;
    for (u64 i = 0; i <= max_deg; ++i) {
        std::vector<u64> v(r.m());
        for (auto& x : v) x = rng() % r.char_pow();
        cs.emplace_back(r, v);
    }
    return Poly(r, std::move(cs));
}

// trial-division oracle over a prime field: peel off the smallest monic
// divisor repeatedly
std::map<std::vector<std::vector<u64>>, u64> trial_division_factorize(Poly f) {
    const Ring& r = f.ring();
    std::map<std::vector<std::vector<u64>>, u64> out;
    f = make_monic(f);
    while (f.degree() > 0) {
        bool found = false;
        for (int d = 1; d <= f.degree() && !found; ++d) {
            u64 count = ipow(r.q(), static_cast<u64>(d));
            for (u64 code = 0; code < count && !found; ++code) {
                std::vector<Elem> cs;
                u64 t = code;
                for (int i = 0; i < d; ++i) {
                    cs.push_back(Elem::from_int(r, t % r.q()));
                    t /= r.q();
                }
                cs.push_back(Elem::one(r));
                Poly cand(r, cs);
                DivMod dm = divmod(f, cand);
                if (dm.rem.is_zero() && (d < f.degree() || cand == f)) {
                    std::vector<std::vector<u64>> key;
                    for (const Elem& e : cand.coeffs()) key.push_back(e.coeffs());
                    out[key] += 1;
                    f = dm.quot;
                    found = true;
                }
            }
        }
        REQUIRE(found);
    }
    return out;
}

}  // namespace

TEST_CASE("division with remainder") {
    Ring r = Z4();
    SECTION("(x^2-1) / (x+1) over Z4") {
        DivMod dm = divmod(P(r, {-1, 0, 1}), P(r, {1, 1}));
        REQUIRE(dm.quot == P(r, {3, 1}));
        REQUIRE(dm.rem.is_zero());
    }
    SECTION("division by one") {
        Poly f = P(r, {2, 3, 1});
        DivMod dm = divmod(f, Poly::one(r));
        REQUIRE(dm.quot == f);
        REQUIRE(dm.rem.is_zero());
    }
    SECTION("(x^3-1) / (x^2+x+1) over Z4") {
        DivMod dm = divmod(P(r, {-1, 0, 0, 1}), P(r, {1, 1, 1}));
        REQUIRE(dm.quot == P(r, {-1, 1}));
        REQUIRE(dm.rem.is_zero());
    }
    SECTION("rejects a non-regular divisor") {
        REQUIRE_THROWS_AS(divmod(P(r, {1, 1}), P(r, {2, 2})), Error);
    }
    SECTION("round trip on random dividends, including non-monic regular divisors") {
        std::mt19937_64 rng(7);
        for (Ring ring : {Z4(), Z9()}) {
            for (int it = 0; it < 200; ++it) {
                Poly f = random_poly(ring, rng() % 8, rng);
                Poly d = random_poly(ring, 1 + rng() % 4, rng);
                if (!d.is_regular()) continue;
                DivMod dm = divmod(f, d);
                REQUIRE(dm.quot * d + dm.rem == f);
                REQUIRE((dm.rem.is_zero() || dm.rem.degree() < d.degree()));
            }
        }
    }
}

TEST_CASE("regularity") {
    Ring r = Z4();
    REQUIRE_FALSE(P(r, {2, 2}).is_regular());
    REQUIRE(P(r, {1, 2}).is_regular());
    REQUIRE_FALSE(Poly::zero(r).is_regular());
}

TEST_CASE("h-adic decomposition") {
    Ring r = Z4();
    Poly h = P(r, {1, 1});
    SECTION("x^2 - 1 = (x+1)^2 + 2(x+1)") {
        HAdicForm form = h_adic_decompose(P(r, {-1, 0, 1}), h);
        REQUIRE(form.terms.size() == 2);
        CHECK(form.terms[0].j == 0);
        CHECK(form.terms[0].i == 2);
        CHECK(form.terms[0].alpha == Poly::one(r));
        CHECK(form.terms[1].j == 1);
        CHECK(form.terms[1].i == 1);
        CHECK(form.terms[1].alpha == Poly::one(r));
    }
    SECTION("zero polynomial gives no terms") {
        REQUIRE(h_adic_decompose(Poly::zero(r), h).terms.empty());
    }
    SECTION("2x = 2 (x+2) with x+2 outside <2, x+1>") {
        HAdicForm form = h_adic_decompose(P(r, {0, 2}), h);
        REQUIRE(form.terms.size() == 1);
        CHECK(form.terms[0].j == 1);
        CHECK(form.terms[0].i == 0);
        CHECK(form.terms[0].alpha == P(r, {2, 1}));
    }
    SECTION("properties on random polynomials") {
        std::mt19937_64 rng(11);
        for (Ring ring : {Z4(), Z9()}) {
            Poly hh = P(ring, {1, 1});
            Poly hbar = hh.project();
            for (int it = 0; it < 200; ++it) {
                Poly g = random_poly(ring, rng() % 9, rng);
                HAdicForm form = h_adic_decompose(g, hh);
                REQUIRE(form.recompose(ring) == g);
                for (size_t e = 0; e + 1 < form.terms.size(); ++e) {
                    REQUIRE(form.terms[e].j < form.terms[e + 1].j);
                    REQUIRE(form.terms[e].i > form.terms[e + 1].i);
                }
                for (const HAdicTerm& term : form.terms) {
                    Poly abar = term.alpha.project();
                    REQUIRE_FALSE(abar.is_zero());
                    REQUIRE_FALSE(poly_mod(abar, hbar).is_zero());  // alpha outside <p, h>
                }
            }
        }
    }
}

TEST_CASE("field factorization") {
    SECTION("x^2 + 1 is irreducible over F_3") {
        auto f = field_factorize(P(F3(), {1, 0, 1}));
        REQUIRE(f.size() == 1);
        REQUIRE(f[0].multiplicity == 1);
        REQUIRE(f[0].factor == P(F3(), {1, 0, 1}));
    }
    SECTION("x^2 - 1 over F_3 splits") {
        auto f = field_factorize(P(F3(), {-1, 0, 1}));
        REQUIRE(f.size() == 2);
        REQUIRE(f[0].factor == P(F3(), {1, 1}));
        REQUIRE(f[1].factor == P(F3(), {2, 1}));
    }
    SECTION("x^8 - 1 over F_2 collapses to (x+1)^8") {
        auto f = field_factorize(P(F2(), {1, 0, 0, 0, 0, 0, 0, 0, 1}));
        REQUIRE(f.size() == 1);
        REQUIRE(f[0].factor == P(F2(), {1, 1}));
        REQUIRE(f[0].multiplicity == 8);
    }
    SECTION("agrees with trial division on random polynomials up to degree 8") {
        std::mt19937_64 rng(13);
        for (Ring field : {F2(), F3()}) {
            for (int it = 0; it < 40; ++it) {
                Poly f = random_poly(field, 1 + rng() % 8, rng);
                if (f.degree() < 1) continue;
                auto fast = field_factorize(f);
                std::map<std::vector<std::vector<u64>>, u64> got;
                Poly product = Poly::constant(field, f.lead());
                for (auto& [factor, mult] : fast) {
                    std::vector<std::vector<u64>> key;
                    for (const Elem& e : factor.coeffs()) key.push_back(e.coeffs());
                    got[key] += mult;
                    product = product * factor.pow(mult);
                }
                REQUIRE(product == f);
                REQUIRE(got == trial_division_factorize(f));
            }
        }
    }
}

TEST_CASE("primary factorization") {
    SECTION("x^2 - 1 over Z9") {
        Ring r = Z9();
        auto fact = primary_factorize(P(r, {-1, 0, 1}));
        REQUIRE(fact.size() == 2);
        REQUIRE(fact.factors[0] == P(r, {1, 1}));
        REQUIRE(fact.factors[1] == P(r, {8, 1}));  // x - 1
        REQUIRE(fact.factors[0] * fact.factors[1] == P(r, {-1, 0, 1}));
    }
    SECTION("x^4 - 1 over Z4 is a single primary block") {
        Ring r = Z4();
        auto fact = primary_factorize(P(r, {-1, 0, 0, 0, 1}));
        REQUIRE(fact.size() == 1);
        REQUIRE(fact.bases[0] == P(r, {1, 1}));
        REQUIRE(fact.mults[0] == 4);
    }
    SECTION("x^3 - 1 over Z4") {
        Ring r = Z4();
        auto fact = primary_factorize(P(r, {-1, 0, 0, 1}));
        REQUIRE(fact.size() == 2);
        REQUIRE(fact.factors[0] * fact.factors[1] == P(r, {-1, 0, 0, 1}));
    }
    SECTION("rejects non-monic and non-regular input") {
        Ring r = Z4();
        REQUIRE_THROWS_AS(primary_factorize(P(r, {1, 2})), Error);
        REQUIRE_THROWS_AS(primary_factorize(P(r, {2, 0, 2})), Error);
    }
    SECTION("product recomposition and primary residues on random moduli") {
        std::mt19937_64 rng(17);
        for (Ring ring : {Z4(), Z9()}) {
            for (int it = 0; it < 60; ++it) {
                Poly f = random_poly(ring, 1 + rng() % 5, rng);
                std::vector<Elem> cs(f.coeffs());
                cs.push_back(Elem::one(ring));  // force monic
                f = Poly(ring, cs);
                auto fact = primary_factorize(f);
                Poly prod = Poly::one(ring);
                for (size_t i = 0; i < fact.size(); ++i) {
                    prod = prod * fact.factors[i];
                    // residue of each factor is a pure power of its base
                    REQUIRE(fact.factors[i].project() ==
                            fact.bases[i].project().pow(fact.mults[i]));
                    REQUIRE(fact.factors[i].is_monic());
                }
                REQUIRE(prod == f);
            }
        }
    }
}

TEST_CASE("CRT idempotents") {
    SECTION("x^2 - 1 over Z9") {
        Ring r = Z9();
        Poly f = P(r, {-1, 0, 1});
        auto fact = primary_factorize(f);
        auto idem = crt_idempotents(f, fact);
        REQUIRE(idem.size() == 2);
        Poly sum = Poly::zero(r);
        for (size_t i = 0; i < idem.size(); ++i) {
            sum = sum + idem[i];
            REQUIRE(poly_mod(idem[i] * idem[i], f) == idem[i]);
            for (size_t j = i + 1; j < idem.size(); ++j)
                REQUIRE(poly_mod(idem[i] * idem[j], f).is_zero());
        }
        REQUIRE(poly_mod(sum, f) == Poly::one(r));
    }
    SECTION("single factor gives the trivial idempotent") {
        Ring r = Z4();
        Poly f = P(r, {-1, 0, 1});
        auto fact = primary_factorize(f);
        auto idem = crt_idempotents(f, fact);
        REQUIRE(idem.size() == 1);
        REQUIRE(idem[0] == Poly::one(r));
    }
    SECTION("x^3 - 1 over Z4: idempotent ideals match the complement factors") {
        Ring r = Z4();
        Poly f = P(r, {-1, 0, 0, 1});
        auto fact = primary_factorize(f);
        auto idem = crt_idempotents(f, fact);
        REQUIRE(idem.size() == 2);
        Poly sum = Poly::zero(r);
        for (auto& e : idem) sum = sum + e;
        REQUIRE(poly_mod(sum, f) == Poly::one(r));
        REQUIRE(poly_mod(idem[0] * idem[1], f).is_zero());
        // <e_i> = <f-hat_i> mod f
        Ambient amb = Ambient::make(r, f);
        Code via_idem(amb, {idem[0]});
        Code via_fhat(amb, {fact.factors[1]});
        REQUIRE(via_idem.equals(via_fhat));
    }
}
