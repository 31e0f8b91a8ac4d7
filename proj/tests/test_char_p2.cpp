#include <catch2/catch_amalgamated.hpp>

#include <grcodes/oracle.hpp>
#include <grcodes/spec_io.hpp>

#include "test_util.hpp"

using namespace grcodes;

namespace {

Ambient cyclic_amb(u64 p, u64 s) {
    Ring r = Ring::make(p, 2, 1);
    return Ambient::make(r, Poly::monomial(r, ipow(p, s), Elem::one(r)) - Poly::one(r));
}

}  // namespace

TEST_CASE("seven-form classification") {
    SECTION("the whole ring") {
        Ambient amb = cyclic_amb(2, 1);
        Code c(amb, {Poly::one(Z4())});
        REQUIRE(classify_p2(c).variant == P2Variant::Whole);
    }
    SECTION("p-multiple generator absorbed: <2x+2, x+1> = <x+1>") {
        Ambient amb = cyclic_amb(2, 1);
        Code c(amb, {P(Z4(), {2, 2}), P(Z4(), {1, 1})});
        P2CanonicalForm form = classify_p2(c);
        REQUIRE(form.variant == P2Variant::Hk);
        REQUIRE(form.k == 1);
    }
    SECTION("<(x+1)^3, 2(x+1)> keeps both generators") {
        Ambient amb = cyclic_amb(2, 2);
        Code c(amb, {P(Z4(), {1, 1}).pow(3), P(Z4(), {2, 2})});
        P2CanonicalForm form = classify_p2(c);
        REQUIRE(form.variant == P2Variant::HkPHn);
        REQUIRE(form.k == 3);
        REQUIRE(form.n == 1);
    }
    SECTION("zero and p-power codes") {
        Ambient amb = cyclic_amb(2, 2);
        REQUIRE(classify_p2(Code(amb, {})).variant == P2Variant::Zero);
        P2CanonicalForm form = classify_p2(Code(amb, {P(Z4(), {2, 2})}));
        REQUIRE(form.variant == P2Variant::PHn);
        REQUIRE(form.n == 1);
    }
    SECTION("wrong characteristic is rejected") {
        Ring z8 = Ring::make(2, 3, 1);
        Ambient amb = Ambient::make(z8, P(z8, {-1, 0, 1}));
        REQUIRE_THROWS_AS(classify_p2(Code(amb, {Poly::one(z8)})), Error);
    }
}

TEST_CASE("classification regenerates every ideal of Z4[x]/(x^4-1)") {
    Ambient amb = cyclic_amb(2, 2);
    FParams2 fp = fparams2_of(amb);
    EnumerationBudget budget;
    auto ideals = enumerate_all_ideals(amb, budget);
    REQUIRE(ideals.size() > 10);
    for (const ZSpan& span : ideals) {
        std::vector<Poly> gens;
        for (const auto& row : span.rows())
            gens.push_back(unflatten_poly(amb.ring(), row, amb.n()));
        Code code(amb, gens);
        P2CanonicalForm form = classify_p2(code);
        Code rebuilt = code_from_p2_form(amb, form);
        REQUIRE(rebuilt.equals(code));
        // torsional degrees from the closed form match the definition
        auto [t0, t1] = torsion_p2(form, fp, amb.ring().residue());
        TorsionProfile brute = brute_torsion_degrees(code, budget);
        REQUIRE(brute.degrees[0] == std::vector<u64>{t0, t1});
    }
}

TEST_CASE("torsional degree formulas") {
    Ring res = F2();
    SECTION("<p h^n> with t = 4") {
        FParams2 fp = cyclic_ps_fparams(2, 1, 2);
        P2CanonicalForm form;
        form.variant = P2Variant::PHn;
        form.n = 1;
        REQUIRE(torsion_p2(form, fp, res) == std::pair<u64, u64>{4, 1});
    }
    SECTION("<h^3> with beta != 0, v = 2") {
        FParams2 fp = cyclic_ps_fparams(2, 1, 2);
        P2CanonicalForm form;
        form.variant = P2Variant::Hk;
        form.k = 3;
        REQUIRE(torsion_p2(form, fp, res) == std::pair<u64, u64>{3, 2});
    }
    SECTION("<h^1> with beta = 0 gives (1, 1)") {
        FParams2 fp;
        fp.t = 4;
        fp.beta_zero = true;
        P2CanonicalForm form;
        form.variant = P2Variant::Hk;
        form.k = 1;
        REQUIRE(torsion_p2(form, fp, res) == std::pair<u64, u64>{1, 1});
    }
    SECTION("digit comparison branch when v = t - k + l") {
        // f = (x+1)^4 + 2(x+1)^2 over Z4 (the cyclic modulus), k = 3, l = 1:
        // v = 2 = t - k + l, so T_1 = min(k, v + z)
        FParams2 fp = cyclic_ps_fparams(2, 1, 2);
        P2CanonicalForm form;
        form.variant = P2Variant::HkTail;
        form.k = 3;
        form.l = 1;
        form.delta_digits = {Poly::one(res)};  // delta = 1 = gamma sequence
        u64 z = digit_mismatch_z(fp, form, res);
        REQUIRE(z == 4);  // sequences agree everywhere
        REQUIRE(torsion_p2(form, fp, res) == std::pair<u64, u64>{3, 3});
    }
}

TEST_CASE("modulus digit parameters for x^(p^s) - 1") {
    SECTION("(2,1,2): t = 4, v = 2, gamma_0 = 1") {
        FParams2 fp = cyclic_ps_fparams(2, 1, 2);
        REQUIRE(fp.t == 4);
        REQUIRE(fp.v == 2);
        REQUIRE(fp.gamma_digits.size() == 1);
        REQUIRE(fp.gamma_digits[0] == Poly::one(F2()));
    }
    SECTION("(2,1,1): t = 2, v = 1, gamma_0 = 1") {
        FParams2 fp = cyclic_ps_fparams(2, 1, 1);
        REQUIRE(fp.t == 2);
        REQUIRE(fp.v == 1);
        REQUIRE(fp.gamma_digits[0] == Poly::one(F2()));
    }
    SECTION("(3,1,1): digits 1, 1") {
        FParams2 fp = cyclic_ps_fparams(3, 1, 1);
        REQUIRE(fp.t == 3);
        REQUIRE(fp.v == 1);
        REQUIRE(fp.gamma_digits.size() == 2);
        REQUIRE(fp.gamma_digits[0] == Poly::one(F3()));
        REQUIRE(fp.gamma_digits[1] == Poly::one(F3()));
    }
    SECTION("recomposition h^t + p h^v beta' equals x^(p^s) - 1 exactly") {
        for (auto [p, s] : std::vector<std::pair<u64, u64>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
            Ring ring = Ring::make(p, 2, 1);
            FParams2 fp = cyclic_ps_fparams(p, 1, s);
            Poly h = P(ring, {-1, 1});
            Poly beta_prime = Poly::zero(ring);
            for (size_t j = 0; j < fp.gamma_digits.size(); ++j)
                beta_prime = beta_prime + h.pow(j) * fp.gamma_digits[j].lift_to(ring);
            Poly lhs = h.pow(fp.t) + (h.pow(fp.v) * beta_prime).times_p_power(1);
            Poly rhs = Poly::monomial(ring, ipow(p, s), Elem::one(ring)) - Poly::one(ring);
            REQUIRE(lhs == rhs);
        }
    }
    SECTION("matches the parameters extracted from the ambient") {
        for (auto [p, s] : std::vector<std::pair<u64, u64>>{{2, 2}, {3, 1}}) {
            FParams2 a = fparams2_of(cyclic_amb(p, s));
            FParams2 b = cyclic_ps_fparams(p, 1, s);
            REQUIRE(a.v == b.v);
            REQUIRE(a.gamma_digits == b.gamma_digits);
        }
    }
}

TEST_CASE("cyclic p^2 distance rule") {
    SECTION("<(x-1)^3> over Z4, s = 2: T_1 = 2, d = 2") {
        P2CanonicalForm form;
        form.variant = P2Variant::Hk;
        form.k = 3;
        DistanceReport rep = cyclic_ps_distance_p2(2, 1, 2, form);
        REQUIRE(rep.params.at("T1") == 2);
        REQUIRE(rep.distance == 2);
    }
    SECTION("zero code reports no distance") {
        P2CanonicalForm form;
        form.variant = P2Variant::Zero;
        REQUIRE_FALSE(cyclic_ps_distance_p2(2, 1, 2, form).distance.has_value());
    }
    SECTION("<(x-1)^2, 2(x-1)>, s = 2: T_1 = 1, d = 2") {
        P2CanonicalForm form;
        form.variant = P2Variant::HkPHn;
        form.k = 2;
        form.n = 1;
        DistanceReport rep = cyclic_ps_distance_p2(2, 1, 2, form);
        REQUIRE(rep.params.at("T1") == 1);
        REQUIRE(rep.distance == 2);
    }
}
