#include <catch2/catch_amalgamated.hpp>

#include <grcodes/spec_io.hpp>

#include "test_util.hpp"

using namespace grcodes;
using nlohmann::json;

TEST_CASE("symbolic generator grammar") {
    Ring r = Z4();
    SECTION("powers of a shifted base") {
        REQUIRE(io::parse_generator(r, "(x-1)^3") == P(r, {-1, 1}).pow(3));
        REQUIRE(io::parse_generator(r, "(x-1)^0") == Poly::one(r));
    }
    SECTION("p-scaled products") {
        REQUIRE(io::parse_generator(r, "p*(x-1)^2") == P(r, {-1, 1}).pow(2).times_p_power(1));
        REQUIRE(io::parse_generator(r, "p^1*(x-1)") == P(r, {-1, 1}).times_p_power(1));
    }
    SECTION("two-base products") {
        Ring z9 = Z9();
        REQUIRE(io::parse_generator(z9, "(x^2+1)^2*(x^2-1)^1") ==
                P(z9, {1, 0, 1}).pow(2) * P(z9, {-1, 0, 1}));
    }
    SECTION("plain polynomials and juxtaposition") {
        REQUIRE(io::parse_generator(r, "2x+1") == P(r, {1, 2}));
        REQUIRE(io::parse_generator(r, "3*(x+1)") == P(r, {3, 3}));
        REQUIRE(io::parse_generator(r, " ( x - 1 ) ^ 2 ") == P(r, {-1, 1}).pow(2));
    }
    SECTION("parse errors") {
        REQUIRE_THROWS_AS(io::parse_generator(r, "(x-1"), Error);
        REQUIRE_THROWS_AS(io::parse_generator(r, "x^"), Error);
        REQUIRE_THROWS_AS(io::parse_generator(r, "y+1"), Error);
    }
}

TEST_CASE("element and polynomial serialization") {
    Ring r = GR42();
    Elem e(r, {3, 2});
    json je = io::elem_to_json(e);
    REQUIRE(je == json::array({"3", "2"}));
    REQUIRE(io::elem_from_json(r, je) == e);
    REQUIRE(io::elem_from_json(r, json::array({3, 2})) == e);  // numbers also accepted
    REQUIRE(io::elem_from_json(r, json(-1)) == Elem::from_int(r, 3));

    Poly f(r, {Elem(r, {1, 0}), Elem(r, {0, 1})});
    json jf = io::poly_to_json(f);
    REQUIRE(io::poly_from_json(r, jf) == f);
}

TEST_CASE("ring serialization round trip") {
    for (Ring r : {Z4(), Z9(), GR42()}) {
        json j = io::ring_to_json(r);
        Ring back = io::ring_from_json(j);
        REQUIRE(back.p() == r.p());
        REQUIRE(back.a() == r.a());
        REQUIRE(back.m() == r.m());
        REQUIRE(back.modulus() == r.modulus());
    }
}

TEST_CASE("code spec parsing") {
    SECTION("named cyclic form with symbolic generators") {
        json j = {{"ring", {{"p", 2}, {"a", 2}, {"m", 1}}},
                  {"f", {{"form", "cyclic"}, {"length", 4}}},
                  {"generators", {"(x-1)^3"}}};
        io::CodeSpec spec = io::parse_code_spec(j);
        REQUIRE(spec.modulus == P(Z4(), {-1, 0, 0, 0, 1}));
        REQUIRE(spec.generators.size() == 1);
        REQUIRE(spec.generators[0] == P(Z4(), {-1, 1}).pow(3));
    }
    SECTION("negacyclic and lambda-cyclic forms") {
        json j1 = {{"ring", {{"p", 2}, {"a", 2}, {"m", 1}}},
                   {"f", {{"form", "negacyclic"}, {"length", 2}}}};
        REQUIRE(io::parse_code_spec(j1).modulus == P(Z4(), {1, 0, 1}));
        json j2 = {{"ring", {{"p", 3}, {"a", 2}, {"m", 1}}},
                   {"f", {{"form", "lambda-cyclic"}, {"length", 6}, {"lambda", 8}}}};
        REQUIRE(io::parse_code_spec(j2).modulus == P(Z9(), {-8, 0, 0, 0, 0, 0, 1}));
    }
    SECTION("raw coefficient lists") {
        json j = {{"ring", {{"p", 3}, {"a", 2}, {"m", 1}}},
                  {"f", {-1, 0, 1}},
                  {"generators", {json::array({1, 1})}}};
        io::CodeSpec spec = io::parse_code_spec(j);
        REQUIRE(spec.modulus == P(Z9(), {-1, 0, 1}));
        REQUIRE(spec.generators[0] == P(Z9(), {1, 1}));
    }
}

TEST_CASE("analysis round trip: standard form regenerates the parsed code") {
    json j = {{"ring", {{"p", 2}, {"a", 2}, {"m", 1}}},
              {"f", {{"form", "cyclic"}, {"length", 4}}},
              {"generators", {"(x-1)^3", "p*(x-1)"}}};
    io::CodeSpec spec = io::parse_code_spec(j);
    Ambient amb = Ambient::make(spec.ring, spec.modulus);
    Code code(amb, spec.generators);
    // serialize the merged standard form, re-ingest, compare ideals
    const StandardFormBasis& basis = code.standard_form_basis();
    std::vector<Poly> regen;
    for (const MergedGen& g : basis.merged) {
        json pj = io::poly_to_json(g.g);
        regen.push_back(io::poly_from_json(spec.ring, pj).times_p_power(g.j));
    }
    REQUIRE(ideals_equal(code, Code(amb, regen)));
}

TEST_CASE("distance report serialization") {
    DistanceReport rep = eta_ps_distance(2, 1, 3, 1, 5);
    json j = io::distance_report_to_json(rep);
    REQUIRE(j["distance"] == 4);
    REQUIRE(j["case"] == "tau-k(1,1)");
    DistanceReport none = eta_ps_distance(2, 1, 3, 1, 8);
    REQUIRE(io::distance_report_to_json(none)["distance"].is_null());
}

TEST_CASE("canonical form serialization") {
    P2CanonicalForm form;
    form.variant = P2Variant::HkTailPHn;
    form.k = 3;
    form.l = 1;
    form.n = 2;
    form.delta_digits = {Poly::one(F2())};
    json j = io::p2_form_to_json(form);
    REQUIRE(j["variant"] == "h^k+p-h^l-delta,p-h^n");
    REQUIRE(j["k"] == 3);
    REQUIRE(j["delta_digits"].size() == 1);
}
