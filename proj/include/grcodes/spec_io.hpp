#pragma once

#include <cctype>
#include <fstream>

#include <json.hpp>

#include "char_p2.hpp"
#include "distance.hpp"
#include "grcodes.hpp"

namespace grcodes::io {

using nlohmann::json;

// elements serialize as arrays of base-10 coefficient strings, little-endian
inline json elem_to_json(const Elem& e) {
    json a = json::array();
    for (u64 c : e.coeffs()) a.push_back(std::to_string(c));
    return a;
}

inline json poly_to_json(const Poly& f) {
    json a = json::array();
    for (const Elem& e : f.coeffs()) a.push_back(elem_to_json(e));
    return a;
}

inline json ring_to_json(const Ring& r) {
    json j;
    j["p"] = r.p();
    j["a"] = r.a();
    j["m"] = r.m();
    j["modulus"] = r.modulus();
    return j;
}

inline u64 coeff_from_json(const json& v) {
    if (v.is_number_unsigned()) return v.get<u64>();
    if (v.is_number_integer()) {
        i64 x = v.get<i64>();
        if (x >= 0) return static_cast<u64>(x);
        fail(Err::ParseError, "negative coefficient without ring context");
    }
    if (v.is_string()) {
        try {
            return std::stoull(v.get<std::string>());
        } catch (...) {
            fail(Err::ParseError, "bad coefficient string");
        }
    }
    fail(Err::ParseError, "coefficient must be a number or a base-10 string");
}

inline i64 signed_coeff_from_json(const json& v) {
    if (v.is_number_integer()) return v.get<i64>();
    if (v.is_string()) {
        try {
            return std::stoll(v.get<std::string>());
        } catch (...) {
            fail(Err::ParseError, "bad coefficient string");
        }
    }
    fail(Err::ParseError, "coefficient must be a number or a base-10 string");
}

inline Elem elem_from_json(const Ring& r, const json& v) {
    u64 mod = r.char_pow();
    auto reduce = [&](i64 x) {
        i64 red = x % static_cast<i64>(mod);
        if (red < 0) red += static_cast<i64>(mod);
        return static_cast<u64>(red);
    };
    std::vector<u64> cs(r.m(), 0);
    if (v.is_array()) {
        if (v.size() > r.m()) fail(Err::ParseError, "element has too many coordinates");
        for (size_t i = 0; i < v.size(); ++i) cs[i] = reduce(signed_coeff_from_json(v[i]));
    } else {
        cs[0] = reduce(signed_coeff_from_json(v));
    }
    return Elem(r, cs);
}

inline Poly poly_from_json(const Ring& r, const json& v) {
    if (!v.is_array()) fail(Err::ParseError, "polynomial must be a coefficient array");
    std::vector<Elem> cs;
    for (const json& c : v) cs.push_back(elem_from_json(r, c));
    return Poly(r, std::move(cs));
}

inline Ring ring_from_json(const json& j) {
    if (!j.contains("p") || !j.contains("a") || !j.contains("m"))
        fail(Err::ParseError, "ring needs fields p, a, m");
    u64 p = j.at("p").get<u64>();
    u64 a = j.at("a").get<u64>();
    u64 m = j.at("m").get<u64>();
    if (j.contains("modulus") && !j.at("modulus").is_null()) {
        std::vector<u64> mod;
        for (const json& c : j.at("modulus")) mod.push_back(coeff_from_json(c));
        return Ring::make(p, a, m, &mod);
    }
    return Ring::make(p, a, m);
}

// ---- symbolic generator grammar ----
// expr    := ['-'] product (('+'|'-') product)*
// product := power (['*'] power)*
// power   := primary ['^' uint]
// primary := '(' expr ')' | 'x' | 'p' | uint
namespace detail {

class GenParser {
  public:
    GenParser(const Ring& ring, const std::string& text) : r_(ring), s_() {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }

    Poly parse() {
        Poly e = expr();
        if (pos_ != s_.size()) fail(Err::ParseError, "trailing input in generator: " + s_);
        return e;
    }

  private:
    Poly expr() {
        bool neg = accept('-');
        Poly acc = product();
        if (neg) acc = -acc;
        while (pos_ < s_.size() && (peek() == '+' || peek() == '-')) {
            char op = s_[pos_++];
            Poly rhs = product();
            acc = op == '+' ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Poly product() {
        Poly acc = power();
        while (pos_ < s_.size()) {
            if (peek() == '*') {
                ++pos_;
                acc = acc * power();
            } else if (peek() == '(' || peek() == 'x' || peek() == 'p') {
                acc = acc * power();  // juxtaposition, e.g. "2x" or "2(x-1)"
            } else {
                break;
            }
        }
        return acc;
    }

    Poly power() {
        Poly base = primary();
        if (pos_ < s_.size() && peek() == '^') {
            ++pos_;
            base = base.pow(number());
        }
        return base;
    }

    Poly primary() {
        if (pos_ >= s_.size()) fail(Err::ParseError, "unexpected end of generator: " + s_);
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly e = expr();
            if (!accept(')')) fail(Err::ParseError, "missing ')' in generator: " + s_);
            return e;
        }
        if (c == 'x') {
            ++pos_;
            return Poly::x(r_);
        }
        if (c == 'p') {
            ++pos_;
            return Poly::constant(r_, Elem::from_int(r_, r_.p() % r_.char_pow()));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(r_, Elem::from_int(r_, number() % r_.char_pow()));
        fail(Err::ParseError, std::string("unexpected character '") + c + "' in generator: " + s_);
    }

    u64 number() {
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail(Err::ParseError, "expected a number in generator: " + s_);
        u64 n = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek())))
            n = n * 10 + static_cast<u64>(s_[pos_++] - '0');
        return n;
    }

    char peek() const { return s_[pos_]; }
    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Ring r_;
    std::string s_;
    size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_generator(const Ring& ring, const std::string& text) {
    return detail::GenParser(ring, text).parse();
}

struct CodeSpec {
    Ring ring;
    Poly modulus;
    std::vector<Poly> generators;
};

inline Poly modulus_from_json(const Ring& r, const json& f) {
    if (f.is_array()) return poly_from_json(r, f);
    if (f.is_string()) return parse_generator(r, f.get<std::string>());
    if (f.is_object()) {
        std::string form = f.at("form").get<std::string>();
        u64 length = f.at("length").get<u64>();
        Poly xn = Poly::monomial(r, length, Elem::one(r));
        if (form == "cyclic") return xn - Poly::one(r);
        if (form == "negacyclic") return xn + Poly::one(r);
        if (form == "lambda-cyclic") {
            if (!f.contains("lambda")) fail(Err::ParseError, "lambda-cyclic needs lambda");
            Elem lambda = elem_from_json(r, f.at("lambda"));
            return xn - Poly::constant(r, lambda);
        }
        fail(Err::ParseError, "unknown modulus form: " + form);
    }
    fail(Err::ParseError, "f must be a coefficient array, a string, or a named form");
}

inline CodeSpec parse_code_spec(const json& j) {
    CodeSpec spec;
    spec.ring = ring_from_json(j.at("ring"));
    spec.modulus = modulus_from_json(spec.ring, j.at("f"));
    if (j.contains("generators"))
        for (const json& g : j.at("generators")) {
            if (g.is_string())
                spec.generators.push_back(parse_generator(spec.ring, g.get<std::string>()));
            else
                spec.generators.push_back(poly_from_json(spec.ring, g));
        }
    return spec;
}

inline CodeSpec load_code_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::ParseError, "cannot open spec file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Err::ParseError, std::string("bad JSON: ") + e.what());
    }
    return parse_code_spec(j);
}

// ---- report serialization ----

inline json distance_report_to_json(const DistanceReport& rep) {
    json j;
    j["theorem"] = rep.theorem;
    j["case"] = rep.case_tag;
    if (rep.distance)
        j["distance"] = *rep.distance;
    else
        j["distance"] = nullptr;  // zero code
    if (rep.oracle_checked) j["oracle_checked"] = *rep.oracle_checked;
    if (!rep.params.empty()) j["params"] = rep.params;
    return j;
}

inline json p2_form_to_json(const P2CanonicalForm& form) {
    json j;
    switch (form.variant) {
        case P2Variant::Zero: j["variant"] = "zero"; break;
        case P2Variant::Whole: j["variant"] = "whole"; break;
        case P2Variant::PHn: j["variant"] = "p-h^n"; break;
        case P2Variant::Hk: j["variant"] = "h^k"; break;
        case P2Variant::HkTail: j["variant"] = "h^k+p-h^l-delta"; break;
        case P2Variant::HkPHn: j["variant"] = "h^k,p-h^n"; break;
        case P2Variant::HkTailPHn: j["variant"] = "h^k+p-h^l-delta,p-h^n"; break;
    }
    j["k"] = form.k;
    j["l"] = form.l;
    j["n"] = form.n;
    json digs = json::array();
    for (const Poly& d : form.delta_digits) digs.push_back(poly_to_json(d));
    j["delta_digits"] = digs;
    return j;
}

}  // namespace grcodes::io
