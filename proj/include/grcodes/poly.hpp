#pragma once

#include <optional>

#include "ring.hpp"

namespace grcodes {

// Dense polynomial over GR(p^a, m), trailing zeros trimmed.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Ring ring) : ring_(std::move(ring)) {}
    Poly(Ring ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
        trim();
    }

    static Poly zero(const Ring& r) { return Poly(r); }
    static Poly one(const Ring& r) { return constant(r, Elem::one(r)); }
    static Poly constant(const Ring& r, Elem e) {
        Poly p(r);
        p.c_.push_back(std::move(e));
        p.trim();
        return p;
    }
    static Poly monomial(const Ring& r, u64 deg, const Elem& coeff) {
        Poly p(r);
        if (!coeff.is_zero()) {
            p.c_.assign(deg + 1, Elem::zero(r));
            p.c_[deg] = coeff;
        }
        return p;
    }
    static Poly x(const Ring& r) { return monomial(r, 1, Elem::one(r)); }

    // coefficients given as integers (constant term first)
    static Poly from_ints(const Ring& r, const std::vector<i64>& cs) {
        std::vector<Elem> v;
        v.reserve(cs.size());
        u64 mod = r.char_pow();
        for (i64 c : cs) {
            i64 red = c % static_cast<i64>(mod);
            if (red < 0) red += static_cast<i64>(mod);
            v.push_back(Elem::from_int(r, static_cast<u64>(red)));
        }
        return Poly(r, std::move(v));
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    const Elem& lead() const { return c_.back(); }
    Elem coeff(u64 i) const { return i < c_.size() ? c_[i] : Elem::zero(ring_); }

    bool is_monic() const { return !c_.empty() && c_.back() == Elem::one(ring_); }
    // regular = not a zero divisor = some coefficient is a unit
    bool is_regular() const {
        for (const Elem& e : c_)
            if (e.is_unit()) return true;
        return false;
    }
    // largest index carrying a unit coefficient (the residue degree)
    int dominant_degree() const {
        for (int i = degree(); i >= 0; --i)
            if (c_[i].is_unit()) return i;
        return -1;
    }

    friend bool operator==(const Poly& x, const Poly& y) {
        return x.ring_.same(y.ring_) && x.c_ == y.c_;
    }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    friend Poly operator+(const Poly& x, const Poly& y) {
        const Ring& r = x.ring_;
        std::vector<Elem> v(std::max(x.c_.size(), y.c_.size()), Elem::zero(r));
        for (size_t i = 0; i < v.size(); ++i) v[i] = x.coeff(i) + y.coeff(i);
        return Poly(r, std::move(v));
    }
    friend Poly operator-(const Poly& x, const Poly& y) {
        const Ring& r = x.ring_;
        std::vector<Elem> v(std::max(x.c_.size(), y.c_.size()), Elem::zero(r));
        for (size_t i = 0; i < v.size(); ++i) v[i] = x.coeff(i) - y.coeff(i);
        return Poly(r, std::move(v));
    }
    Poly operator-() const {
        std::vector<Elem> v(c_.size(), Elem::zero(ring_));
        for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
        return Poly(ring_, std::move(v));
    }
    friend Poly operator*(const Poly& x, const Poly& y) {
        if (x.is_zero() || y.is_zero()) return Poly(x.ring_);
        const Ring& r = x.ring_;
        std::vector<Elem> v(x.c_.size() + y.c_.size() - 1, Elem::zero(r));
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i].is_zero()) continue;
            for (size_t j = 0; j < y.c_.size(); ++j) v[i + j] = v[i + j] + x.c_[i] * y.c_[j];
        }
        return Poly(r, std::move(v));
    }
    friend Poly operator*(const Poly& x, const Elem& s) {
        std::vector<Elem> v(x.c_.size(), Elem::zero(x.ring_));
        for (size_t i = 0; i < x.c_.size(); ++i) v[i] = x.c_[i] * s;
        return Poly(x.ring_, std::move(v));
    }

    Poly pow(u64 e) const {
        Poly r = Poly::one(ring_);
        Poly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    Poly project() const {
        Ring res = ring_.residue();
        std::vector<Elem> v;
        v.reserve(c_.size());
        for (const Elem& e : c_) v.push_back(e.project());
        return Poly(res, std::move(v));
    }

    Poly lift_to(const Ring& target) const {
        std::vector<Elem> v;
        v.reserve(c_.size());
        for (const Elem& e : c_) v.push_back(e.lift_to(target));
        return Poly(target, std::move(v));
    }

    bool divisible_by_p() const {
        for (const Elem& e : c_)
            if (!e.divisible_by_p()) return false;
        return true;
    }
    Poly shift_down(u64 k) const {
        std::vector<Elem> v;
        v.reserve(c_.size());
        for (const Elem& e : c_) v.push_back(e.shift_down(k));
        return Poly(ring_, std::move(v));
    }
    Poly times_p_power(u64 k) const {
        std::vector<Elem> v;
        v.reserve(c_.size());
        for (const Elem& e : c_) v.push_back(e.times_p_power(k));
        return Poly(ring_, std::move(v));
    }

    // number of nonzero coefficients (Hamming weight over the ring alphabet)
    u64 weight() const {
        u64 w = 0;
        for (const Elem& e : c_)
            if (!e.is_zero()) ++w;
        return w;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            bool scalar = true;
            for (size_t j = 1; j < c_[i].coeffs().size(); ++j)
                if (c_[i].coeffs()[j] != 0) scalar = false;
            if (scalar)
                os << c_[i].coeffs()[0];
            else
                os << c_[i].str();
            if (i > 0) os << "*x^" << i;
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Ring ring_;
    std::vector<Elem> c_;
};

struct DivMod {
    Poly quot;
    Poly rem;
};

namespace detail {

// classical division over the residue field; divisor nonzero
inline DivMod field_divmod(const Poly& f, const Poly& d) {
    const Ring& r = f.ring();
    assert(r.is_field() && !d.is_zero());
    Elem lead_inv = d.lead().inv();
    std::vector<Elem> rem(f.coeffs());
    std::vector<Elem> quot;
    int dd = d.degree();
    if (f.degree() >= dd) quot.assign(f.degree() - dd + 1, Elem::zero(r));
    for (int k = f.degree(); k >= dd; --k) {
        if (rem[k].is_zero()) continue;
        Elem q = rem[k] * lead_inv;
        quot[k - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] = rem[k - dd + j] - q * d.coeff(j);
    }
    return {Poly(r, std::move(quot)), Poly(r, std::move(rem))};
}

}  // namespace detail

// Division with remainder by a regular divisor: f = q*d + r with r = 0 or
// deg(r) < deg(d). Works one p-layer at a time; on each layer the residues
// are divided by the divisor's residue, whose degree is the dominant degree.
inline DivMod divmod(const Poly& f, const Poly& d) {
    if (!d.is_regular()) fail(Err::DivisorNotRegular, "divmod: divisor has no unit coefficient");
    const Ring& r = f.ring();
    if (r.is_field()) return detail::field_divmod(f, d);
    Poly dbar = d.project();
    Poly cur = f;
    Poly quot = Poly::zero(r);
    Poly rem = Poly::zero(r);
    for (u64 k = 0; k < r.a(); ++k) {
        if (cur.is_zero()) break;
        Poly curk = cur.shift_down(k);
        DivMod dm = detail::field_divmod(curk.project(), dbar);
        Poly qk = dm.quot.lift_to(r);
        Poly rk = dm.rem.lift_to(r);
        quot = quot + qk.times_p_power(k);
        rem = rem + rk.times_p_power(k);
        cur = cur - (qk * d + rk).times_p_power(k);
    }
    assert(cur.is_zero());
    return {quot, rem};
}

inline Poly poly_mod(const Poly& f, const Poly& d) { return divmod(f, d).rem; }

inline Poly poly_powmod(const Poly& base, u64 e, const Poly& mod) {
    Poly r = poly_mod(Poly::one(base.ring()), mod);
    Poly b = poly_mod(base, mod);
    while (e) {
        if (e & 1) r = poly_mod(r * b, mod);
        b = poly_mod(b * b, mod);
        e >>= 1;
    }
    return r;
}

}  // namespace grcodes
