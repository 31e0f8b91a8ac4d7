#pragma once

#include <map>
#include <random>
#include <tuple>

#include "poly.hpp"

namespace grcodes {

inline Poly derivative(const Poly& f) {
    const Ring& r = f.ring();
    if (f.degree() < 1) return Poly::zero(r);
    std::vector<Elem> v;
    v.reserve(f.degree());
    for (int i = 1; i <= f.degree(); ++i)
        v.push_back(f.coeff(i) * Elem::from_int(r, static_cast<u64>(i)));
    return Poly(r, std::move(v));
}

inline Poly make_monic(const Poly& f) {
    if (f.is_zero() || f.is_monic()) return f;
    return f * f.lead().inv();
}

inline Poly field_gcd(Poly x, Poly y) {
    assert(x.ring().is_field());
    while (!y.is_zero()) {
        Poly r = poly_mod(x, y);
        x = y;
        y = r;
    }
    return make_monic(x);
}

// extended Euclid over the residue field: g = u*a + v*b with g monic
inline std::tuple<Poly, Poly, Poly> field_xgcd(const Poly& a, const Poly& b) {
    const Ring& ring = a.ring();
    assert(ring.is_field());
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::one(ring), u1 = Poly::zero(ring);
    Poly v0 = Poly::zero(ring), v1 = Poly::one(ring);
    while (!r1.is_zero()) {
        DivMod dm = divmod(r0, r1);
        Poly r2 = dm.rem;
        Poly u2 = u0 - dm.quot * u1;
        Poly v2 = v0 - dm.quot * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (!r0.is_zero() && !r0.is_monic()) {
        Elem inv = r0.lead().inv();
        r0 = r0 * inv;
        u0 = u0 * inv;
        v0 = v0 * inv;
    }
    return {r0, u0, v0};
}

inline Poly field_inverse_mod(const Poly& a, const Poly& f) {
    auto [g, u, v] = field_xgcd(poly_mod(a, f), f);
    if (g.degree() != 0) fail(Err::NotAUnit, "field_inverse_mod: not coprime to modulus");
    return poly_mod(u, f);
}

inline Poly exact_div(const Poly& f, const Poly& d) {
    DivMod dm = divmod(f, d);
    assert(dm.rem.is_zero());
    return dm.quot;
}

// f(x) = g(x^p) over F_{p^m}: recover g, sending coefficient c to c^(p^(m-1))
inline Poly field_pth_root(const Poly& f) {
    const Ring& r = f.ring();
    u64 p = r.p();
    std::vector<Elem> v;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) {
        Elem c = f.coeff(i);
        v.push_back(c.pow(ipow(p, r.m() - 1)));
    }
    return Poly(r, std::move(v));
}

namespace detail {

struct PolyKey {
    std::vector<std::vector<u64>> c;
    explicit PolyKey(const Poly& f) {
        for (const Elem& e : f.coeffs()) c.push_back(e.coeffs());
    }
    bool operator<(const PolyKey& o) const { return c < o.c; }
};

inline void squarefree_into(const Poly& f, u64 mult, std::map<PolyKey, std::pair<Poly, u64>>& out);

inline void record_factor(const Poly& g, u64 mult, std::map<PolyKey, std::pair<Poly, u64>>& out) {
    PolyKey key(g);
    auto it = out.find(key);
    if (it == out.end())
        out.emplace(key, std::make_pair(g, mult));
    else
        it->second.second += mult;
}

inline void squarefree_into(const Poly& f, u64 mult, std::map<PolyKey, std::pair<Poly, u64>>& out) {
    const Ring& ring = f.ring();
    u64 p = ring.p();
    if (f.degree() < 1) return;
    Poly fp = derivative(f);
    if (fp.is_zero()) {
        squarefree_into(field_pth_root(f), mult * p, out);
        return;
    }
    Poly c = field_gcd(f, fp);
    Poly w = exact_div(f, c);
    u64 i = 1;
    while (w.degree() > 0) {
        Poly y = field_gcd(w, c);
        Poly z = exact_div(w, y);
        if (z.degree() > 0) record_factor(z, mult * i, out);
        w = y;
        c = exact_div(c, y);
        ++i;
    }
    if (c.degree() > 0) squarefree_into(field_pth_root(c), mult * p, out);
}

inline std::vector<std::pair<Poly, u64>> ddf(const Poly& f) {
    // f monic squarefree; returns (product of irreducibles of degree d, d)
    const Ring& ring = f.ring();
    u64 q = ring.q();
    std::vector<std::pair<Poly, u64>> out;
    Poly g = f;
    Poly h = poly_mod(Poly::x(ring), g);
    u64 d = 0;
    while (g.degree() > 0) {
        ++d;
        if (2 * d > static_cast<u64>(g.degree())) {
            out.emplace_back(g, static_cast<u64>(g.degree()));
            break;
        }
        h = poly_powmod(h, q, g);
        Poly diff = h - Poly::x(ring);
        Poly G = field_gcd(diff, g);
        if (G.degree() > 0) {
            out.emplace_back(G, d);
            g = exact_div(g, G);
            h = poly_mod(h, g);
        }
    }
    return out;
}

inline Poly random_poly(const Ring& ring, u64 max_deg, std::mt19937_64& rng) {
    std::vector<Elem> v;
    for (u64 i = 0; i <= max_deg; ++i) {
        std::vector<u64> cs(ring.m());
        for (auto& x : cs) x = rng() % ring.p();
        v.emplace_back(ring, cs);
    }
    return Poly(ring, std::move(v));
}

inline void edf(const Poly& f, u64 d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const Ring& ring = f.ring();
    if (static_cast<u64>(f.degree()) == d) {
        out.push_back(make_monic(f));
        return;
    }
    u64 q = ring.q();
    while (true) {
        Poly r = random_poly(ring, static_cast<u64>(f.degree() - 1), rng);
        if (r.degree() < 1) continue;
        Poly w;
        if (ring.p() == 2) {
            // trace map into F_2
            Poly t = poly_mod(r, f);
            Poly acc = t;
            u64 steps = ring.m() * d;
            for (u64 i = 1; i < steps; ++i) {
                t = poly_mod(t * t, f);
                acc = acc + t;
            }
            w = acc;
        } else {
            u64 e = (ipow(q, d) - 1) / 2;
            w = poly_powmod(r, e, f) - Poly::one(ring);
        }
        Poly g = field_gcd(w, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, rng, out);
            edf(exact_div(f, g), d, rng, out);
            return;
        }
    }
}

}  // namespace detail

struct FieldFactor {
    Poly factor;  // monic irreducible
    u64 multiplicity;
};

// Full factorization over F_{p^m}: monic irreducible factors with
// multiplicities; the product times the leading unit recovers f. The
// equal-degree splitting is randomized with a fixed seed for reproducibility.
inline std::vector<FieldFactor> field_factorize(const Poly& f_in) {
    const Ring& ring = f_in.ring();
    assert(ring.is_field());
    if (f_in.is_zero()) fail(Err::OutOfRange, "field_factorize: zero polynomial");
    Poly f = make_monic(f_in);
    std::vector<FieldFactor> out;
    if (f.degree() < 1) return out;
    std::map<detail::PolyKey, std::pair<Poly, u64>> sqf;
    detail::squarefree_into(f, 1, sqf);
    std::mt19937_64 rng(0x5eedf00dULL);
    for (auto& [key, ge] : sqf) {
        for (auto& [prod, d] : detail::ddf(ge.first)) {
            std::vector<Poly> irr;
            detail::edf(prod, d, rng, irr);
            for (Poly& h : irr) out.push_back({h, ge.second});
        }
    }
    // deterministic ordering: by degree, then coefficient vectors
    std::sort(out.begin(), out.end(), [](const FieldFactor& x, const FieldFactor& y) {
        if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
        return detail::PolyKey(x.factor) < detail::PolyKey(y.factor);
    });
    return out;
}

}  // namespace grcodes
