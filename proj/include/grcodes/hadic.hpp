#pragma once

#include "poly.hpp"

namespace grcodes {

// g written as p^{j_0} h^{i_0} a_0(x) + ... + p^{j_r} h^{i_r} a_r(x) with
// strictly increasing p-exponents, strictly decreasing h-exponents, and every
// a_e outside <p, h>.
struct HAdicTerm {
    u64 j;       // p-exponent
    u64 i;       // h-exponent
    Poly alpha;  // not in <p, h>
};

struct HAdicForm {
    Poly base;  // h
    std::vector<HAdicTerm> terms;

    Poly recompose(const Ring& r) const {
        Poly acc = Poly::zero(r);
        for (const HAdicTerm& t : terms)
            acc = acc + (base.pow(t.i) * t.alpha).times_p_power(t.j);
        return acc;
    }
};

// h-ary digits: g = sum Q_k h^k with deg Q_k < deg h
inline std::vector<Poly> h_digits(const Poly& g, const Poly& h) {
    assert(h.is_monic() && h.degree() >= 1);
    std::vector<Poly> out;
    Poly cur = g;
    while (!cur.is_zero()) {
        DivMod dm = divmod(cur, h);
        out.push_back(dm.rem);
        cur = dm.quot;
    }
    return out;
}

// p-adic layer j of a polynomial: digit polynomial with Teichmüller
// coefficients, so that g = sum_j p^j layer_j(g).
inline Poly p_layer(const Poly& g, u64 j) {
    const Ring& r = g.ring();
    std::vector<Elem> v;
    v.reserve(g.coeffs().size());
    for (const Elem& e : g.coeffs()) v.push_back(e.padic_digits()[j]);
    return Poly(r, std::move(v));
}

// full digit grid: grid[j][k] = Teichmüller digit polynomial of the h-ary
// digit Q_k at p-layer j (deg < deg h)
inline std::vector<std::vector<Poly>> h_p_digit_grid(const Poly& g, const Poly& h) {
    const Ring& r = g.ring();
    std::vector<Poly> qs = h_digits(g, h);
    std::vector<std::vector<Poly>> grid(r.a(), std::vector<Poly>(qs.size(), Poly::zero(r)));
    for (size_t k = 0; k < qs.size(); ++k)
        for (u64 j = 0; j < r.a(); ++j) grid[j][k] = p_layer(qs[k], j);
    return grid;
}

// canonical h-adic form of g: compute h-ary digits, p-adically expand them,
// then form one term per populated p-layer, absorbing layers whose minimal
// h-exponent does not strictly drop into the previous term's alpha
inline HAdicForm h_adic_decompose(const Poly& g, const Poly& h) {
    const Ring& r = g.ring();
    HAdicForm form;
    form.base = h;
    if (g.is_zero()) return form;
    auto grid = h_p_digit_grid(g, h);
    for (u64 j = 0; j < r.a(); ++j) {
        int min_k = -1;
        for (size_t k = 0; k < grid[j].size(); ++k)
            if (!grid[j][k].is_zero()) {
                min_k = static_cast<int>(k);
                break;
            }
        if (min_k < 0) continue;
        Poly alpha = Poly::zero(r);
        for (size_t k = static_cast<size_t>(min_k); k < grid[j].size(); ++k)
            alpha = alpha + h.pow(k - static_cast<size_t>(min_k)) * grid[j][k];
        u64 i = static_cast<u64>(min_k);
        if (!form.terms.empty() && form.terms.back().i <= i) {
            // absorb into the previous term: p^j h^i alpha = p^jprev h^iprev *
            // (p^(j-jprev) h^(i-iprev) alpha)
            HAdicTerm& prev = form.terms.back();
            prev.alpha =
                prev.alpha + (h.pow(i - prev.i) * alpha).times_p_power(j - prev.j);
        } else {
            form.terms.push_back({j, i, std::move(alpha)});
        }
    }
    return form;
}

// Division in the polynomial ring GR(p^a,m)[x] by a set of generators
// {p^{j_l} f_l} with f_l = h^{k_l} + (higher p-layers). Each step removes the
// whole lowest p-layer of the running remainder, so the p-exponent of the
// remainder strictly increases. Returns the final remainder (zero iff the
// reduction reached zero).
struct SgbGenerator {
    u64 j;   // p-exponent of the generator p^j f
    u64 k;   // leading h-exponent of f
    Poly f;  // monic-in-h: h^k + tails in higher p-layers
};

inline Poly sgb_reduce(Poly g, const Poly& h, const std::vector<SgbGenerator>& gens) {
    const Ring& r = g.ring();
    for (u64 step = 0; step <= r.a(); ++step) {
        if (g.is_zero()) return g;
        HAdicForm form = h_adic_decompose(g, h);
        const HAdicTerm& lead = form.terms.front();
        const SgbGenerator* best = nullptr;
        for (const SgbGenerator& gen : gens) {
            if (gen.j <= lead.j && gen.k <= lead.i)
                if (!best || gen.j > best->j) best = &gen;
        }
        if (!best) return g;
        Poly sub = (h.pow(lead.i - best->k) * lead.alpha * best->f)
                       .times_p_power(lead.j);
        g = g - sub;
    }
    return g;
}

}  // namespace grcodes
