#pragma once

#include "code.hpp"
#include "distance.hpp"

namespace grcodes {

// Canonical shape of an ideal of GR(p^2,m)[x]/<f>, f = h^t + p*beta primary:
// one of <0>, <1>, <p h^n>, <h^k>, <h^k + p h^l delta>, <h^k, p h^n>,
// <h^k + p h^l delta, p h^n>.
enum class P2Variant { Zero, Whole, PHn, Hk, HkTail, HkPHn, HkTailPHn };

struct P2CanonicalForm {
    P2Variant variant = P2Variant::Zero;
    u64 k = 0;
    u64 l = 0;
    u64 n = 0;
    // residue digit polynomials eta_j of delta = sum eta_j h^j, eta_0 != 0
    std::vector<Poly> delta_digits;

    bool has_tail() const { return variant == P2Variant::HkTail || variant == P2Variant::HkTailPHn; }
    bool has_p_generator() const {
        return variant == P2Variant::PHn || variant == P2Variant::HkPHn ||
               variant == P2Variant::HkTailPHn;
    }
};

// Parameters of the modulus f = h^t + p h^v beta' with beta' = sum gamma_j h^j
struct FParams2 {
    u64 t = 0;
    u64 v = 0;
    bool beta_zero = true;
    std::vector<Poly> gamma_digits;  // residue digit polynomials, gamma_0 != 0
};

inline FParams2 fparams2_of(const Ambient& amb) {
    if (amb.num_components() != 1)
        fail(Err::NotPrimaryComponent, "fparams2_of: ambient has several primary blocks");
    const Component& comp = amb.components()[0];
    FParams2 fp;
    fp.t = comp.t;
    fp.beta_zero = comp.beta_residue_zero;
    if (!fp.beta_zero) {
        fp.v = comp.v;
        fp.gamma_digits = comp.gamma_digits;
    }
    return fp;
}

namespace detail {

inline Poly residue_digit(const std::vector<Poly>& digits, u64 j, const Ring& res) {
    return j < digits.size() ? digits[j] : Poly::zero(res);
}

// unit inverse in GR[x]/<f> via field inverse of the residue + Newton lifting
inline Poly quotient_unit_inverse(const Ambient& amb, const Poly& u) {
    const Ring& r = amb.ring();
    Poly wbar = field_inverse_mod(u.project(), amb.modulus().project());
    Poly w = wbar.lift_to(r);
    for (u64 it = 0; it < r.a() + 1; ++it) {
        Poly t = amb.reduce(u * w);
        if (t == Poly::one(r)) break;
        w = amb.reduce(w * (Poly::constant(r, Elem::from_int(r, 2)) - t));
    }
    assert(amb.reduce(u * w) == Poly::one(r));
    return w;
}

}  // namespace detail

// index of the first differing digit between the modulus tail and the
// generator tail; t when the sequences agree everywhere
inline u64 digit_mismatch_z(const FParams2& fp, const P2CanonicalForm& form, const Ring& res) {
    u64 long_len = std::max(fp.gamma_digits.size(), form.delta_digits.size());
    for (u64 j = 0; j < long_len; ++j) {
        if (detail::residue_digit(fp.gamma_digits, j, res) !=
            detail::residue_digit(form.delta_digits, j, res))
            return j;
    }
    return fp.t;
}

// torsional degrees (T_0, T_1) of the classified ideal
inline std::pair<u64, u64> torsion_p2(const P2CanonicalForm& form, const FParams2& fp,
                                      const Ring& res) {
    u64 t = fp.t;
    switch (form.variant) {
        case P2Variant::Zero:
            return {t, t};
        case P2Variant::Whole:
            return {0, 0};
        case P2Variant::PHn:
            return {t, form.n};
        case P2Variant::Hk:
            return {form.k, fp.beta_zero ? form.k : std::min(form.k, fp.v)};
        case P2Variant::HkTail: {
            u64 reach = t - form.k + form.l;
            if (fp.beta_zero) return {form.k, std::min(form.k, reach)};
            if (fp.v != reach) return {form.k, std::min({form.k, fp.v, reach})};
            u64 z = digit_mismatch_z(fp, form, res);
            return {form.k, std::min(form.k, fp.v + z)};
        }
        case P2Variant::HkPHn:
            return {form.k, fp.beta_zero ? std::min(form.k, form.n)
                                         : std::min({form.k, fp.v, form.n})};
        case P2Variant::HkTailPHn: {
            u64 reach = t - form.k + form.l;
            if (fp.beta_zero) return {form.k, std::min({form.k, reach, form.n})};
            if (fp.v != reach) return {form.k, std::min({form.k, fp.v, reach, form.n})};
            u64 z = digit_mismatch_z(fp, form, res);
            return {form.k, std::min({form.k, fp.v + z, form.n})};
        }
    }
    return {t, t};
}

// Classify an ideal of a primary characteristic-p^2 ambient into the seven
// canonical shapes: normalize each generator not divisible by p to
// h^k + p h^l delta, push everything else into <p>, keep the minimal k and
// the minimal p-generator exponent, then absorb what is redundant.
inline P2CanonicalForm classify_p2(const Code& code) {
    const Ambient& amb = code.ambient();
    const Ring& r = amb.ring();
    if (r.a() != 2) fail(Err::WrongCharacteristic, "classify_p2: characteristic must be p^2");
    if (amb.num_components() != 1)
        fail(Err::NotPrimaryComponent, "classify_p2: ambient has several primary blocks");
    const Component& comp = amb.components()[0];
    const Poly& h = comp.base;
    Poly hbar = h.project();
    const Ring res = r.residue();

    P2CanonicalForm form;
    std::vector<Poly> monicish;
    std::vector<u64> p_exponents;  // candidates n from generators in <p>

    auto push_p_multiple = [&](const Poly& g) {
        // g = p * w, w-bar != 0; contributes candidate n = val_h(w-bar)
        if (g.is_zero()) return;
        Poly wbar = g.shift_down(1).project();
        assert(!wbar.is_zero());
        std::vector<Poly> digs = h_digits(wbar, hbar);
        u64 v = 0;
        while (digs[v].is_zero()) ++v;
        p_exponents.push_back(v);
    };

    for (const Poly& g : code.generators()) {
        if (g.divisible_by_p())
            push_p_multiple(g);
        else
            monicish.push_back(g);
    }

    if (monicish.empty() && p_exponents.empty()) {
        form.variant = P2Variant::Zero;
        return form;
    }

    u64 best_k = comp.t + 1;
    Poly best_v;
    std::vector<std::pair<u64, Poly>> normalized;  // (k, h^k + p C)
    for (const Poly& g : monicish) {
        // strip the layer-0 unit: g = h^k A0 + p(...), v = g * A0^{-1}
        auto grid = h_p_digit_grid(g, h);
        u64 k0 = 0;
        while (grid[0][k0].is_zero()) ++k0;
        Poly a0 = Poly::zero(r);
        for (size_t k = k0; k < grid[0].size(); ++k) a0 = a0 + h.pow(k - k0) * grid[0][k];
        Poly v = amb.reduce(g * detail::quotient_unit_inverse(amb, a0));
        // absorb tail digits at exponents >= k0 into the unit
        while (true) {
            Poly c = (v - h.pow(k0)).shift_down(1).project();
            if (c.is_zero()) break;
            std::vector<Poly> digs = h_digits(c, hbar);
            int hit = -1;
            for (size_t idx = digs.size(); idx-- > k0;)
                if (!digs[idx].is_zero()) {
                    hit = static_cast<int>(idx);
                    break;
                }
            if (hit < 0) break;
            Poly mult = Poly::one(r) - (h.pow(static_cast<u64>(hit) - k0) *
                                        digs[static_cast<size_t>(hit)].lift_to(r))
                                           .times_p_power(1);
            v = amb.reduce(v * mult);
        }
        normalized.emplace_back(k0, v);
        if (k0 < best_k) {
            best_k = k0;
            best_v = v;
        }
    }

    if (!normalized.empty()) {
        // reduce the other generators against the minimal-k one
        for (auto& [k, v] : normalized) {
            if (v == best_v && k == best_k) continue;
            Poly d = amb.reduce(v - h.pow(k - best_k) * best_v);
            assert(d.divisible_by_p());
            push_p_multiple(d);
        }
        if (best_k == 0) {
            form.variant = P2Variant::Whole;
            return form;
        }
    }

    if (normalized.empty()) {
        form.variant = P2Variant::PHn;
        form.n = *std::min_element(p_exponents.begin(), p_exponents.end());
        return form;
    }

    form.k = best_k;
    Poly cbar = (best_v - h.pow(best_k)).shift_down(1).project();
    if (!cbar.is_zero()) {
        std::vector<Poly> digs = h_digits(cbar, hbar);
        u64 l = 0;
        while (digs[l].is_zero()) ++l;
        form.l = l;
        form.delta_digits.assign(digs.begin() + static_cast<long>(l), digs.end());
    }

    bool have_n = !p_exponents.empty();
    u64 n = have_n ? *std::min_element(p_exponents.begin(), p_exponents.end()) : 0;
    if (have_n && n >= form.k) have_n = false;  // p h^n is a multiple of the monic generator

    if (have_n) {
        if (!form.delta_digits.empty() && n <= form.l) {
            form.delta_digits.clear();  // the whole tail lies in <p h^n>
            form.l = 0;
        } else if (!form.delta_digits.empty()) {
            // digits at exponents >= n are absorbed by p h^n
            if (form.delta_digits.size() > n - form.l) form.delta_digits.resize(n - form.l);
            while (!form.delta_digits.empty() && form.delta_digits.back().is_zero())
                form.delta_digits.pop_back();
        }
        form.n = n;
        form.variant = form.delta_digits.empty() ? P2Variant::HkPHn : P2Variant::HkTailPHn;
    } else {
        form.variant = form.delta_digits.empty() ? P2Variant::Hk : P2Variant::HkTail;
        form.n = 0;
    }
    return form;
}

// Rebuild generators from a canonical form (for round trips and sweeps).
inline Code code_from_p2_form(const Ambient& amb, const P2CanonicalForm& form) {
    const Ring& r = amb.ring();
    const Poly& h = amb.components()[0].base;
    std::vector<Poly> gens;
    switch (form.variant) {
        case P2Variant::Zero:
            break;
        case P2Variant::Whole:
            gens.push_back(Poly::one(r));
            break;
        case P2Variant::PHn:
            gens.push_back(h.pow(form.n).times_p_power(1));
            break;
        case P2Variant::Hk:
            gens.push_back(h.pow(form.k));
            break;
        case P2Variant::HkTail:
        case P2Variant::HkTailPHn: {
            Poly delta = Poly::zero(r);
            for (size_t j = 0; j < form.delta_digits.size(); ++j)
                delta = delta + h.pow(j) * form.delta_digits[j].lift_to(r);
            gens.push_back(h.pow(form.k) + (h.pow(form.l) * delta).times_p_power(1));
            if (form.variant == P2Variant::HkTailPHn)
                gens.push_back(h.pow(form.n).times_p_power(1));
            break;
        }
        case P2Variant::HkPHn:
            gens.push_back(h.pow(form.k));
            gens.push_back(h.pow(form.n).times_p_power(1));
            break;
    }
    return Code(amb, std::move(gens));
}

// base-p digit sequence gamma of x^{p^s} - 1 = (x-1)^{p^s} + p (x-1)^{p^{s-1}} beta'
// over GR(p^2, m): gamma_{i p^{s-1}} = binom(p^s, (i+1) p^{s-1}) / p mod p
inline std::pair<u64, u64> binom_val_unit(u64 n, u64 k, u64 p, const ZMod& zu) {
    u64 val = 0, unit = 1 % zu.mod;
    for (u64 j = 1; j <= k; ++j) {
        u64 num = n - k + j, den = j;
        while (num % p == 0) {
            num /= p;
            ++val;
        }
        while (den % p == 0) {
            den /= p;
            --val;
        }
        unit = zu.mul(unit, num % zu.mod);
        unit = zu.mul(unit, zu.inv_unit(den % zu.mod));
    }
    return {val, unit};
}

// Distance of a cyclic code of length p^s over GR(p^2, m): T_1 from the
// classified form, then the residue cyclic-code distance of <(x-1)^{T_1}>.
inline DistanceReport cyclic_ps_distance_p2(u64 p, u64 m, u64 s, const P2CanonicalForm& form,
                                            const FParams2& fp) {
    Ring res = Ring::make(p, 1, m);
    auto [t0, t1] = torsion_p2(form, fp, res);
    DistanceReport rep = eta_ps_distance(p, m, s, 1, t1);
    rep.theorem = "p2-cyclic";
    rep.params["T0"] = t0;
    rep.params["T1"] = t1;
    return rep;
}

inline FParams2 cyclic_ps_fparams(u64 p, u64 m, u64 s) {
    if (s < 1) fail(Err::OutOfRange, "cyclic_ps_fparams: s >= 1 required");
    Ring res = Ring::make(p, 1, m);
    FParams2 fp;
    fp.t = ipow(p, s);
    fp.v = ipow(p, s - 1);
    fp.beta_zero = false;
    fp.gamma_digits.assign(fp.t - fp.v, Poly::zero(res));
    ZMod z2(p, 2);
    for (u64 i = 0; i + 1 < p; ++i) {
        auto [val, unit] = binom_val_unit(fp.t, (i + 1) * fp.v, p, z2);
        assert(val == 1);
        fp.gamma_digits[i * fp.v] = Poly::constant(res, Elem::from_int(res, unit % p));
    }
    while (!fp.gamma_digits.empty() && fp.gamma_digits.back().is_zero()) fp.gamma_digits.pop_back();
    return fp;
}

inline DistanceReport cyclic_ps_distance_p2(u64 p, u64 m, u64 s, const P2CanonicalForm& form) {
    return cyclic_ps_distance_p2(p, m, s, form, cyclic_ps_fparams(p, m, s));
}

}  // namespace grcodes
