#pragma once

#include "field.hpp"

namespace grcodes {

// f = product of monic regular primary coprime polynomials, each congruent to
// a power of a basic irreducible mod p.
struct PrimaryFactorization {
    std::vector<Poly> factors;  // monic primary, product equals f exactly
    std::vector<Poly> bases;    // verbatim lifts of the residue irreducibles
    std::vector<u64> mults;     // factor i reduces to bases[i]^mults[i] mod p

    size_t size() const { return factors.size(); }
};

namespace detail {

// one linear Hensel step per p-layer: lifts fbar = gbar * hbar (coprime,
// monic) to f = g * h over GR(p^a, m)
inline std::pair<Poly, Poly> hensel_pair(const Poly& f, const Poly& gbar, const Poly& hbar) {
    const Ring& r = f.ring();
    auto [d, abar, bbar] = field_xgcd(gbar, hbar);
    if (d.degree() != 0) fail(Err::FactorsNotCoprime, "hensel_pair: residues share a factor");
    Poly g = gbar.lift_to(r);
    Poly h = hbar.lift_to(r);
    for (u64 k = 1; k < r.a(); ++k) {
        Poly e = f - g * h;
        if (e.is_zero()) break;
        Poly ek = e.shift_down(k).project();
        Poly u = poly_mod(ek * bbar, gbar);
        Poly v = exact_div(ek - u * hbar, gbar);
        g = g + u.lift_to(r).times_p_power(k);
        h = h + v.lift_to(r).times_p_power(k);
    }
    assert(g * h == f);
    return {g, h};
}

}  // namespace detail

// Factor a regular monic f over GR(p^a, m) into primary coprime monic
// factors: factor the residue over the field, group by irreducible base, and
// Hensel-lift the pairwise coprime residue factorization.
inline PrimaryFactorization primary_factorize(const Poly& f) {
    const Ring& r = f.ring();
    if (!f.is_regular()) fail(Err::NotRegular, "primary_factorize: polynomial not regular");
    if (!f.is_monic()) fail(Err::NotMonic, "primary_factorize: polynomial not monic");
    PrimaryFactorization out;
    std::vector<FieldFactor> ff = field_factorize(f.project());
    if (ff.empty()) {  // constant
        out.factors.push_back(f);
        out.bases.push_back(Poly::one(r));
        out.mults.push_back(0);
        return out;
    }
    for (const FieldFactor& x : ff) {
        out.bases.push_back(x.factor.lift_to(r));
        out.mults.push_back(x.multiplicity);
    }
    if (ff.size() == 1) {
        out.factors.push_back(f);
        return out;
    }
    // split off one residue block at a time
    Poly rest = f;
    std::vector<Poly> residue_blocks;
    for (const FieldFactor& x : ff) residue_blocks.push_back(x.factor.pow(x.multiplicity));
    for (size_t i = 0; i + 1 < residue_blocks.size(); ++i) {
        Poly gbar = residue_blocks[i];
        Poly hbar = Poly::one(r.residue());
        for (size_t j = i + 1; j < residue_blocks.size(); ++j) hbar = hbar * residue_blocks[j];
        auto [g, h] = detail::hensel_pair(rest, gbar, hbar);
        out.factors.push_back(g);
        rest = h;
    }
    out.factors.push_back(rest);
    return out;
}

// CRT idempotents e_i for pairwise coprime factors of f: e_i^2 = e_i,
// e_i e_j = 0, sum e_i = 1, <e_i> = <f / f_i> (all mod f)
inline std::vector<Poly> crt_idempotents(const Poly& f, const PrimaryFactorization& fact) {
    const Ring& r = f.ring();
    std::vector<Poly> out;
    if (fact.size() == 1) {
        out.push_back(Poly::one(r));
        return out;
    }
    for (size_t i = 0; i < fact.size(); ++i) {
        Poly fhat = Poly::one(r);
        for (size_t j = 0; j < fact.size(); ++j)
            if (j != i) fhat = fhat * fact.factors[j];
        // invert fhat mod factors[i]: field inverse of the residues, lifted by
        // Newton iteration
        Poly gi = fact.factors[i];
        Poly wbar;
        try {
            wbar = field_inverse_mod(fhat.project(), gi.project());
        } catch (const Error&) {
            fail(Err::FactorsNotCoprime, "crt_idempotents: factors not coprime");
        }
        Poly w = wbar.lift_to(r);
        for (u64 it = 0; it < r.a() + 1; ++it) {
            Poly t = poly_mod(fhat * w, gi);
            if (t == Poly::one(r)) break;
            w = poly_mod(w * (Poly::constant(r, Elem::from_int(r, 2)) - t), gi);
        }
        assert(poly_mod(fhat * w, gi) == Poly::one(r));
        out.push_back(poly_mod(fhat * w, f));
    }
    return out;
}

}  // namespace grcodes
