#pragma once

#include <map>

#include "code.hpp"

namespace grcodes {

// Exhaustive partition of [0, p^s]: 0, (0, p^{s-1}], the beta blocks
// (b p^{s-1}, (b+1) p^{s-1}] for 1 <= b <= p-2, the (tau, k) blocks
// (p^s - p^{s-k} + (tau-1) p^{s-k-1}, p^s - p^{s-k} + tau p^{s-k-1}], and p^s.
enum class PartKind { Zero, Low, Beta, TauK, Full };

struct PartitionCase {
    PartKind kind = PartKind::Zero;
    u64 beta = 0;
    u64 tau = 0;
    u64 k = 0;

    std::string str() const {
        switch (kind) {
            case PartKind::Zero: return "zero";
            case PartKind::Low: return "low";
            case PartKind::Beta: return "beta(" + std::to_string(beta) + ")";
            case PartKind::TauK:
                return "tau-k(" + std::to_string(tau) + "," + std::to_string(k) + ")";
            case PartKind::Full: return "full";
        }
        return "";
    }
};

inline PartitionCase partition_index(u64 i, u64 p, u64 s) {
    u64 ps = ipow(p, s);
    if (i > ps) fail(Err::OutOfRange, "partition_index: i > p^s");
    if (i == 0) return {PartKind::Zero};
    if (i == ps) return {PartKind::Full};
    u64 ps1 = ipow(p, s - 1);  // s >= 1 here since 0 < i < p^s forces p^s > 1
    if (i <= ps1) return {PartKind::Low};
    if (i <= (p - 1) * ps1) {
        PartitionCase c;
        c.kind = PartKind::Beta;
        c.beta = (i - 1) / ps1;
        return c;
    }
    for (u64 k = 1; k + 1 <= s; ++k) {
        u64 lo = ps - ipow(p, s - k);
        u64 hi = ps - ipow(p, s - k - 1);
        if (i > lo && i <= hi) {
            PartitionCase c;
            c.kind = PartKind::TauK;
            c.k = k;
            c.tau = (i - lo - 1) / ipow(p, s - k - 1) + 1;
            return c;
        }
    }
    fail(Err::OutOfRange, "partition_index: unreachable index");
}

// w_H((x^eta + gamma)^N) over F_{p^m}: product of (digit + 1) over the
// base-p digits of N; independent of eta and of the nonzero constant
inline u64 weight_of_binomial_power(u64 n, u64 p) {
    u64 w = 1;
    while (n) {
        w *= (n % p) + 1;
        n /= p;
    }
    return w;
}

struct DistanceReport {
    std::string theorem;                // which closed form produced the value
    std::string case_tag;               // partition case or distance-table row
    std::optional<u64> distance;        // empty = zero code
    std::optional<bool> oracle_checked;
    std::map<std::string, u64> params;
};

// Hamming distance of <(x^eta + gamma)^i> in F_{p^m}[x]/<(x^eta+gamma)^{p^s}>
inline DistanceReport eta_ps_distance(u64 p, u64 m, u64 s, u64 eta, u64 i) {
    (void)m;
    DistanceReport rep;
    rep.theorem = "eta-ps";
    rep.params = {{"p", p}, {"s", s}, {"eta", eta}, {"i", i}};
    PartitionCase c = partition_index(i, p, s);
    rep.case_tag = c.str();
    switch (c.kind) {
        case PartKind::Zero: rep.distance = 1; break;
        case PartKind::Full: rep.distance = std::nullopt; break;
        case PartKind::Low: rep.distance = 2; break;
        case PartKind::Beta: rep.distance = c.beta + 2; break;
        case PartKind::TauK: rep.distance = (c.tau + 1) * ipow(p, c.k); break;
    }
    return rep;
}

// Hamming distance of <(x^eta - xi)^i (x^eta + xi)^j> of length 2 eta p^s
// over F_{p^m}, p odd; the symmetric cases are normalized so that i >= j
inline DistanceReport two_eta_ps_distance(u64 p, u64 m, u64 s, u64 eta, u64 i, u64 j) {
    (void)m;
    if (p == 2) fail(Err::EvenPrime, "two_eta_ps_distance: p must be odd");
    u64 ps = ipow(p, s);
    if (i > ps || j > ps) fail(Err::OutOfRange, "two_eta_ps_distance: exponent > p^s");
    DistanceReport rep;
    rep.theorem = "two-eta-ps";
    rep.params = {{"p", p}, {"s", s}, {"eta", eta}, {"i", i}, {"j", j}};
    if (i == 0 && j == 0) {
        rep.case_tag = "whole";
        rep.distance = 1;
        return rep;
    }
    if (i == ps && j == ps) {
        rep.case_tag = "zero";
        rep.distance = std::nullopt;
        return rep;
    }
    if (j > i) std::swap(i, j);
    PartitionCase ci = partition_index(i, p, s);
    PartitionCase cj = partition_index(j, p, s);
    u64 ps1 = ipow(p, s - 1);

    auto row = [&](const char* id, u64 d) {
        rep.case_tag = id;
        rep.distance = d;
    };

    if (cj.kind == PartKind::Zero) {
        row("1", 2);
    } else if (cj.kind == PartKind::Low) {
        if (i <= ps1)
            row("2", 2);
        else if (i <= 2 * ps1)
            row("3", 3);
        else
            row("4", 4);
    } else if (cj.kind == PartKind::Beta) {
        if (ci.kind == PartKind::Beta)
            row("5", std::min(ci.beta + 2, 2 * (cj.beta + 2)));
        else if (ci.kind == PartKind::TauK)
            row("6", 2 * (cj.beta + 2));
        else  // i = p^s
            row("10", 2 * (cj.beta + 2));
    } else {  // cj.kind == TauK
        if (ci.kind == PartKind::TauK) {
            if (ci.k == cj.k) {
                if (ci.tau == cj.tau)
                    row("7", (ci.tau + 1) * ipow(p, ci.k));
                else
                    row("8", std::min(2 * (cj.tau + 1) * ipow(p, cj.k),
                                      (ci.tau + 1) * ipow(p, ci.k)));
            } else {
                row("9", 2 * (cj.tau + 1) * ipow(p, cj.k));
            }
        } else {  // i = p^s
            row("11", 2 * (cj.tau + 1) * ipow(p, cj.k));
        }
    }
    return rep;
}

// x^2 + 1 is irreducible over F_{p^m} iff p = 3 mod 4 and m is odd
inline bool x2_plus_1_irreducible(u64 p, u64 m) { return p % 4 == 3 && m % 2 == 1; }

inline DistanceReport negacyclic_2ps_distance(u64 p, u64 m, u64 s, u64 i) {
    if (!x2_plus_1_irreducible(p, m))
        fail(Err::ReducibleModulus, "negacyclic_2ps_distance: x^2 + 1 splits over this field");
    DistanceReport rep = eta_ps_distance(p, m, s, 2, i);
    rep.theorem = "negacyclic-2ps";
    return rep;
}

// literal check of the weight-retaining inequality
// w_H(g (x^eta + gamma)^N) >= w_H(g mod x^eta + gamma) * w_H((x^eta + gamma)^N)
inline bool weight_retaining_check(const Poly& g, u64 eta, const Elem& gamma, u64 n) {
    const Ring& r = g.ring();
    assert(r.is_field());
    if (gamma.is_zero()) fail(Err::OutOfRange, "weight_retaining_check: gamma must be nonzero");
    Poly binom = Poly::monomial(r, eta, Elem::one(r)) + Poly::constant(r, gamma);
    Poly power = binom.pow(n);
    u64 lhs = (g * power).weight();
    u64 rhs = poly_mod(g, binom).weight() * power.weight();
    return lhs >= rhs;
}

// literal check of w_H((x^eta+g1)^{p^s} (x^eta+g2)^i) = 2 w_H((x^eta+g2)^i)
inline bool product_weight_identity_check(const Ring& field, u64 eta, const Elem& g1,
                                          const Elem& g2, u64 i, u64 s) {
    assert(field.is_field());
    u64 ps = ipow(field.p(), s);
    if (i == 0 || i >= ps) fail(Err::OutOfRange, "product_weight_identity_check: need 0 < i < p^s");
    if (g1.is_zero() || g2.is_zero())
        fail(Err::OutOfRange, "product_weight_identity_check: constants must be nonzero");
    Poly b1 = Poly::monomial(field, eta, Elem::one(field)) + Poly::constant(field, g1);
    Poly b2 = Poly::monomial(field, eta, Elem::one(field)) + Poly::constant(field, g2);
    Poly lhs = b1.pow(ps) * b2.pow(i);
    return lhs.weight() == 2 * b2.pow(i).weight();
}

// Distance of a code over GR(p^a, m) whose ambient is a single primary block
// with residue (x^eta + c)^{p^s}: the last torsional degree feeds the length
// eta p^s formula.
inline DistanceReport gr_distance_eta_ps(const Code& code) {
    const Ambient& amb = code.ambient();
    const Ring& r = amb.ring();
    if (amb.num_components() != 1)
        fail(Err::UnsupportedCase, "gr_distance_eta_ps: ambient has several primary blocks");
    const Component& comp = amb.components()[0];
    u64 s = 0;
    if (!is_power_of(comp.t, r.p(), s))
        fail(Err::UnsupportedCase, "gr_distance_eta_ps: residue multiplicity is not a p-power");
    u64 eta = static_cast<u64>(comp.base.degree());
    u64 e0 = code.torsional_degrees().degrees[0].back();
    DistanceReport rep = eta_ps_distance(r.p(), r.m(), s, eta, e0);
    rep.theorem = "gr-eta-ps";
    rep.params["e0"] = e0;
    return rep;
}

// Distance of a code over GR(p^a, m) whose ambient splits into two primary
// blocks with residues (x^eta - xi)^{p^s} and (x^eta + xi)^{p^s}, p odd. The
// block with the lexicographically smaller base plays the minus factor.
inline DistanceReport gr_distance_2eta_ps(const Code& code) {
    const Ambient& amb = code.ambient();
    const Ring& r = amb.ring();
    if (r.p() == 2) fail(Err::EvenPrime, "gr_distance_2eta_ps: p must be odd");
    if (amb.num_components() != 2)
        fail(Err::UnsupportedCase, "gr_distance_2eta_ps: need exactly two primary blocks");
    const Component& c0 = amb.components()[0];
    const Component& c1 = amb.components()[1];
    u64 s0 = 0, s1 = 0;
    if (!is_power_of(c0.t, r.p(), s0) || !is_power_of(c1.t, r.p(), s1) || s0 != s1)
        fail(Err::UnsupportedCase, "gr_distance_2eta_ps: multiplicities are not a common p-power");
    if (c0.base.degree() != c1.base.degree())
        fail(Err::UnsupportedCase, "gr_distance_2eta_ps: bases of different degree");
    u64 eta = static_cast<u64>(c0.base.degree());
    // bases must be x^eta + const with opposite constants mod p
    for (u64 d = 1; d < eta; ++d)
        if (!c0.base.coeff(d).is_zero() || !c1.base.coeff(d).is_zero())
            fail(Err::UnsupportedCase, "gr_distance_2eta_ps: bases are not binomials");
    Elem k0 = c0.base.coeff(0).project(), k1 = c1.base.coeff(0).project();
    if (!(k0 + k1).is_zero())
        fail(Err::UnsupportedCase, "gr_distance_2eta_ps: base constants do not negate");

    size_t minus = detail::PolyKey(c0.base) < detail::PolyKey(c1.base) ? 0 : 1;
    size_t plus = 1 - minus;
    const TorsionProfile& prof = code.torsional_degrees();
    u64 ihat = prof.degrees[minus].back();
    u64 jhat = prof.degrees[plus].back();
    DistanceReport rep = two_eta_ps_distance(r.p(), r.m(), s0, eta, ihat, jhat);
    rep.theorem = "gr-two-eta-ps";
    rep.params["i_hat"] = ihat;
    rep.params["j_hat"] = jhat;
    rep.params["minus_component"] = minus;
    return rep;
}

}  // namespace grcodes
