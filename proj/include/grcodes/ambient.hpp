#pragma once

#include "factor.hpp"
#include "hadic.hpp"

namespace grcodes {

// One primary block f_c = h^t + p*beta of the ambient modulus, together with
// the parameters that drive the structure predicates.
struct Component {
    Poly f_comp;  // monic primary factor
    Poly base;    // h: monic verbatim lift of the residue irreducible
    u64 t = 0;
    Poly beta;                       // (f_comp - base^t) / p; zero when a = 1
    bool beta_residue_zero = true;   // beta == 0 mod p
    u64 v = 0;                       // base-valuation of the beta residue
    std::vector<Poly> gamma_digits;  // residue digits of beta': beta = h^v * sum gamma_j h^j
    bool beta_in_max_ideal = true;   // beta in <p, h>
};

struct AmbientData {
    Ring ring;
    Poly f;
    PrimaryFactorization fact;
    std::vector<Poly> idempotents;
    std::vector<Component> comps;
};

struct StructureReport {
    // one <p, h_i> per component
    std::vector<std::pair<Poly, Poly>> maximal_ideals;
    std::pair<Poly, Poly> jacobson;  // <p, prod h_i>
    Poly socle_generator;            // p^(a-1) prod h_i^(t_i - 1) mod f
};

// The ambient ring GR(p^a, m)[x] / <f> with its primary-coprime factorization
// and CRT idempotents precomputed.
class Ambient {
  public:
    Ambient() = default;

    static Ambient make(const Ring& ring, const Poly& f) {
        if (!f.is_regular()) fail(Err::NotRegular, "ambient modulus must be regular");
        if (!f.is_monic()) fail(Err::NotMonic, "ambient modulus must be monic");
        if (f.degree() < 1) fail(Err::OutOfRange, "ambient modulus must be nonconstant");
        auto d = std::make_shared<AmbientData>();
        d->ring = ring;
        d->f = f;
        d->fact = primary_factorize(f);
        d->idempotents = crt_idempotents(f, d->fact);
        for (size_t c = 0; c < d->fact.size(); ++c) {
            Component comp;
            comp.f_comp = d->fact.factors[c];
            comp.base = d->fact.bases[c];
            comp.t = d->fact.mults[c];
            if (ring.a() > 1) {
                Poly diff = comp.f_comp - comp.base.pow(comp.t);
                assert(diff.divisible_by_p());
                comp.beta = diff.shift_down(1);
            } else {
                comp.beta = Poly::zero(ring);
            }
            Poly bbar = comp.beta.project();
            comp.beta_residue_zero = bbar.is_zero();
            if (!comp.beta_residue_zero) {
                Poly hbar = comp.base.project();
                std::vector<Poly> digs = h_digits(bbar, hbar);
                u64 v = 0;
                while (v < digs.size() && digs[v].is_zero()) ++v;
                comp.v = v;
                comp.gamma_digits.assign(digs.begin() + static_cast<long>(v), digs.end());
                comp.beta_in_max_ideal = (v >= 1);
            } else {
                comp.beta_in_max_ideal = true;
            }
            d->comps.push_back(std::move(comp));
        }
        Ambient a;
        a.d_ = std::move(d);
        return a;
    }

    bool valid() const { return static_cast<bool>(d_); }
    const Ring& ring() const { return d_->ring; }
    const Poly& modulus() const { return d_->f; }
    u64 n() const { return static_cast<u64>(d_->f.degree()); }
    const PrimaryFactorization& factorization() const { return d_->fact; }
    const std::vector<Poly>& idempotents() const { return d_->idempotents; }
    const std::vector<Component>& components() const { return d_->comps; }
    size_t num_components() const { return d_->comps.size(); }

    bool same(const Ambient& o) const { return d_.get() == o.d_.get(); }

    Poly reduce(const Poly& g) const { return poly_mod(g, d_->f); }

    // chain condition for one primary block: a = 1, or t = 1, or beta
    // outside <p, h>
    bool component_is_chain(size_t c) const {
        const Component& comp = d_->comps[c];
        return ring().a() == 1 || comp.t == 1 || !comp.beta_in_max_ideal;
    }

    // the whole quotient is a chain ring iff it is local (one block) and the
    // block condition holds
    bool is_chain_ring() const { return num_components() == 1 && component_is_chain(0); }

    // principal ideal ring iff every block is a chain ring
    bool is_principal_ideal_ring() const {
        for (size_t c = 0; c < num_components(); ++c)
            if (!component_is_chain(c)) return false;
        return true;
    }

    StructureReport structure_report() const {
        const Ring& r = ring();
        StructureReport rep;
        Poly p_poly = Poly::constant(r, Elem::from_int(r, r.p() % r.char_pow()));
        Poly prod_bases = Poly::one(r);
        Poly socle = Poly::one(r);
        for (const Component& comp : d_->comps) {
            rep.maximal_ideals.emplace_back(p_poly, comp.base);
            prod_bases = prod_bases * comp.base;
            socle = socle * comp.base.pow(comp.t - 1);
        }
        rep.jacobson = {p_poly, reduce(prod_bases)};
        rep.socle_generator = reduce(socle.times_p_power(r.a() - 1));
        return rep;
    }

  private:
    std::shared_ptr<const AmbientData> d_;
};

}  // namespace grcodes
