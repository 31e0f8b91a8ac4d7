#pragma once

#include <mutex>

#include "ambient.hpp"
#include "howell.hpp"

namespace grcodes {

// torsional degrees, one non-increasing list of length a per primary block
struct TorsionProfile {
    std::vector<std::vector<u64>> degrees;
};

// generator p^j * f inside one primary block; k is the leading base-exponent
struct StdFormGen {
    u64 j;
    u64 k;
    Poly f;
};

// generator p^j * g of the full code, CRT-combined across blocks
struct MergedGen {
    u64 j;
    Poly g;
};

struct StandardFormBasis {
    std::vector<std::vector<StdFormGen>> per_component;
    std::vector<MergedGen> merged;
};

inline std::vector<u64> flatten_poly(const Poly& g, u64 n) {
    u64 m = g.ring().m();
    std::vector<u64> v(n * m, 0);
    assert(g.degree() < static_cast<int>(n));
    for (size_t i = 0; i < g.coeffs().size(); ++i)
        for (u64 j = 0; j < m; ++j) v[i * m + j] = g.coeffs()[i].coeff(j);
    return v;
}

inline Poly unflatten_poly(const Ring& r, const std::vector<u64>& v, u64 n) {
    u64 m = r.m();
    std::vector<Elem> cs;
    cs.reserve(n);
    for (u64 i = 0; i < n; ++i) {
        std::vector<u64> e(m);
        for (u64 j = 0; j < m; ++j) e[j] = v[i * m + j];
        cs.emplace_back(r, std::move(e));
    }
    return Poly(r, std::move(cs));
}

// Z_{p^a} row stack whose span is the ideal generated by `gens`: every
// generator multiplied by every monomial x^k y^j and reduced mod f.
inline std::vector<std::vector<u64>> ideal_rows(const Ambient& amb, const std::vector<Poly>& gens) {
    const Ring& r = amb.ring();
    u64 n = amb.n();
    u64 m = r.m();
    std::vector<Elem> ypow;
    ypow.push_back(Elem::one(r));
    for (u64 j = 1; j < m; ++j) {
        std::vector<u64> c(m, 0);
        c[1] = 1;
        ypow.push_back(ypow.back() * Elem(r, c));
    }
    std::vector<std::vector<u64>> rows;
    for (const Poly& g : gens) {
        Poly gg = amb.reduce(g);
        if (gg.is_zero()) continue;
        Poly xk = gg;
        for (u64 k = 0; k < n; ++k) {
            for (u64 j = 0; j < m; ++j) rows.push_back(flatten_poly(xk * ypow[j], n));
            xk = amb.reduce(xk * Poly::x(r));
        }
    }
    return rows;
}

inline std::vector<std::vector<u64>> p_power_unit_rows(const Ring& r, u64 ncols, u64 power) {
    std::vector<std::vector<u64>> rows;
    if (power >= r.a()) return rows;  // p^power = 0
    u64 scale = ipow(r.p(), power) % r.char_pow();
    for (u64 c = 0; c < ncols; ++c) {
        std::vector<u64> row(ncols, 0);
        row[c] = scale;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace detail {

struct CodeData {
    Ambient amb;
    std::vector<Poly> gens;
    mutable std::once_flag span_once;
    mutable std::unique_ptr<ZSpan> span;
    mutable std::once_flag comps_once;
    mutable std::vector<Ambient> comp_ambients;
    mutable std::once_flag profile_once;
    mutable std::unique_ptr<TorsionProfile> profile;
    mutable std::once_flag unique_once;
    mutable std::unique_ptr<std::vector<std::vector<Poly>>> unique_sets;
    mutable std::once_flag basis_once;
    mutable std::unique_ptr<StandardFormBasis> basis;
};

}  // namespace detail

class Code {
  public:
    Code() = default;
    Code(Ambient amb, std::vector<Poly> gens) {
        auto d = std::make_shared<detail::CodeData>();
        d->amb = std::move(amb);
        for (Poly& g : gens) {
            Poly gg = d->amb.reduce(g);
            if (!gg.is_zero()) d->gens.push_back(std::move(gg));
        }
        d_ = std::move(d);
    }

    const Ambient& ambient() const { return d_->amb; }
    const std::vector<Poly>& generators() const { return d_->gens; }

    const ZSpan& span() const {
        std::call_once(d_->span_once, [&] {
            u64 ncols = d_->amb.n() * d_->amb.ring().m();
            d_->span = std::make_unique<ZSpan>(
                ZSpan::from_rows(d_->amb.ring().z(), ncols, ideal_rows(d_->amb, d_->gens)));
        });
        return *d_->span;
    }

    bool contains(const Poly& g) const {
        return span().contains(flatten_poly(d_->amb.reduce(g), d_->amb.n()));
    }
    bool is_zero() const { return span().rows().empty(); }
    bool is_whole() const { return contains(Poly::one(d_->amb.ring())); }
    u64 cardinality_capped(u64 cap) const { return span().cardinality_capped(cap); }

    bool equals(const Code& o) const {
        return d_->amb.modulus() == o.d_->amb.modulus() && span() == o.span();
    }

    // the code seen inside each primary block GR[x]/<f_c>
    std::vector<Code> component_split() const {
        std::vector<Code> out;
        for (size_t c = 0; c < d_->amb.num_components(); ++c) {
            Ambient ca = component_ambient(c);
            std::vector<Poly> gens_c;
            for (const Poly& g : d_->gens) gens_c.push_back(ca.reduce(g));
            out.emplace_back(ca, std::move(gens_c));
        }
        return out;
    }

    Ambient component_ambient(size_t c) const {
        if (d_->amb.num_components() == 1) return d_->amb;
        std::call_once(d_->comps_once, [&] {
            for (const Component& comp : d_->amb.components())
                d_->comp_ambients.push_back(Ambient::make(d_->amb.ring(), comp.f_comp));
        });
        return d_->comp_ambients[c];
    }

    const TorsionProfile& torsional_degrees() const {
        std::call_once(d_->profile_once, [&] {
            auto prof = std::make_unique<TorsionProfile>();
            if (d_->amb.num_components() == 1) {
                prof->degrees.push_back(local_torsion_degrees(*this));
            } else {
                for (const Code& cc : component_split())
                    prof->degrees.push_back(local_torsion_degrees(cc));
            }
            d_->profile = std::move(prof);
        });
        return *d_->profile;
    }

    // T_i and the residue generator base^{T_i} of the i-th torsion code;
    // requires a single primary block
    std::pair<u64, Poly> torsion_code(u64 i) const {
        if (d_->amb.num_components() != 1)
            fail(Err::NotPrimaryComponent, "torsion_code: ambient has several primary blocks");
        u64 ti = torsional_degrees().degrees[0][i];
        Poly hbar = d_->amb.components()[0].base.project();
        return {ti, hbar.pow(ti)};
    }

    // unique generating set {f_0, p f_1, ..., p^{a-1} f_{a-1}} of one primary
    // block: f_i = 0 when T_i = t, otherwise h^{T_i} plus p-layer tails whose
    // base-exponents stay below the later torsional degrees, with Teichmüller
    // digit coefficients
    const std::vector<Poly>& unique_generating_set() const {
        if (d_->amb.num_components() != 1)
            fail(Err::NotPrimaryComponent, "unique_generating_set: several primary blocks");
        std::call_once(d_->unique_once, [&] {
            auto sets = std::make_unique<std::vector<std::vector<Poly>>>();
            sets->push_back(compute_unique_set(*this));
            d_->unique_sets = std::move(sets);
        });
        return (*d_->unique_sets)[0];
    }

    const StandardFormBasis& standard_form_basis() const {
        std::call_once(d_->basis_once, [&] { d_->basis = std::make_unique<StandardFormBasis>(compute_basis()); });
        return *d_->basis;
    }

    // residue generator whose field-code distance equals the code distance:
    // the product of base^{T_{a-1}} over the primary blocks
    std::optional<Poly> last_residue_generator() const {
        const TorsionProfile& prof = torsional_degrees();
        const Ring res = d_->amb.ring().residue();
        bool all_zero = true;
        Poly g = Poly::one(res);
        for (size_t c = 0; c < prof.degrees.size(); ++c) {
            u64 t = d_->amb.components()[c].t;
            u64 last = prof.degrees[c].back();
            if (last < t) all_zero = false;
            g = g * d_->amb.components()[c].base.project().pow(last);
        }
        if (all_zero) return std::nullopt;  // zero code
        return g;
    }

  private:
    // T_i = min{ e : p^i h^e lies in C + p^{i+1} R }, solved on Howell spans
    static std::vector<u64> local_torsion_degrees(const Code& cc) {
        const Ambient& amb = cc.ambient();
        const Ring& r = amb.ring();
        const Component& comp = amb.components()[0];
        u64 n = amb.n(), ncols = n * r.m();
        std::vector<u64> out;
        std::vector<std::vector<u64>> base_rows = ideal_rows(amb, cc.generators());
        for (u64 i = 0; i < r.a(); ++i) {
            std::vector<std::vector<u64>> rows = base_rows;
            for (auto& row : p_power_unit_rows(r, ncols, i + 1)) rows.push_back(std::move(row));
            ZSpan span = ZSpan::from_rows(r.z(), ncols, rows);
            u64 ti = comp.t;
            for (u64 e = 0; e <= comp.t; ++e) {
                Poly target = amb.reduce(comp.base.pow(e)).times_p_power(i);
                if (span.contains(flatten_poly(target, n))) {
                    ti = e;
                    break;
                }
            }
            out.push_back(ti);
        }
        return out;
    }

    static std::vector<Poly> compute_unique_set(const Code& cc) {
        const Ambient& amb = cc.ambient();
        const Ring& r = amb.ring();
        const Component& comp = amb.components()[0];
        const Poly& h = comp.base;
        u64 t = comp.t, a = r.a(), n = amb.n(), ncols = n * r.m();
        const std::vector<u64>& T = cc.torsional_degrees().degrees[0];

        std::vector<std::vector<u64>> rowsC = ideal_rows(amb, cc.generators());
        std::vector<Poly> fgen(a, Poly::zero(r));
        for (u64 ii = a; ii-- > 0;) {
            if (T[ii] == t) continue;
            // find some c in C with c = p^ii h^{T_ii} (mod p^{ii+1})
            Poly target = amb.reduce(h.pow(T[ii])).times_p_power(ii);
            std::optional<std::vector<u64>> c;
            auto b_rows = p_power_unit_rows(r, ncols, ii + 1);
            c = solve_split(r.z(), ncols, rowsC, b_rows, flatten_poly(target, n));
            assert(c.has_value());
            Poly fi = unflatten_poly(r, *c, n).shift_down(ii);
            // eliminate layer-j digits at base-exponents >= T[ii+j] using the
            // already-final later generators, highest layer constraint last
            for (u64 j = 1; ii + j < a; ++j) {
                if (T[ii + j] == t) continue;
                while (true) {
                    auto grid = h_p_digit_grid(fi, h);
                    int hit = -1;
                    if (j < grid.size())
                        for (size_t k = grid[j].size(); k-- > T[ii + j];)
                            if (k < grid[j].size() && !grid[j][k].is_zero()) {
                                hit = static_cast<int>(k);
                                break;
                            }
                    if (hit < 0) break;
                    Poly sub = (h.pow(static_cast<u64>(hit) - T[ii + j]) * grid[j][static_cast<size_t>(hit)] *
                                fgen[ii + j])
                                   .times_p_power(j);
                    fi = amb.reduce(fi - sub);
                }
            }
            // canonical truncation: only layers < a - ii matter for p^ii f_i
            Poly trunc = Poly::zero(r);
            for (u64 j = 0; j < a - ii; ++j) trunc = trunc + p_layer(fi, j).times_p_power(j);
            fgen[ii] = trunc;
        }
        return fgen;
    }

    StandardFormBasis compute_basis() const {
        StandardFormBasis basis;
        const Ring& r = d_->amb.ring();
        u64 a = r.a();
        std::vector<Code> comps;
        if (d_->amb.num_components() == 1)
            comps.push_back(*this);
        else
            comps = component_split();

        std::vector<std::vector<Poly>> expanded;  // per component, layer e -> generator
        for (size_t c = 0; c < comps.size(); ++c) {
            const std::vector<u64>& T = comps[c].torsional_degrees().degrees[0];
            u64 t = comps[c].ambient().components()[0].t;
            std::vector<Poly> uniq = compute_unique_set(comps[c]);
            std::vector<StdFormGen> kept;
            for (u64 i = 0; i < a; ++i) {
                if (T[i] == t) continue;
                if (!kept.empty() && T[i] == kept.back().k) continue;
                kept.push_back({i, T[i], uniq[i]});
            }
            // expand back to one generator per layer for the CRT merge
            std::vector<Poly> exp(a, Poly::zero(r));
            for (u64 e = 0; e < a; ++e)
                for (const StdFormGen& g : kept)
                    if (g.j <= e) exp[e] = g.f;
            expanded.push_back(std::move(exp));
            basis.per_component.push_back(std::move(kept));
        }

        // merged generators g_e = sum_c e_c * F_e^{(c)}, keeping only the
        // layers where some component's torsional degree drops
        const std::vector<Poly>& idem = d_->amb.idempotents();
        std::vector<std::vector<u64>> profiles(a);
        for (u64 e = 0; e < a; ++e)
            for (size_t c = 0; c < comps.size(); ++c)
                profiles[e].push_back(comps[c].torsional_degrees().degrees[0][e]);
        std::vector<u64> prev;
        bool any_prev = false;
        for (u64 e = 0; e < a; ++e) {
            Poly g = Poly::zero(r);
            for (size_t c = 0; c < comps.size(); ++c)
                g = g + expanded[c][e] * idem[c];
            g = d_->amb.reduce(g);
            if (g.is_zero()) continue;
            if (any_prev && profiles[e] == prev) continue;
            basis.merged.push_back({e, g});
            prev = profiles[e];
            any_prev = true;
        }
        return basis;
    }

    std::shared_ptr<detail::CodeData> d_;
};

// torsional degrees read off a standard-form basis: T_e = t before the first
// generator, then the leading exponent of the most recent generator
inline TorsionProfile basis_to_torsion(const StandardFormBasis& basis, const Ambient& amb) {
    TorsionProfile prof;
    u64 a = amb.ring().a();
    for (size_t c = 0; c < amb.num_components(); ++c) {
        u64 t = amb.components()[c].t;
        std::vector<u64> T(a, t);
        const auto& gens = basis.per_component[c];
        for (u64 e = 0; e < a; ++e)
            for (const StdFormGen& g : gens)
                if (g.j <= e) T[e] = g.k;
        prof.degrees.push_back(std::move(T));
    }
    return prof;
}

}  // namespace grcodes
