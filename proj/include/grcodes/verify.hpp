#pragma once

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "char_p2.hpp"
#include "distance.hpp"
#include "oracle.hpp"

namespace grcodes::verify {

struct CheckResult {
    std::string name;
    bool pass = true;
    u64 checked = 0;
    u64 mismatches = 0;
    double millis = 0;
    std::string note;

    void mismatch(const std::string& what) {
        ++mismatches;
        pass = false;
        if (note.empty()) note = what;
    }
};

namespace detail {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

inline std::string opt_str(const std::optional<u64>& v) {
    return v ? std::to_string(*v) : "none";
}

inline Poly binomial(const Ring& field, u64 eta, u64 gamma) {
    return Poly::monomial(field, eta, Elem::one(field)) +
           Poly::constant(field, Elem::from_int(field, gamma));
}

inline Poly random_code_poly(const Ring& r, u64 n, std::mt19937_64& rng) {
    std::vector<Elem> cs;
    for (u64 i = 0; i < n; ++i) {
        std::vector<u64> v(r.m());
        for (auto& x : v) x = rng() % r.char_pow();
        cs.emplace_back(r, v);
    }
    return Poly(r, std::move(cs));
}

// mixes fully random polynomials with structured products of the block bases
// so the sampled ideals cover all torsion shapes
inline Code random_code(const Ambient& amb, std::mt19937_64& rng) {
    const Ring& r = amb.ring();
    u64 ngens = 1 + rng() % 3;
    std::vector<Poly> gens;
    for (u64 g = 0; g < ngens; ++g) {
        Poly gen;
        if (rng() % 2 == 0) {
            gen = random_code_poly(r, amb.n(), rng);
        } else {
            gen = random_code_poly(r, 1 + rng() % amb.n(), rng);
            for (const Component& comp : amb.components())
                gen = gen * comp.base.pow(rng() % (comp.t + 1));
        }
        gen = gen.times_p_power(rng() % r.a());
        gens.push_back(gen);
    }
    return Code(amb, std::move(gens));
}

struct TestAmbient {
    u64 p, a;
    std::vector<i64> f_coeffs;
};

inline std::vector<Ambient> criterion_ambients() {
    std::vector<TestAmbient> defs = {
        {2, 2, {-1, 0, 0, 0, 1}},                    // Z4[x]/(x^4-1)
        {2, 2, {-1, 0, 0, 0, 0, 0, 0, 0, 1}},        // Z4[x]/(x^8-1)
        {3, 2, {-1, 0, 0, 1}},                       // Z9[x]/(x^3-1)
        {2, 2, {-1, 0, 0, 0, 0, 0, 1}},              // Z4[x]/(x^6-1)
    };
    std::vector<Ambient> out;
    for (const TestAmbient& d : defs) {
        Ring r = Ring::make(d.p, d.a, 1);
        out.push_back(Ambient::make(r, Poly::from_ints(r, d.f_coeffs)));
    }
    return out;
}

// Definition items (1)-(5) for a generating set in standard form of one
// primary block.
inline bool check_standard_form_items(const std::vector<StdFormGen>& gens, const Ambient& amb,
                                      std::string& why) {
    const Ring& r = amb.ring();
    const Component& comp = amb.components()[0];
    const Poly& h = comp.base;
    if (gens.empty()) return true;  // zero code
    // (1) strictly increasing p-exponents, (2) strictly decreasing leading exponents
    for (size_t i = 0; i + 1 < gens.size(); ++i) {
        if (gens[i].j >= gens[i + 1].j) {
            why = "p-exponents not strictly increasing";
            return false;
        }
        if (gens[i].k <= gens[i + 1].k) {
            why = "leading exponents not strictly decreasing";
            return false;
        }
    }
    if (gens.front().k >= comp.t) {
        why = "leading exponent not below t";
        return false;
    }
    // (3) shape h^k + tails with digit support strictly under k
    for (const StdFormGen& g : gens) {
        auto grid = h_p_digit_grid(g.f, h);
        for (size_t k = 0; k < grid[0].size(); ++k) {
            bool want = (k == g.k);
            Poly expect = want ? Poly::one(r) : Poly::zero(r);
            if (grid[0][k] != expect) {
                why = "layer 0 is not exactly h^k";
                return false;
            }
        }
        if (grid[0].size() <= g.k) {
            why = "layer 0 is missing h^k";
            return false;
        }
        for (u64 l = 1; l < r.a(); ++l)
            for (size_t k = 0; k < grid[l].size(); ++k)
                if (!grid[l][k].is_zero() && k >= g.k) {
                    why = "tail digit at or above the leading exponent";
                    return false;
                }
    }
    // (4) divisibility closure inside the quotient
    for (size_t i = 0; i + 1 < gens.size(); ++i) {
        std::vector<Poly> later;
        for (size_t l = i + 1; l < gens.size(); ++l)
            later.push_back(gens[l].f.times_p_power(gens[l].j));
        Code tail_code(amb, later);
        if (!tail_code.contains(gens[i].f.times_p_power(gens[i + 1].j))) {
            why = "divisibility closure fails";
            return false;
        }
    }
    // (5) p^{j_0} f reduces to zero against the set in the polynomial ring
    std::vector<SgbGenerator> sgens;
    for (const StdFormGen& g : gens) sgens.push_back({g.j, g.k, g.f});
    Poly rem = sgb_reduce(amb.modulus().times_p_power(gens.front().j), h, sgens);
    if (!rem.is_zero()) {
        why = "p^{j0} f does not reduce to zero";
        return false;
    }
    return true;
}

inline std::vector<Poly> unique_sets_of(const Code& code) {
    std::vector<Poly> flat;
    if (code.ambient().num_components() == 1) {
        for (const Poly& f : code.unique_generating_set()) flat.push_back(f);
        return flat;
    }
    for (const Code& cc : code.component_split())
        for (const Poly& f : cc.unique_generating_set()) flat.push_back(f);
    return flat;
}

}  // namespace detail

// ---------------------------------------------------------------- criterion 1
inline CheckResult eta_ps_vs_oracle(const EnumerationBudget& budget, unsigned threads = 1) {
    detail::Stopwatch sw;
    CheckResult res;
    res.name = "eta-ps distance formula vs enumeration";
    struct Case {
        u64 p, s, eta;
    };
    std::vector<Case> cases = {{2, 1, 1}, {2, 2, 1}, {2, 3, 1}, {3, 1, 1},
                               {3, 2, 1}, {5, 1, 1}, {3, 1, 2}};
    for (const Case& c : cases) {
        Ring field = Ring::make(c.p, 1, 1);
        std::vector<u64> gammas{1};
        if (c.p > 2) gammas.push_back(c.p - 1);
        for (u64 gamma : gammas) {
            Poly base = detail::binomial(field, c.eta, gamma);
            u64 ps = ipow(c.p, c.s);
            Ambient amb = Ambient::make(field, base.pow(ps));
            for (u64 i = 0; i <= ps; ++i) {
                Code code(amb, {base.pow(i)});
                auto claimed = eta_ps_distance(c.p, 1, c.s, c.eta, i).distance;
                auto brute = brute_min_weight(code, budget, threads);
                ++res.checked;
                if (claimed != brute) {
                    std::ostringstream os;
                    os << "p=" << c.p << " s=" << c.s << " eta=" << c.eta << " gamma=" << gamma
                       << " i=" << i << ": formula " << detail::opt_str(claimed) << " vs brute "
                       << detail::opt_str(brute);
                    res.mismatch(os.str());
                }
            }
        }
    }
    res.millis = sw.millis();
    return res;
}

// ---------------------------------------------------------------- criterion 2
inline CheckResult two_eta_ps_vs_oracle(const EnumerationBudget& budget, unsigned threads = 1) {
    detail::Stopwatch sw;
    CheckResult res;
    res.name = "two-eta-ps distance table vs enumeration";
    struct Case {
        u64 p, s;
    };
    for (const Case& c : std::vector<Case>{{3, 1}, {5, 1}}) {
        Ring field = Ring::make(c.p, 1, 1);
        u64 ps = ipow(c.p, c.s);
        Poly minus = detail::binomial(field, 1, c.p - 1);  // x - 1
        Poly plus = detail::binomial(field, 1, 1);         // x + 1
        Ambient amb = Ambient::make(field, minus.pow(ps) * plus.pow(ps));
        for (u64 i = 0; i <= ps; ++i)
            for (u64 j = 0; j <= ps; ++j) {
                Code code(amb, {minus.pow(i) * plus.pow(j)});
                auto claimed = two_eta_ps_distance(c.p, 1, c.s, 1, i, j).distance;
                auto brute = brute_min_weight(code, budget, threads);
                ++res.checked;
                if (claimed != brute) {
                    std::ostringstream os;
                    os << "p=" << c.p << " (i,j)=(" << i << "," << j << "): formula "
                       << detail::opt_str(claimed) << " vs brute " << detail::opt_str(brute);
                    res.mismatch(os.str());
                }
            }
    }
    res.millis = sw.millis();
    return res;
}

// ---------------------------------------------------------------- criterion 3
inline CheckResult p2_cyclic_vs_oracle(const EnumerationBudget& budget, u64 seed,
                                       unsigned threads = 1) {
    detail::Stopwatch sw;
    CheckResult res;
    res.name = "p^2 cyclic closed-form distance vs enumeration";
    std::mt19937_64 rng(seed);
    struct Sweep {
        u64 p;
        std::vector<u64> ss;
    };
    u64 z4_tails = 0;
    for (const Sweep& sweep : std::vector<Sweep>{{2, {1, 2, 3}}, {3, {1}}}) {
        u64 p = sweep.p;
        Ring ring = Ring::make(p, 2, 1);
        Ring residue = ring.residue();
        for (u64 s : sweep.ss) {
            u64 t = ipow(p, s);
            Poly f = Poly::monomial(ring, t, Elem::one(ring)) - Poly::one(ring);
            Ambient amb = Ambient::make(ring, f);
            FParams2 fp = fparams2_of(amb);
            FParams2 fp2 = cyclic_ps_fparams(p, 1, s);
            if (fp.v != fp2.v || fp.gamma_digits != fp2.gamma_digits) {
                res.mismatch("modulus digit sequence differs from the binomial expansion");
            }

            std::vector<P2CanonicalForm> forms;
            P2CanonicalForm zf;
            zf.variant = P2Variant::Zero;
            forms.push_back(zf);
            P2CanonicalForm wf;
            wf.variant = P2Variant::Whole;
            forms.push_back(wf);
            for (u64 n = 0; n < t; ++n) {
                P2CanonicalForm fm;
                fm.variant = P2Variant::PHn;
                fm.n = n;
                forms.push_back(fm);
            }
            for (u64 k = 1; k < t; ++k) {
                P2CanonicalForm fm;
                fm.variant = P2Variant::Hk;
                fm.k = k;
                forms.push_back(fm);
                for (u64 n = 0; n < k; ++n) {
                    P2CanonicalForm fm2;
                    fm2.variant = P2Variant::HkPHn;
                    fm2.k = k;
                    fm2.n = n;
                    forms.push_back(fm2);
                }
            }
            // tailed forms with sampled digit sequences
            auto sample_delta = [&](u64 k, u64 l) {
                std::vector<Poly> digits(k - l);
                digits[0] = Poly::constant(residue, Elem::from_int(residue, 1 + rng() % (p - 1)));
                for (size_t jj = 1; jj < digits.size(); ++jj)
                    digits[jj] = Poly::constant(residue, Elem::from_int(residue, rng() % p));
                while (digits.size() > 1 && digits.back().is_zero()) digits.pop_back();
                return digits;
            };
            for (u64 k = 1; k < t; ++k)
                for (u64 l = 0; l < k; ++l) {
                    u64 tails = std::min<u64>(4, ipow(p, k - l - 1) * (p - 1));
                    for (u64 rep = 0; rep < tails; ++rep) {
                        P2CanonicalForm fm;
                        fm.variant = P2Variant::HkTail;
                        fm.k = k;
                        fm.l = l;
                        fm.delta_digits = sample_delta(k, l);
                        forms.push_back(fm);
                        if (p == 2) ++z4_tails;
                        for (u64 n = l + 1; n < k; ++n) {
                            P2CanonicalForm fm2 = fm;
                            fm2.variant = P2Variant::HkTailPHn;
                            fm2.n = n;
                            // digits at exponents >= n would be absorbed
                            if (fm2.delta_digits.size() > n - l) fm2.delta_digits.resize(n - l);
                            while (fm2.delta_digits.size() > 1 && fm2.delta_digits.back().is_zero())
                                fm2.delta_digits.pop_back();
                            forms.push_back(fm2);
                            if (p == 2) ++z4_tails;
                        }
                    }
                }

            for (const P2CanonicalForm& form : forms) {
                Code code = code_from_p2_form(amb, form);
                auto claimed = cyclic_ps_distance_p2(p, 1, s, form, fp).distance;
                auto brute = brute_min_weight(code, budget, threads);
                ++res.checked;
                if (claimed != brute) {
                    std::ostringstream os;
                    os << "p=" << p << " s=" << s << " variant k=" << form.k << " l=" << form.l
                       << " n=" << form.n << ": formula " << detail::opt_str(claimed)
                       << " vs brute " << detail::opt_str(brute);
                    res.mismatch(os.str());
                }
            }
        }
    }
    if (z4_tails < 50) res.mismatch("fewer than 50 sampled delta tails");
    res.millis = sw.millis();
    return res;
}

// ---------------------------------------------------------------- criterion 4
inline CheckResult standard_form_random(u64 trials_per_ambient, u64 seed,
                                        const EnumerationBudget& budget) {
    detail::Stopwatch sw;
    CheckResult res;
    res.name = "standard-form basis on random generator sets";
    std::mt19937_64 rng(seed);
    for (const Ambient& amb : detail::criterion_ambients()) {
        for (u64 trial = 0; trial < trials_per_ambient; ++trial) {
            Code code = detail::random_code(amb, rng);
            ++res.checked;
            const StandardFormBasis& basis = code.standard_form_basis();
            std::vector<Poly> regen;
            for (const MergedGen& g : basis.merged) regen.push_back(g.g.times_p_power(g.j));
            Code rebuilt(amb, regen);
            if (!ideals_equal(code, rebuilt)) {
                res.mismatch("standard form does not regenerate the ideal");
                continue;
            }
            std::vector<Code> comps;
            if (amb.num_components() == 1)
                comps.push_back(code);
            else
                comps = code.component_split();
            bool ok = true;
            for (size_t c = 0; c < comps.size() && ok; ++c) {
                std::string why;
                if (!detail::check_standard_form_items(basis.per_component[c],
                                                       comps[c].ambient(), why)) {
                    res.mismatch("definition item fails: " + why);
                    ok = false;
                }
            }
            if (!ok) continue;
            TorsionProfile from_basis = basis_to_torsion(basis, amb);
            TorsionProfile brute = brute_torsion_degrees(code, budget);
            if (from_basis.degrees != brute.degrees)
                res.mismatch("torsional degrees disagree with the definition");
        }
    }
    res.millis = sw.millis();
    return res;
}

// ---------------------------------------------------------------- criterion 5
inline CheckResult uniqueness_fixed_point(u64 trials_per_ambient, u64 seed) {
    detail::Stopwatch sw;
    CheckResult res;
    res.name = "unique generating set is presentation-independent";
    std::mt19937_64 rng(seed);
    for (const Ambient& amb : detail::criterion_ambients()) {
        for (u64 trial = 0; trial < trials_per_ambient; ++trial) {
            Code code = detail::random_code(amb, rng);
            ++res.checked;
            const StandardFormBasis& basis = code.standard_form_basis();
            std::vector<Poly> regen;
            for (const MergedGen& g : basis.merged) regen.push_back(g.g.times_p_power(g.j));
            Code other(amb, regen);
            if (detail::unique_sets_of(code) != detail::unique_sets_of(other))
                res.mismatch("unique sets differ between presentations");
        }
    }
    res.millis = sw.millis();
    return res;
}

// ---------------------------------------------------------------- criterion 6
inline CheckResult weight_formula_exact() {
    detail::Stopwatch sw;
    CheckResult res;
    res.name = "binomial power weight formula vs literal expansion";
    struct Case {
        u64 p, bound;
    };
    for (const Case& c : std::vector<Case>{{2, 128}, {3, 243}, {5, 125}}) {
        Ring field = Ring::make(c.p, 1, 1);
        for (u64 eta = 1; eta <= 2; ++eta)
            for (u64 gamma = 1; gamma < c.p; ++gamma) {
                Poly base = detail::binomial(field, eta, gamma);
                Poly cur = Poly::one(field);
                for (u64 n = 0; n < c.bound; ++n) {
                    ++res.checked;
                    if (cur.weight() != weight_of_binomial_power(n, c.p)) {
                        std::ostringstream os;
                        os << "p=" << c.p << " eta=" << eta << " gamma=" << gamma << " N=" << n;
                        res.mismatch(os.str());
                    }
                    cur = cur * base;
                }
            }
    }
    res.millis = sw.millis();
    return res;
}

// ---------------------------------------------------------------- criterion 7
inline CheckResult weight_retaining_random(u64 n_retaining, u64 n_product, u64 seed) {
    detail::Stopwatch sw;
    CheckResult res;
    res.name = "weight-retaining inequality and product identity";
    std::mt19937_64 rng(seed);
    for (u64 it = 0; it < n_retaining; ++it) {
        u64 p = (it % 2 == 0) ? 2 : 3;
        Ring field = Ring::make(p, 1, 1);
        Poly g = detail::random_code_poly(field, 1 + rng() % 32, rng);
        u64 eta = 1 + rng() % 3;
        u64 gamma = 1 + rng() % (p - 1);
        u64 n = rng() % 64;
        ++res.checked;
        if (!weight_retaining_check(g, eta, Elem::from_int(field, gamma), n))
            res.mismatch("weight-retaining inequality violated");
    }
    for (u64 it = 0; it < n_product; ++it) {
        u64 p = (it % 2 == 0) ? 2 : 3;
        Ring field = Ring::make(p, 1, 1);
        u64 s = 1 + rng() % 3;
        u64 ps = ipow(p, s);
        u64 i = 1 + rng() % (ps - 1);
        u64 eta = 1 + rng() % 2;
        Elem g1 = Elem::from_int(field, 1 + rng() % (p - 1));
        Elem g2 = Elem::from_int(field, 1 + rng() % (p - 1));
        ++res.checked;
        if (!product_weight_identity_check(field, eta, g1, g2, i, s))
            res.mismatch("product weight identity violated");
    }
    res.millis = sw.millis();
    return res;
}

// ---------------------------------------------------------------- criterion 8
inline CheckResult structure_predicates(const EnumerationBudget& budget) {
    detail::Stopwatch sw;
    CheckResult res;
    res.name = "chain predicate, idempotent identities, socle containment";
    struct Case {
        u64 p, a;
        std::vector<i64> f;
    };
    std::vector<Case> chain_cases = {
        {2, 1, {-1, 0, 0, 0, 1}},  // F_2[x]/(x^4-1)
        {2, 2, {-1, 0, 1}},        // Z4[x]/(x^2-1)
        {2, 2, {1, 0, 1}},         // Z4[x]/(x^2+1)
        {2, 2, {-1, 0, 0, 0, 1}},  // Z4[x]/(x^4-1)
        {3, 2, {-1, 0, 0, 1}},     // Z9[x]/(x^3-1)
    };
    for (const Case& c : chain_cases) {
        Ring r = Ring::make(c.p, c.a, 1);
        Ambient amb = Ambient::make(r, Poly::from_ints(r, c.f));
        ++res.checked;
        bool closed = amb.is_chain_ring();
        bool brute = brute_is_chain(amb, budget);
        if (closed != brute) {
            std::ostringstream os;
            os << "chain predicate disagrees on p=" << c.p << " a=" << c.a;
            res.mismatch(os.str());
        }
    }
    std::vector<Case> idem_cases = {
        {2, 2, {-1, 0, 0, 1}},                 // Z4[x]/(x^3-1)
        {3, 2, {-1, 0, 1}},                    // Z9[x]/(x^2-1)
        {3, 2, {-1, 0, 0, 1}},                 // Z9[x]/(x^3-1)
        {2, 2, {-1, 0, 0, 0, 0, 0, 1}},        // Z4[x]/(x^6-1)
    };
    for (const Case& c : idem_cases) {
        Ring r = Ring::make(c.p, c.a, 1);
        Ambient amb = Ambient::make(r, Poly::from_ints(r, c.f));
        const std::vector<Poly>& e = amb.idempotents();
        Poly sum = Poly::zero(r);
        bool ok = true;
        for (size_t i = 0; i < e.size(); ++i) {
            sum = sum + e[i];
            if (amb.reduce(e[i] * e[i]) != e[i]) ok = false;
            for (size_t j = i + 1; j < e.size(); ++j)
                if (!amb.reduce(e[i] * e[j]).is_zero()) ok = false;
        }
        if (amb.reduce(sum) != Poly::one(r)) ok = false;
        ++res.checked;
        if (!ok) res.mismatch("idempotent identities fail");
    }
    // socle of Z4[x]/(x^2-1) sits inside every nonzero ideal
    {
        Ring r = Ring::make(2, 2, 1);
        Ambient amb = Ambient::make(r, Poly::from_ints(r, {-1, 0, 1}));
        Poly socle = amb.structure_report().socle_generator;
        std::vector<u64> flat = flatten_poly(socle, amb.n());
        for (const ZSpan& ideal : enumerate_all_ideals(amb, budget)) {
            if (ideal.rows().empty()) continue;
            ++res.checked;
            if (!ideal.contains(flat)) res.mismatch("socle not contained in a nonzero ideal");
        }
    }
    res.millis = sw.millis();
    return res;
}

// ---------------------------------------------------------------- criterion 9
inline CheckResult distance_projection(u64 samples, u64 seed, const EnumerationBudget& budget) {
    detail::Stopwatch sw;
    CheckResult res;
    res.name = "code distance equals its top torsion projection";
    std::mt19937_64 rng(seed);
    std::vector<Ambient> ambients = detail::criterion_ambients();
    u64 collected = 0;
    while (collected < samples) {
        const Ambient& amb = ambients[rng() % ambients.size()];
        Code code = detail::random_code(amb, rng);
        if (code.is_zero() || code.is_whole()) continue;
        ++collected;
        ++res.checked;
        const Ring& r = amb.ring();
        u64 n = amb.n(), m = r.m();
        u64 shift = r.a() - 1;
        u64 q = ipow(r.p(), shift);
        CodewordEnumerator en(code);
        if (en.total_capped(budget.max_codewords) > budget.max_codewords) continue;
        std::optional<u64> d_code;
        std::set<std::vector<u64>> projected;
        Ring res_ring = r.residue();
        std::vector<u64> w;
        while (en.next(w)) {
            u64 wt = flat_weight(w, n, m);
            if (wt != 0 && (!d_code || wt < *d_code)) d_code = wt;
            bool div = true;
            for (u64 x : w)
                if (x % q != 0) {
                    div = false;
                    break;
                }
            if (!div) continue;
            std::vector<u64> proj(w.size());
            for (size_t c = 0; c < w.size(); ++c) proj[c] = (w[c] / q) % r.p();
            projected.insert(std::move(proj));
        }
        std::optional<u64> d_proj;
        bool proj_has_one = false;
        for (const std::vector<u64>& v : projected) {
            u64 wt = flat_weight(v, n, m);
            if (wt == 0) continue;
            if (!d_proj || wt < *d_proj) d_proj = wt;
            if (unflatten_poly(res_ring, v, n) == Poly::one(res_ring)) proj_has_one = true;
        }
        if (d_code != d_proj) {
            std::ostringstream os;
            os << "distance " << detail::opt_str(d_code) << " vs projection "
               << detail::opt_str(d_proj);
            res.mismatch(os.str());
        }
        // proper nonzero projection of a constacyclic code has distance >= 2
        if (d_proj && !proj_has_one && *d_proj < 2) res.mismatch("projection distance below 2");
    }
    res.millis = sw.millis();
    return res;
}

// --------------------------------------------------------------- criterion 10
inline CheckResult gr_lifting_vs_oracle(const EnumerationBudget& budget, u64 seed,
                                        unsigned threads = 1) {
    detail::Stopwatch sw;
    CheckResult res;
    res.name = "distance lifting to GR(p^a, m) vs enumeration";
    std::mt19937_64 rng(seed);
    // cyclic over Z4, lengths 2, 4, 8
    for (u64 s = 1; s <= 3; ++s) {
        Ring r = Ring::make(2, 2, 1);
        u64 t = ipow(2, s);
        Ambient amb = Ambient::make(r, Poly::monomial(r, t, Elem::one(r)) - Poly::one(r));
        Poly h = Poly::from_ints(r, {-1, 1});
        auto run = [&](std::vector<Poly> gens, const std::string& what) {
            Code code(amb, std::move(gens));
            auto claimed = gr_distance_eta_ps(code).distance;
            auto brute = brute_min_weight(code, budget, threads);
            ++res.checked;
            if (claimed != brute)
                res.mismatch("Z4 len " + std::to_string(t) + " " + what + ": formula " +
                             detail::opt_str(claimed) + " vs brute " + detail::opt_str(brute));
        };
        for (u64 k = 0; k <= t; ++k) run({h.pow(k)}, "(x-1)^" + std::to_string(k));
        for (u64 n = 0; n <= t; ++n) run({h.pow(n).times_p_power(1)}, "p(x-1)^" + std::to_string(n));
        for (u64 k = 0; k <= t; ++k)
            for (u64 n = 0; n <= t; ++n)
                run({h.pow(k), h.pow(n).times_p_power(1)},
                    "(x-1)^" + std::to_string(k) + ",p(x-1)^" + std::to_string(n));
    }
    // lambda-cyclic over Z9, length 6 (lambda = 1)
    {
        Ring r = Ring::make(3, 2, 1);
        Ambient amb = Ambient::make(r, Poly::monomial(r, 6, Elem::one(r)) - Poly::one(r));
        Poly minus = Poly::from_ints(r, {-1, 1});
        Poly plus = Poly::from_ints(r, {1, 1});
        auto run = [&](std::vector<Poly> gens, const std::string& what) {
            Code code(amb, std::move(gens));
            auto claimed = gr_distance_2eta_ps(code).distance;
            auto brute = brute_min_weight(code, budget, threads);
            ++res.checked;
            if (claimed != brute)
                res.mismatch("Z9 len 6 " + what + ": formula " + detail::opt_str(claimed) +
                             " vs brute " + detail::opt_str(brute));
        };
        for (u64 i = 0; i <= 3; ++i)
            for (u64 j = 0; j <= 3; ++j) {
                run({minus.pow(i) * plus.pow(j)},
                    "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
                run({(minus.pow(i) * plus.pow(j)).times_p_power(1)},
                    "p-scaled (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
        for (u64 it = 0; it < 60; ++it) {
            u64 i = rng() % 4, j = rng() % 4, n = rng() % 4, q = rng() % 4;
            run({minus.pow(i) * plus.pow(j), (minus.pow(n) * plus.pow(q)).times_p_power(1)},
                "two-generator sample");
        }
    }
    res.millis = sw.millis();
    return res;
}

inline std::vector<CheckResult> run_all(const EnumerationBudget& budget, u64 seed,
                                        unsigned threads = 1) {
    std::vector<CheckResult> out;
    out.push_back(eta_ps_vs_oracle(budget, threads));
    out.push_back(two_eta_ps_vs_oracle(budget, threads));
    out.push_back(p2_cyclic_vs_oracle(budget, seed, threads));
    out.push_back(standard_form_random(200, seed, budget));
    out.push_back(uniqueness_fixed_point(200, seed + 1));
    out.push_back(weight_formula_exact());
    out.push_back(weight_retaining_random(1000, 200, seed + 2));
    out.push_back(structure_predicates(budget));
    out.push_back(distance_projection(100, seed + 3, budget));
    out.push_back(gr_lifting_vs_oracle(budget, seed + 4, threads));
    return out;
}

}  // namespace grcodes::verify
