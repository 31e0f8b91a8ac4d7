#pragma once

#include <set>
#include <thread>

#include "code.hpp"

namespace grcodes {

struct EnumerationBudget {
    u64 max_codewords = u64(1) << 24;
    u64 max_ambient_size = u64(1) << 16;
};

// Streams every codeword exactly once (including zero) as a flat coefficient
// vector: mixed-radix odometer over the Howell basis, digit i running over
// [0, p^(a - v_i)).
class CodewordEnumerator {
  public:
    explicit CodewordEnumerator(const Code& code)
        : z_(code.ambient().ring().z()), n_(code.ambient().n()), m_(code.ambient().ring().m()) {
        const ZSpan& span = code.span();
        rows_ = span.rows();
        for (u64 v : span.pivot_vals()) radix_.push_back(ipow(z_.p, z_.a - v));
        digits_.assign(rows_.size(), 0);
        cur_.assign(n_ * m_, 0);
        // wrap_vec[i] = radix_i * row_i, subtracted when digit i wraps around
        for (size_t i = 0; i < rows_.size(); ++i) {
            std::vector<u64> w(rows_[i].size());
            for (size_t j = 0; j < w.size(); ++j) w[j] = z_.mul(radix_[i] % z_.mod, rows_[i][j]);
            wrap_.push_back(std::move(w));
        }
    }

    u64 total_capped(u64 cap) const {
        u64 t = 1;
        for (u64 r : radix_) {
            if (t > cap / r) return cap + 1;
            t *= r;
        }
        return t;
    }

    // false once the stream is exhausted
    bool next(std::vector<u64>& out) {
        if (done_) return false;
        out = cur_;
        advance();
        return true;
    }

  private:
    void advance() {
        size_t i = 0;
        for (; i < digits_.size(); ++i) {
            ++digits_[i];
            add_row(rows_[i]);
            if (digits_[i] < radix_[i]) break;
            digits_[i] = 0;
            sub_vec(wrap_[i]);
        }
        if (i == digits_.size()) done_ = true;
    }
    void add_row(const std::vector<u64>& r) {
        for (size_t j = 0; j < cur_.size(); ++j) cur_[j] = z_.add(cur_[j], r[j]);
    }
    void sub_vec(const std::vector<u64>& r) {
        for (size_t j = 0; j < cur_.size(); ++j) cur_[j] = z_.sub(cur_[j], r[j]);
    }

    ZMod z_;
    u64 n_, m_;
    std::vector<std::vector<u64>> rows_;
    std::vector<u64> radix_;
    std::vector<u64> digits_;
    std::vector<u64> cur_;
    std::vector<std::vector<u64>> wrap_;
    bool done_ = false;
};

inline u64 flat_weight(const std::vector<u64>& v, u64 n, u64 m) {
    u64 w = 0;
    for (u64 i = 0; i < n; ++i)
        for (u64 j = 0; j < m; ++j)
            if (v[i * m + j]) {
                ++w;
                break;
            }
    return w;
}

// materializes the full code; throws BudgetExceeded first when too large
inline std::vector<Poly> enumerate_codewords(const Code& code, const EnumerationBudget& budget) {
    CodewordEnumerator en(code);
    if (en.total_capped(budget.max_codewords) > budget.max_codewords)
        fail(Err::BudgetExceeded, "enumerate_codewords: code larger than the budget");
    std::vector<Poly> out;
    std::vector<u64> v;
    const Ring& r = code.ambient().ring();
    u64 n = code.ambient().n();
    while (en.next(v)) out.push_back(unflatten_poly(r, v, n));
    return out;
}

// exact minimum Hamming weight over the nonzero codewords; empty for the
// zero code
inline std::optional<u64> brute_min_weight(const Code& code, const EnumerationBudget& budget,
                                           unsigned threads = 1) {
    const ZSpan& span = code.span();
    u64 card = span.cardinality_capped(budget.max_codewords);
    if (card > budget.max_codewords)
        fail(Err::BudgetExceeded, "brute_min_weight: code larger than the budget");
    if (span.rows().empty()) return std::nullopt;
    u64 n = code.ambient().n();
    u64 m = code.ambient().ring().m();
    const ZMod& z = code.ambient().ring().z();

    // partition on the outermost odometer digit
    size_t last = span.rows().size() - 1;
    u64 outer_radix = ipow(z.p, z.a - span.pivot_vals()[last]);
    unsigned nthreads = threads;
    if (nthreads < 2 || outer_radix < 2 || card < (u64(1) << 16)) nthreads = 1;

    auto scan_slice = [&](u64 outer_lo, u64 outer_hi, u64& best) {
        best = ~u64(0);
        std::vector<std::vector<u64>> rows(span.rows().begin(), span.rows().end() - 1);
        std::vector<u64> radix;
        for (size_t i = 0; i + 1 < span.rows().size(); ++i)
            radix.push_back(ipow(z.p, z.a - span.pivot_vals()[i]));
        std::vector<u64> base(n * m, 0);
        const std::vector<u64>& outer_row = span.rows()[last];
        for (u64 c = 0; c < outer_lo; ++c)
            for (size_t j = 0; j < base.size(); ++j) base[j] = z.add(base[j], outer_row[j]);
        for (u64 c = outer_lo; c < outer_hi; ++c) {
            // inner odometer over the remaining digits
            std::vector<u64> digits(rows.size(), 0);
            std::vector<u64> cur = base;
            while (true) {
                u64 w = flat_weight(cur, n, m);
                if (w != 0 && w < best) best = w;
                size_t i = 0;
                for (; i < rows.size(); ++i) {
                    ++digits[i];
                    for (size_t j = 0; j < cur.size(); ++j) cur[j] = z.add(cur[j], rows[i][j]);
                    if (digits[i] < radix[i]) break;
                    digits[i] = 0;
                    for (size_t j = 0; j < cur.size(); ++j)
                        cur[j] = z.sub(cur[j], z.mul(radix[i] % z.mod, rows[i][j]));
                }
                if (i == rows.size()) break;
            }
            for (size_t j = 0; j < base.size(); ++j) base[j] = z.add(base[j], outer_row[j]);
        }
    };

    u64 best = ~u64(0);
    if (nthreads == 1) {
        scan_slice(0, outer_radix, best);
    } else {
        std::vector<std::thread> pool;
        std::vector<u64> results(nthreads, ~u64(0));
        u64 chunk = (outer_radix + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            u64 lo = t * chunk, hi = std::min(outer_radix, (t + 1) * chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi, t] { scan_slice(lo, hi, results[t]); });
        }
        for (auto& th : pool) th.join();
        for (u64 r : results) best = std::min(best, r);
    }
    assert(best != ~u64(0));
    return best;
}

// Torsional degrees straight from the definition: enumerate the code, keep
// the words divisible by p^i, project the quotient by p^i and take the least
// base-valuation of the nonzero projections.
inline TorsionProfile brute_torsion_degrees(const Code& code, const EnumerationBudget& budget) {
    TorsionProfile prof;
    std::vector<Code> comps;
    if (code.ambient().num_components() == 1)
        comps.push_back(code);
    else
        comps = code.component_split();
    for (const Code& cc : comps) {
        const Ambient& amb = cc.ambient();
        const Ring& r = amb.ring();
        const Component& comp = amb.components()[0];
        u64 n = amb.n(), m = r.m();
        Poly hbar = comp.base.project();
        Ring res = r.residue();
        CodewordEnumerator en(cc);
        if (en.total_capped(budget.max_codewords) > budget.max_codewords)
            fail(Err::BudgetExceeded, "brute_torsion_degrees: code larger than the budget");
        // distinct residues of w / p^i over the words divisible by p^i
        std::vector<std::set<std::vector<u64>>> residues(r.a());
        std::vector<u64> w;
        while (en.next(w)) {
            for (u64 i = 0; i < r.a(); ++i) {
                u64 q = ipow(r.p(), i);
                bool div = true;
                for (u64 x : w)
                    if (x % q != 0) {
                        div = false;
                        break;
                    }
                if (!div) break;  // not divisible by p^i, nor by higher powers
                std::vector<u64> proj(w.size());
                for (size_t c = 0; c < w.size(); ++c) proj[c] = (w[c] / q) % r.p();
                residues[i].insert(std::move(proj));
            }
        }
        std::vector<u64> T(r.a(), comp.t);
        for (u64 i = 0; i < r.a(); ++i) {
            u64 best = comp.t;
            for (const std::vector<u64>& v : residues[i]) {
                if (flat_weight(v, n, m) == 0) continue;
                Poly wbar = unflatten_poly(res, v, n);
                std::vector<Poly> digs = h_digits(wbar, hbar);
                u64 val = 0;
                while (digs[val].is_zero()) ++val;
                best = std::min(best, val);
            }
            T[i] = best;
        }
        prof.degrees.push_back(std::move(T));
    }
    return prof;
}

// canonical Howell forms compared
inline bool ideals_equal(const Code& a, const Code& b) { return a.equals(b); }

// Every ideal of the ambient: all principal spans, closed under sums.
inline std::vector<ZSpan> enumerate_all_ideals(const Ambient& amb,
                                               const EnumerationBudget& budget) {
    const Ring& r = amb.ring();
    u64 n = amb.n(), m = r.m();
    u64 size = 1;
    for (u64 i = 0; i < n * m; ++i) {
        if (size > budget.max_ambient_size / r.char_pow())
            fail(Err::BudgetExceeded, "enumerate_all_ideals: ambient larger than the budget");
        size *= r.char_pow();
    }
    u64 ncols = n * m;
    std::map<std::vector<std::vector<u64>>, ZSpan> ideals;
    std::vector<u64> coeffs(ncols, 0);
    while (true) {
        Poly g = unflatten_poly(r, coeffs, n);
        ZSpan span = ZSpan::from_rows(r.z(), ncols, ideal_rows(amb, {g}));
        ideals.emplace(span.rows(), span);
        size_t i = 0;
        for (; i < coeffs.size(); ++i) {
            if (++coeffs[i] < r.char_pow()) break;
            coeffs[i] = 0;
        }
        if (i == coeffs.size()) break;
    }
    while (true) {
        bool grew = false;
        std::vector<const ZSpan*> list;
        for (auto& [k, s] : ideals) list.push_back(&s);
        for (size_t i = 0; i < list.size() && !grew; ++i)
            for (size_t j = i + 1; j < list.size() && !grew; ++j) {
                std::vector<std::vector<u64>> rows = list[i]->rows();
                for (const auto& row : list[j]->rows()) rows.push_back(row);
                ZSpan sum = ZSpan::from_rows(r.z(), ncols, rows);
                if (!ideals.count(sum.rows())) {
                    ideals.emplace(sum.rows(), sum);
                    grew = true;
                }
            }
        if (!grew) break;
    }
    std::vector<ZSpan> out;
    for (auto& [k, s] : ideals) out.push_back(s);
    return out;
}

// ideals linearly ordered under inclusion
inline bool brute_is_chain(const Ambient& amb, const EnumerationBudget& budget) {
    std::vector<ZSpan> ideals = enumerate_all_ideals(amb, budget);
    for (size_t i = 0; i < ideals.size(); ++i)
        for (size_t j = i + 1; j < ideals.size(); ++j)
            if (!ideals[i].contains_span(ideals[j]) && !ideals[j].contains_span(ideals[i]))
                return false;
    return true;
}

}  // namespace grcodes
