#pragma once

#include <optional>

#include "zarith.hpp"

namespace grcodes {

// Row span of a matrix over Z_{p^a} kept in Howell normal form: pivots are
// p^v (unit-normalized), pivot columns strictly increase, entries above a
// pivot are reduced modulo it, and the span is closed under annihilator rows.
// This makes the form canonical for the span, so span equality is row-list
// equality and membership is plain reduction.
class ZSpan {
  public:
    ZSpan(ZMod z, u64 ncols) : z_(z), ncols_(ncols) {}

    static ZSpan from_rows(const ZMod& z, u64 ncols, std::vector<std::vector<u64>> rows) {
        ZSpan s(z, ncols);
        s.build(std::move(rows), false);
        return s;
    }
    static ZSpan from_rows_with_transform(const ZMod& z, u64 ncols,
                                          std::vector<std::vector<u64>> rows) {
        ZSpan s(z, ncols);
        s.build(std::move(rows), true);
        return s;
    }

    const ZMod& zmod() const { return z_; }
    u64 ncols() const { return ncols_; }
    const std::vector<std::vector<u64>>& rows() const { return rows_; }
    const std::vector<u64>& pivot_cols() const { return pivot_cols_; }
    const std::vector<u64>& pivot_vals() const { return pivot_vals_; }
    // expression of row i as a combination of the original input rows
    const std::vector<std::vector<u64>>& transform() const { return transform_; }

    bool contains(std::vector<u64> v) const {
        reduce_in_place(v, nullptr);
        return all_zero(v);
    }

    // returns the residual after reduction; coeffs (if non-null) receives the
    // multiplier used for each Howell row
    std::vector<u64> reduce(std::vector<u64> v, std::vector<u64>* coeffs = nullptr) const {
        if (coeffs) coeffs->assign(rows_.size(), 0);
        reduce_in_place(v, coeffs);
        return v;
    }

    bool contains_span(const ZSpan& other) const {
        for (const auto& r : other.rows_)
            if (!contains(r)) return false;
        return true;
    }

    friend bool operator==(const ZSpan& x, const ZSpan& y) { return x.rows_ == y.rows_; }

    // |span| = prod p^(a - v_i); capped to avoid overflow
    u64 cardinality_capped(u64 cap) const {
        u64 card = 1;
        for (u64 v : pivot_vals_) {
            u64 f = ipow(z_.p, z_.a - v);
            if (card > cap / f) return cap + 1;
            card *= f;
        }
        return card;
    }

  private:
    static bool all_zero(const std::vector<u64>& v) {
        for (u64 x : v)
            if (x) return false;
        return true;
    }

    void reduce_in_place(std::vector<u64>& v, std::vector<u64>* coeffs) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            u64 c = pivot_cols_[r];
            if (v[c] == 0) continue;
            u64 pv = ipow(z_.p, pivot_vals_[r]);
            if (v[c] % pv != 0) continue;  // cannot clear; residual stays nonzero
            u64 q = v[c] / pv;
            axpy_sub(v, q, rows_[r]);
            if (coeffs) (*coeffs)[r] = q;
        }
    }

    void axpy_sub(std::vector<u64>& v, u64 q, const std::vector<u64>& row) const {
        for (size_t j = 0; j < v.size(); ++j) v[j] = z_.sub(v[j], z_.mul(q, row[j]));
    }

    struct Row {
        std::vector<u64> v;  // ncols data columns, then transform columns
    };

    void build(std::vector<std::vector<u64>> input, bool with_transform) {
        size_t nin = input.size();
        std::vector<Row> work;
        work.reserve(nin);
        for (size_t i = 0; i < nin; ++i) {
            Row r;
            r.v = std::move(input[i]);
            r.v.resize(ncols_, 0);
            for (auto& x : r.v) x %= z_.mod;
            if (with_transform) {
                r.v.resize(ncols_ + nin, 0);
                r.v[ncols_ + i] = 1;
            }
            work.push_back(std::move(r));
        }

        std::vector<Row> result;
        for (u64 pass = 0;; ++pass) {
            result = echelon(std::move(work), with_transform ? ncols_ + nin : ncols_);
            // annihilator closure
            std::vector<Row> extra;
            for (const Row& r : result) {
                u64 c = leading_col(r);
                u64 v = z_.val(r.v[c]);
                if (v == 0) continue;
                Row t;
                t.v.resize(r.v.size());
                u64 f = ipow(z_.p, z_.a - v);
                for (size_t j = 0; j < r.v.size(); ++j) t.v[j] = z_.mul(f, r.v[j]);
                reduce_row(t, result);
                if (!all_zero_data(t)) extra.push_back(std::move(t));
            }
            if (extra.empty()) break;
            work = std::move(result);
            for (Row& t : extra) work.push_back(std::move(t));
            assert(pass < 4 * z_.a + 8);
        }

        // reduce entries above each pivot modulo the pivot
        for (size_t i = 0; i < result.size(); ++i) {
            u64 ci = leading_col(result[i]);
            u64 pv = ipow(z_.p, z_.val(result[i].v[ci]));
            for (size_t k = 0; k < i; ++k) {
                u64 q = result[k].v[ci] / pv;
                if (q == 0) continue;
                for (size_t j = 0; j < result[k].v.size(); ++j)
                    result[k].v[j] = z_.sub(result[k].v[j], z_.mul(q, result[i].v[j]));
            }
        }

        for (Row& r : result) {
            u64 c = leading_col(r);
            pivot_cols_.push_back(c);
            pivot_vals_.push_back(z_.val(r.v[c]));
            if (with_transform)
                transform_.push_back({r.v.begin() + static_cast<long>(ncols_), r.v.end()});
            r.v.resize(ncols_);
            rows_.push_back(std::move(r.v));
        }
    }

    u64 leading_col(const Row& r) const {
        for (u64 j = 0; j < ncols_; ++j)
            if (r.v[j]) return j;
        return ncols_;
    }

    bool all_zero_data(const Row& r) const {
        for (u64 j = 0; j < ncols_; ++j)
            if (r.v[j]) return false;
        return true;
    }

    void reduce_row(Row& t, const std::vector<Row>& rows) const {
        for (const Row& r : rows) {
            u64 c = leading_col(r);
            if (c >= ncols_ || t.v[c] == 0) continue;
            u64 pv = ipow(z_.p, z_.val(r.v[c]));
            if (t.v[c] % pv != 0) continue;
            u64 q = t.v[c] / pv;
            for (size_t j = 0; j < t.v.size(); ++j) t.v[j] = z_.sub(t.v[j], z_.mul(q, r.v[j]));
        }
    }

    // column-by-column echelon with unit-normalized p^v pivots
    std::vector<Row> echelon(std::vector<Row> active, size_t width) {
        std::vector<Row> result;
        for (u64 col = 0; col < ncols_; ++col) {
            size_t best = active.size();
            u64 best_val = z_.a + 1;
            for (size_t i = 0; i < active.size(); ++i) {
                if (active[i].v.empty() || active[i].v[col] == 0) continue;
                u64 v = z_.val(active[i].v[col]);
                if (v < best_val) {
                    best_val = v;
                    best = i;
                }
            }
            if (best == active.size()) continue;
            Row piv = std::move(active[best]);
            active.erase(active.begin() + static_cast<long>(best));
            u64 unit = piv.v[col] / ipow(z_.p, best_val);
            u64 uinv = z_.inv_unit(unit);
            for (size_t j = 0; j < width; ++j) piv.v[j] = z_.mul(piv.v[j], uinv);
            u64 pv = ipow(z_.p, best_val);
            for (Row& r : active) {
                if (r.v.empty() || r.v[col] == 0) continue;
                u64 q = r.v[col] / pv;  // exact: val >= pivot val
                for (size_t j = 0; j < width; ++j) r.v[j] = z_.sub(r.v[j], z_.mul(q, piv.v[j]));
            }
            result.push_back(std::move(piv));
            // drop rows that became zero in the data block
            std::vector<Row> keep;
            for (Row& r : active)
                if (!all_zero_data(r)) keep.push_back(std::move(r));
            active = std::move(keep);
        }
        return result;
    }

    ZMod z_;
    u64 ncols_;
    std::vector<std::vector<u64>> rows_;
    std::vector<u64> pivot_cols_;
    std::vector<u64> pivot_vals_;
    std::vector<std::vector<u64>> transform_;
};

// Finds x in span(A) with target - x in span(B); nullopt when target is not
// in span(A) + span(B).
inline std::optional<std::vector<u64>> solve_split(const ZMod& z, u64 ncols,
                                                   const std::vector<std::vector<u64>>& a_rows,
                                                   const std::vector<std::vector<u64>>& b_rows,
                                                   const std::vector<u64>& target) {
    std::vector<std::vector<u64>> stacked = a_rows;
    stacked.insert(stacked.end(), b_rows.begin(), b_rows.end());
    ZSpan h = ZSpan::from_rows_with_transform(z, ncols, stacked);
    std::vector<u64> lambda;
    std::vector<u64> residual = h.reduce(target, &lambda);
    for (u64 x : residual)
        if (x) return std::nullopt;
    // combine: target = sum lambda_r * H_r; expand H_r over the stacked rows
    std::vector<u64> stack_coeffs(stacked.size(), 0);
    for (size_t r = 0; r < h.rows().size(); ++r) {
        if (lambda[r] == 0) continue;
        const auto& t = h.transform()[r];
        for (size_t i = 0; i < stacked.size(); ++i)
            stack_coeffs[i] = z.add(stack_coeffs[i], z.mul(lambda[r], t[i]));
    }
    std::vector<u64> x(ncols, 0);
    for (size_t i = 0; i < a_rows.size(); ++i) {
        if (stack_coeffs[i] == 0) continue;
        for (u64 j = 0; j < ncols; ++j)
            x[j] = z.add(x[j], z.mul(stack_coeffs[i], a_rows[i][j]));
    }
    return x;
}

}  // namespace grcodes
