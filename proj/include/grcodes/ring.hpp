#pragma once

#include <algorithm>
#include <cassert>
#include <memory>
#include <sstream>
#include <vector>

#include "zarith.hpp"

namespace grcodes {

namespace detail {

// Polynomial helpers over F_p on raw coefficient vectors (little-endian,
// trailing zeros trimmed). Used only for modulus validation and generation.
inline void fp_trim(std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline std::vector<u64> fp_mulmod(const std::vector<u64>& x, const std::vector<u64>& y,
                                  const std::vector<u64>& f, u64 p) {
    if (x.empty() || y.empty()) return {};
    std::vector<u64> r(x.size() + y.size() - 1, 0);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    // reduce modulo monic f
    size_t df = f.size() - 1;
    for (size_t k = r.size(); k-- > df;) {
        u64 c = r[k];
        if (c == 0) continue;
        r[k] = 0;
        for (size_t j = 0; j < df; ++j) r[k - df + j] = (r[k - df + j] + (p - f[j] % p) * c) % p;
    }
    r.resize(df);
    fp_trim(r);
    return r;
}

inline std::vector<u64> fp_powmod(std::vector<u64> base, u64 e, const std::vector<u64>& f, u64 p) {
    std::vector<u64> r{1};
    while (e) {
        if (e & 1) r = fp_mulmod(r, base, f, p);
        base = fp_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline std::vector<u64> fp_gcd(std::vector<u64> x, std::vector<u64> y, u64 p) {
    fp_trim(x);
    fp_trim(y);
    while (!y.empty()) {
        // x mod y with y made monic on the fly
        u64 lead = y.back();
        u64 lead_inv = ZMod(p, 1).inv_unit(lead);
        for (auto& c : y) c = c * lead_inv % p;
        while (x.size() >= y.size() && !x.empty()) {
            u64 c = x.back();
            size_t shift = x.size() - y.size();
            for (size_t j = 0; j < y.size(); ++j)
                x[shift + j] = (x[shift + j] + (p - y[j]) * c) % p;
            fp_trim(x);
        }
        std::swap(x, y);
    }
    return x;
}

inline std::vector<u64> fp_sub_x(std::vector<u64> v, u64 p) {
    // v - x
    v.resize(std::max<size_t>(v.size(), 2), 0);
    v[1] = (v[1] + p - 1) % p;
    fp_trim(v);
    return v;
}

inline bool fp_irreducible(const std::vector<u64>& f, u64 p) {
    if (f.size() < 2) return false;
    size_t m = f.size() - 1;
    if (m == 1) return true;
    // f irreducible iff x^(p^m) == x mod f and x^(p^(m/l)) - x is coprime to
    // f for every prime l dividing m
    std::vector<u64> x{0, 1};
    std::vector<u64> xq = x;
    for (size_t i = 0; i < m; ++i) xq = fp_powmod(xq, p, f, p);
    if (!fp_sub_x(xq, p).empty()) return false;
    for (u64 l = 2; l <= m; ++l) {
        if (m % l != 0 || !is_prime_u64(l)) continue;
        std::vector<u64> xe = x;
        for (size_t i = 0; i < m / l; ++i) xe = fp_powmod(xe, p, f, p);
        std::vector<u64> d = fp_sub_x(xe, p);
        if (d.empty()) return false;  // f divides x^(p^(m/l)) - x
        if (fp_gcd(d, f, p).size() > 1) return false;
    }
    return true;
}

}  // namespace detail

class Ring;
class Elem;

// Immutable context for GR(p^a, m) = Z_{p^a}[y] / <modulus>, shared by all
// elements of the ring. The residue field GR(p, m) is the same machinery with
// a = 1.
class RingCtx {
  public:
    u64 p, a, m;
    ZMod z;                         // scalars Z_{p^a}
    std::vector<u64> modulus;       // monic, degree m, coeffs in [0, p^a)
    u64 q;                          // p^m, size of the residue field

    static std::shared_ptr<const RingCtx> make(u64 p, u64 a, u64 m,
                                               const std::vector<u64>* modulus_opt);

    const std::shared_ptr<const RingCtx>& residue_ctx() const { return residue_; }
    // Teichmüller representative of the field element with code `idx`
    // (little-endian base-p encoding of its coefficients).
    const std::vector<u64>& teich_by_code(u64 idx) const { return teich_[idx]; }
    u64 field_code(const std::vector<u64>& residue_coeffs) const {
        u64 code = 0, mult = 1;
        for (u64 i = 0; i < m; ++i) {
            code += (i < residue_coeffs.size() ? residue_coeffs[i] % p : 0) * mult;
            mult *= p;
        }
        return code;
    }

    std::vector<u64> mul_vec(const std::vector<u64>& x, const std::vector<u64>& y) const {
        std::vector<u64> r(2 * m - 1, 0);
        for (u64 i = 0; i < m; ++i) {
            if (x[i] == 0) continue;
            for (u64 j = 0; j < m; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % z.mod;
        }
        for (size_t k = r.size(); k-- > m;) {
            u64 c = r[k];
            if (c == 0) continue;
            r[k] = 0;
            for (u64 j = 0; j < m; ++j) r[k - m + j] = z.sub(r[k - m + j], z.mul(modulus[j], c));
        }
        r.resize(m);
        return r;
    }

  private:
    mutable std::shared_ptr<const RingCtx> residue_;
    mutable std::vector<std::vector<u64>> teich_;
    friend class Ring;
};

// Cheap copyable handle to a ring context.
class Ring {
  public:
    Ring() = default;
    explicit Ring(std::shared_ptr<const RingCtx> ctx) : ctx_(std::move(ctx)) {}

    static Ring make(u64 p, u64 a, u64 m, const std::vector<u64>* modulus_opt = nullptr) {
        return Ring(RingCtx::make(p, a, m, modulus_opt));
    }

    bool valid() const { return static_cast<bool>(ctx_); }
    const RingCtx& ctx() const { return *ctx_; }
    const std::shared_ptr<const RingCtx>& ctx_ptr() const { return ctx_; }
    u64 p() const { return ctx_->p; }
    u64 a() const { return ctx_->a; }
    u64 m() const { return ctx_->m; }
    u64 char_pow() const { return ctx_->z.mod; }  // p^a
    u64 q() const { return ctx_->q; }             // p^m
    const ZMod& z() const { return ctx_->z; }
    const std::vector<u64>& modulus() const { return ctx_->modulus; }

    Ring residue() const { return ctx_->a == 1 ? *this : Ring(ctx_->residue_ctx()); }
    bool is_field() const { return ctx_->a == 1; }

    // rings with the same parameters and modulus are interchangeable
    bool same(const Ring& o) const {
        if (ctx_.get() == o.ctx_.get()) return true;
        if (!ctx_ || !o.ctx_) return false;
        return ctx_->p == o.ctx_->p && ctx_->a == o.ctx_->a && ctx_->m == o.ctx_->m &&
               ctx_->modulus == o.ctx_->modulus;
    }
    friend bool operator==(const Ring& x, const Ring& y) { return x.same(y); }

  private:
    std::shared_ptr<const RingCtx> ctx_;
};

// An element of GR(p^a, m): m residues in Z_{p^a}, power basis of the
// modulus root, always kept reduced.
class Elem {
  public:
    Elem() = default;
    Elem(Ring ring, std::vector<u64> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
        c_.resize(ring_.m(), 0);
        for (auto& x : c_) x %= ring_.char_pow();
    }

    static Elem zero(const Ring& r) { return Elem(r, std::vector<u64>(r.m(), 0)); }
    static Elem one(const Ring& r) {
        std::vector<u64> v(r.m(), 0);
        v[0] = 1 % r.char_pow();
        return Elem(r, v);
    }
    static Elem from_int(const Ring& r, u64 n) {
        std::vector<u64> v(r.m(), 0);
        v[0] = n % r.char_pow();
        return Elem(r, v);
    }

    const Ring& ring() const { return ring_; }
    const std::vector<u64>& coeffs() const { return c_; }
    u64 coeff(u64 i) const { return c_[i]; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](u64 x) { return x == 0; });
    }

    friend bool operator==(const Elem& x, const Elem& y) {
        return x.ring_.same(y.ring_) && x.c_ == y.c_;
    }
    friend bool operator!=(const Elem& x, const Elem& y) { return !(x == y); }

    friend Elem operator+(const Elem& x, const Elem& y) {
        const ZMod& z = x.ring_.z();
        std::vector<u64> r(x.c_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = z.add(x.c_[i], y.c_[i]);
        return Elem(x.ring_, std::move(r));
    }
    friend Elem operator-(const Elem& x, const Elem& y) {
        const ZMod& z = x.ring_.z();
        std::vector<u64> r(x.c_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = z.sub(x.c_[i], y.c_[i]);
        return Elem(x.ring_, std::move(r));
    }
    Elem operator-() const {
        const ZMod& z = ring_.z();
        std::vector<u64> r(c_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = z.neg(c_[i]);
        return Elem(ring_, std::move(r));
    }
    friend Elem operator*(const Elem& x, const Elem& y) {
        return Elem(x.ring_, x.ring_.ctx().mul_vec(x.c_, y.c_));
    }

    Elem pow(u64 e) const {
        Elem r = Elem::one(ring_);
        Elem b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // canonical projection onto the residue field GR(p, m)
    Elem project() const {
        Ring res = ring_.residue();
        std::vector<u64> r(c_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = c_[i] % ring_.p();
        return Elem(res, std::move(r));
    }

    // verbatim coefficient lift into a ring with the same (p, m)
    Elem lift_to(const Ring& target) const {
        return Elem(target, c_);
    }

    bool is_unit() const { return !project().is_zero(); }

    Elem inv() const {
        if (!is_unit()) fail(Err::NotAUnit, "inv: element is divisible by p");
        // invert the residue in the field, then Newton-lift w <- w(2 - zw)
        Elem rbar = project();
        Elem wbar = rbar.pow(ring_.q() - 2);
        Elem w = wbar.lift_to(ring_);
        Elem two = Elem::from_int(ring_, 2);
        for (u64 it = 0; it < ring_.a() + 1; ++it) {
            Elem prod = (*this) * w;
            if (prod == Elem::one(ring_)) break;
            w = w * (two - prod);
        }
        assert((*this) * w == Elem::one(ring_));
        return w;
    }

    // Teichmüller lift of this element's residue.
    Elem teichmuller() const {
        const RingCtx& ctx = ring_.ctx();
        std::vector<u64> res(c_.size());
        for (size_t i = 0; i < res.size(); ++i) res[i] = c_[i] % ctx.p;
        return Elem(ring_, ctx.teich_by_code(ctx.field_code(res)));
    }

    bool divisible_by_p() const {
        for (u64 x : c_)
            if (x % ring_.p() != 0) return false;
        return true;
    }

    // exact division by p^k (requires every coefficient divisible by p^k)
    Elem shift_down(u64 k) const {
        u64 q = ipow(ring_.p(), k);
        std::vector<u64> r(c_.size());
        for (size_t i = 0; i < r.size(); ++i) {
            assert(c_[i] % q == 0);
            r[i] = c_[i] / q;
        }
        return Elem(ring_, std::move(r));
    }

    Elem times_p_power(u64 k) const {
        const ZMod& z = ring_.z();
        u64 f = ipow(ring_.p(), k) % z.mod;
        std::vector<u64> r(c_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = z.mul(c_[i], f);
        return Elem(ring_, std::move(r));
    }

    // digits z_0,...,z_{a-1}, each Teichmüller, with sum p^i z_i == *this
    std::vector<Elem> padic_digits() const {
        std::vector<Elem> digits;
        Elem cur = *this;
        for (u64 i = 0; i < ring_.a(); ++i) {
            Elem d = cur.teichmuller();
            digits.push_back(d);
            cur = (cur - d).shift_down(1);
        }
        return digits;
    }

    static Elem padic_recompose(const Ring& r, const std::vector<Elem>& digits) {
        Elem acc = Elem::zero(r);
        for (size_t i = 0; i < digits.size(); ++i) acc = acc + digits[i].times_p_power(i);
        return acc;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
        os << "]";
        return os.str();
    }

  private:
    Ring ring_;
    std::vector<u64> c_;
};

inline std::shared_ptr<const RingCtx> RingCtx::make(u64 p, u64 a, u64 m,
                                                    const std::vector<u64>* modulus_opt) {
    if (!is_prime_u64(p)) fail(Err::NotPrime, "ring characteristic base is not prime");
    if (a < 1 || m < 1) fail(Err::OutOfRange, "require a >= 1 and m >= 1");
    auto ctx = std::make_shared<RingCtx>();
    ctx->p = p;
    ctx->a = a;
    ctx->m = m;
    ctx->z = ZMod(p, a);
    ctx->q = ipow(p, m);
    if (ctx->z.mod > (u64(1) << 31)) fail(Err::OutOfRange, "p^a too large");
    if (ctx->q > (u64(1) << 20)) fail(Err::OutOfRange, "p^m too large");

    if (modulus_opt) {
        std::vector<u64> f = *modulus_opt;
        detail::fp_trim(f);
        if (f.size() != m + 1) fail(Err::NotIrreducible, "modulus degree must equal m");
        for (auto& c : f) c %= ctx->z.mod;
        if (f.back() != 1) fail(Err::NotMonic, "modulus must be monic");
        std::vector<u64> fbar(f.size());
        for (size_t i = 0; i < f.size(); ++i) fbar[i] = f[i] % p;
        detail::fp_trim(fbar);
        if (fbar.size() != m + 1 || !detail::fp_irreducible(fbar, p))
            fail(Err::NotIrreducible, "modulus residue is not irreducible over F_p");
        ctx->modulus = f;
    } else {
        // deterministic search: monic degree-m polynomials over F_p in
        // lexicographic order of (c_0, c_1, ..., c_{m-1}); first irreducible
        // wins, coefficients lifted verbatim
        std::vector<u64> f(m + 1, 0);
        f[m] = 1;
        bool found = false;
        for (u64 k = 0; k < ipow(p, m); ++k) {
            u64 t = k;
            for (u64 i = 0; i < m; ++i) {
                f[i] = t % p;
                t /= p;
            }
            if (detail::fp_irreducible(f, p)) {
                found = true;
                break;
            }
        }
        if (!found) fail(Err::NotIrreducible, "no irreducible modulus found");
        ctx->modulus = f;
    }

    if (a > 1) {
        std::vector<u64> fbar(ctx->modulus.size());
        for (size_t i = 0; i < fbar.size(); ++i) fbar[i] = ctx->modulus[i] % p;
        ctx->residue_ = RingCtx::make(p, 1, m, &fbar);
    }

    // Teichmüller table: lift each residue-field element verbatim and iterate
    // z -> z^(p^m) to the fixed point (at most a steps).
    Ring self(std::shared_ptr<const RingCtx>(ctx.get(), [](const RingCtx*) {}));
    ctx->teich_.resize(ctx->q);
    for (u64 code = 0; code < ctx->q; ++code) {
        std::vector<u64> v(m);
        u64 t = code;
        for (u64 i = 0; i < m; ++i) {
            v[i] = t % p;
            t /= p;
        }
        Elem z(self, v);
        for (u64 it = 0; it < a; ++it) {
            Elem nz = z.pow(ctx->q);
            if (nz == z) break;
            z = nz;
        }
        assert(z.pow(ctx->q) == z);
        ctx->teich_[code] = z.coeffs();
    }
    return ctx;
}

// The Teichmüller set: all p^m solutions of z^(p^m) = z.
inline std::vector<Elem> teichmuller_set(const Ring& r) {
    std::vector<Elem> out;
    out.reserve(r.q());
    for (u64 code = 0; code < r.q(); ++code) out.emplace_back(r, r.ctx().teich_by_code(code));
    return out;
}

}  // namespace grcodes
