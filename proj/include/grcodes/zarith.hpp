#pragma once

#include "common.hpp"

namespace grcodes {

// Scalar arithmetic in Z_{p^a}. Residues are stored reduced into [0, p^a).
// p^a must fit well below 2^32 so products never overflow u64.
struct ZMod {
    u64 p = 0;
    u64 a = 0;
    u64 mod = 0;  // p^a

    ZMod() = default;
    ZMod(u64 p_, u64 a_) : p(p_), a(a_), mod(ipow(p_, a_)) {}

    u64 add(u64 x, u64 y) const { return (x + y) % mod; }
    u64 sub(u64 x, u64 y) const { return (x + mod - y % mod) % mod; }
    u64 mul(u64 x, u64 y) const { return (x * y) % mod; }
    u64 neg(u64 x) const { return x ? mod - x : 0; }

    u64 pow(u64 x, u64 e) const {
        u64 r = 1 % mod;
        x %= mod;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    // p-adic valuation of x; val(0) = a by convention.
    u64 val(u64 x) const {
        if (x == 0) return a;
        u64 v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    }

    bool is_unit(u64 x) const { return x % p != 0; }

    // Inverse of a unit via extended Euclid on (x, p^a).
    u64 inv_unit(u64 x) const {
        if (!is_unit(x)) fail(Err::NotAUnit, "inv_unit: argument divisible by p");
        i64 r0 = static_cast<i64>(mod), r1 = static_cast<i64>(x % mod);
        i64 s0 = 0, s1 = 1;
        while (r1 != 0) {
            i64 q = r0 / r1;
            i64 r2 = r0 - q * r1;
            i64 s2 = s0 - q * s1;
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        i64 inv = s0 % static_cast<i64>(mod);
        if (inv < 0) inv += static_cast<i64>(mod);
        return static_cast<u64>(inv);
    }

    // Exact division by p^k; requires p^k | x.
    u64 shift_down(u64 x, u64 k) const {
        u64 q = ipow(p, k);
        return x / q;  // caller guarantees divisibility
    }
};

}  // namespace grcodes
