#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grcodes {

using u64 = std::uint64_t;
using i64 = std::int64_t;

enum class Err {
    NotPrime,
    NotIrreducible,
    NotAUnit,
    DivisorNotRegular,
    NotRegular,
    NotMonic,
    FactorsNotCoprime,
    NotPrimaryComponent,
    WrongCharacteristic,
    OutOfRange,
    EvenPrime,
    ReducibleModulus,
    ZeroCode,
    BudgetExceeded,
    UnsupportedCase,
    ParseError,
};

class Error : public std::runtime_error {
  public:
    Error(Err kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Err kind() const { return kind_; }

  private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& what) { throw Error(kind, what); }

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline u64 ipow(u64 base, u64 exp) {
    u64 r = 1;
    while (exp--) r *= base;
    return r;
}

// floor(log_p(n)) for n >= 1, exact power check helper
inline bool is_power_of(u64 n, u64 p, u64& exp_out) {
    u64 e = 0;
    while (n % p == 0 && n > 1) {
        n /= p;
        ++e;
    }
    if (n != 1) return false;
    exp_out = e;
    return true;
}

}  // namespace grcodes
