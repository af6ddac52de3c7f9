#ifndef FMZV_MODULAR_HPP
#define FMZV_MODULAR_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fmzv {

// Primes are capped below 2^31 so that products of residues fit in
// uint64_t without wide intermediates.
inline constexpr uint64_t kMaxPrime = (uint64_t{1} << 31) - 1;

bool is_prime(uint64_t n);

// All primes in [lo, hi], ascending (deterministic sieve).
std::vector<uint32_t> primes_in_range(uint32_t lo, uint32_t hi);

// Arithmetic mod one prime.  For small p an inverse table is built once
// by the usual recurrence inv[i] = -(p/i) * inv[p mod i]; above the table
// threshold inverses fall back to Fermat exponentiation.
class PrimeCtx {
public:
    explicit PrimeCtx(uint64_t p);

    uint64_t p() const { return p_; }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    uint64_t mul(uint64_t a, uint64_t b) const { return a * b % p_; }

    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        a %= p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // inverse of n (0 < n < p)
    uint64_t inv(uint64_t n) const {
        return n < inv_.size() ? inv_[n] : pow(n, p_ - 2);
    }

private:
    uint64_t p_;
    std::vector<uint64_t> inv_;
};

}  // namespace fmzv

#endif
