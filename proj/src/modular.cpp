#include "fmzv/modular.hpp"

#include <algorithm>

namespace fmzv {

namespace {

uint64_t pow_mod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

}  // namespace

// Deterministic Miller-Rabin; the base set certifies all n < 3.2e18, far
// beyond the 2^31 cap on usable primes.
bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n > kMaxPrime) return false;  // usable range only
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = pow_mod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<uint32_t> primes_in_range(uint32_t lo, uint32_t hi) {
    std::vector<uint32_t> out;
    if (hi < 2 || hi < lo) return out;
    if (hi > 100'000'000)
        throw std::invalid_argument("prime range upper bound exceeds 10^8");
    std::vector<bool> composite(hi + 1, false);
    for (uint32_t i = 2; static_cast<uint64_t>(i) * i <= hi; ++i)
        if (!composite[i])
            for (uint64_t j = static_cast<uint64_t>(i) * i; j <= hi; j += i)
                composite[j] = true;
    for (uint32_t i = std::max<uint32_t>(lo, 2); i <= hi; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

PrimeCtx::PrimeCtx(uint64_t p) : p_(p) {
    if (!is_prime(p) || p > kMaxPrime)
        throw std::invalid_argument("modulus must be a prime below 2^31");
    constexpr uint64_t kTableCap = uint64_t{1} << 22;
    if (p_ <= kTableCap) {
        inv_.resize(p_);
        if (p_ > 1) inv_[1] = 1;
        for (uint64_t i = 2; i < p_; ++i)
            inv_[i] = (p_ - (p_ / i) * inv_[p_ % i] % p_) % p_;
    }
}

}  // namespace fmzv
