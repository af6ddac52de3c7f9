#ifndef FMZV_NUMERIC_HPP
#define FMZV_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fmzv/modular.hpp"
#include "fmzv/poly.hpp"
#include "fmzv/relation.hpp"
#include "fmzv/word.hpp"

namespace fmzv {

// Truncated multiple harmonic sums mod p: the per-prime components of the
// A-finite zeta map.

struct Residue {
    uint64_t value = 0;
    uint64_t prime = 0;
};

// A coefficient denominator is divisible by the prime; the prime must be
// skipped, not silently reduced.
struct denominator_error : std::domain_error {
    using std::domain_error::domain_error;
};

// zeta_p(k_1,...,k_d) = sum over p > n_1 > ... > n_d >= 1 of
// prod n_i^{-k_i} mod p, in one ascending pass keeping d suffix
// accumulators (O(p d) modular operations).  Empty index -> 1.
uint64_t zeta_trunc_mod(const Index& ix, const PrimeCtx& ctx);
Residue zeta_trunc_mod(const Index& ix, uint64_t p);  // validates primality

// Linear extension over a poly in H1, coefficients reduced mod the prime.
// Throws denominator_error / std::invalid_argument (word outside H1).
uint64_t eval_poly_mod(const Poly& p, const PrimeCtx& ctx);
Residue eval_poly_mod(const Poly& p, uint64_t prime);

// Caches zeta values per prime so a sweep over many relations of one
// weight costs O(p) per distinct index, not per term occurrence.
class ZetaCache {
public:
    explicit ZetaCache(uint64_t p) : ctx_(p) {}
    const PrimeCtx& ctx() const { return ctx_; }
    uint64_t zeta(const Word& index_word);
    uint64_t eval(const Poly& p);

private:
    PrimeCtx ctx_;
    std::unordered_map<Word, uint64_t, WordHash> memo_;
};

enum class Verdict { Pass, Fail, Skipped };

struct PrimeResult {
    uint32_t prime = 0;
    Verdict verdict = Verdict::Skipped;
    uint64_t residue = 0;     // meaningful iff has_residue
    bool has_residue = false;
    std::string reason;       // for Skipped
};

struct ResidueReport {
    std::string relation_id;
    int weight = 0;
    std::vector<PrimeResult> results;  // ascending primes

    bool all_pass() const;  // no Fail among results
    size_t count(Verdict v) const;
};

// Evaluates the relation at each prime; primes p <= weight + 2 are
// SKIPPED (small-prime exclusion), as are primes dividing a coefficient
// denominator.  PASS iff residue 0.
ResidueReport verify(const Relation& rel, const std::vector<uint32_t>& primes);

// Sweep many relations over the primes in [plo, phi], parallel across
// primes with one ZetaCache per prime; reports come back in relation
// order with ascending primes, independent of thread count.
std::vector<ResidueReport> verify_all(const std::vector<Relation>& rels,
                                      uint32_t plo, uint32_t phi,
                                      unsigned threads = 1);

// {"relation":"CONJ/w5/l3/(2)","prime":11,"residue":0,"verdict":"PASS"}
std::string report_line(const std::string& relation_id, const PrimeResult& r);

}  // namespace fmzv

#endif
