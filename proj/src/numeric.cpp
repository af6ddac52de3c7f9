#include "fmzv/numeric.hpp"

#include "fmzv/hoffman.hpp"
#include "fmzv/parallel.hpp"

namespace fmzv {

uint64_t zeta_trunc_mod(const Index& ix, const PrimeCtx& ctx) {
    const int d = ix.depth();
    if (d == 0) return 1;
    const uint64_t p = ctx.p();
    // acc[j] = sum over n >= n_j > ... > n_d >= 1 after processing n;
    // updating j ascending keeps acc[j+1] one step behind, which realizes
    // the strict inequality n_j > n_{j+1}.
    std::vector<uint64_t> acc(d, 0);
    for (uint64_t n = 1; n < p; ++n) {
        const uint64_t ninv = ctx.inv(n);
        for (int j = 0; j < d; ++j) {
            uint64_t term = ctx.pow(ninv, static_cast<uint64_t>(ix.parts[j]));
            if (j + 1 < d) term = ctx.mul(term, acc[j + 1]);
            acc[j] = ctx.add(acc[j], term);
        }
    }
    return acc[0];
}

Residue zeta_trunc_mod(const Index& ix, uint64_t p) {
    PrimeCtx ctx(p);
    return Residue{zeta_trunc_mod(ix, ctx), p};
}

namespace {

uint64_t coeff_mod(const Rational& c, const PrimeCtx& ctx) {
    const uint64_t q = ctx.p();
    uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), q);
    if (den == 0)
        throw denominator_error("coefficient denominator divisible by " +
                                std::to_string(q));
    uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), q);
    return ctx.mul(num, ctx.inv(den));
}

}  // namespace

uint64_t eval_poly_mod(const Poly& p, const PrimeCtx& ctx) {
    uint64_t sum = 0;
    for (const auto& [w, c] : p.terms()) {
        Index ix = index_from_word(w);  // rejects words outside H1
        sum = ctx.add(sum, ctx.mul(coeff_mod(c, ctx), zeta_trunc_mod(ix, ctx)));
    }
    return sum;
}

Residue eval_poly_mod(const Poly& p, uint64_t prime) {
    PrimeCtx ctx(prime);
    return Residue{eval_poly_mod(p, ctx), prime};
}

uint64_t ZetaCache::zeta(const Word& index_word) {
    auto it = memo_.find(index_word);
    if (it != memo_.end()) return it->second;
    uint64_t v = zeta_trunc_mod(index_from_word(index_word), ctx_);
    memo_.emplace(index_word, v);
    return v;
}

uint64_t ZetaCache::eval(const Poly& p) {
    uint64_t sum = 0;
    for (const auto& [w, c] : p.terms())
        sum = ctx_.add(sum, ctx_.mul(coeff_mod(c, ctx_), zeta(w)));
    return sum;
}

bool ResidueReport::all_pass() const {
    for (const PrimeResult& r : results)
        if (r.verdict == Verdict::Fail) return false;
    return true;
}

size_t ResidueReport::count(Verdict v) const {
    size_t n = 0;
    for (const PrimeResult& r : results)
        if (r.verdict == v) ++n;
    return n;
}

namespace {

PrimeResult eval_one(const Relation& rel, ZetaCache& cache, uint32_t p) {
    PrimeResult res;
    res.prime = p;
    if (static_cast<int>(p) <= rel.weight + 2) {
        res.verdict = Verdict::Skipped;
        res.reason = "small prime";
        return res;
    }
    try {
        res.residue = cache.eval(rel.element);
        res.has_residue = true;
        res.verdict = res.residue == 0 ? Verdict::Pass : Verdict::Fail;
    } catch (const denominator_error&) {
        res.verdict = Verdict::Skipped;
        res.reason = "denominator divisible by p";
    }
    return res;
}

}  // namespace

ResidueReport verify(const Relation& rel, const std::vector<uint32_t>& primes) {
    ResidueReport rep;
    rep.relation_id = rel.id();
    rep.weight = rel.weight;
    rep.results.reserve(primes.size());
    for (uint32_t p : primes) {
        ZetaCache cache(p);
        rep.results.push_back(eval_one(rel, cache, p));
    }
    return rep;
}

std::vector<ResidueReport> verify_all(const std::vector<Relation>& rels,
                                      uint32_t plo, uint32_t phi,
                                      unsigned threads) {
    const std::vector<uint32_t> primes = primes_in_range(plo, phi);
    // results keyed [prime][relation]; each prime shares one zeta cache
    std::vector<std::vector<PrimeResult>> grid(primes.size());
    parallel_for(primes.size(), threads, [&](size_t pi) {
        ZetaCache cache(primes[pi]);
        auto& col = grid[pi];
        col.reserve(rels.size());
        for (const Relation& rel : rels)
            col.push_back(eval_one(rel, cache, primes[pi]));
    });

    std::vector<ResidueReport> reports;
    reports.reserve(rels.size());
    for (size_t ri = 0; ri < rels.size(); ++ri) {
        ResidueReport rep;
        rep.relation_id = rels[ri].id();
        rep.weight = rels[ri].weight;
        rep.results.reserve(primes.size());
        for (size_t pi = 0; pi < primes.size(); ++pi)
            rep.results.push_back(grid[pi][ri]);
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::string report_line(const std::string& relation_id, const PrimeResult& r) {
    std::string s = "{\"relation\":\"" + relation_id +
                    "\",\"prime\":" + std::to_string(r.prime);
    if (r.has_residue) s += ",\"residue\":" + std::to_string(r.residue);
    s += ",\"verdict\":\"";
    switch (r.verdict) {
        case Verdict::Pass: s += "PASS"; break;
        case Verdict::Fail: s += "FAIL"; break;
        case Verdict::Skipped: s += "SKIPPED"; break;
    }
    s += "\"";
    if (!r.reason.empty()) s += ",\"reason\":\"" + r.reason + "\"";
    s += "}";
    return s;
}

}  // namespace fmzv
