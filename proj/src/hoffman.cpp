#include "fmzv/hoffman.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace fmzv {

Word word_from_index(const Index& ix) {
    Word w;
    for (int k : ix.parts) {
        if (k < 1) throw std::invalid_argument("index part must be >= 1");
        for (int i = 1; i < k; ++i) w = w.appended(Letter::X);
        w = w.appended(Letter::Y);
    }
    return w;
}

Index index_from_word(const Word& w) {
    if (!w.in_h1())
        throw std::invalid_argument("word '" + w.str() +
                                    "' is not in H1 (does not end in y)");
    Index ix;
    int run = 0;
    for (uint32_t i = 0; i < w.degree(); ++i) {
        if (w.letter(i) == Letter::X) {
            ++run;
        } else {
            ix.parts.push_back(run + 1);
            run = 0;
        }
    }
    return ix;
}

Poly z_power(int e) {
    if (e < 0) throw std::invalid_argument("negative power of z");
    Poly p;
    for (uint64_t bits = 0; bits < (uint64_t{1} << e); ++bits)
        p.add_term(Word::from_bits(static_cast<uint32_t>(e), bits), 1);
    return p;
}

Poly z_monomial(const Index& ix) {
    Poly p = Poly::unit();
    for (int k : ix.parts) {
        if (k < 1) throw std::invalid_argument("index part must be >= 1");
        p = p * z_power(k - 1) * Poly::letter(Letter::Y);
    }
    return p;
}

namespace {

// first generator z_k of an H1 monomial: (k, rest)
std::pair<int, Word> split_head(const Word& w) {
    uint32_t i = 0;
    while (w.letter(i) == Letter::X) ++i;
    return {static_cast<int>(i) + 1, w.suffix_from(i + 1)};
}

// Memoized quasi-shuffle of two index words.  The cache only grows and
// inserts are idempotent, so concurrent recomputation is harmless.
Poly stuffle_words(const Word& u, const Word& v) {
    if (u.empty()) return Poly::word(v);
    if (v.empty()) return Poly::word(u);

    static std::map<std::pair<Word, Word>, Poly> cache;
    static std::mutex mu;

    std::pair<Word, Word> key = u <= v ? std::make_pair(u, v)
                                       : std::make_pair(v, u);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    auto [k, urest] = split_head(u);
    auto [l, vrest] = split_head(v);
    Poly res;
    res += Poly::word(word_from_index(Index{{k}})) * stuffle_words(urest, v);
    res += Poly::word(word_from_index(Index{{l}})) * stuffle_words(u, vrest);
    res += Poly::word(word_from_index(Index{{k + l}})) *
           stuffle_words(urest, vrest);

    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(res)).first->second;
}

}  // namespace

Poly harmonic_product(const Poly& p, const Poly& q) {
    if (!p.in_h1() || !q.in_h1())
        throw std::invalid_argument("harmonic product operand outside H1");
    Poly res;
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms())
            res += stuffle_words(u, v).scaled(cu * cv);
    return res;
}

Poly derive(int l, const Poly& p) {
    if (l < 1) throw std::invalid_argument("derivation weight must be >= 1");
    // image of a letter, up to sign: x z^{l-1} y
    Poly image = Poly::letter(Letter::X) * z_power(l - 1) *
                 Poly::letter(Letter::Y);
    Poly res;
    for (const auto& [w, c] : p.terms()) {
        for (uint32_t i = 0; i < w.degree(); ++i) {
            Rational sign = w.letter(i) == Letter::X ? c : -c;
            Word pre = w.prefix(i);
            Word post = w.suffix_from(i + 1);
            for (const auto& [mid, mc] : image.terms())
                res.add_term(pre.concat(mid).concat(post), sign * mc);
        }
    }
    return res;
}

Poly phi(const Poly& p) {
    Poly res;
    for (const auto& [w, c] : p.terms()) {
        Poly acc = Poly::scalar(c);
        for (uint32_t i = 0; i < w.degree(); ++i) {
            if (w.letter(i) == Letter::X)
                acc = acc * z_power(1);  // x -> x + y
            else
                acc = acc.scaled(-1) * Poly::letter(Letter::Y);
        }
        res += acc;
    }
    return res;
}

std::vector<Index> refinements(const Index& ix) {
    std::vector<Index> out{Index{}};
    for (int k : ix.parts) {
        if (k < 1) throw std::invalid_argument("index part must be >= 1");
        std::vector<Index> splits = compositions_of(k);
        std::vector<Index> next;
        next.reserve(out.size() * splits.size());
        for (const Index& head : out)
            for (const Index& tail : splits) {
                Index joined = head;
                joined.parts.insert(joined.parts.end(), tail.parts.begin(),
                                    tail.parts.end());
                next.push_back(std::move(joined));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Index& a, const Index& b) {
        return word_from_index(a) < word_from_index(b);
    });
    return out;
}

Subspace subspace_membership(const Poly& p) {
    if (p.in_h0()) return Subspace::H0;
    if (p.in_h1()) return Subspace::H1;
    return Subspace::H;
}

std::vector<Word> h1_words(int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    if (degree == 0) return {Word{}};
    std::vector<Word> out;
    out.reserve(size_t{1} << (degree - 1));
    for (uint64_t pre = 0; pre < (uint64_t{1} << (degree - 1)); ++pre)
        out.push_back(Word::from_bits(static_cast<uint32_t>(degree),
                                      (pre << 1) | 1));
    return out;
}

std::vector<Word> h0_words(int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    if (degree == 0) return {Word{}};
    if (degree == 1) return {};
    std::vector<Word> out;
    out.reserve(size_t{1} << (degree - 2));
    for (uint64_t mid = 0; mid < (uint64_t{1} << (degree - 2)); ++mid)
        out.push_back(Word::from_bits(static_cast<uint32_t>(degree),
                                      (mid << 1) | 1));
    return out;
}

std::vector<Index> compositions_of(int n) {
    std::vector<Index> out;
    for (const Word& w : h1_words(n)) out.push_back(index_from_word(w));
    return out;
}

}  // namespace fmzv
