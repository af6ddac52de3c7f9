#ifndef FMZV_POLY_HPP
#define FMZV_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <string>

#include "fmzv/word.hpp"

namespace fmzv {

using Rational = mpq_class;

// "3/2", "-1"; canonical form of mpq is already lowest terms
inline std::string rational_str(const Rational& q) { return q.get_str(); }

// Sparse element of Q<x,y>: word -> nonzero rational coefficient.
// The term map is ordered by the canonical word order, so iteration (and
// hence printing and serialization) is deterministic.
//
// Coefficients follow the usual GMP contract: any mpq_class handed in
// must be canonical (two-argument construction does not reduce; call
// canonicalize() first).  Everything produced by mpq arithmetic already
// is.
class Poly {
public:
    using TermMap = std::map<Word, Rational>;

    Poly() = default;

    static Poly unit() { return Poly::word(Word{}); }
    static Poly word(const Word& w) {
        Poly p;
        p.terms_[w] = 1;
        return p;
    }
    static Poly letter(Letter l) { return word(Word{l}); }
    static Poly scalar(const Rational& c) {
        Poly p;
        if (c != 0) p.terms_[Word{}] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Word& w, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly p(*this);
        for (auto& [w, c] : p.terms_) c = -c;
        return p;
    }

    Poly scaled(const Rational& c) const {
        if (c == 0) return Poly{};
        Poly p(*this);
        for (auto& [w, k] : p.terms_) k *= c;
        return p;
    }

    // concatenation product, bilinear
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly p;
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) p.add_term(u.concat(v), cu * cv);
        return p;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly&, const Poly&) = default;

    bool in_h1() const {
        for (const auto& [w, c] : terms_)
            if (!w.in_h1()) return false;
        return true;
    }
    bool in_h0() const {
        for (const auto& [w, c] : terms_)
            if (!w.in_h0()) return false;
        return true;
    }

    // true when all words share one degree; that degree goes to *degree_out
    bool homogeneous(uint32_t* degree_out = nullptr) const;

    // "-1*xxy + 1*xy"; "0" for the zero element
    std::string str_letters() const;
    // "-1*z(5) + 1*z(2,2,1)"; requires all words in H1
    std::string str_index() const;

private:
    TermMap terms_;
};

inline Poly poly_concat(const Poly& a, const Poly& b) { return a * b; }

}  // namespace fmzv

#endif
