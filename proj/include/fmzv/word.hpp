#ifndef FMZV_WORD_HPP
#define FMZV_WORD_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fmzv {

// Monomials of the free algebra on two letters x, y.
//
// A word is packed into a 64-bit field, first letter in the most
// significant used bit (x = 0, y = 1), so that for words of equal degree
// the numeric value of bits() orders them lexicographically with x < y.
// The full order on words is degree first, then that lex order; it fixes
// serialization and matrix column order throughout.

enum class Letter : uint8_t { X = 0, Y = 1 };

inline constexpr uint32_t kMaxWordDegree = 62;

class Word {
public:
    Word() = default;

    Word(std::initializer_list<Letter> ls) {
        for (Letter l : ls) *this = appended(l);
    }

    static Word from_bits(uint32_t degree, uint64_t bits) {
        if (degree > kMaxWordDegree)
            throw std::length_error("word degree exceeds cap of 62 letters");
        Word w;
        w.len_ = degree;
        w.bits_ = degree == 0 ? 0 : (bits & (~uint64_t{0} >> (64 - degree)));
        return w;
    }

    // "xxyxy"; "1" or "" denote the empty word
    static Word parse(std::string_view text);

    uint32_t degree() const { return len_; }
    bool empty() const { return len_ == 0; }
    uint64_t bits() const { return bits_; }

    Letter letter(uint32_t i) const {
        return static_cast<Letter>((bits_ >> (len_ - 1 - i)) & 1);
    }
    Letter front() const { return letter(0); }
    Letter back() const { return letter(len_ - 1); }

    bool in_h1() const { return len_ == 0 || back() == Letter::Y; }
    bool in_h0() const {
        return len_ == 0 || (front() == Letter::X && back() == Letter::Y);
    }

    Word concat(const Word& o) const {
        if (len_ + o.len_ > kMaxWordDegree)
            throw std::length_error("word degree exceeds cap of 62 letters");
        Word w;
        w.len_ = len_ + o.len_;
        w.bits_ = (bits_ << o.len_) | o.bits_;
        return w;
    }

    Word appended(Letter l) const {
        if (len_ + 1 > kMaxWordDegree)
            throw std::length_error("word degree exceeds cap of 62 letters");
        Word w;
        w.len_ = len_ + 1;
        w.bits_ = (bits_ << 1) | static_cast<uint64_t>(l);
        return w;
    }

    Word prefix(uint32_t n) const { return from_bits(n, bits_ >> (len_ - n)); }
    Word suffix_from(uint32_t i) const { return from_bits(len_ - i, bits_); }

    std::string str() const {
        if (len_ == 0) return "1";
        std::string s;
        s.reserve(len_);
        for (uint32_t i = 0; i < len_; ++i)
            s.push_back(letter(i) == Letter::X ? 'x' : 'y');
        return s;
    }

    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.len_ != b.len_) return a.len_ <=> b.len_;
        return a.bits_ <=> b.bits_;
    }
    friend bool operator==(const Word&, const Word&) = default;

private:
    uint32_t len_ = 0;
    uint64_t bits_ = 0;
};

// Composition of positive integers; the empty index corresponds to the
// empty word / the unit of the algebra.
struct Index {
    std::vector<int> parts;

    Index() = default;
    Index(std::initializer_list<int> ps) : parts(ps) {}
    explicit Index(std::vector<int> ps) : parts(std::move(ps)) {}

    int weight() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int depth() const { return static_cast<int>(parts.size()); }

    // "(2,1)"; "()" for the empty index
    std::string str() const;
    // accepts "2,1", "(2,1)", "()" or the empty string
    static Index parse(std::string_view text);

    friend bool operator==(const Index&, const Index&) = default;
};

// Elementwise lexicographic order on part lists (shorter prefix first).
// Distinct from the column order, which goes through the words; this one
// decides relation sign normalization.
bool part_lex_less(const Index& a, const Index& b);

struct WordHash {
    size_t operator()(const Word& w) const {
        uint64_t x = w.bits() ^ (static_cast<uint64_t>(w.degree()) *
                                 0x9E3779B97F4A7C15ull);
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ull;
        x ^= x >> 27;
        return static_cast<size_t>(x);
    }
};

}  // namespace fmzv

#endif
