#include "fmzv/parse_expr.hpp"

#include <cctype>
#include <vector>

#include "fmzv/hoffman.hpp"

namespace fmzv {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return p;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(
                   static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(
                   static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    Poly expr() {
        Poly p;
        bool negate = false;
        if (consume('-'))
            negate = true;
        else
            consume('+');
        p = term().scaled(negate ? -1 : 1);
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                p += term();
            } else if (c == '-') {
                ++pos_;
                p -= term();
            } else {
                break;
            }
        }
        return p;
    }

    // juxtaposition (or '*') binds factors into one product
    Poly term() {
        Poly p = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                p = p * factor();
            } else if (c == '(' || c == 'x' || c == 'y' || c == 'z' ||
                       std::isdigit(static_cast<unsigned char>(c)) ||
                       std::isalpha(static_cast<unsigned char>(c))) {
                p = p * factor();
            } else {
                break;
            }
        }
        return p;
    }

    Poly factor() {
        Poly p = primary();
        if (peek() == '^') {
            ++pos_;
            long e = integer();
            if (e < 0) fail("negative exponent");
            Poly r = Poly::unit();
            for (long i = 0; i < e; ++i) r = r * p;
            p = r;
        }
        return p;
    }

    Poly primary() {
        char c = peek();
        if (c == '\0') fail("unexpected end of expression");
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            expect(')');
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (std::isalpha(static_cast<unsigned char>(c))) return name();
        fail(std::string("unexpected character '") + c + "'");
    }

    Poly rational() {
        long num = integer();
        if (peek() == '/') {
            ++pos_;
            size_t at = pos_;
            long den = integer();
            if (den == 0) throw ParseError("zero denominator", at);
            Rational q(num, den);
            q.canonicalize();  // mpq_class(n, d) does not reduce by itself
            return Poly::scalar(q);
        }
        return Poly::scalar(num);
    }

    // a run of letters is a function call when a known name is followed by
    // '('; otherwise single letters x, y, z stand for themselves
    Poly name() {
        size_t start = pos_;
        size_t end = pos_;
        while (end < text_.size() && std::isalnum(
                   static_cast<unsigned char>(text_[end])))
            ++end;
        std::string run(text_.substr(start, end - start));
        size_t after = end;
        while (after < text_.size() && std::isspace(
                   static_cast<unsigned char>(text_[after])))
            ++after;
        bool call = after < text_.size() && text_[after] == '(';

        if (call && (run == "st" || run == "phi" || run == "zm" ||
                     run == "w" || derivation_name(run) >= 0)) {
            pos_ = after + 1;  // past '('
            return apply(run);
        }
        char letter = text_[pos_++];
        switch (letter) {
            case 'x': return Poly::letter(Letter::X);
            case 'y': return Poly::letter(Letter::Y);
            case 'z': return z_power(1);
            default:
                --pos_;
                fail("unknown symbol '" + run + "'");
        }
    }

    // "d3" -> 3; -1 when not a derivation name
    static long derivation_name(const std::string& run) {
        if (run.size() < 2 || run[0] != 'd') return -1;
        for (size_t i = 1; i < run.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(run[i]))) return -1;
        return std::stol(run.substr(1));
    }

    Poly apply(const std::string& fn) {
        if (fn == "st") {
            Poly a = expr();
            expect(',');
            Poly b = expr();
            expect(')');
            return harmonic_product(a, b);
        }
        if (fn == "phi") {
            Poly a = expr();
            expect(')');
            return phi(a);
        }
        if (fn == "zm" || fn == "w") {
            Index ix = index_args();
            return fn == "zm" ? z_monomial(ix)
                              : Poly::word(word_from_index(ix));
        }
        long l = derivation_name(fn);
        if (l < 1) fail("derivation weight must be >= 1");
        Poly a = expr();
        expect(')');
        return derive(static_cast<int>(l), a);
    }

    Index index_args() {
        Index ix;
        if (consume(')')) return ix;  // empty index: zm() / w()
        for (;;) {
            size_t at = pos_;
            long k = integer();
            if (k < 1) throw ParseError("index part must be >= 1", at);
            ix.parts.push_back(static_cast<int>(k));
            if (consume(')')) break;
            expect(',');
        }
        return ix;
    }
};

}  // namespace

Poly parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace fmzv
