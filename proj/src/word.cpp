#include "fmzv/word.hpp"

#include <charconv>

namespace fmzv {

Word Word::parse(std::string_view text) {
    if (text.empty() || text == "1") return Word{};
    Word w;
    for (char c : text) {
        if (c == 'x')
            w = w.appended(Letter::X);
        else if (c == 'y')
            w = w.appended(Letter::Y);
        else if (c != ' ')
            throw std::invalid_argument(std::string("bad letter in word: '") + c +
                                        "'");
    }
    return w;
}

std::string Index::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    s += ')';
    return s;
}

Index Index::parse(std::string_view text) {
    size_t b = 0, e = text.size();
    while (b < e && text[b] == ' ') ++b;
    while (e > b && text[e - 1] == ' ') --e;
    if (b < e && text[b] == '(' && text[e - 1] == ')') {
        ++b;
        --e;
    }
    Index out;
    size_t i = b;
    while (i < e) {
        while (i < e && text[i] == ' ') ++i;
        if (i >= e) break;
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + e, v);
        if (ec != std::errc{} || v < 1)
            throw std::invalid_argument("bad index part in '" +
                                        std::string(text) + "'");
        out.parts.push_back(v);
        i = static_cast<size_t>(ptr - text.data());
        while (i < e && text[i] == ' ') ++i;
        if (i < e) {
            if (text[i] != ',')
                throw std::invalid_argument("expected ',' in index '" +
                                            std::string(text) + "'");
            ++i;
        }
    }
    return out;
}

bool part_lex_less(const Index& a, const Index& b) {
    size_t n = std::min(a.parts.size(), b.parts.size());
    for (size_t i = 0; i < n; ++i)
        if (a.parts[i] != b.parts[i]) return a.parts[i] < b.parts[i];
    return a.parts.size() < b.parts.size();
}

}  // namespace fmzv
