#include "fmzv/poly.hpp"

#include "fmzv/hoffman.hpp"

namespace fmzv {

bool Poly::homogeneous(uint32_t* degree_out) const {
    uint32_t deg = 0;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (first) {
            deg = w.degree();
            first = false;
        } else if (w.degree() != deg) {
            return false;
        }
    }
    if (degree_out) *degree_out = deg;
    return true;
}

std::string Poly::str_letters() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += rational_str(c);
        s += '*';
        s += w.str();
    }
    return s;
}

std::string Poly::str_index() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += rational_str(c);
        s += "*z";
        s += index_from_word(w).str();
    }
    return s;
}

}  // namespace fmzv
