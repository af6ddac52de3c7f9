#ifndef FMZV_PARSE_EXPR_HPP
#define FMZV_PARSE_EXPR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "fmzv/poly.hpp"

namespace fmzv {

// Expression syntax for polys:
//   letters x, y, z (z expands to x+y), ^ powers, juxtaposition (or *)
//   for concatenation, + and -, rational scalars like 3/2,
//   st(p, q)        harmonic product
//   d3(p)           derivation with l = 3
//   phi(p)          duality automorphism
//   zm(k1,...,kd)   z-power monomial z^{k1-1}y...z^{kd-1}y
//   w(k1,...,kd)    plain word x^{k1-1}y...x^{kd-1}y

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t at)
        : std::runtime_error(msg + " (at position " + std::to_string(at) + ")"),
          pos(at) {}
};

Poly parse_expr(std::string_view text);

}  // namespace fmzv

#endif
