#ifndef FMZV_HOFFMAN_HPP
#define FMZV_HOFFMAN_HPP

#include <vector>

#include "fmzv/poly.hpp"
#include "fmzv/word.hpp"

namespace fmzv {

// The word algebra H = Q<x,y> with its subalgebras H1 = Q + Hy and
// H0 = Q + xHy.  Monomials of H1 correspond to indices (k_1,...,k_d)
// through z_k = x^{k-1}y.

// z_{k_1}...z_{k_d} as a word; the empty index gives the empty word.
Word word_from_index(const Index& ix);

// Inverse of word_from_index; throws std::invalid_argument if the word is
// nonempty and does not end in y (not a monomial of H1).
Index index_from_word(const Word& w);

// (x+y)^e expanded into its 2^e words.
Poly z_power(int e);

// prod_i (x+y)^{m_i-1} y, fully expanded; equals the sum of
// word_from_index over all refinements of ix.
Poly z_monomial(const Index& ix);

// Harmonic (quasi-shuffle) product on H1, extended bilinearly from
//   1*w = w*1 = w
//   z_k w1 * z_l w2 = z_k(w1 * z_l w2) + z_l(z_k w1 * w2) + z_{k+l}(w1 * w2).
// Throws std::invalid_argument if either input has a word outside H1.
Poly harmonic_product(const Poly& p, const Poly& q);

// The derivation with d_l(x) = x z^{l-1} y and d_l(y) = -x z^{l-1} y,
// extended by the Leibniz rule and linearity.  Requires l >= 1.
Poly derive(int l, const Poly& p);

// The ring automorphism with phi(x) = x+y, phi(y) = -y; an involution.
Poly phi(const Poly& p);

// All compositions m' that refine ix (ix is recovered from m' by combining
// adjacent parts), listed in the canonical word order of their words.
// Count = prod_i 2^{m_i - 1}.
std::vector<Index> refinements(const Index& ix);

enum class Subspace { H, H1, H0 };

// Strongest of H0 c H1 c H containing every word of p.
Subspace subspace_membership(const Poly& p);

// Monomial bases by degree, in canonical word order.  Degree 0 gives the
// unit word; h0_words(1) is empty.
std::vector<Word> h1_words(int degree);
std::vector<Word> h0_words(int degree);

// All compositions of total n (h1_words(n) read as indices).
std::vector<Index> compositions_of(int n);

}  // namespace fmzv

#endif
