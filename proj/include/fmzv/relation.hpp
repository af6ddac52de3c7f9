#ifndef FMZV_RELATION_HPP
#define FMZV_RELATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fmzv/hoffman.hpp"
#include "fmzv/poly.hpp"
#include "fmzv/word.hpp"

namespace fmzv {

// Relation families.  Each relation is an element of H1 (for IKZ, of H0)
// whose image under the relevant zeta map is asserted to be zero; it is
// stored left-minus-right and sign-normalized so the part-lexicographically
// smallest index carries a positive coefficient.

enum class Family { IKZ, CONJ, THM2, THM3, THM3R };

std::string_view family_name(Family f);
Family family_from_string(std::string_view s);  // throws on unknown name

struct Relation {
    Family family{};
    int weight = 0;
    Index m;       // outer index (THM2/THM3/THM3R); empty otherwise
    Index lvec;    // derivation weights; a single part for IKZ/CONJ/THM2
    Word seed;     // the word w

    Poly element;  // normalized, homogeneous of `weight`

    int l() const { return lvec.parts.at(0); }

    // e.g. "CONJ/w5/l3/(2)", "THM3/w6/m(2)/l(2,1)/(1)"
    std::string id() const;
    // one JSON object, fixed key order:
    // {"family":"CONJ","weight":5,"params":{"l":3,"w":"(2)"},
    //  "terms":[{"index":[5],"coef":"-1"},...]}
    std::string jsonl() const;
};

// Flip the overall sign if the part-lex smallest index has a negative
// coefficient.  Requires all words in H1; the zero poly passes through.
Poly normalize_relation_sign(Poly p);

// Raw left-minus-right combinations, before normalization.
Poly ikz_combination(int l, const Word& w);              // d_l(w)
Poly conj_combination(int l, const Word& w);             // d_l(w) + z^{l-1}y w
Poly thm2_combination(const Index& m, int l, const Word& w);
Poly thm3_combination(const Index& m, const Index& lvec, const Word& w);
Poly thm3_refined_combination(const Index& m, const Index& lvec, const Word& w);

// d_l(w) for every l >= 1 and H0 basis word w with l + |w| = weight
// (|w| >= 2; w = 1 only produces the zero relation and is dropped).
std::vector<Relation> gen_ikz(int weight);  // weight >= 3

// d_l(w) + z^{l-1}y w for every l >= 1 and H1 basis word w (including
// w = 1) with l + |w| = weight, ordered by (l, w).
std::vector<Relation> gen_conj(int weight);  // weight >= 2

Relation gen_thm2(const Index& m, int l, const Word& w);
Relation gen_thm3(const Index& m, const Index& lvec, const Word& w);
Relation gen_thm3_refined(const Index& m, const Index& lvec, const Word& w);

// Exhaustive parameter sweeps at a fixed total weight.  Caps < 0 mean
// unbounded; zero relations are dropped.
std::vector<Relation> gen_thm2_all(int weight, int s_max = -1);
std::vector<Relation> gen_thm3_all(int weight, int s_max = -1, int t_max = -1);
std::vector<Relation> gen_thm3_refined_all(int weight, int s_max = -1,
                                           int t_max = -1);

// Permutations of {1,...,n} in which the positions of the values 1..s
// appear in increasing order; |result| = n!/s!.  s = 0 is accepted and
// leaves the constraint vacuous.  Throws on s < 0, n < 1 or s > n.
struct PrefixOrderedPermutation {
    std::vector<int> sigma;  // sigma[i] = value at position i+1, 1-based values
    int s = 0;
};
std::vector<PrefixOrderedPermutation> perms_prefix_ordered(int n, int s);

// Letter choices of the sigma-indexed words: u_i = x when
// 'sigma(i) <= s and sigma(i+1) > s' or 'sigma(i) > s and
// sigma(i) < sigma(i+1)', else -y; the final position is always -y.
enum class ULetter { X, MinusY };
std::vector<ULetter> u_letters(const PrefixOrderedPermutation& sp);

}  // namespace fmzv

#endif
