#include "fmzv/relation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fmzv {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::IKZ: return "IKZ";
        case Family::CONJ: return "CONJ";
        case Family::THM2: return "THM2";
        case Family::THM3: return "THM3";
        case Family::THM3R: return "THM3R";
    }
    return "?";
}

Family family_from_string(std::string_view s) {
    std::string up;
    for (char c : s) up.push_back(static_cast<char>(std::toupper(c)));
    if (up == "IKZ") return Family::IKZ;
    if (up == "CONJ") return Family::CONJ;
    if (up == "THM2") return Family::THM2;
    if (up == "THM3") return Family::THM3;
    if (up == "THM3R") return Family::THM3R;
    throw std::invalid_argument("unknown relation family: " + std::string(s));
}

std::string Relation::id() const {
    std::string s(family_name(family));
    s += "/w" + std::to_string(weight);
    switch (family) {
        case Family::IKZ:
        case Family::CONJ:
            s += "/l" + std::to_string(l());
            break;
        case Family::THM2:
            s += "/m" + m.str() + "/l" + std::to_string(l());
            break;
        case Family::THM3:
        case Family::THM3R:
            s += "/m" + m.str() + "/l" + lvec.str();
            break;
    }
    s += "/" + index_from_word(seed).str();
    return s;
}

std::string Relation::jsonl() const {
    std::string s = "{\"family\":\"";
    s += family_name(family);
    s += "\",\"weight\":" + std::to_string(weight) + ",\"params\":{";
    switch (family) {
        case Family::IKZ:
        case Family::CONJ:
            s += "\"l\":" + std::to_string(l());
            break;
        case Family::THM2:
            s += "\"m\":\"" + m.str() + "\",\"l\":" + std::to_string(l());
            break;
        case Family::THM3:
        case Family::THM3R:
            s += "\"m\":\"" + m.str() + "\",\"l\":\"" + lvec.str() + "\"";
            break;
    }
    s += ",\"w\":\"" + index_from_word(seed).str() + "\"},\"terms\":[";
    bool first = true;
    for (const auto& [w, c] : element.terms()) {
        if (!first) s += ',';
        first = false;
        s += "{\"index\":[";
        Index ix = index_from_word(w);
        for (size_t i = 0; i < ix.parts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(ix.parts[i]);
        }
        s += "],\"coef\":\"" + rational_str(c) + "\"}";
    }
    s += "]}";
    return s;
}

Poly normalize_relation_sign(Poly p) {
    if (p.is_zero()) return p;
    const Word* min_word = nullptr;
    Index min_index;
    for (const auto& [w, c] : p.terms()) {
        Index ix = index_from_word(w);
        if (!min_word || part_lex_less(ix, min_index)) {
            min_word = &w;
            min_index = std::move(ix);
        }
    }
    if (p.coeff(*min_word) < 0) return -p;
    return p;
}

Poly ikz_combination(int l, const Word& w) { return derive(l, Poly::word(w)); }

Poly conj_combination(int l, const Word& w) {
    Poly pw = Poly::word(w);
    return derive(l, pw) + z_monomial(Index{{l}}) * pw;
}

Poly thm2_combination(const Index& m, int l, const Word& w) {
    if (!w.in_h1()) throw std::invalid_argument("seed word outside H1");
    Poly pw = Poly::word(w);
    Poly M = z_monomial(m);
    Poly el = M * derive(l, pw) + z_monomial(Index{{l}}) * M * pw;
    const int s = m.depth();
    for (int i = 0; i < s; ++i) {
        // z^{m_1-1}y ... z^{m_{i-1}-1}y  z^{m_i-1} x  z^{l-1}y  ...  w
        Poly term = Poly::unit();
        for (int j = 0; j < i; ++j)
            term = term * z_monomial(Index{{m.parts[j]}});
        term = term * z_power(m.parts[i] - 1) * Poly::letter(Letter::X);
        term = term * z_monomial(Index{{l}});
        for (int j = i + 1; j < s; ++j)
            term = term * z_monomial(Index{{m.parts[j]}});
        el -= term * pw;
    }
    return el;
}

namespace {

Poly derive_chain(const Index& lvec, const Word& w) {
    Poly p = Poly::word(w);
    for (int i = lvec.depth() - 1; i >= 0; --i) p = derive(lvec.parts[i], p);
    return p;
}

// sum over sigma in S_{s+t}^{(s)} of the signed word
// z^{a_{sigma(1)}-1} u_1 ... z^{a_{sigma(n)}-1} u_n w, with the -y letters
// carrying their signs into the coefficients.
Poly sigma_sum(const Index& m, const Index& lvec, const Word& w) {
    const int s = m.depth();
    const int t = lvec.depth();
    const int n = s + t;
    std::vector<int> a = m.parts;
    a.insert(a.end(), lvec.parts.begin(), lvec.parts.end());

    Poly sum;
    for (const auto& sp : perms_prefix_ordered(n, s)) {
        std::vector<ULetter> u = u_letters(sp);
        Poly term = Poly::unit();
        int sign = 1;
        for (int i = 0; i < n; ++i) {
            term = term * z_power(a[sp.sigma[i] - 1] - 1);
            if (u[i] == ULetter::X) {
                term = term * Poly::letter(Letter::X);
            } else {
                term = term * Poly::letter(Letter::Y);
                sign = -sign;
            }
        }
        term = term * Poly::word(w);
        sum += sign > 0 ? term : -term;
    }
    return sum;
}

}  // namespace

Poly thm3_combination(const Index& m, const Index& lvec, const Word& w) {
    if (!w.in_h1()) throw std::invalid_argument("seed word outside H1");
    if (lvec.depth() < 1)
        throw std::invalid_argument("at least one derivation weight required");
    Poly lhs = z_monomial(m) * derive_chain(lvec, w);
    Poly rhs = sigma_sum(m, lvec, w);
    if (m.depth() % 2) rhs = -rhs;  // (-1)^s
    return lhs - rhs;
}

Poly thm3_refined_combination(const Index& m, const Index& lvec,
                              const Word& w) {
    if (!w.in_h1()) throw std::invalid_argument("seed word outside H1");
    if (lvec.depth() < 1)
        throw std::invalid_argument("at least one derivation weight required");
    Poly lhs = Poly::word(word_from_index(m)) * derive_chain(lvec, w);
    Poly rhs;
    for (const Index& mr : refinements(m)) rhs += sigma_sum(mr, lvec, w);
    if (m.depth() % 2) rhs = -rhs;  // (-1)^s, s = depth of m itself
    return lhs - rhs;
}

namespace {

Relation make_relation(Family f, int weight, Index m, Index lvec, Word seed,
                       Poly el) {
    Relation r;
    r.family = f;
    r.weight = weight;
    r.m = std::move(m);
    r.lvec = std::move(lvec);
    r.seed = std::move(seed);
    r.element = normalize_relation_sign(std::move(el));
    return r;
}

}  // namespace

std::vector<Relation> gen_ikz(int weight) {
    if (weight < 3) throw std::invalid_argument("gen_ikz needs weight >= 3");
    std::vector<Relation> out;
    for (int l = 1; l <= weight - 2; ++l)
        for (const Word& w : h0_words(weight - l)) {
            Poly el = ikz_combination(l, w);
            if (el.is_zero()) continue;
            out.push_back(make_relation(Family::IKZ, weight, Index{},
                                        Index{{l}}, w, std::move(el)));
        }
    return out;
}

std::vector<Relation> gen_conj(int weight) {
    if (weight < 2) throw std::invalid_argument("gen_conj needs weight >= 2");
    std::vector<Relation> out;
    for (int l = 1; l <= weight; ++l)
        for (const Word& w : h1_words(weight - l)) {
            Poly el = conj_combination(l, w);
            if (el.is_zero()) continue;
            out.push_back(make_relation(Family::CONJ, weight, Index{},
                                        Index{{l}}, w, std::move(el)));
        }
    return out;
}

Relation gen_thm2(const Index& m, int l, const Word& w) {
    int weight = m.weight() + l + static_cast<int>(w.degree());
    return make_relation(Family::THM2, weight, m, Index{{l}}, w,
                         thm2_combination(m, l, w));
}

Relation gen_thm3(const Index& m, const Index& lvec, const Word& w) {
    int weight = m.weight() + lvec.weight() + static_cast<int>(w.degree());
    return make_relation(Family::THM3, weight, m, lvec, w,
                         thm3_combination(m, lvec, w));
}

Relation gen_thm3_refined(const Index& m, const Index& lvec, const Word& w) {
    int weight = m.weight() + lvec.weight() + static_cast<int>(w.degree());
    return make_relation(Family::THM3R, weight, m, lvec, w,
                         thm3_refined_combination(m, lvec, w));
}

std::vector<Relation> gen_thm2_all(int weight, int s_max) {
    std::vector<Relation> out;
    for (int a = 0; a <= weight - 1; ++a)
        for (const Index& m : compositions_of(a)) {
            if (s_max >= 0 && m.depth() > s_max) continue;
            for (int l = 1; l <= weight - a; ++l)
                for (const Word& w : h1_words(weight - a - l)) {
                    Relation r = gen_thm2(m, l, w);
                    if (!r.element.is_zero()) out.push_back(std::move(r));
                }
        }
    return out;
}

namespace {

template <typename Gen>
std::vector<Relation> gen_thm3_family_all(int weight, int s_max, int t_max,
                                          Gen gen) {
    std::vector<Relation> out;
    for (int a = 0; a <= weight - 1; ++a)
        for (const Index& m : compositions_of(a)) {
            if (s_max >= 0 && m.depth() > s_max) continue;
            for (int b = 1; b <= weight - a; ++b)
                for (const Index& lvec : compositions_of(b)) {
                    if (t_max >= 0 && lvec.depth() > t_max) continue;
                    for (const Word& w : h1_words(weight - a - b)) {
                        Relation r = gen(m, lvec, w);
                        if (!r.element.is_zero()) out.push_back(std::move(r));
                    }
                }
        }
    return out;
}

}  // namespace

std::vector<Relation> gen_thm3_all(int weight, int s_max, int t_max) {
    return gen_thm3_family_all(weight, s_max, t_max, gen_thm3);
}

std::vector<Relation> gen_thm3_refined_all(int weight, int s_max, int t_max) {
    return gen_thm3_family_all(weight, s_max, t_max, gen_thm3_refined);
}

std::vector<PrefixOrderedPermutation> perms_prefix_ordered(int n, int s) {
    if (n < 1 || s < 0 || s > n)
        throw std::invalid_argument("invalid (n, s) for prefix-ordered perms");
    // positions of the values 1..s ascend: choose them as a combination,
    // then permute the remaining values over the remaining positions
    std::vector<PrefixOrderedPermutation> out;
    std::vector<int> comb(s);
    for (int i = 0; i < s; ++i) comb[i] = i;
    for (;;) {
        std::vector<int> rest;
        for (int v = s + 1; v <= n; ++v) rest.push_back(v);
        do {
            PrefixOrderedPermutation sp;
            sp.s = s;
            sp.sigma.assign(n, 0);
            for (int i = 0; i < s; ++i) sp.sigma[comb[i]] = i + 1;
            size_t r = 0;
            for (int i = 0; i < n; ++i)
                if (sp.sigma[i] == 0) sp.sigma[i] = rest[r++];
            out.push_back(std::move(sp));
        } while (std::next_permutation(rest.begin(), rest.end()));
        // next combination of s positions out of n, lexicographic
        int i = s - 1;
        while (i >= 0 && comb[i] == n - s + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

std::vector<ULetter> u_letters(const PrefixOrderedPermutation& sp) {
    const int n = static_cast<int>(sp.sigma.size());
    std::vector<ULetter> u(n, ULetter::MinusY);
    for (int i = 0; i + 1 < n; ++i) {
        int si = sp.sigma[i];
        int sj = sp.sigma[i + 1];
        bool x = (si <= sp.s && sj > sp.s) || (si > sp.s && si < sj);
        u[i] = x ? ULetter::X : ULetter::MinusY;
    }
    return u;
}

}  // namespace fmzv
