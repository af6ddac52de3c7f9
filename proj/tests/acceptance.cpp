// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Criteria pin the published rank tables, the worked example relations,
// the mod-p vanishing sweeps, the algebraic property suites, and the
// oracle agreements, each at its stated caps.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "fmzv/linalg.hpp"
#include "fmzv/numeric.hpp"
#include "fmzv/parallel.hpp"
#include "fmzv/relation.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace fmzv;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

void report(const std::string& name, const props::Result& r) {
    report(name, r.ok, r.detail);
}

const std::vector<int> kPublishedRanks{1, 2, 5, 10, 22, 44, 90, 181, 363};

std::map<std::vector<int>, Rational> index_coeffs(const Poly& p) {
    std::map<std::vector<int>, Rational> out;
    for (const auto& [w, c] : p.terms()) out[index_from_word(w).parts] = c;
    return out;
}

bool matches_up_to_sign(const Poly& got,
                        std::map<std::vector<int>, Rational> want) {
    auto g = index_coeffs(got);
    if (g == want) return true;
    for (auto& [k, v] : want) v = -v;
    return g == want;
}

unsigned threads() { return default_threads(); }

}  // namespace

// rank column of CSV from the real CLI binary; empty on any failure
std::vector<int> cli_table_ranks(const std::string& args) {
    std::string cmd = std::string(FMZV_CLI_PATH) + " table " + args +
                      " --threads " + std::to_string(threads());
    std::vector<int> ranks;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return ranks;
    char line[512];
    bool header = true;
    while (std::fgets(line, sizeof line, pipe)) {
        if (header) {
            header = false;
            continue;
        }
        // weight,family,mode,rank,...
        const char* p = line;
        for (int commas = 0; commas < 3 && p; ++commas) {
            p = std::strchr(p, ',');
            if (p) ++p;
        }
        if (p) ranks.push_back(std::atoi(p));
    }
    if (pclose(pipe) != 0) ranks.clear();
    return ranks;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (int x : v) {
        if (!s.empty()) s += ',';
        s += std::to_string(x);
    }
    return s;
}

int main(int argc, char** argv) {
    const bool stretch = argc > 1 && std::string(argv[1]) == "--stretch";

    // 1. rank table for the finite-side family, weights 2..10 exact,
    //    through the actual CLI
    {
        auto conj = cli_table_ranks("--family conj --weights 2..10 --mode exact");
        report("criterion 1: conj ranks, weights 2..10 exact",
               conj == kPublishedRanks, join_ints(conj));

        // 2. real-side family, weights 3..11 exact
        auto ikz = cli_table_ranks("--family ikz --weights 3..11 --mode exact");
        report("criterion 2: ikz ranks, weights 3..11 exact",
               ikz == kPublishedRanks, join_ints(ikz));

        // 3. weight shift between the two tables
        bool shift = !conj.empty() && conj == ikz;
        report("criterion 3: conj rank at k equals ikz rank at k+1", shift);
    }

    // 4. worked example relations, term for term up to sign normalization
    {
        const std::map<std::vector<int>, Rational> ex1{
            {{5}, -1},      {{2, 2, 1}, 1},    {{2, 1, 2}, 1},
            {{1, 2, 2}, 1}, {{2, 1, 1, 1}, 1}, {{1, 1, 1, 2}, 1}};
        const std::map<std::vector<int>, Rational> ex2{
            {{4, 1, 1}, 1},       {{2, 3, 1}, 1},
            {{2, 1, 3}, 1},       {{3, 1, 1, 1}, 1},
            {{1, 3, 1, 1}, 1},    {{1, 1, 3, 1}, 1},
            {{1, 1, 1, 3}, 1},    {{2, 1, 2, 1}, 1},
            {{2, 1, 1, 1, 1}, -1}, {{1, 2, 1, 1, 1}, 1},
            {{1, 1, 1, 2, 1}, 1}, {{1, 1, 1, 1, 1, 1}, -1}};
        const std::map<std::vector<int>, Rational> ex4{
            {{5, 1}, 1},        {{2, 4}, -1},
            {{3, 2, 1}, -1},    {{2, 3, 1}, -1},
            {{1, 1, 4}, -1},    {{3, 1, 1, 1}, -2},
            {{1, 3, 1, 1}, -1}, {{1, 1, 3, 1}, -2},
            {{2, 1, 2, 1}, -1}, {{2, 2, 1, 1}, 1},
            {{1, 2, 1, 1, 1}, -1}, {{1, 1, 1, 1, 1, 1}, 1}};

        auto rels = gen_conj(5);
        const Relation* r1 = nullptr;
        for (const auto& r : rels)
            if (r.l() == 3 && r.seed == Word::parse("xy")) r1 = &r;
        bool ok1 = r1 && matches_up_to_sign(r1->element, ex1);
        Relation r2 = gen_thm2(Index{{2, 1}}, 2, Word::parse("y"));
        bool ok2 = matches_up_to_sign(r2.element, ex2) &&
                   r2.element.term_count() == 12;
        Relation r4 = gen_thm3(Index{{2}}, Index{{2, 1}}, Word::parse("y"));
        bool ok4 = matches_up_to_sign(r4.element, ex4) &&
                   r4.element.term_count() == 12;
        report("criterion 4: worked examples 1, 2, 4 term-for-term",
               ok1 && ok2 && ok4);
    }

    // 5. numeric vanishing of all generated families to weight 7
    {
        std::vector<Relation> rels;
        for (int W = 2; W <= 7; ++W) {
            for (auto& r : gen_conj(W)) rels.push_back(std::move(r));
            for (auto& r : gen_thm2_all(W)) rels.push_back(std::move(r));
            for (auto& r : gen_thm3_all(W)) rels.push_back(std::move(r));
            for (auto& r : gen_thm3_refined_all(W)) rels.push_back(std::move(r));
        }
        size_t fail = 0, pass = 0, skipped = 0;
        for (const auto& rep : verify_all(rels, 2, 499, threads())) {
            pass += rep.count(Verdict::Pass);
            fail += rep.count(Verdict::Fail);
            skipped += rep.count(Verdict::Skipped);
        }
        report("criterion 5: vanishing to weight 7, primes to 499",
               fail == 0 && pass > 0,
               std::to_string(rels.size()) + " relations, " +
                   std::to_string(pass) + " pass, " + std::to_string(fail) +
                   " fail, " + std::to_string(skipped) + " skipped");
    }

    // 6. property suites at the stated caps
    report("criterion 6a: stuffle commutative/associative, weight <= 8",
           props::stuffle_comm_assoc(8));
    report("criterion 6b: Leibniz rule, 200 random pairs, weight <= 8, l <= 4",
           props::leibniz_random(200, 8, 4, 0xfeed));
    report("criterion 6c: phi automorphism and involution, length <= 8",
           props::phi_automorphism(8, 0xabcd));
    report("criterion 6d: per-prime stuffle homomorphism, weight <= 6, p <= 97",
           props::stuffle_homomorphism_mod(6, 97));
    report("criterion 6e: duality mod p, weight <= 6, primes <= 499",
           props::duality_mod(6, 499));
    report("criterion 6f: thm2 combination equals conj combination, weight <= 8",
           props::thm2_equals_conj(8));
    report("criterion 6g: base-case duality identity, s <= 3, l <= 4",
           props::base_case_duality(3, 4, 6));
    report("criterion 6h: refinement and formal-sum identities, weight <= 7",
           props::refinement_identities(7));

    // 7. oracle agreement
    {
        bool ok = true;
        std::string detail;
        for (uint32_t p : primes_in_range(2, 31)) {
            PrimeCtx ctx(p);
            for (int k = 0; k <= 4 && ok; ++k)
                for (const Index& ix : compositions_of(k))
                    if (zeta_trunc_mod(ix, ctx) !=
                        oracles::brute_zeta_mod(ix.parts, p)) {
                        ok = false;
                        detail = "zeta mismatch at p=" + std::to_string(p) +
                                 " ix=" + ix.str();
                        break;
                    }
        }
        for (int k = 2; k <= 8 && ok; ++k) {
            SparseMatrixQ m = family_matrix(Family::CONJ, k);
            if (rank_exact(m) != rank_mod(m, kDefaultModulus)) {
                ok = false;
                detail = "conj rank mismatch at weight " + std::to_string(k);
            }
        }
        for (int k = 3; k <= 8 && ok; ++k) {
            SparseMatrixQ m = family_matrix(Family::IKZ, k);
            if (rank_exact(m) != rank_mod(m, kDefaultModulus)) {
                ok = false;
                detail = "ikz rank mismatch at weight " + std::to_string(k);
            }
        }
        report("criterion 7: zeta and rank oracles agree", ok, detail);
    }

    // stretch: modular ranks for weights 11..14, reported but not gating
    if (stretch) {
        auto ranks =
            cli_table_ranks("--family conj --weights 11..14 --mode modq");
        const std::vector<int> published{727, 1456, 2912, 5825};
        std::printf("[%s] stretch: conj ranks 11..14 modq (non-gating): %s\n",
                    ranks == published ? "PASS" : "INFO",
                    join_ints(ranks).c_str());
    }

    std::printf("%d criterion failure(s)\n", failures);
    return failures == 0 ? 0 : 1;
}
