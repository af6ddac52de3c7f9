// Command-line front end: algebra expression expansion, relation family
// generation (JSONL), rank tables (CSV), and mod-p verification sweeps.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "fmzv/linalg.hpp"
#include "fmzv/modular.hpp"
#include "fmzv/numeric.hpp"
#include "fmzv/parallel.hpp"
#include "fmzv/parse_expr.hpp"
#include "fmzv/relation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

constexpr int kMaxExactWeight = 14;
constexpr int kMaxModqWeight = 20;
constexpr int kMaxVerifyWeight = 12;

struct ResourceCap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int k = std::stoi(text);
        return {k, k};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

fmzv::Family parse_family(const std::string& name) {
    return fmzv::family_from_string(name);
}

void check_weight_cap(fmzv::RankMode mode, int weight, bool force) {
    const int cap =
        mode == fmzv::RankMode::Exact ? kMaxExactWeight : kMaxModqWeight;
    if (weight > cap && !force)
        throw ResourceCap("weight " + std::to_string(weight) +
                          " exceeds the cap of " + std::to_string(cap) +
                          (mode == fmzv::RankMode::Exact ? " for exact mode"
                                                         : " for modq mode") +
                          "; pass --force to override");
}

std::vector<fmzv::Relation> enumerate_family(fmzv::Family f, int weight,
                                             int s_max, int t_max) {
    switch (f) {
        case fmzv::Family::CONJ: return fmzv::gen_conj(weight);
        case fmzv::Family::IKZ: return fmzv::gen_ikz(weight);
        case fmzv::Family::THM2: return fmzv::gen_thm2_all(weight, s_max);
        case fmzv::Family::THM3:
            return fmzv::gen_thm3_all(weight, s_max, t_max);
        case fmzv::Family::THM3R:
            return fmzv::gen_thm3_refined_all(weight, s_max, t_max);
    }
    return {};
}

int cmd_expand(const std::string& expr) {
    fmzv::Poly p = fmzv::parse_expr(expr);
    std::cout << (p.in_h1() ? p.str_index() : p.str_letters()) << "\n";
    return kExitOk;
}

int cmd_generate(const std::string& family, int weight, int s_max, int t_max,
                 const std::string& m_str, int l_opt,
                 const std::string& lvec_str, const std::string& w_str) {
    fmzv::Family f = parse_family(family);
    const bool explicit_params = !w_str.empty();
    if (explicit_params) {
        fmzv::Word seed = fmzv::word_from_index(fmzv::Index::parse(w_str));
        fmzv::Relation rel;
        switch (f) {
            case fmzv::Family::THM2:
                rel = fmzv::gen_thm2(fmzv::Index::parse(m_str), l_opt, seed);
                break;
            case fmzv::Family::THM3:
                rel = fmzv::gen_thm3(fmzv::Index::parse(m_str),
                                     fmzv::Index::parse(lvec_str), seed);
                break;
            case fmzv::Family::THM3R:
                rel = fmzv::gen_thm3_refined(fmzv::Index::parse(m_str),
                                             fmzv::Index::parse(lvec_str),
                                             seed);
                break;
            default:
                throw CLI::ValidationError(
                    "--m/--l/--lvec/--w select a single thm2/thm3/thm3r "
                    "relation; conj and ikz enumerate by --weight");
        }
        std::cout << rel.jsonl() << "\n";
        return kExitOk;
    }
    if (weight > kMaxVerifyWeight + 2)
        throw ResourceCap("generate weight cap is " +
                          std::to_string(kMaxVerifyWeight + 2));
    for (const fmzv::Relation& rel : enumerate_family(f, weight, s_max, t_max))
        std::cout << rel.jsonl() << "\n";
    return kExitOk;
}

int table_common(fmzv::Family f, int wlo, int whi, const std::string& mode_str,
                 uint64_t modulus, uint64_t check_modulus, bool force,
                 unsigned threads) {
    fmzv::RankMode mode = mode_str == "modq" ? fmzv::RankMode::ModQ
                                             : fmzv::RankMode::Exact;
    check_weight_cap(mode, whi, force);
    const int min_weight = f == fmzv::Family::IKZ ? 3 : 2;
    if (wlo < min_weight)
        throw CLI::ValidationError("family " +
                                   std::string(fmzv::family_name(f)) +
                                   " starts at weight " +
                                   std::to_string(min_weight));

    auto rows = fmzv::relation_table(wlo, whi, f, mode, modulus, threads);
    std::cout << fmzv::csv_header() << "\n";
    for (const auto& r : rows) {
        std::cout << fmzv::csv_line(r) << "\n";
        if (r.duplicates_dropped > 0)
            std::cerr << "note: weight " << r.weight << ": dropped "
                      << r.duplicates_dropped << " duplicate rows\n";
    }

    if (mode == fmzv::RankMode::ModQ && check_modulus != 0) {
        auto check =
            fmzv::relation_table(wlo, whi, f, mode, check_modulus, threads);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].rank != check[i].rank) {
                std::cerr << "check modulus mismatch at weight "
                          << rows[i].weight << ": " << rows[i].rank << " vs "
                          << check[i].rank << "\n";
                return kExitVerifyFail;
            }
        }
        std::cerr << "check modulus " << check_modulus << ": ranks agree\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& family, int weight,
               const std::string& primes_str, int s_max, int t_max,
               bool force, unsigned threads) {
    if (weight > kMaxVerifyWeight && !force)
        throw ResourceCap("verify weight cap is " +
                          std::to_string(kMaxVerifyWeight) +
                          "; pass --force to override");
    auto [plo, phi] = parse_range(primes_str);
    if (plo < 0 || phi < plo)
        throw CLI::ValidationError("bad prime range");
    fmzv::Family f = parse_family(family);
    std::vector<fmzv::Relation> rels =
        enumerate_family(f, weight, s_max, t_max);
    // IKZ relations concern the real-number map; their finite counterparts
    // are the x-stripped combinations one weight down (see README).
    if (f == fmzv::Family::IKZ) {
        std::vector<fmzv::Relation> induced;
        induced.reserve(rels.size());
        for (const fmzv::Relation& r : rels) {
            fmzv::Relation ind;
            ind.family = fmzv::Family::IKZ;
            ind.weight = r.weight - 1;
            ind.lvec = r.lvec;
            ind.seed = r.seed.suffix_from(1);
            ind.element = fmzv::normalize_relation_sign(
                fmzv::conj_combination(ind.l(), ind.seed));
            induced.push_back(std::move(ind));
        }
        rels = std::move(induced);
    }

    auto reports = fmzv::verify_all(rels, static_cast<uint32_t>(plo),
                                    static_cast<uint32_t>(phi), threads);
    size_t pass = 0, fail = 0, skipped = 0;
    for (const auto& rep : reports) {
        for (const auto& pr : rep.results)
            std::cout << fmzv::report_line(rep.relation_id, pr) << "\n";
        pass += rep.count(fmzv::Verdict::Pass);
        fail += rep.count(fmzv::Verdict::Fail);
        skipped += rep.count(fmzv::Verdict::Skipped);
    }
    std::cout << "{\"summary\":{\"relations\":" << reports.size()
              << ",\"pass\":" << pass << ",\"fail\":" << fail
              << ",\"skipped\":" << skipped << "}}\n";
    return fail == 0 ? kExitOk : kExitVerifyFail;
}

int cmd_eval(const std::string& index_str, uint64_t prime) {
    if (!fmzv::is_prime(prime)) {
        if (prime > fmzv::kMaxPrime)
            throw ResourceCap("primes above 2^31 are not supported");
        throw CLI::ValidationError("--prime must be prime");
    }
    fmzv::Index ix = fmzv::Index::parse(index_str);
    std::cout << fmzv::zeta_trunc_mod(ix, prime).value << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite multiple zeta value relations: word algebra, "
                 "relation families, rank tables, mod-p verification"};
    app.set_version_flag("--version", "fmzv 0.1.0");
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    unsigned threads = fmzv::default_threads();
    app.add_option("--threads", threads, "worker threads (output is "
                   "identical for any value)");

    // expand
    std::string expr;
    auto* expand = app.add_subcommand("expand", "evaluate an expression and "
                                      "print it over the index basis");
    expand->add_option("expr", expr, "expression, e.g. \"d3(x y) + zm(3) x y\"")
        ->required();

    // generate
    std::string family, m_str, lvec_str, w_str;
    int weight = 0, s_max = 2, t_max = 2, l_opt = 0;
    auto* generate =
        app.add_subcommand("generate", "stream a relation family as JSONL");
    generate->add_option("--family", family, "conj|ikz|thm2|thm3|thm3r")
        ->required();
    generate->add_option("--weight", weight, "total weight");
    generate->add_option("--s-max", s_max, "outer index depth cap, -1 = none");
    generate->add_option("--t-max", t_max, "derivation count cap, -1 = none");
    generate->add_option("--m", m_str, "explicit outer index, e.g. (2,1)");
    generate->add_option("--l", l_opt, "explicit derivation weight (thm2)");
    generate->add_option("--lvec", lvec_str, "explicit derivation index "
                         "(thm3/thm3r), e.g. (2,1)");
    generate->add_option("--w", w_str, "explicit seed word as an index, "
                         "e.g. (2) for xy, () for 1");

    // rank / table
    std::string weights_str, mode_str = "exact";
    uint64_t modulus = fmzv::kDefaultModulus, check_modulus = 0;
    bool force = false;
    auto* rank = app.add_subcommand("rank", "rank of one family matrix (CSV)");
    rank->add_option("--family", family, "conj|ikz")->required();
    rank->add_option("--weight", weight, "weight")->required();
    rank->add_option("--mode", mode_str, "exact|modq")
        ->check(CLI::IsMember({"exact", "modq"}));
    rank->add_option("--modulus", modulus, "prime modulus for modq");
    rank->add_option("--check-modulus", check_modulus,
                     "second modulus cross-check (modq)");
    rank->add_flag("--force", force, "override weight caps");

    auto* table =
        app.add_subcommand("table", "rank per weight over a range (CSV)");
    table->add_option("--family", family, "conj|ikz")->required();
    table->add_option("--weights", weights_str, "range, e.g. 2..10")
        ->required();
    table->add_option("--mode", mode_str, "exact|modq")
        ->check(CLI::IsMember({"exact", "modq"}));
    table->add_option("--modulus", modulus, "prime modulus for modq");
    table->add_option("--check-modulus", check_modulus,
                      "second modulus cross-check (modq)");
    table->add_flag("--force", force, "override weight caps");

    // verify
    std::string primes_str = "11..499";
    auto* verify = app.add_subcommand(
        "verify", "evaluate a family mod primes, stream JSONL reports");
    verify->add_option("--family", family, "conj|ikz|thm2|thm3|thm3r")
        ->required();
    verify->add_option("--weight", weight, "total weight")->required();
    verify->add_option("--primes", primes_str, "prime range, default 11..499");
    verify->add_option("--s-max", s_max, "outer index depth cap, -1 = none");
    verify->add_option("--t-max", t_max, "derivation count cap, -1 = none");
    verify->add_flag("--force", force, "override weight caps");

    // eval
    std::string index_str;
    uint64_t prime = 0;
    auto* eval = app.add_subcommand(
        "eval", "one truncated harmonic sum mod one prime");
    eval->add_option("--index", index_str, "index, e.g. 1,1")->required();
    eval->add_option("--prime", prime, "prime modulus")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(expand)) return cmd_expand(expr);
        if (app.got_subcommand(generate))
            return cmd_generate(family, weight, s_max, t_max, m_str, l_opt,
                                lvec_str, w_str);
        if (app.got_subcommand(rank))
            return table_common(parse_family(family), weight, weight, mode_str,
                                modulus, check_modulus, force, threads);
        if (app.got_subcommand(table)) {
            auto [wlo, whi] = parse_range(weights_str);
            return table_common(parse_family(family), wlo, whi, mode_str,
                                modulus, check_modulus, force, threads);
        }
        if (app.got_subcommand(verify))
            return cmd_verify(family, weight, primes_str, s_max, t_max, force,
                              threads);
        if (app.got_subcommand(eval)) return cmd_eval(index_str, prime);
    } catch (const ResourceCap& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const fmzv::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
