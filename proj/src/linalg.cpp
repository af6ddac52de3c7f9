#include "fmzv/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "fmzv/modular.hpp"
#include "fmzv/parallel.hpp"

namespace fmzv {

BasisMap BasisMap::make(int weight, Space space) {
    BasisMap b;
    b.weight = weight;
    b.space = space;
    const auto words = space == Space::H1 ? h1_words(weight) : h0_words(weight);
    b.indices.reserve(words.size());
    for (const Word& w : words) b.indices.push_back(index_from_word(w));
    return b;
}

std::optional<uint32_t> BasisMap::position(const Word& w) const {
    if (static_cast<int>(w.degree()) != weight) return std::nullopt;
    if (!w.in_h1()) return std::nullopt;
    if (space == Space::H0 && !w.in_h0()) return std::nullopt;
    return static_cast<uint32_t>(w.bits() >> 1);
}

SparseVecQ to_vector(const Poly& p, const BasisMap& basis) {
    SparseVecQ v;
    v.entries.reserve(p.term_count());
    for (const auto& [w, c] : p.terms()) {
        auto pos = basis.position(w);
        if (!pos)
            throw std::invalid_argument(
                "word '" + w.str() + "' does not fit the weight-" +
                std::to_string(basis.weight) + " basis");
        v.entries.emplace_back(*pos, c);
    }
    // Poly iterates words ascending, which is ascending column order
    return v;
}

SparseVecQ to_vector(const Relation& rel, const BasisMap& basis) {
    if (rel.weight != basis.weight)
        throw std::invalid_argument("relation/basis weight mismatch");
    return to_vector(rel.element, basis);
}

SparseMatrixQ family_matrix(Family f, int weight) {
    SparseMatrixQ m;
    if (f == Family::CONJ) {
        BasisMap basis = BasisMap::make(weight, Space::H1);
        m.ncols = static_cast<uint32_t>(basis.size());
        // Derivation relations proper: the w = 1 row z^{k-1}y (the
        // statement that the weight-k zeta value itself vanishes) is not
        // part of the counted family.
        for (const Relation& r : gen_conj(weight))
            if (!r.seed.empty()) m.rows.push_back(to_vector(r, basis));
    } else if (f == Family::IKZ) {
        BasisMap basis = BasisMap::make(weight, Space::H0);
        m.ncols = static_cast<uint32_t>(basis.size());
        for (const Relation& r : gen_ikz(weight))
            m.rows.push_back(to_vector(r, basis));
    } else {
        throw std::invalid_argument("family matrix defined for CONJ and IKZ");
    }
    return m;
}

namespace {

std::vector<const SparseVecQ*> dedup_rows(const SparseMatrixQ& m,
                                          RankStats* stats) {
    std::vector<const SparseVecQ*> rows;
    rows.reserve(m.rows.size());
    for (const SparseVecQ& r : m.rows)
        if (!r.entries.empty()) rows.push_back(&r);

    auto less = [](const SparseVecQ* a, const SparseVecQ* b) {
        const size_t n = std::min(a->entries.size(), b->entries.size());
        for (size_t i = 0; i < n; ++i) {
            if (a->entries[i].first != b->entries[i].first)
                return a->entries[i].first < b->entries[i].first;
            int c = cmp(a->entries[i].second, b->entries[i].second);
            if (c != 0) return c < 0;
        }
        return a->entries.size() < b->entries.size();
    };
    auto equal = [&](const SparseVecQ* a, const SparseVecQ* b) {
        return !less(a, b) && !less(b, a);
    };
    std::sort(rows.begin(), rows.end(), less);
    size_t before = rows.size();
    rows.erase(std::unique(rows.begin(), rows.end(), equal), rows.end());
    if (stats) {
        stats->rows_in = m.rows.size();
        stats->duplicates_dropped = before - rows.size();
    }
    return rows;
}

struct IntRow {
    std::vector<std::pair<uint32_t, mpz_class>> e;  // sorted by column
    mpz_class epoch{1};  // pivot value current when this row was last touched

    const mpz_class* at(uint32_t col) const {
        auto it = std::lower_bound(
            e.begin(), e.end(), col,
            [](const auto& ent, uint32_t c) { return ent.first < c; });
        return it != e.end() && it->first == col ? &it->second : nullptr;
    }
};

void divexact(mpz_class& n, const mpz_class& d) {
#ifndef NDEBUG
    assert(mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()));
#endif
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
}

// entry <- entry * d_prev / epoch, exact per entry
void catch_up(IntRow& r, const mpz_class& d_prev) {
    if (r.epoch == d_prev) return;
    for (auto& [c, v] : r.e) {
        v *= d_prev;
        divexact(v, r.epoch);
    }
    r.epoch = d_prev;
}

}  // namespace

// Fraction-free elimination: after each step every live entry equals (up
// to sign) a minor of the input bordered by the pivot rows/columns, so
// the single division per update is exact.  Rows with a zero entry in the
// pivot column are left stale and rescaled lazily through `epoch`, which
// keeps untouched rows untouched.
int rank_exact(const SparseMatrixQ& m, RankStats* stats) {
    std::vector<IntRow> rows;
    {
        const auto uniq = dedup_rows(m, stats);
        rows.reserve(uniq.size());
        for (const SparseVecQ* src : uniq) {
            IntRow r;
            mpz_class lcm = 1;
            for (const auto& [c, q] : src->entries)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                        q.get_den().get_mpz_t());
            r.e.reserve(src->entries.size());
            mpz_class g = 0;
            for (const auto& [c, q] : src->entries) {
                mpz_class v = q.get_num() * (lcm / q.get_den());
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
                r.e.emplace_back(c, std::move(v));
            }
            if (g > 1)
                for (auto& [c, v] : r.e) divexact(v, g);
            rows.push_back(std::move(r));
        }
    }

    std::vector<size_t> active(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) active[i] = i;

    mpz_class d_prev = 1;
    int rank = 0;
    while (!active.empty()) {
        // pivot: shortest row, then smallest entry bit-length, then
        // smallest column, then first row
        size_t min_nnz = SIZE_MAX;
        for (size_t i : active) min_nnz = std::min(min_nnz, rows[i].e.size());
        size_t piv_pos = SIZE_MAX;
        uint32_t piv_col = 0;
        size_t best_bits = SIZE_MAX;
        for (size_t ai = 0; ai < active.size(); ++ai) {
            const IntRow& r = rows[active[ai]];
            if (r.e.size() != min_nnz) continue;
            for (const auto& [c, v] : r.e) {
                size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
                if (bits < best_bits ||
                    (bits == best_bits && piv_pos != SIZE_MAX &&
                     c < piv_col)) {
                    best_bits = bits;
                    piv_col = c;
                    piv_pos = ai;
                }
            }
        }

        IntRow& pr = rows[active[piv_pos]];
        catch_up(pr, d_prev);
        const mpz_class p = *pr.at(piv_col);

        std::vector<size_t> next_active;
        next_active.reserve(active.size() - 1);
        for (size_t ai = 0; ai < active.size(); ++ai) {
            if (ai == piv_pos) continue;
            IntRow& r = rows[active[ai]];
            const mpz_class* f = r.at(piv_col);
            if (!f) {
                next_active.push_back(active[ai]);
                continue;
            }
            catch_up(r, d_prev);
            const mpz_class factor = *r.at(piv_col);
            // r <- (p*r - factor*pivot_row) / d_prev
            std::vector<std::pair<uint32_t, mpz_class>> merged;
            merged.reserve(r.e.size() + pr.e.size());
            size_t i = 0, j = 0;
            mpz_class v;
            while (i < r.e.size() || j < pr.e.size()) {
                uint32_t rc = i < r.e.size() ? r.e[i].first : UINT32_MAX;
                uint32_t pc = j < pr.e.size() ? pr.e[j].first : UINT32_MAX;
                uint32_t c = std::min(rc, pc);
                v = 0;
                if (rc == c) v += p * r.e[i++].second;
                if (pc == c) v -= factor * pr.e[j++].second;
                if (v != 0) {
                    divexact(v, d_prev);
                    merged.emplace_back(c, v);
                }
            }
            r.e = std::move(merged);
            r.epoch = p;
            if (!r.e.empty()) next_active.push_back(active[ai]);
        }
        active = std::move(next_active);
        ++rank;
        d_prev = p;
    }
    return rank;
}

int rank_mod(const SparseMatrixQ& m, uint64_t q, RankStats* stats) {
    if (!is_prime(q) || q > kMaxPrime)
        throw std::domain_error("modulus must be a prime below 2^31");
    PrimeCtx ctx(q);

    using ModRow = std::vector<std::pair<uint32_t, uint64_t>>;
    std::vector<ModRow> rows;
    for (const SparseVecQ* src : dedup_rows(m, stats)) {
        ModRow r;
        r.reserve(src->entries.size());
        for (const auto& [c, coef] : src->entries) {
            uint64_t den = mpz_fdiv_ui(coef.get_den().get_mpz_t(), q);
            if (den == 0)
                throw std::domain_error(
                    "coefficient denominator divisible by modulus");
            uint64_t num = mpz_fdiv_ui(coef.get_num().get_mpz_t(), q);
            uint64_t v = ctx.mul(num, ctx.inv(den));
            if (v != 0) r.emplace_back(c, v);
        }
        if (!r.empty()) rows.push_back(std::move(r));
    }

    auto find = [](const ModRow& r, uint32_t col) -> const uint64_t* {
        auto it = std::lower_bound(
            r.begin(), r.end(), col,
            [](const auto& ent, uint32_t c) { return ent.first < c; });
        return it != r.end() && it->first == col ? &it->second : nullptr;
    };

    std::vector<size_t> active(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) active[i] = i;

    int rank = 0;
    while (!active.empty()) {
        size_t min_nnz = SIZE_MAX;
        for (size_t i : active) min_nnz = std::min(min_nnz, rows[i].size());
        size_t piv_pos = SIZE_MAX;
        uint32_t piv_col = UINT32_MAX;
        for (size_t ai = 0; ai < active.size(); ++ai) {
            const ModRow& r = rows[active[ai]];
            if (r.size() != min_nnz) continue;
            if (r.front().first < piv_col) {
                piv_col = r.front().first;
                piv_pos = ai;
            }
        }

        const ModRow pr = rows[active[piv_pos]];
        const uint64_t inv_p = ctx.inv(*find(pr, piv_col));

        std::vector<size_t> next_active;
        next_active.reserve(active.size() - 1);
        for (size_t ai = 0; ai < active.size(); ++ai) {
            if (ai == piv_pos) continue;
            ModRow& r = rows[active[ai]];
            const uint64_t* f = find(r, piv_col);
            if (!f) {
                next_active.push_back(active[ai]);
                continue;
            }
            const uint64_t scale = ctx.mul(*f, inv_p);
            ModRow merged;
            merged.reserve(r.size() + pr.size());
            size_t i = 0, j = 0;
            while (i < r.size() || j < pr.size()) {
                uint32_t rc = i < r.size() ? r[i].first : UINT32_MAX;
                uint32_t pc = j < pr.size() ? pr[j].first : UINT32_MAX;
                uint32_t c = std::min(rc, pc);
                uint64_t v = 0;
                if (rc == c) v = r[i++].second;
                if (pc == c) v = ctx.sub(v, ctx.mul(scale, pr[j++].second));
                if (v != 0) merged.emplace_back(c, v);
            }
            r = std::move(merged);
            if (!r.empty()) next_active.push_back(active[ai]);
        }
        active = std::move(next_active);
        ++rank;
    }
    return rank;
}

TableRow rank_row(Family f, int weight, RankMode mode, uint64_t modulus) {
    const auto start = std::chrono::steady_clock::now();
    SparseMatrixQ m = family_matrix(f, weight);
    RankStats stats;
    int rank = mode == RankMode::Exact ? rank_exact(m, &stats)
                                       : rank_mod(m, modulus, &stats);
    const auto stop = std::chrono::steady_clock::now();
    TableRow row;
    row.weight = weight;
    row.family = f;
    row.mode = mode;
    row.rank = rank;
    row.rows = m.rows.size();
    row.cols = m.ncols;
    row.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
            .count();
    row.duplicates_dropped = stats.duplicates_dropped;
    return row;
}

std::vector<TableRow> relation_table(int wlo, int whi, Family f, RankMode mode,
                                     uint64_t modulus, unsigned threads) {
    if (whi < wlo) throw std::invalid_argument("empty weight range");
    std::vector<TableRow> rows(static_cast<size_t>(whi - wlo + 1));
    parallel_for(rows.size(), threads, [&](size_t i) {
        rows[i] = rank_row(f, wlo + static_cast<int>(i), mode, modulus);
    });
    return rows;
}

std::string csv_header() { return "weight,family,mode,rank,rows,cols,millis"; }

std::string csv_line(const TableRow& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d,%s,%s,%d,%llu,%llu,%lld", r.weight,
                  std::string(family_name(r.family)).c_str(),
                  r.mode == RankMode::Exact ? "EXACT" : "MODQ", r.rank,
                  static_cast<unsigned long long>(r.rows),
                  static_cast<unsigned long long>(r.cols),
                  static_cast<long long>(r.millis));
    return buf;
}

}  // namespace fmzv
