#ifndef FMZV_LINALG_HPP
#define FMZV_LINALG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fmzv/poly.hpp"
#include "fmzv/relation.hpp"
#include "fmzv/word.hpp"

namespace fmzv {

enum class Space { H1, H0 };

// Ordered monomial basis of one homogeneous component, fixing matrix
// columns.  H1 at weight k has 2^{k-1} columns, H0 has 2^{k-2}; the order
// is the canonical word order.
struct BasisMap {
    int weight = 0;
    Space space = Space::H1;
    std::vector<Index> indices;

    static BasisMap make(int weight, Space space);
    size_t size() const { return indices.size(); }

    // Column of a word, or nullopt on degree/space mismatch.  O(1): the
    // column is the word's bit pattern with the trailing y dropped.
    std::optional<uint32_t> position(const Word& w) const;
};

struct SparseVecQ {
    std::vector<std::pair<uint32_t, Rational>> entries;  // sorted by column
};

struct SparseMatrixQ {
    uint32_t ncols = 0;
    std::vector<SparseVecQ> rows;
};

// Coefficient vector of a homogeneous H1/H0 element over the basis.
// Throws std::invalid_argument on weight or space mismatch.
SparseVecQ to_vector(const Poly& p, const BasisMap& basis);
SparseVecQ to_vector(const Relation& rel, const BasisMap& basis);

// The matrix whose rank the tables report.  CONJ rows are the derivation
// relations proper (seed w != 1) over the H1 basis; IKZ rows are d_l(w)
// over the H0 basis.
SparseMatrixQ family_matrix(Family f, int weight);

struct RankStats {
    size_t rows_in = 0;
    size_t duplicates_dropped = 0;
};

// Rank over Q by fraction-free (Bareiss-style) elimination on sparse
// integer rows; deterministic.  Duplicate rows are dropped first.
int rank_exact(const SparseMatrixQ& m, RankStats* stats = nullptr);

// Rank of the reduction mod q; a lower bound for the rational rank.
// Throws std::domain_error if q divides a coefficient denominator.
int rank_mod(const SparseMatrixQ& m, uint64_t q, RankStats* stats = nullptr);

inline constexpr uint64_t kDefaultModulus = 2147483647;  // 2^31 - 1

enum class RankMode { Exact, ModQ };

struct TableRow {
    int weight = 0;
    Family family{};
    RankMode mode{};
    int rank = 0;
    uint64_t rows = 0;
    uint64_t cols = 0;
    int64_t millis = 0;
    size_t duplicates_dropped = 0;
};

TableRow rank_row(Family f, int weight, RankMode mode,
                  uint64_t modulus = kDefaultModulus);

// One row per weight in [wlo, whi]; weights computed in parallel, output
// ordered by weight regardless of thread count.
std::vector<TableRow> relation_table(int wlo, int whi, Family f, RankMode mode,
                                     uint64_t modulus = kDefaultModulus,
                                     unsigned threads = 1);

std::string csv_header();                 // "weight,family,mode,rank,rows,cols,millis"
std::string csv_line(const TableRow& r);

}  // namespace fmzv

#endif
