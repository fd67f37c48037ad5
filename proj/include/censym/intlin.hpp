#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "censym/matrix.hpp"

namespace censym {

/// Column-style Hermite normal form A * transform = h, with h = [B | O] when
/// A has full row rank. B is lower triangular with positive diagonal and
/// every off-diagonal row entry reduced into [0, diagonal) — the row maximum
/// sits on the main diagonal.
struct HnfResult {
    IntMatrix h;          ///< d x n echelon form
    IntMatrix transform;  ///< n x n, |det| = 1
    std::size_t rank = 0;
    /// pivot_rows[k] = row of the pivot in column k, strictly increasing.
    std::vector<std::size_t> pivot_rows;

    bool has_square_block() const { return rank == h.rows(); }
    /// The d x d block B; only defined when rank = rows.
    IntMatrix square_block() const;
};

HnfResult hnf(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int bareiss_determinant(const IntMatrix& a);

/// gcd over all d x d minors (d = rows); 0 iff rank < d. Enumerates minors
/// while C(n, d) <= minor_budget, else falls back to |det B| from the HNF
/// (equal by the index proposition).
Int gcd_maximal_minors(const IntMatrix& a, std::size_t minor_budget = 100000);

/// The index [Z^d : ZA]; Infinite exactly when rank < d.
struct LatticeIndex {
    bool finite = true;
    Int value = 1;  ///< >= 1 when finite; meaningless otherwise

    static LatticeIndex infinite() { return {false, Int(0)}; }
    static LatticeIndex of(Int v) { return {true, std::move(v)}; }
    bool operator==(const LatticeIndex&) const = default;
};

LatticeIndex lattice_index(const IntMatrix& a);

/// flag true iff every nonzero maximal minor has the same absolute value;
/// delta is that common value when flag is true, 0 otherwise.
struct UnimodularVerdict {
    bool unimodular = false;
    Int delta = 0;
};

/// Requires rank(a) = rows (throws RankDeficientError otherwise).
UnimodularVerdict is_unimodular(const IntMatrix& a, std::size_t minor_limit = 10000000);

/// Factors a = b * a_prime with b the HNF block and a_prime integral of
/// lattice index 1. Requires full row rank.
std::pair<IntMatrix, IntMatrix> lattice_normalize(const IntMatrix& a);

/// Membership of x in the column lattice ZA, decided on the echelon form.
bool in_column_lattice(const HnfResult& hn, const std::vector<Int>& x);

/// Rank via HNF (exact).
std::size_t integer_rank(const IntMatrix& a);

}  // namespace censym
