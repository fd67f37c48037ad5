#pragma once

#include <memory>
#include <vector>

#include "censym/configs.hpp"
#include "censym/polytope.hpp"

namespace censym {

struct SemigroupLimits {
    std::size_t point_budget = 5000000;
    PolytopeLimits polytope;
};

/// Per-degree sets of reachable lattice points of the graded monoid:
/// slice[N] = all sums of N columns, deduplicated and sorted.
class DegreeSlices {
public:
    DegreeSlices(Configuration config, int max_degree,
                 std::size_t point_budget = 5000000);

    const Configuration& config() const { return config_; }
    int max_degree() const { return max_degree_; }

    std::size_t size(int degree) const;
    bool contains(int degree, const std::vector<Int>& v) const;
    std::vector<Int> point(int degree, std::size_t index) const;

    /// Extends the table to a higher degree (same budget rules).
    void extend_to(int max_degree);

private:
    Configuration config_;
    int max_degree_;
    std::size_t point_budget_;
    std::size_t dims_;
    bool fits_fast_;                                // entries provably fit int64
    std::vector<std::vector<std::int64_t>> fast_;   // flattened sorted tuples
    std::vector<std::vector<Int>> wide_;            // fallback, flattened
    void expand_one();
};

DegreeSlices degree_slices(const Configuration& c, int max_degree,
                           std::size_t point_budget = 5000000);

struct HilbertData {
    std::vector<Int> values;    ///< H(0..s)
    std::size_t krull_dim = 0;  ///< rank of the configuration matrix
    std::vector<Int> h_vector;  ///< series numerator when stabilized
    bool stabilized = false;
};

struct HilbertLimits {
    std::size_t point_budget = 5000000;
    int degree_cap = 64;
};

/// Hilbert function by slice counting; k-fold differences evaluated degree by
/// degree until three consecutive zeros confirm the numerator. A blown budget
/// returns the partial table with stabilized = false.
HilbertData hilbert_h_vector(const Configuration& c, const HilbertLimits& limits = {});

struct NormalityVerdict {
    bool normal = false;
    int bound = 0;  ///< degrees checked; Normal verdicts are "no violation up to bound"
    std::vector<Int> witness;
    int witness_degree = 0;
};

/// Compares slice[N] against the lattice points of N Conv(A) that lie in ZA,
/// for N <= max_degree. The witness is the colexicographically smallest
/// violating vector at the smallest violating degree.
NormalityVerdict normality_check(const Configuration& c, int max_degree,
                                 const SemigroupLimits& limits = {});

/// Writes alpha (a degree-n monoid element) as a sum of n columns by
/// backtracking over the slice table; throws NotDecomposableError when no
/// decomposition exists.
std::vector<std::vector<Int>> decompose(const Configuration& c, const std::vector<Int>& alpha,
                                        int n, std::size_t point_budget = 5000000);

}  // namespace censym
