#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "censym/configs.hpp"
#include "censym/graphs.hpp"
#include "censym/matrix.hpp"

namespace censym {

/// Exponent vector of a monomial; entries are overflow-checked machine
/// integers, one per variable.
using Exponents = std::vector<std::int32_t>;

std::int64_t total_degree(const Exponents& e);
bool exponents_divide(const Exponents& divisor, const Exponents& m);

struct Monomial {
    Exponents exponents;
    bool operator==(const Monomial&) const = default;
};

enum class OrderKind { GradedRevLex, GradedLex, RevLexWithOrdering };

/// Monomial order: graded, ties broken (rev)lexicographically along an
/// explicit variable permutation (stored smallest to largest for revlex).
class TermOrder {
public:
    TermOrder(OrderKind kind, std::size_t nvars);
    TermOrder(OrderKind kind, std::vector<std::size_t> smallest_to_largest);

    /// -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Exponents& a, const Exponents& b) const;
    bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }

    OrderKind kind() const { return kind_; }
    std::size_t vars() const { return smallest_to_largest_.size(); }
    const std::vector<std::size_t>& variable_order() const { return smallest_to_largest_; }

    bool operator==(const TermOrder&) const = default;

private:
    OrderKind kind_;
    std::vector<std::size_t> smallest_to_largest_;
};

/// The order used throughout for centrally symmetric configurations: graded
/// revlex whose smallest variable is the center column, remaining variables
/// Plus-then-Minus block descending by column index.
TermOrder center_smallest_revlex(std::size_t csc_vars);

/// Pure-difference binomial x^lead - x^trail, oriented lead > trail in the
/// ambient order. Reduced bases keep gcd(lead, trail) = 1.
struct Binomial {
    Exponents lead;
    Exponents trail;
    bool operator==(const Binomial&) const = default;
};

struct GroebnerBasis {
    std::vector<Binomial> elements;
    TermOrder order;
    bool reduced = false;
};

struct GbLimits {
    std::size_t spair_budget = 2000000;
    /// Re-check the finished basis (S-pairs reduce to zero, reducedness)
    /// through the independent verifier; used by the test suites.
    bool self_check = false;
};

/// Thrown when the S-pair budget is exhausted; carries the partial basis.
struct GbBudgetError : ResourceLimitError {
    GbBudgetError(std::vector<Binomial> partial_basis, std::size_t pairs)
        : ResourceLimitError("S-pair budget exhausted after " + std::to_string(pairs) + " pairs"),
          partial(std::move(partial_basis)),
          pairs_processed(pairs) {}
    std::vector<Binomial> partial;
    std::size_t pairs_processed;
};

/// Canonical basis of the integer kernel {u : A u = 0}, computed via the HNF
/// of the transpose and re-normalized so equal lattices yield equal output.
std::vector<std::vector<Int>> kernel_lattice(const IntMatrix& a);

/// A strictly positive integer grading vector w in the row space of a (so
/// the lattice ideal is w-homogeneous). All-ones for configurations; found
/// by exact Fourier-Motzkin feasibility otherwise. Throws
/// NoPositiveGradingError when none exists.
std::vector<Int> positive_grading(const IntMatrix& a);

/// Reduced Groebner basis of the toric ideal I_A: kernel-basis binomials,
/// successive saturation (I : x_i^inf) through revlex orders with x_i
/// smallest, then Buchberger under the requested order.
GroebnerBasis toric_ideal_gb(const IntMatrix& a, const TermOrder& order, const GbLimits& limits = {});

/// Minimal monomial generators of the initial ideal (the leads).
std::vector<Monomial> initial_ideal(const GroebnerBasis& gb);

bool is_squarefree(const std::vector<Monomial>& monomials);

/// Normal form of a monomial under rewriting by the basis; well defined when
/// the basis is a Groebner basis.
Exponents normal_form(Exponents m, const GroebnerBasis& gb);

/// Membership x^u - x^v in the ideal of a reduced basis: equal normal forms.
bool ideal_contains(const GroebnerBasis& gb, const Binomial& b);

/// Mutual reduction to zero in both directions.
bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b);

/// Independent checker: soundness (kernel membership), Buchberger property
/// (all S-pairs reduce to zero), reducedness and canonical sorting, and
/// degree-sliced fiber completeness up to the candidate's max degree + 1.
bool verify_reduced_gb(const GroebnerBasis& candidate, const IntMatrix& a,
                       std::size_t fiber_budget = 2000000);

/// The displayed quadratic family binomials of the chordal-bipartite
/// construction, raw and in family order (may be redundant on dense graphs).
std::vector<Binomial> theorem42_family_binomials(const Graph& g, const Bipartition& parts);

/// The reduced Groebner basis obtained from the family binomials under the
/// z < y11 < x11 < ... revlex order, expressed over the A±(mu) variables.
GroebnerBasis theorem42_basis(const Graph& g, const Bipartition& parts);

/// The z < y11 < x11 < ... order on the 2n+1 A±(mu) variables of g.
TermOrder theorem42_order(const Graph& g, const Bipartition& parts);

/// Degrees of a minimal homogeneous generating set of I_A up to max_degree,
/// computed from graded fiber partitions. Requires a configuration.
std::map<int, std::size_t> minimal_generator_degrees(const IntMatrix& a, int max_degree,
                                                     std::size_t monomial_budget = 1000000);

/// One-line text form, e.g. "x1^2*x3 - x2*x4".
std::string format_binomial(const Binomial& b, const std::vector<std::string>& var_names);
std::string format_monomial(const Exponents& e, const std::vector<std::string>& var_names);

std::vector<std::string> plain_var_names(std::size_t n);
/// z, x1..xn, y1..yn naming for A± column order.
std::vector<std::string> csc_var_names(std::size_t base_cols);
/// z, x_{i,k}, y_{i,k} naming for bipartite graph A±(mu) columns.
std::vector<std::string> graph_var_names(const Graph& g, const Bipartition& parts);

}  // namespace censym
