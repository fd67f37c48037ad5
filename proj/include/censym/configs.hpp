#pragma once

#include <optional>
#include <vector>

#include "censym/graph.hpp"
#include "censym/matrix.hpp"
#include "censym/numeric.hpp"

namespace censym {

/// A matrix together with a rational functional c satisfying <c, a_i> = 1 on
/// every column — the grading certificate placing all columns on a common
/// affine hyperplane off the origin.
struct Configuration {
    IntMatrix matrix;
    std::vector<Rat> certificate;
};

/// Exact rational solve for a certificate; std::nullopt when the columns lie
/// on no such hyperplane. Free coordinates of an underdetermined solution are
/// pinned to 0, so the result is deterministic.
std::optional<std::vector<Rat>> is_configuration(const IntMatrix& a);

/// Wraps is_configuration, throwing PreconditionError on failure.
Configuration make_configuration(const IntMatrix& a);

enum class ColumnRole { Center, Plus, Minus };

struct ColumnTag {
    ColumnRole role;
    std::size_t source;  ///< column of the base matrix for Plus/Minus; 0 for Center
};

/// The centrally symmetric configuration of a (d x n) matrix A: the
/// (d+1) x (2n+1) matrix whose columns are [0;1], the [a_i;1] block, then the
/// [-a_i;1] block, in that fixed order.
struct CscMatrix {
    IntMatrix base;
    IntMatrix matrix;
    std::vector<ColumnTag> column_roles;

    /// Always a configuration, with certificate e_{d+1}.
    Configuration as_configuration() const;
};

CscMatrix central_symmetrize(const IntMatrix& a);

/// rho(e) = e_i + e_j per edge, columns in edge order.
IntMatrix graph_config_rho(const Graph& g);
/// mu(e) = e_i - e_j with i < j, columns in edge order.
IntMatrix graph_config_mu(const Graph& g);

}  // namespace censym
