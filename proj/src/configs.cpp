#include "censym/configs.hpp"

namespace censym {

std::optional<std::vector<Rat>> is_configuration(const IntMatrix& a) {
    const std::size_t d = a.rows(), n = a.cols();
    // Augmented system A^T c = 1, solved by exact Gaussian elimination.
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(d + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < d; ++c) m[r][c] = Rat(a.at(c, r));
        m[r][d] = 1;
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < d && row < n; ++col) {
        std::size_t p = row;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[row]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[row][col];
            for (std::size_t c = col; c <= d; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < n; ++r)
        if (m[r][d] != 0) return std::nullopt;  // 0 = nonzero: inconsistent
    std::vector<Rat> cert(d, Rat(0));
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
        cert[pivot_col[k]] = m[k][d] / m[k][pivot_col[k]];
    return cert;
}

Configuration make_configuration(const IntMatrix& a) {
    auto cert = is_configuration(a);
    if (!cert) throw PreconditionError("matrix is not a configuration");
    return Configuration{a, std::move(*cert)};
}

Configuration CscMatrix::as_configuration() const {
    std::vector<Rat> cert(matrix.rows(), Rat(0));
    cert.back() = 1;
    return Configuration{matrix, std::move(cert)};
}

CscMatrix central_symmetrize(const IntMatrix& a) {
    const std::size_t d = a.rows(), n = a.cols();
    IntMatrix m(d + 1, 2 * n + 1);
    std::vector<ColumnTag> roles;
    roles.reserve(2 * n + 1);
    m.at(d, 0) = 1;
    roles.push_back({ColumnRole::Center, 0});
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < d; ++i) m.at(i, 1 + j) = a.at(i, j);
        m.at(d, 1 + j) = 1;
        roles.push_back({ColumnRole::Plus, j});
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < d; ++i) m.at(i, 1 + n + j) = -a.at(i, j);
        m.at(d, 1 + n + j) = 1;
        roles.push_back({ColumnRole::Minus, j});
    }
    return CscMatrix{a, std::move(m), std::move(roles)};
}

IntMatrix graph_config_rho(const Graph& g) {
    const std::size_t d = static_cast<std::size_t>(g.vertex_count());
    if (g.edge_count() == 0) throw PreconditionError("graph has no edges");
    IntMatrix m(d, g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        auto [i, j] = g.edges()[k];
        m.at(static_cast<std::size_t>(i - 1), k) = 1;
        m.at(static_cast<std::size_t>(j - 1), k) = 1;
    }
    return m;
}

IntMatrix graph_config_mu(const Graph& g) {
    const std::size_t d = static_cast<std::size_t>(g.vertex_count());
    if (g.edge_count() == 0) throw PreconditionError("graph has no edges");
    IntMatrix m(d, g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        auto [i, j] = g.edges()[k];  // i < j by Graph normalization
        m.at(static_cast<std::size_t>(i - 1), k) = 1;
        m.at(static_cast<std::size_t>(j - 1), k) = -1;
    }
    return m;
}

}  // namespace censym
