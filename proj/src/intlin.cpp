#include "censym/intlin.hpp"

#include <algorithm>

namespace censym {

IntMatrix HnfResult::square_block() const {
    if (!has_square_block()) throw RankDeficientError();
    const std::size_t d = h.rows();
    IntMatrix b(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) b.at(i, j) = h.at(i, j);
    return b;
}

HnfResult hnf(const IntMatrix& a) {
    const std::size_t d = a.rows(), n = a.cols();
    HnfResult res{a, IntMatrix::identity(n), 0, {}};
    IntMatrix& h = res.h;
    IntMatrix& u = res.transform;
    std::size_t r = 0;  // next pivot column

    auto swap_cols = [&](std::size_t x, std::size_t y) {
        h.swap_columns(x, y);
        u.swap_columns(x, y);
    };
    auto negate_col = [&](std::size_t c) {
        h.negate_column(c);
        u.negate_column(c);
    };
    auto submul = [&](std::size_t dst, std::size_t src, const Int& q) {
        h.submul_column(dst, src, q);
        u.submul_column(dst, src, q);
    };

    for (std::size_t i = 0; i < d && r < n; ++i) {
        bool any = false;
        for (std::size_t k = r; k < n; ++k)
            if (h.at(i, k) != 0) {
                any = true;
                break;
            }
        if (!any) continue;

        // Euclidean sweep: shrink row i over columns [r, n) until only
        // column r is nonzero.
        for (;;) {
            std::size_t best = n;
            for (std::size_t k = r; k < n; ++k) {
                if (h.at(i, k) == 0) continue;
                if (best == n || abs_int(h.at(i, k)) < abs_int(h.at(i, best))) best = k;
            }
            swap_cols(best, r);
            if (h.at(i, r) < 0) negate_col(r);
            bool residue = false;
            for (std::size_t k = r + 1; k < n; ++k) {
                if (h.at(i, k) == 0) continue;
                Int q = floor_div(h.at(i, k), h.at(i, r));
                submul(k, r, q);
                if (h.at(i, k) != 0) residue = true;
            }
            if (!residue) break;
        }
        // Reduce earlier pivot columns at row i into [0, pivot).
        for (std::size_t j = 0; j < r; ++j) {
            Int q = floor_div(h.at(i, j), h.at(i, r));
            submul(j, r, q);
        }
        res.pivot_rows.push_back(i);
        ++r;
    }
    res.rank = r;
    return res;
}

Int bareiss_determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw PreconditionError("determinant of non-square matrix");
    const std::size_t n = a.rows();
    IntMatrix m = a;
    Int prev = 1;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;  // exact by Bareiss
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sgn > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

namespace {

Int minor_of_columns(const IntMatrix& a, const std::vector<std::size_t>& cols) {
    IntMatrix sub(a.rows(), cols.size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub.at(i, j) = a.at(i, cols[j]);
    return bareiss_determinant(sub);
}

Int binomial_count(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Int c = 1;
    for (std::size_t i = 0; i < k; ++i) c = c * Int(n - i) / Int(i + 1);
    return c;
}

template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (!f(idx)) return;
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Int gcd_maximal_minors(const IntMatrix& a, std::size_t minor_budget) {
    const std::size_t d = a.rows(), n = a.cols();
    if (d > n) return 0;
    if (binomial_count(n, d) > Int(minor_budget)) {
        HnfResult hn = hnf(a);
        if (hn.rank < d) return 0;
        Int det = 1;
        for (std::size_t i = 0; i < d; ++i) det *= hn.h.at(i, i);
        return det;
    }
    Int g = 0;
    for_each_combination(n, d, [&](const std::vector<std::size_t>& cols) {
        g = gcd_int(g, minor_of_columns(a, cols));
        return g != 1;  // gcd can only shrink; 1 is terminal
    });
    return g;
}

LatticeIndex lattice_index(const IntMatrix& a) {
    HnfResult hn = hnf(a);
    if (hn.rank < a.rows()) return LatticeIndex::infinite();
    Int det = 1;
    for (std::size_t i = 0; i < a.rows(); ++i) det *= hn.h.at(i, i);
    return LatticeIndex::of(det);
}

UnimodularVerdict is_unimodular(const IntMatrix& a, std::size_t minor_limit) {
    const std::size_t d = a.rows(), n = a.cols();
    if (d > n || integer_rank(a) < d) throw RankDeficientError();
    if (binomial_count(n, d) > Int(minor_limit))
        throw SizeLimitError("too many maximal minors to enumerate");
    Int delta = 0;
    bool uniform = true;
    for_each_combination(n, d, [&](const std::vector<std::size_t>& cols) {
        Int m = abs_int(minor_of_columns(a, cols));
        if (m == 0) return true;
        if (delta == 0)
            delta = m;
        else if (m != delta) {
            uniform = false;
            return false;
        }
        return true;
    });
    if (!uniform) return {false, Int(0)};
    return {true, delta};
}

std::pair<IntMatrix, IntMatrix> lattice_normalize(const IntMatrix& a) {
    HnfResult hn = hnf(a);
    IntMatrix b = hn.square_block();  // throws when rank deficient
    const std::size_t d = a.rows(), n = a.cols();
    // Forward-substitute b * a_prime = a column by column; entries come out
    // integral because ZB = ZA.
    IntMatrix ap(d, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            Int acc = a.at(i, j);
            for (std::size_t k = 0; k < i; ++k) acc -= b.at(i, k) * ap.at(k, j);
            if (acc % b.at(i, i) != 0)
                throw PreconditionError("internal: B^-1 A not integral");
            ap.at(i, j) = acc / b.at(i, i);
        }
    }
    return {b, ap};
}

bool in_column_lattice(const HnfResult& hn, const std::vector<Int>& x) {
    if (x.size() != hn.h.rows()) throw PreconditionError("lattice membership shape mismatch");
    std::vector<Int> r = x;
    for (std::size_t k = 0; k < hn.rank; ++k) {
        const std::size_t i = hn.pivot_rows[k];
        const Int& p = hn.h.at(i, k);
        if (r[i] % p != 0) return false;
        Int q = r[i] / p;
        if (q != 0)
            for (std::size_t t = 0; t < r.size(); ++t) r[t] -= q * hn.h.at(t, k);
    }
    for (const Int& v : r)
        if (v != 0) return false;
    return true;
}

std::size_t integer_rank(const IntMatrix& a) { return hnf(a).rank; }

}  // namespace censym
