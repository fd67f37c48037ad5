#include "censym/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "censym/intlin.hpp"

namespace censym {

namespace {

IntMatrix difference_matrix(const std::vector<std::vector<Int>>& points) {
    const std::size_t amb = points.front().size();
    const std::size_t k = points.size() - 1;
    IntMatrix d(amb, std::max<std::size_t>(k, 1));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < amb; ++i) d.at(i, j) = points[j + 1][i] - points[0][i];
    return d;
}

}  // namespace

std::optional<std::vector<Int>> AffineMap::try_apply(const std::vector<Int>& x) const {
    std::vector<Rat> xr(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xr[i] = Rat(x[i]);
    auto yr = try_apply_rational(xr);
    if (!yr) return std::nullopt;
    std::vector<Int> y(yr->size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (boost::multiprecision::denominator((*yr)[i]) != 1) return std::nullopt;
        y[i] = Int(boost::multiprecision::numerator((*yr)[i]));
    }
    return y;
}

std::vector<Int> AffineMap::apply(const std::vector<Int>& x) const {
    auto y = try_apply(x);
    if (!y) throw PreconditionError("point is not on the span lattice");
    return *y;
}

std::optional<std::vector<Rat>> AffineMap::try_apply_rational(const std::vector<Rat>& x) const {
    const std::size_t amb = ambient_dim(), d = dim();
    std::vector<Rat> shifted(amb);
    for (std::size_t i = 0; i < amb; ++i) shifted[i] = x[i] - Rat(base[i]);
    std::vector<Rat> y(d, Rat(0));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < amb; ++c)
            if (left_inverse[r][c] != 0) y[r] += left_inverse[r][c] * shifted[c];
    // residual check: basis * y must reproduce the shifted point exactly
    for (std::size_t i = 0; i < amb; ++i) {
        Rat acc = 0;
        for (std::size_t r = 0; r < d; ++r)
            if (basis.at(i, r) != 0) acc += Rat(basis.at(i, r)) * y[r];
        if (acc != shifted[i]) return std::nullopt;
    }
    return y;
}

std::vector<Int> AffineMap::unapply(const std::vector<Int>& y) const {
    std::vector<Int> x = base;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t r = 0; r < y.size(); ++r)
            if (basis.at(i, r) != 0) x[i] += basis.at(i, r) * y[r];
    return x;
}

std::size_t affine_dim(const std::vector<std::vector<Int>>& points) {
    if (points.empty()) throw PreconditionError("affine_dim of an empty point set");
    if (points.size() == 1) return 0;
    return integer_rank(difference_matrix(points));
}

namespace {

std::vector<std::vector<Rat>> left_inverse_of(const IntMatrix& basis) {
    // Solve M * basis = I exactly: Gaussian elimination on basis^T | I.
    const std::size_t amb = basis.rows(), d = basis.cols();
    std::vector<std::vector<Rat>> aug(d, std::vector<Rat>(amb + d, Rat(0)));
    // rows of basis^T are the basis columns
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < amb; ++c) aug[r][c] = Rat(basis.at(c, r));
    }
    // We need x (amb x d) with basis^T-compatible... instead solve via normal
    // equations-free approach: pick d independent rows of basis and invert.
    // Find a row subset of basis of rank d.
    std::vector<std::size_t> rows_used;
    {
        std::vector<std::vector<Rat>> work;
        for (std::size_t i = 0; i < amb && rows_used.size() < d; ++i) {
            std::vector<Rat> cand(d);
            for (std::size_t r = 0; r < d; ++r) cand[r] = Rat(basis.at(i, r));
            // reduce against picked rows
            std::vector<Rat> red = cand;
            for (std::size_t w = 0; w < work.size(); ++w) {
                // find pivot of work[w]
                std::size_t pc = 0;
                while (pc < d && work[w][pc] == 0) ++pc;
                if (pc == d) continue;
                if (red[pc] != 0) {
                    Rat f = red[pc] / work[w][pc];
                    for (std::size_t t = 0; t < d; ++t) red[t] -= f * work[w][t];
                }
            }
            bool nonzero = false;
            for (const auto& v : red)
                if (v != 0) nonzero = true;
            if (nonzero) {
                work.push_back(red);
                rows_used.push_back(i);
            }
        }
        if (rows_used.size() < d) throw PreconditionError("internal: basis not full column rank");
    }
    // invert the d x d submatrix S = basis[rows_used][:], exact rational
    std::vector<std::vector<Rat>> inv(d, std::vector<Rat>(d, Rat(0)));
    {
        std::vector<std::vector<Rat>> m(d, std::vector<Rat>(2 * d, Rat(0)));
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) m[r][c] = Rat(basis.at(rows_used[r], c));
            m[r][d + r] = 1;
        }
        for (std::size_t col = 0; col < d; ++col) {
            std::size_t p = col;
            while (p < d && m[p][col] == 0) ++p;
            if (p == d) throw PreconditionError("internal: singular basis submatrix");
            std::swap(m[p], m[col]);
            Rat piv = m[col][col];
            for (std::size_t t = col; t < 2 * d; ++t) m[col][t] /= piv;
            for (std::size_t r = 0; r < d; ++r) {
                if (r == col || m[r][col] == 0) continue;
                Rat f = m[r][col];
                for (std::size_t t = col; t < 2 * d; ++t) m[r][t] -= f * m[col][t];
            }
        }
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) inv[r][c] = m[r][d + c];
    }
    // left inverse = inv placed on rows_used, zero elsewhere
    std::vector<std::vector<Rat>> li(d, std::vector<Rat>(amb, Rat(0)));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k) li[r][rows_used[k]] = inv[r][k];
    return li;
}

}  // namespace

AffineMap standard_form_map(const std::vector<std::vector<Int>>& points) {
    if (points.empty()) throw PreconditionError("standard form of an empty point set");
    const std::size_t amb = points.front().size();
    const std::size_t d = affine_dim(points);

    if (d == amb) {
        AffineMap m{std::vector<Int>(amb, Int(0)), IntMatrix::identity(amb), {}};
        m.left_inverse = left_inverse_of(m.basis);
        return m;
    }
    if (d + 1 == amb) {
        bool height_one = true;
        for (const auto& p : points)
            if (p.back() != 1) {
                height_one = false;
                break;
            }
        if (height_one) {
            // the displayed psi: drop the homogenizing coordinate
            std::vector<Int> base(amb, Int(0));
            base.back() = 1;
            IntMatrix basis(amb, d);
            for (std::size_t i = 0; i < d; ++i) basis.at(i, i) = 1;
            AffineMap m{std::move(base), std::move(basis), {}};
            m.left_inverse = left_inverse_of(m.basis);
            return m;
        }
    }
    if (d == 0) {
        // single point: empty-dimension map is awkward; use a 1-dim basis
        // that nothing maps onto except the base point itself.
        AffineMap m{points.front(), IntMatrix(amb, 1), {}};
        m.basis.at(0, 0) = 1;  // arbitrary; dim recorded separately by callers
        m.left_inverse = left_inverse_of(m.basis);
        return m;
    }

    // general case: saturated direction lattice via a double kernel
    IntMatrix diff = difference_matrix(points);
    auto left_kernel = kernel_lattice(diff.transposed());
    IntMatrix lattice_basis(amb, d);
    if (left_kernel.empty()) {
        // differences span Q^amb; d == amb handled above, so unreachable
        throw PreconditionError("internal: inconsistent affine dimension");
    }
    IntMatrix w(left_kernel.size(), amb);
    for (std::size_t r = 0; r < left_kernel.size(); ++r)
        for (std::size_t c = 0; c < amb; ++c) w.at(r, c) = left_kernel[r][c];
    auto sat = kernel_lattice(w);
    if (sat.size() != d) throw PreconditionError("internal: direction lattice rank mismatch");
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < amb; ++i) lattice_basis.at(i, j) = sat[j][i];
    AffineMap m{points.front(), std::move(lattice_basis), {}};
    m.left_inverse = left_inverse_of(m.basis);
    return m;
}

namespace {

// Primitive integer normal of the hyperplane through the given affinely
// independent std-coordinate points; nullopt if they do not span one.
std::optional<std::vector<Int>> hyperplane_normal(const std::vector<std::vector<Int>>& pts,
                                                  const std::vector<std::size_t>& subset,
                                                  std::size_t dim) {
    // nullspace of the (k-1) x dim difference matrix, k = dim points
    const std::size_t k = subset.size();
    std::vector<std::vector<Rat>> m(k - 1, std::vector<Rat>(dim));
    for (std::size_t r = 0; r + 1 < k; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            m[r][c] = Rat(pts[subset[r + 1]][c] - pts[subset[0]][c]);
    // row reduce
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < dim && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[row][col];
            for (std::size_t c2 = col; c2 < dim; ++c2) m[r][c2] -= f * m[row][c2];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    if (row != dim - 1) return std::nullopt;  // not affinely independent
    // free column -> nullspace vector
    std::vector<char> is_pivot(dim, 0);
    for (auto c : pivot_cols) is_pivot[c] = 1;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rat> normal(dim, Rat(0));
    normal[free_col] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
        normal[pivot_cols[r]] = -m[r][free_col] / m[r][pivot_cols[r]];
    // clear denominators, make primitive
    Int scale = 1;
    for (const auto& v : normal) scale = lcm_int(scale, Int(boost::multiprecision::denominator(v)));
    std::vector<Int> out(dim);
    Int g = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        out[i] = Int(boost::multiprecision::numerator(normal[i])) *
                 (scale / Int(boost::multiprecision::denominator(normal[i])));
        g = gcd_int(g, out[i]);
    }
    for (auto& v : out) v /= g;
    return out;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

}  // namespace

std::vector<FacetIneq> facet_enumeration(const std::vector<std::vector<Int>>& std_points,
                                         std::size_t dim, const PolytopeLimits& limits) {
    if (dim == 0) return {};
    if (dim > limits.max_dim) throw SizeLimitError("polytope dimension exceeds facet budget");
    if (std_points.size() > limits.max_points)
        throw SizeLimitError("point count exceeds facet budget");

    std::map<std::pair<std::vector<Int>, Int>, std::vector<std::size_t>> found;
    std::vector<std::size_t> subset(dim);
    const std::size_t n = std_points.size();

    auto consider = [&](const std::vector<std::size_t>& s) {
        auto normal = hyperplane_normal(std_points, s, dim);
        if (!normal) return;
        Int rhs = dot(*normal, std_points[s[0]]);
        bool some_below = false, some_above = false;
        for (const auto& p : std_points) {
            Int v = dot(*normal, p);
            if (v < rhs) some_below = true;
            if (v > rhs) some_above = true;
            if (some_below && some_above) return;  // not supporting
        }
        std::vector<Int> c = *normal;
        Int b = rhs;
        if (some_above) {  // flip so the polytope satisfies <c, x> <= b
            for (auto& v : c) v = -v;
            b = -b;
        }
        auto key = std::make_pair(c, b);
        if (found.count(key)) return;
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < n; ++i)
            if (dot(c, std_points[i]) == b) tight.push_back(i);
        found.emplace(std::move(key), std::move(tight));
    };

    // iterate dim-subsets
    if (n >= dim) {
        std::vector<std::size_t> idx(dim);
        for (std::size_t i = 0; i < dim; ++i) idx[i] = i;
        for (;;) {
            consider(idx);
            std::size_t i = dim;
            bool done = false;
            while (i > 0) {
                --i;
                if (idx[i] != i + n - dim) break;
                if (i == 0) done = true;
            }
            if (done) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < dim; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::vector<FacetIneq> facets;
    facets.reserve(found.size());
    for (auto& [key, tight] : found)
        facets.push_back(FacetIneq{key.first, key.second, std::move(tight)});
    return facets;
}

PolytopeRep build_polytope(std::vector<std::vector<Int>> points, const PolytopeLimits& limits) {
    PolytopeRep rep;
    rep.points = std::move(points);
    rep.map = standard_form_map(rep.points);
    rep.dim = affine_dim(rep.points);
    rep.std_points.reserve(rep.points.size());
    for (const auto& p : rep.points) {
        if (rep.dim == 0)
            rep.std_points.push_back({});
        else {
            auto y = rep.map.apply(p);
            y.resize(rep.dim);  // defensive; apply yields dim coordinates already
            rep.std_points.push_back(std::move(y));
        }
    }
    rep.facets = facet_enumeration(rep.std_points, rep.dim, limits);
    return rep;
}

std::vector<std::size_t> PolytopeRep::vertex_indices() const {
    std::vector<std::size_t> verts;
    for (std::size_t i = 0; i < std_points.size(); ++i) {
        // gather tight facet normals and test their rank
        std::vector<std::vector<Rat>> rows;
        for (const auto& f : facets) {
            if (dot(f.normal, std_points[i]) != f.rhs) continue;
            std::vector<Rat> r(dim);
            for (std::size_t c = 0; c < dim; ++c) r[c] = Rat(f.normal[c]);
            rows.push_back(std::move(r));
        }
        // rank by elimination
        std::size_t rank = 0;
        for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
            std::size_t p = rank;
            while (p < rows.size() && rows[p][col] == 0) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[p], rows[rank]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col] == 0) continue;
                Rat f = rows[r][col] / rows[rank][col];
                for (std::size_t c2 = col; c2 < dim; ++c2) rows[r][c2] -= f * rows[rank][c2];
            }
            ++rank;
        }
        if (rank == dim) verts.push_back(i);
    }
    return verts;
}

bool interior_contains(const PolytopeRep& p, const std::vector<Rat>& x_ambient) {
    auto y = p.map.try_apply_rational(x_ambient);
    if (!y) return false;  // off the affine span
    for (const auto& f : p.facets) {
        Rat v = 0;
        for (std::size_t i = 0; i < p.dim; ++i)
            if (f.normal[i] != 0) v += Rat(f.normal[i]) * (*y)[i];
        if (v >= Rat(f.rhs)) return false;
    }
    return true;
}

FanoVerdict is_gorenstein_fano(const PolytopeRep& p) {
    for (const auto& f : p.facets)
        if (f.rhs <= 0) return {false, false};
    // primitive normals: the dual vertex c/rhs is integral iff rhs divides
    // every entry, i.e. rhs = 1
    for (const auto& f : p.facets)
        if (f.rhs != 1) return {false, true};
    return {true, true};
}

std::vector<std::vector<Rat>> dual_vertices(const PolytopeRep& p) {
    std::vector<std::vector<Rat>> out;
    out.reserve(p.facets.size());
    for (const auto& f : p.facets) {
        std::vector<Rat> v(p.dim);
        for (std::size_t i = 0; i < p.dim; ++i) v[i] = Rat(f.normal[i]) / Rat(f.rhs);
        out.push_back(std::move(v));
    }
    return out;
}

Int Triangulation::total_volume() const {
    Int s = 0;
    for (const auto& v : volumes) s += v;
    return s;
}

namespace {

struct Puller {
    const std::vector<std::vector<Int>>& points;  // ambient, deduplicated
    const std::vector<std::size_t>& rank;         // pulling rank per point (smaller pulled first)
    const PolytopeLimits& limits;

    std::vector<std::vector<std::size_t>> triangulate(std::vector<std::size_t> face) const {
        std::vector<std::vector<Int>> sub;
        sub.reserve(face.size());
        for (auto i : face) sub.push_back(points[i]);
        std::size_t d = affine_dim(sub);
        if (face.size() == d + 1) return {face};  // affinely independent: a simplex

        std::size_t pull_pos = 0;
        for (std::size_t t = 1; t < face.size(); ++t)
            if (rank[face[t]] < rank[face[pull_pos]]) pull_pos = t;
        std::size_t pulled = face[pull_pos];

        AffineMap m = standard_form_map(sub);
        std::vector<std::vector<Int>> std_sub;
        std_sub.reserve(sub.size());
        for (const auto& p : sub) std_sub.push_back(m.apply(p));
        auto facets = facet_enumeration(std_sub, d, limits);

        std::vector<std::vector<std::size_t>> out;
        for (const auto& f : facets) {
            bool contains_pulled = false;
            std::vector<std::size_t> facet_face;
            for (auto local : f.tight) {
                if (face[local] == pulled) contains_pulled = true;
                facet_face.push_back(face[local]);
            }
            if (contains_pulled) continue;
            for (auto& simplex : triangulate(std::move(facet_face))) {
                simplex.push_back(pulled);
                out.push_back(std::move(simplex));
            }
        }
        return out;
    }
};

}  // namespace

Triangulation pulling_triangulation(const CscMatrix& csc, const TermOrder& order,
                                    const PolytopeLimits& limits) {
    const std::size_t d = csc.base.rows();
    if (integer_rank(csc.base) != d)
        throw PreconditionError("pulling triangulation needs rank(A) = rows(A)");
    if (order.kind() == OrderKind::GradedLex || order.variable_order().empty() ||
        order.variable_order().front() != 0)
        throw PreconditionError("pulling order must be revlex with the center variable smallest");

    // deduplicate columns, keeping the smallest order rank per point
    const std::size_t nv = csc.matrix.cols();
    std::vector<std::size_t> rank_of_var(nv);
    for (std::size_t r = 0; r < nv; ++r) rank_of_var[order.variable_order()[r]] = r;
    std::map<std::vector<Int>, std::size_t> best_rank;
    for (std::size_t j = 0; j < nv; ++j) {
        auto col = csc.matrix.column(j);
        auto it = best_rank.find(col);
        if (it == best_rank.end())
            best_rank.emplace(std::move(col), rank_of_var[j]);
        else
            it->second = std::min(it->second, rank_of_var[j]);
    }
    Triangulation tri;
    std::vector<std::size_t> rank;
    for (const auto& [pt, rk] : best_rank) {
        tri.points.push_back(pt);
        rank.push_back(rk);
    }

    std::vector<std::size_t> all(tri.points.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    Puller puller{tri.points, rank, limits};
    tri.simplices = puller.triangulate(std::move(all));
    std::sort(tri.simplices.begin(), tri.simplices.end());

    Int index_a = lattice_index(csc.base).value;
    for (const auto& s : tri.simplices) {
        IntMatrix vm(d + 1, d + 1);
        for (std::size_t j = 0; j < s.size(); ++j)
            for (std::size_t i = 0; i <= d; ++i) vm.at(i, j) = tri.points[s[j]][i];
        Int det = abs_int(bareiss_determinant(vm));
        if (det == 0 || det % index_a != 0)
            throw PreconditionError("internal: simplex volume not a multiple of the lattice index");
        tri.volumes.push_back(det / index_a);
    }
    return tri;
}

std::vector<std::vector<Int>> dilate_lattice_points(const PolytopeRep& p, int n,
                                                    std::size_t point_budget) {
    if (n < 0) throw PreconditionError("dilation factor must be >= 0");
    std::vector<std::vector<Int>> out;
    if (p.dim == 0) {
        std::vector<Int> x = p.points.front();
        for (auto& v : x) v *= n;
        out.push_back(std::move(x));
        return out;
    }
    // coordinate bounds from the scaled vertices
    std::vector<Int> lo(p.dim), hi(p.dim);
    for (std::size_t c = 0; c < p.dim; ++c) {
        lo[c] = hi[c] = p.std_points[0][c];
        for (const auto& q : p.std_points) {
            lo[c] = std::min(lo[c], q[c]);
            hi[c] = std::max(hi[c], q[c]);
        }
        lo[c] *= n;
        hi[c] *= n;
        if (lo[c] > hi[c]) std::swap(lo[c], hi[c]);
    }
    std::vector<Int> y(p.dim);
    std::size_t emitted = 0;
    auto scan = [&](auto&& self, std::size_t depth) -> void {
        if (depth + 1 == p.dim) {
            // last coordinate: exact interval from the facets
            Int l = lo[depth], h = hi[depth];
            for (const auto& f : p.facets) {
                Int rest = Int(f.rhs) * n;
                for (std::size_t c = 0; c < depth; ++c) rest -= f.normal[c] * y[c];
                const Int& a = f.normal[depth];
                if (a == 0) {
                    if (rest < 0) return;  // infeasible prefix
                } else if (a > 0) {
                    h = std::min(h, floor_div(rest, a));
                } else {
                    l = std::max(l, -floor_div(rest, -a));
                }
            }
            for (Int v = l; v <= h; ++v) {
                y[depth] = v;
                if (++emitted > point_budget)
                    throw ResourceLimitError("dilate enumeration exceeds the point budget");
                std::vector<Int> scaled_base_point(p.map.ambient_dim());
                // x = n*base + basis*y
                for (std::size_t i = 0; i < p.map.ambient_dim(); ++i) {
                    Int acc = p.map.base[i] * n;
                    for (std::size_t r = 0; r < p.dim; ++r)
                        if (p.map.basis.at(i, r) != 0) acc += p.map.basis.at(i, r) * y[r];
                    scaled_base_point[i] = acc;
                }
                out.push_back(std::move(scaled_base_point));
            }
            return;
        }
        for (Int v = lo[depth]; v <= hi[depth]; ++v) {
            y[depth] = v;
            self(self, depth + 1);
        }
    };
    scan(scan, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace censym
