#include "censym/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <type_traits>

#include "censym/intlin.hpp"

namespace censym {

namespace {

bool colex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

template <typename T>
int compare_tuple(const T* a, const T* b, std::size_t dims) {
    for (std::size_t i = 0; i < dims; ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

// merge-dedup of acc with (slice + column), all flattened sorted tuples
template <typename T>
std::vector<T> merge_with_shift(const std::vector<T>& acc, const std::vector<T>& slice,
                                const std::vector<T>& column, std::size_t dims) {
    std::vector<T> out;
    out.reserve(acc.size() + slice.size());
    std::size_t ia = 0, is = 0;
    const std::size_t na = acc.size() / dims, ns = slice.size() / dims;
    std::vector<T> shifted(dims);
    auto load_shifted = [&](std::size_t idx) {
        for (std::size_t k = 0; k < dims; ++k) shifted[k] = slice[idx * dims + k] + column[k];
    };
    if (ns > 0) load_shifted(0);
    auto push = [&](const T* t) {
        std::size_t n = out.size();
        if (n >= dims && compare_tuple(out.data() + n - dims, t, dims) == 0) return;
        out.insert(out.end(), t, t + dims);
    };
    while (ia < na && is < ns) {
        int c = compare_tuple(acc.data() + ia * dims, shifted.data(), dims);
        if (c <= 0) {
            push(acc.data() + ia * dims);
            ++ia;
            if (c == 0) {
                ++is;
                if (is < ns) load_shifted(is);
            }
        } else {
            push(shifted.data());
            ++is;
            if (is < ns) load_shifted(is);
        }
    }
    while (ia < na) {
        push(acc.data() + ia * dims);
        ++ia;
    }
    while (is < ns) {
        push(shifted.data());
        ++is;
        if (is < ns) load_shifted(is);
    }
    return out;
}

template <typename T>
std::vector<std::vector<T>> distinct_columns(const IntMatrix& m) {
    std::set<std::vector<T>> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<T> c(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if constexpr (std::is_same_v<T, std::int64_t>)
                c[i] = static_cast<std::int64_t>(m.at(i, j));
            else
                c[i] = m.at(i, j);
        }
        cols.insert(std::move(c));
    }
    return {cols.begin(), cols.end()};
}

}  // namespace

DegreeSlices::DegreeSlices(Configuration config, int max_degree, std::size_t point_budget)
    : config_(std::move(config)),
      max_degree_(-1),
      point_budget_(point_budget),
      dims_(config_.matrix.rows()) {
    if (max_degree < 0) throw PreconditionError("max_degree must be >= 0");
    Int maxabs = 0;
    for (std::size_t i = 0; i < config_.matrix.rows(); ++i)
        for (std::size_t j = 0; j < config_.matrix.cols(); ++j)
            maxabs = std::max(maxabs, abs_int(config_.matrix.at(i, j)));
    // entries of a degree-t point are sums of t column entries
    fits_fast_ = maxabs * (max_degree + 1) < Int(std::int64_t(1) << 60);
    if (fits_fast_)
        fast_.push_back(std::vector<std::int64_t>(dims_, 0));
    else
        wide_.push_back(std::vector<Int>(dims_, Int(0)));
    max_degree_ = 0;
    extend_to(max_degree);
}

void DegreeSlices::extend_to(int max_degree) {
    Int maxabs = 0;
    for (std::size_t i = 0; i < config_.matrix.rows(); ++i)
        for (std::size_t j = 0; j < config_.matrix.cols(); ++j)
            maxabs = std::max(maxabs, abs_int(config_.matrix.at(i, j)));
    if (fits_fast_ && maxabs * (max_degree + 1) >= Int(std::int64_t(1) << 60))
        throw ResourceLimitError("slice extension would overflow the fast path");
    while (max_degree_ < max_degree) expand_one();
}

void DegreeSlices::expand_one() {
    if (fits_fast_) {
        auto cols = distinct_columns<std::int64_t>(config_.matrix);
        const auto& cur = fast_.back();
        std::vector<std::int64_t> acc;
        for (const auto& c : cols) {
            acc = merge_with_shift(acc, cur, c, dims_);
            if (acc.size() / dims_ > point_budget_)
                throw ResourceLimitError("degree slice exceeds the point budget");
        }
        fast_.push_back(std::move(acc));
    } else {
        auto cols = distinct_columns<Int>(config_.matrix);
        const auto& cur = wide_.back();
        std::vector<Int> acc;
        for (const auto& c : cols) {
            acc = merge_with_shift(acc, cur, c, dims_);
            if (acc.size() / dims_ > point_budget_)
                throw ResourceLimitError("degree slice exceeds the point budget");
        }
        wide_.push_back(std::move(acc));
    }
    ++max_degree_;
}

std::size_t DegreeSlices::size(int degree) const {
    if (degree < 0 || degree > max_degree_) throw PreconditionError("degree out of computed range");
    return (fits_fast_ ? fast_[degree].size() : wide_[degree].size()) / dims_;
}

bool DegreeSlices::contains(int degree, const std::vector<Int>& v) const {
    if (degree < 0 || degree > max_degree_) throw PreconditionError("degree out of computed range");
    if (v.size() != dims_) throw PreconditionError("point has wrong dimension");
    const std::size_t n = size(degree);
    if (fits_fast_) {
        std::vector<std::int64_t> key(dims_);
        for (std::size_t i = 0; i < dims_; ++i) {
            if (v[i] < std::numeric_limits<std::int64_t>::min() ||
                v[i] > std::numeric_limits<std::int64_t>::max())
                return false;
            key[i] = static_cast<std::int64_t>(v[i]);
        }
        const auto& data = fast_[degree];
        std::size_t lo = 0, hi = n;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            int c = compare_tuple(data.data() + mid * dims_, key.data(), dims_);
            if (c == 0) return true;
            if (c < 0)
                lo = mid + 1;
            else
                hi = mid;
        }
        return false;
    }
    const auto& data = wide_[degree];
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        int c = compare_tuple(data.data() + mid * dims_, v.data(), dims_);
        if (c == 0) return true;
        if (c < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return false;
}

std::vector<Int> DegreeSlices::point(int degree, std::size_t index) const {
    if (degree < 0 || degree > max_degree_) throw PreconditionError("degree out of computed range");
    if (index >= size(degree)) throw PreconditionError("point index out of range");
    std::vector<Int> v(dims_);
    if (fits_fast_)
        for (std::size_t i = 0; i < dims_; ++i) v[i] = Int(fast_[degree][index * dims_ + i]);
    else
        for (std::size_t i = 0; i < dims_; ++i) v[i] = wide_[degree][index * dims_ + i];
    return v;
}

DegreeSlices degree_slices(const Configuration& c, int max_degree, std::size_t point_budget) {
    return DegreeSlices(c, max_degree, point_budget);
}

namespace {

Int binomial_int(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Int c = 1;
    for (std::size_t i = 0; i < k; ++i) c = c * Int(n - i) / Int(i + 1);
    return c;
}

}  // namespace

HilbertData hilbert_h_vector(const Configuration& c, const HilbertLimits& limits) {
    HilbertData data;
    data.krull_dim = integer_rank(c.matrix);
    const std::size_t k = data.krull_dim;

    DegreeSlices slices(c, 0, limits.point_budget);
    data.values.push_back(Int(1));
    std::vector<Int> h{Int(1)};
    int consecutive_zero = 0;
    int t = 0;
    while (consecutive_zero < 3 && t < limits.degree_cap) {
        ++t;
        try {
            slices.extend_to(t);
        } catch (const ResourceLimitError&) {
            data.stabilized = false;
            // partial h entries up to the last fully computed degree
            while (!h.empty() && h.back() == 0) h.pop_back();
            data.h_vector = std::move(h);
            return data;
        }
        data.values.push_back(Int(slices.size(t)));
        Int ht = 0;
        for (std::size_t i = 0; i <= std::min<std::size_t>(k, static_cast<std::size_t>(t)); ++i) {
            Int term = binomial_int(k, i) * data.values[static_cast<std::size_t>(t) - i];
            if (i % 2 == 0)
                ht += term;
            else
                ht -= term;
        }
        h.push_back(ht);
        consecutive_zero = (ht == 0) ? consecutive_zero + 1 : 0;
    }
    data.stabilized = (consecutive_zero >= 3);
    while (!h.empty() && h.back() == 0) h.pop_back();
    data.h_vector = std::move(h);
    return data;
}

NormalityVerdict normality_check(const Configuration& c, int max_degree,
                                 const SemigroupLimits& limits) {
    if (max_degree < 1) throw PreconditionError("normality bound must be >= 1");
    std::vector<std::vector<Int>> columns;
    for (std::size_t j = 0; j < c.matrix.cols(); ++j) columns.push_back(c.matrix.column(j));
    PolytopeRep poly = build_polytope(std::move(columns), limits.polytope);
    HnfResult lattice = hnf(c.matrix);
    DegreeSlices slices(c, 0, limits.point_budget);

    for (int n = 1; n <= max_degree; ++n) {
        slices.extend_to(n);
        auto points = dilate_lattice_points(poly, n, limits.point_budget);
        bool have_witness = false;
        std::vector<Int> witness;
        for (auto& x : points) {
            if (!in_column_lattice(lattice, x)) continue;
            if (slices.contains(n, x)) continue;
            if (!have_witness || colex_less(x, witness)) {
                witness = std::move(x);
                have_witness = true;
            }
        }
        if (have_witness)
            return NormalityVerdict{false, n, std::move(witness), n};
    }
    return NormalityVerdict{true, max_degree, {}, 0};
}

namespace {

bool decompose_rec(const DegreeSlices& slices, const std::vector<std::vector<Int>>& cols,
                   std::vector<Int> target, int n, std::size_t start,
                   std::vector<std::vector<Int>>& out) {
    if (n == 0) {
        for (const auto& v : target)
            if (v != 0) return false;
        return true;
    }
    for (std::size_t j = start; j < cols.size(); ++j) {
        std::vector<Int> rest(target.size());
        for (std::size_t i = 0; i < target.size(); ++i) rest[i] = target[i] - cols[j][i];
        if (!slices.contains(n - 1, rest)) continue;
        out.push_back(cols[j]);
        if (decompose_rec(slices, cols, std::move(rest), n - 1, j, out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace

std::vector<std::vector<Int>> decompose(const Configuration& c, const std::vector<Int>& alpha,
                                        int n, std::size_t point_budget) {
    if (n < 1) throw PreconditionError("decomposition length must be >= 1");
    DegreeSlices slices(c, n, point_budget);
    if (!slices.contains(n, alpha))
        throw NotDecomposableError("vector is not a sum of n columns");
    std::set<std::vector<Int>> colset;
    for (std::size_t j = 0; j < c.matrix.cols(); ++j) colset.insert(c.matrix.column(j));
    std::vector<std::vector<Int>> cols(colset.begin(), colset.end());
    std::vector<std::vector<Int>> out;
    if (!decompose_rec(slices, cols, alpha, n, 0, out))
        throw NotDecomposableError("backtracking found no decomposition");
    return out;
}

}  // namespace censym
