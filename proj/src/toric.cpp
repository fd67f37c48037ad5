#include "censym/toric.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "censym/intlin.hpp"

namespace censym {

std::int64_t total_degree(const Exponents& e) {
    std::int64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

bool exponents_divide(const Exponents& divisor, const Exponents& m) {
    for (std::size_t i = 0; i < divisor.size(); ++i)
        if (divisor[i] > m[i]) return false;
    return true;
}

namespace {

constexpr std::int32_t kExponentCeiling = 1 << 28;

Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
        if (r[i] > kExponentCeiling) throw ResourceLimitError("monomial exponent overflow");
    }
    return r;
}

// r = m - lead + trail, assuming lead | m.
Exponents exp_rewrite(const Exponents& m, const Exponents& lead, const Exponents& trail) {
    Exponents r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        r[i] = m[i] - lead[i] + trail[i];
        if (r[i] > kExponentCeiling) throw ResourceLimitError("monomial exponent overflow");
    }
    return r;
}

}  // namespace

TermOrder::TermOrder(OrderKind kind, std::size_t nvars) : kind_(kind) {
    smallest_to_largest_.resize(nvars);
    // default ranking x1 > x2 > ... > xn
    for (std::size_t i = 0; i < nvars; ++i) smallest_to_largest_[i] = nvars - 1 - i;
}

TermOrder::TermOrder(OrderKind kind, std::vector<std::size_t> smallest_to_largest)
    : kind_(kind), smallest_to_largest_(std::move(smallest_to_largest)) {
    std::vector<char> seen(smallest_to_largest_.size(), 0);
    for (auto v : smallest_to_largest_) {
        if (v >= smallest_to_largest_.size() || seen[v])
            throw PreconditionError("variable order is not a permutation");
        seen[v] = 1;
    }
}

int TermOrder::compare(const Exponents& a, const Exponents& b) const {
    std::int64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    if (kind_ == OrderKind::GradedLex) {
        for (std::size_t r = smallest_to_largest_.size(); r-- > 0;) {
            std::size_t v = smallest_to_largest_[r];
            if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
        }
        return 0;
    }
    // graded revlex: more of the smallest differing variable loses
    for (std::size_t r = 0; r < smallest_to_largest_.size(); ++r) {
        std::size_t v = smallest_to_largest_[r];
        if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    }
    return 0;
}

TermOrder center_smallest_revlex(std::size_t csc_vars) {
    std::vector<std::size_t> s2l;
    s2l.reserve(csc_vars);
    s2l.push_back(0);
    for (std::size_t v = csc_vars - 1; v >= 1; --v) s2l.push_back(v);
    return TermOrder(OrderKind::RevLexWithOrdering, std::move(s2l));
}

// ---------------------------------------------------------------------------
// kernel lattice and gradings

std::vector<std::vector<Int>> kernel_lattice(const IntMatrix& a) {
    HnfResult hn = hnf(a);
    const std::size_t n = a.cols();
    if (hn.rank == n) return {};
    IntMatrix k(n, n - hn.rank);
    for (std::size_t j = hn.rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) k.at(i, j - hn.rank) = hn.transform.at(i, j);
    // canonical form: HNF again so equal lattices print identically
    HnfResult canon = hnf(k);
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = 0; j < canon.rank; ++j) basis.push_back(canon.h.column(j));
    return basis;
}

namespace {

struct FmRow {
    std::vector<Rat> coeff;
    Rat rhs;  // sum coeff . y >= rhs
};

// Exact Fourier-Motzkin feasibility for A^T y >= 1; returns a solution y.
std::vector<Rat> fm_solve(const IntMatrix& a) {
    const std::size_t d = a.rows(), n = a.cols();
    std::vector<FmRow> rows(n);
    for (std::size_t r = 0; r < n; ++r) {
        rows[r].coeff.resize(d);
        for (std::size_t c = 0; c < d; ++c) rows[r].coeff[c] = Rat(a.at(c, r));
        rows[r].rhs = 1;
    }
    std::vector<std::vector<FmRow>> snapshot(d);
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<FmRow> pos, neg, zero;
        for (auto& r : rows) {
            if (r.coeff[k] > 0)
                pos.push_back(r);
            else if (r.coeff[k] < 0)
                neg.push_back(r);
            else
                zero.push_back(r);
        }
        for (auto& r : pos) snapshot[k].push_back(r);
        for (auto& r : neg) snapshot[k].push_back(r);
        std::vector<FmRow> next = std::move(zero);
        for (const auto& p : pos)
            for (const auto& q : neg) {
                FmRow combined;
                combined.coeff.resize(d);
                Rat cp = p.coeff[k], cq = -q.coeff[k];  // cq > 0
                for (std::size_t t = 0; t < d; ++t)
                    combined.coeff[t] = cq * p.coeff[t] + cp * q.coeff[t];
                combined.coeff[k] = 0;
                combined.rhs = cq * p.rhs + cp * q.rhs;
                next.push_back(std::move(combined));
                if (next.size() > 50000)
                    throw ResourceLimitError("Fourier-Motzkin blowup while searching for a grading");
            }
        rows = std::move(next);
    }
    for (const auto& r : rows)
        if (r.rhs > 0) throw NoPositiveGradingError("row space contains no strictly positive vector");
    std::vector<Rat> y(d, Rat(0));
    for (std::size_t k = d; k-- > 0;) {
        bool has_lo = false, has_hi = false;
        Rat lo, hi;
        for (const auto& r : snapshot[k]) {
            Rat rest = r.rhs;
            for (std::size_t t = k + 1; t < d; ++t) rest -= r.coeff[t] * y[t];
            Rat bound = rest / r.coeff[k];
            if (r.coeff[k] > 0) {
                if (!has_lo || bound > lo) lo = bound, has_lo = true;
            } else {
                if (!has_hi || bound < hi) hi = bound, has_hi = true;
            }
        }
        if (has_lo)
            y[k] = lo;
        else if (has_hi)
            y[k] = hi;
    }
    return y;
}

}  // namespace

std::vector<Int> positive_grading(const IntMatrix& a) {
    const std::size_t n = a.cols();
    auto kernel = kernel_lattice(a);
    bool ones_work = true;
    for (const auto& u : kernel) {
        Int s = 0;
        for (const auto& v : u) s += v;
        if (s != 0) {
            ones_work = false;
            break;
        }
    }
    if (ones_work) return std::vector<Int>(n, Int(1));

    std::vector<Rat> y = fm_solve(a);
    std::vector<Rat> w(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) w[j] += Rat(a.at(i, j)) * y[i];
    Int scale = 1;
    for (const auto& v : w) scale = lcm_int(scale, Int(boost::multiprecision::denominator(v)));
    std::vector<Int> wi(n);
    for (std::size_t j = 0; j < n; ++j) {
        wi[j] = Int(boost::multiprecision::numerator(w[j])) *
                (scale / Int(boost::multiprecision::denominator(w[j])));
        if (wi[j] < 1) throw NoPositiveGradingError("internal: grading candidate not positive");
    }
    return wi;
}

// ---------------------------------------------------------------------------
// Buchberger engine

namespace {

/// Saturation-phase order: w-graded, revlex tie break along an explicit
/// smallest-to-largest permutation. Weights empty means all-ones.
class WeightedRevLex {
public:
    WeightedRevLex(std::vector<Int> weights, std::vector<std::size_t> s2l)
        : weights_(std::move(weights)), s2l_(std::move(s2l)) {}

    int compare(const Exponents& a, const Exponents& b) const {
        if (weights_.empty()) {
            std::int64_t da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db ? -1 : 1;
        } else {
            Int da = 0, db = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i]) da += weights_[i] * a[i];
                if (b[i]) db += weights_[i] * b[i];
            }
            if (da != db) return da < db ? -1 : 1;
        }
        for (std::size_t r = 0; r < s2l_.size(); ++r) {
            std::size_t v = s2l_[r];
            if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
        }
        return 0;
    }

private:
    std::vector<Int> weights_;
    std::vector<std::size_t> s2l_;
};

struct OrderRef {
    const TermOrder* term = nullptr;
    const WeightedRevLex* weighted = nullptr;
    int compare(const Exponents& a, const Exponents& b) const {
        return term ? term->compare(a, b) : weighted->compare(a, b);
    }
};

// Orient (u, v) into a binomial with lead > trail; nullopt when u == v.
std::optional<Binomial> orient(Exponents u, Exponents v, const OrderRef& ord) {
    int c = ord.compare(u, v);
    if (c == 0) return std::nullopt;
    if (c < 0) std::swap(u, v);
    return Binomial{std::move(u), std::move(v)};
}

// Divide out the common monomial factor (sound here: the target ideal is the
// full saturation, which is prime and monomial-free).
void strip_content(Binomial& b) {
    for (std::size_t i = 0; i < b.lead.size(); ++i) {
        std::int32_t c = std::min(b.lead[i], b.trail[i]);
        if (c > 0) {
            b.lead[i] -= c;
            b.trail[i] -= c;
        }
    }
}

struct Engine {
    std::vector<Binomial> basis;
    OrderRef ord;
    std::size_t* budget = nullptr;

    // Classical normal form: rewrite the lead until irreducible, re-orient as
    // needed; returns nullopt when the binomial reduces to zero.
    std::optional<Binomial> normal_form(Binomial f) const {
        for (;;) {
            bool rewrote = false;
            for (const auto& g : basis) {
                if (!exponents_divide(g.lead, f.lead)) continue;
                Exponents next = exp_rewrite(f.lead, g.lead, g.trail);
                int c = ord.compare(next, f.trail);
                if (c == 0) return std::nullopt;
                if (c < 0) {
                    f.lead = std::move(f.trail);
                    f.trail = std::move(next);
                } else {
                    f.lead = std::move(next);
                }
                rewrote = true;
                break;
            }
            if (!rewrote) return f;
        }
    }

    // Fully reduce the trail as well (for tail-reduced results).
    Binomial tail_reduce(Binomial f) const {
        for (;;) {
            bool rewrote = false;
            for (const auto& g : basis) {
                if (!exponents_divide(g.lead, f.trail)) continue;
                f.trail = exp_rewrite(f.trail, g.lead, g.trail);
                rewrote = true;
                break;
            }
            if (!rewrote) return f;
        }
    }

    void run(bool strip_inserted) {
        struct Pair {
            std::int64_t lcm_deg;
            std::size_t i, j;
            bool operator<(const Pair& o) const {
                return std::tie(lcm_deg, i, j) < std::tie(o.lcm_deg, o.i, o.j);
            }
        };
        auto lcm_degree = [&](std::size_t i, std::size_t j) {
            std::int64_t d = 0;
            for (std::size_t t = 0; t < basis[i].lead.size(); ++t)
                d += std::max(basis[i].lead[t], basis[j].lead[t]);
            return d;
        };
        auto coprime = [&](std::size_t i, std::size_t j) {
            for (std::size_t t = 0; t < basis[i].lead.size(); ++t)
                if (basis[i].lead[t] > 0 && basis[j].lead[t] > 0) return false;
            return true;
        };
        std::set<Pair> queue;
        std::set<std::pair<std::size_t, std::size_t>> done;
        auto push_pairs_with = [&](std::size_t j) {
            for (std::size_t i = 0; i < j; ++i) queue.insert({lcm_degree(i, j), i, j});
        };
        for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_with(j);

        std::size_t processed = 0;
        while (!queue.empty()) {
            Pair p = *queue.begin();
            queue.erase(queue.begin());
            done.insert({p.i, p.j});
            if (coprime(p.i, p.j)) continue;
            // chain criterion: a third lead dividing the lcm whose pairs with
            // both ends were already considered
            Exponents lcm(basis[p.i].lead.size());
            for (std::size_t t = 0; t < lcm.size(); ++t)
                lcm[t] = std::max(basis[p.i].lead[t], basis[p.j].lead[t]);
            bool skip = false;
            for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == p.i || k == p.j) continue;
                if (!exponents_divide(basis[k].lead, lcm)) continue;
                auto key1 = std::minmax(p.i, k);
                auto key2 = std::minmax(p.j, k);
                if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
                    skip = true;
            }
            if (skip) continue;

            if (*budget == 0) throw GbBudgetError(basis, processed);
            --*budget;
            ++processed;

            Exponents su = exp_rewrite(lcm, basis[p.i].lead, basis[p.i].trail);
            Exponents sv = exp_rewrite(lcm, basis[p.j].lead, basis[p.j].trail);
            auto s = orient(std::move(su), std::move(sv), ord);
            if (!s) continue;
            auto nf = normal_form(std::move(*s));
            if (!nf) continue;
            if (strip_inserted) {
                strip_content(*nf);
                // stripping may flip nothing order-wise for graded orders,
                // but re-orient defensively
                auto reoriented = orient(std::move(nf->lead), std::move(nf->trail), ord);
                if (!reoriented) continue;
                nf = std::move(reoriented);
            }
            basis.push_back(std::move(*nf));
            push_pairs_with(basis.size() - 1);
        }
    }

    // Minimal + tail-reduced + canonically sorted form of a finished basis.
    void reduce_basis() {
        // minimalize: drop elements whose lead another lead divides
        std::vector<Binomial> kept;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
                if (i == j) continue;
                if (!exponents_divide(basis[j].lead, basis[i].lead)) continue;
                if (basis[j].lead == basis[i].lead && j > i) continue;  // keep first of equals
                redundant = true;
            }
            if (!redundant) kept.push_back(basis[i]);
        }
        basis = std::move(kept);
        // tail-reduce to fixpoint
        for (bool changed = true; changed;) {
            changed = false;
            for (auto& f : basis) {
                Binomial r = tail_reduce(f);
                if (!(r == f)) {
                    f = std::move(r);
                    changed = true;
                }
            }
        }
        std::sort(basis.begin(), basis.end(), [&](const Binomial& x, const Binomial& y) {
            int c = ord.compare(x.lead, y.lead);
            if (c != 0) return c < 0;
            return ord.compare(x.trail, y.trail) < 0;
        });
    }
};

std::vector<Binomial> initial_generators(const std::vector<std::vector<Int>>& kernel,
                                         std::size_t nvars, const OrderRef& ord) {
    std::vector<Binomial> gens;
    for (const auto& u : kernel) {
        Exponents plus(nvars, 0), minus(nvars, 0);
        for (std::size_t i = 0; i < nvars; ++i) {
            if (u[i] > kExponentCeiling || u[i] < -Int(kExponentCeiling))
                throw ResourceLimitError("kernel basis entry exceeds exponent range");
            auto v = static_cast<std::int64_t>(u[i]);
            if (v > 0)
                plus[i] = static_cast<std::int32_t>(v);
            else if (v < 0)
                minus[i] = static_cast<std::int32_t>(-v);
        }
        auto b = orient(std::move(plus), std::move(minus), ord);
        if (b) gens.push_back(std::move(*b));
    }
    return gens;
}

}  // namespace

GroebnerBasis toric_ideal_gb(const IntMatrix& a, const TermOrder& order, const GbLimits& limits) {
    const std::size_t n = a.cols();
    if (order.vars() != n) throw PreconditionError("order has wrong variable count");
    for (std::size_t j = 0; j < n; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < a.rows() && zero; ++i)
            if (a.at(i, j) != 0) zero = false;
        if (zero) throw PreconditionError("zero column makes the toric ideal contain a variable-free binomial; not supported");
    }
    auto kernel = kernel_lattice(a);
    if (kernel.empty()) return GroebnerBasis{{}, order, true};

    std::vector<Int> w = positive_grading(a);
    bool all_ones = std::all_of(w.begin(), w.end(), [](const Int& v) { return v == 1; });
    std::size_t budget = limits.spair_budget;

    // Saturation rounds: revlex with x_i smallest; inserted elements are made
    // primitive, so each finished round leaves the ideal x_i-saturated.
    std::vector<Binomial> gens;
    {
        WeightedRevLex ord0(all_ones ? std::vector<Int>{} : w, [&] {
            std::vector<std::size_t> s2l{0};
            for (std::size_t v = n; v-- > 1;) s2l.push_back(v);
            return s2l;
        }());
        OrderRef ref{nullptr, &ord0};
        gens = initial_generators(kernel, n, ref);
        for (auto& g : gens) strip_content(g);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> s2l{i};
        for (std::size_t v = n; v-- > 0;)
            if (v != i) s2l.push_back(v);
        WeightedRevLex sat_ord(all_ones ? std::vector<Int>{} : w, std::move(s2l));
        OrderRef ref{nullptr, &sat_ord};
        Engine eng{{}, ref, &budget};
        for (auto& g : gens) {
            auto b = orient(Exponents(g.lead), Exponents(g.trail), ref);
            if (b) eng.basis.push_back(std::move(*b));
        }
        eng.run(/*strip_inserted=*/true);
        eng.reduce_basis();
        gens = std::move(eng.basis);
    }

    // Final pass under the requested order.
    OrderRef ref{&order, nullptr};
    Engine eng{{}, ref, &budget};
    for (auto& g : gens) {
        auto b = orient(std::move(g.lead), std::move(g.trail), ref);
        if (b) eng.basis.push_back(std::move(*b));
    }
    eng.run(/*strip_inserted=*/true);
    eng.reduce_basis();

    GroebnerBasis out{std::move(eng.basis), order, true};
    if (limits.self_check) {
        if (!verify_reduced_gb(out, a))
            throw PreconditionError("internal: self check of computed basis failed");
    }
    return out;
}

std::vector<Monomial> initial_ideal(const GroebnerBasis& gb) {
    if (!gb.reduced) throw PreconditionError("initial_ideal needs a reduced basis");
    std::vector<Monomial> out;
    out.reserve(gb.elements.size());
    for (const auto& e : gb.elements) out.push_back(Monomial{e.lead});
    return out;
}

bool is_squarefree(const std::vector<Monomial>& monomials) {
    for (const auto& m : monomials)
        for (auto e : m.exponents)
            if (e > 1) return false;
    return true;
}

Exponents normal_form(Exponents m, const GroebnerBasis& gb) {
    for (;;) {
        bool rewrote = false;
        for (const auto& g : gb.elements) {
            if (!exponents_divide(g.lead, m)) continue;
            m = exp_rewrite(m, g.lead, g.trail);
            rewrote = true;
            break;
        }
        if (!rewrote) return m;
    }
}

bool ideal_contains(const GroebnerBasis& gb, const Binomial& b) {
    return normal_form(b.lead, gb) == normal_form(b.trail, gb);
}

bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) {
    for (const auto& e : a.elements)
        if (!ideal_contains(b, e)) return false;
    for (const auto& e : b.elements)
        if (!ideal_contains(a, e)) return false;
    return true;
}

namespace {

template <typename F>
void for_each_monomial_of_degree(std::size_t nvars, std::int32_t degree, Exponents& scratch,
                                 std::size_t var, F&& f) {
    if (var + 1 == nvars) {
        scratch[var] = degree;
        f(scratch);
        scratch[var] = 0;
        return;
    }
    for (std::int32_t e = degree; e >= 0; --e) {
        scratch[var] = e;
        for_each_monomial_of_degree(nvars, degree - e, scratch, var + 1, f);
    }
    scratch[var] = 0;
}

std::vector<Int> image_of(const IntMatrix& a, const Exponents& e) {
    std::vector<Int> img(a.rows(), Int(0));
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        for (std::size_t i = 0; i < a.rows(); ++i) img[i] += a.at(i, j) * e[j];
    }
    return img;
}

Int monomial_count(std::size_t nvars, std::int32_t degree) {
    Int c = 1;
    for (std::int32_t i = 1; i <= degree; ++i) c = c * Int(nvars - 1 + i) / Int(i);
    return c;
}

}  // namespace

bool verify_reduced_gb(const GroebnerBasis& candidate, const IntMatrix& a,
                       std::size_t fiber_budget) {
    const std::size_t n = a.cols();
    const TermOrder& ord = candidate.order;
    if (ord.vars() != n) return false;
    const auto& els = candidate.elements;

    std::int32_t maxdeg = 0;
    for (const auto& e : els) {
        if (e.lead.size() != n || e.trail.size() != n) return false;
        // orientation and primitivity
        if (ord.compare(e.lead, e.trail) <= 0) return false;
        for (std::size_t i = 0; i < n; ++i)
            if (e.lead[i] > 0 && e.trail[i] > 0) return false;
        // soundness: the exponent difference lies in the kernel
        if (image_of(a, e.lead) != image_of(a, e.trail)) return false;
        maxdeg = std::max(maxdeg, static_cast<std::int32_t>(
                                      std::max(total_degree(e.lead), total_degree(e.trail))));
    }
    // reducedness: leads pairwise non-divisible, trails in normal form
    for (std::size_t i = 0; i < els.size(); ++i) {
        for (std::size_t j = 0; j < els.size(); ++j) {
            if (i == j) continue;
            if (exponents_divide(els[j].lead, els[i].lead)) return false;
            if (exponents_divide(els[j].lead, els[i].trail)) return false;
        }
    }
    // canonical sorting
    for (std::size_t i = 0; i + 1 < els.size(); ++i)
        if (ord.compare(els[i].lead, els[i + 1].lead) >= 0) return false;

    // completeness necessity: the kernel-basis binomials lie in the ideal
    for (const auto& u : kernel_lattice(a)) {
        Exponents plus(n, 0), minus(n, 0);
        bool in_range = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i] > kExponentCeiling || u[i] < -Int(kExponentCeiling)) in_range = false;
            if (!in_range) break;
            auto v = static_cast<std::int64_t>(u[i]);
            if (v > 0)
                plus[i] = static_cast<std::int32_t>(v);
            else if (v < 0)
                minus[i] = static_cast<std::int32_t>(-v);
        }
        if (!in_range) return false;
        if (normal_form(std::move(plus), candidate) != normal_form(std::move(minus), candidate))
            return false;
    }

    // Buchberger property: every S-pair reduces to zero
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = i + 1; j < els.size(); ++j) {
            Exponents lcm(n);
            for (std::size_t t = 0; t < n; ++t) lcm[t] = std::max(els[i].lead[t], els[j].lead[t]);
            Exponents u = exp_rewrite(lcm, els[i].lead, els[i].trail);
            Exponents v = exp_rewrite(lcm, els[j].lead, els[j].trail);
            if (normal_form(std::move(u), candidate) != normal_form(std::move(v), candidate))
                return false;
        }

    // completeness against the true ideal, degree by degree
    std::int32_t check_to = maxdeg + 1;
    for (std::int32_t t = 1; t <= check_to; ++t) {
        if (monomial_count(n, t) > Int(fiber_budget))
            throw ResourceLimitError("fiber completeness check exceeds the monomial budget");
        std::map<std::vector<Int>, std::vector<Exponents>> fibers;
        Exponents scratch(n, 0);
        for_each_monomial_of_degree(n, t, scratch, 0,
                                    [&](const Exponents& e) { fibers[image_of(a, e)].push_back(e); });
        for (const auto& [img, monos] : fibers) {
            if (monos.size() < 2) continue;
            Exponents nf0 = normal_form(Exponents(monos[0]), candidate);
            for (std::size_t k = 1; k < monos.size(); ++k)
                if (normal_form(Exponents(monos[k]), candidate) != nf0) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// minimal generator degrees via graded fibers

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
};

}  // namespace

std::map<int, std::size_t> minimal_generator_degrees(const IntMatrix& a, int max_degree,
                                                     std::size_t monomial_budget) {
    if (max_degree < 2) throw PreconditionError("max_degree must be >= 2");
    if (!is_configuration(a)) throw PreconditionError("minimal_generator_degrees needs a configuration");
    const std::size_t n = a.cols();

    std::map<int, std::size_t> result;
    // fibers of the previous degree, as monomial lists
    std::vector<std::vector<Exponents>> prev_fibers;
    for (int t = 1; t <= max_degree; ++t) {
        if (monomial_count(n, t) > Int(monomial_budget))
            throw ResourceLimitError("fiber enumeration exceeds the monomial budget");
        std::map<std::vector<Int>, std::vector<Exponents>> fibers;
        Exponents scratch(n, 0);
        for_each_monomial_of_degree(n, static_cast<std::int32_t>(t), scratch, 0,
                                    [&](const Exponents& e) { fibers[image_of(a, e)].push_back(e); });
        std::map<Exponents, std::size_t> index;
        std::size_t next_id = 0;
        std::size_t dim_ideal = 0;
        for (const auto& [img, monos] : fibers) {
            if (monos.size() >= 2) dim_ideal += monos.size() - 1;
            for (const auto& m : monos) index.emplace(m, next_id++);
        }
        // span of S_1 * I_{t-1}: connect x_i * (fiber of degree t-1)
        UnionFind uf(next_id);
        std::vector<char> touched(next_id, 0);
        for (const auto& fiber : prev_fibers) {
            if (fiber.size() < 2) continue;
            for (std::size_t var = 0; var < n; ++var) {
                std::size_t first_id = 0;
                for (std::size_t k = 0; k < fiber.size(); ++k) {
                    Exponents m = fiber[k];
                    m[var] += 1;
                    std::size_t id = index.at(m);
                    touched[id] = 1;
                    if (k == 0)
                        first_id = id;
                    else
                        uf.unite(first_id, id);
                }
            }
        }
        std::map<std::size_t, std::size_t> comp_sizes;
        for (std::size_t id = 0; id < next_id; ++id)
            if (touched[id]) comp_sizes[uf.find(id)] += 1;
        std::size_t dim_products = 0;
        for (const auto& [root, size] : comp_sizes) dim_products += size - 1;

        std::size_t gens = dim_ideal - dim_products;
        if (gens > 0) result[t] = gens;

        prev_fibers.clear();
        for (auto& [img, monos] : fibers) prev_fibers.push_back(std::move(monos));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Theorem-4.2-style quadratic bases for chordal bipartite graphs

namespace {

struct EdgeLabels {
    // per edge (by column index): part-1 label i and part-2 label k (1-based)
    std::vector<std::pair<int, int>> ik;
    // variable index of x_{ik} / y_{ik} in the A±(mu) column order
    std::vector<std::size_t> xvar, yvar;
    // lookup (i, k) -> edge column
    std::map<std::pair<int, int>, std::size_t> edge_of;
    std::size_t nvars = 0;
};

EdgeLabels label_edges(const Graph& g, const Bipartition& parts) {
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (std::size_t k = 0; k < parts.part1.size(); ++k) {
        side[static_cast<std::size_t>(parts.part1[k])] = 1;
        label[static_cast<std::size_t>(parts.part1[k])] = static_cast<int>(k) + 1;
    }
    for (std::size_t k = 0; k < parts.part2.size(); ++k) {
        side[static_cast<std::size_t>(parts.part2[k])] = 2;
        label[static_cast<std::size_t>(parts.part2[k])] = static_cast<int>(k) + 1;
    }
    const std::size_t n = g.edge_count();
    EdgeLabels out;
    out.nvars = 2 * n + 1;
    out.ik.resize(n);
    out.xvar.resize(n);
    out.yvar.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        auto [u, v] = g.edges()[c];
        if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)])
            throw NotBipartiteError("given parts are not a bipartition");
        int p1 = side[static_cast<std::size_t>(u)] == 1 ? u : v;
        int p2 = side[static_cast<std::size_t>(u)] == 1 ? v : u;
        out.ik[c] = {label[static_cast<std::size_t>(p1)], label[static_cast<std::size_t>(p2)]};
        out.edge_of[out.ik[c]] = c;
        // x_{ik} is the column e_{p1} - e_{p2} (+ homogenizing 1): the Plus
        // column when p1 < p2, the Minus column otherwise.
        if (p1 < p2) {
            out.xvar[c] = 1 + c;
            out.yvar[c] = 1 + n + c;
        } else {
            out.xvar[c] = 1 + n + c;
            out.yvar[c] = 1 + c;
        }
    }
    return out;
}

Binomial make_quadratic(std::size_t nvars, std::size_t a1, std::size_t a2, std::size_t b1,
                        std::size_t b2) {
    Exponents lead(nvars, 0), trail(nvars, 0);
    lead[a1] += 1;
    lead[a2] += 1;
    trail[b1] += 1;
    trail[b2] += 1;
    return Binomial{std::move(lead), std::move(trail)};
}

void check_theorem42_preconditions(const Graph& g, const Bipartition& parts) {
    if (!is_connected(g)) throw PreconditionError("theorem 4.2 basis needs a connected graph");
    if (!is_bipartite(g)) throw NotBipartiteError();
    if (!is_chordal_bipartite(g))
        throw PreconditionError("a chordless cycle of length >= 6 exists; hypothesis fails");
    if (!satisfies_star_condition(g, parts))
        throw PreconditionError("condition (*) fails for the given bipartition labels");
}

}  // namespace

TermOrder theorem42_order(const Graph& g, const Bipartition& parts) {
    EdgeLabels lab = label_edges(g, parts);
    std::vector<std::size_t> order_of_edges(g.edge_count());
    std::iota(order_of_edges.begin(), order_of_edges.end(), std::size_t{0});
    std::sort(order_of_edges.begin(), order_of_edges.end(),
              [&](std::size_t a, std::size_t b) { return lab.ik[a] < lab.ik[b]; });
    std::vector<std::size_t> s2l{0};  // z smallest
    for (std::size_t c : order_of_edges) {
        s2l.push_back(lab.yvar[c]);
        s2l.push_back(lab.xvar[c]);
    }
    return TermOrder(OrderKind::RevLexWithOrdering, std::move(s2l));
}

std::vector<Binomial> theorem42_family_binomials(const Graph& g, const Bipartition& parts) {
    check_theorem42_preconditions(g, parts);
    EdgeLabels lab = label_edges(g, parts);
    const std::size_t nv = lab.nvars;
    std::vector<Binomial> out;

    // x_{ik} y_{ik} - z^2
    for (std::size_t c = 0; c < g.edge_count(); ++c)
        out.push_back(make_quadratic(nv, lab.xvar[c], lab.yvar[c], 0, 0));

    const int p = static_cast<int>(parts.part1.size());
    const int q = static_cast<int>(parts.part2.size());
    auto edge = [&](int i, int k) -> const std::size_t* {
        auto it = lab.edge_of.find({i, k});
        return it == lab.edge_of.end() ? nullptr : &it->second;
    };
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j)
            for (int k = 1; k <= q; ++k)
                for (int l = k + 1; l <= q; ++l) {
                    const std::size_t* ik = edge(i, k);
                    const std::size_t* il = edge(i, l);
                    const std::size_t* jk = edge(j, k);
                    const std::size_t* jl = edge(j, l);
                    if (!ik || !il || !jk || !jl) continue;
                    auto X = [&](const std::size_t* e) { return lab.xvar[*e]; };
                    auto Y = [&](const std::size_t* e) { return lab.yvar[*e]; };
                    out.push_back(make_quadratic(nv, X(il), X(jk), X(ik), X(jl)));
                    out.push_back(make_quadratic(nv, X(il), Y(jl), X(ik), Y(jk)));
                    out.push_back(make_quadratic(nv, Y(jl), X(jk), X(ik), Y(il)));
                    out.push_back(make_quadratic(nv, X(jl), Y(jk), Y(ik), X(il)));
                    out.push_back(make_quadratic(nv, Y(il), X(jl), Y(ik), X(jk)));
                    out.push_back(make_quadratic(nv, Y(il), Y(jk), Y(ik), Y(jl)));
                }
    return out;
}

GroebnerBasis theorem42_basis(const Graph& g, const Bipartition& parts) {
    TermOrder order = theorem42_order(g, parts);
    std::vector<Binomial> fams = theorem42_family_binomials(g, parts);
    OrderRef ref{&order, nullptr};
    Engine eng{{}, ref, nullptr};
    std::size_t budget = 1000000;
    eng.budget = &budget;
    for (auto& b : fams) {
        auto o = orient(std::move(b.lead), std::move(b.trail), ref);
        if (!o) throw PreconditionError("internal: degenerate family binomial");
        eng.basis.push_back(std::move(*o));
    }
    eng.reduce_basis();
    return GroebnerBasis{std::move(eng.basis), std::move(order), true};
}

// ---------------------------------------------------------------------------
// formatting

std::string format_monomial(const Exponents& e, const std::vector<std::string>& var_names) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) out << '*';
        out << var_names[i];
        if (e[i] > 1) out << '^' << e[i];
        first = false;
    }
    if (first) out << '1';
    return out.str();
}

std::string format_binomial(const Binomial& b, const std::vector<std::string>& var_names) {
    return format_monomial(b.lead, var_names) + " - " + format_monomial(b.trail, var_names);
}

std::vector<std::string> plain_var_names(std::size_t n) {
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = "x" + std::to_string(i + 1);
    return names;
}

std::vector<std::string> csc_var_names(std::size_t base_cols) {
    std::vector<std::string> names;
    names.reserve(2 * base_cols + 1);
    names.push_back("z");
    for (std::size_t i = 1; i <= base_cols; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= base_cols; ++i) names.push_back("y" + std::to_string(i));
    return names;
}

std::vector<std::string> graph_var_names(const Graph& g, const Bipartition& parts) {
    EdgeLabels lab = label_edges(g, parts);
    std::vector<std::string> names(lab.nvars);
    names[0] = "z";
    for (std::size_t c = 0; c < g.edge_count(); ++c) {
        auto [i, k] = lab.ik[c];
        std::string suffix = "_{" + std::to_string(i) + "," + std::to_string(k) + "}";
        names[lab.xvar[c]] = "x" + suffix;
        names[lab.yvar[c]] = "y" + suffix;
    }
    return names;
}

}  // namespace censym
