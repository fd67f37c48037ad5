#include <doctest.h>

#include <algorithm>

#include "censym/configs.hpp"
#include "censym/graphs.hpp"
#include "censym/intlin.hpp"
#include "censym/toric.hpp"
#include "oracles.hpp"

using namespace censym;

namespace {

IntMatrix mat(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Int>> r;
    for (const auto& row : rows) {
        std::vector<Int> v;
        for (auto x : row) v.emplace_back(x);
        r.push_back(std::move(v));
    }
    return IntMatrix::from_rows(r);
}

Graph tie_graph() { return Graph(5, {{1, 5}, {3, 5}, {1, 3}, {2, 5}, {4, 5}, {2, 4}}); }

Exponents expo(std::size_t n, std::initializer_list<std::pair<std::size_t, int>> entries) {
    Exponents e(n, 0);
    for (auto [i, v] : entries) e[i] = v;
    return e;
}

// The three displayed quadrics of the rank-3 example, over A± variables
// 0 = center, 1..3 = plus block, 4..6 = minus block.
GroebnerBasis displayed_quadrics(const TermOrder& order) {
    std::vector<Binomial> els;
    for (std::size_t i = 1; i <= 3; ++i) {
        Binomial b{expo(7, {{i, 1}, {i + 3, 1}}), expo(7, {{0, 2}})};
        els.push_back(std::move(b));
    }
    std::sort(els.begin(), els.end(), [&](const Binomial& x, const Binomial& y) {
        return order.compare(x.lead, y.lead) < 0;
    });
    return GroebnerBasis{els, order, true};
}

}  // namespace

TEST_SUITE("toric") {

TEST_CASE("term order fixtures") {
    TermOrder grevlex(OrderKind::GradedRevLex, 3);
    // x^2 z < x y^2 under grevlex with x > y > z
    CHECK(grevlex.compare(expo(3, {{0, 2}, {2, 1}}), expo(3, {{0, 1}, {1, 2}})) < 0);
    TermOrder glex(OrderKind::GradedLex, 3);
    CHECK(glex.compare(expo(3, {{0, 2}, {2, 1}}), expo(3, {{0, 1}, {1, 2}})) > 0);
    // degree dominates
    CHECK(grevlex.compare(expo(3, {{0, 3}}), expo(3, {{1, 2}})) > 0);

    TermOrder center = center_smallest_revlex(5);
    CHECK(center.variable_order().front() == 0);
    // center^2 is smaller than any product of two block variables
    CHECK(center.compare(expo(5, {{0, 2}}), expo(5, {{1, 1}, {3, 1}})) < 0);
}

TEST_CASE("kernel lattice fixtures") {
    CHECK(kernel_lattice(IntMatrix::identity(3)).empty());
    auto k = kernel_lattice(mat({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<Int>{Int(1), Int(-1)});

    auto kt = kernel_lattice(graph_config_rho(tie_graph()));
    REQUIRE(kt.size() == 1);
    CHECK(kt[0] == std::vector<Int>{Int(1), Int(1), Int(-1), Int(-1), Int(-1), Int(1)});
}

TEST_CASE("kernel lattice is canonical across bases of the same lattice") {
    // same row space scaled/permuted: kernels equal as lattices
    IntMatrix a = mat({{1, 2, 3}, {0, 1, 1}});
    IntMatrix b = mat({{1, 3, 4}, {0, 1, 1}, {1, 2, 3}});  // row ops of a
    CHECK(kernel_lattice(a) == kernel_lattice(b));
}

TEST_CASE("positive grading: configurations get all ones") {
    auto w = positive_grading(graph_config_rho(cycle_graph(3)));
    CHECK(w == std::vector<Int>(3, Int(1)));
}

TEST_CASE("positive grading for the 4-cycle mu configuration") {
    IntMatrix a = graph_config_mu(cycle_graph(4));
    auto w = positive_grading(a);
    REQUIRE(w.size() == 4);
    for (const auto& v : w) CHECK(v >= 1);
    for (const auto& u : kernel_lattice(a)) {
        Int s = 0;
        for (std::size_t i = 0; i < u.size(); ++i) s += w[i] * u[i];
        CHECK(s == 0);
    }
}

TEST_CASE("no positive grading exists when the kernel meets the positive orthant") {
    CHECK_THROWS_AS(positive_grading(mat({{1, -1}})), NoPositiveGradingError);
}

TEST_CASE("gb of a trivial kernel is empty") {
    auto gb = toric_ideal_gb(IntMatrix::identity(3), TermOrder(OrderKind::GradedRevLex, 3));
    CHECK(gb.elements.empty());
    CHECK(gb.reduced);
    CHECK(initial_ideal(gb).empty());
}

TEST_CASE("tie graph ideal is one cubic binomial") {
    IntMatrix a = graph_config_rho(tie_graph());
    TermOrder order(OrderKind::GradedRevLex, 6);
    auto gb = toric_ideal_gb(a, order, GbLimits{.spair_budget = 100000, .self_check = true});
    REQUIRE(gb.elements.size() == 1);
    // under grevlex with x1 > ... > x6 the lead is x3 x4 x5
    CHECK(gb.elements[0].lead == expo(6, {{2, 1}, {3, 1}, {4, 1}}));
    CHECK(gb.elements[0].trail == expo(6, {{0, 1}, {1, 1}, {5, 1}}));
    auto init = initial_ideal(gb);
    REQUIRE(init.size() == 1);
    CHECK(is_squarefree(init));

    auto degs = minimal_generator_degrees(a, 3);
    CHECK(degs == std::map<int, std::size_t>{{3, 1}});
}

TEST_CASE("rank-3 example: both matrices give the three displayed quadrics") {
    IntMatrix a = mat({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    IntMatrix b = mat({{1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
    TermOrder order = center_smallest_revlex(7);
    auto gba = toric_ideal_gb(central_symmetrize(a).matrix, order,
                              GbLimits{.spair_budget = 100000, .self_check = true});
    auto gbb = toric_ideal_gb(central_symmetrize(b).matrix, order, GbLimits{});
    GroebnerBasis expected = displayed_quadrics(order);
    CHECK(gba.elements == expected.elements);
    CHECK(gbb.elements == expected.elements);
    CHECK(same_ideal(gba, expected));
    CHECK(same_ideal(gba, gbb));

    auto degs = minimal_generator_degrees(central_symmetrize(b).matrix, 3);
    CHECK(degs == std::map<int, std::size_t>{{2, 3}});
}

TEST_CASE("gb determinism across repeated runs") {
    IntMatrix a = central_symmetrize(graph_config_mu(complete_bipartite(2, 2))).matrix;
    TermOrder order = center_smallest_revlex(9);
    auto g1 = toric_ideal_gb(a, order);
    auto g2 = toric_ideal_gb(a, order);
    CHECK(g1.elements == g2.elements);
    auto names = csc_var_names(4);
    std::string s1, s2;
    for (const auto& e : g1.elements) s1 += format_binomial(e, names) + "\n";
    for (const auto& e : g2.elements) s2 += format_binomial(e, names) + "\n";
    CHECK(s1 == s2);
}

TEST_CASE("gb soundness: every element difference lies in the kernel") {
    oracle::Rng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix a = central_symmetrize(oracle::random_full_rank(rng, 2, 3)).matrix;
        auto gb = toric_ideal_gb(a, center_smallest_revlex(a.cols()));
        for (const auto& e : gb.elements) {
            std::vector<Int> lhs(a.rows(), Int(0)), rhs(a.rows(), Int(0));
            for (std::size_t j = 0; j < a.cols(); ++j)
                for (std::size_t i = 0; i < a.rows(); ++i) {
                    lhs[i] += a.at(i, j) * e.lead[j];
                    rhs[i] += a.at(i, j) * e.trail[j];
                }
            CHECK(lhs == rhs);
        }
        CHECK(verify_reduced_gb(gb, a));
    }
}

TEST_CASE("spair budget raises a partial-result error") {
    IntMatrix a = central_symmetrize(graph_config_mu(complete_bipartite(2, 3))).matrix;
    CHECK_THROWS_AS(toric_ideal_gb(a, center_smallest_revlex(13), GbLimits{.spair_budget = 3}),
                    GbBudgetError);
}

TEST_CASE("verify_reduced_gb accepts the true basis and rejects a flipped one") {
    IntMatrix a = graph_config_rho(tie_graph());
    TermOrder order(OrderKind::GradedRevLex, 6);
    GroebnerBasis good{{Binomial{expo(6, {{2, 1}, {3, 1}, {4, 1}}),
                                 expo(6, {{0, 1}, {1, 1}, {5, 1}})}},
                       order,
                       true};
    CHECK(verify_reduced_gb(good, a));
    GroebnerBasis flipped{{Binomial{expo(6, {{0, 1}, {1, 1}, {5, 1}}),
                                    expo(6, {{2, 1}, {3, 1}, {4, 1}})}},
                          order,
                          true};
    CHECK_FALSE(verify_reduced_gb(flipped, a));
    GroebnerBasis unsound{{Binomial{expo(6, {{2, 1}, {3, 1}, {4, 1}}),
                                    expo(6, {{0, 1}, {1, 2}, {5, 1}})}},
                          order,
                          true};
    CHECK_FALSE(verify_reduced_gb(unsound, a));
    GroebnerBasis incomplete{{}, order, true};
    CHECK_FALSE(verify_reduced_gb(incomplete, a));
}

TEST_CASE("theorem 4.2 basis for a single edge") {
    Graph g(2, {{1, 2}});
    auto parts = is_bipartite(g);
    REQUIRE(parts.has_value());
    auto gb = theorem42_basis(g, *parts);
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == Binomial{expo(3, {{1, 1}, {2, 1}}), expo(3, {{0, 2}})});
    CHECK(verify_reduced_gb(gb, central_symmetrize(graph_config_mu(g)).matrix));
}

TEST_CASE("theorem 4.2 on the 4-cycle: one quadruple, ten binomials, engine agreement") {
    Graph g = complete_bipartite(2, 2);  // the 4-cycle
    auto parts = is_bipartite(g);
    auto fams = theorem42_family_binomials(g, *parts);
    CHECK(fams.size() == 4 + 6);
    auto gb = theorem42_basis(g, *parts);
    CHECK(gb.elements.size() == 10);
    IntMatrix a = central_symmetrize(graph_config_mu(g)).matrix;
    CHECK(verify_reduced_gb(gb, a));
    auto engine = toric_ideal_gb(a, gb.order);
    CHECK(engine.elements == gb.elements);
    // the theorem orients every family binomial with the first monomial as lead
    for (const auto& b : fams) CHECK(gb.order.compare(b.lead, b.trail) > 0);
}

TEST_CASE("theorem 4.2 counts: K23 families and interreduction") {
    Graph g = complete_bipartite(2, 3);
    auto parts = is_bipartite(g);
    auto fams = theorem42_family_binomials(g, *parts);
    CHECK(fams.size() == 6 + 6 * 3);
    auto gb = theorem42_basis(g, *parts);
    // two lead collisions (families with k-free leads) collapse per extra k
    CHECK(gb.elements.size() == 22);
    IntMatrix a = central_symmetrize(graph_config_mu(g)).matrix;
    CHECK(verify_reduced_gb(gb, a));
    auto engine = toric_ideal_gb(a, gb.order);
    CHECK(engine.elements == gb.elements);
}

TEST_CASE("theorem 4.2 preconditions are named") {
    CHECK_THROWS_AS(theorem42_basis(cycle_graph(6), *is_bipartite(cycle_graph(6))),
                    PreconditionError);  // chordless 6-cycle
    Graph disconnected(4, {{1, 2}, {3, 4}});
    CHECK_THROWS_AS(theorem42_basis(disconnected, *is_bipartite(disconnected)), PreconditionError);
}

TEST_CASE("bipartite graphs: rho and mu csc ideals share the reduced basis") {
    oracle::Rng rng(19);
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = oracle::random_connected_bipartite(rng, 2, rng.uniform(2, 3), rng.uniform(0, 3));
        IntMatrix ar = central_symmetrize(graph_config_rho(g)).matrix;
        IntMatrix am = central_symmetrize(graph_config_mu(g)).matrix;
        TermOrder order = center_smallest_revlex(ar.cols());
        CHECK(toric_ideal_gb(ar, order).elements == toric_ideal_gb(am, order).elements);
    }
}

TEST_CASE("unimodular csc ideals have squarefree initial ideals under center-smallest revlex") {
    oracle::Rng rng(29);
    std::vector<IntMatrix> corpus;
    for (int trial = 0; trial < 4; ++trial)
        corpus.push_back(oracle::random_unimodular(rng, rng.uniform(2, 3), rng.uniform(3, 4)));
    corpus.push_back(graph_config_mu(cycle_graph(5)));
    corpus.push_back(graph_config_mu(complete_graph(4)));
    for (const auto& a : corpus) {
        IntMatrix csc = central_symmetrize(a).matrix;
        const std::size_t nv = csc.cols();
        // default completion plus three random completions of the order
        std::vector<TermOrder> orders{center_smallest_revlex(nv)};
        for (int extra = 0; extra < 3; ++extra) {
            std::vector<std::size_t> rest;
            for (std::size_t v = 1; v < nv; ++v) rest.push_back(v);
            for (std::size_t i = rest.size(); i > 1; --i)
                std::swap(rest[i - 1], rest[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(i) - 1))]);
            std::vector<std::size_t> s2l{0};
            s2l.insert(s2l.end(), rest.begin(), rest.end());
            orders.emplace_back(OrderKind::RevLexWithOrdering, std::move(s2l));
        }
        for (const auto& order : orders)
            CHECK(is_squarefree(initial_ideal(toric_ideal_gb(csc, order))));
    }
}

TEST_CASE("quadratic generation of the mu csc ideal matches chordal bipartiteness") {
    std::vector<Graph> fixtures{cycle_graph(4),   cycle_graph(6), cycle_graph(8),
                                complete_bipartite(2, 3), path_graph(5),
                                Graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {2, 5}})};
    for (const Graph& g : fixtures) {
        IntMatrix a = central_symmetrize(graph_config_mu(g)).matrix;
        auto degs = minimal_generator_degrees(a, 4);
        bool only_quadratic = true;
        for (const auto& [deg, count] : degs)
            if (deg > 2 && count > 0) only_quadratic = false;
        CHECK(only_quadratic == is_chordal_bipartite(g));
    }
}

TEST_CASE("binomial formatting") {
    Binomial b{expo(4, {{0, 2}, {2, 1}}), expo(4, {{1, 1}, {3, 1}})};
    CHECK(format_binomial(b, plain_var_names(4)) == "x1^2*x3 - x2*x4");
    CHECK(format_monomial(expo(4, {}), plain_var_names(4)) == "1");
    auto csc_names = csc_var_names(2);
    CHECK(format_binomial(Binomial{expo(5, {{1, 1}, {3, 1}}), expo(5, {{0, 2}})}, csc_names) ==
          "x1*y1 - z^2");
}

}  // TEST_SUITE
