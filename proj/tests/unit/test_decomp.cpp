#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "tindep/decomp.hpp"
#include "tindep/detect.hpp"
#include "tindep/error.hpp"

using namespace tindep;

namespace {

/// Balance by BFS components and exact sums.
bool balanced_oracle(const Graph& g, const WeightFn& w, const VertexSet& x) {
    for (const auto& comp : oracle::bfs_components(g, x)) {
        Rational sum = 0;
        for (Vertex v : comp) sum += w[v];
        if (2 * sum > 1) return false;
    }
    return true;
}

VertexSet closed_nbhd(const Graph& g, const VertexSet& y) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.size(); ++v)
        for (Vertex u : y)
            if (u == v || g.adjacent(u, v)) {
                out.push_back(v);
                break;
            }
    return out;
}

/// Smallest |Y| with N[Y] balanced over all subsets, or -1.
int min_separator_size(const Graph& g, const WeightFn& w, int kmax) {
    int best = -1;
    for (std::uint32_t m = 0; m < (1u << g.size()); ++m) {
        int k = std::popcount(m);
        if (k > kmax || (best >= 0 && k >= best)) continue;
        VertexSet y;
        for (Vertex v = 0; v < g.size(); ++v)
            if (m >> v & 1u) y.push_back(v);
        if (balanced_oracle(g, w, closed_nbhd(g, y))) best = k;
    }
    return best;
}

/// Minimum over all elimination orders of the largest α of an elimination bag.
int tia_by_permutations(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.size()));
    std::iota(order.begin(), order.end(), 0);
    int best = g.size() + 1;
    do {
        std::vector<std::vector<char>> adj(order.size(), std::vector<char>(order.size(), 0));
        for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
        std::vector<char> gone(order.size(), 0);
        int worst = 0;
        for (int v : order) {
            std::vector<Vertex> bag{v};
            for (int u = 0; u < g.size(); ++u)
                if (!gone[u] && adj[v][u]) bag.push_back(u);
            std::sort(bag.begin(), bag.end());
            worst = std::max(worst, oracle::alpha(g, bag));
            for (Vertex a : bag)
                for (Vertex b : bag)
                    if (a != b) adj[a][b] = 1;
            gone[v] = 1;
        }
        best = std::min(best, worst);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

Rational mwis_bruteforce(const Graph& g, const std::vector<Rational>& w) {
    Rational best = 0;
    for (std::uint32_t m = 0; m < (1u << g.size()); ++m) {
        VertexSet x;
        for (Vertex v = 0; v < g.size(); ++v)
            if (m >> v & 1u) x.push_back(v);
        bool stable = true;
        for (std::size_t i = 0; i < x.size() && stable; ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j)
                if (g.adjacent(x[i], x[j])) stable = false;
        if (!stable) continue;
        Rational sum = 0;
        for (Vertex v : x) sum += w[static_cast<std::size_t>(v)];
        best = std::max(best, sum);
    }
    return best;
}

WeightFn random_half(int n, SplitMix64& rng) {
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    std::iota(vs.begin(), vs.end(), 0);
    rng.shuffle(vs);
    vs.resize(static_cast<std::size_t>(std::max(1, n / 2)));
    return WeightFn::uniform_on(n, make_set(vs));
}

}  // namespace

TEST_CASE("is_balanced examples") {
    Graph c4 = oracle::cycle(4);
    WeightFn w = WeightFn::uniform(4);
    BalanceReport one = is_balanced(c4, w, {0});
    CHECK_FALSE(one.balanced);
    CHECK(one.heaviest == Rational(3, 4));
    BalanceReport two = is_balanced(c4, w, {0, 2});
    CHECK(two.balanced);
    CHECK(two.heaviest == Rational(1, 4));
    CHECK(is_balanced(c4, w, c4.vertices()).balanced);
    // exactly one half is allowed
    CHECK(is_balanced(oracle::path_graph(4), w, {1}).balanced);
    CHECK_THROWS_AS(is_balanced(c4, WeightFn({1, 1, 0, 0}), {0}), ContractError);
}

TEST_CASE("balanced_separator_search examples") {
    Graph p9 = oracle::path_graph(9);
    SeparatorSearch s = balanced_separator_search(p9, WeightFn::uniform(9), 1);
    REQUIRE(s.Y);
    // N[3], N[4] and N[5] all balance P9; ties go to the lexicographically least
    CHECK(*s.Y == VertexSet{3});
    CHECK(is_balanced(p9, WeightFn::uniform(9), {3, 4, 5}).balanced);

    Graph c12 = oracle::cycle(12);
    CHECK_FALSE(balanced_separator_search(c12, WeightFn::uniform(12), 1).Y);
    SeparatorSearch c = balanced_separator_search(c12, WeightFn::uniform(12), 3);
    REQUIRE(c.Y);
    CHECK(c.Y->size() == 2);

    Graph k5 = oracle::complete(5);
    SeparatorSearch k = balanced_separator_search(k5, WeightFn::uniform(5), 2);
    REQUIRE(k.Y);
    CHECK(*k.Y == VertexSet{0});

    // a balanced hint caps the search but the lex-least minimum is still found
    SeparatorSearch h = balanced_separator_search(c12, WeightFn::uniform(12), 5, {{0, 6}});
    REQUIRE(h.Y);
    CHECK(*h.Y == VertexSet{0, 3});
}

TEST_CASE("balanced_separator_search is minimal against exhaustive enumeration") {
    SplitMix64 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.range(4, 12);
        Graph g = oracle::random_graph(n, rng.range(1, 3), 8, rng);
        int kind = trial % 3;
        WeightFn w = kind == 0 ? WeightFn::uniform(n) : kind == 1 ? WeightFn::dirac(n, rng.range(0, n - 1))
                                                                  : random_half(n, rng);
        int kmax = rng.range(1, 3);
        SeparatorSearch s = balanced_separator_search(g, w, kmax);
        int expect = min_separator_size(g, w, kmax);
        if (expect < 0) {
            CHECK_FALSE(s.Y);
            continue;
        }
        REQUIRE(s.Y);
        CHECK(static_cast<int>(s.Y->size()) == expect);
        CHECK(balanced_oracle(g, w, closed_nbhd(g, *s.Y)));
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("star_alpha_bound") {
    Graph pet = oracle::petersen();
    StarAlphaBound b = star_alpha_bound(pet, {0}, 3);
    CHECK(b.alpha == 3);
    CHECK(b.bound == 3);
    CHECK(b.ok);
    CHECK_FALSE(b.k1t_free);  // Petersen has claws
    CHECK(star_alpha_bound(pet, {0}, 4).k1t_free);

    StarAlphaBound empty = star_alpha_bound(pet, {}, 3);
    CHECK(empty.alpha == 0);
    CHECK(empty.ok);
    CHECK(star_alpha_bound(oracle::complete(6), {1, 4}, 2).alpha == 1);

    SplitMix64 rng(5);
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 60; ++trial) {
        int n = rng.range(5, 12);
        int t = rng.range(2, 4);
        Graph g = oracle::random_graph(n, 1, 3, rng);
        if (find_k1t(g, t)) continue;
        std::vector<Vertex> vs = g.vertices();
        rng.shuffle(vs);
        vs.resize(static_cast<std::size_t>(rng.range(0, 3)));
        VertexSet y = make_set(vs);
        StarAlphaBound r = star_alpha_bound(g, y, t);
        CHECK(r.k1t_free);
        CHECK(r.alpha == oracle::alpha(g, closed_nbhd(g, y)));
        CHECK(r.ok);
        ++tested;
    }
    CHECK(tested >= 30);
}

TEST_CASE("validate_decomposition and tia_of") {
    Graph c5 = oracle::cycle(5);
    TreeDecomposition one{{c5.vertices()}, {}};
    CHECK_FALSE(validate_decomposition(c5, one));
    CHECK(tia_of(c5, one) == 2);

    Graph p9 = oracle::path_graph(9);
    TreeDecomposition path;
    for (int i = 0; i + 1 < 9; ++i) {
        path.bags.push_back({i, i + 1});
        if (i) path.edges.emplace_back(i - 1, i);
    }
    CHECK_FALSE(validate_decomposition(p9, path));
    CHECK(tia_of(p9, path) == 1);

    TreeDecomposition dropped = path;
    dropped.bags[3] = {3};
    CHECK(validate_decomposition(p9, dropped));

    TreeDecomposition split = path;
    split.bags[7] = {0, 7, 8};  // vertex 0 in two far-apart bags
    CHECK(validate_decomposition(p9, split)->find("not connected") != std::string::npos);

    TreeDecomposition cyclic = path;
    cyclic.edges.emplace_back(0, 7);
    CHECK(validate_decomposition(p9, cyclic));
}

TEST_CASE("bs_to_tree_decomposition examples") {
    Graph p5 = oracle::path_graph(5);
    // a closed neighborhood in a path has α = 2
    TreeDecomposition td = bs_to_tree_decomposition(p5, 2, neighborhood_oracle(p5, 1));
    CHECK_FALSE(validate_decomposition(p5, td));
    CHECK(tia_of(p5, td) <= 10);
    CHECK_THROWS_AS(bs_to_tree_decomposition(oracle::path_graph(13), 1, neighborhood_oracle(oracle::path_graph(13), 1)),
                    ContractError);

    Graph single(1, {});
    TreeDecomposition s = bs_to_tree_decomposition(single, 1, neighborhood_oracle(single, 1));
    CHECK(s.node_count() == 1);
    CHECK(s.bags[0] == VertexSet{0});

    Graph empty(0, {});
    CHECK(bs_to_tree_decomposition(empty, 1, neighborhood_oracle(empty, 1)).node_count() == 1);

    Graph c12 = oracle::cycle(12);
    DecompositionStats stats;
    // no clique balances a cycle, two antipodal vertices do
    CHECK_THROWS_AS(bs_to_tree_decomposition(c12, 1, min_alpha_oracle(c12)), ContractError);
    TreeDecomposition c = bs_to_tree_decomposition(c12, 2, min_alpha_oracle(c12));
    CHECK_FALSE(validate_decomposition(c12, c));
    CHECK(tia_of(c12, c) <= 10);

    Graph p40 = oracle::path_graph(40);
    TreeDecomposition long_path = bs_to_tree_decomposition(p40, 2, neighborhood_oracle(p40, 1), &stats);
    CHECK_FALSE(validate_decomposition(p40, long_path));
    CHECK(tia_of(p40, long_path) <= 10);
    CHECK(stats.max_oracle_alpha == 2);
    CHECK(stats.oracle_calls >= 2);
    CHECK(long_path.node_count() > 1);

    // disconnected graphs give one tree
    Graph two(14, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 12}});
    TreeDecomposition d = bs_to_tree_decomposition(two, 2, min_alpha_oracle(two));
    CHECK_FALSE(validate_decomposition(two, d));
}

TEST_CASE("bs_to_tree_decomposition rejects a broken oracle") {
    Graph c12 = oracle::cycle(12);
    SeparatorOracle lazy = [](const WeightFn&) { return VertexSet{0}; };
    CHECK_THROWS_WITH_AS(bs_to_tree_decomposition(c12, 1, lazy), doctest::Contains("oracle call 1"), ContractError);
    SeparatorOracle fat = [&](const WeightFn&) { return c12.vertices(); };
    CHECK_THROWS_WITH_AS(bs_to_tree_decomposition(c12, 1, fat), doctest::Contains("alpha"), ContractError);
}

TEST_CASE("bs_to_tree_decomposition property: valid and within 5s") {
    SplitMix64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.range(1, 11);
        Graph g = trial % 4 == 0 ? oracle::random_tree(n, rng) : oracle::random_graph(n, rng.range(1, 4), 8, rng);
        SeparatorOracle o = min_alpha_oracle(g);
        for (int s = 1;; ++s) {
            try {
                TreeDecomposition td = bs_to_tree_decomposition(g, s, o);
                CHECK_FALSE(validate_decomposition(g, td));
                int produced = tia_of(g, td);
                CHECK(produced <= 5 * s);
                if (n <= 8) {
                    int exact = exact_tia_small(g);
                    CHECK(produced >= exact);
                    CHECK(s <= exact);
                }
                break;
            } catch (const ContractError&) {
                REQUIRE(s < n);
            }
        }
    }
}

TEST_CASE("exact_tia_small") {
    CHECK(exact_tia_small(oracle::path_graph(7)) == 1);
    SplitMix64 rng(3);
    CHECK(exact_tia_small(oracle::random_tree(9, rng)) == 1);
    CHECK(exact_tia_small(oracle::cycle(5)) == 2);
    CHECK(exact_tia_small(oracle::complete(5)) == 1);
    CHECK(exact_tia_small(Graph(0, {})) == 0);
    CHECK_THROWS_AS(exact_tia_small(oracle::cycle(11)), ResourceError);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = oracle::random_graph(rng.range(1, 7), rng.range(1, 6), 8, rng);
        CHECK(exact_tia_small(g) == tia_by_permutations(g));
    }
}

TEST_CASE("elimination_decomposition is valid") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_graph(rng.range(0, 18), rng.range(1, 5), 10, rng);
        CHECK_FALSE(validate_decomposition(g, elimination_decomposition(g)));
    }
}

TEST_CASE("mwis_on_decomposition examples") {
    Graph p4 = oracle::path_graph(4);
    TreeDecomposition edges{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
    MwisResult r = mwis_on_decomposition(p4, edges, {1, 2, 3, 1});
    CHECK(r.value == 4);
    CHECK(r.witness == VertexSet{0, 2});
    Graph k3 = oracle::complete(3);
    MwisResult k = mwis_on_decomposition(k3, TreeDecomposition{{{0, 1, 2}}, {}}, {5, 1, 2});
    CHECK(k.value == 5);
    CHECK(k.witness == VertexSet{0});
    CHECK_THROWS_AS(mwis_on_decomposition(k3, TreeDecomposition{{{0, 1}}, {}}, {5, 1, 2}), InputError);
    CHECK_THROWS_AS(mwis_on_decomposition(k3, TreeDecomposition{{{0, 1, 2}}, {}}, {5, 1}), InputError);
    CHECK_THROWS_AS(mwis_on_decomposition(Graph(8, {}),
                                          TreeDecomposition{{{0, 1, 2, 3, 4, 5, 6, 7}}, {}},
                                          std::vector<Rational>(8, 1), 100),
                    ResourceError);
}

TEST_CASE("mwis_on_decomposition equals brute force") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.range(1, 16);
        Graph g = oracle::random_graph(n, rng.range(1, 4), 10, rng);
        std::vector<Rational> w;
        for (int v = 0; v < n; ++v) w.emplace_back(rng.range(0, 9), rng.range(1, 4));
        MwisResult r = mwis_on_decomposition(g, elimination_decomposition(g), w);
        CHECK(r.value == mwis_bruteforce(g, w));
        CHECK(is_stable(g, r.witness));
        Rational sum = 0;
        for (Vertex v : r.witness) sum += w[static_cast<std::size_t>(v)];
        CHECK(sum == r.value);
    }
}
