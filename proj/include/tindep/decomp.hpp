#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tindep/graph.hpp"
#include "tindep/weights.hpp"

namespace tindep {

struct TreeDecomposition {
    std::vector<VertexSet> bags;  // node -> bag
    std::vector<Edge> edges;      // tree edges between node ids

    int node_count() const { return static_cast<int>(bags.size()); }
};

struct BalanceReport {
    bool balanced = false;
    Rational heaviest = 0;  // weight of the heaviest component of G \ X
};

/// ContractError when w is not normal.
BalanceReport is_balanced(const Graph& g, const WeightFn& w, const VertexSet& X);

struct SeparatorSearch {
    std::optional<VertexSet> Y;  // minimum size, lexicographically least among ties
    BalanceReport balance;
};

/// Smallest Y with |Y| <= kmax and N[Y] w-balanced. A balanced hint caps the sizes tried.
SeparatorSearch balanced_separator_search(const Graph& g, const WeightFn& w, int kmax,
                                          const std::vector<VertexSet>& hints = {});

struct StarAlphaBound {
    int alpha = 0;  // α(G[N[Y]])
    int bound = 0;  // |Y|·t
    bool ok = false;
    bool k1t_free = false;
};

/// ResourceError when N[Y] exceeds the brute-force cap.
StarAlphaBound star_alpha_bound(const Graph& g, const VertexSet& Y, int t);

/// Returns a w-balanced set for the normal weight function it is given.
using SeparatorOracle = std::function<VertexSet(const WeightFn&)>;

/// X = N[Y] for the smallest Y found by balanced_separator_search.
SeparatorOracle neighborhood_oracle(const Graph& g, int kmax);
/// Balanced set of least α (then least size, then lexicographically least). n <= 16.
SeparatorOracle min_alpha_oracle(const Graph& g);

struct DecompositionStats {
    int oracle_calls = 0;
    int max_oracle_alpha = 0;
};

/// Recursive construction from balanced separators with α <= s; every bag has α <= 5s.
/// ContractError naming the call when the oracle breaks its contract.
TreeDecomposition bs_to_tree_decomposition(const Graph& g, int s, const SeparatorOracle& oracle,
                                           DecompositionStats* stats = nullptr);

/// nullopt when valid, otherwise the violated condition.
std::optional<std::string> validate_decomposition(const Graph& g, const TreeDecomposition& td);
/// Max α over bags.
int tia_of(const Graph& g, const TreeDecomposition& td);

/// Exact tree independence number by a DP over elimination orders. ResourceError when n > 10.
int exact_tia_small(const Graph& g);

/// Decomposition from the min-degree elimination order (ties to smaller id).
TreeDecomposition elimination_decomposition(const Graph& g);

struct MwisResult {
    Rational value = 0;
    VertexSet witness;
};

/// Exact maximum weight stable set by DP over the bags' stable subsets.
/// ResourceError when a bag has more than `max_states` stable subsets.
MwisResult mwis_on_decomposition(const Graph& g, const TreeDecomposition& td, const std::vector<Rational>& weights,
                                 std::int64_t max_states = 2'000'000);

}  // namespace tindep
