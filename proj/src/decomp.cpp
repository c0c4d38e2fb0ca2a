#include "tindep/decomp.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <numeric>
#include <queue>

#include "tindep/detect.hpp"
#include "tindep/error.hpp"

namespace tindep {

namespace {

void check_weights(const Graph& g, const WeightFn& w) {
    if (w.size() != g.size()) throw InputError("weight function has " + std::to_string(w.size()) +
                                               " entries for a graph on " + std::to_string(g.size()) + " vertices");
}

bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < n - k + i) {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

std::string set_string(const VertexSet& x) {
    std::string out = "{";
    for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + std::to_string(x[i]);
    return out + "}";
}

}  // namespace

BalanceReport is_balanced(const Graph& g, const WeightFn& w, const VertexSet& X) {
    check_weights(g, w);
    g.check_set(X);
    if (!w.normal()) throw ContractError("weight function is not normal (total " + rational_string(w.total()) + ")");
    BalanceReport r;
    for (const VertexSet& d : components(g, X)) r.heaviest = std::max(r.heaviest, w.of(d));
    r.balanced = 2 * r.heaviest <= 1;
    return r;
}

SeparatorSearch balanced_separator_search(const Graph& g, const WeightFn& w, int kmax,
                                          const std::vector<VertexSet>& hints) {
    check_weights(g, w);
    if (!w.normal()) throw ContractError("weight function is not normal (total " + rational_string(w.total()) + ")");
    int cap = std::min(kmax, g.size());
    for (const VertexSet& h : hints) {
        VertexSet y = make_set(h);
        g.check_set(y);
        if (static_cast<int>(y.size()) <= cap && is_balanced(g, w, closed_neighborhood(g, y)).balanced)
            cap = static_cast<int>(y.size());
    }
    SeparatorSearch out;
    out.balance.heaviest = 2;  // above any attainable weight
    for (int k = 0; k <= cap; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        std::iota(idx.begin(), idx.end(), 0);
        do {
            VertexSet y(idx.begin(), idx.end());
            BalanceReport r = is_balanced(g, w, closed_neighborhood(g, y));
            if (r.balanced) {
                out.Y = std::move(y);
                out.balance = r;
                return out;
            }
            if (r.heaviest < out.balance.heaviest) out.balance = r;
        } while (next_combination(idx, g.size()));
    }
    return out;
}

StarAlphaBound star_alpha_bound(const Graph& g, const VertexSet& Y, int t) {
    g.check_set(Y);
    if (t < 1) throw InputError("t must be positive");
    StarAlphaBound r;
    r.alpha = stable_number(g, closed_neighborhood(g, Y));
    r.bound = static_cast<int>(Y.size()) * t;
    r.ok = r.alpha <= r.bound;
    r.k1t_free = !find_k1t(g, t).has_value();
    return r;
}

SeparatorOracle neighborhood_oracle(const Graph& g, int kmax) {
    return [g, kmax](const WeightFn& w) {
        SeparatorSearch s = balanced_separator_search(g, w, kmax);
        if (!s.Y) throw ContractError("no Y with |Y| <= " + std::to_string(kmax) + " has N[Y] balanced");
        return closed_neighborhood(g, *s.Y);
    };
}

SeparatorOracle min_alpha_oracle(const Graph& g) {
    const int n = g.size();
    if (n > 16) throw ResourceError("min-alpha oracle is limited to 16 vertices");
    const std::uint32_t full = n == 0 ? 0 : (1u << n);
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v)) nbr[static_cast<std::size_t>(v)] |= 1u << u;
    auto alpha = std::make_shared<std::vector<std::uint8_t>>(std::max<std::uint32_t>(full, 1), 0);
    for (std::uint32_t m = 1; m < full; ++m) {
        int v = std::countr_zero(m);
        std::uint32_t rest = m & (m - 1);
        (*alpha)[m] = std::max((*alpha)[rest],
                               static_cast<std::uint8_t>(1 + (*alpha)[rest & ~nbr[static_cast<std::size_t>(v)]]));
    }
    auto as_set = [n](std::uint32_t m) {
        VertexSet x;
        for (Vertex v = 0; v < n; ++v)
            if (m >> v & 1u) x.push_back(v);
        return x;
    };
    auto order = std::make_shared<std::vector<std::uint32_t>>(std::max<std::uint32_t>(full, 1));
    std::iota(order->begin(), order->end(), 0u);
    std::stable_sort(order->begin(), order->end(), [&](std::uint32_t a, std::uint32_t b) {
        if ((*alpha)[a] != (*alpha)[b]) return (*alpha)[a] < (*alpha)[b];
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
        return as_set(a) < as_set(b);
    });
    return [g, order, as_set](const WeightFn& w) {
        for (std::uint32_t m : *order) {
            VertexSet x = as_set(m);
            if (is_balanced(g, w, x).balanced) return x;
        }
        return g.vertices();
    };
}

TreeDecomposition bs_to_tree_decomposition(const Graph& g, int s, const SeparatorOracle& oracle,
                                           DecompositionStats* stats) {
    if (s < 1) throw InputError("s must be positive");
    const int n = g.size();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    DecompositionStats local;
    DecompositionStats& st = stats ? *stats : local;

    struct Region {
        VertexSet D;
        VertexSet S;  // N(D)
        int parent;
    };
    std::vector<Region> work;
    int first_root = -1;
    for (VertexSet& comp : components(g, {})) {
        // Later components hang off the first root.
        work.push_back({std::move(comp), {}, first_root});
        while (!work.empty()) {
            Region r = std::move(work.back());
            work.pop_back();
            const int node = td.node_count();
            VertexSet region = set_union(r.D, r.S);
            auto attach = [&](VertexSet bag) {
                td.bags.push_back(std::move(bag));
                if (r.parent >= 0) td.edges.emplace_back(r.parent, node);
            };
            if (static_cast<int>(region.size()) <= 5 * s ||
                (region.size() <= static_cast<std::size_t>(kDefaultStableCap) && stable_number(g, region) <= 5 * s)) {
                attach(std::move(region));
                if (r.parent < 0) first_root = node;
                continue;
            }
            StableSet boundary = max_stable_bruteforce(g, r.S);
            WeightFn w = boundary.size <= 3 * s ? WeightFn::uniform_on(n, r.D) : WeightFn::uniform_on(n, boundary.witness);
            const int call = ++st.oracle_calls;
            const std::string where = "oracle call " + std::to_string(call);
            VertexSet X = make_set(oracle(w));
            g.check_set(X);
            BalanceReport bal = is_balanced(g, w, X);
            if (!bal.balanced)
                throw ContractError(where + " returned an unbalanced set " + set_string(X) + " (heaviest component " +
                                    rational_string(bal.heaviest) + ")");
            int ax = stable_number(g, X);
            st.max_oracle_alpha = std::max(st.max_oracle_alpha, ax);
            if (ax > s)
                throw ContractError(where + " returned " + set_string(X) + " with alpha " + std::to_string(ax) +
                                    " > s = " + std::to_string(s));
            VertexSet hit = set_intersection(X, r.D);
            if (hit.empty()) throw ContractError(where + " returned a set missing the region");
            attach(set_union(r.S, hit));
            if (r.parent < 0) first_root = node;
            for (VertexSet& c : components_within(g, set_difference(r.D, hit))) {
                VertexSet nc = open_neighborhood(g, c);
                if (stable_number(g, nc) > 4 * s)
                    throw ContractError(where + ": child boundary " + set_string(nc) + " has alpha above 4s");
                work.push_back({std::move(c), std::move(nc), node});
            }
        }
    }
    return td;
}

std::optional<std::string> validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    const int m = td.node_count();
    if (m == 0) return "decomposition has no nodes";
    if (static_cast<int>(td.edges.size()) != m - 1) return "tree has " + std::to_string(td.edges.size()) +
                                                           " edges for " + std::to_string(m) + " nodes";
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (auto [a, b] : td.edges) {
        if (a < 0 || b < 0 || a >= m || b >= m || a == b) return "bad tree edge " + std::to_string(a) + "-" + std::to_string(b);
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    auto reach = [&](const std::vector<char>& allowed, int start) {
        std::vector<char> seen(static_cast<std::size_t>(m), 0);
        std::queue<int> q;
        q.push(start);
        seen[static_cast<std::size_t>(start)] = 1;
        int count = 1;
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int b : adj[static_cast<std::size_t>(a)])
                if (allowed[static_cast<std::size_t>(b)] && !seen[static_cast<std::size_t>(b)]) {
                    seen[static_cast<std::size_t>(b)] = 1;
                    ++count;
                    q.push(b);
                }
        }
        return count;
    };
    if (reach(std::vector<char>(static_cast<std::size_t>(m), 1), 0) != m) return "tree is not connected";
    std::vector<std::vector<int>> holders(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < m; ++i) {
        const VertexSet& bag = td.bags[static_cast<std::size_t>(i)];
        if (make_set(bag) != bag) return "bag " + std::to_string(i) + " is not a sorted set";
        for (Vertex v : bag) {
            if (!g.valid_vertex(v)) return "bag " + std::to_string(i) + " has unknown vertex " + std::to_string(v);
            holders[static_cast<std::size_t>(v)].push_back(i);
        }
    }
    for (Vertex v = 0; v < g.size(); ++v) {
        const auto& h = holders[static_cast<std::size_t>(v)];
        if (h.empty()) return "vertex " + std::to_string(v) + " is in no bag";
        std::vector<char> allowed(static_cast<std::size_t>(m), 0);
        for (int i : h) allowed[static_cast<std::size_t>(i)] = 1;
        if (reach(allowed, h.front()) != static_cast<int>(h.size()))
            return "bags containing vertex " + std::to_string(v) + " are not connected";
    }
    for (auto [u, v] : g.edges()) {
        const auto& hu = holders[static_cast<std::size_t>(u)];
        bool covered = std::any_of(hu.begin(), hu.end(),
                                   [&](int i) { return set_contains(td.bags[static_cast<std::size_t>(i)], v); });
        if (!covered) return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
    }
    return std::nullopt;
}

int tia_of(const Graph& g, const TreeDecomposition& td) {
    int best = 0;
    for (const VertexSet& bag : td.bags) best = std::max(best, stable_number(g, bag));
    return best;
}

int exact_tia_small(const Graph& g) {
    const int n = g.size();
    if (n > 10) throw ResourceError("exact tree independence number is limited to 10 vertices");
    if (n == 0) return 0;
    const std::uint32_t full = 1u << n;
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v)) nbr[static_cast<std::size_t>(v)] |= 1u << u;
    std::vector<int> alpha(full, 0);
    for (std::uint32_t m = 1; m < full; ++m) {
        int v = std::countr_zero(m);
        std::uint32_t rest = m & (m - 1);
        alpha[m] = std::max(alpha[rest], 1 + alpha[rest & ~nbr[static_cast<std::size_t>(v)]]);
    }
    // Vertices outside S ∪ {v} reachable from v through S.
    auto later = [&](std::uint32_t S, int v) {
        std::uint32_t seen = 1u << v, frontier = 1u << v, out = 0;
        while (frontier) {
            int a = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint32_t nb = nbr[static_cast<std::size_t>(a)] & ~seen;
            seen |= nb;
            out |= nb & ~S;
            frontier |= nb & S;
        }
        return out;
    };
    std::vector<int> f(full, n + 1);
    f[0] = 0;
    for (std::uint32_t S = 1; S < full; ++S)
        for (std::uint32_t rest = S; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            std::uint32_t prev = S & ~(1u << v);
            f[S] = std::min(f[S], std::max(f[prev], alpha[later(prev, v) | 1u << v]));
        }
    return f[full - 1];
}

TreeDecomposition elimination_decomposition(const Graph& g) {
    const int n = g.size();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    std::vector<int> position(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> order;
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!gone[static_cast<std::size_t>(v)] &&
                (best < 0 || adj[static_cast<std::size_t>(v)].size() < adj[static_cast<std::size_t>(best)].size()))
                best = v;
        const VertexSet nb = adj[static_cast<std::size_t>(best)];
        VertexSet bag = nb;
        bag.insert(std::lower_bound(bag.begin(), bag.end(), best), best);
        td.bags.push_back(std::move(bag));
        for (Vertex a : nb) {
            VertexSet& na = adj[static_cast<std::size_t>(a)];
            na = set_union(na, nb);
            na.erase(std::remove(na.begin(), na.end(), a), na.end());
            na.erase(std::remove(na.begin(), na.end(), best), na.end());
        }
        gone[static_cast<std::size_t>(best)] = 1;
        position[static_cast<std::size_t>(best)] = step;
        order.push_back(best);
    }
    int previous_root = -1;
    for (int i = n - 1; i >= 0; --i) {
        // Parent: the earliest-eliminated later neighbor.
        Vertex v = order[static_cast<std::size_t>(i)];
        int parent = -1;
        for (Vertex u : td.bags[static_cast<std::size_t>(i)])
            if (u != v && (parent < 0 || position[static_cast<std::size_t>(u)] < parent))
                parent = position[static_cast<std::size_t>(u)];
        if (parent >= 0) {
            td.edges.emplace_back(parent, i);
        } else {
            if (previous_root >= 0) td.edges.emplace_back(previous_root, i);
            previous_root = i;
        }
    }
    return td;
}

MwisResult mwis_on_decomposition(const Graph& g, const TreeDecomposition& td, const std::vector<Rational>& weights,
                                 std::int64_t max_states) {
    if (static_cast<int>(weights.size()) != g.size())
        throw InputError("expected " + std::to_string(g.size()) + " weights, got " + std::to_string(weights.size()));
    if (auto bad = validate_decomposition(g, td)) throw InputError("invalid tree decomposition: " + *bad);
    const int m = td.node_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (auto [a, b] : td.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<int> parent(static_cast<std::size_t>(m), -1), pre;
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        pre.push_back(a);
        for (int b : adj[static_cast<std::size_t>(a)])
            if (!seen[static_cast<std::size_t>(b)]) {
                seen[static_cast<std::size_t>(b)] = 1;
                parent[static_cast<std::size_t>(b)] = a;
                stack.push_back(b);
            }
    }
    auto weight_of = [&](const VertexSet& x) {
        Rational total = 0;
        for (Vertex v : x) total += weights[static_cast<std::size_t>(v)];
        return total;
    };

    struct Entry {
        Rational value;
        int index;
    };
    struct Node {
        std::vector<VertexSet> stable;  // stable subsets of the bag
        std::vector<Rational> best;     // best weight in the subtree extending each
        std::map<VertexSet, Entry> up;  // keyed by intersection with the parent bag
    };
    std::vector<Node> nodes(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
        const VertexSet& bag = td.bags[static_cast<std::size_t>(a)];
        auto& list = nodes[static_cast<std::size_t>(a)].stable;
        VertexSet cur;
        auto grow = [&](auto&& self, std::size_t from) -> void {
            list.push_back(cur);
            if (static_cast<std::int64_t>(list.size()) > max_states)
                throw ResourceError("bag " + std::to_string(a) + " has more than " + std::to_string(max_states) +
                                    " stable subsets");
            for (std::size_t i = from; i < bag.size(); ++i) {
                Vertex v = bag[i];
                if (std::any_of(cur.begin(), cur.end(), [&](Vertex u) { return g.adjacent(u, v); })) continue;
                cur.push_back(v);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        grow(grow, 0);
    }
    std::vector<std::vector<int>> children(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a)
        if (int p = parent[static_cast<std::size_t>(a)]; p >= 0) children[static_cast<std::size_t>(p)].push_back(a);
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
        const int a = *it;
        Node& node = nodes[static_cast<std::size_t>(a)];
        for (const VertexSet& J : node.stable) {
            Rational total = weight_of(J);
            for (int c : children[static_cast<std::size_t>(a)]) {
                VertexSet key = set_intersection(J, td.bags[static_cast<std::size_t>(c)]);
                total += nodes[static_cast<std::size_t>(c)].up.at(key).value;
            }
            node.best.push_back(std::move(total));
        }
        const int p = parent[static_cast<std::size_t>(a)];
        if (p < 0) continue;
        const VertexSet& pbag = td.bags[static_cast<std::size_t>(p)];
        for (int i = 0; i < static_cast<int>(node.stable.size()); ++i) {
            VertexSet key = set_intersection(node.stable[static_cast<std::size_t>(i)], pbag);
            Rational value = node.best[static_cast<std::size_t>(i)] - weight_of(key);
            auto found = node.up.find(key);
            if (found == node.up.end()) node.up.emplace(std::move(key), Entry{std::move(value), i});
            else if (value > found->second.value) found->second = Entry{std::move(value), i};
        }
    }
    MwisResult result;
    const Node& root = nodes[0];
    int choice = 0;
    for (int i = 1; i < static_cast<int>(root.stable.size()); ++i)
        if (root.best[static_cast<std::size_t>(i)] > root.best[static_cast<std::size_t>(choice)]) choice = i;
    result.value = root.best[static_cast<std::size_t>(choice)];
    std::vector<int> chosen(static_cast<std::size_t>(m), -1);
    chosen[0] = choice;
    VertexSet picked;
    for (int a : pre) {
        const VertexSet& J = nodes[static_cast<std::size_t>(a)].stable[static_cast<std::size_t>(chosen[static_cast<std::size_t>(a)])];
        picked.insert(picked.end(), J.begin(), J.end());
        for (int c : children[static_cast<std::size_t>(a)])
            chosen[static_cast<std::size_t>(c)] =
                nodes[static_cast<std::size_t>(c)].up.at(set_intersection(J, td.bags[static_cast<std::size_t>(c)])).index;
    }
    result.witness = make_set(std::move(picked));
    return result;
}

}  // namespace tindep
