#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tindep/graph.hpp"
#include "tindep/patterns.hpp"

namespace tindep {

/// Subset: exhaustive over vertex subsets, n <= cap, lex-least witness.
/// Paths: exhaustive over induced paths within a step budget, any n.
/// Auto: Subset when n <= cap, Paths otherwise.
/// Heuristic: subset search on random balls; never asserts absence.
enum class Engine { Subset, Paths, Auto, Heuristic };

struct DetectOptions {
    Engine engine = Engine::Subset;
    int cap = 16;
    std::int64_t budget = 50'000'000;
    bool classical_prism = false;
    int restarts = 200;
    std::uint64_t seed = 1;
};

template <class W>
struct Detection {
    std::optional<W> witness;
    bool decided = false;  // false only when a heuristic search found nothing
};

Detection<ThetaWitness> find_theta(const Graph& g, const DetectOptions& opts = {});
Detection<PrismWitness> find_prism(const Graph& g, const DetectOptions& opts = {});
Detection<PyramidWitness> find_pyramid(const Graph& g, const DetectOptions& opts = {});

/// Lex-least center plus stable t-subset of its neighborhood. Exhaustive.
std::optional<K1tWitness> find_k1t(const Graph& g, int t);

/// All holes of length >= min_len in canonical cyclic order, sorted by vertex set.
std::vector<std::vector<Vertex>> find_holes(const Graph& g, int min_len, std::int64_t budget = 50'000'000);
/// All wheels whose hole has length >= min_hole_len, sorted by (hole set, hub).
std::vector<Wheel> find_wheels(const Graph& g, int min_hole_len, std::int64_t budget = 50'000'000);

struct ClassReport {
    bool member = false;
    bool decided = true;
    std::string violation;  // "theta", "prism", "k1t" or empty
    std::optional<ThetaWitness> theta;
    std::optional<PrismWitness> prism;
    std::optional<K1tWitness> k1t;
};

/// Membership in the class of (theta, prism, K_{1,t})-free graphs. Checks run in that order.
ClassReport in_class_Ct(const Graph& g, int t, const DetectOptions& opts = {});

}  // namespace tindep
