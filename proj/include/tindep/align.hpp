#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tindep/graph.hpp"

namespace tindep {

enum class AlignKind { Wide, Spiky, Triangular, Mixed };

std::string to_string(AlignKind k);

/// (P, X) with X listed in the order given by the alignment.
struct Alignment {
    PathWitness P;
    std::vector<Vertex> order;
    std::vector<std::pair<int, int>> windows;  // minimal [i, j] index window per ordered vertex
    std::vector<AlignKind> kinds;              // per ordered vertex, never Mixed
    AlignKind kind = AlignKind::Mixed;

    bool consistent() const { return kind != AlignKind::Mixed; }
};

/// Kind of a single vertex relative to P; nullopt when it has no neighbor in P.
std::optional<AlignKind> attachment_kind(const Graph& g, const PathWitness& P, Vertex x);

/// The alignment on X, or nullopt when minimal windows overlap or some x misses P.
/// InputError when P is not an induced path or X meets P.
std::optional<Alignment> classify_alignment(const Graph& g, const PathWitness& P, const VertexSet& X);

/// Maximum set of pairwise disjoint closed intervals, earliest right endpoint first.
/// Returns indices into `windows` in sweep order.
std::vector<int> interval_stable_set(const std::vector<std::pair<int, int>>& windows);

struct ExtractOptions {
    bool require_size = true;          // |Y| >= 3s(d+1)
    bool verify_outside_paths = true;  // pairs of Y joined through G \ N[P]
    bool maximal = false;              // keep the whole largest class of the full stable set
};

struct Extraction {
    VertexSet S;
    Alignment alignment;          // (P, S), consistent
    std::vector<Vertex> stable;   // the 3s-vertex alignment the subset was taken from
};

/// Interval-graph extraction of an s-subset S of Y with (P, S) consistent.
/// ContractError naming the failed hypothesis; a point of P in d+1 intervals is reported
/// as a theta hypothesis violation.
Extraction extract_consistent_alignment(const Graph& g, const PathWitness& P, const VertexSet& Y, int s, int d,
                                        const ExtractOptions& opts = {});

/// x elements of `a`, in a's order, whose positions in `b` are increasing (reversed = false)
/// or decreasing (reversed = true). Elements missing from b are ignored.
std::optional<std::pair<std::vector<Vertex>, bool>> common_monotone_subsequence(const std::vector<Vertex>& a,
                                                                                const std::vector<Vertex>& b, int x);

}  // namespace tindep
