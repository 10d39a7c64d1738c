#pragma once

#include <string>
#include <utility>
#include <vector>

#include "upb/types.hpp"

namespace upb {

/// Simple graph on 2m vertices labeled v_0..v_{m-1}, w_0..w_{m-1}.
///
/// Vertex i in [0, m) is v_i; vertex m+i is w_i. Edges are kept as a sorted
/// list of (min, max) pairs so serialization is canonical.
struct OrthGraph {
    int half = 0;
    std::vector<std::pair<int, int>> edges;

    int vertex_count() const { return 2 * half; }
    std::size_t edge_count() const { return edges.size(); }
    bool has_edge(int a, int b) const;
    int degree(int v) const;

    /// Inserts an edge (ignoring duplicates and loops), keeping order.
    void add_edge(int a, int b);
};

/// "v3" / "w1" style label of vertex index i.
std::string vertex_label(const OrthGraph& g, int v);

/// Two cliques K_{d-b} on the v's and w's plus the cross band
/// v_i ~ w_j for (j - i) mod (d-b) in {0..b}. Requires d >= 2b + 4.
OrthGraph graph_D(int d, int b);

/// Complement of graph_D on the same vertices: only cross edges with
/// b < (j - i) mod (d-b) < d - b.
OrthGraph graph_C(int d, int b);

/// The r-regular band layer of graph_C: v_i ~ w_j iff
/// (j - i) mod (d-b) in {s .. s+r-1}. Requires r, s >= 1 and s + r <= d - b.
OrthGraph graph_C_layer(int d, int b, int r, int s);

/// Prism graph on 4k+4 vertices: two (2k+2)-cycles joined by rungs v_i ~ w_i.
OrthGraph graph_Y(int k);

/// Complement of the prism graph.
OrthGraph graph_X(int k);

/// Edge union over a shared vertex set.
OrthGraph graph_union(const OrthGraph& g1, const OrthGraph& g2);

/// Complement within the complete graph on the same vertices.
OrthGraph complement(const OrthGraph& g);

bool is_complete(const OrthGraph& g);

/// True iff every edge of inner is an edge of outer (same vertex count).
bool contains(const OrthGraph& outer, const OrthGraph& inner);

/// Graph with an edge wherever |<a|b>| <= orth_tol * |a||b|. The vector
/// count must be even and positive; the first half are the v's.
OrthGraph orthogonality_graph_of(const std::vector<CVector>& vectors, const Tolerances& tol = {});

/// DOT output with deterministic edge ordering.
std::string to_dot(const OrthGraph& g);

/// One "v0 -- w1" line per edge, sorted.
std::string to_edge_list(const OrthGraph& g);

} // namespace upb
