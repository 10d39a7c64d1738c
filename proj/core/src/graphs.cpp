#include "upb/graphs.hpp"

#include <algorithm>
#include <sstream>

#include "upb/numerics.hpp"

namespace upb {

bool OrthGraph::has_edge(int a, int b) const {
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

int OrthGraph::degree(int v) const {
    int deg = 0;
    for (const auto& [a, b] : edges) {
        if (a == v || b == v) ++deg;
    }
    return deg;
}

void OrthGraph::add_edge(int a, int b) {
    if (a == b) return;
    if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
        throw DimensionError("add_edge: vertex index out of range");
    if (a > b) std::swap(a, b);
    const auto pos = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b));
    if (pos != edges.end() && *pos == std::make_pair(a, b)) return;
    edges.insert(pos, {a, b});
}

std::string vertex_label(const OrthGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw DimensionError("vertex_label: index out of range");
    if (v < g.half) return "v" + std::to_string(v);
    return "w" + std::to_string(v - g.half);
}

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

void check_db(int d, int b) {
    if (b < 0) throw DomainError("graph parameter b must be nonnegative");
    if (d < 2 * b + 4) throw DomainError("graph family needs d >= 2b + 4");
}

} // namespace

OrthGraph graph_D(int d, int b) {
    check_db(d, b);
    const int m = d - b;
    OrthGraph g{m, {}};
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            g.add_edge(i, j);         // v_i -- v_j
            g.add_edge(m + i, m + j); // w_i -- w_j
        }
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (mod(j - i, m) <= b) g.add_edge(i, m + j);
        }
    }
    return g;
}

OrthGraph graph_C(int d, int b) {
    check_db(d, b);
    const int m = d - b;
    OrthGraph g{m, {}};
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const int ell = mod(j - i, m); // in [0, m), so ell < d - b always
            if (ell > b) g.add_edge(i, m + j);
        }
    }
    return g;
}

OrthGraph graph_C_layer(int d, int b, int r, int s) {
    check_db(d, b);
    if (r < 1 || s < 1) throw DomainError("graph_C_layer needs r, s >= 1");
    if (s + r > d - b) throw DomainError("graph_C_layer needs s + r <= d - b");
    const int m = d - b;
    OrthGraph g{m, {}};
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const int ell = mod(j - i, m);
            if (ell >= s && ell < s + r) g.add_edge(i, m + j);
        }
    }
    return g;
}

OrthGraph graph_Y(int k) {
    if (k < 1) throw DomainError("graph_Y needs k >= 1");
    const int m = 2 * k + 2;
    OrthGraph g{m, {}};
    for (int i = 0; i < m; ++i) {
        g.add_edge(i, mod(i + 1, m));         // v-cycle
        g.add_edge(m + i, m + mod(i + 1, m)); // w-cycle
        g.add_edge(i, m + i);                 // rung
    }
    return g;
}

OrthGraph graph_X(int k) { return complement(graph_Y(k)); }

OrthGraph graph_union(const OrthGraph& g1, const OrthGraph& g2) {
    if (g1.half != g2.half) throw DimensionError("graph_union: vertex count mismatch");
    OrthGraph out = g1;
    for (const auto& [a, b] : g2.edges) out.add_edge(a, b);
    return out;
}

OrthGraph complement(const OrthGraph& g) {
    OrthGraph out{g.half, {}};
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) out.add_edge(a, b);
        }
    }
    return out;
}

bool is_complete(const OrthGraph& g) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    return g.edge_count() == n * (n - 1) / 2;
}

bool contains(const OrthGraph& outer, const OrthGraph& inner) {
    if (outer.half != inner.half) throw DimensionError("contains: vertex count mismatch");
    return std::includes(outer.edges.begin(), outer.edges.end(), inner.edges.begin(),
                         inner.edges.end());
}

OrthGraph orthogonality_graph_of(const std::vector<CVector>& vectors, const Tolerances& tol) {
    tol.validate();
    if (vectors.empty() || vectors.size() % 2 != 0)
        throw DimensionError("orthogonality_graph_of: need a positive even number of vectors");
    const Eigen::Index len = vectors.front().size();
    for (const CVector& v : vectors) {
        if (v.size() != len) throw DimensionError("orthogonality_graph_of: length mismatch");
    }
    const int n = static_cast<int>(vectors.size());
    OrthGraph g{n / 2, {}};
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const double scale = vectors[a].norm() * vectors[b].norm();
            if (std::abs(inner_product(vectors[a], vectors[b])) <= tol.orth_tol * scale)
                g.add_edge(a, b);
        }
    }
    return g;
}

std::string to_dot(const OrthGraph& g) {
    std::ostringstream out;
    out << "graph {\n";
    for (const auto& [a, b] : g.edges)
        out << "  \"" << vertex_label(g, a) << "\" -- \"" << vertex_label(g, b) << "\";\n";
    out << "}\n";
    return out.str();
}

std::string to_edge_list(const OrthGraph& g) {
    std::ostringstream out;
    for (const auto& [a, b] : g.edges)
        out << vertex_label(g, a) << " -- " << vertex_label(g, b) << "\n";
    return out.str();
}

} // namespace upb
