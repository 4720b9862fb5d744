#include "conerig/body_bar.hpp"

namespace conerig {

BodyBarGraph body_bar_graph(const Multigraph& H) {
    std::vector<int> deg(H.n_vertices, 0);
    for (auto [u, v] : H.edges) {
        if (u == v) throw std::invalid_argument("body_bar_graph: loop in multigraph");
        if (u < 0 || u >= H.n_vertices || v < 0 || v >= H.n_vertices)
            throw std::invalid_argument("body_bar_graph: edge endpoint out of range");
        ++deg[u];
        ++deg[v];
    }
    for (int v = 0; v < H.n_vertices; ++v)
        if (deg[v] == 0)
            throw std::invalid_argument("body_bar_graph: isolated vertex " + std::to_string(v + 1));

    BodyBarGraph out;
    std::vector<int> body_start(H.n_vertices, 0);
    int n = 0;
    for (int v = 0; v < H.n_vertices; ++v) {
        body_start[v] = n;
        n += deg[v];
        for (int j = 0; j < deg[v]; ++j) out.body_of.push_back(v);
    }

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < H.n_vertices; ++v)
        for (int a = 0; a < deg[v]; ++a)
            for (int b = a + 1; b < deg[v]; ++b)
                edges.emplace_back(body_start[v] + a, body_start[v] + b);

    // each multigraph edge consumes the next unused boundary vertex of each body
    std::vector<int> used(H.n_vertices, 0);
    for (auto [u, v] : H.edges) {
        int a = body_start[u] + used[u]++;
        int b = body_start[v] + used[v]++;
        edges.emplace_back(a, b);
        out.bars.emplace_back(a, b);
    }
    out.graph = Graph(n, edges);
    return out;
}

}  // namespace conerig
