#pragma once

#include "conerig/types.hpp"

namespace conerig {

/// Multigraph input for body-bar construction: parallel edges allowed, loops not.
struct Multigraph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

struct BodyBarGraph {
    Graph graph;
    std::vector<int> body_of;  // vertex -> body index (vertex of the multigraph)
    std::vector<std::pair<int, int>> bars;  // the edges that realize the multigraph edges
};

/// Expands each multigraph vertex v into a complete graph on deg(v) vertices
/// and realizes each multigraph edge as one bar between distinct body
/// vertices, with the bars pairwise disjoint.
BodyBarGraph body_bar_graph(const Multigraph& H);

}  // namespace conerig
