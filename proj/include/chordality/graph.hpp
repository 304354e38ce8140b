#ifndef CHORDALITY_GRAPH_HPP
#define CHORDALITY_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chordality/problem.hpp"

namespace chordality {

// simple undirected graph; vertices are 0..n-1, neighbor lists kept sorted.
// invariants: no self-loops, no parallel edges, adjacency symmetric.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;
    // edges as (u,v) with u<v, sorted lexicographically
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

enum class ParseErrorKind {
    MalformedHeader,
    MalformedLine,
    VertexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    WrongEdgeCount,
};

struct ParseError : std::runtime_error {
    ParseError(ParseErrorKind k, int line, const std::string& msg)
        : std::runtime_error("parse error at line " + std::to_string(line) + ": " + msg),
          kind(k), line(line) {}
    ParseErrorKind kind;
    int line;
};

// external edge-list format:
//   c <comment>        (anywhere)
//   p <n> <m>          (exactly one header, before any edge)
//   e <u> <v>          (1-indexed; stored normalized u<v)
// accepts LF and CRLF. throws ParseError.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph parse_graph_file(const std::string& path);

// canonical form: header, then edges sorted with u<v, 1-indexed, LF endings.
std::string serialize_graph(const Graph& g);

// components as sorted vertex sets, ordered by smallest vertex
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    // mapping[new_id] = original id
    std::vector<Vertex> mapping;
};
// vertices need not be sorted; duplicates rejected
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

// all chordless cycles, each reported once, cyclically ordered starting at its
// smallest vertex with the smaller neighbor second. throws if g.n > max_n.
std::vector<std::vector<Vertex>> enumerate_induced_cycles(const Graph& g, int max_n = 24);

struct BipartiteResult {
    bool bipartite = false;
    std::vector<int8_t> coloring;     // valid when bipartite
    std::vector<Vertex> odd_cycle;    // some odd closed walk's vertex sequence otherwise
};
BipartiteResult is_bipartite(const Graph& g);

bool is_acyclic(const Graph& g);

// ---- small helpers shared across modules ----

// sorted set operations on VertexSet
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, Vertex v);
VertexSet sorted_unique(std::vector<Vertex> v);

// true iff `vertices` induce a connected non-empty subgraph
bool induces_connected(const Graph& g, const VertexSet& vertices);

// shortest cycle through any vertex (an induced cycle), empty if forest
std::vector<Vertex> find_shortest_cycle(const Graph& g);

} // namespace chordality

#endif
