#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

namespace dqw {

using VertexId = int;

struct Edge {
    VertexId i;
    VertexId j;
    double weight;
};

/// An undirected weighted graph, read as a Hamiltonian: the adjacency matrix
/// is real symmetric, with w_ij > 0 on edges and 0 elsewhere. Self-loops and
/// duplicate pairs are rejected at insertion.
class WeightedGraph {
  public:
    explicit WeightedGraph(int vertex_count);

    void add_edge(VertexId i, VertexId j, double weight);

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(VertexId i, VertexId j) const;
    /// Weight of (i, j), 0 if the pair is not an edge.
    double weight(VertexId i, VertexId j) const;

    Eigen::MatrixXd adjacency_matrix() const;

  private:
    void check_vertex(VertexId v) const;

    int vertex_count_;
    std::vector<Edge> edges_;
};

/// Path on M+1 vertices with couplings scale*sqrt(j(M+1-j)), j = 1..M.
/// With scale = 1 it transfers end to end at t = pi/2 (picking up a phase
/// of (-i)^M); scaling the weights by s rescales that time to pi/(2s).
WeightedGraph christandl_chain(int segments, double scale = 1.0);

/// Builds the full 2^k x 2^k XY Hamiltonian (1/2) sum_ij w_ij (XiXj + YiYj)
/// for k = vertex_count spins and restricts it to the k-dimensional
/// single-excitation block. The result equals adjacency_matrix(couplings).
/// Refuses k > 12.
Eigen::MatrixXd xy_single_excitation_block(const WeightedGraph& couplings);

// Line-oriented exchange format: "vertices <n>" header, then one
// "edge <i> <j> <w>" per edge. Weights are written with 17 significant
// digits so a round trip is exact.
void write_graph(std::ostream& out, const WeightedGraph& g);
WeightedGraph read_graph(std::istream& in);

}  // namespace dqw
