#include "dqw/graph.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dqw {

WeightedGraph::WeightedGraph(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 0) {
        throw std::invalid_argument("WeightedGraph: negative vertex count");
    }
}

void WeightedGraph::check_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count_) {
        throw std::invalid_argument("WeightedGraph: vertex " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(vertex_count_) + ")");
    }
}

void WeightedGraph::add_edge(VertexId i, VertexId j, double weight) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) {
        throw std::invalid_argument("WeightedGraph: self-loop on vertex " + std::to_string(i));
    }
    if (!(weight > 0.0) || !std::isfinite(weight)) {
        throw std::invalid_argument("WeightedGraph: edge weight must be finite and > 0, got " +
                                    std::to_string(weight));
    }
    if (has_edge(i, j)) {
        throw std::invalid_argument("WeightedGraph: duplicate edge (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
    }
    edges_.push_back({i, j, weight});
}

bool WeightedGraph::has_edge(VertexId i, VertexId j) const {
    for (const Edge& e : edges_) {
        if ((e.i == i && e.j == j) || (e.i == j && e.j == i)) return true;
    }
    return false;
}

double WeightedGraph::weight(VertexId i, VertexId j) const {
    check_vertex(i);
    check_vertex(j);
    for (const Edge& e : edges_) {
        if ((e.i == i && e.j == j) || (e.i == j && e.j == i)) return e.weight;
    }
    return 0.0;
}

Eigen::MatrixXd WeightedGraph::adjacency_matrix() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(vertex_count_, vertex_count_);
    for (const Edge& e : edges_) {
        m(e.i, e.j) = e.weight;
        m(e.j, e.i) = e.weight;
    }
    return m;
}

WeightedGraph christandl_chain(int segments, double scale) {
    if (segments < 1) {
        throw std::invalid_argument("christandl_chain: need at least one segment");
    }
    if (!(scale > 0.0)) {
        throw std::invalid_argument("christandl_chain: scale must be > 0");
    }
    WeightedGraph g(segments + 1);
    for (int j = 1; j <= segments; ++j) {
        g.add_edge(j - 1, j, scale * std::sqrt(double(j) * double(segments + 1 - j)));
    }
    return g;
}

Eigen::MatrixXd xy_single_excitation_block(const WeightedGraph& couplings) {
    const int k = couplings.vertex_count();
    if (k > 12) {
        throw std::invalid_argument("xy_single_excitation_block: refusing " + std::to_string(k) +
                                    " spins (2^k blowup; limit is 12)");
    }
    const std::size_t dim = std::size_t(1) << k;
    // (1/2)(XiXj + YiYj) acts as |01><10| + |10><01| on the (i, j) pair,
    // i.e. it hops an excitation between sites of opposite occupation.
    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(dim, dim);
    for (const Edge& e : couplings.edges()) {
        const std::size_t bi = std::size_t(1) << e.i;
        const std::size_t bj = std::size_t(1) << e.j;
        for (std::size_t s = 0; s < dim; ++s) {
            const bool occ_i = (s & bi) != 0;
            const bool occ_j = (s & bj) != 0;
            if (occ_i != occ_j) {
                full(s ^ bi ^ bj, s) += e.weight;
            }
        }
    }
    // Single-excitation basis: |e_a> has only bit a set.
    Eigen::MatrixXd block(k, k);
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            block(a, b) = full(std::size_t(1) << a, std::size_t(1) << b);
        }
    }
    return block;
}

namespace {

std::string format_weight(double w) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", w);
    return buf;
}

}  // namespace

void write_graph(std::ostream& out, const WeightedGraph& g) {
    out << "vertices " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) {
        out << "edge " << e.i << " " << e.j << " " << format_weight(e.weight) << "\n";
    }
}

WeightedGraph read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    WeightedGraph g(0);
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        if (key == "vertices") {
            if (n >= 0 || !(ls >> n) || n < 0) {
                throw std::runtime_error("graph parse error at line " + std::to_string(line_no) +
                                         ": bad vertices header");
            }
            g = WeightedGraph(n);
        } else if (key == "edge") {
            int i, j;
            double w;
            if (n < 0 || !(ls >> i >> j >> w)) {
                throw std::runtime_error("graph parse error at line " + std::to_string(line_no) +
                                         ": bad edge line");
            }
            g.add_edge(i, j, w);
        } else {
            throw std::runtime_error("graph parse error at line " + std::to_string(line_no) +
                                     ": unknown keyword '" + key + "'");
        }
    }
    if (n < 0) {
        throw std::runtime_error("graph parse error: missing vertices header");
    }
    return g;
}

}  // namespace dqw
