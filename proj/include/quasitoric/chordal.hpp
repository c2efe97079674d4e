#ifndef QUASITORIC_CHORDAL_HPP
#define QUASITORIC_CHORDAL_HPP

#include <optional>
#include <vector>

#include "quasitoric/index_set.hpp"

namespace quasitoric {

/// Bipartite graph of a 2-way index set: left vertices are row states,
/// right vertices are column states, edges are the allowed cells.
struct BipartiteGraph {
    int m = 0, n = 0;
    std::vector<std::vector<bool>> adj;  // m x n

    bool edge(int i, int j) const { return adj[i][j]; }
};

BipartiteGraph build_graph(const IndexSet& s);  // requires k == 2

struct GraphVertex {
    bool left;
    int idx;  // 0-based within its side
    bool operator==(const GraphVertex&) const = default;
};

/// Evidence that a graph is not doubly chordal bipartite: either an induced
/// (chordless) cycle of length >= 6, listed in cyclic order, or a
/// double-square — two 4-cycles glued along one shared edge with no further
/// edges among the six vertices.  For a double-square the convention is that
/// (vertices[0], vertices[1]) is the shared edge, followed by the two
/// (left,right) completing pairs.
struct ChordalityWitness {
    enum class Kind { InducedCycle, DoubleSquare };
    Kind kind;
    std::vector<GraphVertex> vertices;
};

/// True iff the witness really is what it claims to be in G.
bool verify_witness(const BipartiteGraph& g, const ChordalityWitness& w);

/// nullopt iff G has no induced cycle of length >= 6 and no induced
/// double-square.  The search is deterministic (ascending vertex order), so
/// the witness returned for a fixed graph is stable.
std::optional<ChordalityWitness> find_chordality_violation(const BipartiteGraph& g);

inline bool is_doubly_chordal_bipartite(const BipartiteGraph& g) {
    return !find_chordality_violation(g).has_value();
}

/// The 2-way model of S has rational maximum likelihood estimates exactly
/// when its graph is doubly chordal bipartite.
bool ml_degree_one_2way(const IndexSet& s);

}  // namespace quasitoric

#endif
