#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fusionkit/fusion_ring.hpp"

namespace fusionkit {

/// Bipartite graph with even vertices labelled by pairs (i,j) and odd vertices
/// by single labels k, carrying integer edge multiplicities. Vertex lists are
/// kept sorted so emission is deterministic.
struct BipartiteGraph {
    std::vector<std::pair<std::size_t, std::size_t>> evens;
    std::vector<std::size_t> odds;
    std::map<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>, long long> edges;
    std::string note; // empty, or "unverified chirality"

    long long multiplicity(std::pair<std::size_t, std::size_t> even, std::size_t odd) const;
    bool same_vertices(const BipartiteGraph& other) const;
    bool operator==(const BipartiteGraph& other) const {
        return evens == other.evens && odds == other.odds && edges == other.edges;
    }

    /// Even vertices as boxes "e_i_j", odd vertices as circles "o_k", parallel
    /// edges repeated, lexicographic node order. Byte-identical across runs.
    std::string to_dot() const;
};

/// Principal graph of the inclusion built from the ring: even vertices are all
/// pairs (i,j), odd vertices all labels k, edges with multiplicity N_{ij}^k;
/// the result is the connected component of (0,0).
BipartiteGraph principal_graph(const FusionRing& ring);

/// Same combinatorial construction read from the dual side. With the modular
/// flag set the output is graph-identical to principal_graph; unset, the graph
/// is emitted but tagged "unverified chirality".
BipartiteGraph dual_principal_graph(const FusionRing& ring, bool modular);

/// Index of the inclusion: equals the ring's global index.
double lr_index(const FusionRing& ring);

enum class Chirality { plus, minus };

/// Dimension of the intertwiner space between the sectors induced from the
/// pairs (i,j) and (k,l) with a single chirality: sum_m N_{mi}^k N_{mj}^l.
long long alpha_hom_count(const FusionRing& ring, std::pair<std::size_t, std::size_t> p,
                          std::pair<std::size_t, std::size_t> q,
                          Chirality chirality = Chirality::plus);

/// True iff every quantum dimension is 1 within the tolerance (the inclusion
/// is a crossed product by a finite-dimensional Hopf algebra).
bool is_depth_two(const FusionRing& ring, double tolerance = 1e-9);

} // namespace fusionkit
