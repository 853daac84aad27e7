#include "fusionkit/lr_graphs.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace fusionkit {

long long BipartiteGraph::multiplicity(std::pair<std::size_t, std::size_t> even,
                                       std::size_t odd) const {
    auto it = edges.find({even, odd});
    return it == edges.end() ? 0 : it->second;
}

bool BipartiteGraph::same_vertices(const BipartiteGraph& other) const {
    return evens == other.evens && odds == other.odds;
}

std::string BipartiteGraph::to_dot() const {
    std::ostringstream os;
    os << "graph lr {\n";
    os << "  node [shape=box];\n";
    for (const auto& [i, j] : evens) os << "  e_" << i << "_" << j << ";\n";
    os << "  node [shape=circle];\n";
    for (std::size_t k : odds) os << "  o_" << k << ";\n";
    for (const auto& [key, mult] : edges) {
        const auto& [even, odd] = key;
        for (long long t = 0; t < mult; ++t)
            os << "  e_" << even.first << "_" << even.second << " -- o_" << odd << ";\n";
    }
    os << "}\n";
    return os.str();
}

BipartiteGraph principal_graph(const FusionRing& ring) {
    const std::size_t n = ring.rank();

    // Full bipartite graph: even (i,j) -- odd k with multiplicity N_{ij}^k.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> even_adj;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> odd_adj(n);
    for (const auto& [key, mult] : ring.tensor()) {
        (void)mult;
        even_adj[{key[0], key[1]}].push_back(key[2]);
        odd_adj[key[2]].push_back({key[0], key[1]});
    }

    // Breadth-first closure from (0,0); the sorted result sets make the
    // traversal order immaterial.
    std::set<std::pair<std::size_t, std::size_t>> even_seen;
    std::set<std::size_t> odd_seen;
    std::deque<std::pair<std::size_t, std::size_t>> even_queue;
    std::deque<std::size_t> odd_queue;
    even_seen.insert({0, 0});
    even_queue.push_back({0, 0});
    while (!even_queue.empty() || !odd_queue.empty()) {
        if (!even_queue.empty()) {
            auto v = even_queue.front();
            even_queue.pop_front();
            auto it = even_adj.find(v);
            if (it != even_adj.end())
                for (std::size_t k : it->second)
                    if (odd_seen.insert(k).second) odd_queue.push_back(k);
        } else {
            std::size_t k = odd_queue.front();
            odd_queue.pop_front();
            for (const auto& v : odd_adj[k])
                if (even_seen.insert(v).second) even_queue.push_back(v);
        }
    }

    BipartiteGraph g;
    g.evens.assign(even_seen.begin(), even_seen.end());
    g.odds.assign(odd_seen.begin(), odd_seen.end());
    for (const auto& [key, mult] : ring.tensor()) {
        std::pair<std::size_t, std::size_t> even{key[0], key[1]};
        if (even_seen.count(even) && odd_seen.count(key[2]))
            g.edges[{even, key[2]}] = mult;
    }
    return g;
}

BipartiteGraph dual_principal_graph(const FusionRing& ring, bool modular) {
    BipartiteGraph g = principal_graph(ring);
    if (!modular) g.note = "unverified chirality";
    return g;
}

double lr_index(const FusionRing& ring) { return ring.global_index(); }

long long alpha_hom_count(const FusionRing& ring, std::pair<std::size_t, std::size_t> p,
                          std::pair<std::size_t, std::size_t> q, Chirality) {
    const std::size_t n = ring.rank();
    if (p.first >= n || p.second >= n || q.first >= n || q.second >= n)
        throw input_error("label index out of range");
    // <alpha_{(i,j)}, alpha_{(k,l)}> = <lambda (rho_i x rho_j), rho_k x rho_l>
    // with lambda = sum_m rho_m x rho_m; the count is chirality-independent.
    long long total = 0;
    for (std::size_t m = 0; m < n; ++m)
        total += ring.N(m, p.first, q.first) * ring.N(m, p.second, q.second);
    return total;
}

bool is_depth_two(const FusionRing& ring, double tolerance) {
    DimensionVector dv = ring.dims(tolerance);
    return std::all_of(dv.d.begin(), dv.d.end(),
                       [&](double d) { return std::abs(d - 1.0) <= tolerance; });
}

} // namespace fusionkit
