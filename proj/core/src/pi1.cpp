#include "properclass/pi1.hpp"

#include <algorithm>
#include <deque>

#include "properclass/errors.hpp"

namespace properclass {

EdgePathData edge_path_data(const SimplicialComplex& complex, int basepoint) {
    if (!complex.connected()) throw DisconnectedComplex("edge-path group needs a connected complex");
    if (basepoint < 0 || basepoint >= complex.num_vertices)
        throw Error("basepoint out of range");

    const auto& edges = complex.edges();
    EdgePathData out;
    out.basepoint = basepoint;
    Presentation& p = out.presentation;
    for (size_t e = 0; e < edges.size(); ++e)
        p.generator_names.push_back("e" + std::to_string(e));

    // breadth-first spanning tree
    std::vector<std::vector<std::pair<int, int>>> adj(complex.num_vertices);  // (other, edge)
    for (size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e][0]].push_back({edges[e][1], static_cast<int>(e)});
        adj[edges[e][1]].push_back({edges[e][0], static_cast<int>(e)});
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    out.edge_in_tree.assign(edges.size(), 0);
    out.tree_parent.assign(complex.num_vertices, -1);
    out.tree_parent_edge.assign(complex.num_vertices, -1);
    std::vector<char> seen(complex.num_vertices, 0);
    std::deque<int> queue{basepoint};
    seen[basepoint] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (auto [w, e] : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                out.edge_in_tree[e] = 1;
                out.tree_parent[w] = v;
                out.tree_parent_edge[w] = e;
                queue.push_back(w);
            }
    }

    for (size_t e = 0; e < edges.size(); ++e)
        if (out.edge_in_tree[e]) p.relators.push_back({static_cast<int>(e) + 1});
    if (complex.dim() >= 2)
        for (const auto& t : complex.simplices[2]) {
            int e01 = complex.simplex_index({t[0], t[1]});
            int e12 = complex.simplex_index({t[1], t[2]});
            int e02 = complex.simplex_index({t[0], t[2]});
            p.relators.push_back(free_reduce({e01 + 1, e12 + 1, -(e02 + 1)}));
        }
    p.validate();
    return out;
}

Word EdgePathData::tree_path(const SimplicialComplex& complex, int v) const {
    Word w;
    const auto& edges = complex.edges();
    while (v != basepoint) {
        int e = tree_parent_edge[v];
        int parent = tree_parent[v];
        // edge generator oriented from the smaller vertex to the larger
        w.push_back(edges[e][0] == parent ? e + 1 : -(e + 1));
        v = parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

Presentation edge_path_presentation(const SimplicialComplex& complex, int basepoint) {
    return edge_path_data(complex, basepoint).presentation;
}

Presentation edge_path_presentation(const TruncatedSimplicialSet& nerve) {
    long nv = nerve.cell_count(0);
    long ne = nerve.cell_count(1);
    if (nv == 0) throw DisconnectedComplex("empty nerve");

    Presentation p;
    for (long e = 0; e < ne; ++e) p.generator_names.push_back("e" + std::to_string(e));

    // underlying graph from 1-cells: faces are (target, source)
    std::vector<std::vector<std::pair<int, int>>> adj(nv);
    std::vector<int> src(ne), dst(ne);
    for (long e = 0; e < ne; ++e) {
        dst[e] = nerve.faces[1][e * 2 + 0];
        src[e] = nerve.faces[1][e * 2 + 1];
        adj[src[e]].push_back({dst[e], static_cast<int>(e)});
        adj[dst[e]].push_back({src[e], static_cast<int>(e)});
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<char> in_tree(ne, 0);
    std::vector<char> seen(nv, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (auto [w, e] : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                in_tree[e] = 1;
                queue.push_back(w);
            }
    }
    for (long v = 0; v < nv; ++v)
        if (!seen[v]) throw DisconnectedComplex("nerve is not connected");

    for (long e = 0; e < ne; ++e)
        if (in_tree[e]) p.relators.push_back({static_cast<int>(e) + 1});
    // a 2-cell (m1, m2) gives [d2][d0] = [d1]; collapsed faces are
    // constant paths
    for (long c = 0; c < nerve.cell_count(2); ++c) {
        int d0 = nerve.faces[2][c * 3 + 0];
        int d1 = nerve.faces[2][c * 3 + 1];
        int d2 = nerve.faces[2][c * 3 + 2];
        Word w;
        if (d2 >= 0) w.push_back(d2 + 1);
        if (d0 >= 0) w.push_back(d0 + 1);
        if (d1 >= 0) w.push_back(-(d1 + 1));
        p.relators.push_back(free_reduce(w));
    }
    p.validate();
    return p;
}

std::optional<long> enumerate_order(const Presentation& p, long max_cosets) {
    Presentation small = tietze_simplify(p);
    CosetTable ct = todd_coxeter(small, {}, max_cosets);
    if (ct.status != CosetTable::Status::complete) return std::nullopt;
    return ct.index();
}

Pi1Comparison compare_presentations(const Presentation& a, const Presentation& b,
                                    long max_cosets) {
    Pi1Comparison out;
    out.left = abelianization(a);
    out.right = abelianization(b);
    out.abelianizations_match = (out.left == out.right);
    out.left_order = enumerate_order(a, max_cosets);
    out.right_order = enumerate_order(b, max_cosets);
    if (out.left_order && out.right_order) {
        out.orders_checked = true;
        out.orders_match = (*out.left_order == *out.right_order);
    }
    return out;
}

}  // namespace properclass
