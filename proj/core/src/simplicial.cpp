#include "properclass/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "properclass/errors.hpp"

namespace properclass {

SimplicialComplex SimplicialComplex::from_simplices(
    int num_vertices, const std::vector<std::vector<int>>& generators) {
    std::set<std::vector<int>> closed;
    // downward closure by subset enumeration
    for (const auto& g : generators) {
        std::vector<int> s = g;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.size() != g.size()) throw Error("simplex with repeated vertices");
        int k = static_cast<int>(s.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> face;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) face.push_back(s[i]);
            closed.insert(std::move(face));
        }
    }
    SimplicialComplex out;
    out.num_vertices = num_vertices;
    for (const auto& s : closed) {
        int d = static_cast<int>(s.size()) - 1;
        for (int v : s)
            if (v < 0 || v >= num_vertices) throw Error("simplex vertex out of range");
        while (static_cast<int>(out.simplices.size()) <= d) out.simplices.emplace_back();
        out.simplices[d].push_back(s);
    }
    for (auto& level : out.simplices) std::sort(level.begin(), level.end());
    out.validate();
    return out;
}

long SimplicialComplex::total_simplices() const {
    long n = 0;
    for (const auto& level : simplices) n += static_cast<long>(level.size());
    return n;
}

int SimplicialComplex::simplex_index(const std::vector<int>& s) const {
    int d = static_cast<int>(s.size()) - 1;
    if (d < 0 || d > dim()) return -1;
    auto it = std::lower_bound(simplices[d].begin(), simplices[d].end(), s);
    if (it == simplices[d].end() || *it != s) return -1;
    return static_cast<int>(it - simplices[d].begin());
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (int k = 0; k <= dim(); ++k)
        chi += (k % 2 == 0) ? simplex_count(k) : -simplex_count(k);
    return chi;
}

bool SimplicialComplex::connected() const {
    if (num_vertices == 0) return false;
    std::vector<int> comp(num_vertices);
    for (int v = 0; v < num_vertices; ++v) comp[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (comp[v] != v) v = comp[v] = comp[comp[v]];
        return v;
    };
    if (dim() >= 1)
        for (const auto& e : simplices[1]) comp[find(e[0])] = find(e[1]);
    int root = find(0);
    for (int v = 1; v < num_vertices; ++v)
        if (find(v) != root) return false;
    return true;
}

void SimplicialComplex::validate() const {
    if (dim() >= 0 && simplex_count(0) != num_vertices)
        throw Error("complex: every vertex must appear as a 0-simplex");
    for (int k = 0; k <= dim(); ++k) {
        const auto& level = simplices[k];
        if (!std::is_sorted(level.begin(), level.end()))
            throw Error("complex: simplex lists must be sorted");
        for (const auto& s : level) {
            if (static_cast<int>(s.size()) != k + 1) throw Error("complex: wrong tuple size");
            for (size_t i = 0; i + 1 < s.size(); ++i)
                if (s[i] >= s[i + 1]) throw Error("complex: simplex vertices must increase");
            if (k == 0) continue;
            for (size_t i = 0; i < s.size(); ++i) {
                std::vector<int> face = s;
                face.erase(face.begin() + static_cast<long>(i));
                if (simplex_index(face) < 0) throw Error("complex: not downward closed");
            }
        }
    }
}

ChainComplex SimplicialComplex::chain_complex() const {
    ChainComplex cc;
    int top = std::max(dim(), 0);
    cc.dims.assign(top + 1, 0);
    cc.boundary.resize(top + 1);
    for (int k = 0; k <= top; ++k) cc.dims[k] = simplex_count(k);
    for (int k = 1; k <= top; ++k) {
        SparseIntMatrix& b = cc.boundary[k];
        b = SparseIntMatrix(static_cast<int>(simplex_count(k - 1)),
                            static_cast<int>(simplex_count(k)));
        for (long j = 0; j < simplex_count(k); ++j) {
            const auto& s = simplices[k][j];
            for (size_t i = 0; i < s.size(); ++i) {
                std::vector<int> face = s;
                face.erase(face.begin() + static_cast<long>(i));
                b.add(simplex_index(face), static_cast<int>(j), (i % 2 == 0) ? 1 : -1);
            }
        }
    }
    return cc;
}

const std::vector<std::vector<int>>& SimplicialComplex::edges() const {
    static const std::vector<std::vector<int>> empty;
    return dim() >= 1 ? simplices[1] : empty;
}

HomologyResult homology(const SimplicialComplex& complex, Coefficients coeff) {
    return homology(complex.chain_complex(), coeff);
}

int simplex_global_index(const SimplicialComplex& complex, const std::vector<int>& s) {
    int d = static_cast<int>(s.size()) - 1;
    int idx = complex.simplex_index(s);
    if (idx < 0) return -1;
    int offset = 0;
    for (int k = 0; k < d; ++k) offset += static_cast<int>(complex.simplex_count(k));
    return offset + idx;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex) {
    // vertex per simplex, in (dimension, index) order
    int nv = static_cast<int>(complex.total_simplices());

    // top simplices of sd = maximal flags; generating all flags below the
    // maximal simplices suffices for downward closure
    std::vector<std::vector<int>> gens;
    std::function<void(const std::vector<int>&, std::vector<int>&)> descend =
        [&](const std::vector<int>& simplex, std::vector<int>& flag) {
            flag.push_back(simplex_global_index(complex, simplex));
            if (simplex.size() == 1) {
                std::vector<int> g(flag.rbegin(), flag.rend());
                gens.push_back(std::move(g));
            } else {
                // all proper faces of one dimension down
                for (size_t i = 0; i < simplex.size(); ++i) {
                    std::vector<int> face = simplex;
                    face.erase(face.begin() + static_cast<long>(i));
                    descend(face, flag);
                }
            }
            flag.pop_back();
        };
    int top = complex.dim();
    for (int k = top; k >= 0; --k) {
        // only maximal simplices need to seed flags; a simplex is maximal
        // if it has no coface, but seeding from every simplex is also
        // correct (faces are generated anyway) — use maximal only
        for (const auto& s : complex.simplices[k]) {
            bool maximal = true;
            if (k < complex.dim()) {
                // check for a coface by extending with each extra vertex
                for (int v = 0; v < complex.num_vertices && maximal; ++v) {
                    if (std::binary_search(s.begin(), s.end(), v)) continue;
                    std::vector<int> up = s;
                    up.insert(std::upper_bound(up.begin(), up.end(), v), v);
                    if (complex.simplex_index(up) >= 0) maximal = false;
                }
            }
            if (!maximal) continue;
            std::vector<int> flag;
            descend(s, flag);
        }
    }
    return SimplicialComplex::from_simplices(nv, gens);
}

FiniteCategory simplex_category(const SimplicialComplex& complex) {
    if (complex.total_simplices() == 0) throw Error("simplex category of empty complex");
    FiniteCategory cat;
    std::vector<std::vector<int>> by_id;  // global index -> simplex
    for (int k = 0; k <= complex.dim(); ++k)
        for (const auto& s : complex.simplices[k]) {
            std::ostringstream label;
            label << "<";
            for (size_t i = 0; i < s.size(); ++i) label << (i ? " " : "") << s[i];
            label << ">";
            cat.objects.push_back(label.str());
            by_id.push_back(s);
        }
    int n = cat.num_objects();
    // one morphism per inclusion, faces to cofaces
    std::vector<std::vector<int>> mor(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (std::includes(by_id[b].begin(), by_id[b].end(), by_id[a].begin(),
                              by_id[a].end()))
                mor[a][b] = cat.add_morphism(a, b, cat.objects[a] + "<=" + cat.objects[b]);
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (mor[a][b] < 0) continue;
            for (int c = 0; c < n; ++c)
                if (mor[b][c] >= 0) cat.set_composition(mor[a][b], mor[b][c], mor[a][c]);
        }
    std::vector<int> ids(n);
    for (int a = 0; a < n; ++a) ids[a] = mor[a][a];
    cat.finish(ids);
    return cat;
}

std::vector<int> lift_to_subdivision(const SimplicialComplex& complex,
                                     const std::vector<int>& vertex_perm) {
    std::vector<int> out(complex.total_simplices());
    for (int k = 0; k <= complex.dim(); ++k)
        for (const auto& s : complex.simplices[k]) {
            std::vector<int> image;
            image.reserve(s.size());
            for (int v : s) image.push_back(vertex_perm[v]);
            std::sort(image.begin(), image.end());
            int to = simplex_global_index(complex, image);
            if (to < 0) throw Error("vertex permutation is not simplicial");
            out[simplex_global_index(complex, s)] = to;
        }
    return out;
}

SimplicialComplex quotient_complex(const SimplicialComplex& complex,
                                   const std::vector<std::vector<int>>& group_elements) {
    // vertex orbits
    std::vector<int> orbit(complex.num_vertices, -1);
    int n_orbits = 0;
    for (int v = 0; v < complex.num_vertices; ++v) {
        if (orbit[v] >= 0) continue;
        std::vector<int> stack{v};
        orbit[v] = n_orbits;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (const auto& g : group_elements) {
                if (orbit[g[w]] < 0) {
                    orbit[g[w]] = n_orbits;
                    stack.push_back(g[w]);
                }
            }
        }
        ++n_orbits;
    }

    // regularity
    for (int k = 0; k <= complex.dim(); ++k)
        for (const auto& s : complex.simplices[k]) {
            for (const auto& g : group_elements) {
                std::vector<int> image;
                image.reserve(s.size());
                bool pointwise = true;
                for (int v : s) {
                    image.push_back(g[v]);
                    if (g[v] != v) pointwise = false;
                }
                std::sort(image.begin(), image.end());
                if (image == s && !pointwise)
                    throw NonRegularAction("simplex fixed setwise but not vertexwise");
            }
            std::set<int> seen;
            for (int v : s)
                if (!seen.insert(orbit[v]).second)
                    throw NonRegularAction("simplex meets a vertex orbit twice");
        }

    std::vector<std::vector<int>> gens;
    for (int k = complex.dim(); k >= 0; --k)
        for (const auto& s : complex.simplices[k]) {
            std::vector<int> image;
            image.reserve(s.size());
            for (int v : s) image.push_back(orbit[v]);
            std::sort(image.begin(), image.end());
            gens.push_back(std::move(image));
        }
    return SimplicialComplex::from_simplices(n_orbits, gens);
}

// --- fixtures --------------------------------------------------------------

SimplicialComplex fixture_point() {
    return SimplicialComplex::from_simplices(1, {{0}});
}

SimplicialComplex fixture_interval(int segments) {
    if (segments < 1) throw Error("interval needs at least one segment");
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < segments; ++i) gens.push_back({i, i + 1});
    return SimplicialComplex::from_simplices(segments + 1, gens);
}

SimplicialComplex fixture_circle(int vertices) {
    if (vertices < 3) throw Error("simplicial circle needs at least three vertices");
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < vertices; ++i) gens.push_back({i, (i + 1) % vertices});
    return SimplicialComplex::from_simplices(vertices, gens);
}

SimplicialComplex fixture_single_triangle() {
    return SimplicialComplex::from_simplices(3, {{0, 1, 2}});
}

SimplicialComplex fixture_sphere() {
    return SimplicialComplex::from_simplices(
        4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex fixture_rp2() {
    // minimal 6-vertex triangulation (antipodal icosahedron)
    return SimplicialComplex::from_simplices(6, {{0, 1, 2},
                                                 {0, 1, 3},
                                                 {0, 2, 4},
                                                 {0, 3, 5},
                                                 {0, 4, 5},
                                                 {1, 2, 5},
                                                 {1, 3, 4},
                                                 {1, 4, 5},
                                                 {2, 3, 4},
                                                 {2, 3, 5}});
}

SimplicialComplex fixture_torus() {
    // 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < 7; ++i) {
        gens.push_back({i, (i + 1) % 7, (i + 3) % 7});
        gens.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_simplices(7, gens);
}

SimplicialComplex fixture_moore_z3() {
    // mapping cone of the degree-3 simplicial map from a 9-gon onto a
    // 3-gon: a 2-complex with fundamental group Z/3
    // vertices: 0 = cone apex, 1..9 = 9-gon, 10..12 = 3-gon
    std::vector<std::vector<int>> gens;
    auto b = [](int i) { return 1 + (i % 9); };
    auto c = [](int i) { return 10 + (i % 3); };
    for (int i = 0; i < 9; ++i) {
        gens.push_back({0, b(i), b(i + 1)});        // cone over the 9-gon
        gens.push_back({b(i), b(i + 1), c(i)});     // cylinder prisms
        gens.push_back({b(i + 1), c(i), c(i + 1)});
    }
    return SimplicialComplex::from_simplices(13, gens);
}

// --- exchange format --------------------------------------------------------

SimplicialComplex parse_complex_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<int>> gens;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag[0] == '#') continue;
        if (tag != "s") throw ParseError("complex line must start with 's': " + line);
        std::vector<int> s;
        int v;
        while (ls >> v) {
            if (v < 0) throw ParseError("negative vertex: " + line);
            s.push_back(v);
            max_vertex = std::max(max_vertex, v);
        }
        if (s.empty()) throw ParseError("empty simplex line: " + line);
        gens.push_back(std::move(s));
    }
    if (gens.empty()) throw ParseError("no simplices in complex input");
    return SimplicialComplex::from_simplices(max_vertex + 1, gens);
}

std::string complex_to_text(const SimplicialComplex& complex) {
    std::ostringstream out;
    for (int k = 0; k <= complex.dim(); ++k)
        for (const auto& s : complex.simplices[k]) {
            out << "s";
            for (int v : s) out << " " << v;
            out << "\n";
        }
    return out.str();
}

}  // namespace properclass
