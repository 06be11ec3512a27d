#include "properclass/colimits.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "properclass/errors.hpp"

namespace properclass {

void validate_simplicial(const SimplicialMap& map, const SimplicialComplex& source,
                         const SimplicialComplex& target) {
    if (static_cast<int>(map.vertex_image.size()) != source.num_vertices)
        throw Error("simplicial map: wrong vertex count");
    for (int v : map.vertex_image)
        if (v < 0 || v >= target.num_vertices) throw Error("simplicial map: image out of range");
    for (int k = 0; k <= source.dim(); ++k)
        for (const auto& s : source.simplices[k]) {
            std::vector<int> image;
            for (int v : s) image.push_back(map.vertex_image[v]);
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (target.simplex_index(image) < 0)
                throw Error("simplicial map: image of a simplex is not a simplex");
        }
}

void validate_injective(const SimplicialMap& map) {
    std::set<int> seen;
    for (int v : map.vertex_image)
        if (!seen.insert(v).second) throw NonInjectiveMap("map is not injective on vertices");
}

SimplicialComplex product_complex(const SimplicialComplex& x, const SimplicialComplex& y) {
    const int ny = y.num_vertices;
    auto grid = [&](int a, int b) { return a * ny + b; };

    std::vector<std::vector<int>> gens;
    // staircase simplices over every pair of simplices
    for (int p = 0; p <= x.dim(); ++p)
        for (const auto& sx : x.simplices[p])
            for (int q = 0; q <= y.dim(); ++q)
                for (const auto& sy : y.simplices[q]) {
                    // monotone lattice paths from (0,0) to (p,q)
                    std::vector<std::pair<int, int>> path{{0, 0}};
                    std::function<void()> walk = [&]() {
                        auto [i, j] = path.back();
                        if (i == p && j == q) {
                            std::vector<int> cell;
                            cell.reserve(path.size());
                            for (auto [a, b] : path) cell.push_back(grid(sx[a], sy[b]));
                            gens.push_back(std::move(cell));
                            return;
                        }
                        if (i < p) {
                            path.push_back({i + 1, j});
                            walk();
                            path.pop_back();
                        }
                        if (j < q) {
                            path.push_back({i, j + 1});
                            walk();
                            path.pop_back();
                        }
                    };
                    walk();
                }
    return SimplicialComplex::from_simplices(x.num_vertices * ny, gens);
}

SimplicialComplex wedge_complex(const SimplicialComplex& x, int base_x,
                                const SimplicialComplex& y, int base_y) {
    if (base_x < 0 || base_x >= x.num_vertices || base_y < 0 || base_y >= y.num_vertices)
        throw Error("wedge: basepoint out of range");
    // y vertices mapped into the combined index space
    std::vector<int> ymap(y.num_vertices);
    int next = x.num_vertices;
    for (int v = 0; v < y.num_vertices; ++v) ymap[v] = (v == base_y) ? base_x : next++;

    std::vector<std::vector<int>> gens;
    for (int k = 0; k <= x.dim(); ++k)
        for (const auto& s : x.simplices[k]) gens.push_back(s);
    for (int k = 0; k <= y.dim(); ++k)
        for (const auto& s : y.simplices[k]) {
            std::vector<int> t;
            for (int v : s) t.push_back(ymap[v]);
            std::sort(t.begin(), t.end());
            gens.push_back(std::move(t));
        }
    return SimplicialComplex::from_simplices(next, gens);
}

namespace {

// prism simplices of a x I over each simplex, with the two ends relabeled
// through `bottom` and `top`
void add_cylinder(const SimplicialComplex& a, const std::vector<int>& bottom,
                  const std::vector<int>& top, std::vector<std::vector<int>>& gens) {
    for (int k = 0; k <= a.dim(); ++k)
        for (const auto& s : a.simplices[k]) {
            int p = static_cast<int>(s.size()) - 1;
            // staircase: switch from bottom copy to top copy at cut i
            for (int cut = 0; cut <= p; ++cut) {
                std::vector<int> cell;
                for (int t = 0; t <= cut; ++t) cell.push_back(bottom[s[t]]);
                for (int t = cut; t <= p; ++t) cell.push_back(top[s[t]]);
                std::sort(cell.begin(), cell.end());
                gens.push_back(std::move(cell));
            }
        }
}

}  // namespace

SimplicialComplex pushout_complex(const SimplicialComplex& a, const SimplicialComplex& x,
                                  const SimplicialComplex& y, const SimplicialMap& f,
                                  const SimplicialMap& g) {
    validate_simplicial(f, a, x);
    validate_simplicial(g, a, y);
    validate_injective(f);
    validate_injective(g);

    // vertex layout: x, then y
    std::vector<int> bottom(a.num_vertices), top(a.num_vertices);
    for (int v = 0; v < a.num_vertices; ++v) {
        bottom[v] = f.vertex_image[v];
        top[v] = x.num_vertices + g.vertex_image[v];
    }
    std::vector<std::vector<int>> gens;
    for (int k = 0; k <= x.dim(); ++k)
        for (const auto& s : x.simplices[k]) gens.push_back(s);
    for (int k = 0; k <= y.dim(); ++k)
        for (const auto& s : y.simplices[k]) {
            std::vector<int> t;
            for (int v : s) t.push_back(x.num_vertices + v);
            gens.push_back(std::move(t));
        }
    add_cylinder(a, bottom, top, gens);
    return SimplicialComplex::from_simplices(x.num_vertices + y.num_vertices, gens);
}

SimplicialComplex telescope_complex(const std::vector<SimplicialComplex>& stages,
                                    const std::vector<SimplicialMap>& maps) {
    if (stages.empty()) throw Error("telescope: no stages");
    if (maps.size() + 1 != stages.size())
        throw Error("telescope: need one map between consecutive stages");
    for (size_t i = 0; i < maps.size(); ++i) {
        validate_simplicial(maps[i], stages[i], stages[i + 1]);
        validate_injective(maps[i]);
    }
    std::vector<int> offset(stages.size());
    int total = 0;
    for (size_t i = 0; i < stages.size(); ++i) {
        offset[i] = total;
        total += stages[i].num_vertices;
    }
    std::vector<std::vector<int>> gens;
    for (size_t i = 0; i < stages.size(); ++i)
        for (int k = 0; k <= stages[i].dim(); ++k)
            for (const auto& s : stages[i].simplices[k]) {
                std::vector<int> t;
                for (int v : s) t.push_back(offset[i] + v);
                gens.push_back(std::move(t));
            }
    for (size_t i = 0; i < maps.size(); ++i) {
        std::vector<int> bottom(stages[i].num_vertices), top(stages[i].num_vertices);
        for (int v = 0; v < stages[i].num_vertices; ++v) {
            bottom[v] = offset[i] + v;
            top[v] = offset[i + 1] + maps[i].vertex_image[v];
        }
        add_cylinder(stages[i], bottom, top, gens);
    }
    return SimplicialComplex::from_simplices(total, gens);
}

}  // namespace properclass
