#include "properclass/euclidean.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "properclass/errors.hpp"

namespace properclass {

namespace {

Isometry compose(const Isometry& g, const Isometry& h) {
    // apply g first, then h
    Isometry out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            out.matrix[i][j] = 0;
            for (int k = 0; k < 2; ++k) out.matrix[i][j] += h.matrix[i][k] * g.matrix[k][j];
        }
    for (int i = 0; i < 2; ++i) {
        out.translation[i] = h.translation[i];
        for (int k = 0; k < 2; ++k)
            out.translation[i] += mpq_class(h.matrix[i][k]) * g.translation[k];
    }
    return out;
}

Isometry inverse(const Isometry& g) {
    int det = g.matrix[0][0] * g.matrix[1][1] - g.matrix[0][1] * g.matrix[1][0];
    if (det != 1 && det != -1) throw Error("isometry matrix not unimodular");
    Isometry out;
    out.matrix[0][0] = det * g.matrix[1][1];
    out.matrix[0][1] = -det * g.matrix[0][1];
    out.matrix[1][0] = -det * g.matrix[1][0];
    out.matrix[1][1] = det * g.matrix[0][0];
    for (int i = 0; i < 2; ++i) {
        out.translation[i] = 0;
        for (int k = 0; k < 2; ++k)
            out.translation[i] -= mpq_class(out.matrix[i][k]) * g.translation[k];
    }
    return out;
}

bool same_matrix(const Isometry& a, const Isometry& b) { return a.matrix == b.matrix; }

bool is_identity_isometry(const Isometry& g) {
    return same_matrix(g, Isometry{}) && g.translation[0] == 0 && g.translation[1] == 0;
}

mpq_class frac_mod1(const mpq_class& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return x - mpq_class(q);
}

Isometry evaluate_word(const EuclideanGroupSpec& spec, const Word& word) {
    Isometry acc;  // identity
    for (int letter : word) {
        const Isometry& rep = spec.generator_reps[std::abs(letter) - 1];
        acc = compose(acc, letter > 0 ? rep : inverse(rep));
    }
    return acc;
}

}  // namespace

bool word_is_torsion(const EuclideanGroupSpec& spec, const Word& word) {
    Isometry g = evaluate_word(spec, word);
    bool identity_matrix =
        g.matrix[0][0] == 1 && g.matrix[1][1] == 1 && g.matrix[0][1] == 0 && g.matrix[1][0] == 0;
    if (identity_matrix) {
        // pure translation: torsion only if trivial
        return g.translation[0] == 0 && g.translation[1] == 0;
    }
    int det = g.matrix[0][0] * g.matrix[1][1] - g.matrix[0][1] * g.matrix[1][0];
    if (det == -1 || spec.dimension == 1) {
        // involution part: finite order iff (M + I) t = 0 (no glide)
        mpq_class a = mpq_class(g.matrix[0][0] + 1) * g.translation[0] +
                      mpq_class(g.matrix[0][1]) * g.translation[1];
        mpq_class b = mpq_class(g.matrix[1][0]) * g.translation[0] +
                      mpq_class(g.matrix[1][1] + 1) * g.translation[1];
        return a == 0 && b == 0;
    }
    // nontrivial rotation: finite order regardless of the offset
    return true;
}

void EuclideanGroupSpec::validate() const {
    if (dimension != 1 && dimension != 2) throw Error("dimension must be 1 or 2");
    if (point_group.empty()) throw Error("point group must contain the identity");
    if (!is_identity_isometry(point_group[0]))
        throw Error("point group element 0 must be the identity");
    size_t n = point_group.size();
    if (mult.size() != n) throw Error("multiplication table size mismatch");
    for (const auto& row : mult)
        if (row.size() != n) throw Error("multiplication table not square");
    // closure and cocycle condition modulo the lattice
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < n; ++h) {
            Isometry prod = compose(point_group[g], point_group[h]);
            const Isometry& expect = point_group[mult[g][h]];
            if (!same_matrix(prod, expect)) throw Error("point group not closed");
            for (int i = 0; i < 2; ++i)
                if (frac_mod1(prod.translation[i] - expect.translation[i]) != 0)
                    throw Error("affine parts violate the cocycle condition");
        }
    if (generator_reps.size() != presentation.generator_names.size())
        throw Error("one affine image per presentation generator required");
    for (const Word& r : presentation.relators)
        if (!is_identity_isometry(evaluate_word(*this, r)))
            throw Error("relator does not evaluate to the identity isometry");
    for (const Word& w : torsion_words) {
        Isometry g = evaluate_word(*this, w);
        // words through the representation kernel evaluate to the
        // identity; anything else must be genuinely finite order
        if (!is_identity_isometry(g) && !word_is_torsion(*this, w))
            throw Error("declared torsion word has infinite order");
    }
}

Presentation EuclideanGroupSpec::torsion_quotient() const {
    return adjoin_relators(presentation, torsion_words);
}

namespace {

Isometry translation_1d(int by) {
    Isometry g;
    g.translation[0] = by;
    return g;
}

Isometry reflection_1d(const mpq_class& center) {
    Isometry g;
    g.matrix[0][0] = -1;
    g.translation[0] = 2 * center;
    return g;
}

Isometry linear(int a, int b, int c, int d) {
    Isometry g;
    g.matrix = {{{a, b}, {c, d}}};
    return g;
}

Isometry translation_2d(int x, int y) {
    Isometry g;
    g.translation[0] = x;
    g.translation[1] = y;
    return g;
}

// multiplication table recovered from a faithful representation
std::vector<std::vector<int>> table_from(const std::vector<Isometry>& elements) {
    size_t n = elements.size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < n; ++h) {
            Isometry prod = compose(elements[g], elements[h]);
            for (size_t k = 0; k < n; ++k) {
                if (!same_matrix(prod, elements[k])) continue;
                bool same_t = true;
                for (int i = 0; i < 2; ++i)
                    if (frac_mod1(prod.translation[i] - elements[k].translation[i]) != 0)
                        same_t = false;
                if (same_t) {
                    t[g][h] = static_cast<int>(k);
                    break;
                }
            }
            if (t[g][h] < 0) throw Error("point group not closed under product");
        }
    return t;
}

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

EuclideanGroupSpec make_Z() {
    EuclideanGroupSpec s;
    s.name = "Z";
    s.dimension = 1;
    s.point_group = {Isometry{}};
    s.mult = cyclic_table(1);
    s.presentation.generator_names = {"a"};
    s.generator_reps = {translation_1d(1)};
    s.expected_betti = {1, 1, 0};
    s.shape_label = "S^1";
    s.nullification_label = "nullification of B Z";
    return s;
}

EuclideanGroupSpec make_Dinf() {
    EuclideanGroupSpec s;
    s.name = "Dinf";
    s.dimension = 1;
    s.point_group = {Isometry{}, linear(-1, 0, 0, 1)};
    s.mult = cyclic_table(2);
    s.presentation.generator_names = {"a", "b"};
    s.presentation.relators = {{1, 1}, {2, 2}};
    Isometry a = reflection_1d(0);
    Isometry b = reflection_1d(mpq_class(1, 2));
    s.generator_reps = {a, b};
    s.torsion_words = {{1}, {2}};
    s.expected_betti = {1, 0, 0};
    s.shape_label = "point";
    s.nullification_label = "BZ/2-nullification of B Dinf";
    return s;
}

EuclideanGroupSpec make_ZxZp(int p) {
    EuclideanGroupSpec s;
    s.name = "ZxZ" + std::to_string(p);
    s.dimension = 1;
    s.point_group.assign(p, Isometry{});  // acts through the free factor
    s.mult = cyclic_table(p);
    s.presentation.generator_names = {"t", "z"};
    Word zp;
    for (int i = 0; i < p; ++i) zp.push_back(2);
    s.presentation.relators = {zp, free_reduce({1, 2, -1, -2})};
    s.generator_reps = {translation_1d(1), Isometry{}};
    s.torsion_words = {{2}};
    s.expected_betti = {1, 1, 0};
    s.shape_label = "S^1";
    s.nullification_label =
        "BZ/" + std::to_string(p) + "-nullification of B(Z x Z/" + std::to_string(p) + ")";
    s.normalizer_entry = true;
    return s;
}

EuclideanGroupSpec make_p1() {
    EuclideanGroupSpec s;
    s.name = "p1";
    s.dimension = 2;
    s.grid = GridStyle::MainDiagonal;
    s.point_group = {Isometry{}};
    s.mult = cyclic_table(1);
    s.presentation.generator_names = {"x", "y"};
    s.presentation.relators = {free_reduce({1, 2, -1, -2})};
    s.generator_reps = {translation_2d(1, 0), translation_2d(0, 1)};
    s.expected_betti = {1, 2, 1};
    s.shape_label = "torus";
    s.nullification_label = "nullification of B p1";
    return s;
}

EuclideanGroupSpec make_pmm() {
    EuclideanGroupSpec s;
    s.name = "pmm";
    s.dimension = 2;
    s.grid = GridStyle::UnionJack;
    s.point_group = {Isometry{}, linear(-1, 0, 0, 1), linear(1, 0, 0, -1),
                     linear(-1, 0, 0, -1)};
    s.mult = table_from(s.point_group);
    // two perpendicular reflection pairs: the product of the factors'
    // infinite dihedral groups
    s.presentation.generator_names = {"a", "b", "c", "d"};
    s.presentation.relators = {{1, 1},
                               {2, 2},
                               {3, 3},
                               {4, 4},
                               free_reduce({1, 3, -1, -3}),
                               free_reduce({1, 4, -1, -4}),
                               free_reduce({2, 3, -2, -3}),
                               free_reduce({2, 4, -2, -4})};
    Isometry a = linear(-1, 0, 0, 1);                 // reflect x = 0
    Isometry b = compose(a, translation_2d(1, 0));    // reflect x = 1/2
    Isometry c = linear(1, 0, 0, -1);                 // reflect y = 0
    Isometry d = compose(c, translation_2d(0, 1));    // reflect y = 1/2
    s.generator_reps = {a, b, c, d};
    s.torsion_words = {{1}, {2}, {3}, {4}};
    s.expected_betti = {1, 0, 0};
    s.shape_label = "point";
    s.nullification_label = "BZ/2-nullification of B pmm";
    return s;
}

EuclideanGroupSpec make_p3() {
    EuclideanGroupSpec s;
    s.name = "p3";
    s.dimension = 2;
    s.grid = GridStyle::AntiDiagonal;
    Isometry rot = linear(0, 1, -1, -1);  // conjugation: x -> x^-1 y, y -> x^-1
    s.point_group = {Isometry{}, rot, compose(rot, rot)};
    s.mult = table_from(s.point_group);
    s.presentation.generator_names = {"x", "y", "z"};
    s.presentation.relators = {free_reduce({1, 2, -1, -2}), {3, 3, 3},
                               free_reduce({3, 1, -3, -2, 1}), free_reduce({3, 2, -3, 1})};
    s.generator_reps = {translation_2d(1, 0), translation_2d(0, 1), rot};
    s.torsion_words = {{3}, {1, 3}};  // rotations about inequivalent centers
    s.expected_betti = {1, 0, 1};
    s.shape_label = "S^2";
    s.nullification_label = "BZ/3-nullification of B p3";
    return s;
}

EuclideanGroupSpec make_p3m1() {
    EuclideanGroupSpec s;
    s.name = "p3m1";
    s.dimension = 2;
    s.grid = GridStyle::AntiDiagonal;
    Isometry rot = linear(0, 1, -1, -1);
    Isometry mir = linear(0, 1, 1, 0);  // swap the translation directions
    s.point_group = {Isometry{},        rot, compose(rot, rot), mir, compose(rot, mir),
                     compose(compose(rot, rot), mir)};
    s.mult = table_from(s.point_group);
    s.presentation.generator_names = {"x", "y", "z", "m"};
    s.presentation.relators = {free_reduce({1, 2, -1, -2}),
                               {3, 3, 3},
                               free_reduce({3, 1, -3, -2, 1}),
                               free_reduce({3, 2, -3, 1}),
                               {4, 4},
                               free_reduce({4, 1, 4, -2}),
                               free_reduce({4, 2, 4, -1}),
                               free_reduce({4, 3, 4, 3})};
    s.generator_reps = {translation_2d(1, 0), translation_2d(0, 1), rot, mir};
    s.torsion_words = {{3}, {1, 3}, {4}};
    s.expected_betti = {1, 0, 0};
    s.shape_label = "point";
    s.nullification_label = "(BZ/2 v BZ/3)-nullification of B p3m1";
    return s;
}

EuclideanGroupSpec make_H_even() {
    EuclideanGroupSpec s;
    s.name = "H_even";
    s.dimension = 2;
    s.grid = GridStyle::MainDiagonal;
    s.point_group = {Isometry{}, linear(-1, 0, 0, -1)};
    s.mult = cyclic_table(2);
    s.presentation.generator_names = {"x", "y", "r"};
    s.presentation.relators = {free_reduce({1, 2, -1, -2}),
                               {3, 3},
                               free_reduce({3, 1, 3, 1}),
                               free_reduce({3, 2, 3, 2})};
    s.generator_reps = {translation_2d(1, 0), translation_2d(0, 1), linear(-1, 0, 0, -1)};
    s.torsion_words = {{3}, {1, 3}, {2, 3}, {1, 2, 3}};
    s.expected_betti = {1, 0, 1};
    s.shape_label = "S^2";
    s.nullification_label = "nullification of B H_even";
    return s;
}

}  // namespace

EuclideanGroupSpec catalogue_group(const std::string& name) {
    EuclideanGroupSpec s;
    if (name == "Z") {
        s = make_Z();
    } else if (name == "Dinf") {
        s = make_Dinf();
    } else if (name == "p1") {
        s = make_p1();
    } else if (name == "pmm") {
        s = make_pmm();
    } else if (name == "p3") {
        s = make_p3();
    } else if (name == "p3m1") {
        s = make_p3m1();
    } else if (name == "H_even") {
        s = make_H_even();
    } else if (name.rfind("ZxZ", 0) == 0) {
        std::string arg = name.substr(3);
        if (arg.rfind("p(", 0) == 0 && arg.back() == ')')
            arg = arg.substr(2, arg.size() - 3);  // the ZxZp(5) spelling
        int p = 0;
        try {
            p = std::stoi(arg);
        } catch (...) {
            throw UnknownGroup("no catalogue group named '" + name + "'");
        }
        if (p < 2 || p > 97) throw UnknownGroup("Z x Z/p needs 2 <= p <= 97");
        s = make_ZxZp(p);
    } else {
        throw UnknownGroup("no catalogue group named '" + name + "'");
    }
    s.presentation.validate();
    s.validate();
    return s;
}

std::vector<std::string> euclidean_catalogue_names() {
    return {"Z", "Dinf", "ZxZ3", "ZxZ5", "p1", "pmm", "p3", "p3m1", "H_even"};
}

// ---------------------------------------------------------------------------
// Torus triangulations, actions, quotients
// ---------------------------------------------------------------------------

namespace {

struct TorusData {
    SimplicialComplex complex;
    std::vector<std::array<mpq_class, 2>> coords;  // per vertex, in [0,1)^dim
};

TorusData build_torus(const EuclideanGroupSpec& spec, int k) {
    TorusData t;
    std::vector<std::vector<int>> gens;
    if (spec.dimension == 1) {
        int n = 6 * k;
        for (int i = 0; i < n; ++i) {
            t.coords.push_back({mpq_class(i, n), 0});
            gens.push_back({i, (i + 1) % n});
        }
        t.complex = SimplicialComplex::from_simplices(n, gens);
        return t;
    }
    int n = std::max(k, 3);
    auto vid = [&](int i, int j) { return ((i % n + n) % n) * n + ((j % n + n) % n); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.coords.push_back({mpq_class(i, n), mpq_class(j, n)});
    int next = n * n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            switch (spec.grid) {
                case GridStyle::MainDiagonal:
                    gens.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
                    gens.push_back({vid(i, j), vid(i, j + 1), vid(i + 1, j + 1)});
                    break;
                case GridStyle::AntiDiagonal:
                    gens.push_back({vid(i, j), vid(i + 1, j), vid(i, j + 1)});
                    gens.push_back({vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1)});
                    break;
                case GridStyle::UnionJack: {
                    int c = next++;
                    t.coords.push_back({mpq_class(2 * i + 1, 2 * n), mpq_class(2 * j + 1, 2 * n)});
                    gens.push_back({vid(i, j), vid(i + 1, j), c});
                    gens.push_back({vid(i + 1, j), vid(i + 1, j + 1), c});
                    gens.push_back({vid(i + 1, j + 1), vid(i, j + 1), c});
                    gens.push_back({vid(i, j + 1), vid(i, j), c});
                    break;
                }
            }
        }
    t.complex = SimplicialComplex::from_simplices(next, gens);
    return t;
}

}  // namespace

EquivariantTorus equivariant_torus(const EuclideanGroupSpec& spec, int refinement) {
    if (refinement < 1) throw Error("refinement must be at least 1");
    TorusData torus = build_torus(spec, refinement);

    std::map<std::pair<mpq_class, mpq_class>, int> lookup;
    for (size_t v = 0; v < torus.coords.size(); ++v)
        lookup[{torus.coords[v][0], torus.coords[v][1]}] = static_cast<int>(v);

    EquivariantTorus out;
    out.complex = torus.complex;
    for (const Isometry& g : spec.point_group) {
        std::vector<int> perm(torus.coords.size());
        for (size_t v = 0; v < torus.coords.size(); ++v) {
            mpq_class x = mpq_class(g.matrix[0][0]) * torus.coords[v][0] +
                          mpq_class(g.matrix[0][1]) * torus.coords[v][1] + g.translation[0];
            mpq_class y = 0;
            if (spec.dimension == 2)
                y = mpq_class(g.matrix[1][0]) * torus.coords[v][0] +
                    mpq_class(g.matrix[1][1]) * torus.coords[v][1] + g.translation[1];
            auto it = lookup.find({frac_mod1(x), frac_mod1(y)});
            if (it == lookup.end())
                throw Error("point group does not preserve the triangulation vertices");
            perm[v] = it->second;
        }
        for (int dim = 0; dim <= out.complex.dim(); ++dim)
            for (const auto& s : out.complex.simplices[dim]) {
                std::vector<int> image;
                for (int v : s) image.push_back(perm[v]);
                std::sort(image.begin(), image.end());
                if (out.complex.simplex_index(image) < 0)
                    throw Error("point group does not act simplicially on the triangulation");
            }
        out.vertex_actions.push_back(std::move(perm));
    }
    return out;
}

OrbifoldModel bbar_model(const EuclideanGroupSpec& spec, int refinement) {
    for (int attempt = 0; attempt < 2; ++attempt) {
        int k = refinement + attempt;
        EquivariantTorus torus = equivariant_torus(spec, k);

        // two barycentric subdivisions make the action regular
        SimplicialComplex x1 = barycentric_subdivision(torus.complex);
        std::vector<std::vector<int>> act1;
        for (const auto& perm : torus.vertex_actions)
            act1.push_back(lift_to_subdivision(torus.complex, perm));
        SimplicialComplex x2 = barycentric_subdivision(x1);
        std::vector<std::vector<int>> act2;
        for (const auto& perm : act1) act2.push_back(lift_to_subdivision(x1, perm));

        try {
            OrbifoldModel model;
            model.complex = quotient_complex(x2, act2);
            model.group = spec.name;
            model.refinement = k;
            model.subdivisions = 2;
            if (!model.complex.connected()) throw Error("orbit space is disconnected");
            return model;
        } catch (const NonRegularAction&) {
            if (attempt == 1) throw;
        }
    }
    throw Error("unreachable");
}

TorsionSubgroupInfo torsion_generated_subgroup(const PermGroup& group) {
    TorsionSubgroupInfo info;
    // every element of a finite group has finite order, so T = G
    for (const Perm& g : group.generators) info.generator_names.push_back(g.cycle_string());
    if (info.generator_names.empty()) info.generator_names.push_back("()");
    return info;  // quotient: the empty presentation of the trivial group
}

TorsionSubgroupInfo torsion_generated_subgroup(const Presentation&) {
    throw UnsupportedGroupClass(
        "torsion elements are only decidable for finite groups and the euclidean catalogue");
}

TorsionSubgroupInfo torsion_generated_subgroup(const EuclideanGroupSpec& spec) {
    TorsionSubgroupInfo info;
    for (const Word& w : spec.torsion_words) {
        std::string name;
        for (int letter : w) {
            std::string g = spec.presentation.generator_names[std::abs(letter) - 1];
            if (letter < 0)
                for (char& c : g)
                    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            name += g;
        }
        info.generator_names.push_back(name);
    }
    info.quotient = tietze_simplify(spec.torsion_quotient());
    return info;
}

Pi1Comparison pi1_matches_torsion_quotient(const EuclideanGroupSpec& spec,
                                           const SimplicialComplex& model, long max_cosets) {
    return compare_presentations(edge_path_presentation(model), spec.torsion_quotient(),
                                 max_cosets);
}

Pi1Comparison pi1_matches_torsion_quotient(const PermGroup& group,
                                           const TruncatedSimplicialSet& model_nerve,
                                           long max_cosets) {
    TorsionSubgroupInfo info = torsion_generated_subgroup(group);
    return compare_presentations(edge_path_presentation(model_nerve), info.quotient, max_cosets);
}

NullificationReport nullification_report(const EuclideanGroupSpec& spec, int refinement,
                                         long max_cosets) {
    NullificationReport rep;
    rep.group = spec.name;
    rep.refinement = refinement;
    rep.claim = spec.nullification_label + " has the homotopy type of " + spec.shape_label;

    OrbifoldModel model = bbar_model(spec, refinement);
    rep.model_homology = homology(model.complex);
    rep.expected_betti = spec.expected_betti;
    rep.homology_matches = true;
    for (int d = 0; d <= 2; ++d) {
        const HomologyGroup& g = rep.model_homology.at(d);
        long want = d < static_cast<int>(spec.expected_betti.size()) ? spec.expected_betti[d] : 0;
        if (g.betti != want || !g.torsion.empty()) rep.homology_matches = false;
    }

    rep.pi1 = pi1_matches_torsion_quotient(spec, model.complex, max_cosets);
    rep.pi1_consistent = rep.pi1.consistent();

    if (spec.normalizer_entry) {
        // independent prediction: the quotient by the p-torsion is Z, so
        // the orbit space should look like its classifying space, a circle
        Abelianization quotient_ab = abelianization(spec.torsion_quotient());
        bool pred = quotient_ab.rank == 1 && quotient_ab.torsion.empty() &&
                    rep.model_homology.at(1).betti == 1 &&
                    rep.model_homology.at(1).torsion.empty() && rep.model_homology.at(2).trivial();
        rep.normalizer_prediction_matches = pred;
    }

    bool ok = rep.homology_matches && rep.pi1_consistent &&
              (!rep.normalizer_prediction_matches.has_value() ||
               *rep.normalizer_prediction_matches);
    rep.verdict = ok ? "consistent" : "inconsistent";
    return rep;
}

}  // namespace properclass
