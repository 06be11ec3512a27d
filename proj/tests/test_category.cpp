#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "properclass/orbit.hpp"

using namespace properclass;

namespace {

StandardModel model_for(const std::string& name) {
    PermGroup g = catalogue_perm_group(name);
    return standard_model(g, finite_family(g));
}

long hom_size(const FiniteCategory& c, int a, int b) {
    return static_cast<long>(c.hom[a][b].size());
}

}  // namespace

TEST_CASE("orbit category of the trivial group is a point") {
    PermGroup g = catalogue_perm_group("Z1");
    OrbitCategory o = orbit_category(g, finite_family(g));
    CHECK(o.category.num_objects() == 1);
    CHECK(o.category.num_morphisms() == 1);
}

TEST_CASE("orbit category of Z2: hom sizes") {
    PermGroup g = catalogue_perm_group("Z2");
    OrbitCategory o = orbit_category(g, finite_family(g));
    REQUIRE(o.category.num_objects() == 2);  // G/e, G/G in order of subgroup size
    CHECK(hom_size(o.category, 0, 0) == 2);
    CHECK(hom_size(o.category, 0, 1) == 1);
    CHECK(hom_size(o.category, 1, 0) == 0);
    CHECK(hom_size(o.category, 1, 1) == 1);
}

TEST_CASE("orbit category of S3: self-maps of G/<(12)> and coset counts") {
    PermGroup g = catalogue_perm_group("S3");
    FamilySpec f = finite_family(g);
    OrbitCategory o = orbit_category(g, f);
    REQUIRE(o.category.num_objects() == 6);
    // objects sorted by subgroup order: 0 trivial, 1..3 order two, 4 order three, 5 full
    for (int i = 1; i <= 3; ++i) CHECK(hom_size(o.category, i, i) == 1);
    // coset counts out of the free orbit
    for (int h = 0; h < 6; ++h)
        CHECK(hom_size(o.category, 0, h) == g.order() / f.members[h].order());
    // terminal object is G/G
    auto t = o.category.terminal_object();
    REQUIRE(t.has_value());
    CHECK(*t == 5);
}

TEST_CASE("grothendieck construction of a point over a point") {
    FiniteCategory pt;
    pt.objects = {"*"};
    pt.add_morphism(0, 0, "id");
    pt.set_composition(0, 0, 0);
    pt.finish({0});

    CatValuedFunctor f;
    f.source = pt;
    f.fibers = {pt};
    f.on_mor = {{{0}, {0}}};
    f.validate();
    GrothendieckCategory gr = grothendieck(f);
    CHECK(gr.category.num_objects() == 1);
    CHECK(gr.category.num_morphisms() == 1);
}

TEST_CASE("grothendieck of the coset functor over Z2 has three objects") {
    StandardModel m = model_for("Z2");
    CHECK(m.total.category.num_objects() == 3);
    long expected = 0;
    for (const auto& fiber : m.functor.fibers) expected += fiber.num_objects();
    CHECK(m.total.category.num_objects() == expected);
}

TEST_CASE("object counts of the total category equal summed fiber sizes") {
    for (const char* name : {"Z3", "Z2xZ2", "S3"}) {
        StandardModel m = model_for(name);
        long expected = 0;
        for (const auto& fiber : m.functor.fibers) expected += fiber.num_objects();
        CHECK(m.total.category.num_objects() == expected);
    }
}

TEST_CASE("fixed subcategory: trivial subgroup fixes everything") {
    StandardModel m = model_for("Z2");
    Subgroup trivial{{Perm::identity(m.group.degree)}};
    FiniteCategory fixed = fixed_subcategory(m.total.category, m.action, trivial);
    CHECK(fixed.num_objects() == m.total.category.num_objects());
}

TEST_CASE("fixed subcategory of the full Z2 action is the single top object") {
    StandardModel m = model_for("Z2");
    Subgroup whole{m.group.elements};
    FiniteCategory fixed = fixed_subcategory(m.total.category, m.action, whole);
    CHECK(fixed.num_objects() == 1);
    CHECK(fixed.initial_object().has_value());
}

TEST_CASE("every fixed subcategory over S3 has an initial object") {
    StandardModel m = model_for("S3");
    for (const Subgroup& k : m.family.members) {
        FiniteCategory fixed = fixed_subcategory(m.total.category, m.action, k);
        auto init = fixed.initial_object();
        REQUIRE(init.has_value());
        // the distinguished object (G/K, eK) is among the fixed ones
        int want = -1;
        for (int o = 0; o < m.total.category.num_objects(); ++o) {
            auto [h, c] = m.total.object_parts[o];
            if (m.family.members[h] == k && c == 0) want = o;
        }
        REQUIRE(want >= 0);
        bool found = false;
        for (const auto& label : fixed.objects)
            if (label == m.total.category.objects[want]) found = true;
        CHECK(found);
    }
}

TEST_CASE("initial object detection on a discrete two-object category") {
    FiniteCategory two;
    two.objects = {"a", "b"};
    int ia = two.add_morphism(0, 0, "id_a");
    int ib = two.add_morphism(1, 1, "id_b");
    two.set_composition(ia, ia, ia);
    two.set_composition(ib, ib, ib);
    two.finish({ia, ib});
    CHECK(!two.initial_object().has_value());
    CHECK(!two.terminal_object().has_value());
}

TEST_CASE("quotient by the trivial group is the identity") {
    StandardModel m = model_for("Z1");
    QuotientCategory q = quotient_category(m.total.category, m.action);
    CHECK(q.category.num_objects() == m.total.category.num_objects());
    CHECK(q.category.num_morphisms() == m.total.category.num_morphisms());
}

TEST_CASE("quotient of the total category is the orbit category (Z2)") {
    StandardModel m = model_for("Z2");
    QuotientCategory q = quotient_category(m.total.category, m.action);
    REQUIRE(q.category.num_objects() == 2);
    CatFunctor iso = quotient_orbit_isomorphism(m, q);
    CHECK(is_isomorphism(iso, q.category, m.orbit.category));
}

TEST_CASE("quotient identification holds across the finite catalogue") {
    for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3"}) {
        StandardModel m = model_for(name);
        QuotientCategory q = quotient_category(m.total.category, m.action);
        CatFunctor iso = quotient_orbit_isomorphism(m, q);
        CHECK(is_isomorphism(iso, q.category, m.orbit.category));
    }
}

TEST_CASE("full subcategory keeps composition") {
    StandardModel m = model_for("S3");
    std::vector<int> objs;
    for (int o = 0; o < m.total.category.num_objects(); ++o) objs.push_back(o);
    FiniteCategory same = m.total.category.full_subcategory(objs);
    CHECK(same.num_morphisms() == m.total.category.num_morphisms());
}
