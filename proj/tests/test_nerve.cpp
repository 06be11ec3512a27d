#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "properclass/nerve.hpp"
#include "properclass/orbit.hpp"

using namespace properclass;

namespace {

FiniteCategory point_category() {
    FiniteCategory pt;
    pt.objects = {"*"};
    pt.add_morphism(0, 0, "id");
    pt.set_composition(0, 0, 0);
    pt.finish({0});
    return pt;
}

// one object, morphism group Z/2
FiniteCategory bz2_category() {
    FiniteCategory c;
    c.objects = {"*"};
    int id = c.add_morphism(0, 0, "e");
    int s = c.add_morphism(0, 0, "s");
    c.set_composition(id, id, id);
    c.set_composition(id, s, s);
    c.set_composition(s, id, s);
    c.set_composition(s, s, id);
    c.finish({id});
    return c;
}

FiniteCategory interval_poset() {
    FiniteCategory c;
    c.objects = {"0", "1"};
    int i0 = c.add_morphism(0, 0, "id0");
    int i1 = c.add_morphism(1, 1, "id1");
    int f = c.add_morphism(0, 1, "le");
    c.set_composition(i0, i0, i0);
    c.set_composition(i1, i1, i1);
    c.set_composition(i0, f, f);
    c.set_composition(f, i1, f);
    c.finish({i0, i1});
    return c;
}

}  // namespace

TEST_CASE("nerve of a point: one cell in degree zero only") {
    TruncatedSimplicialSet n = nerve_truncated(point_category(), 3);
    CHECK(n.cell_count(0) == 1);
    CHECK(n.cell_count(1) == 0);
    CHECK(n.cell_count(2) == 0);
    CHECK(n.cell_count(3) == 0);
}

TEST_CASE("nerve of BZ/2 has one nondegenerate cell per degree") {
    TruncatedSimplicialSet n = nerve_truncated(bz2_category(), 4);
    for (int d = 0; d <= 4; ++d) CHECK(n.cell_count(d) == 1);
    n.validate_identities();
}

TEST_CASE("homology of BZ/2 through degree four") {
    HomologyResult h = homology_of_nerve(bz2_category(), 5);
    CHECK(h.at(0).betti == 1);
    CHECK(h.at(0).torsion.empty());
    CHECK(h.at(1).betti == 0);
    REQUIRE(h.at(1).torsion.size() == 1);
    CHECK(h.at(1).torsion[0] == 2);
    CHECK(h.at(2).trivial());
    CHECK(h.at(3).betti == 0);
    REQUIRE(h.at(3).torsion.size() == 1);
    CHECK(h.at(3).torsion[0] == 2);
    CHECK(h.at(4).trivial());
}

TEST_CASE("BZ/2 with field coefficients") {
    HomologyResult h2 = homology_of_nerve(bz2_category(), 5, Coefficients::mod(2));
    for (int d = 0; d <= 4; ++d) CHECK(h2.at(d).betti == 1);
    HomologyResult h3 = homology_of_nerve(bz2_category(), 5, Coefficients::mod(3));
    CHECK(h3.at(0).betti == 1);
    for (int d = 1; d <= 4; ++d) CHECK(h3.at(d).betti == 0);
}

TEST_CASE("nerve of the interval poset") {
    TruncatedSimplicialSet n = nerve_truncated(interval_poset(), 3);
    CHECK(n.cell_count(0) == 2);
    CHECK(n.cell_count(1) == 1);
    CHECK(n.cell_count(2) == 0);
}

TEST_CASE("discrete category with two objects has H0 = Z^2") {
    FiniteCategory two;
    two.objects = {"a", "b"};
    int ia = two.add_morphism(0, 0, "ida");
    int ib = two.add_morphism(1, 1, "idb");
    two.set_composition(ia, ia, ia);
    two.set_composition(ib, ib, ib);
    two.finish({ia, ib});
    HomologyResult h = homology_of_nerve(two, 3);
    CHECK(h.at(0).betti == 2);
    CHECK(h.at(1).trivial());
}

TEST_CASE("size bound on nerve construction") {
    Limits lim;
    lim.max_cells = 3;
    CHECK_THROWS_AS(nerve_truncated(bz2_category(), 4, lim), SizeBoundExceeded);
}

TEST_CASE("nerve of a category with terminal object is acyclic") {
    PermGroup g = catalogue_perm_group("S3");
    OrbitCategory o = orbit_category(g, finite_family(g));
    HomologyResult h = homology_of_nerve(o.category, 4);
    CHECK(h.acyclic());
}

TEST_CASE("euler characteristic is consistent with betti numbers for a full complex") {
    // the interval poset nerve is complete (nothing above degree 1)
    TruncatedSimplicialSet n = nerve_truncated(interval_poset(), 3);
    HomologyResult h = homology(n.chain_complex());
    long chi_cells = n.euler_characteristic();
    long chi_betti = 0;
    for (size_t d = 0; d < h.groups.size(); ++d)
        chi_betti += (d % 2 == 0) ? h.groups[d].betti : -h.groups[d].betti;
    CHECK(chi_cells == chi_betti);
}

TEST_CASE("simplicial identities hold on catalogue nerves") {
    PermGroup g = catalogue_perm_group("Z4");
    StandardModel m = standard_model(g, finite_family(g));
    TruncatedSimplicialSet n = nerve_truncated(m.total.category, 4);
    n.validate_identities();
    TruncatedSimplicialSet no = nerve_truncated(m.orbit.category, 4);
    no.validate_identities();
}

TEST_CASE("pivot plans change nothing but the elimination order") {
    // ranks and invariant factors with and without the cone plan agree
    PermGroup g = catalogue_perm_group("Z2xZ2");
    StandardModel m = standard_model(g, finite_family(g));
    TruncatedSimplicialSet n = nerve_truncated(m.total.category, 4);
    ChainComplex cc = n.chain_complex();
    std::vector<PivotPlan> plans = cone_pivot_plans(m.total.category, n);
    REQUIRE(!plans.empty());
    for (int deg = 1; deg <= 4; ++deg) {
        SmithInvariants planned = sparse_smith_invariants(cc.boundary[deg], &plans[deg]);
        SmithInvariants generic = sparse_smith_invariants(cc.boundary[deg], nullptr);
        CHECK(planned.rank == generic.rank);
        CHECK(planned.nontrivial == generic.nontrivial);
        CHECK(sparse_rank_mod_p(cc.boundary[deg], 2, &plans[deg]) ==
              sparse_rank_mod_p(cc.boundary[deg], 2, nullptr));
    }
}

TEST_CASE("integral and mod-p homology agree on torsion-free acyclic nerves") {
    PermGroup g = catalogue_perm_group("S3");
    StandardModel m = standard_model(g, finite_family(g));
    HomologyResult hz = homology_of_nerve(m.total.category, 4);
    CHECK(hz.acyclic());
    for (long p : {2L, 3L, 5L}) {
        HomologyResult hp = homology_of_nerve(m.total.category, 4, Coefficients::mod(p));
        CHECK(hp.betti_vector() == hz.betti_vector());
    }
}
