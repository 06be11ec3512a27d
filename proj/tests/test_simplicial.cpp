#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "properclass/colimits.hpp"
#include "properclass/errors.hpp"
#include "properclass/nerve.hpp"
#include "properclass/simplicial.hpp"

using namespace properclass;

namespace {

std::vector<long> betti(const SimplicialComplex& x) {
    return homology(x).betti_vector();
}

}  // namespace

TEST_CASE("fixture homology: interval, circle, sphere, torus") {
    CHECK(homology(fixture_interval(3)).acyclic());
    CHECK(betti(fixture_circle(3)) == std::vector<long>{1, 1});
    CHECK(betti(fixture_sphere()) == std::vector<long>{1, 0, 1});
    CHECK(betti(fixture_torus()) == std::vector<long>{1, 2, 1});
}

TEST_CASE("projective plane: integer torsion and mod-2 homology") {
    SimplicialComplex rp2 = fixture_rp2();
    HomologyResult h = homology(rp2);
    CHECK(h.at(0).betti == 1);
    CHECK(h.at(1).betti == 0);
    REQUIRE(h.at(1).torsion.size() == 1);
    CHECK(h.at(1).torsion[0] == 2);
    CHECK(h.at(2).trivial());
    HomologyResult h2 = homology(rp2, Coefficients::mod(2));
    CHECK(h2.betti_vector() == std::vector<long>{1, 1, 1});
}

TEST_CASE("moore space of Z/3") {
    HomologyResult h = homology(fixture_moore_z3());
    CHECK(h.at(0).betti == 1);
    CHECK(h.at(1).betti == 0);
    REQUIRE(h.at(1).torsion.size() == 1);
    CHECK(h.at(1).torsion[0] == 3);
    CHECK(h.at(2).trivial());
}

TEST_CASE("downward closure and validation") {
    SimplicialComplex x = SimplicialComplex::from_simplices(3, {{0, 1, 2}});
    CHECK(x.simplex_count(0) == 3);
    CHECK(x.simplex_count(1) == 3);
    CHECK(x.simplex_count(2) == 1);
    CHECK_THROWS_AS(SimplicialComplex::from_simplices(2, {{0, 0}}), Error);
    CHECK(x.euler_characteristic() == 1);
}

TEST_CASE("simplex category of an edge and of a triangle boundary") {
    FiniteCategory edge = simplex_category(fixture_interval(1));
    CHECK(edge.num_objects() == 3);
    long non_id = 0;
    for (int m = 0; m < edge.num_morphisms(); ++m)
        if (!edge.is_identity(m)) ++non_id;
    CHECK(non_id == 2);
    CHECK(simplex_category(fixture_circle(3)).num_objects() == 6);
}

TEST_CASE("nerve of the simplex category is the subdivision") {
    for (const SimplicialComplex& x :
         {fixture_interval(2), fixture_circle(4), fixture_sphere(), fixture_rp2()}) {
        SimplicialComplex sd = barycentric_subdivision(x);
        TruncatedSimplicialSet n = nerve_truncated(simplex_category(x), x.dim() + 1);
        for (int k = 0; k <= x.dim(); ++k) CHECK(n.cell_count(k) == sd.simplex_count(k));
    }
}

TEST_CASE("subdivision invariance of homology") {
    for (const SimplicialComplex& x : {fixture_interval(1), fixture_circle(3), fixture_sphere(),
                                       fixture_rp2(), fixture_torus()}) {
        HomologyResult direct = homology(x);
        HomologyResult via_nerve = homology_of_nerve(simplex_category(x), x.dim() + 1);
        for (int d = 0; d <= x.dim(); ++d) CHECK(direct.at(d) == via_nerve.at(d));
        // and the subdivision complex agrees as well
        HomologyResult via_sd = homology(barycentric_subdivision(x));
        for (int d = 0; d <= x.dim(); ++d) CHECK(direct.at(d) == via_sd.at(d));
    }
}

TEST_CASE("quotient: trivial action is an isomorphism") {
    SimplicialComplex x = fixture_sphere();
    std::vector<int> id{0, 1, 2, 3};
    SimplicialComplex q = quotient_complex(x, {id});
    CHECK(q.total_simplices() == x.total_simplices());
}

TEST_CASE("quotient: interval endpoint swap needs one subdivision") {
    SimplicialComplex interval = fixture_interval(1);
    std::vector<int> swap{1, 0};
    CHECK_THROWS_AS(quotient_complex(interval, {std::vector<int>{0, 1}, swap}),
                    NonRegularAction);
    // after one subdivision the quotient is again an interval
    SimplicialComplex sd = barycentric_subdivision(interval);
    std::vector<int> lifted = lift_to_subdivision(interval, swap);
    SimplicialComplex q =
        quotient_complex(sd, {lift_to_subdivision(interval, {0, 1}), lifted});
    CHECK(q.num_vertices == 2);
    CHECK(homology(q).acyclic());
}

TEST_CASE("quotient: square boundary by half rotation is a circle") {
    SimplicialComplex square = fixture_circle(4);
    std::vector<int> rot{2, 3, 0, 1};
    std::vector<int> id{0, 1, 2, 3};
    SimplicialComplex sd = barycentric_subdivision(square);
    std::vector<int> rot1 = lift_to_subdivision(square, rot);
    std::vector<int> id1 = lift_to_subdivision(square, id);
    SimplicialComplex q = quotient_complex(sd, {id1, rot1});
    CHECK(betti(q) == std::vector<long>{1, 1});
}

TEST_CASE("quotient rejects vertex-orbit collisions inside a simplex") {
    // rotating a triangle boundary by one step maps no simplex to itself
    // setwise, but every edge meets a single orbit twice
    SimplicialComplex circle = fixture_circle(3);
    std::vector<int> rot{1, 2, 0};
    std::vector<int> rot2{2, 0, 1};
    CHECK_THROWS_AS(quotient_complex(circle, {std::vector<int>{0, 1, 2}, rot, rot2}),
                    NonRegularAction);
}

TEST_CASE("product of intervals is a disk") {
    SimplicialComplex p = product_complex(fixture_interval(1), fixture_interval(1));
    CHECK(p.num_vertices == 4);
    CHECK(p.simplex_count(2) == 2);
    CHECK(homology(p).acyclic());
}

TEST_CASE("product of circles is a torus") {
    SimplicialComplex t = product_complex(fixture_circle(3), fixture_circle(3));
    CHECK(betti(t) == std::vector<long>{1, 2, 1});
    CHECK(t.euler_characteristic() == 0);
}

TEST_CASE("product of spheres has the Kuenneth betti numbers") {
    SimplicialComplex s4 = product_complex(fixture_sphere(), fixture_sphere());
    HomologyResult h = homology(s4);
    CHECK(h.betti_vector() == std::vector<long>{1, 0, 2, 0, 1});
    for (const auto& g : h.groups) CHECK(g.torsion.empty());
}

TEST_CASE("product homology is symmetric in its factors") {
    SimplicialComplex a = fixture_interval(2);
    SimplicialComplex b = fixture_circle(4);
    HomologyResult ab = homology(product_complex(a, b));
    HomologyResult ba = homology(product_complex(b, a));
    for (int d = 0; d <= 2; ++d) CHECK(ab.at(d) == ba.at(d));
    CHECK(ab.at(1).betti == 1);  // cylinder
}

TEST_CASE("wedge of a sphere and a point") {
    SimplicialComplex w = wedge_complex(fixture_sphere(), 0, fixture_point(), 0);
    HomologyResult h = homology(w);
    CHECK(h.at(2).betti == 1);
    CHECK(h.at(1).trivial());
}

TEST_CASE("wedge of two circles") {
    SimplicialComplex w = wedge_complex(fixture_circle(3), 0, fixture_circle(3), 0);
    CHECK(betti(w) == std::vector<long>{1, 2});
}

TEST_CASE("pushout of two intervals along two points is a circle") {
    SimplicialComplex a = SimplicialComplex::from_simplices(2, {{0}, {1}});
    SimplicialComplex x = fixture_interval(1);
    SimplicialComplex y = fixture_interval(1);
    SimplicialMap f{{0, 1}};
    SimplicialMap g{{0, 1}};
    SimplicialComplex z = pushout_complex(a, x, y, f, g);
    CHECK(betti(z) == std::vector<long>{1, 1});
}

TEST_CASE("pushout rejects non-injective legs") {
    SimplicialComplex a = SimplicialComplex::from_simplices(2, {{0}, {1}});
    SimplicialComplex x = fixture_interval(1);
    SimplicialMap collapse{{0, 0}};
    CHECK_THROWS_AS(pushout_complex(a, x, x, collapse, SimplicialMap{{0, 1}}),
                    NonInjectiveMap);
}

TEST_CASE("telescope of identity maps on a circle keeps H1") {
    SimplicialComplex c = fixture_circle(4);
    SimplicialMap id{{0, 1, 2, 3}};
    SimplicialComplex t = telescope_complex({c, c, c}, {id, id});
    CHECK(betti(t) == std::vector<long>{1, 1, 0});
    CHECK(homology(t).at(1).torsion.empty());
}

TEST_CASE("telescope rejects non-injective stage maps") {
    SimplicialComplex c6 = fixture_circle(6);
    SimplicialComplex c3 = fixture_circle(3);
    SimplicialMap cover{{0, 1, 2, 0, 1, 2}};  // simplicial but two-to-one
    CHECK_THROWS_AS(telescope_complex({c6, c3}, {cover}), NonInjectiveMap);
}

TEST_CASE("telescope of circle inclusions into a disk") {
    // staged inclusion: circle into the cone over it
    SimplicialComplex c = fixture_circle(3);
    SimplicialComplex disk = SimplicialComplex::from_simplices(
        4, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1}, {1, 2}, {0, 2}});
    SimplicialMap incl{{0, 1, 2}};
    SimplicialComplex t = telescope_complex({c, disk}, {incl});
    CHECK(homology(t).acyclic());  // retracts onto the disk
}

TEST_CASE("exchange format round trip") {
    SimplicialComplex x = fixture_rp2();
    SimplicialComplex y = parse_complex_text(complex_to_text(x));
    CHECK(x.simplices == y.simplices);
    CHECK_THROWS_AS(parse_complex_text("t 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_complex_text(""), ParseError);
}

TEST_CASE("euler characteristic equals alternating betti sum on fixtures") {
    for (const SimplicialComplex& x :
         {fixture_circle(5), fixture_sphere(), fixture_rp2(), fixture_torus(),
          fixture_moore_z3()}) {
        HomologyResult h = homology(x);
        long chi = 0;
        for (size_t d = 0; d < h.groups.size(); ++d)
            chi += (d % 2 == 0) ? h.groups[d].betti : -h.groups[d].betti;
        CHECK(chi == x.euler_characteristic());
    }
}
