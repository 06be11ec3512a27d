#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "properclass/errors.hpp"
#include "properclass/pi1.hpp"
#include "properclass/presentation.hpp"
#include "properclass/simplicial.hpp"
#include "properclass/todd_coxeter.hpp"

using namespace properclass;

TEST_CASE("word reduction") {
    CHECK(free_reduce({1, -1, 2}) == Word{2});
    CHECK(free_reduce({1, 2, -2, -1}) == Word{});
    CHECK(cyclic_reduce({1, 2, -1}) == Word{2});
    CHECK(invert_word({1, 2}) == Word{-2, -1});
}

TEST_CASE("presentation grammar round trip") {
    Presentation p = parse_presentation("gens: a b; rel: aBab");
    REQUIRE(p.num_generators() == 2);
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0] == Word{1, -2, 1, 2});
    CHECK(p.to_text() == "gens: a b; rel: aBab");
    CHECK_THROWS_AS(parse_presentation("rel: ab"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a; rel: ab"), ParseError);
}

TEST_CASE("abelianization via smith normal form") {
    // Z/3
    Presentation z3 = parse_presentation("gens: a; rel: aaa");
    Abelianization ab = abelianization(z3);
    CHECK(ab.rank == 0);
    REQUIRE(ab.torsion.size() == 1);
    CHECK(ab.torsion[0] == 3);
    // free abelian of rank 2
    Presentation z2 = parse_presentation("gens: x y; rel: xyXY");
    CHECK(abelianization(z2).rank == 2);
    CHECK(abelianization(z2).torsion.empty());
}

TEST_CASE("tietze: trivial relator removes a generator") {
    Presentation p = parse_presentation("gens: a b; rel: b");
    Presentation q = tietze_simplify(p);
    CHECK(q.num_generators() == 1);
    CHECK(q.relators.empty());
}

TEST_CASE("tietze: <a,b | ab, aaa> becomes one generator of order three") {
    Presentation p = parse_presentation("gens: a b; rel: ab; rel: aaa");
    Presentation q = tietze_simplify(p);
    CHECK(q.num_generators() == 1);
    REQUIRE(q.relators.size() == 1);
    CHECK(q.relators[0].size() == 3);
    CosetTable ct = todd_coxeter(q, {});
    REQUIRE(ct.status == CosetTable::Status::complete);
    CHECK(ct.index() == 3);
}

TEST_CASE("tietze: already minimal input is unchanged") {
    Presentation p = parse_presentation("gens: a b; rel: aabb");
    Presentation q = tietze_simplify(p);
    CHECK(q.num_generators() == 2);
    CHECK(q.relators.size() == 1);
}

TEST_CASE("todd-coxeter: cyclic group of order three") {
    Presentation p = parse_presentation("gens: a; rel: aaa");
    CosetTable ct = todd_coxeter(p, {});
    REQUIRE(ct.status == CosetTable::Status::complete);
    CHECK(ct.index() == 3);
}

TEST_CASE("todd-coxeter: full subgroup has index one") {
    Presentation p = parse_presentation("gens: a b; rel: abAB");
    CosetTable ct = todd_coxeter(p, {{1}, {2}});
    REQUIRE(ct.status == CosetTable::Status::complete);
    CHECK(ct.index() == 1);
}

TEST_CASE("todd-coxeter: overflow is a status, not an answer") {
    Presentation z = parse_presentation("gens: a");
    CosetTable ct = todd_coxeter(z, {}, 50);
    CHECK(ct.status == CosetTable::Status::overflowed);
}

TEST_CASE("todd-coxeter: index of a subgroup in the symmetric group") {
    // S3 = <s, t | s^2, t^3, (st)^2>; the subgroup <t> has index 2
    Presentation s3 = parse_presentation("gens: s t; rel: ss; rel: ttt; rel: stst");
    CosetTable ct = todd_coxeter(s3, {{2}});
    REQUIRE(ct.status == CosetTable::Status::complete);
    CHECK(ct.index() == 2);
    CosetTable full = todd_coxeter(s3, {});
    REQUIRE(full.status == CosetTable::Status::complete);
    CHECK(full.index() == 6);
}

TEST_CASE("group table from a completed enumeration") {
    Presentation s3 = parse_presentation("gens: s t; rel: ss; rel: ttt; rel: stst");
    GroupTable g = group_table(s3, todd_coxeter(s3, {}));
    REQUIRE(g.order == 6);
    for (long a = 0; a < 6; ++a) {
        CHECK(g.mult[0][a] == a);
        CHECK(g.mult[a][g.inverse[a]] == 0);
        for (long b = 0; b < 6; ++b)
            for (long c = 0; c < 6; ++c)
                CHECK(g.mult[g.mult[a][b]][c] == g.mult[a][g.mult[b][c]]);
    }
}

TEST_CASE("edge-path group of the sphere is trivial") {
    Presentation p = edge_path_presentation(fixture_sphere());
    auto order = enumerate_order(p);
    REQUIRE(order.has_value());
    CHECK(*order == 1);
}

TEST_CASE("edge-path group of the circle is free of rank one") {
    Presentation p = edge_path_presentation(fixture_circle(3));
    Presentation q = tietze_simplify(p);
    CHECK(q.num_generators() == 1);
    CHECK(q.relators.empty());
    Abelianization ab = abelianization(p);
    CHECK(ab.rank == 1);
    CHECK(ab.torsion.empty());
}

TEST_CASE("edge-path group of the projective plane abelianizes to Z/2") {
    Presentation p = edge_path_presentation(fixture_rp2());
    Abelianization ab = abelianization(p);
    CHECK(ab.rank == 0);
    REQUIRE(ab.torsion.size() == 1);
    CHECK(ab.torsion[0] == 2);
    auto order = enumerate_order(p);
    REQUIRE(order.has_value());
    CHECK(*order == 2);
}

TEST_CASE("edge-path abelianization equals first homology on the corpus") {
    for (const SimplicialComplex& x : {fixture_circle(4), fixture_sphere(), fixture_rp2(),
                                       fixture_torus(), fixture_moore_z3()}) {
        Abelianization ab = abelianization(edge_path_presentation(x));
        HomologyResult h = homology(x);
        CHECK(ab.rank == h.at(1).betti);
        CHECK(ab.torsion == h.at(1).torsion);
    }
}

TEST_CASE("edge-path presentation requires a connected complex") {
    SimplicialComplex two = SimplicialComplex::from_simplices(2, {{0}, {1}});
    CHECK_THROWS_AS(edge_path_presentation(two), DisconnectedComplex);
}

TEST_CASE("wallpaper presentation with three-fold symmetry") {
    // relators in the catalogue convention: adjoining only the rotation
    // leaves the deficient quotient Z/3; adding the shifted rotation
    // kills everything
    Presentation p3 = parse_presentation(
        "gens: x y z; rel: xyXY; rel: zzz; rel: zxZYx; rel: zyZx");
    CosetTable with_z = todd_coxeter(adjoin_relators(p3, {{3}}), {});
    REQUIRE(with_z.status == CosetTable::Status::complete);
    CHECK(with_z.index() == 3);
    CosetTable with_both = todd_coxeter(adjoin_relators(p3, {{3}, {1, 3}}), {});
    REQUIRE(with_both.status == CosetTable::Status::complete);
    CHECK(with_both.index() == 1);
}

TEST_CASE("coset enumeration agrees with abelianization on abelian presentations") {
    // <a, b | a^m, b^n, [a,b]> has order m*n
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            Presentation p;
            p.generator_names = {"a", "b"};
            Word am, bn;
            for (int i = 0; i < m; ++i) am.push_back(1);
            for (int i = 0; i < n; ++i) bn.push_back(2);
            p.relators = {am, bn, free_reduce({1, 2, -1, -2})};
            CosetTable ct = todd_coxeter(p, {});
            REQUIRE(ct.status == CosetTable::Status::complete);
            CHECK(ct.index() == m * n);
        }
}

TEST_CASE("coset enumeration handles a collapsing presentation") {
    // both relators force a = 1, so the group is trivial despite the
    // first scan defining several cosets
    Presentation p = parse_presentation("gens: a; rel: aaaaa; rel: aa");
    CosetTable ct = todd_coxeter(p, {});
    REQUIRE(ct.status == CosetTable::Status::complete);
    CHECK(ct.index() == 1);
}

TEST_CASE("pi1 comparison drives both abelianization and order checks") {
    Presentation a = parse_presentation("gens: a; rel: aaa");
    Presentation b = parse_presentation("gens: x y; rel: xxx; rel: y");
    Pi1Comparison cmp = compare_presentations(a, b);
    CHECK(cmp.abelianizations_match);
    CHECK(cmp.orders_checked);
    CHECK(cmp.orders_match);
    CHECK(cmp.consistent());

    Presentation c = parse_presentation("gens: a; rel: aa");
    Pi1Comparison bad = compare_presentations(a, c);
    CHECK(!bad.abelianizations_match);
    CHECK(!bad.consistent());
}
