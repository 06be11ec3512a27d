#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "properclass/errors.hpp"
#include "properclass/homology.hpp"
#include "properclass/smith.hpp"

using namespace properclass;

namespace {

// Independent oracle: repeated gcd elimination without pivoting finesse
// or transform tracking. Returns the nonzero invariant factors.
std::vector<mpz_class> snf_oracle(IntMatrix a) {
    std::vector<mpz_class> out;
    int t = 0;
    int n = std::min(a.rows(), a.cols());
    while (t < n) {
        // find any nonzero entry
        int pr = -1, pc = -1;
        for (int i = t; i < a.rows() && pr < 0; ++i)
            for (int j = t; j < a.cols(); ++j)
                if (a.at(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        bool again = true;
        while (again) {
            again = false;
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (int i = t + 1; i < a.rows(); ++i)
                    while (a.at(i, t) != 0) {
                        mpz_class q = a.at(i, t) / a.at(t, t);
                        a.add_row_multiple(i, t, -q);
                        if (a.at(i, t) != 0) {
                            a.swap_rows(i, t);
                            dirty = true;
                        }
                    }
                for (int j = t + 1; j < a.cols(); ++j)
                    while (a.at(t, j) != 0) {
                        mpz_class q = a.at(t, j) / a.at(t, t);
                        a.add_col_multiple(j, t, -q);
                        if (a.at(t, j) != 0) {
                            a.swap_cols(j, t);
                            dirty = true;
                        }
                    }
            }
            for (int i = t + 1; i < a.rows() && !again; ++i)
                for (int j = t + 1; j < a.cols(); ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        a.add_row_multiple(t, i, 1);
                        again = true;
                        break;
                    }
        }
        if (a.at(t, t) < 0) a.negate_row(t);
        out.push_back(a.at(t, t));
        ++t;
    }
    return out;
}

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("smith normal form of the identity") {
    SmithResult r = smith_normal_form(IntMatrix::identity(2));
    CHECK(r.diagonal() == std::vector<mpz_class>{1, 1});
}

TEST_CASE("smith normal form [[2,4],[6,8]] is diag(2,4)") {
    SmithResult r = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
    CHECK(r.diagonal() == std::vector<mpz_class>{2, 4});
}

TEST_CASE("smith normal form of the zero matrix") {
    SmithResult r = smith_normal_form(IntMatrix(3, 2));
    CHECK(r.diagonal() == std::vector<mpz_class>{0, 0});
}

TEST_CASE("random smith normal forms match the gcd-elimination oracle") {
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<int> dim(1, 6), entry(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
        SmithResult r = smith_normal_form(m);
        std::vector<mpz_class> diag;
        for (const mpz_class& d : r.diagonal())
            if (d != 0) diag.push_back(d);
        CHECK(diag == snf_oracle(m));

        // sparse engine agrees
        SmithInvariants inv = sparse_smith_invariants(SparseIntMatrix::from_dense(m));
        CHECK(inv.rank == static_cast<long>(diag.size()));
        std::vector<mpz_class> nontrivial;
        for (const mpz_class& d : diag)
            if (d != 1) nontrivial.push_back(d);
        CHECK(inv.nontrivial == nontrivial);
    }
}

TEST_CASE("tetrahedron boundary has sphere homology") {
    // cells: 4 vertices, 6 edges, 4 triangles
    ChainComplex cc;
    cc.dims = {4, 6, 4};
    cc.boundary.resize(3);
    // edges 01 02 03 12 13 23
    cc.boundary[1] = SparseIntMatrix(4, 6);
    int edge_v[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int e = 0; e < 6; ++e) {
        cc.boundary[1].add(edge_v[e][0], e, -1);
        cc.boundary[1].add(edge_v[e][1], e, 1);
    }
    // triangles 012 013 023 123 with edges (ij, ik, jk)
    cc.boundary[2] = SparseIntMatrix(6, 4);
    int tri_e[4][3] = {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}};
    for (int t = 0; t < 4; ++t) {
        cc.boundary[2].add(tri_e[t][2], t, 1);
        cc.boundary[2].add(tri_e[t][1], t, -1);
        cc.boundary[2].add(tri_e[t][0], t, 1);
    }
    HomologyResult h = homology(cc);
    CHECK(h.at(0).betti == 1);
    CHECK(h.at(1).betti == 0);
    CHECK(h.at(1).torsion.empty());
    CHECK(h.at(2).betti == 1);
}

TEST_CASE("a single point") {
    ChainComplex cc;
    cc.dims = {1};
    cc.boundary.resize(1);
    HomologyResult h = homology(cc);
    CHECK(h.at(0).betti == 1);
    CHECK(h.groups.size() == 1);
}

TEST_CASE("boundary condition violation is detected") {
    ChainComplex cc;
    cc.dims = {1, 1, 1};
    cc.boundary.resize(3);
    cc.boundary[1] = SparseIntMatrix(1, 1);
    cc.boundary[1].add(0, 0, 1);
    cc.boundary[2] = SparseIntMatrix(1, 1);
    cc.boundary[2].add(0, 0, 1);
    CHECK_THROWS_AS(homology(cc), BoundaryConditionViolated);
}

TEST_CASE("field coefficients: rank arithmetic mod p") {
    // boundary multiplication by 2: H over Z has Z/2 torsion, over F2 both
    // kernel and cokernel grow
    ChainComplex cc;
    cc.dims = {1, 1};
    cc.boundary.resize(2);
    cc.boundary[1] = SparseIntMatrix(1, 1);
    cc.boundary[1].add(0, 0, 2);
    HomologyResult hz = homology(cc);
    CHECK(hz.at(0).betti == 0);
    REQUIRE(hz.at(0).torsion.size() == 1);
    CHECK(hz.at(0).torsion[0] == 2);
    HomologyResult h2 = homology(cc, Coefficients::mod(2));
    CHECK(h2.at(0).betti == 1);
    CHECK(h2.at(1).betti == 1);
    HomologyResult h3 = homology(cc, Coefficients::mod(3));
    CHECK(h3.at(0).betti == 0);
    CHECK(h3.at(1).betti == 0);
}

TEST_CASE("unimodular transforms are checked internally") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m(4, 5);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 5; ++j) m.at(i, j) = entry(rng);
        SmithResult r = smith_normal_form(m);  // throws if U*M*V != D
        CHECK(r.u.determinant() * r.u.determinant() == 1);
    }
}
