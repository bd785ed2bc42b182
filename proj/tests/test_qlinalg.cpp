#include "gpd/qlinalg.hpp"

#include <doctest.h>

using gpd::GaussRat;
using gpd::QMat;
using gpd::QVec;
using gpd::Rat;
using gpd::RowReducer;

TEST_CASE("matrix product and trace") {
    QMat a(2, 2), b(2, 2);
    a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(1, 0) = 3; a.at(1, 1) = 4;
    b.at(0, 0) = 0; b.at(0, 1) = 1; b.at(1, 0) = 1; b.at(1, 1) = 0;
    QMat ab = a * b;
    CHECK(ab.at(0, 0) == GaussRat(2));
    CHECK(ab.at(0, 1) == GaussRat(1));
    CHECK(ab.trace() == GaussRat(5));
    CHECK(QMat::identity(3).is_identity());
    CHECK((b * b).is_identity());
}

TEST_CASE("rank of a hand-checked matrix") {
    // rows: (1,2,3), (2,4,6), (0,1,1) -> rank 2
    RowReducer r(3);
    CHECK(r.add_row({GaussRat(1), GaussRat(2), GaussRat(3)}));
    CHECK(!r.add_row({GaussRat(2), GaussRat(4), GaussRat(6)}));
    CHECK(r.add_row({GaussRat(0), GaussRat(1), GaussRat(1)}));
    CHECK(r.rank() == 2);
    CHECK(r.free_cols() == std::vector<std::size_t>{2});
}

TEST_CASE("nullspace basis solves the system") {
    // x0 - x1 = 0, x1 - x2 = 0  -> nullspace spanned by (1,1,1)
    RowReducer r(3);
    r.add_sparse_row({{0, GaussRat(1)}, {1, GaussRat(-1)}});
    r.add_sparse_row({{1, GaussRat(1)}, {2, GaussRat(-1)}});
    auto basis = r.nullspace_basis();
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == QVec{GaussRat(1), GaussRat(1), GaussRat(1)});
}

TEST_CASE("nullspace vectors are annihilated, dimensions add up") {
    // Random-ish 4x6 integer matrix; rank + nullity = 6.
    std::vector<QVec> rows = {
        {GaussRat(1), GaussRat(0), GaussRat(2), GaussRat(-1), GaussRat(0), GaussRat(3)},
        {GaussRat(0), GaussRat(1), GaussRat(1), GaussRat(1), GaussRat(1), GaussRat(0)},
        {GaussRat(1), GaussRat(1), GaussRat(3), GaussRat(0), GaussRat(1), GaussRat(3)},  // row0+row1
        {GaussRat(2), GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(1), GaussRat(1)},
    };
    RowReducer r(6);
    for (auto row : rows) r.add_row(row);
    CHECK(r.rank() == 3);
    auto basis = r.nullspace_basis();
    CHECK(basis.size() == 3);
    for (const auto& x : basis) {
        for (const auto& row : rows) {
            GaussRat dot;
            for (std::size_t c = 0; c < 6; ++c) dot += row[c] * x[c];
            CHECK(dot.is_zero());
        }
    }
}

TEST_CASE("reduce returns remainders supported on free columns") {
    RowReducer r(3);
    r.add_row({GaussRat(1), GaussRat(1), GaussRat(0)});
    QVec v = {GaussRat(2), GaussRat(5), GaussRat(7)};
    QVec rem = r.reduce(v);
    CHECK(rem[0].is_zero());  // pivot coordinate cleared
    CHECK(rem[1] == GaussRat(3));
    CHECK(rem[2] == GaussRat(7));
}

TEST_CASE("gaussian entries are handled exactly") {
    RowReducer r(2);
    r.add_row({GaussRat::i(), GaussRat(1)});
    // (i, 1) and (1, -i) are parallel over Q(i).
    CHECK(!r.add_row({GaussRat(1), GaussRat(Rat(0), Rat(-1))}));
    CHECK(r.rank() == 1);
}
