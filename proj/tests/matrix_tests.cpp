#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "minrank/graph.hpp"
#include "minrank/graph6.hpp"
#include "minrank/matrix.hpp"

#include "fixtures.hpp"

using namespace minrank;

namespace {

// Laplace expansion determinant, for cross-checking rank on small matrices.
Rational det_expand(const Mat& m) {
    int n = m.rows;
    if (n == 1) return m.at(0, 0);
    Rational d = 0;
    int sign = 1;
    for (int j = 0; j < n; j++) {
        Mat minor(n - 1, n - 1);
        for (int i = 1; i < n; i++)
            for (int k = 0, c = 0; k < n; k++)
                if (k != j) minor.at(i - 1, c++) = m.at(i, k);
        d += sign * m.at(0, j) * det_expand(minor);
        sign = -sign;
    }
    return d;
}

// Largest order of a square submatrix with nonzero determinant.
int rank_by_minors(const Mat& m) {
    int best = 0;
    int limit = std::min(m.rows, m.cols);
    for (int k = 1; k <= limit; k++) {
        for (Mask rm = 0; rm < (Mask(1) << m.rows); rm++) {
            if (popcount(rm) != k) continue;
            for (Mask cm = 0; cm < (Mask(1) << m.cols); cm++) {
                if (popcount(cm) != k) continue;
                std::vector<int> rs, cs;
                for (int i = 0; i < m.rows; i++)
                    if (has_bit(rm, i)) rs.push_back(i);
                for (int j = 0; j < m.cols; j++)
                    if (has_bit(cm, j)) cs.push_back(j);
                if (det_expand(submatrix(m, rs, cs)) != 0) {
                    best = k;
                    goto next_order;
                }
            }
        }
        break;  // no nonzero minor of order k, none larger either
    next_order:;
    }
    return best;
}

Mat diag3(int a, int b, int c) {
    Mat d(3, 3);
    d.at(0, 0) = a;
    d.at(1, 1) = b;
    d.at(2, 2) = c;
    return d;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(rational_str(parse_rational("4/2")) == "2");
    CHECK(rational_str(Rational(1, 2)) == "1/2");
    CHECK(rational_str(Rational(-1, 3)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), error);
    CHECK_THROWS_AS(parse_rational("x"), error);
    CHECK_THROWS_AS(parse_rational(""), error);
}

TEST_CASE("matrix text round trips") {
    Mat m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = Rational(1, 2);
    m.at(1, 0) = Rational(-3, 4);
    CHECK(format_matrix(m) == "2\n1 1/2\n-3/4 0\n");
    CHECK(parse_matrix_text(format_matrix(m)) == m);

    Mat r = parse_matrix_text("# comment\n2 3\n1 2 3\n4 5 6\n");
    CHECK(r.rows == 2);
    CHECK(r.cols == 3);
    CHECK(r.at(1, 2) == 6);
    CHECK(format_matrix(r) == "2 3\n1 2 3\n4 5 6\n");

    // A bare number heads a square matrix.
    CHECK(parse_matrix_text("1\n7\n").at(0, 0) == 7);
    CHECK_THROWS_AS(parse_matrix_text(""), error);
    CHECK_THROWS_AS(parse_matrix_text("2\n1 2 3"), error);
    CHECK_THROWS_AS(parse_matrix_text("0\n"), error);
    CHECK_THROWS_AS(parse_matrix_text("2\n1 2 3 q"), error);
}

TEST_CASE("rank of fixed matrices") {
    CHECK(rank(identity(4)) == 4);
    CHECK(rank(Mat(3, 5)) == 0);
    CHECK(rank(fx::house_minor_witness()) == 2);
    CHECK(rank(fx::house_lifted()) == 2);
    CHECK(rank(fx::rank3_witness()) == 3);
    // Rows 2 and 4 repeat, row 2 is the sum of the first two, and the last
    // row is row0 - row1 + row3, so the 7x7 witness already has rank 3; the
    // lift keeps it (the new column lies in the column space).
    CHECK(rank(fx::lift8_minor_witness()) == 3);
    CHECK(rank(fx::lift8_lifted()) == 3);
}

TEST_CASE("rank matches the minor oracle on random matrices") {
    std::mt19937 rng(20260814);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 30; trial++) {
        Mat m(dim(rng), dim(rng));
        for (auto& x : m.a) x = entry(rng);
        CAPTURE(trial);
        CHECK(rank(m) == rank_by_minors(m));
    }
}

TEST_CASE("reduced echelon form") {
    Mat m = parse_matrix_text("2 3\n1 2 3\n2 4 7\n");
    CHECK(rref(m) == parse_matrix_text("2 3\n1 2 0\n0 0 1\n"));
    CHECK(rref(identity(3)) == identity(3));
}

TEST_CASE("nullspace basis is echelonized and annihilates") {
    // Rows {2,3}, columns {0..3} of the 4-vertex witness give a rank-1
    // matrix whose kernel has the echelonized basis below; the basis sum is
    // the lift direction used later.
    Mat sub = submatrix(fx::house_minor_witness(), {2, 3}, {0, 1, 2, 3});
    CHECK(sub == parse_matrix_text("2 4\n1 1 0 0\n1 1 0 0\n"));
    auto basis = nullspace_basis(sub);
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == std::vector<Rational>{1, -1, 0, 0});
    CHECK(basis[1] == std::vector<Rational>{0, 0, 1, 0});
    CHECK(basis[2] == std::vector<Rational>{0, 0, 0, 1});

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 25; trial++) {
        Mat m(3, 5);
        for (auto& x : m.a) x = entry(rng);
        auto b = nullspace_basis(m);
        CHECK(static_cast<int>(b.size()) == 5 - rank(m));
        for (const auto& v : b)
            for (const Rational& y : mat_vec(m, v)) CHECK(y == 0);
    }
    CHECK(nullspace_basis(identity(2)).empty());
}

TEST_CASE("inertia of fixed matrices") {
    Inertia i3 = inertia(identity(3));
    CHECK(i3.n_plus == 3);
    CHECK(i3.n_minus == 0);
    CHECK(i3.n_zero == 0);

    Inertia d = inertia(diag3(1, 1, -1));
    CHECK(d.n_plus == 2);
    CHECK(d.n_minus == 1);
    CHECK(d.n_zero == 0);

    Inertia w = inertia(fx::rank3_witness());
    CHECK(w.n_plus == 2);
    CHECK(w.n_minus == 1);
    CHECK(w.n_zero == 5);

    CHECK_THROWS_AS(inertia(parse_matrix_text("2\n0 1\n2 0\n")), error);
}

TEST_CASE("inertia is a congruence invariant") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> sign(-1, 1);
    for (int trial = 0; trial < 20; trial++) {
        Mat d(4, 4);
        Inertia want;
        for (int i = 0; i < 4; i++) {
            int s = sign(rng);
            d.at(i, i) = s;
            (s > 0 ? want.n_plus : s < 0 ? want.n_minus : want.n_zero)++;
        }
        Mat p(4, 4);
        do {
            for (auto& x : p.a) x = entry(rng);
        } while (rank(p) < 4);
        Inertia got = inertia(congruence(p, d));
        CAPTURE(trial);
        CHECK(got.n_plus == want.n_plus);
        CHECK(got.n_minus == want.n_minus);
        CHECK(got.n_zero == want.n_zero);
    }
}

TEST_CASE("nonzero inertia counts match rank") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 25; trial++) {
        Mat m(4, 4);
        for (int i = 0; i < 4; i++)
            for (int j = i; j < 4; j++) m.at(i, j) = m.at(j, i) = entry(rng);
        Inertia in = inertia(m);
        CHECK(in.n_plus + in.n_minus == rank(m));
        CHECK(in.n_plus + in.n_minus + in.n_zero == 4);
    }
}

TEST_CASE("congruence transform") {
    Mat d = diag3(1, 1, -1);
    CHECK(congruence(identity(3), d) == d);
    Mat a = congruence(fx::rank3_rep(), d);
    CHECK(a == fx::rank3_witness());
    CHECK(is_symmetric(a));
    CHECK_THROWS_AS(congruence(fx::rank3_rep(), identity(8)), error);
}

TEST_CASE("pattern membership") {
    Graph house = fx::house();
    CHECK(in_pattern(fx::house_lifted(), house));
    Mat off = fx::house_lifted();
    off.at(0, 1) = off.at(1, 0) = 5;  // 0 and 1 are non-adjacent
    CHECK_FALSE(in_pattern(off, house));
    Mat gone = fx::house_lifted();
    gone.at(0, 2) = gone.at(2, 0) = 0;  // 0 and 2 are adjacent
    CHECK_FALSE(in_pattern(gone, house));
    CHECK(in_pattern(fx::rank3_witness(), g6_decode(fx::rank3_g6())));
}

TEST_CASE("submatrix bounds") {
    CHECK_THROWS_AS(submatrix(identity(2), {0, 2}, {0}), error);
    Mat s = submatrix(fx::rank3_witness(), {0}, {0, 1});
    CHECK(s.rows == 1);
    CHECK(s.cols == 2);
}
