#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>
#include <vector>

#include "minrank/graph.hpp"

namespace minrank {

using Int = boost::multiprecision::cpp_int;
// Arbitrary-precision rational, always normalized with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(const std::string& s);  // "p" or "p/q"
std::string rational_str(const Rational& r);

// Dense rational matrix, row major.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    bool operator==(const Mat&) const = default;
};

Mat identity(int n);

bool is_symmetric(const Mat& m);

// Rank over the rationals via fraction-free integer elimination after
// clearing denominators; pivot rows are chosen first-nonzero.
int rank(const Mat& m);

Mat rref(const Mat& m);

// Echelonized kernel basis: the unique basis whose row-stacked matrix is in
// reduced row echelon form. Empty when the kernel is trivial.
std::vector<std::vector<Rational>> nullspace_basis(const Mat& m);

struct Inertia {
    int n_plus = 0, n_minus = 0, n_zero = 0;
};
// Eigenvalue signs of a symmetric matrix, computed exactly from the
// characteristic polynomial (sign changes of the nonzero tail).
Inertia inertia(const Mat& m);

// Does the symmetric matrix have support exactly on g's edges off the
// diagonal? The diagonal is unconstrained.
bool in_pattern(const Mat& m, const Graph& g);

Mat submatrix(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols);

// Congruence transform M^T D M.
Mat congruence(const Mat& m, const Mat& d);

std::vector<Rational> mat_vec(const Mat& m, const std::vector<Rational>& x);

// Text format: first line "rows cols", then entries "p" or "p/q" by rows.
Mat parse_matrix(std::istream& in);
Mat parse_matrix_text(const std::string& text);
std::string format_matrix(const Mat& m);

}  // namespace minrank
