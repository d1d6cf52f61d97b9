#include "minrank/matrix.hpp"

#include <cctype>
#include <sstream>

namespace minrank {

Rational parse_rational(const std::string& s) {
    // cpp_int accepts the empty string as zero, so validate the digits here.
    auto plain_int = [](const std::string& t) {
        size_t i = (!t.empty() && (t[0] == '+' || t[0] == '-')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); i++)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
    if (!plain_int(num) || !plain_int(den)) throw error("bad rational '" + s + "'");
    if (Int(den) == 0) throw error("bad rational '" + s + "'");
    return Rational(Int(num), Int(den));
}

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = 1;
    return m;
}

bool is_symmetric(const Mat& m) {
    if (m.rows != m.cols) return false;
    for (int i = 0; i < m.rows; i++)
        for (int j = i + 1; j < m.cols; j++)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

int rank(const Mat& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    // Clear denominators with one global scalar, then eliminate fraction-free.
    Int scale = 1;
    for (const auto& x : m.a) scale = lcm(scale, denominator(x));
    std::vector<Int> w(m.a.size());
    for (size_t i = 0; i < m.a.size(); i++)
        w[i] = numerator(m.a[i]) * (scale / denominator(m.a[i]));
    auto at = [&](int i, int j) -> Int& { return w[static_cast<size_t>(i) * m.cols + j]; };

    Int prev = 1;
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; col++) {
        int pivot = -1;
        for (int i = r; i < m.rows; i++)
            if (at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols; j++) std::swap(at(pivot, j), at(r, j));
        for (int i = r + 1; i < m.rows; i++) {
            for (int j = col + 1; j < m.cols; j++)
                at(i, j) = (at(r, col) * at(i, j) - at(i, col) * at(r, j)) / prev;
            at(i, col) = 0;
        }
        prev = at(r, col);
        r++;
    }
    return r;
}

Mat rref(const Mat& m) {
    Mat r = m;
    int lead = 0;
    for (int col = 0; col < r.cols && lead < r.rows; col++) {
        int pivot = -1;
        for (int i = lead; i < r.rows; i++)
            if (r.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < r.cols; j++) std::swap(r.at(pivot, j), r.at(lead, j));
        Rational p = r.at(lead, col);
        for (int j = 0; j < r.cols; j++) r.at(lead, j) /= p;
        for (int i = 0; i < r.rows; i++) {
            if (i == lead || r.at(i, col) == 0) continue;
            Rational f = r.at(i, col);
            for (int j = 0; j < r.cols; j++) r.at(i, j) -= f * r.at(lead, j);
        }
        lead++;
    }
    return r;
}

std::vector<std::vector<Rational>> nullspace_basis(const Mat& m) {
    Mat r = rref(m);
    std::vector<int> pivot_col;
    for (int i = 0; i < r.rows; i++)
        for (int j = 0; j < r.cols; j++)
            if (r.at(i, j) != 0) {
                pivot_col.push_back(j);
                break;
            }
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivot_col) is_pivot[p] = true;

    std::vector<std::vector<Rational>> naive;
    for (int f = 0; f < m.cols; f++) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(m.cols);
        x[f] = 1;
        for (size_t i = 0; i < pivot_col.size(); i++) x[pivot_col[i]] = -r.at(static_cast<int>(i), f);
        naive.push_back(std::move(x));
    }
    if (naive.empty()) return naive;

    // Echelonize the basis itself so the result is labeling-independent.
    Mat stack(static_cast<int>(naive.size()), m.cols);
    for (size_t i = 0; i < naive.size(); i++)
        for (int j = 0; j < m.cols; j++) stack.at(static_cast<int>(i), j) = naive[i][j];
    Mat es = rref(stack);
    std::vector<std::vector<Rational>> out;
    for (int i = 0; i < es.rows; i++) {
        bool nonzero = false;
        for (int j = 0; j < es.cols; j++)
            if (es.at(i, j) != 0) nonzero = true;
        if (!nonzero) continue;
        std::vector<Rational> row(es.cols);
        for (int j = 0; j < es.cols; j++) row[j] = es.at(i, j);
        out.push_back(std::move(row));
    }
    return out;
}

Inertia inertia(const Mat& m) {
    if (!is_symmetric(m)) throw error("inertia needs a symmetric matrix");
    int n = m.rows;
    // Characteristic polynomial coefficients, leading first: det(xI - A).
    std::vector<Rational> coef(n + 1);
    coef[n] = 1;
    Mat acc = identity(n);
    for (int k = 1; k <= n; k++) {
        Mat am(n, n);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) {
                Rational s = 0;
                for (int l = 0; l < n; l++) s += m.at(i, l) * acc.at(l, j);
                am.at(i, j) = s;
            }
        Rational tr = 0;
        for (int i = 0; i < n; i++) tr += am.at(i, i);
        Rational c = -tr / k;
        coef[n - k] = c;
        acc = am;
        for (int i = 0; i < n; i++) acc.at(i, i) += c;
    }

    Inertia out;
    int z = 0;
    while (z <= n && coef[z] == 0) z++;
    out.n_zero = z;
    // All roots of the stripped polynomial are real and nonzero, so sign
    // variations count the positive ones exactly.
    int var_pos = 0, var_neg = 0;
    int last_pos = 0, last_neg = 0;
    for (int i = n; i >= z; i--) {
        if (coef[i] == 0) continue;
        int s = coef[i] > 0 ? 1 : -1;
        // For q(-x) the coefficient of x^k flips sign when k is odd.
        int sneg = ((n - i) % 2 == 0) ? s : -s;
        if (last_pos != 0 && s != last_pos) var_pos++;
        if (last_neg != 0 && sneg != last_neg) var_neg++;
        last_pos = s;
        last_neg = sneg;
    }
    out.n_plus = var_pos;
    out.n_minus = var_neg;
    if (out.n_plus + out.n_minus + out.n_zero != n)
        throw error("inertia: sign count mismatch");
    return out;
}

bool in_pattern(const Mat& m, const Graph& g) {
    if (m.rows != g.n || m.cols != g.n) return false;
    if (!is_symmetric(m)) return false;
    for (int u = 0; u < g.n; u++)
        for (int v = u + 1; v < g.n; v++)
            if ((m.at(u, v) != 0) != g.has_edge(u, v)) return false;
    return true;
}

Mat submatrix(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Mat out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); i++)
        for (size_t j = 0; j < cols.size(); j++) {
            if (rows[i] < 0 || rows[i] >= m.rows || cols[j] < 0 || cols[j] >= m.cols)
                throw error("submatrix: index out of range");
            out.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
        }
    return out;
}

Mat congruence(const Mat& m, const Mat& d) {
    if (d.rows != d.cols || d.rows != m.rows) throw error("congruence: shape mismatch");
    Mat dm(m.rows, m.cols);
    for (int i = 0; i < m.rows; i++)
        for (int j = 0; j < m.cols; j++) {
            Rational s = 0;
            for (int l = 0; l < m.rows; l++) s += d.at(i, l) * m.at(l, j);
            dm.at(i, j) = s;
        }
    Mat out(m.cols, m.cols);
    for (int i = 0; i < m.cols; i++)
        for (int j = 0; j < m.cols; j++) {
            Rational s = 0;
            for (int l = 0; l < m.rows; l++) s += m.at(l, i) * dm.at(l, j);
            out.at(i, j) = s;
        }
    return out;
}

std::vector<Rational> mat_vec(const Mat& m, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != m.cols) throw error("mat_vec: shape mismatch");
    std::vector<Rational> y(m.rows);
    for (int i = 0; i < m.rows; i++) {
        Rational s = 0;
        for (int j = 0; j < m.cols; j++) s += m.at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Mat parse_matrix(std::istream& in) {
    std::string header;
    while (std::getline(in, header)) {
        if (!header.empty() && header[0] != '#') break;
    }
    std::stringstream hs(header);
    int rows = 0, cols = 0;
    if (!(hs >> rows)) throw error("matrix: missing size header");
    if (!(hs >> cols)) cols = rows;
    if (rows < 1 || cols < 1) throw error("matrix: bad size header");
    Mat m(rows, cols);
    for (int i = 0; i < rows; i++)
        for (int j = 0; j < cols; j++) {
            std::string tok;
            if (!(in >> tok)) throw error("matrix: not enough entries");
            m.at(i, j) = parse_rational(tok);
        }
    return m;
}

Mat parse_matrix_text(const std::string& text) {
    std::stringstream ss(text);
    return parse_matrix(ss);
}

std::string format_matrix(const Mat& m) {
    std::string out = std::to_string(m.rows);
    if (m.rows != m.cols) out += " " + std::to_string(m.cols);
    out += "\n";
    for (int i = 0; i < m.rows; i++) {
        for (int j = 0; j < m.cols; j++) {
            if (j) out += " ";
            out += rational_str(m.at(i, j));
        }
        out += "\n";
    }
    return out;
}

}  // namespace minrank
