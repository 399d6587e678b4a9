#include "ehrlift/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ehrlift {

namespace {

// Row echelon over Q; returns pivot columns. Mutates a (and b if given).
std::vector<int> echelon(QMat& a, QVec* b) {
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        if (b) std::swap((*b)[r], (*b)[p]);
        Rat inv = Rat(1) / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        if (b) (*b)[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            if (b) (*b)[i] -= f * (*b)[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int mat_rank(QMat a) {
    return (int)echelon(a, nullptr).size();
}

std::optional<QVec> solve_linear(QMat a, QVec b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
    int cols = a.empty() ? 0 : (int)a[0].size();
    std::vector<int> pivots = echelon(a, &b);
    for (int i = (int)pivots.size(); i < (int)a.size(); ++i)
        if (b[i] != 0) return std::nullopt;
    QVec x(cols, 0);
    for (int i = 0; i < (int)pivots.size(); ++i) x[pivots[i]] = b[i];
    return x;
}

QMat nullspace(const QMat& a) {
    int cols = a.empty() ? 0 : (int)a[0].size();
    QMat m = a;
    std::vector<int> pivots = echelon(m, nullptr);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    QMat basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, 0);
        v[c] = 1;
        for (int i = 0; i < (int)pivots.size(); ++i) v[pivots[i]] = -m[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

ZVec primitive(const QVec& v) {
    mpz_class den = 1;
    for (auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> w(v.size());
    mpz_class g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i].get_num() * (den / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
    ZVec out(v.size(), 0);
    if (g == 0) return out;
    for (size_t i = 0; i < v.size(); ++i) {
        mpz_class q = w[i] / g;
        if (!q.fits_slong_p()) throw std::overflow_error("primitive: entry too large");
        out[i] = q.get_si();
    }
    return out;
}

ZMat integer_kernel(const ZMat& a) {
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    if (cols == 0) return {};
    // column reduction A*V = H with V unimodular; kernel = V-columns under zero H-columns
    std::vector<std::vector<mpz_class>> h(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) h[i][j] = (long)a[i][j];
    std::vector<std::vector<mpz_class>> v(cols, std::vector<mpz_class>(cols, 0));
    for (int j = 0; j < cols; ++j) v[j][j] = 1;
    auto col_sub = [&](int dst, int src, const mpz_class& f) {
        for (int i = 0; i < rows; ++i) h[i][dst] -= f * h[i][src];
        for (int i = 0; i < cols; ++i) v[i][dst] -= f * v[i][src];
    };
    auto col_swap = [&](int x, int y) {
        for (int i = 0; i < rows; ++i) std::swap(h[i][x], h[i][y]);
        for (int i = 0; i < cols; ++i) std::swap(v[i][x], v[i][y]);
    };
    int c = 0;
    for (int r = 0; r < rows && c < cols; ++r) {
        // gcd-reduce row r across columns c..cols-1
        while (true) {
            int nz = -1;
            for (int j = c; j < cols; ++j)
                if (h[r][j] != 0 && (nz < 0 || abs(h[r][j]) < abs(h[r][nz]))) nz = j;
            if (nz < 0) break;
            col_swap(c, nz);
            bool clean = true;
            for (int j = c + 1; j < cols; ++j) {
                if (h[r][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), h[r][j].get_mpz_t(), h[r][c].get_mpz_t());
                col_sub(j, c, q);
                if (h[r][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (h[r][c] != 0) ++c;
    }
    ZMat kernel;
    for (int j = c; j < cols; ++j) {
        ZVec k(cols);
        for (int i = 0; i < cols; ++i) {
            if (!v[i][j].fits_slong_p()) throw std::overflow_error("integer_kernel: entry too large");
            k[i] = v[i][j].get_si();
        }
        kernel.push_back(std::move(k));
    }
    return kernel;
}

Rat dot(const QVec& a, const QVec& b) {
    Rat r = 0;
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

Rat dotz(const ZVec& a, const QVec& b) {
    Rat r = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) r += Rat((long)a[i]) * b[i];
    return r;
}

long long dotzz(const ZVec& a, const ZVec& b) {
    long long r = 0;
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

}  // namespace ehrlift
