#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dwc {

// Exact integer linear algebra for lattices L <= Z^n that contain m*Z^n.
// Working entries are kept reduced mod m throughout: adding a multiple of
// m*e_j to a row or column never changes the lattice-mod-m being tracked,
// which bounds coefficient growth during Smith/Hermite eliminations.

using ll = long long;

struct Mat {
    int rows = 0, cols = 0;
    std::vector<ll> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    ll& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    ll at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::vector<ll> col(int j) const {
        std::vector<ll> v(rows);
        for (int i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }
};

inline ll mod_m(ll x, ll m) {
    ll r = x % m;
    return r < 0 ? r + m : r;
}

// extended gcd: u*a + v*b = g >= 0
inline ll ext_gcd(ll a, ll b, ll& u, ll& v) {
    if (b == 0) {
        u = a >= 0 ? 1 : -1;
        v = 0;
        return a >= 0 ? a : -a;
    }
    ll u1, v1;
    ll g = ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
}

/// Triangular generating set for rowspace(inserted rows) + m*Z^n.
/// piv_[j] is a row whose first nonzero entry sits at column j. Starts as
/// {m*e_j}, so every column has a pivot and entries stay in [0,m).
class RowBasis {
public:
    RowBasis(int n, ll m) : n_(n), m_(m), piv_(n) {
        for (int j = 0; j < n; ++j) {
            piv_[j].assign(n, 0);
            piv_[j][j] = m;
        }
    }

    /// Reduces r against the basis, updating pivots when the lattice grows.
    /// Returns true iff the lattice grew.
    bool insert(std::vector<ll> r) {
        bool grew = false;
        for (int j = 0; j < n_; ++j) {
            r[j] = mod_m(r[j], m_);
            if (r[j] == 0) continue;
            ll b = piv_[j][j];
            if (r[j] % b != 0) {
                ll u, v;
                ll g = ext_gcd(r[j], b, u, v);
                std::vector<ll> np(n_, 0);
                for (int k = j; k < n_; ++k) np[k] = mod_m(u * r[k] + v * piv_[j][k], m_);
                np[j] = g;
                piv_[j].swap(np);
                grew = true;
                insert(std::move(np));  // displaced pivot row stays in the lattice
                // saturate: (m/g) * pivot has 0 in column j but a nonzero tail
                std::vector<ll> sat(n_, 0);
                for (int k = j + 1; k < n_; ++k) sat[k] = mod_m((m_ / g) * piv_[j][k], m_);
                insert(std::move(sat));
            }
            ll q = r[j] / piv_[j][j];
            for (int k = j; k < n_; ++k) r[k] = mod_m(r[k] - q * piv_[j][k], m_);
        }
        return grew;
    }

    /// True iff r lies in the current lattice (+ m*Z^n).
    bool contains(std::vector<ll> r) const {
        for (int j = 0; j < n_; ++j) {
            r[j] = mod_m(r[j], m_);
            if (r[j] == 0) continue;
            ll b = piv_[j][j];
            if (r[j] % b != 0) return false;
            ll q = r[j] / b;
            for (int k = j; k < n_; ++k) r[k] = mod_m(r[k] - q * piv_[j][k], m_);
        }
        return true;
    }

    /// Coefficients c with sum_j c[j]*piv_[j] == r (mod m), or nullopt when
    /// r is outside the lattice.
    std::optional<std::vector<ll>> coords(std::vector<ll> r) const {
        std::vector<ll> c(n_, 0);
        for (int j = 0; j < n_; ++j) {
            r[j] = mod_m(r[j], m_);
            if (r[j] == 0) continue;
            ll b = piv_[j][j];
            if (r[j] % b != 0) return std::nullopt;
            ll q = r[j] / b;
            c[j] = q;
            for (int k = j; k < n_; ++k) r[k] = mod_m(r[k] - q * piv_[j][k], m_);
        }
        return c;
    }

    ll pivot(int j) const { return piv_[j][j]; }
    const std::vector<ll>& row(int j) const { return piv_[j]; }

    Mat to_mat() const {
        Mat t(n_, n_);
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) t.at(j, k) = piv_[j][k];
        return t;
    }

private:
    int n_;
    ll m_;
    std::vector<std::vector<ll>> piv_;
};

struct SnfResult {
    std::vector<ll> diag;  // length cols; invariant factors, gcd'd with m
    Mat V;                 // cols x cols column transform
    Mat Uinv;              // rows x rows inverse row transform (if requested)
};

/// Diagonalizes W by unimodular row/column operations, entries mod m.
/// Resulting diagonal satisfies d_i | d_{i+1}.
inline SnfResult snf_mod(Mat W, ll m, bool need_uinv = false) {
    int R = W.rows, C = W.cols;
    SnfResult res;
    res.V = Mat::identity(C);
    if (need_uinv) res.Uinv = Mat::identity(R);

    auto balanced = [&](ll x) {
        ll r = mod_m(x, m);
        return r > m / 2 ? r - m : r;
    };
    auto row_addmul = [&](int i, int j, ll c) {  // row_i += c*row_j
        for (int k = 0; k < C; ++k) W.at(i, k) = mod_m(W.at(i, k) + c * W.at(j, k), m);
        if (need_uinv)
            for (int k = 0; k < R; ++k)
                res.Uinv.at(k, j) = mod_m(res.Uinv.at(k, j) - c * res.Uinv.at(k, i), m);
    };
    auto col_addmul = [&](int i, int j, ll c) {  // col_i += c*col_j
        for (int k = 0; k < R; ++k) W.at(k, i) = mod_m(W.at(k, i) + c * W.at(k, j), m);
        for (int k = 0; k < C; ++k) res.V.at(k, i) = mod_m(res.V.at(k, i) + c * res.V.at(k, j), m);
    };
    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < C; ++k) std::swap(W.at(i, k), W.at(j, k));
        if (need_uinv)
            for (int k = 0; k < R; ++k) std::swap(res.Uinv.at(k, i), res.Uinv.at(k, j));
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < R; ++k) std::swap(W.at(k, i), W.at(k, j));
        for (int k = 0; k < C; ++k) std::swap(res.V.at(k, i), res.V.at(k, j));
    };
    auto round_div = [](ll a, ll b) {  // nearest integer to a/b
        ll ab = b < 0 ? -b : b;
        ll q = (2 * a + (a >= 0 ? ab : -ab)) / (2 * b);
        return q;
    };

    int t = 0;
    int nmin = R < C ? R : C;
    for (; t < nmin; ++t) {
        int pi = -1, pj = -1;
        ll best = 0;
        for (int i = t; i < R && best != 1; ++i)
            for (int j = t; j < C; ++j) {
                ll v = balanced(W.at(i, j));
                if (v == 0) continue;
                ll av = v < 0 ? -v : v;
                if (pi < 0 || av < best) {
                    pi = i;
                    pj = j;
                    best = av;
                    if (best == 1) break;
                }
            }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            bool clean = true;
            ll p = balanced(W.at(t, t));
            for (int i = t + 1; i < R; ++i) {
                ll v = balanced(W.at(i, t));
                if (v == 0) continue;
                row_addmul(i, t, -round_div(v, p));
                if (balanced(W.at(i, t)) != 0) {
                    row_swap(t, i);
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            for (int j = t + 1; j < C; ++j) {
                ll v = balanced(W.at(t, j));
                if (v == 0) continue;
                col_addmul(j, t, -round_div(v, p));
                if (balanced(W.at(t, j)) != 0) {
                    col_swap(t, j);
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            // pivot must divide the remaining submatrix for true invariant factors
            bool absorbed = false;
            for (int i = t + 1; i < R && !absorbed; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (balanced(W.at(i, j)) % p != 0) {
                        row_addmul(t, i, 1);
                        absorbed = true;
                        break;
                    }
            if (!absorbed) break;
        }
    }

    res.diag.assign(C, 0);
    for (int i = 0; i < t; ++i) res.diag[i] = std::gcd(mod_m(W.at(i, i), m), m);
    for (int i = t; i < C; ++i) res.diag[i] = m;
    return res;
}

inline Mat kernel_mod(const Mat& A, ll m);

/// Kernel of a triangular constraint matrix T (from RowBasis::to_mat), as
/// columns generating {x : T x == 0 (mod m)} together with the implicit
/// m*Z^n. Pivots equal to m are zero rows mod m (free columns); pivots equal
/// to 1 are eliminated by substitution; what remains feeds a small recursive
/// solve, with dense SNF as the base case.
inline Mat kernel_of_rows(Mat T, ll m) {
    int n = T.cols;
    // clear unit-pivot columns from every other row
    for (int j = n - 1; j >= 0; --j) {
        if (T.at(j, j) != 1) continue;
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            ll c = mod_m(T.at(i, j), m);
            if (c == 0) continue;
            for (int k = j; k < n; ++k) T.at(i, k) = mod_m(T.at(i, k) - c * T.at(j, k), m);
        }
    }
    std::vector<int> unit, mid, cols;
    for (int j = 0; j < n; ++j) {
        ll p = T.at(j, j);
        if (p == 1)
            unit.push_back(j);
        else {
            cols.push_back(j);
            if (p != m) mid.push_back(j);
        }
    }
    int n2 = static_cast<int>(cols.size());
    Mat K2;
    if (mid.empty()) {
        K2 = Mat::identity(n2);  // remaining coordinates unconstrained
    } else if (unit.empty()) {
        // base case: no substitutions available, diagonalize directly
        auto snf = snf_mod(T, m, false);
        Mat K(n, n);
        for (int j = 0; j < n; ++j) {
            ll s = m / std::gcd(snf.diag[j], m);
            for (int i = 0; i < n; ++i) K.at(i, j) = mod_m(snf.V.at(i, j) * s, m);
        }
        return K;
    } else {
        Mat A(static_cast<int>(mid.size()), n2);
        for (size_t r = 0; r < mid.size(); ++r)
            for (int c = 0; c < n2; ++c) A.at(static_cast<int>(r), c) = mod_m(T.at(mid[r], cols[c]), m);
        K2 = kernel_mod(A, m);
    }
    Mat K(n, K2.cols);
    for (int jc = 0; jc < K2.cols; ++jc) {
        std::vector<ll> x(n, 0);
        for (int c = 0; c < n2; ++c) x[cols[c]] = mod_m(K2.at(c, jc), m);
        for (auto it = unit.rbegin(); it != unit.rend(); ++it) {
            int j = *it;
            ll s = 0;
            for (int k = j + 1; k < n; ++k) s = mod_m(s + T.at(j, k) * x[k], m);
            x[j] = mod_m(-s, m);
        }
        for (int i = 0; i < n; ++i) K.at(i, jc) = x[i];
    }
    return K;
}

/// Columns generate {x in Z^n : A x == 0 (mod m)}; lattice contains m*Z^n.
inline Mat kernel_mod(const Mat& A, ll m) {
    int n = A.cols;
    RowBasis rb(n, m);
    std::vector<ll> row(n);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < n; ++j) row[j] = A.at(i, j);
        rb.insert(row);
    }
    return kernel_of_rows(rb.to_mat(), m);
}

/// One solution of A x == r (mod m), via the kernel of [A | -r].
inline std::optional<std::vector<ll>> solve_mod(const Mat& A, const std::vector<ll>& r, ll m) {
    int n = A.cols;
    Mat aug(A.rows, n + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n) = mod_m(-r[i], m);
    }
    Mat K = kernel_mod(aug, m);
    // combine kernel columns into an element whose last coordinate is 1 mod m
    std::vector<ll> acc(n + 1, 0);
    ll g = m;
    for (int j = 0; j < K.cols && g != 1; ++j) {
        ll c = mod_m(K.at(n, j), m);
        if (c == 0) continue;
        ll u, v;
        ll ng = ext_gcd(g, c, u, v);
        if (ng == g) continue;
        for (int i = 0; i <= n; ++i) acc[i] = mod_m(u * acc[i] + v * K.at(i, j), m);
        acc[n] = ng;
        g = ng;
    }
    if (g != 1) return std::nullopt;
    std::vector<ll> x(acc.begin(), acc.begin() + n);
    return x;
}

/// Lex-minimal nonnegative representative of x0 + collat(K) mod m, where the
/// column lattice of K contains m*Z^n.
inline std::vector<ll> lex_min_coset(std::vector<ll> x0, const Mat& K, ll m) {
    int n = static_cast<int>(x0.size());
    RowBasis rb(n, m);  // columns inserted as rows -> triangular by first coordinate
    std::vector<ll> v(n);
    for (int j = 0; j < K.cols; ++j) {
        for (int i = 0; i < n; ++i) v[i] = K.at(i, j);
        rb.insert(v);
    }
    Mat T = rb.to_mat();
    for (int j = 0; j < n; ++j) {
        x0[j] = mod_m(x0[j], m);
        ll q = x0[j] / T.at(j, j);
        for (int k = j; k < n; ++k) x0[k] = mod_m(x0[k] - q * T.at(j, k), m);
    }
    return x0;
}

struct QuotientGen {
    std::vector<ll> vec;  // coordinates mod m
    ll order;             // invariant factor, > 1
};

/// Structure of (span(Z)+mZ^n)/(span(B)+mZ^n) as a finite abelian group,
/// assuming span(B) lies inside span(Z)+mZ^n. Z, B hold generators as columns.
inline std::vector<QuotientGen> lattice_quotient_mod(const Mat& Z, const Mat& B, ll m) {
    int n = Z.rows, k = Z.cols;
    std::vector<std::vector<ll>> rels;
    Mat R1 = kernel_mod(Z, m);
    for (int j = 0; j < R1.cols; ++j) rels.push_back(R1.col(j));
    for (int j = 0; j < B.cols; ++j) {
        auto y = solve_mod(Z, B.col(j), m);
        if (!y) throw std::runtime_error("lattice_quotient_mod: B not inside Z");
        rels.push_back(*y);
    }
    Mat M(k, static_cast<int>(rels.size()));
    for (int j = 0; j < M.cols; ++j)
        for (int i = 0; i < k; ++i) M.at(i, j) = rels[static_cast<size_t>(j)][i];
    auto snf = snf_mod(M, m, true);
    std::vector<QuotientGen> out;
    for (int i = 0; i < k; ++i) {
        ll d = i < static_cast<int>(snf.diag.size()) ? snf.diag[i] : m;
        ll ord = std::gcd(d, m);
        if (ord <= 1) continue;
        QuotientGen g;
        g.order = ord;
        g.vec.assign(n, 0);
        for (int r2 = 0; r2 < n; ++r2) {
            ll s = 0;
            for (int c = 0; c < k; ++c) s = mod_m(s + Z.at(r2, c) * snf.Uinv.at(c, i), m);
            g.vec[r2] = s;
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace dwc
