#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dwc/cochain.hpp"
#include "dwc/intmat.hpp"

namespace dwc {

namespace detail {

inline size_t triple_index(int n, int x, int y, int z) {
    return (static_cast<size_t>(x) * n + y) * n + z;
}

/// One cocycle-identity row over Z^{n^3}, coefficients accumulated since the
/// five triples may coincide.
inline void cocycle_row(const FiniteGroup& g, int x, int y, int z, int w, std::vector<ll>& row) {
    std::fill(row.begin(), row.end(), 0);
    int n = g.order();
    row[triple_index(n, x, y, z)] += 1;
    row[triple_index(n, g.mul(x, y), z, w)] -= 1;
    row[triple_index(n, x, g.mul(y, z), w)] += 1;
    row[triple_index(n, x, y, g.mul(z, w))] -= 1;
    row[triple_index(n, y, z, w)] += 1;
}

/// Triangular basis of the lattice of 3-cocycles with values in (1/m)Z/Z,
/// optionally intersected with the strong-normalization support condition.
inline RowBasis cocycle_kernel_basis(const GroupPtr& g, ll m, bool strongly_normalized) {
    int n = g->order();
    size_t n3 = static_cast<size_t>(n) * n * n;
    RowBasis cb(static_cast<int>(n3), m);
    std::vector<ll> row(n3);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w) {
                    cocycle_row(*g, x, y, z, w, row);
                    cb.insert(row);
                }
    if (strongly_normalized) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (forced_zero_triple(*g, x, y, z)) {
                        std::fill(row.begin(), row.end(), 0);
                        row[triple_index(n, x, y, z)] = 1;
                        cb.insert(row);
                    }
    }
    Mat K = kernel_of_rows(cb.to_mat(), m);
    RowBasis zb(static_cast<int>(n3), m);
    for (int j = 0; j < K.cols; ++j) zb.insert(K.col(j));
    return zb;
}

inline Cochain3 cochain_from_vector(const GroupPtr& g, const std::vector<ll>& v, ll m) {
    Cochain3 a(g);
    for (size_t i = 0; i < v.size(); ++i) a.values()[i] = QmodZ::from_fraction(v[i], m);
    return a;
}

}  // namespace detail

struct H3Generator {
    Cochain3 cocycle;
    long long order;  // order of the class in H^3
};

inline constexpr long long kDenominatorCap = 1 << 20;

/// Cocycles whose classes generate H^3(Gamma; (1/m)Z/Z), with the invariant
/// factor orders of the group they generate. Every output passes the
/// exhaustive cocycle check.
inline std::vector<H3Generator> h3_generators(GroupPtr g, ll m) {
    int n = g->order();
    if (m <= 0 || static_cast<ll>(n) * m > kDenominatorCap)
        throw TooLarge("h3_generators: denominator cap exceeded");
    size_t n3 = static_cast<size_t>(n) * n * n;
    RowBasis zb = detail::cocycle_kernel_basis(g, m, false);

    // boundary lattice: coboundaries of the indicator 2-cochains
    RowBasis sb(static_cast<int>(n3), m);
    std::vector<ll> row(n3);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::fill(row.begin(), row.end(), 0);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z) {
                        ll c = 0;
                        if (y == a && z == b) c += 1;
                        if (g->mul(x, y) == a && z == b) c -= 1;
                        if (x == a && g->mul(y, z) == b) c += 1;
                        if (x == a && y == b) c -= 1;
                        row[detail::triple_index(n, x, y, z)] += c;
                    }
            sb.insert(row);
        }

    // compact generator list: nontrivial rows of the cocycle basis
    std::vector<int> gen_cols;
    for (size_t j = 0; j < n3; ++j)
        if (zb.pivot(static_cast<int>(j)) != m) gen_cols.push_back(static_cast<int>(j));
    int r = static_cast<int>(gen_cols.size());
    if (r == 0) return {};

    // relations: coefficient vectors (in the generator list) of the boundary
    // rows, plus the kernel of the generator map c -> sum c_j * zb_j
    std::vector<std::vector<ll>> rels;
    for (size_t j = 0; j < n3; ++j) {
        if (sb.pivot(static_cast<int>(j)) == m) continue;
        auto c = zb.coords(sb.row(static_cast<int>(j)));
        if (!c) throw std::logic_error("h3_generators: boundary outside cocycle lattice");
        std::vector<ll> compact(r);
        for (int k = 0; k < r; ++k) compact[k] = mod_m((*c)[gen_cols[k]], m);
        rels.push_back(std::move(compact));
    }
    Mat Zmat(static_cast<int>(n3), r);
    for (int k = 0; k < r; ++k) {
        const auto& zr = zb.row(gen_cols[k]);
        for (size_t i = 0; i < n3; ++i) Zmat.at(static_cast<int>(i), k) = mod_m(zr[i], m);
    }
    Mat KZ = kernel_mod(Zmat, m);
    for (int j = 0; j < KZ.cols; ++j) {
        auto col = KZ.col(j);
        bool zero = true;
        for (ll v : col)
            if (mod_m(v, m) != 0) zero = false;
        if (!zero) rels.push_back(std::move(col));
    }

    Mat R(r, static_cast<int>(rels.size()));
    for (int j = 0; j < R.cols; ++j)
        for (int i = 0; i < r; ++i) R.at(i, j) = rels[static_cast<size_t>(j)][i];
    auto snf = snf_mod(R, m, true);

    std::vector<H3Generator> out;
    for (int i = 0; i < r; ++i) {
        ll d = i < static_cast<int>(snf.diag.size()) ? snf.diag[i] : m;
        ll ord = std::gcd(d, m);
        if (ord <= 1) continue;
        std::vector<ll> vec(n3, 0);
        for (int k = 0; k < r; ++k) {
            ll c = snf.Uinv.at(k, i);
            if (c == 0) continue;
            const auto& zr = zb.row(gen_cols[k]);
            for (size_t t = 0; t < n3; ++t) vec[t] = mod_m(vec[t] + c * zr[t], m);
        }
        Cochain3 a = detail::cochain_from_vector(g, vec, m);
        if (!is_cocycle(a)) throw std::logic_error("h3_generators: candidate fails cocycle check");
        out.push_back({std::move(a), ord});
    }
    return out;
}

/// Basis of the lattice of ALL strongly normalized cocycles with values in
/// (1/m)Z/Z, coboundaries included. Intended for test-fixture generation:
/// some groups (Z/2, Z/3) have no nonzero strongly normalized cocycle at all.
inline std::vector<Cochain3> strongly_normalized_cocycles(GroupPtr g, ll m) {
    int n = g->order();
    if (m <= 0 || static_cast<ll>(n) * m > kDenominatorCap)
        throw TooLarge("strongly_normalized_cocycles: denominator cap exceeded");
    size_t n3 = static_cast<size_t>(n) * n * n;
    RowBasis zb = detail::cocycle_kernel_basis(g, m, true);
    std::vector<Cochain3> out;
    for (size_t j = 0; j < n3; ++j) {
        if (zb.pivot(static_cast<int>(j)) == m) continue;
        Cochain3 a = detail::cochain_from_vector(g, zb.row(static_cast<int>(j)), m);
        if (!is_cocycle(a) || !is_strongly_normalized(a))
            throw std::logic_error("strongly_normalized_cocycles: basis row fails check");
        out.push_back(std::move(a));
    }
    return out;
}

struct NormalizedCocycle {
    Cochain3 alpha;  // = input + d(beta), strongly normalized
    Cochain2 beta;
};

/// Searches for a cohomologous strongly normalized representative, with
/// correction denominators dividing |Gamma| * den(alpha). Returns nullopt
/// when no such representative exists (the spec's NoSolution case).
/// Ties are broken by the lexicographically smallest beta table.
inline std::optional<NormalizedCocycle> strongly_normalize(const Cochain3& a) {
    const GroupPtr& g = a.group();
    int n = g->order();
    ll N = a.denominator() * n;
    if (N > kDenominatorCap) throw TooLarge("strongly_normalize: denominator cap exceeded");

    // unknowns: beta(x,y) in units of 1/N; one equation per forced triple
    std::vector<std::array<int, 3>> forced;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (forced_zero_triple(*g, x, y, z)) forced.push_back({x, y, z});

    int vars = n * n;
    Mat A(static_cast<int>(forced.size()), vars);
    std::vector<ll> rhs(forced.size());
    auto vidx = [n](int x, int y) { return x * n + y; };
    for (size_t i = 0; i < forced.size(); ++i) {
        auto [x, y, z] = forced[i];
        A.at(static_cast<int>(i), vidx(y, z)) += 1;
        A.at(static_cast<int>(i), vidx(g->mul(x, y), z)) -= 1;
        A.at(static_cast<int>(i), vidx(x, g->mul(y, z))) += 1;
        A.at(static_cast<int>(i), vidx(x, y)) -= 1;
        // d(beta) must cancel alpha on the forced support
        const QmodZ& v = a.at(x, y, z);
        rhs[i] = mod_m(-(v.num() * (N / v.den())), N);
    }
    auto x0 = solve_mod(A, rhs, N);
    if (!x0) return std::nullopt;
    Mat K = kernel_mod(A, N);
    auto xm = lex_min_coset(*x0, K, N);

    Cochain2 beta(g);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) beta.at(x, y) = QmodZ::from_fraction(xm[vidx(x, y)], N);
    Cochain3 alpha = a + coboundary_2(beta);
    if (!is_cocycle(alpha) || !is_strongly_normalized(alpha))
        throw std::logic_error("strongly_normalize: solution fails postconditions");
    return NormalizedCocycle{std::move(alpha), std::move(beta)};
}

}  // namespace dwc
