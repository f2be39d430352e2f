#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "dwc/cochain.hpp"
#include "dwc/intmat.hpp"

namespace dwc {

struct NotCoprime : std::runtime_error {
    explicit NotCoprime(const std::string& m) : std::runtime_error(m) {}
};
struct NoTrivialization : std::runtime_error {
    explicit NoTrivialization(const std::string& m) : std::runtime_error(m) {}
};

struct SlTwoMatrix {
    ll a, b, c, d;  // [[a,b],[c,d]], det 1
};

/// Completes a coprime surgery coefficient p/q to [[p,p'],[q,q']] with
/// p*q' - q*p' = 1. Deterministic: p' is the representative in [0,|p|)
/// when p != 0, and q' = 0 when p == 0.
inline SlTwoMatrix complete_framing(ll p, ll q) {
    if (std::gcd(p, q) != 1 || (p == 0 && q == 0)) throw NotCoprime("framing requires gcd(p,q)=1");
    if (p == 0) return {0, -q, q, 0};  // q = +-1, det = q^2 = 1
    ll u, v;
    ext_gcd(p, q, u, v);  // u*p + v*q = 1
    // p*q' - q*p' = 1 with q' = u, p' = -v; the shift
    // (p',q') -> (p'+k*p, q'+k*q) keeps the determinant
    ll pp = -v, qq = u;
    ll ap = p < 0 ? -p : p;
    ll t = pp % ap;
    if (t < 0) t += ap;
    ll k = (t - pp) / p;
    return {p, pp + k * p, q, qq + k * q};
}

/// Trivialization f_z of (a,b,c) -> alpha(z^a, z^b, z^c) on the grid
/// [-R,R]^2, built by the first-argument recursion from f(1,.) = 0 and then
/// verified against the defining identity over the whole grid. A failed
/// verification falls back to an exact linear solve; if that also fails the
/// cocycle upstream is broken, since every 3-cocycle of Z is a coboundary.
class FzTable {
public:
    FzTable(const Cochain3& alpha, int z, int range) : R_(range), side_(2 * range + 1) {
        build_recursive(alpha, z);
        if (!verify(alpha, z)) {
            if (!build_by_solve(alpha, z) || !verify(alpha, z))
                throw NoTrivialization("no f_z trivialization on the grid");
        }
    }

    int range() const { return R_; }

    const QmodZ& at(ll a, ll b) const {
        return values_[static_cast<size_t>(a + R_) * side_ + static_cast<size_t>(b + R_)];
    }

    QmodZ epsilon(ll a, ll b) const { return at(a, b) - at(b, a); }

    /// grid linear-solve construction, exposed as an independent oracle
    bool build_by_solve(const Cochain3& alpha, int z) {
        ll N = alpha.denominator();
        int vars = side_ * side_;
        std::vector<std::vector<ll>> rows;
        std::vector<ll> rhs;
        auto vidx = [&](ll a, ll b) { return static_cast<int>((a + R_) * side_ + (b + R_)); };
        const auto& g = *alpha.group();
        for (ll a = -R_; a <= R_; ++a)
            for (ll b = -R_; b <= R_; ++b)
                for (ll c = -R_; c <= R_; ++c) {
                    if (a + b < -R_ || a + b > R_ || b + c < -R_ || b + c > R_) continue;
                    std::vector<ll> row(vars, 0);
                    row[vidx(b, c)] += 1;
                    row[vidx(a + b, c)] -= 1;
                    row[vidx(a, b + c)] += 1;
                    row[vidx(a, b)] -= 1;
                    const QmodZ& v = alpha.at(g.power(z, a), g.power(z, b), g.power(z, c));
                    rows.push_back(std::move(row));
                    rhs.push_back(mod_ll(v.num() * (N / v.den()), N));
                }
        Mat A(static_cast<int>(rows.size()), vars);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < vars; ++j) A.at(static_cast<int>(i), j) = rows[i][j];
        auto x = solve_mod(A, rhs, N);
        if (!x) return false;
        for (int i = 0; i < vars; ++i) values_[static_cast<size_t>(i)] = QmodZ::from_fraction((*x)[i], N);
        return true;
    }

private:
    void build_recursive(const Cochain3& alpha, int z) {
        values_.assign(static_cast<size_t>(side_) * side_, QmodZ());
        const auto& g = *alpha.group();
        auto set = [&](ll a, ll b, QmodZ v) {
            values_[static_cast<size_t>(a + R_) * side_ + static_cast<size_t>(b + R_)] = v;
        };
        for (ll b = -R_; b <= R_; ++b) {
            set(1, b, QmodZ());
            int zb = g.power(z, b);
            // f(a+1,b) = f(a,b) - alpha(z, z^a, z^b), in both directions
            for (ll a = 1; a < R_; ++a)
                set(a + 1, b, at(a, b) - alpha.at(z, g.power(z, a), zb));
            for (ll a = 0; a >= -R_; --a)
                set(a, b, at(a + 1, b) + alpha.at(z, g.power(z, a), zb));
        }
    }

    bool verify(const Cochain3& alpha, int z) const {
        const auto& g = *alpha.group();
        for (ll a = -R_; a <= R_; ++a)
            for (ll b = -R_; b <= R_; ++b)
                for (ll c = -R_; c <= R_; ++c) {
                    if (a + b < -R_ || a + b > R_ || b + c < -R_ || b + c > R_) continue;
                    QmodZ lhs = at(b, c) - at(a + b, c) + at(a, b + c) - at(a, b);
                    if (lhs != alpha.at(g.power(z, a), g.power(z, b), g.power(z, c))) return false;
                }
        return true;
    }

    int R_, side_;
    std::vector<QmodZ> values_;
};

/// Memoized epsilon(z; a, b) = f_z(a,b) - f_z(b,a) for one fixed cocycle.
/// Tables grow on demand; results are independent of the chosen range.
class EpsilonCalculator {
public:
    explicit EpsilonCalculator(const Cochain3& alpha) : alpha_(&alpha) {}

    QmodZ operator()(int z, ll a, ll b) {
        ll need = std::max({a < 0 ? -a : a, b < 0 ? -b : b,
                            a + b < 0 ? -(a + b) : a + b}) + 1;
        auto it = tables_.find(z);
        if (it == tables_.end() || it->second.range() < need) {
            it = tables_.insert_or_assign(z, FzTable(*alpha_, z, static_cast<int>(need))).first;
        }
        return it->second.epsilon(a, b);
    }

private:
    const Cochain3* alpha_;
    std::map<int, FzTable> tables_;
};

inline QmodZ epsilon(const Cochain3& alpha, int z, ll a, ll b) {
    EpsilonCalculator calc(alpha);
    return calc(z, a, b);
}

}  // namespace dwc
