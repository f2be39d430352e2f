#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dwc/group.hpp"
#include "dwc/rational.hpp"

namespace dwc {

/// Dense 2-cochain Gamma^2 -> Q/Z.
class Cochain2 {
public:
    explicit Cochain2(GroupPtr g)
        : group_(std::move(g)), values_(static_cast<size_t>(group_->order()) * group_->order()) {}

    const GroupPtr& group() const { return group_; }

    QmodZ& at(int x, int y) { return values_[static_cast<size_t>(x) * group_->order() + y]; }
    const QmodZ& at(int x, int y) const {
        return values_[static_cast<size_t>(x) * group_->order() + y];
    }

    const std::vector<QmodZ>& values() const { return values_; }
    std::vector<QmodZ>& values() { return values_; }

    bool operator==(const Cochain2& o) const { return values_ == o.values_; }

private:
    GroupPtr group_;
    std::vector<QmodZ> values_;
};

/// Dense 3-cochain Gamma^3 -> Q/Z.
class Cochain3 {
public:
    explicit Cochain3(GroupPtr g)
        : group_(std::move(g)),
          values_(static_cast<size_t>(group_->order()) * group_->order() * group_->order()) {}

    const GroupPtr& group() const { return group_; }

    QmodZ& at(int x, int y, int z) {
        int n = group_->order();
        return values_[(static_cast<size_t>(x) * n + y) * n + z];
    }
    const QmodZ& at(int x, int y, int z) const {
        int n = group_->order();
        return values_[(static_cast<size_t>(x) * n + y) * n + z];
    }

    const std::vector<QmodZ>& values() const { return values_; }
    std::vector<QmodZ>& values() { return values_; }

    /// lcm of all value denominators
    long long denominator() const {
        long long d = 1;
        for (const auto& v : values_) d = std::lcm(d, v.den());
        return d;
    }

    bool operator==(const Cochain3& o) const { return values_ == o.values_; }

    Cochain3 operator+(const Cochain3& o) const {
        Cochain3 r(group_);
        for (size_t i = 0; i < values_.size(); ++i) r.values_[i] = values_[i] + o.values_[i];
        return r;
    }
    Cochain3 operator-(const Cochain3& o) const {
        Cochain3 r(group_);
        for (size_t i = 0; i < values_.size(); ++i) r.values_[i] = values_[i] - o.values_[i];
        return r;
    }

private:
    GroupPtr group_;
    std::vector<QmodZ> values_;
};

/// Signed formal sum of bar 3-simplices [x|y|z].
struct FormalChain3 {
    struct Term {
        long long coeff;
        int x, y, z;
    };
    std::vector<Term> terms;

    void add(long long c, int x, int y, int z) { terms.push_back({c, x, y, z}); }

    FormalChain3& operator+=(const FormalChain3& o) {
        terms.insert(terms.end(), o.terms.begin(), o.terms.end());
        return *this;
    }
};

inline QmodZ evaluate(const Cochain3& a, const FormalChain3& z) {
    QmodZ total;
    for (const auto& t : z.terms) total += a.at(t.x, t.y, t.z).scaled(t.coeff);
    return total;
}

/// (d beta)(x,y,z) = beta(y,z) - beta(xy,z) + beta(x,yz) - beta(x,y)
inline Cochain3 coboundary_2(const Cochain2& b) {
    const auto& g = *b.group();
    Cochain3 r(b.group());
    int n = g.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                r.at(x, y, z) = b.at(y, z) - b.at(g.mul(x, y), z) + b.at(x, g.mul(y, z)) - b.at(x, y);
    return r;
}

/// Five-term cocycle identity over all of Gamma^4.
inline bool is_cocycle(const Cochain3& a) {
    const auto& g = *a.group();
    int n = g.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = g.mul(x, y);
            for (int z = 0; z < n; ++z) {
                int yz = g.mul(y, z);
                for (int w = 0; w < n; ++w) {
                    QmodZ d = a.at(x, y, z) - a.at(xy, z, w) + a.at(x, yz, w) -
                              a.at(x, y, g.mul(z, w)) + a.at(y, z, w);
                    if (!d.is_zero()) return false;
                }
            }
        }
    return true;
}

/// True when (x,y,z) must vanish under strong normalization:
/// 1 in {x, y, z, xy, yz}.
inline bool forced_zero_triple(const FiniteGroup& g, int x, int y, int z) {
    int e = g.identity();
    return x == e || y == e || z == e || g.mul(x, y) == e || g.mul(y, z) == e;
}

inline bool is_strongly_normalized(const Cochain3& a) {
    const auto& g = *a.group();
    int n = g.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (forced_zero_triple(g, x, y, z) && !a.at(x, y, z).is_zero()) return false;
    return true;
}

/// The standard generator family on Z/n:
/// a_k(a,b,c) = k * a * floor((b+c)/n) / n, a 3-cocycle for each k.
inline Cochain3 cyclic_standard_cocycle(GroupPtr g, long long k) {
    int n = g->order();
    Cochain3 r(g);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                long long carry = (b + c) / n;
                r.at(a, b, c) = QmodZ::from_fraction(k * a * carry, n);
            }
    return r;
}

/// Cocycle file: {"kind":"table","values":[...flat x-major...]} with "num/den"
/// strings, or {"kind":"cyclic_standard","n":...,"k":...}.
inline Cochain3 cochain3_from_json(const nlohmann::json& j, GroupPtr g) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "cyclic_standard") {
        int n = j.at("n").get<int>();
        if (n != g->order())
            throw std::invalid_argument("cyclic_standard: n does not match group order");
        auto r = cyclic_standard_cocycle(std::move(g), j.at("k").get<long long>());
        if (!is_cocycle(r)) throw std::invalid_argument("cyclic_standard: not a cocycle");
        return r;
    }
    if (kind != "table") throw std::invalid_argument("unknown cocycle kind: " + kind);
    Cochain3 r(g);
    const auto& vals = j.at("values");
    if (vals.size() != r.values().size())
        throw std::invalid_argument("cocycle table has wrong size");
    for (size_t i = 0; i < r.values().size(); ++i)
        r.values()[i] = QmodZ::parse(vals[i].get<std::string>());
    return r;
}

inline nlohmann::json cochain3_to_json(const Cochain3& a) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : a.values()) vals.push_back(v.str());
    return {{"kind", "table"}, {"values", std::move(vals)}};
}

}  // namespace dwc
