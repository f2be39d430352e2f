#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dwc {

struct InvalidGroup : std::runtime_error {
    explicit InvalidGroup(const std::string& m) : std::runtime_error(m) {}
};
struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& m) : std::runtime_error(m) {}
};

/// A finite group given by its full multiplication table. Elements are dense
/// indices 0..order-1; the table is verified exhaustively on construction and
/// the object is immutable afterwards.
class FiniteGroup {
public:
    using Elem = int;

    FiniteGroup(std::vector<std::vector<int>> mul, std::string name)
        : mul_(std::move(mul)), name_(std::move(name)) {
        order_ = static_cast<int>(mul_.size());
        if (order_ <= 0) throw InvalidGroup("empty multiplication table");
        for (const auto& row : mul_) {
            if (static_cast<int>(row.size()) != order_)
                throw InvalidGroup("multiplication table is not square");
            for (int v : row)
                if (v < 0 || v >= order_) throw InvalidGroup("table entry out of range");
        }
        verify();
    }

    int order() const { return order_; }
    const std::string& name() const { return name_; }

    Elem identity() const { return identity_; }
    Elem mul(Elem a, Elem b) const { return mul_[a][b]; }
    Elem inv(Elem a) const { return inv_[a]; }

    Elem power(Elem g, long long k) const {
        Elem base = k < 0 ? inv_[g] : g;
        unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                                     : static_cast<unsigned long long>(k);
        Elem acc = identity_;
        while (e) {
            if (e & 1) acc = mul_[acc][base];
            base = mul_[base][base];
            e >>= 1;
        }
        return acc;
    }

    int elem_order(Elem g) const {
        Elem x = g;
        int n = 1;
        while (x != identity_) { x = mul_[x][g]; ++n; }
        return n;
    }

    const std::vector<std::vector<int>>& table() const { return mul_; }

private:
    void verify() {
        // two-sided identity
        identity_ = -1;
        for (int e = 0; e < order_; ++e) {
            bool ok = true;
            for (int a = 0; a < order_; ++a)
                if (mul_[e][a] != a || mul_[a][e] != a) { ok = false; break; }
            if (ok) { identity_ = e; break; }
        }
        if (identity_ < 0) throw InvalidGroup("no two-sided identity");

        inv_.assign(order_, -1);
        for (int a = 0; a < order_; ++a) {
            for (int b = 0; b < order_; ++b) {
                if (mul_[a][b] == identity_ && mul_[b][a] == identity_) { inv_[a] = b; break; }
            }
            if (inv_[a] < 0) throw InvalidGroup("element without two-sided inverse");
        }

        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                for (int c = 0; c < order_; ++c)
                    if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                        throw InvalidGroup("multiplication table is not associative");
    }

    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::string name_;
    int order_ = 0;
    int identity_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr int kDefaultOrderCap = 64;

namespace detail {

inline std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

// D_n of order 2n: element r^a s^e encoded as a + n*e.
inline std::vector<std::vector<int>> dihedral_table(int n) {
    int m = 2 * n;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int a = i % n, e = i / n, b = j % n, f = j / n;
            // (r^a s^e)(r^b s^f) = r^{a + (-1)^e b} s^{e+f}
            int c = e ? (a - b % n + n) % n : (a + b) % n;
            t[i][j] = c + n * ((e + f) % 2);
        }
    return t;
}

inline std::vector<std::vector<int>> symmetric_table(int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int m = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<int> comp(n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            for (int k = 0; k < n; ++k) comp[k] = perms[i][perms[j][k]];
            t[i][j] = index_of(comp);
        }
    return t;
}

inline std::vector<std::vector<int>> product_table(const std::vector<std::vector<int>>& a,
                                                   const std::vector<std::vector<int>>& b) {
    int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    int m = na * nb;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            t[i][j] = a[i / nb][j / nb] * nb + b[i % nb][j % nb];
    return t;
}

}  // namespace detail

/// Builds a group from a JSON spec:
///   {"kind":"cyclic","n":5} | {"kind":"dihedral","n":5} | {"kind":"symmetric","n":3}
///   | {"kind":"product","factors":[...]} | {"kind":"table","mul":[[...],...]}
inline GroupPtr construct_group(const nlohmann::json& spec, int order_cap = kDefaultOrderCap) {
    std::string kind = spec.at("kind").get<std::string>();
    std::vector<std::vector<int>> t;
    std::string name;
    if (kind == "cyclic") {
        int n = spec.at("n").get<int>();
        if (n <= 0) throw InvalidGroup("cyclic: n must be positive");
        t = detail::cyclic_table(n);
        name = "Z/" + std::to_string(n);
    } else if (kind == "dihedral") {
        int n = spec.at("n").get<int>();
        if (n <= 0) throw InvalidGroup("dihedral: n must be positive");
        t = detail::dihedral_table(n);
        name = "D" + std::to_string(n);
    } else if (kind == "symmetric") {
        int n = spec.at("n").get<int>();
        if (n <= 0) throw InvalidGroup("symmetric: n must be positive");
        if (n > 5) throw TooLarge("symmetric group too large");
        t = detail::symmetric_table(n);
        name = "S" + std::to_string(n);
    } else if (kind == "product") {
        const auto& factors = spec.at("factors");
        if (factors.empty()) throw InvalidGroup("product: no factors");
        name = "(";
        bool first = true;
        for (const auto& f : factors) {
            auto g = construct_group(f, order_cap);
            if (first) {
                t = g->table();
            } else {
                t = detail::product_table(t, g->table());
                if (static_cast<int>(t.size()) > order_cap)
                    throw TooLarge("product group exceeds order cap");
            }
            name += (first ? "" : "x") + g->name();
            first = false;
        }
        name += ")";
    } else if (kind == "table") {
        t = spec.at("mul").get<std::vector<std::vector<int>>>();
        name = spec.value("name", "table-group");
    } else {
        throw InvalidGroup("unknown group kind: " + kind);
    }
    if (static_cast<int>(t.size()) > order_cap)
        throw TooLarge("group order " + std::to_string(t.size()) + " exceeds cap " +
                       std::to_string(order_cap));
    return std::make_shared<FiniteGroup>(std::move(t), std::move(name));
}

}  // namespace dwc
