#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dwc {

/// Element of Q/Z, kept as a reduced fraction num/den with 0 <= num < den.
/// This is the coefficient group for all cocycle values and invariants.
class QmodZ {
public:
    QmodZ() : num_(0), den_(1) {}

    static QmodZ from_fraction(long long num, long long den) {
        if (den == 0) throw std::invalid_argument("QmodZ: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        num %= den;
        if (num < 0) num += den;
        long long g = std::gcd(num, den);
        return QmodZ(num / g, den / g);
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    QmodZ operator+(const QmodZ& o) const {
        long long g = std::gcd(den_, o.den_);
        long long d = den_ / g * o.den_;
        long long n = num_ * (o.den_ / g) + o.num_ * (den_ / g);
        return from_fraction(n, d);
    }
    QmodZ operator-() const { return from_fraction(-num_, den_); }
    QmodZ operator-(const QmodZ& o) const { return *this + (-o); }
    QmodZ& operator+=(const QmodZ& o) { *this = *this + o; return *this; }
    QmodZ& operator-=(const QmodZ& o) { *this = *this - o; return *this; }

    QmodZ scaled(long long k) const { return from_fraction(num_ * k, den_); }

    bool operator==(const QmodZ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QmodZ& o) const { return !(*this == o); }
    bool operator<(const QmodZ& o) const {
        // total order on representatives in [0,1)
        return num_ * o.den_ < o.num_ * den_;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    /// Parses "num/den" or a bare integer (which is 0 in Q/Z).
    static QmodZ parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return from_fraction(std::stoll(s), 1);
        long long n = std::stoll(s.substr(0, slash));
        long long d = std::stoll(s.substr(slash + 1));
        return from_fraction(n, d);
    }

private:
    QmodZ(long long n, long long d) : num_(n), den_(d) {}
    long long num_;
    long long den_;
};

inline long long mod_ll(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace dwc
