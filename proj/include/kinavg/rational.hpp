// rational.hpp — exact rational arithmetic for the exponent engine.
//
// Integrabilities p in [1, infinity] are stored through their reciprocals
// u = 1/p in [0,1], so p = infinity is the exact value u = 0 and duality is
// u' = 1 - u.  All exponent formulas then evaluate without floating drift.
#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "kinavg/common.hpp"

namespace kinavg {

class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Rat operator+(Rat a, Rat b) { return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
    friend Rat operator-(Rat a, Rat b) { return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
    friend Rat operator-(Rat a) { return Rat(-a.num_, a.den_); }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
    friend Rat operator/(Rat a, Rat b) {
        if (b.num_ == 0) throw ConfigError("rational division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(Rat a, Rat b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator<(Rat a, Rat b) { return a.num_ * b.den_ < b.num_ * a.den_; }
    friend bool operator<=(Rat a, Rat b) { return a == b || a < b; }
    friend bool operator>(Rat a, Rat b) { return b < a; }
    friend bool operator>=(Rat a, Rat b) { return b <= a; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, Rat r) { return os << r.str(); }

    static Rat max(Rat a, Rat b) { return a < b ? b : a; }
    static Rat min(Rat a, Rat b) { return a < b ? a : b; }

    // parse "3", "-1/2"
    static Rat parse(const std::string& s) {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }

private:
    void normalize() {
        if (den_ == 0) throw ConfigError("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};

// An integrability exponent p in [1, infinity], stored as u = 1/p.
class Integrability {
public:
    Integrability() = default;

    static Integrability finite(Rat p) {
        if (p < Rat(1)) throw ConfigError("integrability must be >= 1");
        Integrability out;
        out.inv_ = Rat(1) / p;
        return out;
    }
    static Integrability infinity() {
        Integrability out;
        out.inv_ = Rat(0);
        return out;
    }
    static Integrability from_inverse(Rat u) {
        if (u < Rat(0) || u > Rat(1)) throw ConfigError("inverse integrability outside [0,1]");
        Integrability out;
        out.inv_ = u;
        return out;
    }

    Rat inv() const { return inv_; }
    bool is_infinite() const { return inv_ == Rat(0); }
    Rat value() const {
        if (is_infinite()) throw ConfigError("integrability is infinite");
        return Rat(1) / inv_;
    }

    // Hoelder conjugate: 1/p + 1/p' = 1
    Integrability dual() const { return from_inverse(Rat(1) - inv_); }

    std::string str() const { return is_infinite() ? "inf" : value().str(); }

    friend bool operator==(const Integrability& a, const Integrability& b) { return a.inv_ == b.inv_; }
    // order by the exponent itself (infinity largest)
    friend bool operator<(const Integrability& a, const Integrability& b) { return b.inv_ < a.inv_; }
    friend bool operator<=(const Integrability& a, const Integrability& b) { return a == b || a < b; }

    static Integrability parse(const std::string& s) {
        if (s == "inf" || s == "infinity" || s == "oo") return infinity();
        return finite(Rat::parse(s));
    }

private:
    Rat inv_ = Rat(1, 2);
};

}  // namespace kinavg
