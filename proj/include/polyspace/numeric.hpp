#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace polyspace {

using Int = boost::multiprecision::cpp_int;

/// Exact rational with a reduced, positive denominator. (boost::rational is
/// not usable with an unbounded integer type: its normalize() rejects
/// negative denominators once numeric_limits<cpp_int>::max() collapses to 0.)
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design
    Rat(int n) : num_(n), den_(1) {}             // NOLINT
    Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    Rat operator-() const {
        Rat out;
        out.num_ = -num_;
        out.den_ = den_;
        return out;
    }

    Rat& operator+=(const Rat& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator-=(const Rat& o) { return *this += -o; }
    Rat& operator*=(const Rat& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

private:
    Int num_, den_;

    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = boost::multiprecision::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
};

/// Coefficient domains used across the ring presentations.
enum class Ring { Z, Q, Z2, Z4 };

std::string ring_name(Ring ring);

/// Canonical representative: Z and Q as reduced fractions (den == 1 for Z),
/// Z2 and Z4 with numerator in {0..modulus-1} and den == 1.
Rat ring_normalize(Ring ring, const Rat& value);

bool ring_is_unit(Ring ring, const Rat& value);

/// Inverse of a unit; precondition ring_is_unit.
Rat ring_unit_inverse(Ring ring, const Rat& value);

/// Retags a coefficient into another ring. For Z2/Z4 the denominator must be
/// invertible mod the modulus; for Z it must be 1.
Rat ring_convert(Ring from, Ring to, const Rat& value);

Int mod_floor(const Int& a, const Int& m);

std::string rational_to_string(const Rat& value);

/// Parses "7" or "3/4"; throws std::invalid_argument on anything else
/// (decimals are rejected on purpose: all input lengths are exact).
Rat parse_rational(const std::string& text);

}  // namespace polyspace
