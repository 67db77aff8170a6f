#include "polyspace/invariants.hpp"

#include "polyspace/errors.hpp"

#include <bit>
#include <stdexcept>

namespace polyspace {

PoincarePolynomial::PoincarePolynomial(std::vector<Int> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim();
}

void PoincarePolynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

PoincarePolynomial PoincarePolynomial::monomial(int power, Int coefficient) {
    std::vector<Int> c(static_cast<std::size_t>(power) + 1, Int(0));
    c.back() = std::move(coefficient);
    return PoincarePolynomial(std::move(c));
}

PoincarePolynomial PoincarePolynomial::from_dimensions(const std::vector<int>& dims) {
    std::vector<Int> c;
    c.reserve(dims.size());
    for (int d : dims) c.emplace_back(d);
    return PoincarePolynomial(std::move(c));
}

Int PoincarePolynomial::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coefficients_.size())) return Int(0);
    return coefficients_[static_cast<std::size_t>(power)];
}

PoincarePolynomial PoincarePolynomial::operator+(const PoincarePolynomial& other) const {
    std::vector<Int> c(std::max(coefficients_.size(), other.coefficients_.size()), Int(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i) c[i] += coefficients_[i];
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) c[i] += other.coefficients_[i];
    return PoincarePolynomial(std::move(c));
}

PoincarePolynomial PoincarePolynomial::operator-(const PoincarePolynomial& other) const {
    std::vector<Int> c(std::max(coefficients_.size(), other.coefficients_.size()), Int(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i) c[i] += coefficients_[i];
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) c[i] -= other.coefficients_[i];
    return PoincarePolynomial(std::move(c));
}

PoincarePolynomial PoincarePolynomial::operator*(const PoincarePolynomial& other) const {
    if (is_zero() || other.is_zero()) return PoincarePolynomial();
    std::vector<Int> c(coefficients_.size() + other.coefficients_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
            c[i + j] += coefficients_[i] * other.coefficients_[j];
    return PoincarePolynomial(std::move(c));
}

PoincarePolynomial PoincarePolynomial::exact_divide(const PoincarePolynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (is_zero()) return PoincarePolynomial();
    const Int& lead = divisor.coefficients_.back();
    std::vector<Int> rem = coefficients_;
    const int dd = divisor.degree();
    const int qd = degree() - dd;
    if (qd < 0) throw InexactDivisionError("degree of dividend below divisor");
    std::vector<Int> quot(static_cast<std::size_t>(qd) + 1, Int(0));
    for (int k = qd; k >= 0; --k) {
        Int top = rem[static_cast<std::size_t>(k + dd)];
        if (top == 0) continue;
        if (top % lead != 0) throw InexactDivisionError("non-exact polynomial division");
        Int q = top / lead;
        quot[static_cast<std::size_t>(k)] = q;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * divisor.coefficients_[static_cast<std::size_t>(j)];
    }
    for (const Int& r : rem)
        if (r != 0) throw InexactDivisionError("nonzero remainder in exact polynomial division");
    return PoincarePolynomial(std::move(quot));
}

PoincarePolynomial PoincarePolynomial::reversed(int k) const {
    if (is_zero()) return PoincarePolynomial();
    if (k < degree()) throw std::invalid_argument("reversal exponent below degree");
    std::vector<Int> c(static_cast<std::size_t>(k) + 1, Int(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        c[static_cast<std::size_t>(k) - i] = coefficients_[i];
    return PoincarePolynomial(std::move(c));
}

bool PoincarePolynomial::palindromic() const {
    if (is_zero()) return true;
    return *this == reversed(degree());
}

Int PoincarePolynomial::evaluate_at_i() const {
    Int value = 0;
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        if (coefficients_[k] == 0) continue;
        if (k % 2 != 0) throw std::logic_error("odd power in an even Poincare polynomial");
        value += (k % 4 == 0) ? coefficients_[k] : -coefficients_[k];
    }
    return value;
}

Int PoincarePolynomial::evaluate_at_minus_one() const {
    Int value = 0;
    for (std::size_t k = 0; k < coefficients_.size(); ++k)
        value += (k % 2 == 0) ? coefficients_[k] : -coefficients_[k];
    return value;
}

std::string PoincarePolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        const Int& c = coefficients_[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        Int magnitude = negative ? Int(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (k == 0) {
            out += magnitude.str();
        } else {
            if (magnitude != 1) out += magnitude.str();
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

PoincarePolynomial poincare(const LengthVector& alpha, SpaceTag space) {
    int e;
    switch (space) {
        case SpaceTag::Pol: e = 2; break;
        case SpaceTag::APol: e = 1; break;
        case SpaceTag::UP: e = 0; break;
        default: throw std::invalid_argument("poincare expects UP, APol or Pol");
    }
    require_generic(alpha);
    const int m = alpha.edge_count();
    SubsetFamily sm = distinguished_subposet(alpha, m);
    PoincarePolynomial numerator;
    for (std::uint32_t j : sm.members()) {
        const int size = std::popcount(j);
        numerator = numerator + PoincarePolynomial::monomial(2 * size);
        numerator = numerator - PoincarePolynomial::monomial(2 * (m - size - e));
    }
    if (numerator.is_zero()) return numerator;
    PoincarePolynomial one_minus_t2({Int(1), Int(0), Int(-1)});
    return numerator.exact_divide(one_minus_t2);
}

PoincarePolynomial klyachko_poincare(const LengthVector& alpha) {
    require_generic(alpha);
    const int m = alpha.edge_count();
    PoincarePolynomial one_plus_t2({Int(1), Int(0), Int(1)});
    PoincarePolynomial numerator = PoincarePolynomial({Int(1)});
    for (int i = 0; i < m - 1; ++i) numerator = numerator * one_plus_t2;
    SubsetFamily shorts = short_family(alpha);
    for (std::uint32_t j : shorts.members())
        numerator = numerator - PoincarePolynomial::monomial(2 * std::popcount(j));
    if (numerator.is_zero()) return numerator;
    // divide by t^2 (t^2 - 1)
    PoincarePolynomial divisor({Int(0), Int(0), Int(-1), Int(0), Int(1)});
    return numerator.exact_divide(divisor);
}

Int signature(const LengthVector& alpha) {
    if (alpha.edge_count() % 2 == 0)
        throw EvenEdgeCountError("the signature needs an odd edge count");
    require_generic(alpha);
    const int m = alpha.edge_count();
    SubsetFamily sm = distinguished_subposet(alpha, m);
    Int sum = 0;
    for (std::uint32_t j : sm.members())
        sum += (std::popcount(j) % 2 == 0) ? 1 : -1;
    return sum;
}

Int planar_euler(const LengthVector& alpha) {
    // alternating sum of the halved-degree Betti numbers; for odd m this is
    // the alternating subset sum over S_m, for even m the planar space is
    // odd-dimensional and the characteristic vanishes
    return poincare(alpha, SpaceTag::Pol).evaluate_at_i();
}

}  // namespace polyspace
