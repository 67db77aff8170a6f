#include "polyspace/polyring.hpp"

#include "polyspace/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polyspace {

std::shared_ptr<const VariableSet> VariableSet::make(std::vector<std::pair<std::string, int>> vars) {
    if (static_cast<int>(vars.size()) > kMaxVariables)
        throw TooLargeError("too many variables for the monomial representation");
    auto set = std::make_shared<VariableSet>();
    for (auto& [name, degree] : vars) {
        if (degree <= 0) throw std::invalid_argument("variable degrees must be positive");
        if (name == "R") set->r_index_ = static_cast<int>(set->names_.size());
        set->names_.push_back(std::move(name));
        set->degrees_.push_back(degree);
    }
    return set;
}

int VariableSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

VariableSetPtr spatial_variables(int m) {
    std::vector<std::pair<std::string, int>> vars;
    vars.emplace_back("R", 2);
    for (int i = 1; i < m; ++i) vars.emplace_back("V" + std::to_string(i), 2);
    return VariableSet::make(std::move(vars));
}

VariableSetPtr planar_variables(int m) {
    std::vector<std::pair<std::string, int>> vars;
    vars.emplace_back("R", 1);
    for (int i = 1; i < m; ++i) vars.emplace_back("V" + std::to_string(i), 1);
    return VariableSet::make(std::move(vars));
}

VariableSetPtr danilov_variables(int m) {
    std::vector<std::pair<std::string, int>> vars;
    vars.emplace_back("R", 2);
    for (int i = 1; i < m; ++i) vars.emplace_back("V" + std::to_string(i), 2);
    for (int i = 1; i < m; ++i) vars.emplace_back("U" + std::to_string(i), 2);
    return VariableSet::make(std::move(vars));
}

VariableSetPtr chern_variables(int m) {
    std::vector<std::pair<std::string, int>> vars;
    for (int i = 1; i <= m; ++i) vars.emplace_back("c" + std::to_string(i), 2);
    vars.emplace_back("p", 4);
    return VariableSet::make(std::move(vars));
}

VariableSetPtr sigma_variables(int m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("sigma variables need odd m >= 3");
    std::vector<std::pair<std::string, int>> vars;
    vars.emplace_back("p", 4);
    for (int i = 1; i <= (m - 1) / 2; ++i) vars.emplace_back("s" + std::to_string(i), 2 * i);
    return VariableSet::make(std::move(vars));
}

Monomial Monomial::one(const VariableSet& vars) {
    Monomial m;
    m.n_ = static_cast<std::uint8_t>(vars.count());
    return m;
}

Monomial Monomial::variable(const VariableSet& vars, int index, int power) {
    if (index < 0 || index >= vars.count()) throw std::invalid_argument("variable index out of range");
    Monomial m = one(vars);
    m.e_[static_cast<std::size_t>(index)] = static_cast<std::uint8_t>(power);
    m.wdeg_ = static_cast<std::uint16_t>(power * vars.degree(index));
    return m;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.n_ = n_;
    out.wdeg_ = static_cast<std::uint16_t>(wdeg_ + other.wdeg_);
    for (int i = 0; i < n_; ++i)
        out.e_[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(e_[static_cast<std::size_t>(i)] + other.e_[static_cast<std::size_t>(i)]);
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    if (wdeg_ > other.wdeg_) return false;
    for (int i = 0; i < n_; ++i)
        if (e_[static_cast<std::size_t>(i)] > other.e_[static_cast<std::size_t>(i)]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    Monomial out;
    out.n_ = n_;
    out.wdeg_ = static_cast<std::uint16_t>(wdeg_ - other.wdeg_);
    for (int i = 0; i < n_; ++i)
        out.e_[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(e_[static_cast<std::size_t>(i)] - other.e_[static_cast<std::size_t>(i)]);
    return out;
}

bool Monomial::coprime_with(const Monomial& other) const {
    for (int i = 0; i < n_; ++i)
        if (e_[static_cast<std::size_t>(i)] != 0 && other.e_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

Monomial Monomial::lcm(const VariableSet& vars, const Monomial& a, const Monomial& b) {
    Monomial out;
    out.n_ = a.n_;
    int wdeg = 0;
    for (int i = 0; i < a.n_; ++i) {
        std::uint8_t hi = std::max(a.e_[static_cast<std::size_t>(i)], b.e_[static_cast<std::size_t>(i)]);
        out.e_[static_cast<std::size_t>(i)] = hi;
        wdeg += hi * vars.degree(i);
    }
    out.wdeg_ = static_cast<std::uint16_t>(wdeg);
    return out;
}

Monomial Monomial::gcd(const VariableSet& vars, const Monomial& a, const Monomial& b) {
    Monomial out;
    out.n_ = a.n_;
    int wdeg = 0;
    for (int i = 0; i < a.n_; ++i) {
        std::uint8_t lo = std::min(a.e_[static_cast<std::size_t>(i)], b.e_[static_cast<std::size_t>(i)]);
        out.e_[static_cast<std::size_t>(i)] = lo;
        wdeg += lo * vars.degree(i);
    }
    out.wdeg_ = static_cast<std::uint16_t>(wdeg);
    return out;
}

int Monomial::r_power(const VariableSet& vars) const {
    int r = vars.r_index();
    return r < 0 ? 0 : e_[static_cast<std::size_t>(r)];
}

bool Monomial::operator==(const Monomial& other) const {
    if (n_ != other.n_ || wdeg_ != other.wdeg_) return false;
    for (int i = 0; i < n_; ++i)
        if (e_[static_cast<std::size_t>(i)] != other.e_[static_cast<std::size_t>(i)]) return false;
    return true;
}

std::string Monomial::to_string(const VariableSet& vars) const {
    if (is_one()) return "1";
    std::string out;
    for (int i = 0; i < n_; ++i) {
        int e = e_[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += vars.name(i);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.weighted_degree() != b.weighted_degree())
        return a.weighted_degree() < b.weighted_degree() ? -1 : 1;
    if (r_index >= 0 && a.exponent(r_index) != b.exponent(r_index))
        return a.exponent(r_index) < b.exponent(r_index) ? 1 : -1;  // smaller R power is larger
    for (int i = 0, n = a.variable_count(); i < n; ++i)
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? 1 : -1;
    return 0;
}

GradedPolynomial GradedPolynomial::zero(VariableSetPtr vars, Ring ring) {
    GradedPolynomial p;
    p.vars_ = std::move(vars);
    p.ring_ = ring;
    return p;
}

GradedPolynomial GradedPolynomial::constant(VariableSetPtr vars, Ring ring, Rat value) {
    GradedPolynomial p = zero(std::move(vars), ring);
    value = ring_normalize(ring, value);
    if (value.numerator() != 0) p.terms_.push_back({Monomial::one(*p.vars_), std::move(value)});
    return p;
}

GradedPolynomial GradedPolynomial::variable(VariableSetPtr vars, Ring ring, int index, int power) {
    GradedPolynomial p = zero(std::move(vars), ring);
    if (power < 0) throw std::invalid_argument("negative power");
    if (power == 0) return constant(p.vars_, ring, Rat(1));
    p.terms_.push_back({Monomial::variable(*p.vars_, index, power), Rat(1)});
    return p;
}

GradedPolynomial GradedPolynomial::term(VariableSetPtr vars, Ring ring, Monomial monomial,
                                        Rat coefficient) {
    GradedPolynomial p = zero(std::move(vars), ring);
    coefficient = ring_normalize(ring, coefficient);
    if (coefficient.numerator() != 0) p.terms_.push_back({monomial, std::move(coefficient)});
    return p;
}

GradedPolynomial GradedPolynomial::from_terms(VariableSetPtr vars, Ring ring, std::vector<Term> terms) {
    GradedPolynomial p = zero(std::move(vars), ring);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void GradedPolynomial::normalize() {
    MonomialOrder order(vars_);
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
    std::vector<Term> combined;
    combined.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!combined.empty() && combined.back().monomial == t.monomial) {
            combined.back().coefficient += t.coefficient;
        } else {
            combined.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (auto& t : combined) {
        Rat c = ring_normalize(ring_, t.coefficient);
        if (c.numerator() != 0) terms_.push_back({t.monomial, std::move(c)});
    }
}

const Monomial& GradedPolynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading monomial of the zero polynomial");
    return terms_.front().monomial;
}

const Rat& GradedPolynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return terms_.front().coefficient;
}

int GradedPolynomial::degree() const {
    return terms_.empty() ? -1 : terms_.front().monomial.weighted_degree();
}

bool GradedPolynomial::is_homogeneous() const {
    for (const Term& t : terms_)
        if (t.monomial.weighted_degree() != terms_.front().monomial.weighted_degree()) return false;
    return true;
}

GradedPolynomial GradedPolynomial::operator+(const GradedPolynomial& other) const {
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    if (ring_ != other.ring_) throw std::invalid_argument("mixed coefficient rings");
    MonomialOrder order(vars_);
    GradedPolynomial out = zero(vars_, ring_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        int c = order.compare(terms_[i].monomial, other.terms_[j].monomial);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(other.terms_[j++]);
        } else {
            Rat sum = ring_normalize(ring_, terms_[i].coefficient + other.terms_[j].coefficient);
            if (sum.numerator() != 0) out.terms_.push_back({terms_[i].monomial, std::move(sum)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
    return out;
}

GradedPolynomial GradedPolynomial::operator-() const {
    GradedPolynomial out = *this;
    for (Term& t : out.terms_) t.coefficient = ring_normalize(ring_, -t.coefficient);
    return out;
}

GradedPolynomial GradedPolynomial::operator-(const GradedPolynomial& other) const {
    return *this + (-other);
}

GradedPolynomial GradedPolynomial::operator*(const GradedPolynomial& other) const {
    if (ring_ != other.ring_) throw std::invalid_argument("mixed coefficient rings");
    GradedPolynomial out = zero(vars_, ring_);
    if (is_zero() || other.is_zero()) return out;
    out.terms_.reserve(terms_.size() * other.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : other.terms_)
            out.terms_.push_back({a.monomial.times(b.monomial), a.coefficient * b.coefficient});
    out.normalize();
    return out;
}

bool GradedPolynomial::operator==(const GradedPolynomial& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].monomial == other.terms_[i].monomial) ||
            terms_[i].coefficient != other.terms_[i].coefficient)
            return false;
    return true;
}

GradedPolynomial GradedPolynomial::scaled(const Rat& factor) const {
    GradedPolynomial out = zero(vars_, ring_);
    Rat f = ring_normalize(ring_, factor);
    if (f.numerator() == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Rat c = ring_normalize(ring_, t.coefficient * f);
        if (c.numerator() != 0) out.terms_.push_back({t.monomial, std::move(c)});
    }
    return out;
}

GradedPolynomial GradedPolynomial::times_term(const Monomial& monomial, const Rat& coefficient) const {
    GradedPolynomial out = zero(vars_, ring_);
    Rat f = ring_normalize(ring_, coefficient);
    if (f.numerator() == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Rat c = ring_normalize(ring_, t.coefficient * f);
        if (c.numerator() != 0) out.terms_.push_back({t.monomial.times(monomial), std::move(c)});
    }
    return out;
}

GradedPolynomial GradedPolynomial::power(int n) const {
    if (n < 0) throw std::invalid_argument("negative power");
    GradedPolynomial result = constant(vars_, ring_, Rat(1));
    GradedPolynomial base = *this;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

GradedPolynomial GradedPolynomial::substitute(int var_index, const GradedPolynomial& replacement) const {
    if (replacement.vars_ != vars_ && replacement.vars_->count() != vars_->count())
        throw std::invalid_argument("substitution across incompatible variable sets");
    if (!replacement.is_zero() &&
        (!replacement.is_homogeneous() || replacement.degree() != vars_->degree(var_index)))
        throw GradingMismatchError("replacement must be homogeneous of the variable's degree");
    GradedPolynomial out = zero(vars_, ring_);
    std::vector<GradedPolynomial> powers = {constant(vars_, ring_, Rat(1))};
    for (const Term& t : terms_) {
        int e = t.monomial.exponent(var_index);
        while (static_cast<int>(powers.size()) <= e)
            powers.push_back(powers.back() * replacement);
        Monomial rest = t.monomial;
        if (e > 0) rest = rest.divided_by(Monomial::variable(*vars_, var_index, e));
        out = out + powers[static_cast<std::size_t>(e)].times_term(rest, t.coefficient);
    }
    return out;
}

GradedPolynomial GradedPolynomial::homogeneous_component(int degree) const {
    GradedPolynomial out = zero(vars_, ring_);
    for (const Term& t : terms_)
        if (t.monomial.weighted_degree() == degree) out.terms_.push_back(t);
    return out;
}

GradedPolynomial GradedPolynomial::with_ring(Ring target) const {
    GradedPolynomial out = zero(vars_, target);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Rat c = ring_convert(ring_, target, t.coefficient);
        if (c.numerator() != 0) out.terms_.push_back({t.monomial, std::move(c)});
    }
    return out;
}

GradedPolynomial GradedPolynomial::mapped_to(VariableSetPtr target) const {
    std::vector<int> image(static_cast<std::size_t>(vars_->count()), -1);
    for (int i = 0; i < vars_->count(); ++i) image[static_cast<std::size_t>(i)] = target->index_of(vars_->name(i));
    GradedPolynomial out = zero(target, ring_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m = Monomial::one(*target);
        for (int i = 0; i < vars_->count(); ++i) {
            int e = t.monomial.exponent(i);
            if (e == 0) continue;
            if (image[static_cast<std::size_t>(i)] < 0)
                throw std::invalid_argument("variable '" + vars_->name(i) + "' missing from target set");
            m = m.times(Monomial::variable(*target, image[static_cast<std::size_t>(i)], e));
        }
        out.terms_.push_back({m, t.coefficient});
    }
    out.normalize();
    return out;
}

std::string GradedPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        const bool negative = t.coefficient < Rat(0);
        Rat magnitude = negative ? -t.coefficient : t.coefficient;
        if (i == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const std::string mono = t.monomial.to_string(*vars_);
        if (mono == "1") {
            out += rational_to_string(magnitude);
        } else if (magnitude == Rat(1)) {
            out += mono;
        } else {
            out += rational_to_string(magnitude) + "*" + mono;
        }
    }
    return out;
}

}  // namespace polyspace
