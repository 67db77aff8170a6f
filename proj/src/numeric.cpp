#include "polyspace/numeric.hpp"

#include "polyspace/errors.hpp"

#include <stdexcept>

namespace polyspace {

std::string ring_name(Ring ring) {
    switch (ring) {
        case Ring::Z: return "Z";
        case Ring::Q: return "Q";
        case Ring::Z2: return "Z2";
        case Ring::Z4: return "Z4";
    }
    return "?";
}

static int ring_modulus(Ring ring) {
    if (ring == Ring::Z2) return 2;
    if (ring == Ring::Z4) return 4;
    return 0;
}

Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

Rat ring_normalize(Ring ring, const Rat& value) {
    switch (ring) {
        case Ring::Q:
            return value;
        case Ring::Z:
            if (value.denominator() != 1)
                throw std::invalid_argument("non-integral coefficient in a Z polynomial");
            return value;
        case Ring::Z2:
        case Ring::Z4: {
            const Int m = ring_modulus(ring);
            Int den = mod_floor(value.denominator(), m);
            Int num = mod_floor(value.numerator(), m);
            if (den == 1) return Rat(num);
            // den must be a unit mod m; for m in {2,4} the units are self-inverse
            if (boost::multiprecision::gcd(den, m) != 1)
                throw std::invalid_argument("denominator not invertible modulo " + m.str());
            return Rat(mod_floor(num * den, m));
        }
    }
    return value;
}

bool ring_is_unit(Ring ring, const Rat& value) {
    switch (ring) {
        case Ring::Q:
            return value.numerator() != 0;
        case Ring::Z:
            return value.denominator() == 1 && (value.numerator() == 1 || value.numerator() == -1);
        case Ring::Z2:
            return ring_normalize(ring, value).numerator() == 1;
        case Ring::Z4: {
            Int n = ring_normalize(ring, value).numerator();
            return n == 1 || n == 3;
        }
    }
    return false;
}

Rat ring_unit_inverse(Ring ring, const Rat& value) {
    switch (ring) {
        case Ring::Q:
            return Rat(value.denominator(), value.numerator());
        case Ring::Z:
            return value;  // +/-1 are self-inverse
        case Ring::Z2:
            return Rat(1);
        case Ring::Z4:
            return ring_normalize(ring, value);  // 1 and 3 are self-inverse mod 4
    }
    return value;
}

Rat ring_convert(Ring from, Ring to, const Rat& value) {
    (void)from;
    return ring_normalize(to, value);
}

std::string rational_to_string(const Rat& value) {
    if (value.denominator() == 1) return value.numerator().str();
    return value.numerator().str() + "/" + value.denominator().str();
}

Rat parse_rational(const std::string& text) {
    auto parse_int = [](const std::string& s) -> Int {
        if (s.empty()) throw std::invalid_argument("empty number");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("bare sign: '" + s + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("not an exact rational: '" + s + "'");
        return Int(s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rat(num, den);
}

}  // namespace polyspace
