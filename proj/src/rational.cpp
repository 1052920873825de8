#include "graphcurv/rational.hpp"

#include <stdexcept>

namespace graphcurv {

std::string to_fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("parse_fraction: zero denominator in '" + text + "'");
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_fraction: malformed rational '" + text + "'");
    }
}

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

}  // namespace graphcurv
