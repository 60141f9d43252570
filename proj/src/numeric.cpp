#include "evenwalks/numeric.hpp"

namespace evenwalks {

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

BigInt falling_factorial(const BigInt& n, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= n - i;
    return r;
}

Rational pow_rational(const Rational& base, unsigned exp) {
    Rational r = 1;
    Rational b = base;
    while (exp > 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

std::string fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("fraction with zero denominator: " + text);
    return Rational(num, den);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace evenwalks
