#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace evenwalks {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an exhaustive operation would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string what_arg, std::uint64_t requested, std::uint64_t limit)
        : std::runtime_error(std::move(what_arg)), requested_(requested), limit_(limit) {}
    std::uint64_t requested() const { return requested_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t requested_;
    std::uint64_t limit_;
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// n * (n-1) * ... * (n-k+1); equals 0 whenever 0 <= n < k.
BigInt falling_factorial(const BigInt& n, unsigned k);

Rational pow_rational(const Rational& base, unsigned exp);

/// Serialize as "num/den" with den > 0 (always includes the denominator).
std::string fraction_string(const Rational& q);
Rational parse_fraction(const std::string& text);

double to_double(const Rational& q);

}  // namespace evenwalks
