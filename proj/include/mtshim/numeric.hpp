#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mtshim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown on malformed input or broken invariants. Maps to exit code 1 / MTSHIM_EVALIDATION.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a configured cap is exceeded. Maps to exit code 2 / MTSHIM_ERESOURCE.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Configurable resource caps with the documented defaults.
struct Caps {
    long long weight_enum_cap = 1LL << 20;  // max representation dimension for weight enumeration
    long long search_cap = 100000;          // candidates explored per decomposition search
    long long target_dim_cap = 1000000;     // max target dimension for the enumerator
    long long closure_cap = 1000000;        // max group-closure size
};

BigInt binomial(long long n, long long k);
BigInt pow2(long long e);

// Reduced ratio min(p,q)/max(p,q) of a positive pair; lands in (0, 1].
Rational pair_ratio(const BigInt& p, const BigInt& q);

std::string rational_to_string(const Rational& r);
// Strict parse of "p" or "p/q"; rejects non-reduced fractions and non-positive values.
Rational parse_reduced_fraction(const std::string& text);

}  // namespace mtshim
