#include "mtshim/numeric.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace mtshim {

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

BigInt pow2(long long e) {
    if (e < 0) throw ValidationError("pow2: negative exponent");
    BigInt one = 1;
    return one << static_cast<unsigned>(e);
}

Rational pair_ratio(const BigInt& p, const BigInt& q) {
    if (p <= 0 || q <= 0) throw ValidationError("pair_ratio: entries must be positive");
    if (p <= q) return Rational(p, q);
    return Rational(q, p);
}

std::string rational_to_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_reduced_fraction(const std::string& text) {
    auto parse_int = [](const std::string& s) -> BigInt {
        if (s.empty()) throw ValidationError("fraction: empty integer part");
        for (char c : s)
            if (c < '0' || c > '9') throw ValidationError("fraction: expected decimal digits in '" + s + "'");
        if (s.size() > 1 && s[0] == '0') throw ValidationError("fraction: leading zero in '" + s + "'");
        return BigInt(s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        BigInt p = parse_int(text);
        if (p <= 0) throw ValidationError("fraction: must be positive");
        return Rational(p);
    }
    BigInt p = parse_int(text.substr(0, slash));
    BigInt q = parse_int(text.substr(slash + 1));
    if (p <= 0 || q <= 0) throw ValidationError("fraction: must be positive");
    if (boost::multiprecision::gcd(p, q) != 1)
        throw ValidationError("fraction '" + text + "' is not in lowest terms");
    return Rational(p, q);
}

}  // namespace mtshim
