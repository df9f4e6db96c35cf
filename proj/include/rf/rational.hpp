#ifndef RF_RATIONAL_HPP
#define RF_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "rf/errors.hpp"

namespace rf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int pow_int(const Int& base, unsigned exp) {
    Int r = 1, b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned exp) {
    return Rat(pow_int(num(base), exp), pow_int(den(base), exp));
}

// floor(a/b) for exact rationals
inline Int floor_rat(const Rat& r) {
    Int n = num(r), d = den(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int n = num(r), d = den(r);
    Int q = n / d;
    if (n > 0 && q * d != n) ++q;
    return q;
}

// binomial coefficient C(n,2)
inline Int choose2(const Int& n) { return n * (n - 1) / 2; }

inline Int choose(const Int& n, unsigned k) {
    if (n < 0) throw DomainError("choose: negative n");
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// Parses "p/q" or "p". Denominator must be positive after normalization.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) throw DomainError("rational with zero denominator: " + s);
        return Rat(p, q);
    } catch (const std::exception& e) {
        throw DomainError("cannot parse rational '" + s + "': " + e.what());
    }
}

inline std::string rat_str(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

// number of bits in |n|; 0 for n == 0
inline unsigned bit_size(const Int& n) {
    if (n == 0) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(n))) + 1u;
}

} // namespace rf

#endif
