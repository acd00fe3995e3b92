#ifndef RAINBOW_RATIONAL_HPP
#define RAINBOW_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "rainbow/errors.hpp"

namespace rainbow {

// Fractions like alpha, beta and the derived schedule parameters are kept
// exact so that comparisons at the 2*alpha + beta = 1 boundary never flip
// on floating-point noise.
using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline long long floor_to_int(const Rat& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

inline long long ceil_to_int(const Rat& r) {
    long long f = floor_to_int(r);
    return r == Rat(f) ? f : f + 1;
}

inline std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "3/4", "2", "-1/3" and decimal literals like "0.25" (scaled exactly).
inline Rat parse_rational(std::string_view text) {
    if (text.empty()) throw param_error("empty rational literal");
    std::string s(text);
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            long long num = std::stoll(s.substr(0, slash));
            long long den = std::stoll(s.substr(slash + 1));
            if (den == 0) throw param_error("rational with zero denominator: " + s);
            return Rat(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rat(std::stoll(s));
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (frac.size() > 15) throw param_error("decimal literal too long: " + s);
        long long den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        long long w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
        long long f = frac.empty() ? 0 : std::stoll(frac);
        bool neg = !whole.empty() && whole[0] == '-';
        long long num = w * den + (neg ? -f : f);
        return Rat(num, den);
    } catch (const param_error&) {
        throw;
    } catch (const std::exception&) {
        throw param_error("cannot parse rational: " + s);
    }
}

}  // namespace rainbow

#endif
