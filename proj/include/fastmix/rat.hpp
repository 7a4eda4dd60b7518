#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fastmix {

// Exact fractions for quantities defined by counting (cut sizes, matching
// numbers, set sizes). Magnitudes stay far below 2^63 at the enumeration caps.
using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rat& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Parses "p/q" or a bare integer "p".
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s), 1);
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        return Rat(num, den);
    } catch (const boost::bad_rational&) {
        throw std::invalid_argument("zero denominator in rational: " + s);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

}  // namespace fastmix
