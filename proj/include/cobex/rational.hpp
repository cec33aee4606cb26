#ifndef COBEX_RATIONAL_HPP
#define COBEX_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace cobex {

/// Exact rational with 64-bit parts; all values here are ratios of cell
/// counts, far below overflow range.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace cobex

#endif
