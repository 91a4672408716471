#ifndef NCPOLY_RATIONAL_HPP
#define NCPOLY_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ncpoly {

/// Exact rational scalar. Always in lowest terms, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1)
        os << '/' << denominator(r);
    return os.str();
}

} // namespace ncpoly

#endif
