#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace lorenz {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

} // namespace lorenz
