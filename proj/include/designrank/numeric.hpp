#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace designrank {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// Text forms used by all file formats: rationals as "p" or "p/q" (always in
// lowest terms, q > 0), doubles as shortest round-trip decimal, complex as
// "re+imi" / "re-imi".
Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& x);

// Exact value of the double (every finite double is a dyadic rational).
Rational rational_from_double(double x);

std::string format_double(double x);
double double_from_string(const std::string& s);

Complex complex_from_string(const std::string& s);
std::string complex_to_string(const Complex& z);

}  // namespace designrank
