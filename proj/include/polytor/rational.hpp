#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace polytor {

// GMP-backed exact rationals; always canonical (lowest terms, positive denominator).
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Dense matrices over Q, used for small objects (matrix Lie algebras, irrep actions).
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

// Requires is_integer(q) and that the value fits in a long.
long to_long(const Rational& q);

Mat zero_matrix(int rows, int cols);
Mat unit_matrix(int n, int i, int j);  // E_ij, zero-based
Mat commutator(const Mat& a, const Mat& b);
bool is_zero(const Mat& m);

}  // namespace polytor
