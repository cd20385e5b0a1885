#include "polytor/rational.hpp"

#include <stdexcept>

namespace polytor {

std::string to_string(const Rational& q) {
  return q.str();
}

Rational parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer p(n), q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

long to_long(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("rational " + q.str() + " is not an integer");
  return boost::multiprecision::numerator(q).convert_to<long>();
}

Mat zero_matrix(int rows, int cols) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = 0;
  return m;
}

Mat unit_matrix(int n, int i, int j) {
  Mat m = zero_matrix(n, n);
  m(i, j) = 1;
  return m;
}

Mat commutator(const Mat& a, const Mat& b) {
  Mat ab = a * b;
  Mat ba = b * a;
  return ab - ba;
}

bool is_zero(const Mat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace polytor
