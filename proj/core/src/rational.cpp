#include "sergeev/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sergeev {

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };

  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };
  Integer p(strip_plus(num)), q(strip_plus(den));
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

bool has_dyadic_denominator(const Rational& value) {
  const Integer& q = value.get_den();
  return mpz_popcount(q.get_mpz_t()) == 1;
}

long power_of_two_exponent(const Rational& value) {
  if (value == 0) return -1;
  if (!is_integer(value)) return -1;
  Integer p = abs(value.get_num());
  if (mpz_popcount(p.get_mpz_t()) != 1) return -1;
  return static_cast<long>(mpz_scan1(p.get_mpz_t(), 0));
}

}  // namespace sergeev
