#include "dgq/rational.hpp"

#include <stdexcept>

namespace dgq {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_int = [](std::string_view part) {
    std::size_t start = (!part.empty() && part.front() == '-') ? 1 : 0;
    if (start == part.size()) return false;
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  const boost::multiprecision::mpz_int n{num}, d{den};
  if (d == 0) throw std::invalid_argument("zero denominator");
  return Rational{n, d};
}

std::string format_rational(const Rational& q) { return q.str(); }

}  // namespace dgq
