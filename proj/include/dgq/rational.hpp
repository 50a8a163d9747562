#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace dgq {

using Rational = boost::multiprecision::mpq_rational;

// Accepts "3", "-2", "+7/4". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

std::string format_rational(const Rational& q);

}  // namespace dgq
