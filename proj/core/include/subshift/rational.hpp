#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace subshift {

using Rational = boost::rational<std::int64_t>;

std::string format_rational(const Rational& r);  // "p/q", or "p" when q = 1
Rational parse_rational(std::string_view text);   // ParseError

}  // namespace subshift
