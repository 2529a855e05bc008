#pragma once

#include <gmpxx.h>

#include <string>

namespace homhopf {

using Rational = mpq_class;

// Always "p/q", including integers ("3/1"), so output never depends on the value.
inline std::string to_string(Rational const& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p", "p/q" and surrounding blanks; throws std::invalid_argument otherwise.
Rational parse_rational(std::string const& text);

}  // namespace homhopf
