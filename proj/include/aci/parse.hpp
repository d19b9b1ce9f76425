#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "aci/polynomial.hpp"

namespace aci {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownVariable, Coefficient };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        kind_(kind),
        position_(position) {}

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Grammar (whitespace ignored):
///   expression  := ['+'|'-'] term (('+'|'-') term)*
///   term        := coefficient | [coefficient '*'] factor ('*' factor)*
///   factor      := 'x' digit+ ['^' positive-integer]
///   coefficient := integer ['/' positive-integer]
/// Variables must be x0..x{nvars-1}.
template <Field K>
Polynomial<K> parse_polynomial(std::string_view text, const K& field, int nvars);

/// Largest variable index mentioned in the text, -1 if none. Does not validate.
int max_variable_index(std::string_view text);

}  // namespace aci
