#pragma once

#include <stdexcept>
#include <string>

#include "weyl/poly.hpp"

namespace weyl {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar: + - * / ^ ( ), integers, a/b, i, and the variables of `space`.
// '/' only divides by a nonzero constant.
Poly parse_expression(const std::string& text, Space space);
Scalar parse_scalar(const std::string& text);

}  // namespace weyl
