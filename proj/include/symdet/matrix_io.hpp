#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "symdet/matrix.hpp"

namespace symdet {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix read from text whose scalar kind is only known at runtime.
using AnyMatrix = std::variant<RealMatrix, ComplexMatrix>;

/// Text format:
///   line 1: "<n> <R|C>"
///   then n lines of n whitespace-separated entries; complex entries are "re,im".
/// Numbers are written in shortest round-trip form and parsed without locale.
AnyMatrix parse_matrix(std::string_view text);
AnyMatrix read_matrix_file(const std::string& path);

std::string format_matrix(const RealMatrix& m);
std::string format_matrix(const ComplexMatrix& m);

void write_matrix_file(const std::string& path, const AnyMatrix& m);

}  // namespace symdet
