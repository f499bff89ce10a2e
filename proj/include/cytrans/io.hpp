#pragma once

// Text formats for polytopes, fans and cubic forms.

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>

#include "cytrans/fan.hpp"
#include "cytrans/polynomial.hpp"
#include "cytrans/polytope.hpp"

namespace cytrans {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// '#' comments, header "D N" followed by N rows of D integers, or "D N t"
/// followed by D rows of N integers.
LatticePolytope read_polytope(std::istream& in, const std::string& source = "<input>");
LatticePolytope load_polytope(const std::string& path);
std::string format_polytope(const LatticePolytope& p);

/// '#' comments, "D R", R ray rows, "K", K rows of 0-based ray indices.
Fan read_fan(std::istream& in, const std::string& source = "<input>");
Fan load_fan(const std::string& path);
std::string format_fan(const Fan& f);

/// '#' comments, optional "vars A B C" line, then the polynomial (may span
/// several lines). Variables default to A, B, C.
Polynomial read_cubic(std::istream& in, const std::string& source = "<input>");
Polynomial load_cubic(const std::string& path);

}  // namespace cytrans
