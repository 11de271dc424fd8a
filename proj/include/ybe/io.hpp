#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ybe/qset.hpp"

namespace ybe {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

// "ybs 1" file format: header, size, optional labels, N left-action rows,
// optional N right-action rows.  All entries 1-based.  '#' starts a comment.
// Without an R section the right table is derived as the row inverse of the
// left table and the set is marked lri_derived.
QuadraticSet parse_ybs(const std::string& text);
QuadraticSet parse_ybs_stream(std::istream& in);
std::string write_ybs(const QuadraticSet& q);

// DOT export of the action graph: one edge x -> ^a x labelled a for every
// actor a and source x, loops omitted unless requested.  Requires lri.
std::string export_dot(const QuadraticSet& q, bool include_loops = false);

}  // namespace ybe
