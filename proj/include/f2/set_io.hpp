#pragma once

#include <iosfwd>
#include <string>

#include "f2/dense_set.hpp"

namespace f2 {

// Text set file: first line "n <dim>", then the elements as ascending
// decimal integers, whitespace separated, no duplicates.
void write_set_text(std::ostream& out, const DenseSet& a);
DenseSet read_set_text(std::istream& in);

// Binary set file: 8-byte magic "F2SET\0\0\0", one byte n, then
// ceil(2^n / 8) bytes, little-endian bit order (element x lives at bit
// x & 7 of byte x >> 3).
void write_set_binary(std::ostream& out, const DenseSet& a);
DenseSet read_set_binary(std::istream& in);

// Sniffs the magic to pick the format.
DenseSet read_set_file(const std::string& path);
// Binary when the path ends in ".bin", text otherwise.
void write_set_file(const std::string& path, const DenseSet& a);

}  // namespace f2
