#pragma once

#include <bergekit/bit_matrix.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace bergekit {

// Text format: "<rows> <cols>" then one line of <cols> characters per row.
BitMatrix read_matrix(std::istream& in);
BitMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const BitMatrix& a);
std::string to_text(const BitMatrix& a);

// Inline literal: columns as top-to-bottom bit strings joined by commas,
// e.g. "110,101,011" for G_2.
BitMatrix parse_literal(std::string_view literal);
std::string to_literal(const BitMatrix& a);

/// Resolves a command-line matrix argument: an existing file in text format, a
/// catalog name prefixed with '@' (e.g. "@G1"), or an inline literal.
BitMatrix resolve_matrix_arg(const std::string& arg);

}  // namespace bergekit
