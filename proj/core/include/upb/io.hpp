#pragma once

#include <string>

#include "upb/types.hpp"

namespace upb {

/// Matrix text format: first line "rows cols", then one space-separated line
/// per row. Entries are written "re+imj" with j marking the imaginary unit;
/// matrices whose entries are all real integers are written as bare integers.
std::string write_matrix_text(const CMatrix& m);
CMatrix parse_matrix_text(const std::string& text);

void save_matrix_text(const CMatrix& m, const std::string& path);
CMatrix load_matrix_text(const std::string& path);

/// Product-basis JSON:
/// { "dims": [...], "size": n,
///   "states": [ [ [ [re, im], ... ] per party ] per state ],
///   "construction": tag, "seed": N, "b": value-or-null }
std::string to_json_string(const ProductBasis& pb, int indent = 2);
ProductBasis product_basis_from_json(const std::string& text);

void save_product_basis(const ProductBasis& pb, const std::string& path);
ProductBasis load_product_basis(const std::string& path);

/// One complex scalar in the matrix text entry syntax.
std::string format_complex(const Complex& z);
Complex parse_complex(const std::string& token);

} // namespace upb
