#ifndef NNATOMS_MATRIX_MARKET_HPP
#define NNATOMS_MATRIX_MARKET_HPP

#include <string>
#include <string_view>

#include "nnatoms/matrix.hpp"

namespace nnatoms {

enum class MatrixMarketLayout { Coordinate, Array };

/// Reads a Matrix Market "matrix coordinate|array real|integer general"
/// document (coordinate also accepts "pattern"). Array data is column-major
/// as the format prescribes; unlisted coordinate entries are zero.
///
/// On the exact backend every value is parsed as an exact rational and the
/// extension token "p/q" is accepted. Throws InputError on malformed text,
/// duplicate coordinates, negative entries or a non-square shape.
NonnegativeMatrix load_matrix_market(std::string_view text, Backend backend = Backend::Float);

/// Float values are printed with 17 significant digits (round-trips
/// bit-exactly); exact values with format_rational.
std::string write_matrix_market(const NonnegativeMatrix& matrix,
                                MatrixMarketLayout layout = MatrixMarketLayout::Coordinate);

}  // namespace nnatoms

#endif  // NNATOMS_MATRIX_MARKET_HPP
