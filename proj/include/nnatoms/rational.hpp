#ifndef NNATOMS_RATIONAL_HPP
#define NNATOMS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace nnatoms {

using Rational = mpq_class;

/// Parses "7", "-2.5", "1e-3", "3.25E2" or "p/q" into an exact rational.
/// Decimal literals are read exactly (0.1 is 1/10, not the nearest double).
Rational parse_rational(std::string_view text);

/// Exact decimal text when the denominator is of the form 2^a 5^b, else "p/q".
std::string format_rational(const Rational& value);

/// Exact value of a finite double.
Rational rational_from_double(double value);

/// Dense row-major matrix over the rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_double(const Eigen::MatrixXd& m);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix transposed() const;
    /// Principal submatrix on the given (sorted) indices.
    RationalMatrix principal(std::span<const std::size_t> indices) const;
    /// M - lambda * I.
    RationalMatrix shifted(const Rational& lambda) const;
    Eigen::MatrixXd to_double() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace nnatoms

#endif  // NNATOMS_RATIONAL_HPP
