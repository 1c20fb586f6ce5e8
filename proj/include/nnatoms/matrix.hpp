#ifndef NNATOMS_MATRIX_HPP
#define NNATOMS_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>

#include <Eigen/Dense>

#include "nnatoms/index_set.hpp"
#include "nnatoms/rational.hpp"

namespace nnatoms {

enum class Backend { Float, Exact };

/// Dense square matrix with entrywise nonnegative values.
///
/// Entry (i, j) is the weight of the edge j -> i: mass carried from state j
/// to state i. Both backends keep a double view for the spectral routines;
/// the exact backend additionally owns the rational entries, which are the
/// ground truth for supports and for exact rank computations.
///
/// Immutable after construction.
class NonnegativeMatrix {
public:
    /// Throws InputError on non-square input, a negative or non-finite entry,
    /// or an empty matrix.
    static NonnegativeMatrix from_float(Eigen::MatrixXd values);
    static NonnegativeMatrix from_exact(RationalMatrix values);
    /// Convenience for literals; values are converted exactly on the exact backend.
    static NonnegativeMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows,
                                       Backend backend = Backend::Float);
    static NonnegativeMatrix zero(std::size_t n, Backend backend = Backend::Float);

    std::size_t size() const noexcept { return static_cast<std::size_t>(values_.rows()); }
    Backend backend() const noexcept { return exact_ ? Backend::Exact : Backend::Float; }
    bool is_exact() const noexcept { return exact_.has_value(); }

    double operator()(std::size_t i, std::size_t j) const {
        return values_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    const Eigen::MatrixXd& values() const noexcept { return values_; }
    /// Throws std::logic_error on the float backend.
    const RationalMatrix& exact() const;

    double max_entry() const noexcept { return max_entry_; }
    /// Max row sum.
    double norm_inf() const noexcept;

    NonnegativeMatrix to_float() const;
    /// Every double is a dyadic rational, so this conversion is exact.
    NonnegativeMatrix to_exact() const;

    NonnegativeMatrix transposed() const;
    /// T_A = M_A T M_A: rows and columns outside `keep` set to zero.
    NonnegativeMatrix restricted(const IndexSet& keep) const;
    /// Numeric power; exact on the exact backend.
    NonnegativeMatrix power(unsigned exponent) const;
    /// Principal submatrix on the members of `block` (in increasing order).
    Eigen::MatrixXd block(const IndexSet& block) const;

    friend bool operator==(const NonnegativeMatrix& a, const NonnegativeMatrix& b);

private:
    NonnegativeMatrix(Eigen::MatrixXd values, std::optional<RationalMatrix> exact);

    Eigen::MatrixXd values_;
    std::optional<RationalMatrix> exact_;
    double max_entry_ = 0.0;
};

}  // namespace nnatoms

#endif  // NNATOMS_MATRIX_HPP
