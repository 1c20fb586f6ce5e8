#include "nnatoms/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nnatoms/error.hpp"

namespace nnatoms {

namespace {

std::string where(Eigen::Index i, Eigen::Index j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

NonnegativeMatrix::NonnegativeMatrix(Eigen::MatrixXd values, std::optional<RationalMatrix> exact)
    : values_(std::move(values)), exact_(std::move(exact)) {
    max_entry_ = values_.size() == 0 ? 0.0 : values_.maxCoeff();
}

NonnegativeMatrix NonnegativeMatrix::from_float(Eigen::MatrixXd values) {
    if (values.rows() != values.cols()) {
        throw InputError("matrix is not square (" + std::to_string(values.rows()) + "x" +
                         std::to_string(values.cols()) + ")");
    }
    if (values.rows() == 0) throw InputError("matrix dimension must be at least 1");
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
        for (Eigen::Index j = 0; j < values.cols(); ++j) {
            const double v = values(i, j);
            if (!std::isfinite(v)) throw InputError("non-finite entry at " + where(i, j));
            if (v < 0.0) throw InputError("negative entry " + std::to_string(v) + " at " + where(i, j));
        }
    }
    values = values.cwiseMax(0.0);  // normalizes -0.0
    return NonnegativeMatrix(std::move(values), std::nullopt);
}

NonnegativeMatrix NonnegativeMatrix::from_exact(RationalMatrix values) {
    if (!values.is_square()) {
        throw InputError("matrix is not square (" + std::to_string(values.rows()) + "x" +
                         std::to_string(values.cols()) + ")");
    }
    if (values.rows() == 0) throw InputError("matrix dimension must be at least 1");
    for (std::size_t i = 0; i < values.rows(); ++i) {
        for (std::size_t j = 0; j < values.cols(); ++j) {
            values(i, j).canonicalize();  // equality on mpq assumes canonical form
            if (values(i, j) < 0) {
                throw InputError("negative entry " + values(i, j).get_str() + " at " +
                                 where(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
            }
        }
    }
    Eigen::MatrixXd approx = values.to_double();
    return NonnegativeMatrix(std::move(approx), std::move(values));
}

NonnegativeMatrix NonnegativeMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows,
                                               Backend backend) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd m(n, n);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Eigen::Index>(row.size()) != n) {
            throw InputError("matrix is not square (row " + std::to_string(i) + " has " +
                             std::to_string(row.size()) + " entries)");
        }
        Eigen::Index j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    auto result = from_float(std::move(m));
    return backend == Backend::Exact ? result.to_exact() : result;
}

NonnegativeMatrix NonnegativeMatrix::zero(std::size_t n, Backend backend) {
    const auto k = static_cast<Eigen::Index>(n);
    if (backend == Backend::Exact) return from_exact(RationalMatrix(n, n));
    return from_float(Eigen::MatrixXd::Zero(k, k));
}

const RationalMatrix& NonnegativeMatrix::exact() const {
    if (!exact_) throw std::logic_error("NonnegativeMatrix::exact: float backend has no rational entries");
    return *exact_;
}

double NonnegativeMatrix::norm_inf() const noexcept { return values_.rowwise().sum().maxCoeff(); }

NonnegativeMatrix NonnegativeMatrix::to_float() const { return NonnegativeMatrix(values_, std::nullopt); }

NonnegativeMatrix NonnegativeMatrix::to_exact() const {
    if (exact_) return *this;
    return from_exact(RationalMatrix::from_double(values_));
}

NonnegativeMatrix NonnegativeMatrix::transposed() const {
    if (exact_) return NonnegativeMatrix(values_.transpose(), exact_->transposed());
    return NonnegativeMatrix(values_.transpose(), std::nullopt);
}

NonnegativeMatrix NonnegativeMatrix::restricted(const IndexSet& keep) const {
    if (keep.universe() != size()) throw std::invalid_argument("restricted: universe mismatch");
    Eigen::MatrixXd v = values_;
    std::optional<RationalMatrix> e = exact_;
    for (std::size_t i = 0; i < size(); ++i) {
        if (keep.contains(i)) continue;
        const auto k = static_cast<Eigen::Index>(i);
        v.row(k).setZero();
        v.col(k).setZero();
        if (e) {
            for (std::size_t j = 0; j < size(); ++j) {
                (*e)(i, j) = 0;
                (*e)(j, i) = 0;
            }
        }
    }
    return NonnegativeMatrix(std::move(v), std::move(e));
}

NonnegativeMatrix NonnegativeMatrix::power(unsigned exponent) const {
    const auto n = size();
    if (exact_) {
        RationalMatrix result = RationalMatrix::identity(n);
        for (unsigned k = 0; k < exponent; ++k) result = result * *exact_;
        return from_exact(std::move(result));
    }
    Eigen::MatrixXd result = Eigen::MatrixXd::Identity(values_.rows(), values_.cols());
    for (unsigned k = 0; k < exponent; ++k) result = result * values_;
    return NonnegativeMatrix(std::move(result), std::nullopt);
}

Eigen::MatrixXd NonnegativeMatrix::block(const IndexSet& block) const {
    const auto idx = block.members();
    const auto k = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd b(k, k);
    for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index c = 0; c < k; ++c) {
            b(a, c) = values_(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(a)]),
                              static_cast<Eigen::Index>(idx[static_cast<std::size_t>(c)]));
        }
    }
    return b;
}

bool operator==(const NonnegativeMatrix& a, const NonnegativeMatrix& b) {
    if (a.exact_.has_value() != b.exact_.has_value()) return false;
    if (a.exact_) return *a.exact_ == *b.exact_;
    return a.values_ == b.values_;
}

}  // namespace nnatoms
