#include "nnatoms/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "nnatoms/error.hpp"

namespace nnatoms {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const std::string original(text);
    if (text.empty()) throw InputError("empty numeric literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        bool negative = false;
        if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
            negative = num.front() == '-';
            num.remove_prefix(1);
        }
        if (!all_digits(num) || !all_digits(den)) throw InputError("malformed rational literal '" + original + "'");
        mpz_class d(std::string(den), 10);
        if (d == 0) throw InputError("zero denominator in '" + original + "'");
        Rational r(mpz_class(std::string(num), 10), d);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }

    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6) {
            throw InputError("malformed exponent in '" + original + "'");
        }
        exponent = std::stol(std::string(exp_part));
        if (exp_negative) exponent = -exponent;
        text = text.substr(0, e);
    }
    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part))) {
            throw InputError("malformed decimal literal '" + original + "'");
        }
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(text)) throw InputError("malformed numeric literal '" + original + "'");
        digits = std::string(text);
    }
    mpz_class mantissa(digits, 10);
    Rational r;
    if (exponent >= 0) {
        r = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
    } else {
        r = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
        r.canonicalize();
    }
    return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) {
    mpz_class den = value.get_den();
    unsigned long twos = 0;
    unsigned long fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return value.get_str();
    const unsigned long places = std::max(twos, fives);
    if (places == 0) return value.get_num().get_str();
    mpz_class scaled = value.get_num() * pow10(places) / value.get_den();
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string s = scaled.get_str();
    if (s.size() <= places) s.insert(0, places - s.size() + 1, '0');
    s.insert(s.size() - places, ".");
    return negative ? "-" + s : s;
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw InputError("non-finite value cannot be made exact");
    return Rational(value);
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("RationalMatrix: ragged initializer");
        for (const auto& v : row) data_.push_back(v);
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_double(const Eigen::MatrixXd& m) {
    RationalMatrix r(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = rational_from_double(m(i, j));
        }
    }
    return r;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

RationalMatrix RationalMatrix::principal(std::span<const std::size_t> indices) const {
    RationalMatrix p(indices.size(), indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = 0; b < indices.size(); ++b) p(a, b) = (*this)(indices[a], indices[b]);
    }
    return p;
}

RationalMatrix RationalMatrix::shifted(const Rational& lambda) const {
    if (!is_square()) throw std::invalid_argument("RationalMatrix::shifted: matrix is not square");
    RationalMatrix s = *this;
    for (std::size_t i = 0; i < rows_; ++i) s(i, i) -= lambda;
    return s;
}

Eigen::MatrixXd RationalMatrix::to_double() const {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j).get_d();
        }
    }
    return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix: dimension mismatch in product");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b(k, j) != 0) c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace nnatoms
