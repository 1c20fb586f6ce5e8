#include "nnatoms/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "nnatoms/error.hpp"

namespace nnatoms {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

std::size_t parse_index(const std::string& token, const char* what) {
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw InputError(std::string("Matrix Market: malformed ") + what + " '" + token + "'");
    }
    return value;
}

double parse_double(const std::string& token) {
    double value = 0.0;
    const auto* begin = token.data();
    if (!token.empty() && token.front() == '+') ++begin;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) throw InputError("Matrix Market: malformed value '" + token + "'");
    return value;
}

// Entry store that keeps both representations until the backend is applied.
struct Entries {
    Backend backend;
    std::size_t n;
    Eigen::MatrixXd values;
    RationalMatrix exact;

    Entries(Backend b, std::size_t size)
        : backend(b), n(size), values(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(size),
                                                            static_cast<Eigen::Index>(size))) {
        if (b == Backend::Exact) exact = RationalMatrix(size, size);
    }

    void set(std::size_t i, std::size_t j, const std::string& token) {
        if (backend == Backend::Exact) {
            exact(i, j) = parse_rational(token);
        } else {
            values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_double(token);
        }
    }

    NonnegativeMatrix finish() {
        if (backend == Backend::Exact) return NonnegativeMatrix::from_exact(std::move(exact));
        return NonnegativeMatrix::from_float(std::move(values));
    }
};

std::string format_value(const NonnegativeMatrix& m, std::size_t i, std::size_t j) {
    if (m.is_exact()) return format_rational(m.exact()(i, j));
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
    return buf;
}

bool is_zero(const NonnegativeMatrix& m, std::size_t i, std::size_t j) {
    return m.is_exact() ? m.exact()(i, j) == 0 : m(i, j) == 0.0;
}

}  // namespace

NonnegativeMatrix load_matrix_market(std::string_view text, Backend backend) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw InputError("Matrix Market: empty input");
    const auto header = tokens(line);
    if (header.size() != 5 || lower(header[0]) != "%%matrixmarket" || lower(header[1]) != "matrix") {
        throw InputError("Matrix Market: missing or malformed %%MatrixMarket header");
    }
    const std::string format = lower(header[2]);
    const std::string field = lower(header[3]);
    const std::string symmetry = lower(header[4]);
    if (format != "coordinate" && format != "array") {
        throw InputError("Matrix Market: unsupported format '" + header[2] + "'");
    }
    const bool pattern = field == "pattern";
    if (field != "real" && field != "integer" && !(pattern && format == "coordinate")) {
        throw InputError("Matrix Market: unsupported field '" + header[3] + "'");
    }
    if (symmetry != "general") throw InputError("Matrix Market: unsupported symmetry '" + header[4] + "'");

    std::vector<std::string> size_line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '%') continue;
        if (blank(line)) continue;
        size_line = tokens(line);
        break;
    }
    const std::size_t expected = format == "coordinate" ? 3 : 2;
    if (size_line.size() != expected) throw InputError("Matrix Market: malformed size line");
    const std::size_t rows = parse_index(size_line[0], "row count");
    const std::size_t cols = parse_index(size_line[1], "column count");
    if (rows != cols) {
        throw InputError("Matrix Market: matrix is not square (" + std::to_string(rows) + "x" +
                         std::to_string(cols) + ")");
    }
    if (rows == 0) throw InputError("Matrix Market: matrix dimension must be at least 1");

    Entries entries(backend, rows);
    std::vector<std::string> data;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '%') continue;
        for (auto& t : tokens(line)) data.push_back(std::move(t));
    }

    if (format == "array") {
        if (data.size() != rows * cols) {
            throw InputError("Matrix Market: expected " + std::to_string(rows * cols) + " array values, found " +
                             std::to_string(data.size()));
        }
        std::size_t k = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            for (std::size_t i = 0; i < rows; ++i) entries.set(i, j, data[k++]);
        }
        return entries.finish();
    }

    const std::size_t nnz = parse_index(size_line[2], "entry count");
    const std::size_t per_entry = pattern ? 2 : 3;
    if (data.size() != nnz * per_entry) {
        throw InputError("Matrix Market: expected " + std::to_string(nnz) + " entries of " +
                         std::to_string(per_entry) + " fields");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < nnz; ++e) {
        const std::size_t i = parse_index(data[e * per_entry], "row index");
        const std::size_t j = parse_index(data[e * per_entry + 1], "column index");
        if (i < 1 || i > rows || j < 1 || j > cols) {
            throw InputError("Matrix Market: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") outside the matrix");
        }
        if (!seen.emplace(i, j).second) {
            throw InputError("Matrix Market: duplicate entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
        entries.set(i - 1, j - 1, pattern ? std::string("1") : data[e * per_entry + 2]);
    }
    return entries.finish();
}

std::string write_matrix_market(const NonnegativeMatrix& matrix, MatrixMarketLayout layout) {
    const std::size_t n = matrix.size();
    std::ostringstream out;
    if (layout == MatrixMarketLayout::Array) {
        out << "%%MatrixMarket matrix array real general\n";
        out << n << ' ' << n << '\n';
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) out << format_value(matrix, i, j) << '\n';
        }
        return out.str();
    }
    std::size_t nnz = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) nnz += is_zero(matrix, i, j) ? 0 : 1;
    }
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << n << ' ' << n << ' ' << nnz << '\n';
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!is_zero(matrix, i, j)) out << i + 1 << ' ' << j + 1 << ' ' << format_value(matrix, i, j) << '\n';
        }
    }
    return out.str();
}

}  // namespace nnatoms
