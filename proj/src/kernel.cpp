#include "nnatoms/kernel.hpp"

#include <cmath>

#include <json.hpp>

#include "nnatoms/error.hpp"

namespace nnatoms {

KernelSpec volterra_kernel(std::size_t grid) {
    return {"volterra", [](double x, double y) { return x >= y ? 1.0 : 0.0; }, grid};
}

KernelSpec k1_kernel(std::size_t grid) {
    return {"k1",
            [](double x, double y) {
                double v = 0.0;
                if (x <= 0.5 && 0.5 <= y && y <= x + 0.5) v += 1.0;
                if (x >= 0.5 && y <= x - 0.5) v += 1.0;
                return v;
            },
            grid};
}

KernelSpec k3_kernel(std::size_t grid) {
    return {"k3",
            [](double x, double y) {
                double v = 0.0;
                if (x <= 0.5 && 0.5 <= y) v += 1.0;
                if (y <= 0.5 && 0.5 <= x) v += 1.0;
                return v;
            },
            grid};
}

KernelSpec kernel_by_name(std::string_view name, std::size_t grid) {
    if (name == "volterra") return volterra_kernel(grid);
    if (name == "k1") return k1_kernel(grid);
    if (name == "k3") return k3_kernel(grid);
    throw InputError("unknown kernel '" + std::string(name) + "' (expected volterra, k1 or k3)");
}

KernelSpec parse_kernel_spec(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("kernel spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("kernel") || !doc.contains("grid")) {
        throw InputError("kernel spec must be an object with \"kernel\" and \"grid\"");
    }
    if (!doc["kernel"].is_string()) throw InputError("kernel spec: \"kernel\" must be a string");
    if (!doc["grid"].is_number_integer() || doc["grid"].get<long long>() < 1) {
        throw InputError("kernel spec: \"grid\" must be a positive integer");
    }
    return kernel_by_name(doc["kernel"].get<std::string>(), doc["grid"].get<std::size_t>());
}

NonnegativeMatrix discretize_kernel(const KernelSpec& spec, Backend backend) {
    if (spec.grid == 0) throw InputError("grid size must be at least 1");
    if (!spec.kernel) throw InputError("kernel '" + spec.name + "' has no evaluator");
    const std::size_t m = spec.grid;
    Eigen::MatrixXd sampled(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) {
        const double x = (static_cast<double>(i) + 0.5) / static_cast<double>(m);
        for (std::size_t j = 0; j < m; ++j) {
            const double y = (static_cast<double>(j) + 0.5) / static_cast<double>(m);
            const double k = spec.kernel(x, y);
            if (!std::isfinite(k) || k < 0.0) {
                throw InputError("kernel '" + spec.name + "' returned " + std::to_string(k) + " at (" +
                                 std::to_string(x) + ", " + std::to_string(y) + ")");
            }
            sampled(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = k;
        }
    }
    if (backend == Backend::Exact) {
        RationalMatrix exact = RationalMatrix::from_double(sampled);
        const Rational weight(1, static_cast<unsigned long>(m));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) exact(i, j) *= weight;
        }
        return NonnegativeMatrix::from_exact(std::move(exact));
    }
    return NonnegativeMatrix::from_float(sampled / static_cast<double>(m));
}

}  // namespace nnatoms
