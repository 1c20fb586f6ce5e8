#include "nnatoms/examples.hpp"

#include <charconv>

#include "nnatoms/error.hpp"
#include "nnatoms/kernel.hpp"

namespace nnatoms {

namespace {

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

std::size_t grid_suffix(std::string_view name, std::string_view prefix) {
    const std::string_view digits = name.substr(prefix.size());
    std::size_t m = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || m == 0) {
        throw InputError("example '" + std::string(name) + "': expected a positive grid size after '" +
                         std::string(prefix) + "'");
    }
    return m;
}

}  // namespace

NonnegativeMatrix builtin_example(std::string_view name) {
    constexpr auto E = Backend::Exact;
    if (name == "fig-m-graph-6") {
        return NonnegativeMatrix::from_rows({{0, 1, 0, 0, 0, 0},
                                             {1, 0, 1, 0, 0, 0},
                                             {0, 1, 0, 0, 0, 0},
                                             {0, 1, 0, 0, 0, 0},
                                             {0, 1, 0, 0, 0, 0},
                                             {0, 0, 0, 1, 1, 0}},
                                            E);
    }
    if (name == "two-cycle") return NonnegativeMatrix::from_rows({{0, 1}, {1, 0}}, E);
    if (name == "graph-supp") return NonnegativeMatrix::from_rows({{1, 0}, {1, 1}}, E);
    if (name == "fig-dist") {
        // 0 (rho 1) -> 1 (rho 3); 1 -> 2 (rho 2) -> 3 (rho 1); 1 -> 4 (rho 1) -> 5 (rho 1).
        return NonnegativeMatrix::from_rows({{1, 0, 0, 0, 0, 0},
                                             {1, 3, 0, 0, 0, 0},
                                             {0, 1, 2, 0, 0, 0},
                                             {0, 0, 1, 1, 0, 0},
                                             {0, 1, 0, 0, 1, 0},
                                             {0, 0, 0, 0, 1, 1}},
                                            E);
    }
    if (starts_with(name, "volterra-")) return discretize_kernel(volterra_kernel(grid_suffix(name, "volterra-")), E);
    if (starts_with(name, "kernel-k1-")) return discretize_kernel(k1_kernel(grid_suffix(name, "kernel-k1-")), E);
    if (starts_with(name, "kernel-k3-")) return discretize_kernel(k3_kernel(grid_suffix(name, "kernel-k3-")), E);
    throw InputError("unknown example '" + std::string(name) + "'");
}

std::vector<std::string> builtin_example_names() {
    return {"fig-m-graph-6", "two-cycle", "graph-supp", "fig-dist", "volterra-<m>", "kernel-k1-<m>", "kernel-k3-<m>"};
}

}  // namespace nnatoms
