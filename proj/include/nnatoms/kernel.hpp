#ifndef NNATOMS_KERNEL_HPP
#define NNATOMS_KERNEL_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "nnatoms/matrix.hpp"

namespace nnatoms {

/// A nonnegative kernel k on [0,1]^2 together with the grid it is sampled on.
struct KernelSpec {
    std::string name;
    std::function<double(double x, double y)> kernel;
    std::size_t grid = 1;
};

/// k(x,y) = 1{x >= y}.
KernelSpec volterra_kernel(std::size_t grid);
/// k(x,y) = 1{x <= 1/2 <= y <= x + 1/2} + 1{x >= 1/2} 1{y <= x - 1/2}.
KernelSpec k1_kernel(std::size_t grid);
/// k(x,y) = 1{x <= 1/2 <= y} + 1{y <= 1/2 <= x}.
KernelSpec k3_kernel(std::size_t grid);

/// "volterra", "k1" or "k3".
KernelSpec kernel_by_name(std::string_view name, std::size_t grid);

/// Reads {"kernel": "volterra"|"k1"|"k3", "grid": m}.
KernelSpec parse_kernel_spec(std::string_view json_text);

/// Midpoint rule: T[i][j] = k(x_i, x_j) / m with x_i = (i + 1/2) / m.
///
/// The support of the result is exactly the sampled support of k. On the
/// exact backend each kernel value is taken as the exact rational of the
/// returned double, so indicator kernels give entries 0 and 1/m exactly.
/// Throws InputError for grid == 0 or a negative/non-finite kernel value.
NonnegativeMatrix discretize_kernel(const KernelSpec& spec, Backend backend = Backend::Float);

}  // namespace nnatoms

#endif  // NNATOMS_KERNEL_HPP
