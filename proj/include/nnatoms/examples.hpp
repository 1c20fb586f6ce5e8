#ifndef NNATOMS_EXAMPLES_HPP
#define NNATOMS_EXAMPLES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "nnatoms/matrix.hpp"

namespace nnatoms {

/// Built-in fixtures, all on the exact backend.
///
///   fig-m-graph-6   6x6 pattern with positive entries set to 1; states
///                   {0,1,2} communicate, 1 feeds 3 and 4, both feed 5
///   two-cycle       [[0,1],[1,0]]
///   graph-supp      [[1,0],[1,1]]
///   fig-dist        six singleton atoms whose radii and order form the
///                   tree 1 > 3 > {2 > 1, 1 > 1}
///   volterra-<m>, kernel-k1-<m>, kernel-k3-<m>
///                   midpoint discretizations on an m-cell grid
///
/// Throws InputError on an unknown name or a bad grid suffix.
NonnegativeMatrix builtin_example(std::string_view name);

/// Names accepted by builtin_example, with "<m>" standing for the grid size.
std::vector<std::string> builtin_example_names();

}  // namespace nnatoms

#endif  // NNATOMS_EXAMPLES_HPP
