#pragma once

#include <cstdint>
#include <vector>

namespace fockop {

using IntegerBasis = std::vector<std::vector<std::int64_t>>;

/// LLL reduction of the rows of `basis`, in place. Gram-Schmidt data is kept
/// in long double; integer updates are overflow-checked.
void lll_reduce(IntegerBasis& basis, double delta = 0.99);

}  // namespace fockop
