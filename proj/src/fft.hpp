#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "frwt/grid.hpp"

namespace frwt::detail {

// Y_m = sum_k x_k e^{-2 pi i m k / M} of real data (zero-padded to M), m = 0..M/2.
std::vector<Complex> real_dft(const std::vector<double>& x, std::size_t M);

// Full linear convolution c_n = sum_k a_k b_{n-k}, length |a| + |b| - 1.
std::vector<Complex> linear_convolution(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace frwt::detail
