#pragma once

#include <vector>

#include "ridgerate/common.hpp"

namespace ridgerate {

// In-place forward DFT (negative exponent, unnormalized) of a row-major
// dim-dimensional array with n points per axis. Backed by FFTW; plan
// creation is serialized internally so calls may run concurrently.
void dft_forward(int dim, int n, std::vector<Cplx>& data);

}  // namespace ridgerate
