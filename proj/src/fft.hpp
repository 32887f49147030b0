#pragma once

#include <spinlangevin/types.hpp>

#include <vector>

namespace spinlangevin::detail {

// Unnormalized complex DFT: out_k = sum_j in_j exp(sign * 2 pi i j k / n).
std::vector<cplx> dft(const std::vector<cplx>& in, int sign);

// Real output of length n from the n/2+1 non-negative frequency coefficients,
// out_j = sum_{k=0}^{n-1} c_k exp(2 pi i j k / n) with c_{n-k} = conj(c_k).
std::vector<double> hermitian_to_real(const std::vector<cplx>& half, std::size_t n);

}  // namespace spinlangevin::detail
