#pragma once

#include "rescoh/restricted.hpp"
#include "rescoh/cochain.hpp"

namespace rescoh {

enum class FamilyKind { HeisenbergEven, HeisenbergOdd };

// h^lambda_{m,n}: basis {x_1..x_{2m+1} | y_1..y_n}, brackets
// [x_i, x_{m+i}] = [y_j, y_j] = x_{2m+1}, and x_i^[p] = lambda_i x_{2m+1}.
struct HeisenbergEvenParams {
  std::size_t m = 1, n = 1;
  std::uint32_t p = 3;
  Vec lambda;  // 2m+1 residues
};

// ba^0_n: basis {x_1..x_n | y_1..y_{n+1}}, brackets [x_i, y_i] = y_{n+1},
// zero p-operator (the only one compatible with the odd centre).
struct HeisenbergOddParams {
  std::size_t n = 1;
  std::uint32_t p = 3;
};

struct FamilyAlgebra {
  FamilyKind kind;
  std::size_t m = 0, n = 0;  // m is meaningful only for the even-centre family
  POperator op;
};

FamilyAlgebra heisenberg_even(const HeisenbergEvenParams& params);
FamilyAlgebra heisenberg_odd(const HeisenbergOddParams& params);

// Closed-form super-dimensions for the two families.
SdimPair expected_sdim_h1_even_family(std::size_t m, std::size_t n);
SdimPair expected_sdim_h2_even_family(std::size_t m, std::size_t n);
SdimPair expected_sdim_h2res_even_family(std::size_t m, std::size_t n);
SdimPair expected_sdim_h1_odd_family(std::size_t n);
SdimPair expected_sdim_h2_odd_family(std::size_t n);
SdimPair expected_sdim_h2res_odd_family(std::size_t n);

// Deterministic lambda generator: successive mt19937_64(seed) draws mod p.
Vec lambda_from_seed(std::size_t m, std::uint32_t p, std::uint64_t seed);

}  // namespace rescoh
