#pragma once

#include <string_view>
#include <vector>

#include "core/pauli.hpp"

namespace supauli {

enum class GeneratorFamily { Diagonal, SymmetricReal, AntisymmetricImaginary };

// Flat index 1..n^2-1 into the generator basis of su(n), decoded into its
// family and matrix position. The flat ranges are
//   [1, n-1]                      diagonal, position i,
//   [n, n-1 + n(n-1)/2]           symmetric real, pair (j,k),
//   [n + n(n-1)/2, n^2-1]         antisymmetric imaginary, pair (j,k),
// with pairs ordered row-major over the strict upper triangle:
// (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n).
struct GeneratorIndex {
  int n = 0;
  int flat = 0;
  GeneratorFamily family = GeneratorFamily::Diagonal;
  int i = 0;         // diagonal position, 1..n-1 (0 for off-diagonal)
  int j = 0, k = 0;  // off-diagonal pair, 1 <= j < k <= n (0 for diagonal)
};

// Row-major index of an upper-triangle pair, 1..n(n-1)/2.
int pair_to_index(int n, int j, int k);

GeneratorIndex index_to_position(int n, int flat);
GeneratorIndex diagonal_index(int n, int i);
GeneratorIndex offdiagonal_index(int n, GeneratorFamily family, int j, int k);

// "X8", "8", "diag:3", "sym:1,2", "asym:1,2".
GeneratorIndex parse_generator_spec(int n, std::string_view spec);

// Diagonal i            -> E_ii - E_nn
// SymmetricReal (j,k)   -> E_jk + E_kj
// Antisymmetric (j,k)   -> -i E_jk + i E_kj
Matrix generator(const GeneratorIndex& idx);
Matrix generator(int n, int flat);

// All n^2-1 generators in flat order.
std::vector<Matrix> all_generators(int n);

// n-1 pairwise Hilbert-Schmidt-orthogonal traceless diagonal matrices; the
// l-th is diag(1,...,1,-l,0,...,0) with l ones. Each is an integer linear
// combination of the diagonal generators.
std::vector<Matrix> orthogonal_diagonal_basis(int n);

// X / sqrt(<X, X>).
Matrix normalized(const Matrix& x);

// Max-norm of (exp(h X) - I)/h - X; O(h) for any square X.
double derivative_check(const Matrix& x, double h);

}  // namespace supauli
