#pragma once

#include <vector>

#include "core/pauli.hpp"

namespace supauli {

// Real parameter vector of an su(n) element: n-1 diagonal entries psi (the
// n-th is implied by tracelessness), and n(n-1)/2 each of real (a) and
// imaginary (b) off-diagonal parts, in row-major upper-triangle order.
struct SuParameters {
  int n = 0;
  std::vector<double> psi;
  std::vector<double> a;
  std::vector<double> b;

  static SuParameters zero(int n);
  void validate() const;

  friend bool operator==(const SuParameters&, const SuParameters&) = default;
};

// n^2 - 1.
int free_parameter_count(int n);

// Hermitian traceless matrix with diagonal (psi_1,...,psi_{n-1},-sum psi) and
// entry (j,k) = a_t - i b_t above the diagonal (conjugate below), t the
// row-major pair index.
Matrix build_element(const SuParameters& p);

inline constexpr double kDefaultHermitianTolerance = 1e-10;

// Inverse of build_element. The input must be Hermitian and traceless within
// the tolerance; violations raise a contract error naming the failed
// condition.
SuParameters extract_params(const Matrix& m,
                            double tolerance = kDefaultHermitianTolerance);

enum class ExpConvention {
  PaperLiteral,    // exp(H): Hermitian positive-definite, not unitary
  PhysicsUnitary,  // exp(iH): unitary with determinant 1
};

Matrix exponentiate(const SuParameters& p, ExpConvention convention);

// Per-condition report for membership of the Hermitian traceless form:
// (i) real diagonal, (ii) traceless, (iii) upper triangle conjugate to the
// lower triangle.
struct SuConditionReport {
  double diagonal_imag_max = 0;  // (i)
  double trace_abs = 0;          // (ii)
  double conjugate_max = 0;      // (iii)
  double tolerance = kDefaultHermitianTolerance;

  bool diagonal_real_ok() const { return diagonal_imag_max <= tolerance; }
  bool traceless_ok() const { return trace_abs <= tolerance; }
  bool conjugate_ok() const { return conjugate_max <= tolerance; }
  bool all_ok() const {
    return diagonal_real_ok() && traceless_ok() && conjugate_ok();
  }
};

SuConditionReport check_su_conditions(
    const Matrix& m, double tolerance = kDefaultHermitianTolerance);

}  // namespace supauli
