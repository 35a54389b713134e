#include "core/su_group.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "core/errors.hpp"

namespace supauli {

SuParameters SuParameters::zero(int n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "dimension must be >= 2");
  SuParameters p;
  p.n = n;
  p.psi.assign(n - 1, 0.0);
  p.a.assign(n * (n - 1) / 2, 0.0);
  p.b.assign(n * (n - 1) / 2, 0.0);
  return p;
}

void SuParameters::validate() const {
  if (n < 2) fail(ErrorCode::InvalidArgument, "dimension must be >= 2");
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (psi.size() != static_cast<std::size_t>(n - 1) || a.size() != pairs ||
      b.size() != pairs)
    fail(ErrorCode::InvalidArgument,
         "parameter vector lengths do not match n = " + std::to_string(n) +
             " (need " + std::to_string(n - 1) + " psi and " +
             std::to_string(pairs) + " each of a, b)");
}

int free_parameter_count(int n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "dimension must be >= 2");
  return n * n - 1;
}

Matrix build_element(const SuParameters& p) {
  p.validate();
  const int n = p.n;
  Matrix m = Matrix::Zero(n, n);
  double psi_sum = 0;
  for (int i = 0; i < n - 1; ++i) {
    m(i, i) = p.psi[i];
    psi_sum += p.psi[i];
  }
  m(n - 1, n - 1) = -psi_sum;
  int t = 0;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k, ++t) {
      m(j, k) = Complex(p.a[t], -p.b[t]);
      m(k, j) = Complex(p.a[t], p.b[t]);
    }
  }
  return m;
}

SuParameters extract_params(const Matrix& m, double tolerance) {
  const auto report = check_su_conditions(m, tolerance);
  if (!report.diagonal_real_ok())
    fail(ErrorCode::ContractViolation,
         "condition (i) violated: diagonal entries are not real (max "
         "imaginary part " +
             std::to_string(report.diagonal_imag_max) + ")");
  if (!report.traceless_ok())
    fail(ErrorCode::ContractViolation,
         "condition (ii) violated: matrix is not traceless (|trace| = " +
             std::to_string(report.trace_abs) + ")");
  if (!report.conjugate_ok())
    fail(ErrorCode::ContractViolation,
         "condition (iii) violated: upper triangle is not the conjugate of "
         "the lower triangle (max deviation " +
             std::to_string(report.conjugate_max) + ")");

  const int n = static_cast<int>(m.rows());
  SuParameters p = SuParameters::zero(n);
  for (int i = 0; i < n - 1; ++i) p.psi[i] = m(i, i).real();
  int t = 0;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k, ++t) {
      p.a[t] = m(j, k).real();
      p.b[t] = -m(j, k).imag();
    }
  return p;
}

Matrix exponentiate(const SuParameters& p, ExpConvention convention) {
  const Matrix h = build_element(p);
  if (convention == ExpConvention::PaperLiteral) return h.exp();
  return (Complex(0, 1) * h).exp();
}

SuConditionReport check_su_conditions(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols())
    fail(ErrorCode::InvalidArgument, "expected a square matrix");
  SuConditionReport report;
  report.tolerance = tolerance;
  const int n = static_cast<int>(m.rows());
  Complex trace = 0;
  for (int i = 0; i < n; ++i) {
    report.diagonal_imag_max =
        std::max(report.diagonal_imag_max, std::abs(m(i, i).imag()));
    trace += m(i, i);
  }
  report.trace_abs = std::abs(trace);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      report.conjugate_max = std::max(
          report.conjugate_max, std::abs(m(j, k) - std::conj(m(k, j))));
  return report;
}

}  // namespace supauli
