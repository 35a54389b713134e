#include "core/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>

#include "core/basis_change.hpp"
#include "core/errors.hpp"
#include "core/gellmann.hpp"
#include "core/pauli.hpp"
#include "core/su_group.hpp"

namespace supauli {

namespace {

std::string magnitude(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

Matrix random_hermitian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix a(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) a(r, c) = Complex(normal(rng), normal(rng));
  return (a + a.adjoint().eval()) / 2.0;
}

SuParameters random_params(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  SuParameters p = SuParameters::zero(n);
  for (auto& x : p.psi) x = uniform(rng);
  for (auto& x : p.a) x = uniform(rng);
  for (auto& x : p.b) x = uniform(rng);
  return p;
}

class Reporter {
 public:
  void check(bool ok, const std::string& line) {
    out_ << (ok ? "ok   " : "FAIL ") << line << "\n";
    pass_ &= ok;
  }

  VerifyResult finish() {
    out_ << (pass_ ? "all checks passed" : "CHECKS FAILED") << "\n";
    return {pass_, out_.str()};
  }

 private:
  std::ostringstream out_;
  bool pass_ = true;
};

void suite_orthogonality(const VerifyOptions& o, Reporter& rep) {
  const int m = o.m;
  const double dim = static_cast<double>(1 << m);
  double max_dev = 0;
  if (m <= 3) {
    const auto strings = enumerate_strings(m);
    for (std::size_t i = 0; i < strings.size(); ++i) {
      const Matrix a = materialize(strings[i]);
      for (std::size_t j = 0; j < strings.size(); ++j) {
        const Complex inner = hs_inner(a, materialize(strings[j]));
        const Complex expected = (i == j) ? Complex(dim, 0) : Complex(0, 0);
        max_dev = std::max(max_dev, std::abs(inner - expected));
      }
    }
    rep.check(max_dev <= o.tolerance,
              "pauli orthogonality (m=" + std::to_string(m) + ", exhaustive): "
              "max deviation " + magnitude(max_dev));
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::uint64_t> pick(
        0, (std::uint64_t{1} << (2 * m)) - 1);
    const auto string_at = [m](std::uint64_t key) {
      std::uint64_t flip = 0, z = 0;
      for (int q = 0; q < m; ++q) {
        const auto digit = (key >> (2 * q)) & 3;
        if (digit == 1 || digit == 2) flip |= std::uint64_t{1} << q;
        if (digit == 2 || digit == 3) z |= std::uint64_t{1} << q;
      }
      return PauliString::from_masks(m, flip, z);
    };
    for (int trial = 0; trial < o.trials; ++trial) {
      const auto p = string_at(pick(rng));
      const auto q = string_at(pick(rng));
      const Complex inner = hs_inner(materialize(p), materialize(q));
      const Complex expected = (p == q) ? Complex(dim, 0) : Complex(0, 0);
      max_dev = std::max(max_dev, std::abs(inner - expected));
    }
    rep.check(max_dev <= o.tolerance,
              "pauli orthogonality (m=" + std::to_string(m) + ", " +
                  std::to_string(o.trials) + " sampled pairs): max deviation " +
                  magnitude(max_dev));
  }

  // Off-diagonal generators are mutually orthogonal with norm^2 = 2.
  const int n = 1 << m;
  double gen_dev = 0;
  std::vector<Matrix> offdiag;
  for (int flat = n; flat <= n * n - 1; ++flat)
    offdiag.push_back(generator(n, flat));
  for (std::size_t i = 0; i < offdiag.size(); ++i)
    for (std::size_t j = i; j < offdiag.size(); ++j) {
      const Complex inner = hs_inner(offdiag[i], offdiag[j]);
      const Complex expected = (i == j) ? Complex(2, 0) : Complex(0, 0);
      gen_dev = std::max(gen_dev, std::abs(inner - expected));
    }
  rep.check(gen_dev <= o.tolerance,
            "off-diagonal generator orthogonality (n=" + std::to_string(n) +
                "): max deviation " + magnitude(gen_dev));

  double diag_dev = 0;
  const auto basis = orthogonal_diagonal_basis(n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      diag_dev = std::max(diag_dev, std::abs(hs_inner(basis[i], basis[j])));
  rep.check(diag_dev <= o.tolerance,
            "orthogonal diagonal basis Gram matrix is diagonal: max "
            "off-diagonal " + magnitude(diag_dev));
}

void suite_roundtrip(const VerifyOptions& o, Reporter& rep) {
  std::mt19937_64 rng(o.seed);
  const int dim = 1 << o.m;
  double max_err = 0;
  for (int trial = 0; trial < o.trials; ++trial) {
    const Matrix m = random_hermitian(dim, rng);
    const Matrix back = compose(decompose(m));
    max_err = std::max(max_err, (back - m).cwiseAbs().maxCoeff());
  }
  rep.check(max_err <= o.tolerance,
            "compose(decompose(M)) = M over " + std::to_string(o.trials) +
                " random Hermitian matrices: max error " +
                magnitude(max_err));

  bool params_exact = true;
  for (int trial = 0; trial < o.trials; ++trial) {
    const SuParameters p = random_params(dim, rng);
    if (!(extract_params(build_element(p)) == p)) params_exact = false;
  }
  rep.check(params_exact,
            "extract_params(build_element(p)) = p exactly over " +
                std::to_string(o.trials) + " random parameter vectors");
}

void suite_rank(const VerifyOptions& o, Reporter& rep) {
  const int m = o.m;
  const int n = 1 << m;
  const int count = n * n - 1;
  const auto strings = enumerate_strings(m);
  Eigen::MatrixXd coeffs = Eigen::MatrixXd::Zero(count, count);
  for (int flat = 1; flat <= count; ++flat) {
    const auto d = generator_in_pauli(index_to_position(n, flat));
    for (const auto& [p, c] : d.terms()) {
      if (p.is_identity()) continue;
      const auto col = static_cast<Eigen::Index>(p.canonical_key()) - 1;
      coeffs(flat - 1, col) = c.real();
    }
  }
  const auto rank = Eigen::FullPivLU<Eigen::MatrixXd>(coeffs).rank();
  rep.check(rank == count, "generator-to-string coefficient matrix has rank " +
                               std::to_string(rank) + " of " +
                               std::to_string(count));
}

void suite_identity_free(const VerifyOptions& o, Reporter& rep) {
  const int n = 1 << o.m;
  const PauliString identity =
      PauliString::from_masks(o.m, 0, 0);
  double max_coeff = 0;
  for (int flat = 1; flat <= n * n - 1; ++flat) {
    const auto d = generator_in_pauli(index_to_position(n, flat));
    max_coeff = std::max(max_coeff, std::abs(d.coefficient(identity)));
  }
  rep.check(max_coeff <= 1e-15,
            "all-identity coefficient vanishes for every generator (max " +
                magnitude(max_coeff) + ")");
}

void suite_unitarity(const VerifyOptions& o, Reporter& rep) {
  std::mt19937_64 rng(o.seed);
  const int n = 1 << o.m;
  const double tol = std::max(o.tolerance, 1e-10);
  double max_unitary = 0, max_det = 0;
  for (int trial = 0; trial < o.trials; ++trial) {
    const Matrix u = exponentiate(random_params(n, rng),
                                  ExpConvention::PhysicsUnitary);
    max_unitary = std::max(
        max_unitary,
        (u.adjoint() * u - Matrix::Identity(n, n)).cwiseAbs().maxCoeff());
    max_det = std::max(max_det, std::abs(u.determinant() - Complex(1, 0)));
  }
  rep.check(max_unitary <= tol, "U^dagger U = I over " +
                                    std::to_string(o.trials) +
                                    " exponentials: max deviation " +
                                    magnitude(max_unitary));
  rep.check(max_det <= tol,
            "det U = 1: max deviation " + magnitude(max_det));
}

}  // namespace

VerifyResult run_suite(const std::string& suite, const VerifyOptions& o) {
  if (o.m < 1) fail(ErrorCode::InvalidArgument, "qubit count must be >= 1");
  if (o.trials < 1) fail(ErrorCode::InvalidArgument, "trials must be >= 1");
  Reporter rep;
  bool known = false;
  if (suite == "orthogonality" || suite == "all") {
    suite_orthogonality(o, rep);
    known = true;
  }
  if (suite == "roundtrip" || suite == "all") {
    suite_roundtrip(o, rep);
    known = true;
  }
  if (suite == "rank" || suite == "all") {
    suite_rank(o, rep);
    known = true;
  }
  if (suite == "identity-free" || suite == "all") {
    suite_identity_free(o, rep);
    known = true;
  }
  if (suite == "unitarity" || suite == "all") {
    suite_unitarity(o, rep);
    known = true;
  }
  if (!known)
    fail(ErrorCode::InvalidArgument,
         "unknown suite '" + suite +
             "' (expected orthogonality, roundtrip, rank, identity-free, "
             "unitarity or all)");
  return rep.finish();
}

}  // namespace supauli
