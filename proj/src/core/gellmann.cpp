#include "core/gellmann.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <charconv>
#include <cmath>

#include "core/errors.hpp"

namespace supauli {

namespace {

void check_dimension(int n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "dimension must be >= 2");
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    fail(ErrorCode::Parse, "expected an integer, got '" + std::string(text) + "'");
  return value;
}

}  // namespace

int pair_to_index(int n, int j, int k) {
  check_dimension(n);
  if (j < 1 || k <= j || k > n)
    fail(ErrorCode::InvalidArgument,
         "pair (" + std::to_string(j) + "," + std::to_string(k) +
             ") is not in the strict upper triangle of a " + std::to_string(n) +
             "-dimensional matrix");
  return (j - 1) * (2 * n - j) / 2 + (k - j);
}

GeneratorIndex index_to_position(int n, int flat) {
  check_dimension(n);
  const int diag = n - 1;
  const int pairs = n * (n - 1) / 2;
  if (flat < 1 || flat > n * n - 1)
    fail(ErrorCode::InvalidArgument,
         "generator index " + std::to_string(flat) + " out of range 1.." +
             std::to_string(n * n - 1));
  GeneratorIndex idx;
  idx.n = n;
  idx.flat = flat;
  if (flat <= diag) {
    idx.family = GeneratorFamily::Diagonal;
    idx.i = flat;
    return idx;
  }
  int t = flat - diag;
  idx.family = GeneratorFamily::SymmetricReal;
  if (t > pairs) {
    t -= pairs;
    idx.family = GeneratorFamily::AntisymmetricImaginary;
  }
  int j = 1;
  while (t > n - j) {
    t -= n - j;
    ++j;
  }
  idx.j = j;
  idx.k = j + t;
  return idx;
}

GeneratorIndex diagonal_index(int n, int i) {
  check_dimension(n);
  if (i < 1 || i > n - 1)
    fail(ErrorCode::InvalidArgument,
         "diagonal position " + std::to_string(i) + " out of range 1.." +
             std::to_string(n - 1));
  return GeneratorIndex{n, i, GeneratorFamily::Diagonal, i, 0, 0};
}

GeneratorIndex offdiagonal_index(int n, GeneratorFamily family, int j, int k) {
  if (family == GeneratorFamily::Diagonal)
    fail(ErrorCode::InvalidArgument, "expected an off-diagonal family");
  const int t = pair_to_index(n, j, k);
  const int base =
      (family == GeneratorFamily::SymmetricReal) ? n - 1
                                                 : n - 1 + n * (n - 1) / 2;
  return GeneratorIndex{n, base + t, family, 0, j, k};
}

GeneratorIndex parse_generator_spec(int n, std::string_view spec) {
  check_dimension(n);
  if (spec.empty()) fail(ErrorCode::Parse, "empty generator spec");
  if (spec[0] == 'X' || spec[0] == 'x')
    return index_to_position(n, parse_int(spec.substr(1)));
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    return index_to_position(n, parse_int(spec));
  const auto family = spec.substr(0, colon);
  const auto rest = spec.substr(colon + 1);
  if (family == "diag") return diagonal_index(n, parse_int(rest));
  const auto comma = rest.find(',');
  if (comma == std::string_view::npos)
    fail(ErrorCode::Parse, "expected 'j,k' after '" + std::string(family) + ":'");
  const int j = parse_int(rest.substr(0, comma));
  const int k = parse_int(rest.substr(comma + 1));
  if (family == "sym")
    return offdiagonal_index(n, GeneratorFamily::SymmetricReal, j, k);
  if (family == "asym")
    return offdiagonal_index(n, GeneratorFamily::AntisymmetricImaginary, j, k);
  fail(ErrorCode::Parse,
       "unknown generator family '" + std::string(family) +
           "' (expected diag, sym or asym)");
}

Matrix generator(const GeneratorIndex& idx) {
  check_dimension(idx.n);
  Matrix out = Matrix::Zero(idx.n, idx.n);
  switch (idx.family) {
    case GeneratorFamily::Diagonal:
      if (idx.i < 1 || idx.i > idx.n - 1)
        fail(ErrorCode::InvalidArgument, "diagonal position out of range");
      out(idx.i - 1, idx.i - 1) = 1.0;
      out(idx.n - 1, idx.n - 1) = -1.0;
      break;
    case GeneratorFamily::SymmetricReal:
      pair_to_index(idx.n, idx.j, idx.k);  // validates
      out(idx.j - 1, idx.k - 1) = 1.0;
      out(idx.k - 1, idx.j - 1) = 1.0;
      break;
    case GeneratorFamily::AntisymmetricImaginary:
      pair_to_index(idx.n, idx.j, idx.k);
      out(idx.j - 1, idx.k - 1) = Complex(0, -1);
      out(idx.k - 1, idx.j - 1) = Complex(0, 1);
      break;
  }
  return out;
}

Matrix generator(int n, int flat) { return generator(index_to_position(n, flat)); }

std::vector<Matrix> all_generators(int n) {
  check_dimension(n);
  std::vector<Matrix> out;
  out.reserve(n * n - 1);
  for (int flat = 1; flat <= n * n - 1; ++flat)
    out.push_back(generator(index_to_position(n, flat)));
  return out;
}

std::vector<Matrix> orthogonal_diagonal_basis(int n) {
  check_dimension(n);
  std::vector<Matrix> out;
  out.reserve(n - 1);
  for (int l = 1; l <= n - 1; ++l) {
    Matrix h = Matrix::Zero(n, n);
    for (int i = 0; i < l; ++i) h(i, i) = 1.0;
    h(l, l) = -static_cast<double>(l);
    out.push_back(std::move(h));
  }
  return out;
}

Matrix normalized(const Matrix& x) {
  const double norm = std::sqrt(std::abs(hs_inner(x, x)));
  if (norm == 0.0)
    fail(ErrorCode::InvalidArgument, "cannot normalize the zero matrix");
  return x / norm;
}

double derivative_check(const Matrix& x, double h) {
  if (x.rows() != x.cols())
    fail(ErrorCode::InvalidArgument, "derivative check needs a square matrix");
  if (!(h > 0))
    fail(ErrorCode::InvalidArgument, "step size must be positive");
  const Matrix expm = (h * x).exp();
  const Matrix identity = Matrix::Identity(x.rows(), x.cols());
  return (((expm - identity) / h) - x).cwiseAbs().maxCoeff();
}

}  // namespace supauli
