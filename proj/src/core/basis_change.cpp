#include "core/basis_change.hpp"

#include <bit>
#include <complex>

#include "core/errors.hpp"
#include "core/walsh.hpp"

namespace supauli {

namespace {

// Qubit count for a 2^m dimension, or an error for anything else.
int qubit_count_for_dim(const Matrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorCode::InvalidArgument, "expected a square matrix");
  const auto dim = static_cast<std::uint64_t>(m.rows());
  if (dim < 2 || !std::has_single_bit(dim))
    fail(ErrorCode::InvalidArgument,
         "dimension " + std::to_string(dim) + " is not a power of two >= 2");
  return std::countr_zero(dim);
}

int qubit_count_for_order(int n) {
  if (n < 2 || !std::has_single_bit(static_cast<std::uint64_t>(n)))
    fail(ErrorCode::UnsupportedDimension,
         "dimension " + std::to_string(n) +
             " is not a power of two; no Pauli basis exists");
  return std::countr_zero(static_cast<std::uint64_t>(n));
}

// Pairs (r, r^f) with r < r^f, ascending r; ascending r is ascending
// row-major pair index for a fixed flip mask.
std::vector<std::uint64_t> pair_representatives(int m, std::uint64_t flip) {
  const std::uint64_t dim = std::uint64_t{1} << m;
  std::vector<std::uint64_t> reps;
  reps.reserve(dim / 2);
  for (std::uint64_t r = 0; r < dim; ++r)
    if (r < (r ^ flip)) reps.push_back(r);
  return reps;
}

}  // namespace

Decomposition::Decomposition(int m) : m_(m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "qubit count must be >= 1");
}

void Decomposition::set(const PauliString& p, Complex c) {
  if (p.num_qubits() != m_)
    fail(ErrorCode::InvalidArgument,
         "string length " + std::to_string(p.num_qubits()) +
             " does not match the decomposition's qubit count " +
             std::to_string(m_));
  if (std::abs(c) < kCoefficientPruneThreshold)
    terms_.erase(p);
  else
    terms_[p] = c;
}

void Decomposition::add(const PauliString& p, Complex c) {
  set(p, coefficient(p) + c);
}

Complex Decomposition::coefficient(const PauliString& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Complex(0, 0) : it->second;
}

Decomposition decompose(const Matrix& m) {
  const int qubits = qubit_count_for_dim(m);
  const double dim = static_cast<double>(m.rows());
  Decomposition out(qubits);
  for (const auto& p : enumerate_strings(qubits)) {
    const Matrix dense = materialize(p, qubits);
    // Tr(P M) without forming the product.
    const Complex c = dense.cwiseProduct(m.transpose()).sum() / dim;
    out.set(p, c);
  }
  return out;
}

Decomposition fast_decompose(const Matrix& m) {
  const int qubits = qubit_count_for_dim(m);
  const std::uint64_t dim = std::uint64_t{1} << qubits;
  Decomposition out(qubits);
  std::vector<Complex> band(dim);
  for (std::uint64_t flip = 0; flip < dim; ++flip) {
    for (std::uint64_t r = 0; r < dim; ++r)
      band[r] = m(static_cast<Eigen::Index>(r ^ flip),
                  static_cast<Eigen::Index>(r));
    walsh_hadamard(std::span<Complex>(band));
    // band[z] now holds sum_r (-1)^popcount(r & z) M(r^f, r); the string
    // coefficient only needs the (-i)^y phase for y = popcount(f & z).
    for (std::uint64_t z = 0; z < dim; ++z) {
      static constexpr Complex kMinusIPow[4] = {
          {1, 0}, {0, -1}, {-1, 0}, {0, 1}};
      const int y = std::popcount(flip & z) & 3;
      const Complex c =
          kMinusIPow[y] * band[z] / static_cast<double>(dim);
      out.set(PauliString::from_masks(qubits, flip, z), c);
    }
  }
  return out;
}

Matrix compose(const Decomposition& d) {
  const std::uint64_t dim = std::uint64_t{1} << d.num_qubits();
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim),
                            static_cast<Eigen::Index>(dim));
  for (const auto& [p, c] : d.terms())
    for (std::uint64_t r = 0; r < dim; ++r)
      out(static_cast<Eigen::Index>(r),
          static_cast<Eigen::Index>(p.column(r))) += c * p.entry(r);
  return out;
}

Decomposition generator_in_pauli(const GeneratorIndex& idx) {
  qubit_count_for_order(idx.n);
  return fast_decompose(generator(idx));
}

std::map<int, double> pauli_in_generators(const PauliString& p) {
  const int m = p.num_qubits();
  const int n = 1 << m;
  if (p.is_identity())
    fail(ErrorCode::OutOfSpan,
         "the all-identity string has a trace and lies outside the span of "
         "the traceless generators");
  std::map<int, double> out;
  if (p.flip_mask() == 0) {
    // Diagonal sector: P = sum_i c_i (E_ii - E_nn) has the unique solution
    // c_i = P_ii, consistent at (n,n) because P is traceless.
    for (int i = 1; i <= n - 1; ++i) {
      const double c = p.entry(static_cast<std::uint64_t>(i - 1)).real();
      if (c != 0.0) out[i] = c;
    }
    return out;
  }
  const int pairs = n * (n - 1) / 2;
  for (const std::uint64_t r : pair_representatives(m, p.flip_mask())) {
    const Complex v = p.entry(r);  // entry at (r, r^f)
    const int j = static_cast<int>(r) + 1;
    const int k = static_cast<int>(r ^ p.flip_mask()) + 1;
    const int t = pair_to_index(n, j, k);
    if (v.real() != 0.0) out[(n - 1) + t] = v.real();
    if (v.imag() != 0.0) out[(n - 1) + pairs + t] = -v.imag();
  }
  return out;
}

int SectorBlock::entry(int row, int col) const {
  if (row < 0 || row >= size || col < 0 || col >= size)
    fail(ErrorCode::InvalidArgument, "block entry out of range");
  return entries[static_cast<std::size_t>(row) * size + col];
}

SectorBlock sector_block(const FormTag& form, SectorPart part) {
  if (form.is_all_diagonal())
    fail(ErrorCode::InvalidArgument,
         "the all-diagonal form has no +-1 sector block; its generators are "
         "solved over the diagonal basis (see pauli_in_generators)");
  const int m = form.m;
  const int n = 1 << m;
  const int half = n / 2;
  const int want_parity = (part == SectorPart::Real) ? 0 : 1;

  SectorBlock block;
  block.form = form;
  block.part = part;
  block.size = half;
  block.entries.assign(static_cast<std::size_t>(half) * half, 0);

  for (const auto& p : enumerate_strings(m, form))
    if ((p.y_count() & 1) == want_parity) block.row_strings.push_back(p);

  const int pairs = n * (n - 1) / 2;
  const auto reps = pair_representatives(m, form.od_mask);
  for (const std::uint64_t r : reps) {
    const int t = pair_to_index(n, static_cast<int>(r) + 1,
                                static_cast<int>(r ^ form.od_mask) + 1);
    const int flat = (part == SectorPart::Real) ? (n - 1) + t
                                                : (n - 1) + pairs + t;
    block.column_indices.push_back(flat);
  }

  for (int row = 0; row < half; ++row) {
    const auto& p = block.row_strings[row];
    for (int col = 0; col < half; ++col) {
      const Complex v = p.entry(reps[col]);
      const double coeff =
          (part == SectorPart::Real) ? v.real() : -v.imag();
      block.entries[static_cast<std::size_t>(row) * half + col] =
          static_cast<int>(coeff);
    }
  }
  return block;
}

std::vector<ClassificationRow> classification_table(int m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "qubit count must be >= 1");
  if (m > 15)
    fail(ErrorCode::ResourceLimit,
         "classification table for m > 15 is not feasible");
  const int n = 1 << m;
  const int pairs = n * (n - 1) / 2;
  std::vector<ClassificationRow> rows;
  rows.reserve(std::size_t{1} << m);
  for (std::uint64_t od = 0; od < (std::uint64_t{1} << m); ++od) {
    ClassificationRow row;
    row.form = FormTag{m, od};
    if (od == 0) {
      for (int i = 1; i <= n - 1; ++i) row.diagonal.push_back(i);
    } else {
      for (const std::uint64_t r : pair_representatives(m, od)) {
        const int t = pair_to_index(n, static_cast<int>(r) + 1,
                                    static_cast<int>(r ^ od) + 1);
        row.real.push_back((n - 1) + t);
        row.imaginary.push_back((n - 1) + pairs + t);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace supauli
