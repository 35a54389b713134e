#pragma once

#include <map>
#include <vector>

#include "core/gellmann.hpp"
#include "core/pauli.hpp"

namespace supauli {

// Coefficients with magnitude below this are dropped from decompositions.
inline constexpr double kCoefficientPruneThreshold = 1e-14;

// A linear combination of Pauli strings on a fixed qubit count; absent
// strings have coefficient zero. Terms iterate in canonical string order.
class Decomposition {
 public:
  explicit Decomposition(int m);

  int num_qubits() const { return m_; }
  std::size_t size() const { return terms_.size(); }

  void set(const PauliString& p, Complex c);
  void add(const PauliString& p, Complex c);
  Complex coefficient(const PauliString& p) const;

  const std::map<PauliString, Complex, CanonicalLess>& terms() const {
    return terms_;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  int m_;
  std::map<PauliString, Complex, CanonicalLess> terms_;
};

// Projection onto the Pauli basis, c_P = Tr(P M) / 2^m, one dense
// materialized string at a time. O(8^m) overall.
Decomposition decompose(const Matrix& m);

// Same output as decompose. Gathers the band d_r = M(r^f, r) for each flip
// mask f and Walsh-transforms it over the z-mask structure, O(m 4^m) overall.
Decomposition fast_decompose(const Matrix& m);

// Sum of c_P * materialize(P); the zero matrix for an empty decomposition.
Matrix compose(const Decomposition& d);

// Pauli expansion of one generator of su(2^m): exactly 2^{m-1} terms, all of
// magnitude 1/2^{m-1}, all within a single form.
Decomposition generator_in_pauli(const GeneratorIndex& idx);

// Expansion of a Pauli string over the generator basis, keyed by flat index.
// Off-diagonal strings hit exactly 2^{m-1} generators with coefficients +-1;
// diagonal strings are solved over the (non-orthogonal) diagonal generators.
// The all-identity string is outside the span.
std::map<int, double> pauli_in_generators(const PauliString& p);

enum class SectorPart { Real, Imaginary };

// The +-1 matrix g relating the 2^{m-1} Pauli strings of one form and part
// (rows, canonical order) to the 2^{m-1} generators they couple (columns,
// ascending flat index): string_row = sum_col g[row,col] * generator_col.
// Rows are orthogonal, g g^T = 2^{m-1} I, so the inverse is g^T / 2^{m-1}
// and g / 2^{(m-1)/2} is orthogonal.
struct SectorBlock {
  FormTag form;
  SectorPart part = SectorPart::Real;
  int size = 0;  // 2^{m-1}
  std::vector<int> entries;  // row-major, +-1
  std::vector<PauliString> row_strings;
  std::vector<int> column_indices;  // flat generator indices

  int entry(int row, int col) const;
  // Denominator of the inverse scale: inverse = g^T / scale_denominator().
  int scale_denominator() const { return size; }
};

// Requires a form with at least one off-diagonal factor; the all-diagonal
// sector has no +-1 block and is handled by the solve in
// pauli_in_generators.
SectorBlock sector_block(const FormTag& form, SectorPart part);

struct ClassificationRow {
  FormTag form;
  std::vector<int> diagonal;
  std::vector<int> real;
  std::vector<int> imaginary;
};

// One row per form (ascending off-diagonal mask); every flat index 1..n^2-1
// appears in exactly one cell.
std::vector<ClassificationRow> classification_table(int m);

}  // namespace supauli
