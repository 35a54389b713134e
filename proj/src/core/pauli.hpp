#pragma once

#include <Eigen/Dense>
#include <bit>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace supauli {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

enum class PauliLabel : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// I and Z are the diagonal single-qubit operators, X and Y the off-diagonal.
constexpr bool is_diagonal_label(PauliLabel l) {
  return l == PauliLabel::I || l == PauliLabel::Z;
}

char label_char(PauliLabel l);
PauliLabel label_from_char(char c);  // throws Parse on anything outside IXYZ

// Tensor product of single-qubit Pauli operators, stored structurally.
//
// Bit convention: bit q of a mask (and of a row index) corresponds to tensor
// factor q counted from the right, so the leftmost factor maps to the most
// significant bit. The materialized matrix has exactly one nonzero per row;
// for row r it sits at column r ^ flip_mask() and its value is
// (-i)^y_count * (-1)^popcount(r & z_mask()).
class PauliString {
 public:
  explicit PauliString(const std::vector<PauliLabel>& labels);

  // Parses a word over {I,X,Y,Z} (case-insensitive), leftmost character =
  // leftmost factor, e.g. "ZIY".
  static PauliString parse(std::string_view word);

  // flip_mask: bit q set iff factor q is X or Y.
  // z_mask:    bit q set iff factor q is Z or Y.
  static PauliString from_masks(int m, std::uint64_t flip_mask,
                                std::uint64_t z_mask);

  int num_qubits() const { return m_; }
  std::uint64_t flip_mask() const { return flip_; }
  std::uint64_t z_mask() const { return z_; }
  int y_count() const { return std::popcount(flip_ & z_); }

  // factor 0 = leftmost label.
  PauliLabel label(int factor) const;
  std::vector<PauliLabel> labels() const;

  bool is_identity() const { return flip_ == 0 && z_ == 0; }

  std::string str() const;

  std::uint64_t column(std::uint64_t row) const { return row ^ flip_; }
  // Value of the single nonzero entry in the given row.
  Complex entry(std::uint64_t row) const;

  // Base-4 integer with digit order I=0, X=1, Y=2, Z=3, leftmost factor most
  // significant. Only valid for m <= 31.
  std::uint64_t canonical_key() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  PauliString(int m, std::uint64_t flip, std::uint64_t z)
      : m_(m), flip_(flip), z_(z) {}

  int m_ = 0;
  std::uint64_t flip_ = 0;
  std::uint64_t z_ = 0;
};

// Canonical order: lexicographic in the label digits from the leftmost
// factor, i.e. ascending canonical_key where that fits.
struct CanonicalLess {
  bool operator()(const PauliString& a, const PauliString& b) const;
};

// Per-factor diagonal / off-diagonal pattern of a string; equivalently its
// flip mask together with the factor count.
struct FormTag {
  int m = 0;
  std::uint64_t od_mask = 0;  // bit q set iff factor q is off-diagonal

  static FormTag parse(std::string_view text);  // "DD-OD", "D-D-OD", "DDOD"

  bool is_all_diagonal() const { return od_mask == 0; }
  int od_count() const { return std::popcount(od_mask); }
  bool factor_is_od(int factor) const;  // factor 0 = leftmost

  std::string str() const;     // "D-D-OD"
  std::string pretty() const;  // "D⊗D⊗OD"

  friend bool operator==(const FormTag&, const FormTag&) = default;
};

FormTag classify_form(const PauliString& p);

inline constexpr int kDefaultMaterializeCap = 12;

// Dense 2^m x 2^m matrix of the string; Kronecker product with the leftmost
// label outermost.
Matrix materialize(const PauliString& p, int cap = kDefaultMaterializeCap);

// Tr(A^dagger B).
Complex hs_inner(const Matrix& a, const Matrix& b);

// All 4^m strings in canonical order.
std::vector<PauliString> enumerate_strings(int m);
// The 2^m strings of one form, in canonical order.
std::vector<PauliString> enumerate_strings(int m, const FormTag& form);

}  // namespace supauli
