#include "core/pauli.hpp"

#include <array>
#include <cctype>

#include "core/errors.hpp"

namespace supauli {

namespace {

void check_qubit_count(int m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "qubit count must be >= 1");
  if (m > 63)
    fail(ErrorCode::ResourceLimit,
         "qubit count " + std::to_string(m) + " exceeds the 63-bit mask limit");
}

// (-i)^k for k mod 4.
constexpr std::array<Complex, 4> kMinusIPowers = {
    Complex(1, 0), Complex(0, -1), Complex(-1, 0), Complex(0, 1)};

}  // namespace

char label_char(PauliLabel l) {
  switch (l) {
    case PauliLabel::I: return 'I';
    case PauliLabel::X: return 'X';
    case PauliLabel::Y: return 'Y';
    case PauliLabel::Z: return 'Z';
  }
  fail(ErrorCode::InvalidArgument, "invalid Pauli label");
}

PauliLabel label_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'I': return PauliLabel::I;
    case 'X': return PauliLabel::X;
    case 'Y': return PauliLabel::Y;
    case 'Z': return PauliLabel::Z;
  }
  fail(ErrorCode::Parse,
       std::string("invalid Pauli label character '") + c + "'");
}

PauliString::PauliString(const std::vector<PauliLabel>& labels) {
  if (labels.empty())
    fail(ErrorCode::InvalidArgument, "a Pauli string needs at least one label");
  check_qubit_count(static_cast<int>(labels.size()));
  m_ = static_cast<int>(labels.size());
  for (int q = 0; q < m_; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (m_ - 1 - q);
    switch (labels[q]) {
      case PauliLabel::I: break;
      case PauliLabel::X: flip_ |= bit; break;
      case PauliLabel::Y: flip_ |= bit; z_ |= bit; break;
      case PauliLabel::Z: z_ |= bit; break;
    }
  }
}

PauliString PauliString::parse(std::string_view word) {
  if (word.empty())
    fail(ErrorCode::Parse, "empty Pauli string literal");
  std::vector<PauliLabel> labels;
  labels.reserve(word.size());
  for (char c : word) labels.push_back(label_from_char(c));
  return PauliString(labels);
}

PauliString PauliString::from_masks(int m, std::uint64_t flip_mask,
                                    std::uint64_t z_mask) {
  check_qubit_count(m);
  const std::uint64_t valid = (std::uint64_t{1} << m) - 1;
  if ((flip_mask & ~valid) || (z_mask & ~valid))
    fail(ErrorCode::InvalidArgument, "mask has bits beyond the qubit count");
  return PauliString(m, flip_mask, z_mask);
}

PauliLabel PauliString::label(int factor) const {
  if (factor < 0 || factor >= m_)
    fail(ErrorCode::InvalidArgument, "factor index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (m_ - 1 - factor);
  const bool od = flip_ & bit;
  const bool z = z_ & bit;
  if (od) return z ? PauliLabel::Y : PauliLabel::X;
  return z ? PauliLabel::Z : PauliLabel::I;
}

std::vector<PauliLabel> PauliString::labels() const {
  std::vector<PauliLabel> out(m_);
  for (int q = 0; q < m_; ++q) out[q] = label(q);
  return out;
}

std::string PauliString::str() const {
  std::string s(m_, 'I');
  for (int q = 0; q < m_; ++q) s[q] = label_char(label(q));
  return s;
}

Complex PauliString::entry(std::uint64_t row) const {
  if ((row >> m_) != 0)
    fail(ErrorCode::InvalidArgument, "row index out of range");
  const int phase =
      (y_count() + 2 * std::popcount(row & z_)) & 3;
  return kMinusIPowers[phase];
}

std::uint64_t PauliString::canonical_key() const {
  std::uint64_t key = 0;
  for (int q = 0; q < m_; ++q)
    key = key * 4 + static_cast<std::uint64_t>(label(q));
  return key;
}

bool CanonicalLess::operator()(const PauliString& a,
                               const PauliString& b) const {
  if (a.num_qubits() != b.num_qubits())
    return a.num_qubits() < b.num_qubits();
  for (int q = 0; q < a.num_qubits(); ++q) {
    const auto da = static_cast<int>(a.label(q));
    const auto db = static_cast<int>(b.label(q));
    if (da != db) return da < db;
  }
  return false;
}

FormTag FormTag::parse(std::string_view text) {
  FormTag tag;
  std::vector<bool> od;
  for (std::size_t i = 0; i < text.size();) {
    const char c = std::toupper(static_cast<unsigned char>(text[i]));
    if (c == 'O') {
      if (i + 1 >= text.size() ||
          std::toupper(static_cast<unsigned char>(text[i + 1])) != 'D')
        fail(ErrorCode::Parse, "expected 'OD' in form string");
      od.push_back(true);
      i += 2;
    } else if (c == 'D') {
      od.push_back(false);
      i += 1;
    } else if (c == '-' || c == '*' || c == 'X' || c == ' ' || c == ',') {
      i += 1;
    } else if (text.compare(i, 3, "\xE2\x8A\x97") == 0) {  // UTF-8 ⊗
      i += 3;
    } else {
      fail(ErrorCode::Parse,
           std::string("unexpected character '") + text[i] + "' in form string");
    }
  }
  if (od.empty()) fail(ErrorCode::Parse, "empty form string");
  if (od.size() > 63)
    fail(ErrorCode::ResourceLimit, "form string longer than 63 factors");
  tag.m = static_cast<int>(od.size());
  for (int q = 0; q < tag.m; ++q)
    if (od[q]) tag.od_mask |= std::uint64_t{1} << (tag.m - 1 - q);
  return tag;
}

bool FormTag::factor_is_od(int factor) const {
  if (factor < 0 || factor >= m)
    fail(ErrorCode::InvalidArgument, "factor index out of range");
  return (od_mask >> (m - 1 - factor)) & 1;
}

std::string FormTag::str() const {
  std::string out;
  for (int q = 0; q < m; ++q) {
    if (q) out += '-';
    out += factor_is_od(q) ? "OD" : "D";
  }
  return out;
}

std::string FormTag::pretty() const {
  std::string out;
  for (int q = 0; q < m; ++q) {
    if (q) out += "\xE2\x8A\x97";
    out += factor_is_od(q) ? "OD" : "D";
  }
  return out;
}

FormTag classify_form(const PauliString& p) {
  return FormTag{p.num_qubits(), p.flip_mask()};
}

Matrix materialize(const PauliString& p, int cap) {
  const int m = p.num_qubits();
  if (m > cap)
    fail(ErrorCode::ResourceLimit,
         "dense materialization of " + std::to_string(m) +
             " qubits exceeds the cap of " + std::to_string(cap));
  const std::uint64_t dim = std::uint64_t{1} << m;
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim),
                            static_cast<Eigen::Index>(dim));
  for (std::uint64_t r = 0; r < dim; ++r)
    out(static_cast<Eigen::Index>(r),
        static_cast<Eigen::Index>(p.column(r))) = p.entry(r);
  return out;
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::InvalidArgument,
         "Hilbert-Schmidt inner product needs equal dimensions");
  return a.conjugate().cwiseProduct(b).sum();
}

std::vector<PauliString> enumerate_strings(int m) {
  check_qubit_count(m);
  if (m > 15)
    fail(ErrorCode::ResourceLimit,
         "enumerating all 4^m strings is not feasible for m > 15");
  const std::uint64_t count = std::uint64_t{1} << (2 * m);
  std::vector<PauliString> out;
  out.reserve(count);
  for (std::uint64_t key = 0; key < count; ++key) {
    std::uint64_t flip = 0, z = 0;
    for (int q = 0; q < m; ++q) {
      const auto digit =
          static_cast<PauliLabel>((key >> (2 * (m - 1 - q))) & 3);
      const std::uint64_t bit = std::uint64_t{1} << (m - 1 - q);
      if (digit == PauliLabel::X || digit == PauliLabel::Y) flip |= bit;
      if (digit == PauliLabel::Z || digit == PauliLabel::Y) z |= bit;
    }
    out.push_back(PauliString::from_masks(m, flip, z));
  }
  return out;
}

std::vector<PauliString> enumerate_strings(int m, const FormTag& form) {
  check_qubit_count(m);
  if (form.m != m)
    fail(ErrorCode::InvalidArgument,
         "form factor count does not match the qubit count");
  if (m > 30)
    fail(ErrorCode::ResourceLimit,
         "enumerating 2^m strings is not feasible for m > 30");
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<PauliString> out;
  out.reserve(count);
  // For a fixed flip mask, ascending z mask is the canonical order.
  for (std::uint64_t z = 0; z < count; ++z)
    out.push_back(PauliString::from_masks(m, form.od_mask, z));
  return out;
}

}  // namespace supauli
