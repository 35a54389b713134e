#include "core/pauli.hpp"

#include <doctest.h>

#include <random>
#include <set>

#include "core/errors.hpp"
#include "goldens.hpp"
#include "oracles.hpp"

using supauli::Complex;
using supauli::ErrorCode;
using supauli::FormTag;
using supauli::Matrix;
using supauli::PauliLabel;
using supauli::PauliString;

namespace {

void check_against_kron(const PauliString& p) {
  const Matrix expected = oracles::pauli_dense(p.str());
  const Matrix actual = supauli::materialize(p);
  REQUIRE(actual.rows() == expected.rows());
  CHECK((actual - expected).cwiseAbs().maxCoeff() == 0.0);
}

PauliString random_string(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> digit(0, 3);
  std::vector<PauliLabel> labels(m);
  for (auto& l : labels) l = static_cast<PauliLabel>(digit(rng));
  return PauliString(labels);
}

}  // namespace

TEST_CASE("derived masks of ZIY") {
  const auto p = PauliString::parse("ZIY");
  CHECK(p.flip_mask() == 0b001);
  CHECK(p.z_mask() == 0b101);
  CHECK(p.y_count() == 1);
  check_against_kron(p);
}

TEST_CASE("derived masks of III and XXX") {
  const auto iii = PauliString::parse("III");
  CHECK(iii.flip_mask() == 0);
  CHECK(iii.z_mask() == 0);
  CHECK(iii.y_count() == 0);
  CHECK(iii.is_identity());

  const auto xxx = PauliString::parse("XXX");
  CHECK(xxx.flip_mask() == 0b111);
  CHECK(xxx.z_mask() == 0);
  CHECK(xxx.y_count() == 0);
  check_against_kron(xxx);
}

TEST_CASE("empty strings are rejected") {
  CHECK_THROWS_AS(PauliString(std::vector<PauliLabel>{}), supauli::Error);
  CHECK_THROWS_AS(PauliString::parse(""), supauli::Error);
  CHECK_THROWS_AS(PauliString::parse("ZQY"), supauli::Error);
}

TEST_CASE("string round trip and labels") {
  const auto p = PauliString::parse("xyzi");
  CHECK(p.str() == "XYZI");
  CHECK(p.label(0) == PauliLabel::X);
  CHECK(p.label(3) == PauliLabel::I);
  CHECK(PauliString::from_masks(4, p.flip_mask(), p.z_mask()) == p);
}

TEST_CASE("materializing ZIY reproduces the worked 8x8 matrix") {
  const Matrix m = supauli::materialize(PauliString::parse("ZIY"));
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      CHECK(m(r, c) == goldens::kZiyMatrix[r][c]);
}

TEST_CASE("materializing a single identity") {
  const Matrix m = supauli::materialize(PauliString::parse("I"));
  CHECK(m == Matrix::Identity(2, 2));
}

TEST_CASE("materialization matches the Kronecker oracle") {
  std::mt19937_64 rng(7);
  for (int m = 1; m <= 5; ++m)
    for (int trial = 0; trial < 10; ++trial)
      check_against_kron(random_string(m, rng));
}

TEST_CASE("entry formula matches the Kronecker oracle for all 64 strings") {
  for (const auto& p : supauli::enumerate_strings(3)) {
    const Matrix dense = oracles::pauli_dense(p.str());
    for (std::uint64_t r = 0; r < 8; ++r) {
      // One nonzero per row, at column r ^ flip.
      for (std::uint64_t c = 0; c < 8; ++c) {
        const Complex expected =
            (c == p.column(r)) ? p.entry(r) : Complex(0, 0);
        CHECK(dense(static_cast<int>(r), static_cast<int>(c)) == expected);
      }
    }
  }
}

TEST_CASE("materialization cap") {
  const auto p13 = PauliString::from_masks(13, 0, 0);
  CHECK_THROWS_WITH_AS(supauli::materialize(p13),
                       doctest::Contains("cap"), supauli::Error);
  const auto p5 = PauliString::from_masks(5, 0b00011, 0b00110);
  CHECK_THROWS_AS(supauli::materialize(p5, 4), supauli::Error);
  CHECK(supauli::materialize(p5, 5).rows() == 32);
}

TEST_CASE("form classification") {
  CHECK(supauli::classify_form(PauliString::parse("ZIY")).str() == "D-D-OD");
  CHECK(supauli::classify_form(PauliString::parse("III")).str() == "D-D-D");
  CHECK(supauli::classify_form(PauliString::parse("XYZ")).str() == "OD-OD-D");
}

TEST_CASE("form matches the nonzero support of the dense matrix") {
  for (const auto& p : supauli::enumerate_strings(3)) {
    const auto form = supauli::classify_form(p);
    const Matrix dense = oracles::pauli_dense(p.str());
    // The column offset of the nonzero support is the flip mask.
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        if (dense(r, c) != Complex(0, 0))
          CHECK((static_cast<std::uint64_t>(r ^ c)) == form.od_mask);
    const bool diagonal_support = dense.cwiseAbs().sum() ==
                                  dense.diagonal().cwiseAbs().sum();
    CHECK(form.is_all_diagonal() == diagonal_support);
  }
}

TEST_CASE("form string parsing") {
  CHECK(FormTag::parse("DD-OD") == FormTag{3, 0b001});
  CHECK(FormTag::parse("D-D-OD") == FormTag{3, 0b001});
  CHECK(FormTag::parse("DDOD") == FormTag{3, 0b001});
  CHECK(FormTag::parse("od") == FormTag{1, 0b1});
  CHECK(FormTag::parse("OD\xE2\x8A\x97OD\xE2\x8A\x97""D") ==
        FormTag{3, 0b110});
  CHECK(FormTag::parse("D-D-OD").pretty() == "D\xE2\x8A\x97""D\xE2\x8A\x97"
                                             "OD");
  CHECK_THROWS_AS(FormTag::parse(""), supauli::Error);
  CHECK_THROWS_AS(FormTag::parse("DQ"), supauli::Error);
  CHECK_THROWS_AS(FormTag::parse("O"), supauli::Error);
}

TEST_CASE("hs_inner") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = random_string(3, rng);
    const Matrix m = supauli::materialize(p);
    CHECK(supauli::hs_inner(m, m) == Complex(8, 0));
  }
  const Matrix a = supauli::materialize(PauliString::parse("IIZ"));
  const Matrix b = supauli::materialize(PauliString::parse("ZII"));
  CHECK(supauli::hs_inner(a, b) == Complex(0, 0));

  // E_12 + E_21 has squared norm 2.
  Matrix x8 = oracles::unit_matrix(8, 1, 2) + oracles::unit_matrix(8, 2, 1);
  CHECK(supauli::hs_inner(x8, x8) == Complex(2, 0));

  CHECK_THROWS_AS(supauli::hs_inner(a, Matrix::Identity(4, 4)),
                  supauli::Error);
}

TEST_CASE("orthogonality, involution and hermiticity at m <= 3") {
  for (int m = 1; m <= 3; ++m) {
    const auto strings = supauli::enumerate_strings(m);
    const double dim = static_cast<double>(1 << m);
    std::vector<Matrix> dense;
    for (const auto& p : strings) dense.push_back(supauli::materialize(p));
    for (std::size_t i = 0; i < strings.size(); ++i) {
      CHECK((dense[i] * dense[i] -
             Matrix::Identity(1 << m, 1 << m)).cwiseAbs().maxCoeff() == 0.0);
      CHECK((dense[i].adjoint() - dense[i]).cwiseAbs().maxCoeff() == 0.0);
      for (std::size_t j = 0; j < strings.size(); ++j) {
        const Complex expected = (i == j) ? Complex(dim, 0) : Complex(0, 0);
        CHECK(supauli::hs_inner(dense[i], dense[j]) == expected);
      }
    }
  }
}

TEST_CASE("enumeration order and counts") {
  const auto m1 = supauli::enumerate_strings(1);
  REQUIRE(m1.size() == 4);
  CHECK(m1[0].str() == "I");
  CHECK(m1[1].str() == "X");
  CHECK(m1[2].str() == "Y");
  CHECK(m1[3].str() == "Z");

  const auto m3 = supauli::enumerate_strings(3);
  REQUIRE(m3.size() == 64);
  std::set<std::string> seen;
  std::uint64_t previous = 0;
  for (std::size_t i = 0; i < m3.size(); ++i) {
    seen.insert(m3[i].str());
    const auto key = m3[i].canonical_key();
    CHECK(key == i);
    if (i) CHECK(key > previous);
    previous = key;
  }
  CHECK(seen.size() == 64);
}

TEST_CASE("form-filtered enumeration") {
  const auto form = FormTag::parse("D-D-OD");
  const auto strings = supauli::enumerate_strings(3, form);
  REQUIRE(strings.size() == 8);
  for (const auto& p : strings) {
    CHECK(supauli::classify_form(p) == form);
    CHECK((p.label(0) == PauliLabel::I || p.label(0) == PauliLabel::Z));
    CHECK((p.label(2) == PauliLabel::X || p.label(2) == PauliLabel::Y));
  }
  // The forms partition all strings.
  std::size_t total = 0;
  for (std::uint64_t od = 0; od < 8; ++od)
    total += supauli::enumerate_strings(3, FormTag{3, od}).size();
  CHECK(total == 64);
}
