// Exercises the shared library strictly through the public C header.
#include "supauli/supauli.h"

#include <doctest.h>

#include <cstring>
#include <string>

namespace {

std::string take(char* buffer) {
  REQUIRE(buffer != nullptr);
  std::string out(buffer);
  supauli_free(buffer);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(supauli_version()) > 0);
  CHECK(std::string(supauli_status_name(SUPAULI_OK)) == "ok");
  CHECK(std::string(supauli_status_name(SUPAULI_ERR_OUT_OF_SPAN)) ==
        "out-of-span");
  CHECK(std::string(supauli_status_name(999)) == "unknown-status");
}

TEST_CASE("pauli string lifecycle") {
  supauli_pauli* p = nullptr;
  REQUIRE(supauli_pauli_parse("ZIY", &p) == SUPAULI_OK);
  CHECK(supauli_pauli_num_qubits(p) == 3);
  CHECK(supauli_pauli_flip_mask(p) == 0b001);
  CHECK(supauli_pauli_z_mask(p) == 0b101);
  CHECK(supauli_pauli_y_count(p) == 1);

  int label = -1;
  CHECK(supauli_pauli_label(p, 0, &label) == SUPAULI_OK);
  CHECK(label == SUPAULI_LABEL_Z);
  CHECK(supauli_pauli_label(p, 9, &label) == SUPAULI_ERR_INVALID_ARGUMENT);

  char* str = nullptr;
  CHECK(supauli_pauli_str(p, &str) == SUPAULI_OK);
  CHECK(take(str) == "ZIY");

  char* form = nullptr;
  CHECK(supauli_pauli_classify(p, &form) == SUPAULI_OK);
  CHECK(take(form) == "D-D-OD");

  supauli_matrix* m = nullptr;
  REQUIRE(supauli_pauli_materialize(p, &m) == SUPAULI_OK);
  CHECK(supauli_matrix_dim(m) == 8);
  double re = 0, im = 0;
  CHECK(supauli_matrix_get(m, 0, 1, &re, &im) == SUPAULI_OK);
  CHECK(re == 0.0);
  CHECK(im == -1.0);
  supauli_matrix_free(m);
  supauli_pauli_free(p);
}

TEST_CASE("parse failures set the error message") {
  supauli_pauli* p = nullptr;
  CHECK(supauli_pauli_parse("ZQY", &p) == SUPAULI_ERR_PARSE);
  CHECK(std::strlen(supauli_last_error()) > 0);
  CHECK(supauli_pauli_parse(nullptr, &p) == SUPAULI_ERR_INVALID_ARGUMENT);
}

TEST_CASE("masks and labels constructors") {
  supauli_pauli* a = nullptr;
  REQUIRE(supauli_pauli_from_masks(3, 0b001, 0b101, &a) == SUPAULI_OK);
  const uint8_t labels[3] = {SUPAULI_LABEL_Z, SUPAULI_LABEL_I,
                             SUPAULI_LABEL_Y};
  supauli_pauli* b = nullptr;
  REQUIRE(supauli_pauli_from_labels(labels, 3, &b) == SUPAULI_OK);
  CHECK(supauli_pauli_flip_mask(a) == supauli_pauli_flip_mask(b));
  CHECK(supauli_pauli_z_mask(a) == supauli_pauli_z_mask(b));
  supauli_pauli_free(a);
  supauli_pauli_free(b);

  supauli_pauli* bad = nullptr;
  CHECK(supauli_pauli_from_masks(2, 0b100, 0, &bad) ==
        SUPAULI_ERR_INVALID_ARGUMENT);
}

TEST_CASE("enumeration") {
  supauli_pauli_list* list = nullptr;
  REQUIRE(supauli_enumerate(2, nullptr, &list) == SUPAULI_OK);
  CHECK(supauli_pauli_list_size(list) == 16);
  const supauli_pauli* first = supauli_pauli_list_get(list, 0);
  REQUIRE(first != nullptr);
  char* str = nullptr;
  CHECK(supauli_pauli_str(first, &str) == SUPAULI_OK);
  CHECK(take(str) == "II");
  CHECK(supauli_pauli_list_get(list, 16) == nullptr);
  supauli_pauli_list_free(list);

  REQUIRE(supauli_enumerate(2, "D-OD", &list) == SUPAULI_OK);
  CHECK(supauli_pauli_list_size(list) == 4);
  supauli_pauli_list_free(list);
}

TEST_CASE("matrix round trip through buffers and JSON") {
  const double data[8] = {1, 0, 0, -1, 0, 1, -1, 0};  // [[1, -i], [i, -1]]
  supauli_matrix* m = nullptr;
  REQUIRE(supauli_matrix_create(2, data, &m) == SUPAULI_OK);
  double out[8] = {0};
  CHECK(supauli_matrix_copy_data(m, out) == SUPAULI_OK);
  for (int i = 0; i < 8; ++i) CHECK(out[i] == data[i]);

  char* json = nullptr;
  REQUIRE(supauli_matrix_render(m, "json", &json) == SUPAULI_OK);
  const std::string json_text = take(json);
  supauli_matrix* back = nullptr;
  REQUIRE(supauli_matrix_from_json(json_text.c_str(), &back) == SUPAULI_OK);
  double diff = -1;
  CHECK(supauli_matrix_max_abs_diff(m, back, &diff) == SUPAULI_OK);
  CHECK(diff == 0.0);

  double re = 0, im = 0;
  CHECK(supauli_matrix_hs_inner(m, m, &re, &im) == SUPAULI_OK);
  CHECK(re == 4.0);
  CHECK(im == 0.0);

  char* text = nullptr;
  CHECK(supauli_matrix_render(m, "yaml", &text) ==
        SUPAULI_ERR_INVALID_ARGUMENT);

  supauli_matrix_free(back);
  supauli_matrix_free(m);
}

TEST_CASE("generators through the C API") {
  int count = 0;
  CHECK(supauli_free_parameter_count(8, &count) == SUPAULI_OK);
  CHECK(count == 63);
  CHECK(supauli_free_parameter_count(1, &count) ==
        SUPAULI_ERR_INVALID_ARGUMENT);

  supauli_matrix* x1 = nullptr;
  REQUIRE(supauli_generator(8, 1, &x1) == SUPAULI_OK);
  double re = 0, im = 0;
  CHECK(supauli_matrix_get(x1, 0, 0, &re, &im) == SUPAULI_OK);
  CHECK(re == 1.0);
  CHECK(supauli_matrix_get(x1, 7, 7, &re, &im) == SUPAULI_OK);
  CHECK(re == -1.0);
  supauli_matrix_free(x1);

  supauli_matrix* bad = nullptr;
  CHECK(supauli_generator(8, 64, &bad) == SUPAULI_ERR_INVALID_ARGUMENT);

  int family = -1, pos1 = 0, pos2 = 0;
  CHECK(supauli_index_decode(8, 21, &family, &pos1, &pos2) == SUPAULI_OK);
  CHECK(family == SUPAULI_FAMILY_SYMMETRIC);
  CHECK(pos1 == 3);
  CHECK(pos2 == 4);
  int flat = 0;
  CHECK(supauli_index_encode(8, family, pos1, pos2, &flat) == SUPAULI_OK);
  CHECK(flat == 21);

  CHECK(supauli_generator_parse(8, "asym:1,2", &flat) == SUPAULI_OK);
  CHECK(flat == 36);

  supauli_matrix* diag = nullptr;
  REQUIRE(supauli_orthogonal_diagonal(8, 7, &diag) == SUPAULI_OK);
  CHECK(supauli_matrix_get(diag, 7, 7, &re, &im) == SUPAULI_OK);
  CHECK(re == -7.0);
  double err = -1;
  CHECK(supauli_derivative_check(diag, 1e-5, &err) == SUPAULI_OK);
  CHECK(err <= 1e-3);
  supauli_matrix_free(diag);
}

TEST_CASE("decomposition through the C API") {
  supauli_matrix* x1 = nullptr;
  REQUIRE(supauli_generator(8, 1, &x1) == SUPAULI_OK);
  supauli_decomposition* d = nullptr;
  REQUIRE(supauli_decompose(x1, 1, &d) == SUPAULI_OK);
  CHECK(supauli_decomposition_num_qubits(d) == 3);
  REQUIRE(supauli_decomposition_size(d) == 4);

  // Terms in canonical order: IIZ, IZI, ZII, ZZZ, each 1/4.
  const char* expected[4] = {"IIZ", "IZI", "ZII", "ZZZ"};
  for (size_t i = 0; i < 4; ++i) {
    char* word = nullptr;
    double re = 0, im = 0;
    REQUIRE(supauli_decomposition_term(d, i, &word, &re, &im) == SUPAULI_OK);
    CHECK(take(word) == expected[i]);
    CHECK(re == 0.25);
    CHECK(im == 0.0);
  }

  double re = 0, im = 0;
  CHECK(supauli_decomposition_coefficient(d, "ZZZ", &re, &im) == SUPAULI_OK);
  CHECK(re == 0.25);
  CHECK(supauli_decomposition_coefficient(d, "XXX", &re, &im) == SUPAULI_OK);
  CHECK(re == 0.0);

  supauli_matrix* back = nullptr;
  REQUIRE(supauli_compose(d, &back) == SUPAULI_OK);
  double diff = -1;
  CHECK(supauli_matrix_max_abs_diff(x1, back, &diff) == SUPAULI_OK);
  CHECK(diff == 0.0);

  supauli_matrix_free(back);
  supauli_decomposition_free(d);
  supauli_matrix_free(x1);
}

TEST_CASE("decomposition building and JSON through the C API") {
  supauli_decomposition* d = nullptr;
  REQUIRE(supauli_decomposition_create(2, &d) == SUPAULI_OK);
  CHECK(supauli_decomposition_set(d, "XY", 1.0, -0.5) == SUPAULI_OK);
  CHECK(supauli_decomposition_set(d, "XYZ", 1.0, 0.0) ==
        SUPAULI_ERR_INVALID_ARGUMENT);
  char* json = nullptr;
  REQUIRE(supauli_decomposition_render(d, "json", &json) == SUPAULI_OK);
  const std::string json_text = take(json);
  supauli_decomposition* back = nullptr;
  REQUIRE(supauli_decomposition_from_json(json_text.c_str(), &back) ==
          SUPAULI_OK);
  double re = 0, im = 0;
  CHECK(supauli_decomposition_coefficient(back, "XY", &re, &im) ==
        SUPAULI_OK);
  CHECK(re == 1.0);
  CHECK(im == -0.5);
  supauli_decomposition_free(back);
  supauli_decomposition_free(d);
}

TEST_CASE("generator and string expansions through the C API") {
  supauli_decomposition* d = nullptr;
  REQUIRE(supauli_generator_in_pauli(8, 8, &d) == SUPAULI_OK);
  double re = 0, im = 0;
  CHECK(supauli_decomposition_coefficient(d, "IZX", &re, &im) == SUPAULI_OK);
  CHECK(re == 0.25);
  supauli_decomposition_free(d);

  CHECK(supauli_generator_in_pauli(3, 1, &d) ==
        SUPAULI_ERR_UNSUPPORTED_DIMENSION);

  supauli_pauli* p = nullptr;
  REQUIRE(supauli_pauli_parse("ZZX", &p) == SUPAULI_OK);
  int* flats = nullptr;
  double* coeffs = nullptr;
  size_t count = 0;
  REQUIRE(supauli_pauli_in_generators(p, &flats, &coeffs, &count) ==
          SUPAULI_OK);
  REQUIRE(count == 4);
  const int expected_flats[4] = {8, 21, 30, 35};
  const double expected_coeffs[4] = {1, -1, -1, 1};
  for (size_t i = 0; i < 4; ++i) {
    CHECK(flats[i] == expected_flats[i]);
    CHECK(coeffs[i] == expected_coeffs[i]);
  }
  supauli_free(flats);
  supauli_free(coeffs);
  supauli_pauli_free(p);

  REQUIRE(supauli_pauli_parse("III", &p) == SUPAULI_OK);
  CHECK(supauli_pauli_in_generators(p, &flats, &coeffs, &count) ==
        SUPAULI_ERR_OUT_OF_SPAN);
  supauli_pauli_free(p);
}

TEST_CASE("sector blocks through the C API") {
  supauli_block* b = nullptr;
  REQUIRE(supauli_sector_block("DD-OD", SUPAULI_PART_REAL, &b) == SUPAULI_OK);
  CHECK(supauli_block_size(b) == 4);
  CHECK(supauli_block_scale_den(b) == 4);
  int entry = 0;
  CHECK(supauli_block_entry(b, 1, 1, &entry) == SUPAULI_OK);
  CHECK(entry == -1);
  char* row = nullptr;
  CHECK(supauli_block_row_string(b, 3, &row) == SUPAULI_OK);
  CHECK(take(row) == "ZZX");
  int col = 0;
  CHECK(supauli_block_column_index(b, 3, &col) == SUPAULI_OK);
  CHECK(col == 35);
  supauli_block_free(b);

  CHECK(supauli_sector_block("DDD", SUPAULI_PART_REAL, &b) ==
        SUPAULI_ERR_INVALID_ARGUMENT);

  char* canonical = nullptr;
  int m = 0, od = 0;
  CHECK(supauli_form_parse("DDOD", &canonical, &m, &od) == SUPAULI_OK);
  CHECK(take(canonical) == "D-D-OD");
  CHECK(m == 3);
  CHECK(od == 1);
}

TEST_CASE("classification table through the C API") {
  supauli_table* t = nullptr;
  REQUIRE(supauli_table_create(3, &t) == SUPAULI_OK);
  CHECK(supauli_table_num_forms(t) == 8);
  char* form = nullptr;
  CHECK(supauli_table_form(t, 7, &form) == SUPAULI_OK);
  CHECK(take(form) == "OD-OD-OD");
  int* indices = nullptr;
  size_t count = 0;
  REQUIRE(supauli_table_indices(t, 7, SUPAULI_CELL_REAL, &indices, &count) ==
          SUPAULI_OK);
  REQUIRE(count == 4);
  CHECK(indices[0] == 14);
  CHECK(indices[3] == 26);
  supauli_free(indices);
  char* rendered = nullptr;
  REQUIRE(supauli_table_render(t, "text", &rendered) == SUPAULI_OK);
  CHECK(take(rendered).find("X14, X19, X23, X26") != std::string::npos);
  supauli_table_free(t);
}

TEST_CASE("parameters and exponentials through the C API") {
  supauli_params* p = nullptr;
  REQUIRE(supauli_params_create(8, &p) == SUPAULI_OK);
  CHECK(supauli_params_n(p) == 8);
  CHECK(supauli_params_set_psi(p, 1, 0.25) == SUPAULI_OK);
  CHECK(supauli_params_set_a(p, 2, -1.0) == SUPAULI_OK);
  CHECK(supauli_params_set_b(p, 28, 0.5) == SUPAULI_OK);
  CHECK(supauli_params_set_psi(p, 8, 1.0) == SUPAULI_ERR_INVALID_ARGUMENT);
  double v = 0;
  CHECK(supauli_params_get_a(p, 2, &v) == SUPAULI_OK);
  CHECK(v == -1.0);

  char* json = nullptr;
  REQUIRE(supauli_params_render(p, "json", &json) == SUPAULI_OK);
  const std::string json_text = take(json);
  supauli_params* back = nullptr;
  REQUIRE(supauli_params_from_json(json_text.c_str(), &back) == SUPAULI_OK);
  CHECK(supauli_params_get_b(back, 28, &v) == SUPAULI_OK);
  CHECK(v == 0.5);
  supauli_params_free(back);

  char* terms = nullptr;
  REQUIRE(supauli_params_render_generator_terms(p, "text", &terms) ==
          SUPAULI_OK);
  CHECK(take(terms) == "1/4 X1 - X9 + 1/2 X63\n");

  supauli_matrix* h = nullptr;
  REQUIRE(supauli_build_element(p, &h) == SUPAULI_OK);
  supauli_params* extracted = nullptr;
  REQUIRE(supauli_extract_params(h, 0, &extracted) == SUPAULI_OK);
  CHECK(supauli_params_get_psi(extracted, 1, &v) == SUPAULI_OK);
  CHECK(v == 0.25);
  supauli_params_free(extracted);

  supauli_matrix* u = nullptr;
  REQUIRE(supauli_exponentiate(p, SUPAULI_EXP_PHYSICS_UNITARY, &u) ==
          SUPAULI_OK);
  double diag_imag = 0, trace_abs = 0, conj = 0;
  int pass = 0;
  CHECK(supauli_check_su_conditions(h, 0, &diag_imag, &trace_abs, &conj,
                                    &pass) == SUPAULI_OK);
  CHECK(pass == 1);
  // A unitary exponential is not Hermitian traceless.
  CHECK(supauli_check_su_conditions(u, 0, &diag_imag, &trace_abs, &conj,
                                    &pass) == SUPAULI_OK);
  CHECK(pass == 0);
  char* report = nullptr;
  REQUIRE(supauli_check_su_conditions_render(h, 0, "text", &report) ==
          SUPAULI_OK);
  CHECK(take(report).find("pass") != std::string::npos);

  supauli_matrix_free(u);
  supauli_matrix_free(h);
  supauli_params_free(p);
}

TEST_CASE("extract_params contract violations through the C API") {
  const double data[8] = {1, 0, 0, 0, 0, 0, 1, 0};  // [[1, 0], [0, 1]]
  supauli_matrix* identity = nullptr;
  REQUIRE(supauli_matrix_create(2, data, &identity) == SUPAULI_OK);
  supauli_params* p = nullptr;
  CHECK(supauli_extract_params(identity, 0, &p) ==
        SUPAULI_ERR_CONTRACT_VIOLATION);
  CHECK(std::string(supauli_last_error()).find("(ii)") != std::string::npos);
  supauli_matrix_free(identity);
}

TEST_CASE("verify through the C API") {
  char* report = nullptr;
  CHECK(supauli_verify("identity-free", 3, 0, 1, 0, &report) == SUPAULI_OK);
  CHECK(take(report).find("ok") != std::string::npos);
  CHECK(supauli_verify("nonsense", 3, 0, 1, 0, &report) ==
        SUPAULI_ERR_INVALID_ARGUMENT);
}
