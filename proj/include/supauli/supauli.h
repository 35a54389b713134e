/*
 * supauli — su(2^m) generator bases, Pauli strings and the change of basis
 * between them, behind a plain C interface.
 *
 * Conventions:
 *   - Every fallible function returns a supauli_status (0 on success) and
 *     writes results through out parameters. On failure the out parameters
 *     are untouched and supauli_last_error() describes what went wrong
 *     (thread-local, valid until the next failing call on the same thread).
 *   - Handles are opaque; free them with the matching *_free function.
 *   - char* buffers returned through out parameters are heap-allocated and
 *     must be released with supauli_free().
 *   - Pauli string literals are words over {I,X,Y,Z}, leftmost character =
 *     leftmost tensor factor ("ZIY"). Bit q of a mask or row index is tensor
 *     factor q counted from the right.
 *   - Generator flat indices run 1..n^2-1: first the n-1 diagonal
 *     generators E_ii - E_nn, then the symmetric E_jk + E_kj and the
 *     antisymmetric -iE_jk + iE_kj families, pairs ordered row-major over
 *     the strict upper triangle.
 *   - Form strings name the per-factor diagonal / off-diagonal pattern:
 *     "D-D-OD" (separators optional, so "DDOD" and "DD-OD" also parse).
 */

#ifndef SUPAULI_H
#define SUPAULI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* ---------------------------------------------------------------- status */

typedef enum supauli_status {
  SUPAULI_OK = 0,
  SUPAULI_ERR_INVALID_ARGUMENT = 1,
  SUPAULI_ERR_RESOURCE_LIMIT = 2,
  SUPAULI_ERR_OUT_OF_SPAN = 3,
  SUPAULI_ERR_UNSUPPORTED_DIMENSION = 4,
  SUPAULI_ERR_CONTRACT_VIOLATION = 5,
  SUPAULI_ERR_PARSE = 6,
  SUPAULI_ERR_VERIFICATION_FAILED = 7,
  SUPAULI_ERR_INTERNAL = 8
} supauli_status;

const char* supauli_version(void);
const char* supauli_status_name(int status);
/* Message of the most recent failure on this thread (never NULL). */
const char* supauli_last_error(void);

/* Releases char* buffers returned by this library. */
void supauli_free(void* buffer);

/* --------------------------------------------------------------- handles */

typedef struct supauli_pauli supauli_pauli;
typedef struct supauli_pauli_list supauli_pauli_list;
typedef struct supauli_matrix supauli_matrix;
typedef struct supauli_decomposition supauli_decomposition;
typedef struct supauli_params supauli_params;
typedef struct supauli_block supauli_block;
typedef struct supauli_table supauli_table;

/* ---------------------------------------------------------- Pauli strings */

/* Labels for supauli_pauli_from_labels / supauli_pauli_label. */
enum {
  SUPAULI_LABEL_I = 0,
  SUPAULI_LABEL_X = 1,
  SUPAULI_LABEL_Y = 2,
  SUPAULI_LABEL_Z = 3
};

int supauli_pauli_parse(const char* word, supauli_pauli** out);
int supauli_pauli_from_labels(const uint8_t* labels, int m,
                              supauli_pauli** out);
int supauli_pauli_from_masks(int m, uint64_t flip_mask, uint64_t z_mask,
                             supauli_pauli** out);
void supauli_pauli_free(supauli_pauli* p);

int supauli_pauli_num_qubits(const supauli_pauli* p);
uint64_t supauli_pauli_flip_mask(const supauli_pauli* p);
uint64_t supauli_pauli_z_mask(const supauli_pauli* p);
int supauli_pauli_y_count(const supauli_pauli* p);
/* Label of tensor factor `factor`, 0 = leftmost. */
int supauli_pauli_label(const supauli_pauli* p, int factor, int* out);
int supauli_pauli_str(const supauli_pauli* p, char** out);
/* Form string of the per-factor D/OD pattern, e.g. "D-D-OD". */
int supauli_pauli_classify(const supauli_pauli* p, char** form_out);
/* Form, masks and Y count of a string as text or JSON. */
int supauli_classify_render(const supauli_pauli* p, const char* format,
                            char** out);

/* Canonicalizes a form string ("DDOD" -> "D-D-OD") and reports its factor
 * and off-diagonal counts; any output pointer may be NULL. */
int supauli_form_parse(const char* form, char** canonical_out, int* m_out,
                       int* od_count_out);

/* Dense 2^m x 2^m matrix; fails with SUPAULI_ERR_RESOURCE_LIMIT when m
 * exceeds the materialization cap (12 qubits). */
int supauli_pauli_materialize(const supauli_pauli* p, supauli_matrix** out);

/* All 4^m strings, or the 2^m strings of one form when form is non-NULL,
 * in canonical order (base-4 key with I=0, X=1, Y=2, Z=3). */
int supauli_enumerate(int m, const char* form, supauli_pauli_list** out);
void supauli_pauli_list_free(supauli_pauli_list* list);
size_t supauli_pauli_list_size(const supauli_pauli_list* list);
/* Borrowed reference, valid while the list lives; NULL when out of range. */
const supauli_pauli* supauli_pauli_list_get(const supauli_pauli_list* list,
                                            size_t index);

/* ----------------------------------------------------------- dense matrix */

/* data is row-major interleaved [re, im] pairs, 2*dim*dim doubles. */
int supauli_matrix_create(int dim, const double* data, supauli_matrix** out);
void supauli_matrix_free(supauli_matrix* m);
int supauli_matrix_dim(const supauli_matrix* m);
int supauli_matrix_get(const supauli_matrix* m, int row, int col, double* re,
                       double* im);
/* Copies the whole matrix into out (2*dim*dim doubles, row-major). */
int supauli_matrix_copy_data(const supauli_matrix* m, double* out);
/* Tr(A^dagger B). */
int supauli_matrix_hs_inner(const supauli_matrix* a, const supauli_matrix* b,
                            double* re, double* im);
int supauli_matrix_max_abs_diff(const supauli_matrix* a,
                                const supauli_matrix* b, double* out);
/* format is "text" or "json". */
int supauli_matrix_render(const supauli_matrix* m, const char* format,
                          char** out);
/* Parses {"dim": n, "entries": [[re, im], ...]}. */
int supauli_matrix_from_json(const char* json_text, supauli_matrix** out);

/* -------------------------------------------------------------- generators */

enum {
  SUPAULI_FAMILY_DIAGONAL = 0,
  SUPAULI_FAMILY_SYMMETRIC = 1,
  SUPAULI_FAMILY_ANTISYMMETRIC = 2
};

/* n^2 - 1. */
int supauli_free_parameter_count(int n, int* out);

/* Decodes a flat index into family and position: diagonal -> pos1 = i,
 * pos2 = 0; off-diagonal -> (pos1, pos2) = (j, k). */
int supauli_index_decode(int n, int flat, int* family, int* pos1, int* pos2);
/* Inverse of supauli_index_decode. */
int supauli_index_encode(int n, int family, int pos1, int pos2, int* flat);
/* Parses "X8", "8", "diag:3", "sym:1,2" or "asym:1,2". */
int supauli_generator_parse(int n, const char* spec, int* flat);

int supauli_generator(int n, int flat, supauli_matrix** out);
/* l-th orthogonal traceless diagonal matrix, diag(1,..,1,-l,0,..,0),
 * l = 1..n-1. */
int supauli_orthogonal_diagonal(int n, int l, supauli_matrix** out);
/* Max-norm of (exp(h X) - I)/h - X. */
int supauli_derivative_check(const supauli_matrix* x, double h, double* out);

/* ---------------------------------------------------------- decomposition */

int supauli_decomposition_create(int m, supauli_decomposition** out);
void supauli_decomposition_free(supauli_decomposition* d);
int supauli_decomposition_num_qubits(const supauli_decomposition* d);
size_t supauli_decomposition_size(const supauli_decomposition* d);
/* Sets (or, for tiny magnitudes, clears) the coefficient of a string. */
int supauli_decomposition_set(supauli_decomposition* d, const char* word,
                              double re, double im);
int supauli_decomposition_coefficient(const supauli_decomposition* d,
                                      const char* word, double* re,
                                      double* im);
/* Term i in canonical string order. */
int supauli_decomposition_term(const supauli_decomposition* d, size_t index,
                               char** word_out, double* re, double* im);
int supauli_decomposition_render(const supauli_decomposition* d,
                                 const char* format, char** out);
int supauli_decomposition_from_json(const char* json_text,
                                    supauli_decomposition** out);

/* Pauli-basis projection c_P = Tr(P M) / 2^m of a matrix whose dimension is
 * a power of two. fast = 0 materializes every string (O(8^m)); fast != 0
 * Walsh-transforms the flip-mask bands (O(m 4^m)). Identical output. */
int supauli_decompose(const supauli_matrix* m, int fast,
                      supauli_decomposition** out);
int supauli_compose(const supauli_decomposition* d, supauli_matrix** out);

/* Pauli expansion of one su(2^m) generator: 2^{m-1} terms of magnitude
 * 1/2^{m-1} within a single form. */
int supauli_generator_in_pauli(int n, int flat, supauli_decomposition** out);

/* Expansion of a Pauli string over the generators, as parallel arrays of
 * flat indices and coefficients (release both with supauli_free). The
 * all-identity string fails with SUPAULI_ERR_OUT_OF_SPAN. */
int supauli_pauli_in_generators(const supauli_pauli* p, int** flats_out,
                                double** coeffs_out, size_t* count_out);

/* ------------------------------------------------------------ sector block */

enum { SUPAULI_PART_REAL = 0, SUPAULI_PART_IMAGINARY = 1 };

/* The +-1 block relating the 2^{m-1} strings of one form and part (rows) to
 * the generators they couple (columns); rows satisfy g g^T = 2^{m-1} I.
 * All-diagonal forms have no block and fail with
 * SUPAULI_ERR_INVALID_ARGUMENT. */
int supauli_sector_block(const char* form, int part, supauli_block** out);
void supauli_block_free(supauli_block* b);
int supauli_block_size(const supauli_block* b);
int supauli_block_entry(const supauli_block* b, int row, int col, int* out);
/* Denominator of the inverse scale: inverse = g^T / den. */
int supauli_block_scale_den(const supauli_block* b);
/* Pauli string of a row / flat generator index of a column. */
int supauli_block_row_string(const supauli_block* b, int row, char** out);
int supauli_block_column_index(const supauli_block* b, int col, int* out);
int supauli_block_render(const supauli_block* b, const char* format,
                         char** out);

/* ---------------------------------------------------- classification table */

int supauli_table_create(int m, supauli_table** out);
void supauli_table_free(supauli_table* t);
/* 2^m rows, one per form, ascending off-diagonal mask. */
int supauli_table_num_forms(const supauli_table* t);
int supauli_table_form(const supauli_table* t, int row, char** out);

enum {
  SUPAULI_CELL_DIAGONAL = 0,
  SUPAULI_CELL_REAL = 1,
  SUPAULI_CELL_IMAGINARY = 2
};

/* Flat indices of one cell (release with supauli_free). */
int supauli_table_indices(const supauli_table* t, int row, int cell,
                          int** out, size_t* count_out);
int supauli_table_render(const supauli_table* t, const char* format,
                         char** out);

/* -------------------------------------------------------------- parameters */

int supauli_params_create(int n, supauli_params** out);
void supauli_params_free(supauli_params* p);
int supauli_params_n(const supauli_params* p);
/* 1-based positions: psi 1..n-1, a and b 1..n(n-1)/2. */
int supauli_params_set_psi(supauli_params* p, int i, double value);
int supauli_params_set_a(supauli_params* p, int t, double value);
int supauli_params_set_b(supauli_params* p, int t, double value);
int supauli_params_get_psi(const supauli_params* p, int i, double* out);
int supauli_params_get_a(const supauli_params* p, int t, double* out);
int supauli_params_get_b(const supauli_params* p, int t, double* out);
int supauli_params_render(const supauli_params* p, const char* format,
                          char** out);
/* Parses {"n": n, "psi": [...], "a": [...], "b": [...]}. */
int supauli_params_from_json(const char* json_text, supauli_params** out);
/* Coefficients over generator flat indices (the psi/a/b entries keyed by
 * flat index, zeros dropped), rendered like pauli_in_generators output. */
int supauli_params_render_generator_terms(const supauli_params* p,
                                          const char* format, char** out);

int supauli_build_element(const supauli_params* p, supauli_matrix** out);
/* Fails with SUPAULI_ERR_CONTRACT_VIOLATION naming the violated condition
 * when the matrix is not Hermitian traceless within the tolerance
 * (tolerance <= 0 selects the default 1e-10). */
int supauli_extract_params(const supauli_matrix* m, double tolerance,
                           supauli_params** out);

enum {
  SUPAULI_EXP_PAPER_LITERAL = 0, /* exp(H), Hermitian positive-definite */
  SUPAULI_EXP_PHYSICS_UNITARY = 1 /* exp(iH), special unitary */
};

int supauli_exponentiate(const supauli_params* p, int convention,
                         supauli_matrix** out);

/* Per-condition check of the Hermitian traceless form; *pass_out is 1 iff
 * all three violations are within the tolerance. */
int supauli_check_su_conditions(const supauli_matrix* m, double tolerance,
                                double* diagonal_imag_max, double* trace_abs,
                                double* conjugate_max, int* pass_out);
int supauli_check_su_conditions_render(const supauli_matrix* m,
                                       double tolerance, const char* format,
                                       char** out);

/* ------------------------------------------------------------------ verify */

/* Runs one invariant suite (orthogonality, roundtrip, rank, identity-free,
 * unitarity or all) and writes a line-per-check report. Returns SUPAULI_OK
 * when every check passes, SUPAULI_ERR_VERIFICATION_FAILED otherwise; the
 * report is written in both cases. trials <= 0 and tolerance <= 0 select
 * defaults (100, 1e-12). */
int supauli_verify(const char* suite, int m, int trials, uint64_t seed,
                   double tolerance, char** report_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SUPAULI_H */
