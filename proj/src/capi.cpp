#include "supauli/supauli.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "core/basis_change.hpp"
#include "core/errors.hpp"
#include "core/gellmann.hpp"
#include "core/pauli.hpp"
#include "core/render.hpp"
#include "core/su_group.hpp"
#include "core/verify.hpp"

struct supauli_pauli {
  supauli::PauliString value;
};
struct supauli_pauli_list {
  std::vector<supauli_pauli> items;
};
struct supauli_matrix {
  supauli::Matrix value;
};
struct supauli_decomposition {
  supauli::Decomposition value;
};
struct supauli_params {
  supauli::SuParameters value;
};
struct supauli_block {
  supauli::SectorBlock value;
};
struct supauli_table {
  std::vector<supauli::ClassificationRow> value;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
int guarded(Fn&& fn) noexcept {
  try {
    fn();
    return SUPAULI_OK;
  } catch (const supauli::Error& e) {
    g_last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SUPAULI_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SUPAULI_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) supauli::fail(supauli::ErrorCode::InvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

supauli::OutputFormat format_of(const char* format) {
  require(format != nullptr, "format must not be NULL");
  return supauli::parse_format(format);
}

double* psi_slot(supauli_params* p, int i) {
  require(p != nullptr, "p must not be NULL");
  require(i >= 1 && i <= p->value.n - 1, "psi position out of range");
  return &p->value.psi[static_cast<std::size_t>(i - 1)];
}

double* pair_slot(std::vector<double>& v, int t) {
  require(t >= 1 && t <= static_cast<int>(v.size()),
          "pair position out of range");
  return &v[static_cast<std::size_t>(t - 1)];
}

}  // namespace

extern "C" {

const char* supauli_version(void) { return "0.1.0"; }

const char* supauli_status_name(int status) {
  switch (status) {
    case SUPAULI_OK: return "ok";
    case SUPAULI_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case SUPAULI_ERR_RESOURCE_LIMIT: return "resource-limit";
    case SUPAULI_ERR_OUT_OF_SPAN: return "out-of-span";
    case SUPAULI_ERR_UNSUPPORTED_DIMENSION: return "unsupported-dimension";
    case SUPAULI_ERR_CONTRACT_VIOLATION: return "contract-violation";
    case SUPAULI_ERR_PARSE: return "parse-error";
    case SUPAULI_ERR_VERIFICATION_FAILED: return "verification-failed";
    case SUPAULI_ERR_INTERNAL: return "internal-error";
  }
  return "unknown-status";
}

const char* supauli_last_error(void) { return g_last_error.c_str(); }

void supauli_free(void* buffer) { std::free(buffer); }

/* ---------------------------------------------------------- Pauli strings */

int supauli_pauli_parse(const char* word, supauli_pauli** out) {
  return guarded([&] {
    require(word && out, "word and out must not be NULL");
    *out = new supauli_pauli{supauli::PauliString::parse(word)};
  });
}

int supauli_pauli_from_labels(const uint8_t* labels, int m,
                              supauli_pauli** out) {
  return guarded([&] {
    require(labels && out, "labels and out must not be NULL");
    require(m >= 1, "label count must be >= 1");
    std::vector<supauli::PauliLabel> v;
    v.reserve(m);
    for (int q = 0; q < m; ++q) {
      require(labels[q] <= 3, "labels must be 0..3 (I, X, Y, Z)");
      v.push_back(static_cast<supauli::PauliLabel>(labels[q]));
    }
    *out = new supauli_pauli{supauli::PauliString(v)};
  });
}

int supauli_pauli_from_masks(int m, uint64_t flip_mask, uint64_t z_mask,
                             supauli_pauli** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    *out = new supauli_pauli{
        supauli::PauliString::from_masks(m, flip_mask, z_mask)};
  });
}

void supauli_pauli_free(supauli_pauli* p) { delete p; }

int supauli_pauli_num_qubits(const supauli_pauli* p) {
  return p ? p->value.num_qubits() : 0;
}

uint64_t supauli_pauli_flip_mask(const supauli_pauli* p) {
  return p ? p->value.flip_mask() : 0;
}

uint64_t supauli_pauli_z_mask(const supauli_pauli* p) {
  return p ? p->value.z_mask() : 0;
}

int supauli_pauli_y_count(const supauli_pauli* p) {
  return p ? p->value.y_count() : 0;
}

int supauli_pauli_label(const supauli_pauli* p, int factor, int* out) {
  return guarded([&] {
    require(p && out, "p and out must not be NULL");
    *out = static_cast<int>(p->value.label(factor));
  });
}

int supauli_pauli_str(const supauli_pauli* p, char** out) {
  return guarded([&] {
    require(p && out, "p and out must not be NULL");
    *out = copy_string(p->value.str());
  });
}

int supauli_pauli_classify(const supauli_pauli* p, char** form_out) {
  return guarded([&] {
    require(p && form_out, "p and form_out must not be NULL");
    *form_out = copy_string(supauli::classify_form(p->value).str());
  });
}

int supauli_classify_render(const supauli_pauli* p, const char* format,
                            char** out) {
  return guarded([&] {
    require(p && out, "p and out must not be NULL");
    *out = copy_string(
        supauli::render_classify(p->value, format_of(format)));
  });
}

int supauli_form_parse(const char* form, char** canonical_out, int* m_out,
                       int* od_count_out) {
  return guarded([&] {
    require(form != nullptr, "form must not be NULL");
    const auto tag = supauli::FormTag::parse(form);
    if (canonical_out) *canonical_out = copy_string(tag.str());
    if (m_out) *m_out = tag.m;
    if (od_count_out) *od_count_out = tag.od_count();
  });
}

int supauli_pauli_materialize(const supauli_pauli* p, supauli_matrix** out) {
  return guarded([&] {
    require(p && out, "p and out must not be NULL");
    *out = new supauli_matrix{supauli::materialize(p->value)};
  });
}

int supauli_enumerate(int m, const char* form, supauli_pauli_list** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    const auto strings = form == nullptr
                             ? supauli::enumerate_strings(m)
                             : supauli::enumerate_strings(
                                   m, supauli::FormTag::parse(form));
    auto list = std::make_unique<supauli_pauli_list>();
    list->items.reserve(strings.size());
    for (const auto& p : strings) list->items.push_back({p});
    *out = list.release();
  });
}

void supauli_pauli_list_free(supauli_pauli_list* list) { delete list; }

size_t supauli_pauli_list_size(const supauli_pauli_list* list) {
  return list ? list->items.size() : 0;
}

const supauli_pauli* supauli_pauli_list_get(const supauli_pauli_list* list,
                                            size_t index) {
  if (!list || index >= list->items.size()) return nullptr;
  return &list->items[index];
}

/* ----------------------------------------------------------- dense matrix */

int supauli_matrix_create(int dim, const double* data, supauli_matrix** out) {
  return guarded([&] {
    require(data && out, "data and out must not be NULL");
    require(dim >= 1, "dimension must be >= 1");
    supauli::Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        const std::size_t base = 2 * (static_cast<std::size_t>(r) * dim + c);
        m(r, c) = supauli::Complex(data[base], data[base + 1]);
      }
    *out = new supauli_matrix{std::move(m)};
  });
}

void supauli_matrix_free(supauli_matrix* m) { delete m; }

int supauli_matrix_dim(const supauli_matrix* m) {
  return m ? static_cast<int>(m->value.rows()) : 0;
}

int supauli_matrix_get(const supauli_matrix* m, int row, int col, double* re,
                       double* im) {
  return guarded([&] {
    require(m && re && im, "m, re and im must not be NULL");
    require(row >= 0 && row < m->value.rows() && col >= 0 &&
                col < m->value.cols(),
            "matrix index out of range");
    *re = m->value(row, col).real();
    *im = m->value(row, col).imag();
  });
}

int supauli_matrix_copy_data(const supauli_matrix* m, double* out) {
  return guarded([&] {
    require(m && out, "m and out must not be NULL");
    const auto dim = m->value.rows();
    for (Eigen::Index r = 0; r < dim; ++r)
      for (Eigen::Index c = 0; c < dim; ++c) {
        const std::size_t base = 2 * (static_cast<std::size_t>(r) * dim + c);
        out[base] = m->value(r, c).real();
        out[base + 1] = m->value(r, c).imag();
      }
  });
}

int supauli_matrix_hs_inner(const supauli_matrix* a, const supauli_matrix* b,
                            double* re, double* im) {
  return guarded([&] {
    require(a && b && re && im, "a, b, re and im must not be NULL");
    const auto inner = supauli::hs_inner(a->value, b->value);
    *re = inner.real();
    *im = inner.imag();
  });
}

int supauli_matrix_max_abs_diff(const supauli_matrix* a,
                                const supauli_matrix* b, double* out) {
  return guarded([&] {
    require(a && b && out, "a, b and out must not be NULL");
    require(a->value.rows() == b->value.rows() &&
                a->value.cols() == b->value.cols(),
            "matrix dimensions differ");
    *out = (a->value - b->value).cwiseAbs().maxCoeff();
  });
}

int supauli_matrix_render(const supauli_matrix* m, const char* format,
                          char** out) {
  return guarded([&] {
    require(m && out, "m and out must not be NULL");
    *out = copy_string(supauli::render_matrix(m->value, format_of(format)));
  });
}

int supauli_matrix_from_json(const char* json_text, supauli_matrix** out) {
  return guarded([&] {
    require(json_text && out, "json_text and out must not be NULL");
    *out = new supauli_matrix{supauli::matrix_from_json(json_text)};
  });
}

/* -------------------------------------------------------------- generators */

int supauli_free_parameter_count(int n, int* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    *out = supauli::free_parameter_count(n);
  });
}

int supauli_index_decode(int n, int flat, int* family, int* pos1, int* pos2) {
  return guarded([&] {
    require(family && pos1 && pos2, "family, pos1 and pos2 must not be NULL");
    const auto idx = supauli::index_to_position(n, flat);
    *family = static_cast<int>(idx.family);
    if (idx.family == supauli::GeneratorFamily::Diagonal) {
      *pos1 = idx.i;
      *pos2 = 0;
    } else {
      *pos1 = idx.j;
      *pos2 = idx.k;
    }
  });
}

int supauli_index_encode(int n, int family, int pos1, int pos2, int* flat) {
  return guarded([&] {
    require(flat != nullptr, "flat must not be NULL");
    switch (family) {
      case SUPAULI_FAMILY_DIAGONAL:
        *flat = supauli::diagonal_index(n, pos1).flat;
        return;
      case SUPAULI_FAMILY_SYMMETRIC:
        *flat = supauli::offdiagonal_index(
                    n, supauli::GeneratorFamily::SymmetricReal, pos1, pos2)
                    .flat;
        return;
      case SUPAULI_FAMILY_ANTISYMMETRIC:
        *flat = supauli::offdiagonal_index(
                    n, supauli::GeneratorFamily::AntisymmetricImaginary, pos1,
                    pos2)
                    .flat;
        return;
    }
    supauli::fail(supauli::ErrorCode::InvalidArgument,
                  "family must be 0 (diagonal), 1 (symmetric) or 2 "
                  "(antisymmetric)");
  });
}

int supauli_generator_parse(int n, const char* spec, int* flat) {
  return guarded([&] {
    require(spec && flat, "spec and flat must not be NULL");
    *flat = supauli::parse_generator_spec(n, spec).flat;
  });
}

int supauli_generator(int n, int flat, supauli_matrix** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    *out = new supauli_matrix{supauli::generator(n, flat)};
  });
}

int supauli_orthogonal_diagonal(int n, int l, supauli_matrix** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    require(l >= 1 && l <= n - 1, "l must be in 1..n-1");
    *out = new supauli_matrix{supauli::orthogonal_diagonal_basis(n)
                                  [static_cast<std::size_t>(l - 1)]};
  });
}

int supauli_derivative_check(const supauli_matrix* x, double h, double* out) {
  return guarded([&] {
    require(x && out, "x and out must not be NULL");
    *out = supauli::derivative_check(x->value, h);
  });
}

/* ---------------------------------------------------------- decomposition */

int supauli_decomposition_create(int m, supauli_decomposition** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    *out = new supauli_decomposition{supauli::Decomposition(m)};
  });
}

void supauli_decomposition_free(supauli_decomposition* d) { delete d; }

int supauli_decomposition_num_qubits(const supauli_decomposition* d) {
  return d ? d->value.num_qubits() : 0;
}

size_t supauli_decomposition_size(const supauli_decomposition* d) {
  return d ? d->value.size() : 0;
}

int supauli_decomposition_set(supauli_decomposition* d, const char* word,
                              double re, double im) {
  return guarded([&] {
    require(d && word, "d and word must not be NULL");
    d->value.set(supauli::PauliString::parse(word), supauli::Complex(re, im));
  });
}

int supauli_decomposition_coefficient(const supauli_decomposition* d,
                                      const char* word, double* re,
                                      double* im) {
  return guarded([&] {
    require(d && word && re && im, "d, word, re and im must not be NULL");
    const auto c =
        d->value.coefficient(supauli::PauliString::parse(word));
    *re = c.real();
    *im = c.imag();
  });
}

int supauli_decomposition_term(const supauli_decomposition* d, size_t index,
                               char** word_out, double* re, double* im) {
  return guarded([&] {
    require(d && word_out && re && im,
            "d, word_out, re and im must not be NULL");
    require(index < d->value.size(), "term index out of range");
    auto it = d->value.terms().begin();
    std::advance(it, static_cast<std::ptrdiff_t>(index));
    *word_out = copy_string(it->first.str());
    *re = it->second.real();
    *im = it->second.imag();
  });
}

int supauli_decomposition_render(const supauli_decomposition* d,
                                 const char* format, char** out) {
  return guarded([&] {
    require(d && out, "d and out must not be NULL");
    *out = copy_string(
        supauli::render_decomposition(d->value, format_of(format)));
  });
}

int supauli_decomposition_from_json(const char* json_text,
                                    supauli_decomposition** out) {
  return guarded([&] {
    require(json_text && out, "json_text and out must not be NULL");
    *out = new supauli_decomposition{
        supauli::decomposition_from_json(json_text)};
  });
}

int supauli_decompose(const supauli_matrix* m, int fast,
                      supauli_decomposition** out) {
  return guarded([&] {
    require(m && out, "m and out must not be NULL");
    *out = new supauli_decomposition{
        fast ? supauli::fast_decompose(m->value)
             : supauli::decompose(m->value)};
  });
}

int supauli_compose(const supauli_decomposition* d, supauli_matrix** out) {
  return guarded([&] {
    require(d && out, "d and out must not be NULL");
    *out = new supauli_matrix{supauli::compose(d->value)};
  });
}

int supauli_generator_in_pauli(int n, int flat, supauli_decomposition** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    *out = new supauli_decomposition{
        supauli::generator_in_pauli(supauli::index_to_position(n, flat))};
  });
}

int supauli_pauli_in_generators(const supauli_pauli* p, int** flats_out,
                                double** coeffs_out, size_t* count_out) {
  return guarded([&] {
    require(p && flats_out && coeffs_out && count_out,
            "p, flats_out, coeffs_out and count_out must not be NULL");
    const auto terms = supauli::pauli_in_generators(p->value);
    auto* flats = static_cast<int*>(std::malloc(sizeof(int) * terms.size()));
    auto* coeffs =
        static_cast<double*>(std::malloc(sizeof(double) * terms.size()));
    if (!flats || !coeffs) {
      std::free(flats);
      std::free(coeffs);
      throw std::bad_alloc();
    }
    std::size_t i = 0;
    for (const auto& [flat, coeff] : terms) {
      flats[i] = flat;
      coeffs[i] = coeff;
      ++i;
    }
    *flats_out = flats;
    *coeffs_out = coeffs;
    *count_out = terms.size();
  });
}

/* ------------------------------------------------------------ sector block */

int supauli_sector_block(const char* form, int part, supauli_block** out) {
  return guarded([&] {
    require(form && out, "form and out must not be NULL");
    require(part == SUPAULI_PART_REAL || part == SUPAULI_PART_IMAGINARY,
            "part must be 0 (real) or 1 (imaginary)");
    *out = new supauli_block{supauli::sector_block(
        supauli::FormTag::parse(form),
        part == SUPAULI_PART_REAL ? supauli::SectorPart::Real
                                  : supauli::SectorPart::Imaginary)};
  });
}

void supauli_block_free(supauli_block* b) { delete b; }

int supauli_block_size(const supauli_block* b) {
  return b ? b->value.size : 0;
}

int supauli_block_entry(const supauli_block* b, int row, int col, int* out) {
  return guarded([&] {
    require(b && out, "b and out must not be NULL");
    *out = b->value.entry(row, col);
  });
}

int supauli_block_scale_den(const supauli_block* b) {
  return b ? b->value.scale_denominator() : 0;
}

int supauli_block_row_string(const supauli_block* b, int row, char** out) {
  return guarded([&] {
    require(b && out, "b and out must not be NULL");
    require(row >= 0 && row < b->value.size, "row out of range");
    *out = copy_string(
        b->value.row_strings[static_cast<std::size_t>(row)].str());
  });
}

int supauli_block_column_index(const supauli_block* b, int col, int* out) {
  return guarded([&] {
    require(b && out, "b and out must not be NULL");
    require(col >= 0 && col < b->value.size, "column out of range");
    *out = b->value.column_indices[static_cast<std::size_t>(col)];
  });
}

int supauli_block_render(const supauli_block* b, const char* format,
                         char** out) {
  return guarded([&] {
    require(b && out, "b and out must not be NULL");
    *out = copy_string(supauli::render_block(b->value, format_of(format)));
  });
}

/* ---------------------------------------------------- classification table */

int supauli_table_create(int m, supauli_table** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    *out = new supauli_table{supauli::classification_table(m)};
  });
}

void supauli_table_free(supauli_table* t) { delete t; }

int supauli_table_num_forms(const supauli_table* t) {
  return t ? static_cast<int>(t->value.size()) : 0;
}

int supauli_table_form(const supauli_table* t, int row, char** out) {
  return guarded([&] {
    require(t && out, "t and out must not be NULL");
    require(row >= 0 && row < static_cast<int>(t->value.size()),
            "row out of range");
    *out =
        copy_string(t->value[static_cast<std::size_t>(row)].form.str());
  });
}

int supauli_table_indices(const supauli_table* t, int row, int cell,
                          int** out, size_t* count_out) {
  return guarded([&] {
    require(t && out && count_out, "t, out and count_out must not be NULL");
    require(row >= 0 && row < static_cast<int>(t->value.size()),
            "row out of range");
    const auto& r = t->value[static_cast<std::size_t>(row)];
    const std::vector<int>* cellv = nullptr;
    switch (cell) {
      case SUPAULI_CELL_DIAGONAL: cellv = &r.diagonal; break;
      case SUPAULI_CELL_REAL: cellv = &r.real; break;
      case SUPAULI_CELL_IMAGINARY: cellv = &r.imaginary; break;
      default:
        supauli::fail(supauli::ErrorCode::InvalidArgument,
                      "cell must be 0 (diagonal), 1 (real) or 2 (imaginary)");
    }
    auto* indices =
        static_cast<int*>(std::malloc(sizeof(int) * cellv->size()));
    if (!indices && !cellv->empty()) throw std::bad_alloc();
    std::copy(cellv->begin(), cellv->end(), indices);
    *out = indices;
    *count_out = cellv->size();
  });
}

int supauli_table_render(const supauli_table* t, const char* format,
                         char** out) {
  return guarded([&] {
    require(t && out, "t and out must not be NULL");
    *out = copy_string(supauli::render_table(t->value, format_of(format)));
  });
}

/* -------------------------------------------------------------- parameters */

int supauli_params_create(int n, supauli_params** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    *out = new supauli_params{supauli::SuParameters::zero(n)};
  });
}

void supauli_params_free(supauli_params* p) { delete p; }

int supauli_params_n(const supauli_params* p) { return p ? p->value.n : 0; }

int supauli_params_set_psi(supauli_params* p, int i, double value) {
  return guarded([&] { *psi_slot(p, i) = value; });
}

int supauli_params_set_a(supauli_params* p, int t, double value) {
  return guarded([&] {
    require(p != nullptr, "p must not be NULL");
    *pair_slot(p->value.a, t) = value;
  });
}

int supauli_params_set_b(supauli_params* p, int t, double value) {
  return guarded([&] {
    require(p != nullptr, "p must not be NULL");
    *pair_slot(p->value.b, t) = value;
  });
}

int supauli_params_get_psi(const supauli_params* p, int i, double* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    *out = *psi_slot(const_cast<supauli_params*>(p), i);
  });
}

int supauli_params_get_a(const supauli_params* p, int t, double* out) {
  return guarded([&] {
    require(p && out, "p and out must not be NULL");
    *out = *pair_slot(const_cast<supauli_params*>(p)->value.a, t);
  });
}

int supauli_params_get_b(const supauli_params* p, int t, double* out) {
  return guarded([&] {
    require(p && out, "p and out must not be NULL");
    *out = *pair_slot(const_cast<supauli_params*>(p)->value.b, t);
  });
}

int supauli_params_render(const supauli_params* p, const char* format,
                          char** out) {
  return guarded([&] {
    require(p && out, "p and out must not be NULL");
    *out = copy_string(supauli::render_params(p->value, format_of(format)));
  });
}

int supauli_params_from_json(const char* json_text, supauli_params** out) {
  return guarded([&] {
    require(json_text && out, "json_text and out must not be NULL");
    *out = new supauli_params{supauli::params_from_json(json_text)};
  });
}

int supauli_params_render_generator_terms(const supauli_params* p,
                                          const char* format, char** out) {
  return guarded([&] {
    require(p && out, "p and out must not be NULL");
    const auto& v = p->value;
    std::map<int, double> terms;
    const int n = v.n;
    for (int i = 1; i <= n - 1; ++i)
      if (v.psi[i - 1] != 0.0) terms[i] = v.psi[i - 1];
    const int pairs = n * (n - 1) / 2;
    for (int t = 1; t <= pairs; ++t) {
      if (v.a[t - 1] != 0.0) terms[(n - 1) + t] = v.a[t - 1];
      if (v.b[t - 1] != 0.0) terms[(n - 1) + pairs + t] = v.b[t - 1];
    }
    *out = copy_string(
        supauli::render_generator_terms(terms, n, format_of(format)));
  });
}

int supauli_build_element(const supauli_params* p, supauli_matrix** out) {
  return guarded([&] {
    require(p && out, "p and out must not be NULL");
    *out = new supauli_matrix{supauli::build_element(p->value)};
  });
}

int supauli_extract_params(const supauli_matrix* m, double tolerance,
                           supauli_params** out) {
  return guarded([&] {
    require(m && out, "m and out must not be NULL");
    const double tol =
        tolerance > 0 ? tolerance : supauli::kDefaultHermitianTolerance;
    *out = new supauli_params{supauli::extract_params(m->value, tol)};
  });
}

int supauli_exponentiate(const supauli_params* p, int convention,
                         supauli_matrix** out) {
  return guarded([&] {
    require(p && out, "p and out must not be NULL");
    require(convention == SUPAULI_EXP_PAPER_LITERAL ||
                convention == SUPAULI_EXP_PHYSICS_UNITARY,
            "convention must be 0 (paper-literal) or 1 (physics-unitary)");
    *out = new supauli_matrix{supauli::exponentiate(
        p->value, convention == SUPAULI_EXP_PAPER_LITERAL
                      ? supauli::ExpConvention::PaperLiteral
                      : supauli::ExpConvention::PhysicsUnitary)};
  });
}

int supauli_check_su_conditions(const supauli_matrix* m, double tolerance,
                                double* diagonal_imag_max, double* trace_abs,
                                double* conjugate_max, int* pass_out) {
  return guarded([&] {
    require(m && diagonal_imag_max && trace_abs && conjugate_max && pass_out,
            "all out parameters must not be NULL");
    const double tol =
        tolerance > 0 ? tolerance : supauli::kDefaultHermitianTolerance;
    const auto report = supauli::check_su_conditions(m->value, tol);
    *diagonal_imag_max = report.diagonal_imag_max;
    *trace_abs = report.trace_abs;
    *conjugate_max = report.conjugate_max;
    *pass_out = report.all_ok() ? 1 : 0;
  });
}

int supauli_check_su_conditions_render(const supauli_matrix* m,
                                       double tolerance, const char* format,
                                       char** out) {
  return guarded([&] {
    require(m && out, "m and out must not be NULL");
    const double tol =
        tolerance > 0 ? tolerance : supauli::kDefaultHermitianTolerance;
    *out = copy_string(supauli::render_su_report(
        supauli::check_su_conditions(m->value, tol), format_of(format)));
  });
}

/* ------------------------------------------------------------------ verify */

int supauli_verify(const char* suite, int m, int trials, uint64_t seed,
                   double tolerance, char** report_out) {
  return guarded([&] {
    require(suite && report_out, "suite and report_out must not be NULL");
    supauli::VerifyOptions options;
    options.m = m;
    if (trials > 0) options.trials = trials;
    options.seed = seed;
    if (tolerance > 0) options.tolerance = tolerance;
    const auto result = supauli::run_suite(suite, options);
    *report_out = copy_string(result.report);
    if (!result.pass)
      supauli::fail(supauli::ErrorCode::VerificationFailed,
                    "one or more checks failed");
  });
}

} /* extern "C" */
