#pragma once

#include <map>
#include <string>
#include <string_view>

#include "core/basis_change.hpp"
#include "core/pauli.hpp"
#include "core/su_group.hpp"

namespace supauli {

enum class OutputFormat { Text, Json };

OutputFormat parse_format(std::string_view name);  // "text" | "json"

// Exact symbols for small dyadic values (0, 1, -i, 1/4, 1-i, 3i/8, ...),
// decimals elsewhere.
std::string format_value(Complex c);

// Matrix JSON: {"dim": n, "entries": [[re, im], ...]} row-major.
std::string render_matrix(const Matrix& m, OutputFormat format);
Matrix matrix_from_json(const std::string& text);

// Decomposition JSON: {"m": m, "terms": [{"string": "ZIY", "re": x,
// "im": y}, ...]}, terms in canonical string order.
std::string render_decomposition(const Decomposition& d, OutputFormat format);
Decomposition decomposition_from_json(const std::string& text);

// Parameter JSON: {"n": n, "psi": [...], "a": [...], "b": [...]}.
std::string render_params(const SuParameters& p, OutputFormat format);
SuParameters params_from_json(const std::string& text);

std::string render_table(const std::vector<ClassificationRow>& rows,
                         OutputFormat format);
std::string render_block(const SectorBlock& block, OutputFormat format);

// Coefficients over generator flat indices ("X8 + X21 + ...").
std::string render_generator_terms(const std::map<int, double>& terms, int n,
                                   OutputFormat format);

std::string render_su_report(const SuConditionReport& report,
                             OutputFormat format);

std::string render_classify(const PauliString& p, OutputFormat format);

}  // namespace supauli
