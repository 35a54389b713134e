#include "core/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "core/errors.hpp"

namespace supauli {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::Parse, "malformed JSON");
  return j;
}

// "p/q" for x = p / 2^s with small odd p, empty if x is not a small dyadic.
std::string dyadic_string(double x) {
  for (int s = 0; s <= 10; ++s) {
    const double scaled = x * static_cast<double>(1 << s);
    if (scaled == std::round(scaled) && std::abs(scaled) <= 4096.0) {
      const long long p = static_cast<long long>(scaled);
      if (s == 0) return std::to_string(p);
      return std::to_string(p) + "/" + std::to_string(1LL << s);
    }
  }
  return {};
}

std::string real_string(double x) {
  if (x == 0.0) return "0";
  const std::string dyadic = dyadic_string(x);
  if (!dyadic.empty()) return dyadic;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// "i", "-i", "3i/4", "2i", "0.3i".
std::string imag_string(double y) {
  if (y == 1.0) return "i";
  if (y == -1.0) return "-i";
  const std::string dyadic = dyadic_string(y);
  if (!dyadic.empty()) {
    const auto slash = dyadic.find('/');
    if (slash == std::string::npos) return dyadic + "i";
    return dyadic.substr(0, slash) + "i/" + dyadic.substr(slash + 1);
  }
  return real_string(y) + "i";
}

std::string json_dump(const json& j) { return j.dump(2) + "\n"; }

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      entries.push_back({m(r, c).real(), m(r, c).imag()});
  return json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  fail(ErrorCode::InvalidArgument,
       "unknown output format '" + std::string(name) +
           "' (expected text or json)");
}

std::string format_value(Complex c) {
  const double re = c.real();
  const double im = c.imag();
  if (re == 0.0 && im == 0.0) return "0";
  if (im == 0.0) return real_string(re);
  if (re == 0.0) return imag_string(im);
  std::string out = real_string(re);
  if (im < 0)
    out += "-" + imag_string(-im);
  else
    out += "+" + imag_string(im);
  return out;
}

std::string render_matrix(const Matrix& m, OutputFormat format) {
  if (format == OutputFormat::Json) return json_dump(matrix_to_json(m));
  std::vector<std::string> cells;
  cells.reserve(m.size());
  std::size_t width = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      cells.push_back(format_value(m(r, c)));
      width = std::max(width, cells.back().size());
    }
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto& cell = cells[static_cast<std::size_t>(r * m.cols() + c)];
      if (c) out += "  ";
      out.append(width - cell.size(), ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

Matrix matrix_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries") ||
      !j["dim"].is_number_integer() || !j["entries"].is_array())
    fail(ErrorCode::Parse,
         "matrix JSON must be {\"dim\": n, \"entries\": [[re, im], ...]}");
  const auto dim = j["dim"].get<Eigen::Index>();
  if (dim < 1) fail(ErrorCode::Parse, "matrix dimension must be >= 1");
  const auto& entries = j["entries"];
  if (static_cast<Eigen::Index>(entries.size()) != dim * dim)
    fail(ErrorCode::Parse,
         "expected " + std::to_string(dim * dim) + " entries, got " +
             std::to_string(entries.size()));
  Matrix m(dim, dim);
  for (Eigen::Index idx = 0; idx < dim * dim; ++idx) {
    const auto& e = entries[static_cast<std::size_t>(idx)];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number())
      fail(ErrorCode::Parse, "each matrix entry must be an [re, im] pair");
    m(idx / dim, idx % dim) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

std::string render_decomposition(const Decomposition& d, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json terms = json::array();
    for (const auto& [p, c] : d.terms())
      terms.push_back(
          {{"string", p.str()}, {"re", c.real()}, {"im", c.imag()}});
    return json_dump(json{{"m", d.num_qubits()}, {"terms", std::move(terms)}});
  }
  if (d.terms().empty()) return "0\n";
  std::string out;
  for (const auto& [p, c] : d.terms()) {
    if (!out.empty()) {
      if (c.imag() == 0.0 && c.real() < 0) {
        out += " - " + format_value(-c) + " " + p.str();
        continue;
      }
      out += " + ";
    }
    const std::string value = format_value(c);
    if (value == "1")
      out += p.str();
    else if (value == "-1")
      out += "-" + p.str();
    else if (c.real() != 0.0 && c.imag() != 0.0)
      out += "(" + value + ") " + p.str();
    else
      out += value + " " + p.str();
  }
  return out + "\n";
}

Decomposition decomposition_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("m") || !j.contains("terms") ||
      !j["m"].is_number_integer() || !j["terms"].is_array())
    fail(ErrorCode::Parse,
         "decomposition JSON must be {\"m\": m, \"terms\": [...]}");
  Decomposition d(j["m"].get<int>());
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("string") ||
        !term["string"].is_string())
      fail(ErrorCode::Parse, "each term needs a \"string\" field");
    const double re = term.value("re", 0.0);
    const double im = term.value("im", 0.0);
    d.add(PauliString::parse(term["string"].get<std::string>()),
          Complex(re, im));
  }
  return d;
}

std::string render_params(const SuParameters& p, OutputFormat format) {
  if (format == OutputFormat::Json)
    return json_dump(
        json{{"n", p.n}, {"psi", p.psi}, {"a", p.a}, {"b", p.b}});
  std::ostringstream out;
  out << "n = " << p.n << "\n";
  const auto line = [&out](const char* name, const std::vector<double>& v) {
    out << name << ":";
    for (double x : v) out << " " << real_string(x);
    out << "\n";
  };
  line("psi", p.psi);
  line("a", p.a);
  line("b", p.b);
  return out.str();
}

SuParameters params_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    fail(ErrorCode::Parse,
         "parameter JSON must be {\"n\": n, \"psi\": [...], \"a\": [...], "
         "\"b\": [...]}");
  SuParameters p;
  p.n = j["n"].get<int>();
  const auto read = [&j](const char* key) {
    if (!j.contains(key) || !j[key].is_array())
      fail(ErrorCode::Parse, std::string("missing or non-array \"") + key +
                                 "\" in parameter JSON");
    return j[key].get<std::vector<double>>();
  };
  p.psi = read("psi");
  p.a = read("a");
  p.b = read("b");
  p.validate();
  return p;
}

std::string render_table(const std::vector<ClassificationRow>& rows,
                         OutputFormat format) {
  if (format == OutputFormat::Json) {
    json forms = json::array();
    int m = rows.empty() ? 0 : rows.front().form.m;
    for (const auto& row : rows)
      forms.push_back({{"form", row.form.str()},
                       {"diagonal", row.diagonal},
                       {"real", row.real},
                       {"imaginary", row.imaginary}});
    return json_dump(json{{"m", m}, {"forms", std::move(forms)}});
  }
  std::string out;
  const auto list = [](const std::vector<int>& indices) {
    std::string s;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i) s += ", ";
      s += "X" + std::to_string(indices[i]);
    }
    return s;
  };
  for (const auto& row : rows) {
    out += row.form.pretty() + " form generator:\n";
    if (!row.diagonal.empty())
      out += "  Diagonal : " + list(row.diagonal) + "\n";
    if (!row.real.empty()) out += "  Real part : " + list(row.real) + "\n";
    if (!row.imaginary.empty())
      out += "  Imaginary part : " + list(row.imaginary) + "\n";
  }
  return out;
}

std::string render_block(const SectorBlock& block, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json g = json::array();
    for (int r = 0; r < block.size; ++r) {
      json row = json::array();
      for (int c = 0; c < block.size; ++c) row.push_back(block.entry(r, c));
      g.push_back(std::move(row));
    }
    json rows = json::array();
    for (const auto& p : block.row_strings) rows.push_back(p.str());
    return json_dump(json{
        {"form", block.form.str()},
        {"part", block.part == SectorPart::Real ? "real" : "imaginary"},
        {"size", block.size},
        {"rows", std::move(rows)},
        {"columns", block.column_indices},
        {"g", std::move(g)},
        {"inverse_scale", {{"num", 1}, {"den", block.scale_denominator()}}}});
  }
  std::ostringstream out;
  out << "form: " << block.form.pretty() << ", part: "
      << (block.part == SectorPart::Real ? "real" : "imaginary") << "\n";
  out << "rows (strings):";
  for (const auto& p : block.row_strings) out << " " << p.str();
  out << "\ncolumns (generators):";
  for (int flat : block.column_indices) out << " X" << flat;
  out << "\n";
  for (int r = 0; r < block.size; ++r) {
    for (int c = 0; c < block.size; ++c) {
      const int v = block.entry(r, c);
      out << (c ? "  " : "") << (v < 0 ? "" : " ") << v;
    }
    out << "\n";
  }
  out << "inverse: g^T / " << block.scale_denominator() << "\n";
  out << "normalized: g / sqrt(" << block.scale_denominator()
      << ") is orthogonal (inverse = transpose)\n";
  return out.str();
}

std::string render_generator_terms(const std::map<int, double>& terms, int n,
                                   OutputFormat format) {
  if (format == OutputFormat::Json) {
    json list = json::array();
    for (const auto& [flat, coeff] : terms)
      list.push_back({{"index", flat}, {"coefficient", coeff}});
    return json_dump(json{{"n", n}, {"terms", std::move(list)}});
  }
  if (terms.empty()) return "0\n";
  std::string out;
  for (const auto& [flat, coeff] : terms) {
    const std::string name = "X" + std::to_string(flat);
    if (out.empty()) {
      if (coeff == 1.0)
        out += name;
      else if (coeff == -1.0)
        out += "-" + name;
      else
        out += real_string(coeff) + " " + name;
      continue;
    }
    if (coeff == 1.0)
      out += " + " + name;
    else if (coeff == -1.0)
      out += " - " + name;
    else if (coeff < 0)
      out += " - " + real_string(-coeff) + " " + name;
    else
      out += " + " + real_string(coeff) + " " + name;
  }
  return out + "\n";
}

std::string render_su_report(const SuConditionReport& report,
                             OutputFormat format) {
  if (format == OutputFormat::Json)
    return json_dump(json{
        {"tolerance", report.tolerance},
        {"diagonal_real",
         {{"pass", report.diagonal_real_ok()},
          {"max_violation", report.diagonal_imag_max}}},
        {"traceless",
         {{"pass", report.traceless_ok()},
          {"max_violation", report.trace_abs}}},
        {"conjugate_symmetry",
         {{"pass", report.conjugate_ok()},
          {"max_violation", report.conjugate_max}}},
        {"all_pass", report.all_ok()}});
  std::ostringstream out;
  const auto line = [&out](const char* name, bool ok, double violation) {
    out << name << ": " << (ok ? "pass" : "FAIL")
        << " (max violation " << violation << ")\n";
  };
  line("condition (i) real diagonal", report.diagonal_real_ok(),
       report.diagonal_imag_max);
  line("condition (ii) traceless", report.traceless_ok(), report.trace_abs);
  line("condition (iii) conjugate symmetry", report.conjugate_ok(),
       report.conjugate_max);
  return out.str();
}

std::string render_classify(const PauliString& p, OutputFormat format) {
  const FormTag form = classify_form(p);
  const auto mask_bits = [&p](std::uint64_t mask) {
    std::string bits(p.num_qubits(), '0');
    for (int q = 0; q < p.num_qubits(); ++q)
      if ((mask >> (p.num_qubits() - 1 - q)) & 1) bits[q] = '1';
    return bits;
  };
  if (format == OutputFormat::Json)
    return json_dump(json{{"string", p.str()},
                          {"form", form.str()},
                          {"flip_mask", mask_bits(p.flip_mask())},
                          {"z_mask", mask_bits(p.z_mask())},
                          {"y_count", p.y_count()}});
  std::ostringstream out;
  out << p.str() << ": " << form.pretty() << " (flip mask "
      << mask_bits(p.flip_mask()) << "b, z mask " << mask_bits(p.z_mask())
      << "b, y count " << p.y_count() << ")\n";
  return out.str();
}

}  // namespace supauli
