// supauli command-line tool. Everything below goes through the shared
// library's C API (supauli/supauli.h); this file only parses arguments,
// reads files and prints.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "supauli/supauli.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

// Exit carrying one of the codes above.
struct CliExit {
  int code;
};

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  throw CliExit{code};
}

// Fails the command with the library's error message unless status is OK.
void check(int status) {
  if (status != SUPAULI_OK)
    die(kExitUsage, std::string(supauli_status_name(status)) + ": " +
                        supauli_last_error());
}

struct BufferDeleter {
  void operator()(char* p) const { supauli_free(p); }
};
using Buffer = std::unique_ptr<char, BufferDeleter>;

// Runs a C call that fills a char** out parameter and returns the buffer as
// a string, failing the command on a non-OK status.
template <typename Fn>
std::string take(Fn&& fn) {
  char* buffer = nullptr;
  check(fn(&buffer));
  Buffer owned(buffer);
  return std::string(owned.get());
}

template <typename T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
using MatrixHandle =
    std::unique_ptr<supauli_matrix, HandleDeleter<supauli_matrix, supauli_matrix_free>>;
using PauliHandle =
    std::unique_ptr<supauli_pauli, HandleDeleter<supauli_pauli, supauli_pauli_free>>;
using DecompositionHandle =
    std::unique_ptr<supauli_decomposition,
                    HandleDeleter<supauli_decomposition, supauli_decomposition_free>>;
using ParamsHandle =
    std::unique_ptr<supauli_params, HandleDeleter<supauli_params, supauli_params_free>>;
using BlockHandle =
    std::unique_ptr<supauli_block, HandleDeleter<supauli_block, supauli_block_free>>;
using TableHandle =
    std::unique_ptr<supauli_table, HandleDeleter<supauli_table, supauli_table_free>>;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) die(kExitUsage, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

MatrixHandle load_matrix(const std::string& path) {
  supauli_matrix* m = nullptr;
  check(supauli_matrix_from_json(read_input(path).c_str(), &m));
  return MatrixHandle(m);
}

// Options shared across subcommands.
struct Global {
  std::string format = "text";
  double tolerance = 0;  // <= 0 selects library defaults
  int m = 3;
  int n = 8;
};

void print_matrix(const supauli_matrix* m, const Global& g) {
  std::cout << take([&](char** out) {
    return supauli_matrix_render(m, g.format.c_str(), out);
  });
}

int cmd_gen(const Global& g, const std::string& index_spec) {
  int flat = 0;
  check(supauli_generator_parse(g.n, index_spec.c_str(), &flat));
  supauli_matrix* m = nullptr;
  check(supauli_generator(g.n, flat, &m));
  print_matrix(MatrixHandle(m).get(), g);
  return kExitOk;
}

int cmd_pauli(const Global& g, const std::string& word) {
  supauli_pauli* p = nullptr;
  check(supauli_pauli_parse(word.c_str(), &p));
  PauliHandle pauli(p);
  supauli_matrix* m = nullptr;
  check(supauli_pauli_materialize(pauli.get(), &m));
  print_matrix(MatrixHandle(m).get(), g);
  return kExitOk;
}

int cmd_classify(const Global& g, const std::string& word) {
  supauli_pauli* p = nullptr;
  check(supauli_pauli_parse(word.c_str(), &p));
  PauliHandle pauli(p);
  std::cout << take([&](char** out) {
    return supauli_classify_render(pauli.get(), g.format.c_str(), out);
  });
  return kExitOk;
}

int cmd_table(const Global& g) {
  supauli_table* t = nullptr;
  check(supauli_table_create(g.m, &t));
  TableHandle table(t);
  std::cout << take([&](char** out) {
    return supauli_table_render(table.get(), g.format.c_str(), out);
  });
  return kExitOk;
}

int cmd_decompose(const Global& g, const std::string& path,
                  const std::string& basis, const std::string& algorithm) {
  const std::string input = read_input(path);

  // The input may be a dense matrix or a parameter vector.
  MatrixHandle matrix;
  ParamsHandle params;
  supauli_params* p = nullptr;
  if (supauli_params_from_json(input.c_str(), &p) == SUPAULI_OK) {
    params.reset(p);
    supauli_matrix* m = nullptr;
    check(supauli_build_element(params.get(), &m));
    matrix.reset(m);
  } else {
    supauli_matrix* m = nullptr;
    check(supauli_matrix_from_json(input.c_str(), &m));
    matrix.reset(m);
  }

  if (basis == "generator") {
    if (!params) {
      supauli_params* extracted = nullptr;
      check(supauli_extract_params(matrix.get(), g.tolerance, &extracted));
      params.reset(extracted);
    }
    std::cout << take([&](char** out) {
      return supauli_params_render_generator_terms(params.get(),
                                                   g.format.c_str(), out);
    });
    return kExitOk;
  }
  if (basis != "pauli")
    die(kExitUsage, "basis must be 'pauli' or 'generator'");

  supauli_decomposition* d = nullptr;
  check(supauli_decompose(matrix.get(), algorithm == "fast" ? 1 : 0, &d));
  DecompositionHandle decomposition(d);
  std::cout << take([&](char** out) {
    return supauli_decomposition_render(decomposition.get(),
                                        g.format.c_str(), out);
  });
  return kExitOk;
}

int cmd_compose(const Global& g, const std::string& path) {
  supauli_decomposition* d = nullptr;
  check(supauli_decomposition_from_json(read_input(path).c_str(), &d));
  DecompositionHandle decomposition(d);
  supauli_matrix* m = nullptr;
  check(supauli_compose(decomposition.get(), &m));
  print_matrix(MatrixHandle(m).get(), g);
  return kExitOk;
}

int cmd_cob(const Global& g, const std::string& form,
            const std::string& part) {
  int od_count = 0;
  const std::string canonical_form = take([&](char** out) {
    return supauli_form_parse(form.c_str(), out, nullptr, &od_count);
  });
  if (od_count == 0) {
    // The all-diagonal sector has no +-1 block; its generators E_ii - E_nn
    // overlap, and a diagonal string P decomposes as sum_i P_ii (E_ii - E_nn)
    // (see `supauli decompose`).
    std::cout << canonical_form
              << ": all-diagonal form; no +-1 change-of-basis block exists "
                 "for this sector.\n"
                 "Diagonal strings are solved over the non-orthogonal "
                 "diagonal generators instead:\n"
                 "P = sum_i P_ii (E_ii - E_nn), i = 1..n-1.\n";
    return kExitOk;
  }
  const int part_code =
      part == "imaginary" ? SUPAULI_PART_IMAGINARY : SUPAULI_PART_REAL;
  if (part != "real" && part != "imaginary")
    die(kExitUsage, "part must be 'real' or 'imaginary'");
  supauli_block* b = nullptr;
  check(supauli_sector_block(form.c_str(), part_code, &b));
  BlockHandle block(b);
  std::cout << take([&](char** out) {
    return supauli_block_render(block.get(), g.format.c_str(), out);
  });
  return kExitOk;
}

int cmd_params_count(const Global& g) {
  int count = 0;
  check(supauli_free_parameter_count(g.n, &count));
  if (g.format == "json")
    std::cout << "{\"n\": " << g.n << ", \"count\": " << count << "}\n";
  else
    std::cout << count << "\n";
  return kExitOk;
}

int cmd_params_build(const Global& g, const std::string& path) {
  supauli_params* p = nullptr;
  check(supauli_params_from_json(read_input(path).c_str(), &p));
  ParamsHandle params(p);
  supauli_matrix* m = nullptr;
  check(supauli_build_element(params.get(), &m));
  print_matrix(MatrixHandle(m).get(), g);
  return kExitOk;
}

int cmd_params_extract(const Global& g, const std::string& path) {
  MatrixHandle matrix = load_matrix(path);
  supauli_params* p = nullptr;
  check(supauli_extract_params(matrix.get(), g.tolerance, &p));
  ParamsHandle params(p);
  std::cout << take([&](char** out) {
    return supauli_params_render(params.get(), g.format.c_str(), out);
  });
  return kExitOk;
}

int cmd_exp(const Global& g, const std::string& path,
            const std::string& convention) {
  supauli_params* p = nullptr;
  check(supauli_params_from_json(read_input(path).c_str(), &p));
  ParamsHandle params(p);
  int code = SUPAULI_EXP_PHYSICS_UNITARY;
  if (convention == "paper-literal")
    code = SUPAULI_EXP_PAPER_LITERAL;
  else if (convention != "physics-unitary")
    die(kExitUsage, "convention must be 'paper-literal' or 'physics-unitary'");
  supauli_matrix* m = nullptr;
  check(supauli_exponentiate(params.get(), code, &m));
  print_matrix(MatrixHandle(m).get(), g);
  return kExitOk;
}

int cmd_verify(const Global& g, const std::string& suite, int trials,
               std::uint64_t seed) {
  char* report = nullptr;
  const int status = supauli_verify(suite.c_str(), g.m, trials, seed,
                                    g.tolerance, &report);
  if (status == SUPAULI_OK || status == SUPAULI_ERR_VERIFICATION_FAILED) {
    Buffer owned(report);
    std::cout << owned.get();
    return status == SUPAULI_OK ? kExitOk : kExitVerificationFailed;
  }
  check(status);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"su(2^m) generator bases, Pauli strings and the change of "
               "basis between them"};
  app.set_version_flag("--version", std::string(supauli_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "Output format (text or json)")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--tolerance", g.tolerance,
                 "Numeric tolerance (0 selects the default)");
  app.add_option("--m", g.m, "Qubit count")->capture_default_str();
  app.add_option("--n", g.n, "Matrix dimension")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Print one generator matrix");
  std::string index_spec;
  gen->add_option("--index", index_spec,
                  "Flat index (X8 or 8) or family:position (sym:1,2)")
      ->required();

  auto* pauli =
      app.add_subcommand("pauli", "Materialize a Pauli string literal");
  std::string pauli_word;
  pauli->add_option("string", pauli_word, "Word over {I,X,Y,Z}, e.g. ZIY")
      ->required();

  auto* classify =
      app.add_subcommand("classify", "Report the D/OD form of a string");
  std::string classify_word;
  classify->add_option("string", classify_word, "Word over {I,X,Y,Z}")
      ->required();

  auto* table = app.add_subcommand(
      "table", "Classification table: which generators live in which form");

  auto* decompose = app.add_subcommand(
      "decompose", "Expand a matrix (or parameter vector) in a basis");
  std::string decompose_input, decompose_basis = "pauli",
              decompose_algorithm = "fast";
  decompose->add_option("input", decompose_input,
                        "Matrix or parameter JSON file ('-' for stdin)")
      ->required();
  decompose->add_option("--basis", decompose_basis, "pauli or generator")
      ->check(CLI::IsMember({"pauli", "generator"}))
      ->capture_default_str();
  decompose
      ->add_option("--algorithm", decompose_algorithm,
                   "fast (Walsh transform) or naive (dense projection)")
      ->check(CLI::IsMember({"fast", "naive"}))
      ->capture_default_str();

  auto* compose = app.add_subcommand(
      "compose", "Rebuild the matrix of a Pauli decomposition");
  std::string compose_input;
  compose->add_option("input", compose_input,
                      "Decomposition JSON file ('-' for stdin)")
      ->required();

  auto* cob = app.add_subcommand(
      "cob", "Change-of-basis block of one form and part");
  std::string cob_form, cob_part = "real";
  cob->add_option("--form", cob_form, "Form string, e.g. DD-OD")->required();
  cob->add_option("--part", cob_part, "real or imaginary")
      ->capture_default_str();

  auto* params = app.add_subcommand("params", "Parameter-vector operations");
  params->require_subcommand(1);
  auto* params_count =
      params->add_subcommand("count", "Number of free parameters of su(n)");
  auto* params_build = params->add_subcommand(
      "build", "Assemble the Hermitian traceless element");
  std::string params_build_input;
  params_build
      ->add_option("input", params_build_input, "Parameter JSON file")
      ->required();
  auto* params_extract = params->add_subcommand(
      "extract", "Read the parameter vector off a matrix");
  std::string params_extract_input;
  params_extract
      ->add_option("input", params_extract_input, "Matrix JSON file")
      ->required();

  auto* exp = app.add_subcommand("exp", "Exponentiate a parameter vector");
  std::string exp_input, exp_convention = "physics-unitary";
  exp->add_option("input", exp_input, "Parameter JSON file")->required();
  exp->add_option("--convention", exp_convention,
                  "physics-unitary (exp(iH)) or paper-literal (exp(H))")
      ->check(CLI::IsMember({"physics-unitary", "paper-literal"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  std::string verify_suite;
  int verify_trials = 0;
  std::uint64_t verify_seed = 20240901;
  verify
      ->add_option("--suite", verify_suite,
                   "orthogonality, roundtrip, rank, identity-free, unitarity "
                   "or all")
      ->required();
  verify->add_option("--trials", verify_trials,
                     "Trial count for randomized checks (0 = default)");
  verify->add_option("--seed", verify_seed, "Random seed")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(g, index_spec);
    if (pauli->parsed()) return cmd_pauli(g, pauli_word);
    if (classify->parsed()) return cmd_classify(g, classify_word);
    if (table->parsed()) return cmd_table(g);
    if (decompose->parsed())
      return cmd_decompose(g, decompose_input, decompose_basis,
                           decompose_algorithm);
    if (compose->parsed()) return cmd_compose(g, compose_input);
    if (cob->parsed()) return cmd_cob(g, cob_form, cob_part);
    if (params->parsed()) {
      if (params_count->parsed()) return cmd_params_count(g);
      if (params_build->parsed()) return cmd_params_build(g, params_build_input);
      if (params_extract->parsed())
        return cmd_params_extract(g, params_extract_input);
    }
    if (exp->parsed()) return cmd_exp(g, exp_input, exp_convention);
    if (verify->parsed())
      return cmd_verify(g, verify_suite, verify_trials, verify_seed);
  } catch (const CliExit& e) {
    return e.code;
  }
  return kExitUsage;
}
