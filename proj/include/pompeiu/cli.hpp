#pragma once

#include <string>

#include "pompeiu/combinat.hpp"
#include "pompeiu/search.hpp"

namespace pompeiu {

// Parse/usage failure with the offending line when known; maps to exit 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg, long line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : msg) {}
};

// Parsed problem configuration (key-value text, see README for the format).
struct ProblemConfig {
  std::size_t dimension = 2;
  FieldDescriptor field;
  std::vector<Point> points;
  std::vector<ComplexElem> weights;
  Point target;
  SearchBudget budget;
};

ProblemConfig parse_problem(const std::string& text);
Problem to_problem(const ProblemConfig& config);

// Plain-text copy-system instances: "points = N" plus one "copy = id id ..."
// line per copy.
CopySystem parse_copy_system(const std::string& text);

// Affine systems for the core subcommand: one "row = x<id>:<coeff> ... | rhs"
// line per equation.
GenSystem parse_gen_system(const std::string& text, const FieldDescriptor& desc);

// Exit codes: 0 success/verified, 1 inconclusive/failed-verification/
// feasible-when-infeasibility-sought, 2 usage error (raised as exceptions).
struct RunResult {
  int exit_code = 0;
  std::string document;  // serialized with sorted keys, deterministic bytes
};

RunResult run_witness(const std::string& config_text);
RunResult run_verify(const std::string& document_text);
RunResult run_color(const std::string& instance_text, std::size_t d);
RunResult run_transversal(const std::string& instance_text, std::size_t m);
RunResult run_lemma2(long c, long r, long s, long t);
RunResult run_rotations(long discriminant, std::size_t k, std::size_t size);
RunResult run_prop1(const std::string& base, const std::string& weights,
                    const std::string& target, const std::string& translations,
                    const std::string& dilations);
RunResult run_core(const std::string& system_text, long discriminant);
RunResult run_gallery1d(long n, double tolerance, std::size_t samples);

// Serialization helpers shared by the runners and tests.
std::string point_to_string(const Point& p);
std::optional<Point> parse_point(std::string_view text,
                                 const FieldDescriptor& desc,
                                 std::size_t dimension);
std::string certificate_document(const Problem& problem,
                                 const SearchOutcome& outcome);

// Independent re-validation of a certificate document: re-derives every
// placement row from its motion, re-checks rotation exactness and image
// interning, and recomputes the multiplier combination from scratch.  Shares
// no elimination code with the search path.
bool verify_document(const std::string& document_text, std::string* diagnostic);

}  // namespace pompeiu
