#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "eaoa/code.hpp"

namespace eaoa {

struct IoError : std::exception {
  IoError(std::size_t line, std::string m)
      : line(line), msg("line " + std::to_string(line) + ": " + m) {}
  const char* what() const noexcept override { return msg.c_str(); }
  std::size_t line;
  std::string msg;
};

/*
 * Text format: [META] / [H] / [S] / [G] / [L] / [T] sections. META holds
 * `key = value` lines (name, n, e). Operator lines are a label followed by
 * whitespace-separated per-qubit cells from {I, X, Y, Z, XZ}, with an
 * optional leading phase token (+, -, i, -i) and an optional '|' before the
 * ebit columns. H may be omitted (derived from S); S may be omitted
 * (derived from H); G and L list (x, z) pairs consecutively; L may be
 * omitted (derived canonically). '#' starts a comment.
 */
EaoaqecCode read_code(std::istream& in);
EaoaqecCode read_code_file(const std::string& path);

void write_code(std::ostream& out, const EaoaqecCode& code);
void write_code_file(const std::string& path, const EaoaqecCode& code);

// One operator per line, on `num_qubits` qubits (compact or cell form).
std::vector<PauliOperator> read_error_set(std::istream& in, std::size_t num_qubits);
std::vector<PauliOperator> read_error_set_file(const std::string& path,
                                               std::size_t num_qubits);

// Per-qubit cell rendering: Y cells when the phase is canonical for them,
// XZ cells (with an explicit i^k prefix when needed) otherwise.
std::string format_cells(const PauliOperator& op, std::size_t ebits);

}  // namespace eaoa
