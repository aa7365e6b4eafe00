#include "eaoa/code_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace eaoa {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

struct Line {
  std::size_t no;
  std::string text;
};

}  // namespace

std::string format_cells(const PauliOperator& op, std::size_t ebits) {
  std::size_t n = op.num_qubits();
  int ny = 0;
  for (std::size_t q = 0; q < n; ++q)
    if (op.x(q) && op.z(q)) ++ny;
  bool canonical_y = ((op.phase_exp() - ny) % 4 + 4) % 4 == 0;
  std::string out;
  if (!canonical_y) {
    static const char* prefixes[4] = {"", "i", "-", "-i"};
    if (op.phase_exp() != 0) out += std::string(prefixes[op.phase_exp()]) + " ";
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (q > 0) out += ' ';
    if (ebits > 0 && q == n - ebits) out += "| ";
    bool xb = op.x(q), zb = op.z(q);
    if (xb && zb)
      out += canonical_y ? "Y" : "XZ";
    else if (xb)
      out += 'X';
    else if (zb)
      out += 'Z';
    else
      out += 'I';
  }
  return out;
}

EaoaqecCode read_code(std::istream& in) {
  std::map<std::string, std::vector<Line>> sections;
  std::map<std::string, std::string> meta;
  std::string section;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw IoError(lineno, "malformed section header");
      section = line.substr(1, line.size() - 2);
      if (section != "META" && section != "H" && section != "S" && section != "G" &&
          section != "L" && section != "T")
        throw IoError(lineno, "unknown section [" + section + "]");
      continue;
    }
    if (section.empty()) throw IoError(lineno, "content before the first section");
    if (section == "META") {
      auto eq = line.find('=');
      if (eq == std::string::npos) throw IoError(lineno, "META lines are key = value");
      meta[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    } else {
      sections[section].push_back(Line{lineno, line});
    }
  }
  if (!meta.count("n")) throw IoError(lineno, "META is missing n");
  std::size_t n = 0, e = 0;
  try {
    n = std::stoul(meta.at("n"));
    if (meta.count("e")) e = std::stoul(meta.at("e"));
  } catch (const std::exception&) {
    throw IoError(lineno, "META n / e must be integers");
  }
  if (n == 0) throw IoError(lineno, "n must be positive");

  auto parse_section = [&](const std::string& tag) {
    std::vector<PauliOperator> ops;
    for (const Line& l : sections[tag]) {
      std::istringstream ss(l.text);
      std::string label;
      ss >> label;
      std::string rest;
      std::getline(ss, rest);
      rest = trim(rest);
      if (rest.empty()) throw IoError(l.no, "operator line is missing cells");
      // Operators may be written on n or on n+e columns.
      try {
        ops.push_back(parse_pauli(rest, n + e));
      } catch (const ParseError&) {
        try {
          ops.push_back(parse_pauli(rest, n));
        } catch (const ParseError& p2) {
          throw IoError(l.no, p2.msg);
        }
      }
    }
    return ops;
  };

  std::vector<PauliOperator> h_ops = parse_section("H");
  std::vector<PauliOperator> s_ops = parse_section("S");
  std::vector<PauliOperator> g_ops = parse_section("G");
  std::vector<PauliOperator> l_ops = parse_section("L");
  std::vector<PauliOperator> t_ops = parse_section("T");
  if (h_ops.empty() && s_ops.empty())
    throw IoError(lineno, "at least one of [H] or [S] is required");
  if (h_ops.empty())
    for (const PauliOperator& s0 : s_ops) h_ops.push_back(s0.restricted_prefix(n));
  try {
    EaoaqecCode code = make_code(n, h_ops, g_ops, l_ops, t_ops, s_ops,
                                 meta.count("name") ? meta.at("name") : "");
    if (code.e != e && meta.count("e"))
      throw IoError(lineno, "META e = " + std::to_string(e) +
                                " but the frame group has " + std::to_string(code.e) +
                                " symplectic pairs");
    return code;
  } catch (const CodeError& err) {
    throw IoError(lineno, err.msg);
  } catch (const ParseError& err) {
    throw IoError(lineno, err.msg);
  }
}

EaoaqecCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(0, "cannot open '" + path + "'");
  return read_code(in);
}

void write_code(std::ostream& out, const EaoaqecCode& code) {
  out << "[META]\n";
  if (!code.name.empty()) out << "name = " << code.name << "\n";
  out << "n = " << code.n << "\n";
  out << "e = " << code.e << "\n";
  out << "[H]\n";
  for (std::size_t i = 0; i < code.h_group.size(); ++i)
    out << "h" << i + 1 << "  " << format_cells(code.h_group[i], 0) << "\n";
  out << "[S]\n";
  for (std::size_t i = 0; i < code.s_group.size(); ++i)
    out << "S" << i + 1 << "  " << format_cells(code.s_group[i], code.e) << "\n";
  if (!code.gauge_pairs.empty()) {
    out << "[G]\n";
    for (std::size_t i = 0; i < code.gauge_pairs.size(); ++i) {
      out << "GX" << i + 1 << "  " << format_cells(code.gauge_pairs[i].first, code.e)
          << "\n";
      out << "GZ" << i + 1 << "  " << format_cells(code.gauge_pairs[i].second, code.e)
          << "\n";
    }
  }
  if (!code.logical_pairs.empty()) {
    out << "[L]\n";
    for (std::size_t i = 0; i < code.logical_pairs.size(); ++i) {
      out << "LX" << i + 1 << "  " << format_cells(code.logical_pairs[i].first, code.e)
          << "\n";
      out << "LZ" << i + 1 << "  " << format_cells(code.logical_pairs[i].second, code.e)
          << "\n";
    }
  }
  out << "[T]\n";
  for (std::size_t i = 0; i < code.transversal.size(); ++i)
    out << "T" << i << "  " << format_cells(code.transversal[i], code.e) << "\n";
}

void write_code_file(const std::string& path, const EaoaqecCode& code) {
  std::ofstream out(path);
  if (!out) throw IoError(0, "cannot open '" + path + "' for writing");
  write_code(out, code);
}

std::vector<PauliOperator> read_error_set(std::istream& in, std::size_t num_qubits) {
  std::vector<PauliOperator> ops;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      ops.push_back(parse_pauli(line, num_qubits));
    } catch (const ParseError& p) {
      throw IoError(lineno, p.msg);
    }
  }
  return ops;
}

std::vector<PauliOperator> read_error_set_file(const std::string& path,
                                               std::size_t num_qubits) {
  std::ifstream in(path);
  if (!in) throw IoError(0, "cannot open '" + path + "'");
  return read_error_set(in, num_qubits);
}

}  // namespace eaoa
