#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "eaoa/catalog.hpp"
#include "eaoa/code_io.hpp"

using namespace eaoa;

namespace {

std::string rewrite(const EaoaqecCode& code) {
  std::ostringstream out;
  write_code(out, code);
  return out.str();
}

}  // namespace

TEST_CASE("write format of the six-qubit example, frozen") {
  std::string text = rewrite(catalog_code("six_qubit_example"));
  CHECK(text.find("[META]\nname = six_qubit_example\nn = 6\ne = 2\n") == 0);
  CHECK(text.find("S1  Z I I I I I | Z I\n") != std::string::npos);
  CHECK(text.find("GX1  I I I I X I | I I\n") != std::string::npos);
  CHECK(text.find("LZ1  I I I I I Z | I I\n") != std::string::npos);
  CHECK(text.find("T0  I I I I I I | I I\nT1  I I X I I I | I I\nT2  I I I X I I | I I\n") !=
        std::string::npos);
}

TEST_CASE("write then read is the identity on every catalog code") {
  for (const std::string& name : catalog_names()) {
    INFO("catalog code: ", name);
    std::string text = rewrite(catalog_code(name));
    std::istringstream in(text);
    EaoaqecCode reread = read_code(in);
    CHECK(rewrite(reread) == text);
  }
}

TEST_CASE("read derives the missing section") {
  // H only: S is built by ebit extension.
  std::istringstream h_only("[META]\nn = 2\n[H]\nH1 Z I\nH2 X I\n");
  EaoaqecCode from_h = read_code(h_only);
  CHECK(from_h.e == 1);
  CHECK(from_h.s_group.size() == 2);
  CHECK(format_cells(from_h.s_group[0], 1) == "Z I | Z");
  CHECK(format_cells(from_h.s_group[1], 1) == "X I | X");

  // S only: H is the restriction to Alice's qubits.
  std::istringstream s_only("[META]\nn = 2\ne = 1\n[S]\nS1 Z I | Z\nS2 X I | X\n");
  EaoaqecCode from_s = read_code(s_only);
  CHECK(from_s.h_group.size() == 2);
  CHECK(from_s.h_group[0].str() == "ZI");
  CHECK(from_s.h_group[1].str() == "XI");
}

TEST_CASE("comments and phases in operator lines") {
  std::istringstream in(
      "# a comment\n"
      "[META]\n"
      "n = 2  # trailing comment\n"
      "[H]\n"
      "H1 - Z Z\n"
      "H2 XZ I\n");
  EaoaqecCode code = read_code(in);
  CHECK(code.h_group[0].phase_exp() == 2);
  CHECK(code.h_group[0].str() == "-ZZ");
  CHECK(code.h_group[1].x(0));
  CHECK(code.h_group[1].z(0));
}

TEST_CASE("IoError carries the offending line number") {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_code(in);
    } catch (const IoError& e) {
      return e.line;
    }
    return std::size_t(-1);
  };
  CHECK(line_of("") == 0);                                    // META is missing n
  CHECK(line_of("[META]\nn = 2\n") == 2);                     // no [H] or [S]
  CHECK(line_of("[META]\nn = 2\n[WAT]\n") == 3);              // unknown section
  CHECK(line_of("[META]\nn = two\n") == 2);                   // non-integer n
  CHECK(line_of("[META]\nn = 2\n[H]\nH1 X Q\n") == 4);        // bad cell
}

TEST_CASE("error set parsing") {
  std::istringstream in("XI\nI Z\n# comment only\n-iY I\n");
  std::vector<PauliOperator> errs = read_error_set(in, 2);
  REQUIRE(errs.size() == 3);
  CHECK(errs[0].str() == "XI");
  CHECK(errs[1].str() == "IZ");
  CHECK(errs[2].str() == "-iYI");
}

TEST_CASE("format_cells renders Y versus XZ by phase") {
  PauliOperator y = PauliOperator::single(2, 0, 'Y');
  CHECK(format_cells(y, 0) == "Y I");
  // The same bit pattern with phase 0 is an explicit XZ cell.
  PauliOperator xz = PauliOperator::single(2, 0, 'X') * PauliOperator::single(2, 0, 'Z');
  CHECK(format_cells(xz, 0) == "XZ I");
  // Ebit separator placement.
  PauliOperator wide = PauliOperator::single(3, 2, 'Z');
  CHECK(format_cells(wide, 1) == "I I | Z");
}
