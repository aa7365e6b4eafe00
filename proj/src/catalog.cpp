#include "eaoa/catalog.hpp"

#include <initializer_list>
#include <stdexcept>

namespace eaoa {

namespace {

// Single-kind operator supported on the given 1-based qubit indices.
PauliOperator on(std::size_t n, char kind, std::initializer_list<std::size_t> qubits) {
  PauliOperator op = PauliOperator::identity(n);
  for (std::size_t q : qubits) op = op * PauliOperator::single(n, q - 1, kind);
  return op;
}

EaoaqecCode six_qubit_example() {
  const std::size_t n = 6;
  std::vector<PauliOperator> h = {
      on(n, 'Z', {1}), on(n, 'X', {1}), on(n, 'Z', {2}),
      on(n, 'X', {2}), on(n, 'Z', {3}), on(n, 'Z', {4}),
  };
  std::vector<PauliOperator> s = {
      parse_pauli("Z I I I I I | Z I", 8), parse_pauli("X I I I I I | X I", 8),
      parse_pauli("I Z I I I I | I Z", 8), parse_pauli("I X I I I I | I X", 8),
      parse_pauli("I I Z I I I | I I", 8), parse_pauli("I I I Z I I | I I", 8),
  };
  std::vector<PauliOperator> g = {on(n, 'X', {5}), on(n, 'Z', {5})};
  std::vector<PauliOperator> l = {on(n, 'X', {6}), on(n, 'Z', {6})};
  std::vector<PauliOperator> t = {PauliOperator::identity(n), on(n, 'X', {3}),
                                  on(n, 'X', {4})};
  return make_code(n, h, g, l, t, s, "six_qubit_example");
}

// [[15,1,3;6,0,1]] subsystem color code: stabilizers, gauge pairs and the
// transversal weight-15 logical pair.
struct ColorCodeParts {
  std::vector<PauliOperator> h, g, l;
};

ColorCodeParts color_code_parts() {
  const std::size_t n = 15;
  ColorCodeParts p;
  p.h = {
      on(n, 'X', {1, 3, 5, 7, 9, 11, 13, 15}),
      on(n, 'X', {1, 2, 5, 6, 9, 10, 13, 14}),
      on(n, 'X', {4, 5, 6, 7, 12, 13, 14, 15}),
      on(n, 'X', {8, 9, 10, 11, 12, 13, 14, 15}),
      on(n, 'Z', {1, 3, 5, 7, 9, 11, 13, 15}),
      on(n, 'Z', {1, 2, 5, 6, 9, 10, 13, 14}),
      on(n, 'Z', {4, 5, 6, 7, 12, 13, 14, 15}),
      on(n, 'Z', {8, 9, 10, 11, 12, 13, 14, 15}),
  };
  p.g = {
      on(n, 'X', {3, 7, 11, 15}),   on(n, 'Z', {12, 13, 14, 15}),
      on(n, 'X', {12, 13, 14, 15}), on(n, 'Z', {3, 7, 11, 15}),
      on(n, 'X', {5, 7, 13, 15}),   on(n, 'Z', {10, 11, 14, 15}),
      on(n, 'X', {10, 11, 14, 15}), on(n, 'Z', {5, 7, 13, 15}),
      on(n, 'X', {6, 7, 14, 15}),   on(n, 'Z', {9, 11, 13, 15}),
      on(n, 'X', {9, 11, 13, 15}),  on(n, 'Z', {6, 7, 14, 15}),
  };
  p.l = {on(n, 'X', {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}),
         on(n, 'Z', {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15})};
  return p;
}

EaoaqecCode color_code(const std::string& name, std::vector<PauliOperator> t) {
  ColorCodeParts p = color_code_parts();
  return make_code(15, p.h, p.g, p.l, std::move(t), {}, name);
}

EaoaqecCode subsystem_color_code() {
  return color_code("subsystem_color_code", {PauliOperator::identity(15)});
}

EaoaqecCode color_code_hybrid_gf() {
  // T_1 = X_5 Z_6, T_2 = X_9 Z_11.
  return color_code("color_code_hybrid_gf",
                    {PauliOperator::identity(15),
                     on(15, 'X', {5}) * on(15, 'Z', {6}),
                     on(15, 'X', {9}) * on(15, 'Z', {11})});
}

EaoaqecCode color_code_hybrid_ea() {
  return color_code("color_code_hybrid_ea",
                    {PauliOperator::identity(15), on(15, 'Z', {13, 14, 15})});
}

EaoaqecCode color_code_hybrid_cq() {
  return color_code("color_code_hybrid_cq",
                    {PauliOperator::identity(15),
                     parse_pauli("I I XZ Z Z I I I I I I I I I I", 15),
                     parse_pauli("I I X XZ XZ I I I I I I I I I I", 15)});
}

EaoaqecCode seven_qubit_non_eacq() {
  const std::size_t n = 7;
  PauliOperator s1 = on(n, 'Z', {1, 2, 3, 4}) * on(n, 'X', {6, 7});
  PauliOperator s2 = on(n, 'Y', {3, 5}) * on(n, 'X', {4}) * on(n, 'Z', {7});
  PauliOperator s3 = on(n, 'X', {3, 4, 5});
  PauliOperator t1 = on(n, 'Z', {1, 4, 7});
  PauliOperator t2 = on(n, 'X', {1, 3, 4, 6});
  std::vector<PauliOperator> t = {PauliOperator::identity(n), t1, t2, t1 * t2};
  return make_code(n, {s1, s2, s3}, {}, {}, t, {}, "seven_qubit_non_eacq");
}

// Canonical EACQ template instance with n = 5, s = 2, e = 1, c_1 = 1,
// c_2 = 1, k = 2: classical stabilizers <Z_1; Z_3, X_3>, quantum stabilizer
// <Z_2>, transversal {X_1^a Z_3^c X_3^b}.
EaoaqecCode canonical_eacq_5q() {
  const std::size_t n = 5;
  std::vector<PauliOperator> h = {on(n, 'Z', {1}), on(n, 'Z', {2}),
                                  on(n, 'Z', {3}), on(n, 'X', {3})};
  std::vector<PauliOperator> t;
  for (int i = 0; i < 8; ++i) {
    int a = (i >> 2) & 1, b1 = (i >> 1) & 1, b2 = i & 1;
    PauliOperator op = PauliOperator::identity(n);
    if (a) op = op * on(n, 'X', {1});
    if (b2) op = op * on(n, 'Z', {3});
    if (b1) op = op * on(n, 'X', {3});
    t.push_back(op);
  }
  return make_code(n, h, {}, {}, t, {}, "canonical_eacq_5q");
}

EaoaqecCode shortened_hamming_ea() {
  const std::size_t n = 10;
  std::vector<PauliOperator> s = {
      parse_pauli("Z I I Z Z I I Z Z I | Z I", 12),
      parse_pauli("I Z I Z I Z I Z I Z | I Z", 12),
      parse_pauli("I I Z Z Z Z I I I I | I I", 12),
      parse_pauli("I I I I I I Z Z Z Z | I I", 12),
      parse_pauli("X I I X X I I X X I | X I", 12),
      parse_pauli("I X I X I X I X I X | I X", 12),
      parse_pauli("I I I I I I X X X X | I I", 12),
      parse_pauli("I I X X X X I I I I | I I", 12),
  };
  std::vector<PauliOperator> h;
  for (const PauliOperator& op : s) h.push_back(op.restricted_prefix(n));
  std::vector<PauliOperator> g = {
      on(n, 'X', {2, 7, 10}),   on(n, 'Z', {1, 2, 3, 4}),
      on(n, 'X', {1, 3, 5}),    on(n, 'Z', {4, 5, 8, 9}),
      on(n, 'X', {2, 4, 5}),    on(n, 'Z', {1, 3, 4, 8, 9}),
  };
  std::vector<PauliOperator> l = {on(n, 'X', {2, 3, 5, 7, 8}),
                                  on(n, 'Z', {2, 3, 5, 7, 8})};
  return make_code(n, h, g, l, {PauliOperator::identity(n)}, s,
                   "shortened_hamming_ea");
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"six_qubit_example",    "subsystem_color_code", "color_code_hybrid_gf",
          "color_code_hybrid_ea", "color_code_hybrid_cq", "seven_qubit_non_eacq",
          "canonical_eacq_5q",    "shortened_hamming_ea"};
}

EaoaqecCode catalog_code(const std::string& name) {
  if (name == "six_qubit_example") return six_qubit_example();
  if (name == "subsystem_color_code") return subsystem_color_code();
  if (name == "color_code_hybrid_gf") return color_code_hybrid_gf();
  if (name == "color_code_hybrid_ea") return color_code_hybrid_ea();
  if (name == "color_code_hybrid_cq") return color_code_hybrid_cq();
  if (name == "seven_qubit_non_eacq") return seven_qubit_non_eacq();
  if (name == "canonical_eacq_5q") return canonical_eacq_5q();
  if (name == "shortened_hamming_ea") return shortened_hamming_ea();
  throw std::invalid_argument("unknown catalog code '" + name + "'");
}

}  // namespace eaoa
