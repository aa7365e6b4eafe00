#pragma once

#include <functional>
#include <optional>

#include "eaoa/code.hpp"

namespace eaoa {

enum class DistanceMode { Dressed, Bare, NoisyBob };

inline constexpr int kDefaultDistanceCutoffCap = 6;
int default_cutoff(std::size_t n);  // min(n, 6)

struct DistanceReport {
  DistanceMode mode = DistanceMode::Dressed;
  int cutoff = 0;
  std::optional<std::size_t> d;  // empty when no element found up to cutoff
  std::optional<PauliOperator> witness;
  std::string branch;  // "normalizer-minus-gauge" or "coset-union"
};

/*
 * Minimum weight of the uncorrectable-error set, by ascending-weight
 * enumeration: weights 1..cutoff, support sets in lexicographic order, and
 * per-qubit symbols ordered X < Y < Z. The reported witness is the first
 * element in that order; results are independent of the thread count
 * (threads = 0 picks the hardware concurrency).
 *
 * Dressed: (Z(H) \ <H_I, G0|n, iI>)  U  union_{i<j} T_i T_j^-1 Z(H), on n qubits.
 * Bare:    (<H_I, L0|n, iI> \ <H_I, iI>)  U  the same coset union.
 * NoisyBob: the dressed formula on the extended n+e register with S.
 */
DistanceReport distance(const EaoaqecCode& code, DistanceMode mode, int cutoff,
                        unsigned threads = 0);
DistanceReport distance(const EaoaqecCode& code, DistanceMode mode);

/*
 * Generic deterministic minimum-weight search: the first operator (in the
 * enumeration order above) of weight <= cutoff whose bit pattern satisfies
 * pred. pred must be safe to call concurrently.
 */
std::optional<PauliOperator> min_weight_element(
    std::size_t n, int cutoff, unsigned threads,
    const std::function<bool(const Bits& x, const Bits& z)>& pred);

}  // namespace eaoa
