#include "eaoa/distance.hpp"

#include <atomic>
#include <cstdint>
#include <thread>

#include "membership.hpp"

namespace eaoa {

int default_cutoff(std::size_t n) {
  return static_cast<int>(std::min<std::size_t>(n, kDefaultDistanceCutoffCap));
}

namespace {

std::uint64_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Lexicographically ranked k-combination of {0..n-1}.
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k,
                                            std::uint64_t rank) {
  std::vector<std::size_t> comb(k);
  std::size_t start = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = start;; ++v) {
      std::uint64_t block = binom(n - v - 1, k - i - 1);
      if (rank < block) {
        comb[i] = v;
        start = v + 1;
        break;
      }
      rank -= block;
    }
  }
  return comb;
}

bool next_combination(std::size_t n, std::vector<std::size_t>& comb) {
  std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct Hit {
  std::uint64_t rank = UINT64_MAX;  // comb_rank * 3^w + symbol_rank
  std::vector<std::size_t> comb;
  std::uint64_t sym = 0;
};

}  // namespace

std::optional<PauliOperator> min_weight_element(
    std::size_t n, int cutoff, unsigned threads,
    const std::function<bool(const Bits& x, const Bits& z)>& pred) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::size_t nwords = words_for(n);
  for (int w = 1; w <= cutoff && w <= static_cast<int>(n); ++w) {
    std::uint64_t ncombs = binom(n, w);
    std::uint64_t pow3 = 1;
    for (int i = 0; i < w; ++i) pow3 *= 3;
    unsigned nthreads =
        static_cast<unsigned>(std::min<std::uint64_t>(threads, ncombs));
    std::vector<Hit> hits(nthreads);
    std::atomic<std::uint64_t> global_best{UINT64_MAX};

    auto worker = [&](unsigned tid) {
      std::uint64_t lo = ncombs * tid / nthreads;
      std::uint64_t hi = ncombs * (tid + 1) / nthreads;
      if (lo >= hi) return;
      std::vector<std::size_t> comb = unrank_combination(n, w, lo);
      Bits x(nwords), z(nwords);
      for (std::uint64_t cr = lo; cr < hi; ++cr) {
        if (cr * pow3 >= global_best.load(std::memory_order_relaxed)) break;
        for (std::uint64_t sym = 0; sym < pow3; ++sym) {
          std::fill(x.begin(), x.end(), 0);
          std::fill(z.begin(), z.end(), 0);
          std::uint64_t digits = sym;
          std::uint64_t div = pow3 / 3;
          for (int i = 0; i < w; ++i) {
            unsigned digit = static_cast<unsigned>(digits / div);  // 0=X 1=Y 2=Z
            digits %= div;
            if (div > 1) div /= 3;
            if (digit != 2) set_bit(x, comb[i], true);
            if (digit != 0) set_bit(z, comb[i], true);
          }
          if (pred(x, z)) {
            Hit& h = hits[tid];
            h.rank = cr * pow3 + sym;
            h.comb = comb;
            h.sym = sym;
            std::uint64_t cur = global_best.load(std::memory_order_relaxed);
            while (h.rank < cur &&
                   !global_best.compare_exchange_weak(cur, h.rank,
                                                      std::memory_order_relaxed)) {
            }
            return;  // first hit in this chunk is the chunk minimum
          }
        }
        if (cr + 1 < hi) next_combination(n, comb);
      }
    };

    if (nthreads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
      for (std::thread& t : pool) t.join();
    }

    const Hit* best = nullptr;
    for (const Hit& h : hits)
      if (h.rank != UINT64_MAX && (!best || h.rank < best->rank)) best = &h;
    if (best) {
      PauliOperator op = PauliOperator::identity(n);
      std::uint64_t digits = best->sym;
      std::uint64_t div = pow3 / 3;
      for (int i = 0; i < w; ++i) {
        unsigned digit = static_cast<unsigned>(digits / div);
        digits %= div;
        if (div > 1) div /= 3;
        static const char sym_chars[3] = {'X', 'Y', 'Z'};
        op = op * PauliOperator::single(n, best->comb[i], sym_chars[digit]);
      }
      return op;
    }
  }
  return std::nullopt;
}

DistanceReport distance(const EaoaqecCode& code, DistanceMode mode, int cutoff,
                        unsigned threads) {
  detail::UncorrectableSet set;
  std::size_t nq;
  switch (mode) {
    case DistanceMode::Dressed:
      set = detail::UncorrectableSet::dressed(code);
      break;
    case DistanceMode::Bare:
      set = detail::UncorrectableSet::bare(code);
      break;
    case DistanceMode::NoisyBob:
      set = detail::UncorrectableSet::noisy_bob(code);
      break;
  }
  nq = set.nq;
  DistanceReport rep;
  rep.mode = mode;
  rep.cutoff = cutoff;
  auto witness = min_weight_element(
      nq, cutoff, threads,
      [&set](const Bits& x, const Bits& z) { return set.contains(x, z); });
  if (witness) {
    rep.d = witness->weight();
    std::string branch;
    set.contains(*witness, &branch);
    rep.branch = branch;
    rep.witness = std::move(witness);
  }
  return rep;
}

DistanceReport distance(const EaoaqecCode& code, DistanceMode mode) {
  std::size_t nq = mode == DistanceMode::NoisyBob ? code.n + code.e : code.n;
  return distance(code, mode, default_cutoff(nq));
}

}  // namespace eaoa
