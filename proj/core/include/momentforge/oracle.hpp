#pragma once

// Exhaustive and seeded Monte Carlo enumerators. Nothing here uses a closed
// form; these are the independent reference distributions.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "momentforge/errors.hpp"
#include "momentforge/moments.hpp"
#include "momentforge/polynomial.hpp"

namespace momentforge::oracle {

/// Exact distribution: statistic value -> number of sample points.
struct Histogram {
  std::map<std::int64_t, Integer> counts;
  Integer total = 0;

  void add(std::int64_t value, const Integer& count = 1);
  Histogram& merge(const Histogram& other);
  /// sum_v count(v)/total q^v. Values must be non-negative.
  Polynomial pgf(const std::string& symbol = "q") const;

  friend bool operator==(const Histogram&, const Histogram&) = default;
};

/// Joint (inv, maj) counts over S_n.
struct JointHistogram {
  int n = 0;
  std::map<std::pair<int, int>, Integer> counts;
  Integer total = 0;

  JointHistogram& merge(const JointHistogram& other);
  Histogram inv_marginal() const;
  Histogram maj_marginal() const;
};

/// Number of position pairs a < b with perm[a] > perm[b].
int inversions(std::span<const int> perm);
/// Sum of 1-based positions i with perm[i] > perm[i+1].
int major_index(std::span<const int> perm);
/// "52314" -> {5,2,3,1,4}.
std::vector<int> parse_permutation(std::string_view digits);

/// Distribution of the number of monochromatic Schur triples {x, y, x+y}
/// (x <= y) over all c-colorings of [1, n]. Guard: c^n <= 1e7.
Histogram enumerate_schur(int n, int c, unsigned threads = 0);

/// Joint (inv, maj) over S_n. Guard: n! <= 4e5.
JointHistogram enumerate_permutations(int n, unsigned threads = 0);

/// A subset of the n-cube's vertices. Vertex "x1 x2 ... xn" has index with
/// x1 as the most significant bit.
class BooleanFunction {
 public:
  explicit BooleanFunction(int n);
  static BooleanFunction from_vertices(int n, std::span<const std::string> vertices);
  static BooleanFunction from_mask(int n, std::uint64_t mask);  // n <= 6

  int arity() const { return n_; }
  std::uint64_t vertex_count() const { return std::uint64_t{1} << n_; }
  bool contains(std::uint64_t v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(std::uint64_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  std::uint64_t size() const;
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

/// Number of k-dimensional subcubes (k free coordinates, the others fixed)
/// whose 2^k vertices all lie in f. Bitset route, any n <= 24.
std::uint64_t count_subcubes(const BooleanFunction& f, int k);

/// Vertex masks of every k-subcube of the n-cube (n <= 6).
std::vector<std::uint64_t> subcube_masks(int n, int k);

/// Distribution of X_k over all 2^(2^n) functions. Guard: 2^(2^n) <= 1e5.
Histogram enumerate_boolean(int n, int k, unsigned threads = 0);

/// Seeded Monte Carlo over uniformly random functions (n <= 24). Samples are
/// generated in fixed blocks of 4096, block b drawing from
/// std::mt19937_64 seeded with std::seed_seq{seed_lo, seed_hi, b}, so the
/// result is independent of the thread count.
Histogram sample_boolean(int n, int k, std::uint64_t count, std::uint64_t seed, unsigned threads = 0);

/// Distribution of equal-valued adjacent cell pairs over all 0/1 m x n
/// boards (Gray-code walk). Guard: 2^(mn) <= 2e7.
Histogram enumerate_boards(int m, int n, unsigned threads = 0);

/// Exact E[X^r] = sum v^r count / total for r = 0..r_max.
MomentVector<Rational> histogram_moments(const Histogram& h, int r_max);

}  // namespace momentforge::oracle
