#include "momentforge/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <random>

#include "momentforge/parallel.hpp"

namespace momentforge::oracle {

void Histogram::add(std::int64_t value, const Integer& count) {
  counts[value] += count;
  total += count;
}

Histogram& Histogram::merge(const Histogram& other) {
  for (const auto& [v, c] : other.counts) counts[v] += c;
  total += other.total;
  return *this;
}

Polynomial Histogram::pgf(const std::string& symbol) const {
  if (sgn(total) == 0) throw std::invalid_argument("pgf of an empty histogram");
  std::vector<Rational> coeffs;
  for (const auto& [v, c] : counts) {
    if (v < 0) throw std::invalid_argument("pgf needs non-negative statistic values");
    if (coeffs.size() <= static_cast<std::size_t>(v)) coeffs.resize(static_cast<std::size_t>(v) + 1, 0);
    coeffs[static_cast<std::size_t>(v)] += Rational(c) / Rational(total);
  }
  return Polynomial(symbol, std::move(coeffs));
}

JointHistogram& JointHistogram::merge(const JointHistogram& other) {
  for (const auto& [k, c] : other.counts) counts[k] += c;
  total += other.total;
  n = std::max(n, other.n);
  return *this;
}

Histogram JointHistogram::inv_marginal() const {
  Histogram h;
  for (const auto& [k, c] : counts) h.add(k.first, c);
  return h;
}

Histogram JointHistogram::maj_marginal() const {
  Histogram h;
  for (const auto& [k, c] : counts) h.add(k.second, c);
  return h;
}

int inversions(std::span<const int> perm) {
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b];
  return inv;
}

int major_index(std::span<const int> perm) {
  int maj = 0;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i)
    if (perm[i] > perm[i + 1]) maj += static_cast<int>(i) + 1;
  return maj;
}

std::vector<int> parse_permutation(std::string_view digits) {
  std::vector<int> p;
  for (char ch : digits) {
    if (ch < '1' || ch > '9') throw std::invalid_argument("permutation digits must be 1-9");
    p.push_back(ch - '0');
  }
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) throw std::invalid_argument("not a permutation of 1..n");
  return p;
}

namespace {

void require_guard(bool ok, const std::string& what) {
  if (!ok) throw SizeGuardError(what);
}

std::uint64_t checked_power(std::uint64_t base, int exponent, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (int i = 0; i < exponent; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

Histogram from_counts(std::span<const std::uint64_t> counts) {
  Histogram h;
  for (std::size_t v = 0; v < counts.size(); ++v)
    if (counts[v] != 0) h.add(static_cast<std::int64_t>(v), Integer(static_cast<unsigned long>(counts[v])));
  return h;
}

auto merge_histograms = [](Histogram& acc, Histogram&& part) { acc.merge(part); };

}  // namespace

Histogram enumerate_schur(int n, int c, unsigned threads) {
  if (n < 1 || c < 2) throw std::invalid_argument("enumerate_schur needs n >= 1 and c >= 2");
  const std::uint64_t space = checked_power(static_cast<std::uint64_t>(c), n, 10'000'000);
  require_guard(space <= 10'000'000, "schur enumeration: c^n exceeds 1e7");

  // Triples as 0-based index tuples; {x,x,2x} repeats x.
  std::vector<std::array<int, 3>> triples;
  for (int x = 1; x <= n; ++x)
    for (int y = x; x + y <= n; ++y) triples.push_back({x - 1, y - 1, x + y - 1});

  const int prefix_digits = std::min(n, 3);
  const std::uint64_t chunks = checked_power(static_cast<std::uint64_t>(c), prefix_digits, space);
  const std::uint64_t per_chunk = space / chunks;
  const std::size_t max_x = triples.size();

  return parallel_map_reduce<Histogram>(
      chunks, threads,
      [&](std::size_t chunk) {
        std::vector<std::uint64_t> counts(max_x + 1, 0);
        std::vector<int> color(static_cast<std::size_t>(n), 0);
        // Most significant digits (the highest integers) come from the chunk id.
        std::uint64_t id = chunk;
        for (int d = 0; d < prefix_digits; ++d) {
          color[static_cast<std::size_t>(n - 1 - d)] = static_cast<int>(id % static_cast<std::uint64_t>(c));
          id /= static_cast<std::uint64_t>(c);
        }
        const int free_digits = n - prefix_digits;
        for (std::uint64_t step = 0; step < per_chunk; ++step) {
          std::size_t x = 0;
          for (const auto& t : triples) x += color[static_cast<std::size_t>(t[0])] == color[static_cast<std::size_t>(t[1])] &&
                                             color[static_cast<std::size_t>(t[1])] == color[static_cast<std::size_t>(t[2])];
          ++counts[x];
          for (int d = 0; d < free_digits; ++d) {
            auto& digit = color[static_cast<std::size_t>(d)];
            if (++digit < c) break;
            digit = 0;
          }
        }
        return from_counts(counts);
      },
      merge_histograms, Histogram{});
}

JointHistogram enumerate_permutations(int n, unsigned threads) {
  if (n < 1) throw std::invalid_argument("enumerate_permutations needs n >= 1");
  require_guard(n <= 9, "permutation enumeration: n! exceeds 4e5");
  return parallel_map_reduce<JointHistogram>(
      static_cast<std::size_t>(n), threads,
      [n](std::size_t first) {
        JointHistogram h;
        h.n = n;
        std::vector<int> perm;
        perm.push_back(static_cast<int>(first) + 1);
        for (int v = 1; v <= n; ++v)
          if (v != static_cast<int>(first) + 1) perm.push_back(v);
        std::map<std::pair<int, int>, std::uint64_t> local;
        do {
          ++local[{inversions(perm), major_index(perm)}];
        } while (std::next_permutation(perm.begin() + 1, perm.end()));
        for (const auto& [k, c] : local) {
          h.counts[k] += Integer(static_cast<unsigned long>(c));
          h.total += Integer(static_cast<unsigned long>(c));
        }
        return h;
      },
      [](JointHistogram& acc, JointHistogram&& part) { acc.merge(part); }, JointHistogram{n, {}, 0});
}

BooleanFunction::BooleanFunction(int n) : n_(n) {
  if (n < 0 || n > 24) throw std::invalid_argument("boolean function arity must be in [0, 24]");
  words_.assign(std::max<std::size_t>(1, (std::size_t{1} << n) / 64), 0);
}

BooleanFunction BooleanFunction::from_vertices(int n, std::span<const std::string> vertices) {
  BooleanFunction f(n);
  for (const auto& v : vertices) {
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vertex '" + v + "' has wrong length");
    std::uint64_t idx = 0;
    for (char ch : v) {
      if (ch != '0' && ch != '1') throw std::invalid_argument("vertex '" + v + "' is not a bit string");
      idx = (idx << 1) | static_cast<std::uint64_t>(ch - '0');
    }
    f.insert(idx);
  }
  return f;
}

BooleanFunction BooleanFunction::from_mask(int n, std::uint64_t mask) {
  if (n > 6) throw std::invalid_argument("from_mask supports n <= 6");
  BooleanFunction f(n);
  const std::uint64_t width = std::uint64_t{1} << n;
  f.words_[0] = width == 64 ? mask : (mask & ((std::uint64_t{1} << width) - 1));
  return f;
}

std::uint64_t BooleanFunction::size() const {
  std::uint64_t s = 0;
  for (auto w : words_) s += static_cast<std::uint64_t>(std::popcount(w));
  return s;
}

namespace {

constexpr std::array<std::uint64_t, 6> kLowHalfMasks = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

// h <- h & (h >> 2^j) restricted to vertices whose coordinate j is 0.
void fold_coordinate(std::vector<std::uint64_t>& h, int j) {
  const std::size_t words = h.size();
  if (j < 6) {
    const unsigned s = 1u << j;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t hi = w + 1 < words ? h[w + 1] : 0;
      const std::uint64_t shifted = (h[w] >> s) | (hi << (64 - s));
      h[w] &= shifted & kLowHalfMasks[static_cast<std::size_t>(j)];
    }
  } else {
    const std::size_t q = std::size_t{1} << (j - 6);
    for (std::size_t w = 0; w < words; ++w) {
      if ((w >> (j - 6)) & 1u) {
        h[w] = 0;
      } else {
        h[w] &= w + q < words ? h[w + q] : 0;
      }
    }
  }
}

}  // namespace

std::uint64_t count_subcubes(const BooleanFunction& f, int k) {
  const int n = f.arity();
  if (k < 0 || k > n) throw std::invalid_argument("count_subcubes needs 0 <= k <= n");
  if (k == 0) return f.size();
  std::uint64_t total = 0;
  // Gosper's hack over n-bit masks with k bits set.
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < (std::uint64_t{1} << n);) {
    std::vector<std::uint64_t> h = f.words();
    for (int j = 0; j < n; ++j)
      if ((s >> j) & 1u) fold_coordinate(h, j);
    for (auto w : h) total += static_cast<std::uint64_t>(std::popcount(w));
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return total;
}

std::vector<std::uint64_t> subcube_masks(int n, int k) {
  if (n < 0 || n > 6 || k < 0 || k > n) throw std::invalid_argument("subcube_masks needs 0 <= k <= n <= 6");
  std::vector<std::uint64_t> masks;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 0; s <= full; ++s) {
    if (std::popcount(s) != k) continue;
    for (std::uint64_t base = 0; base <= full; ++base) {
      if (base & s) continue;
      std::uint64_t mask = 0;
      std::uint64_t sub = 0;
      do {
        mask |= std::uint64_t{1} << (base | sub);
        sub = (sub - s) & s;
      } while (sub != 0);
      masks.push_back(mask);
    }
  }
  return masks;
}

Histogram enumerate_boolean(int n, int k, unsigned threads) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("enumerate_boolean needs 0 <= k <= n");
  require_guard(n <= 4, "boolean enumeration: 2^(2^n) exceeds 1e5");
  const auto masks = subcube_masks(n, k);
  const std::uint64_t space = std::uint64_t{1} << (std::uint64_t{1} << n);
  const std::uint64_t chunks = std::min<std::uint64_t>(space, 64);
  const std::uint64_t per_chunk = space / chunks;
  return parallel_map_reduce<Histogram>(
      chunks, threads,
      [&](std::size_t chunk) {
        std::vector<std::uint64_t> counts(masks.size() + 1, 0);
        const std::uint64_t begin = chunk * per_chunk;
        for (std::uint64_t f = begin; f < begin + per_chunk; ++f) {
          std::size_t x = 0;
          for (auto m : masks) x += (f & m) == m;
          ++counts[x];
        }
        return from_counts(counts);
      },
      merge_histograms, Histogram{});
}

Histogram sample_boolean(int n, int k, std::uint64_t count, std::uint64_t seed, unsigned threads) {
  if (n < 0 || n > 24 || k < 0 || k > n) throw std::invalid_argument("sample_boolean needs 0 <= k <= n <= 24");
  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
  const std::uint64_t width = std::uint64_t{1} << n;
  return parallel_map_reduce<Histogram>(
      blocks, threads,
      [&](std::size_t b) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xFFFFFFFFu), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(b)};
        std::mt19937_64 rng(seq);
        std::map<std::int64_t, std::uint64_t> local;
        const std::uint64_t begin = b * kBlock;
        const std::uint64_t end = std::min(count, begin + kBlock);
        BooleanFunction f(n);
        for (std::uint64_t i = begin; i < end; ++i) {
          for (auto& w : f.words()) w = rng();
          if (width < 64) f.words()[0] &= (std::uint64_t{1} << width) - 1;
          ++local[static_cast<std::int64_t>(count_subcubes(f, k))];
        }
        Histogram h;
        for (const auto& [v, c] : local) h.add(v, Integer(static_cast<unsigned long>(c)));
        return h;
      },
      merge_histograms, Histogram{});
}

Histogram enumerate_boards(int m, int n, unsigned threads) {
  if (m < 1 || n < 1) throw std::invalid_argument("enumerate_boards needs m, n >= 1");
  require_guard(m * n <= 24, "board enumeration: 2^(mn) exceeds 2e7");
  const int cells = m * n;
  std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(cells));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      const int i = r * n + c;
      if (c + 1 < n) {
        neighbours[static_cast<std::size_t>(i)].push_back(i + 1);
        neighbours[static_cast<std::size_t>(i + 1)].push_back(i);
      }
      if (r + 1 < m) {
        neighbours[static_cast<std::size_t>(i)].push_back(i + n);
        neighbours[static_cast<std::size_t>(i + n)].push_back(i);
      }
    }
  }
  const int slots = 2 * m * n - m - n;
  const int prefix_bits = std::min(cells, 6);
  const int low_bits = cells - prefix_bits;
  auto statistic = [&](std::uint32_t board) {
    int x = 0;
    for (int i = 0; i < cells; ++i)
      for (int j : neighbours[static_cast<std::size_t>(i)])
        if (j > i) x += ((board >> i) & 1u) == ((board >> j) & 1u);
    return x;
  };
  return parallel_map_reduce<Histogram>(
      std::size_t{1} << prefix_bits, threads,
      [&](std::size_t prefix) {
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(slots) + 1, 0);
        std::uint32_t board = static_cast<std::uint32_t>(prefix) << low_bits;
        int x = statistic(board);
        ++counts[static_cast<std::size_t>(x)];
        const std::uint64_t steps = std::uint64_t{1} << low_bits;
        for (std::uint64_t i = 1; i < steps; ++i) {
          const int cell = std::countr_zero(i);
          const std::uint32_t before = (board >> cell) & 1u;
          for (int j : neighbours[static_cast<std::size_t>(cell)]) x += (((board >> j) & 1u) == before) ? -1 : 1;
          board ^= std::uint32_t{1} << cell;
          ++counts[static_cast<std::size_t>(x)];
        }
        return from_counts(counts);
      },
      merge_histograms, Histogram{});
}

MomentVector<Rational> histogram_moments(const Histogram& h, int r_max) {
  if (sgn(h.total) == 0) throw std::invalid_argument("moments of an empty histogram");
  MomentVector<Rational> m{MomentKind::Raw, {}, "", {}};
  for (int r = 0; r <= r_max; ++r) {
    Integer acc = 0;
    for (const auto& [v, c] : h.counts) acc += ipow(Integer(static_cast<long>(v)), static_cast<unsigned>(r)) * c;
    m.entries.push_back(Rational(acc) / Rational(h.total));
  }
  return m;
}

}  // namespace momentforge::oracle
