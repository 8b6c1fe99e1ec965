#include "momentforge/schur.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "momentforge/parallel.hpp"

namespace momentforge::schur {

namespace {

void check_params(int n, int c) {
  if (n < 1) throw std::invalid_argument("schur: n must be at least 1");
  if (c < 2) throw std::invalid_argument("schur: c must be at least 2");
}

// Distinct elements of a triple, padded with 0.
std::array<int, 3> elements(const Triple& t) {
  if (t.kind == TripleKind::S1) return {t.x, t.sum, 0};
  return {t.x, t.y, t.sum};
}

int union_size(const Triple& a, const Triple& b, bool& intersect) {
  const auto ea = elements(a);
  const auto eb = elements(b);
  int shared = 0;
  for (int u : ea)
    if (u != 0)
      for (int v : eb) shared += u == v;
  intersect = shared > 0;
  return a.size() + b.size() - shared;
}

// sum over buckets: joint[p] * c^(1-p) + disjoint[p] * c^(2-p), with the
// product-of-marginals term subtracted through `minus`.
struct PairCounts {
  std::array<std::uint64_t, 7> joint{};     // intersecting, indexed by union size
  std::array<std::uint64_t, 7> disjoint{};  // disjoint, indexed by union size
  std::array<std::uint64_t, 7> minus{};     // intersecting, indexed by |S|+|T|

  void merge(const PairCounts& o) {
    for (std::size_t i = 0; i < 7; ++i) {
      joint[i] += o.joint[i];
      disjoint[i] += o.disjoint[i];
      minus[i] += o.minus[i];
    }
  }
};

Rational power_of(int c, int e) { return ipow(Rational(c), e); }

Rational weigh(const std::array<std::uint64_t, 7>& counts, int c, int shift) {
  Rational acc = 0;
  for (int p = 0; p < 7; ++p)
    if (counts[static_cast<std::size_t>(p)] != 0)
      acc += Rational(Integer(static_cast<unsigned long>(counts[static_cast<std::size_t>(p)]))) * power_of(c, shift - p);
  return acc;
}

}  // namespace

std::vector<Triple> triples(int n) {
  if (n < 1) throw std::invalid_argument("schur: n must be at least 1");
  std::vector<Triple> out;
  for (int x = 1; 2 * x <= n; ++x)
    for (int y = x; x + y <= n; ++y) out.push_back({x, y, x + y, x == y ? TripleKind::S1 : TripleKind::S2});
  return out;
}

Rational first_moment(int n, int c) {
  check_params(n, c);
  const Rational c2 = Rational(4 * c) * c;
  if (n % 2 != 0) return Rational((n - 1) * (n - 1 + 2 * c)) / c2;
  return Rational(n * (n - 2 + 2 * c)) / c2;
}

QuasiPolynomial first_moment_symbolic(int c) {
  if (c < 2) throw std::invalid_argument("schur: c must be at least 2");
  const Rational inv = Rational(1) / (Rational(4 * c) * c);
  const Polynomial n = Polynomial::variable("n");
  Polynomial even = n * (n + Rational(2 * c - 2)) * inv;
  Polynomial odd = (n - Rational(1)) * (n + Rational(2 * c - 1)) * inv;
  return QuasiPolynomial({even, odd});
}

Rational first_moment_by_triples(int n, int c) {
  check_params(n, c);
  Rational acc = 0;
  for (const auto& t : triples(n)) acc += power_of(c, 1 - t.size());
  return acc;
}

Rational second_moment(int n, int c, unsigned threads) {
  check_params(n, c);
  const auto ts = triples(n);
  std::vector<std::vector<std::size_t>> incidence(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (int e : elements(ts[i]))
      if (e != 0) incidence[static_cast<std::size_t>(e)].push_back(i);

  constexpr std::size_t kChunk = 64;
  const std::size_t chunks = (ts.size() + kChunk - 1) / kChunk;
  const PairCounts counts = parallel_map_reduce<PairCounts>(
      chunks, threads,
      [&](std::size_t chunk) {
        PairCounts local;
        std::vector<std::size_t> partners;
        for (std::size_t i = chunk * kChunk; i < std::min(ts.size(), (chunk + 1) * kChunk); ++i) {
          partners.clear();
          for (int e : elements(ts[i]))
            if (e != 0) {
              const auto& inc = incidence[static_cast<std::size_t>(e)];
              partners.insert(partners.end(), inc.begin(), inc.end());
            }
          std::sort(partners.begin(), partners.end());
          partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
          for (std::size_t j : partners) {
            bool intersect = false;
            const int p = union_size(ts[i], ts[j], intersect);
            ++local.joint[static_cast<std::size_t>(p)];
            ++local.minus[static_cast<std::size_t>(ts[i].size() + ts[j].size())];
          }
        }
        return local;
      },
      [](PairCounts& acc, PairCounts&& part) { acc.merge(part); }, PairCounts{});

  const Rational mean = first_moment_by_triples(n, c);
  return mean * mean + weigh(counts.joint, c, 1) - weigh(counts.minus, c, 2);
}

Rational second_moment_direct(int n, int c) {
  check_params(n, c);
  const auto ts = triples(n);
  PairCounts counts;
  for (const auto& a : ts)
    for (const auto& b : ts) {
      bool intersect = false;
      const int p = union_size(a, b, intersect);
      ++(intersect ? counts.joint : counts.disjoint)[static_cast<std::size_t>(p)];
    }
  return weigh(counts.joint, c, 1) + weigh(counts.disjoint, c, 2);
}

}  // namespace momentforge::schur
