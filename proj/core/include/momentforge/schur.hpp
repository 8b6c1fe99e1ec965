#pragma once

// Monochromatic Schur triples {x, y, x+y} in a uniformly random c-coloring
// of [1, n].

#include <vector>

#include "momentforge/quasi_polynomial.hpp"

namespace momentforge::schur {

struct SchurParams {
  int n = 1;
  int c = 2;
};

/// S1: {x, x, 2x} (two distinct integers). S2: {x, y, x+y} with x < y.
enum class TripleKind { S1, S2 };

struct Triple {
  int x = 0;
  int y = 0;
  int sum = 0;
  TripleKind kind = TripleKind::S2;

  /// Number of distinct integers in the triple.
  int size() const { return kind == TripleKind::S1 ? 2 : 3; }
};

/// All triples with x <= y and x + y <= n, ordered by (x, y).
std::vector<Triple> triples(int n);

/// (n-1)(n-1+2c)/(4c^2) for odd n, n(n-2+2c)/(4c^2) for even n.
Rational first_moment(int n, int c);
/// The same as a period-2 quasi-polynomial in n for fixed c.
QuasiPolynomial first_moment_symbolic(int c);
/// Sum over triples of 1/c (S1) and 1/c^2 (S2).
Rational first_moment_by_triples(int n, int c);

/// E[X^2] over ordered pairs of triples: c/c^p when the triples share an
/// integer, c^2/c^p otherwise, p = size of the union. Computed as E[X]^2
/// plus corrections over intersecting pairs, O(n^3).
Rational second_moment(int n, int c, unsigned threads = 0);
/// The literal O(#triples^2) double sum.
Rational second_moment_direct(int n, int c);

}  // namespace momentforge::schur
