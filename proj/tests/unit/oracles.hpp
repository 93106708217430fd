#pragma once

// Reference computations that share no code with the library.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace oracles {

/// Counts set partitions of {1..n} by number of blocks, enumerating
/// restricted growth strings.
inline std::vector<mpz_class> partitions_by_blocks(unsigned n) {
  std::vector<mpz_class> counts(n + 1);
  if (n == 0) {
    counts[0] = 1;
    return counts;
  }
  std::vector<unsigned> a(n, 0);
  std::vector<unsigned> maxima(n, 0);  // max of a[0..i]
  for (;;) {
    ++counts[maxima[n - 1] + 1];
    int i = static_cast<int>(n) - 1;
    while (i > 0 && a[i] == maxima[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    maxima[i] = std::max(maxima[i - 1], a[i]);
    for (unsigned j = i + 1; j < n; ++j) {
      a[j] = 0;
      maxima[j] = maxima[j - 1];
    }
  }
  return counts;
}

/// Normal form of ((a^dagger)^r a^s)^n built letter by letter from the
/// commutation rule a a^dagger = a^dagger a + 1. Keys are (p, q) for
/// (a^dagger)^p a^q.
inline std::map<std::pair<unsigned, unsigned>, mpz_class> normal_form(unsigned r, unsigned s, unsigned n) {
  std::map<std::pair<unsigned, unsigned>, mpz_class> form{{{0, 0}, 1}};
  for (unsigned word = 0; word < n; ++word) {
    for (unsigned i = 0; i < r; ++i) {
      // (a^dagger)^p a^q a^dagger = (a^dagger)^(p+1) a^q + q (a^dagger)^p a^(q-1)
      std::map<std::pair<unsigned, unsigned>, mpz_class> next;
      for (const auto& [pq, c] : form) {
        next[{pq.first + 1, pq.second}] += c;
        if (pq.second > 0) next[{pq.first, pq.second - 1}] += c * pq.second;
      }
      form = std::move(next);
    }
    std::map<std::pair<unsigned, unsigned>, mpz_class> next;
    for (const auto& [pq, c] : form) next[{pq.first, pq.second + s}] += c;
    form = std::move(next);
  }
  return form;
}

/// Determinant by Leibniz expansion over all permutations.
inline mpz_class leibniz_determinant(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  mpz_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    mpz_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace oracles
