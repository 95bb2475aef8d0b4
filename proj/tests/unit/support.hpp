#pragma once

// Test helpers and independent oracles. Nothing here calls the elimination
// or Weyl-product code under test.

#include "glorbit/mpoly.hpp"
#include "glorbit/ratlin.hpp"
#include "glorbit/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace glorbit::test {

/// e_i with 1-based i.
inline RatVector e(std::size_t n, std::size_t i) { return RatVector::unit(n, i - 1); }

/// E_ij with 1-based indices.
inline RatMatrix E(std::size_t n, std::size_t i, std::size_t j) { return RatMatrix::unit(n, i - 1, j - 1); }

inline RatMatrix diag(std::initializer_list<Rational> d) { return RatMatrix::diagonal(std::vector<Rational>(d)); }

/// J e_1 = 0, J e_{k+1} = e_k.
inline RatMatrix J(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
  return m;
}

inline RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.dim() + b.dim(), a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b(i, j);
  return m;
}

/// Leibniz expansion over all permutations; fine up to n = 6.
inline Rational leibniz_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const RatMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    std::vector<bool> rsel(r, false), csel(c, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        RatMatrix sub(k, k);
        std::size_t si = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rsel[i]) continue;
          std::size_t sj = 0;
          for (std::size_t j = 0; j < c; ++j)
            if (csel[j]) sub(si, sj++) = m(i, j);
          ++si;
        }
        if (leibniz_det(sub) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

/// Weyl product by rewriting words: a monomial is a word in letters
/// 2i (x_i) and 2i+1 (D_i); D_i x_i is replaced by x_i D_i + 1 until every
/// word is normal ordered.
inline WeylOperator naive_weyl_mul(const WeylOperator& p, const WeylOperator& q) {
  const std::size_t k = p.num_vars();
  using Word = std::vector<unsigned>;
  auto to_word = [k](const Exponent& key) {
    Word w;
    for (std::size_t i = 0; i < k; ++i)
      for (unsigned a = 0; a < key[i]; ++a) w.push_back(static_cast<unsigned>(2 * i));
    for (std::size_t i = 0; i < k; ++i)
      for (unsigned b = 0; b < key[k + i]; ++b) w.push_back(static_cast<unsigned>(2 * i + 1));
    return w;
  };
  std::vector<std::pair<Word, Rational>> work;
  for (const auto& [ka, ca] : p.terms())
    for (const auto& [kb, cb] : q.terms()) {
      Word w = to_word(ka);
      Word wb = to_word(kb);
      w.insert(w.end(), wb.begin(), wb.end());
      work.emplace_back(w, ca * cb);
    }
  WeylOperator out(k);
  while (!work.empty()) {
    auto [w, c] = work.back();
    work.pop_back();
    std::size_t pos = w.size();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] % 2 == 1 && w[i + 1] % 2 == 0) {
        pos = i;
        break;
      }
    if (pos == w.size()) {
      Exponent key(2 * k, 0);
      for (unsigned letter : w) ++key[(letter % 2) * k + letter / 2];
      out.add_term(key, c);
      continue;
    }
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    work.emplace_back(swapped, c);
    if (w[pos] / 2 == w[pos + 1] / 2) {
      Word dropped;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (i != pos && i != pos + 1) dropped.push_back(w[i]);
      work.emplace_back(dropped, c);
    }
  }
  return out;
}

}  // namespace glorbit::test
