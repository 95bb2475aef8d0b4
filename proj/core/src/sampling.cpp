#include "glorbit/sampling.hpp"

#include "glorbit/orbit.hpp"

#include <limits>
#include <stdexcept>

namespace glorbit {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

long SplitMix64::uniform_int(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t r;
  do r = next();
  while (r >= limit);
  return lo + static_cast<long>(r % range);
}

RatMatrix random_matrix(SplitMix64& rng, std::size_t n, long bound) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform_int(-bound, bound);
  return m;
}

RatVector random_vector(SplitMix64& rng, std::size_t n, long bound) {
  RatVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.uniform_int(-bound, bound);
  return v;
}

RatVector random_nonzero_vector(SplitMix64& rng, std::size_t n, long bound) {
  for (;;) {
    RatVector v = random_vector(rng, n, bound);
    if (!v.is_zero()) return v;
  }
}

RatMatrix random_unimodular(SplitMix64& rng, std::size_t n, long bound) {
  RatMatrix l = RatMatrix::identity(n), u = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = rng.uniform_int(-bound, bound);
      u(j, i) = rng.uniform_int(-bound, bound);
    }
  return l * u;
}

RatMatrix random_in_stabilizer(SplitMix64& rng, const RatVector& v0, long bound) {
  const std::size_t n = v0.size();
  // h e_1 = e_1 for L with zero first column below the diagonal.
  RatMatrix l = RatMatrix::identity(n), u = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (j > 0) l(i, j) = rng.uniform_int(-bound, bound);
      u(j, i) = rng.uniform_int(-bound, bound);
    }
  const RatMatrix s = section(v0, RatVector::unit(n, 0));
  return s * (l * u) * inverse(s);
}

RatMatrix shift_matrix(std::size_t n) {
  RatMatrix j(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) j(k, k + 1) = 1;
  return j;
}

RatMatrix nilpotent_of_type(const std::vector<unsigned>& partition) {
  std::size_t n = 0;
  for (unsigned p : partition) n += p;
  RatMatrix m(n, n);
  std::size_t start = 0;
  for (unsigned p : partition) {
    for (std::size_t k = 0; k + 1 < p; ++k) m(start + k, start + k + 1) = 1;
    start += p;
  }
  return m;
}

RatMatrix random_structured_matrix(SplitMix64& rng, std::size_t n) {
  RatMatrix m(n, n);
  std::size_t at = 0;
  while (at < n) {
    const std::size_t left = n - at;
    const long kind = rng.uniform_int(0, 9);
    if (kind == 9 && left >= 4) {
      // [[C, I], [0, C]] with C the companion matrix of t^2 - 2.
      m(at, at + 1) = 2;
      m(at + 1, at) = 1;
      m(at + 2, at + 3) = 2;
      m(at + 3, at + 2) = 1;
      m(at, at + 2) = 1;
      m(at + 1, at + 3) = 1;
      at += 4;
    } else if (kind >= 7 && left >= 2) {
      const long c = kind == 7 ? 2 : -1;  // t^2 - 2 or t^2 + 1
      m(at, at + 1) = c;
      m(at + 1, at) = 1;
      at += 2;
    } else {
      const auto size = static_cast<std::size_t>(rng.uniform_int(1, static_cast<long>(left)));
      const long lambda = rng.uniform_int(-2, 2);
      for (std::size_t k = 0; k < size; ++k) {
        m(at + k, at + k) = lambda;
        if (k + 1 < size) m(at + k, at + k + 1) = 1;
      }
      at += size;
    }
  }
  const RatMatrix g = random_unimodular(rng, n, 1);
  return g * m * inverse(g);
}

RatMatrix random_mixed_matrix(SplitMix64& rng, std::size_t n, long bound) {
  return rng.uniform_int(0, 1) == 0 ? random_matrix(rng, n, bound) : random_structured_matrix(rng, n);
}

RatMatrix regular_nilpotent_with_index(std::size_t n, std::size_t p, const RatVector& v0) {
  if (p >= n) throw std::invalid_argument("regular_nilpotent_with_index: need p < n");
  if (v0.size() != n || v0.is_zero()) throw std::invalid_argument("regular_nilpotent_with_index: bad v0");
  // J^p e_n = e_{n-p}; swapping e_{n-p} and e_n makes e_n = X^p e_{n-p} with
  // e_n outside the image of X^{p+1}.
  RatMatrix perm = RatMatrix::identity(n);
  const std::size_t a = n - p - 1, b = n - 1;
  if (a != b) {
    perm(a, a) = 0;
    perm(b, b) = 0;
    perm(a, b) = 1;
    perm(b, a) = 1;
  }
  const RatMatrix x = perm * shift_matrix(n) * perm;
  const RatMatrix g = section(v0, RatVector::unit(n, n - 1));
  return g * x * inverse(g);
}

}  // namespace glorbit
