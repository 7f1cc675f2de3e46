#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace braces {

/// Square matrix over Z/(mod), row-major, acting on column vectors.
struct ModMatrix {
  int n = 0;
  long long mod = 0;
  std::vector<long long> a;

  ModMatrix() = default;
  ModMatrix(int size, long long modulus, std::vector<long long> entries)
      : n(size), mod(modulus), a(std::move(entries)) {
    if (mod < 2) throw std::invalid_argument("ModMatrix: modulus < 2");
    if (a.size() != static_cast<std::size_t>(n) * n)
      throw std::invalid_argument("ModMatrix: entry count");
    for (auto& x : a) x = ((x % mod) + mod) % mod;
  }

  static ModMatrix identity(int size, long long modulus) {
    std::vector<long long> e(static_cast<std::size_t>(size) * size, 0);
    for (int i = 0; i < size; ++i) e[static_cast<std::size_t>(i) * size + i] = 1;
    return ModMatrix(size, modulus, std::move(e));
  }

  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  bool operator==(const ModMatrix& o) const {
    return n == o.n && mod == o.mod && a == o.a;
  }
  bool operator!=(const ModMatrix& o) const { return !(*this == o); }

  ModMatrix mul(const ModMatrix& o) const {
    std::vector<long long> r(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        long long v = at(i, k);
        if (!v) continue;
        for (int j = 0; j < n; ++j)
          r[static_cast<std::size_t>(i) * n + j] =
              (r[static_cast<std::size_t>(i) * n + j] + v * o.at(k, j)) % mod;
      }
    return ModMatrix(n, mod, std::move(r));
  }

  ModMatrix add_scaled_identity(long long c) const {  // this + c*I
    ModMatrix r = *this;
    for (int i = 0; i < n; ++i) {
      auto& x = r.a[static_cast<std::size_t>(i) * n + i];
      x = ((x + c) % mod + mod) % mod;
    }
    return r;
  }

  ModMatrix pow(long long e) const {
    ModMatrix result = identity(n, mod);
    ModMatrix base = *this;
    while (e > 0) {
      if (e & 1) result = result.mul(base);
      base = base.mul(base);
      e >>= 1;
    }
    return result;
  }

  std::vector<long long> apply(const std::vector<long long>& v) const {
    std::vector<long long> r(n, 0);
    for (int i = 0; i < n; ++i) {
      long long acc = 0;
      for (int j = 0; j < n; ++j) acc = (acc + at(i, j) * v[j]) % mod;
      r[i] = acc;
    }
    return r;
  }

  /// Multiplicative order; throws when it would exceed the cap.
  int order(int cap = 1 << 20) const {
    ModMatrix id = identity(n, mod);
    ModMatrix cur = *this;
    for (int k = 1; k <= cap; ++k) {
      if (cur == id) return k;
      cur = cur.mul(*this);
    }
    throw std::runtime_error("ModMatrix::order: exceeds cap");
  }
};

/// Determinant of the matrix reduced mod a prime p (Gaussian elimination).
inline long long det_mod_prime(const ModMatrix& M, long long p) {
  const int n = M.n;
  std::vector<long long> a(M.a);
  for (auto& x : a) x = ((x % p) + p) % p;
  auto powmod = [&](long long b, long long e) {
    long long r = 1 % p;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  long long det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (a[static_cast<std::size_t>(row) * n + col] % p != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(pivot) * n + j],
                  a[static_cast<std::size_t>(col) * n + j]);
      det = (p - det) % p;
    }
    long long pv = a[static_cast<std::size_t>(col) * n + col];
    det = det * pv % p;
    long long inv = powmod(pv, p - 2);
    for (int row = col + 1; row < n; ++row) {
      long long factor = a[static_cast<std::size_t>(row) * n + col] * inv % p;
      if (!factor) continue;
      for (int j = col; j < n; ++j)
        a[static_cast<std::size_t>(row) * n + j] =
            ((a[static_cast<std::size_t>(row) * n + j] -
              factor * a[static_cast<std::size_t>(col) * n + j]) %
                 p +
             p) %
            p;
    }
  }
  return det;
}

/// Rank over F_p of an arbitrary rows x cols matrix.
inline int rank_mod_prime(std::vector<long long> a, int rows, int cols,
                          long long p) {
  for (auto& x : a) x = ((x % p) + p) % p;
  auto powmod = [&](long long b, long long e) {
    long long r = 1 % p;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int row = rank; row < rows; ++row)
      if (a[static_cast<std::size_t>(row) * cols + col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols; ++j)
      std::swap(a[static_cast<std::size_t>(pivot) * cols + j],
                a[static_cast<std::size_t>(rank) * cols + j]);
    long long inv = powmod(a[static_cast<std::size_t>(rank) * cols + col], p - 2);
    for (int row = 0; row < rows; ++row) {
      if (row == rank) continue;
      long long factor =
          a[static_cast<std::size_t>(row) * cols + col] * inv % p;
      if (!factor) continue;
      for (int j = 0; j < cols; ++j)
        a[static_cast<std::size_t>(row) * cols + j] =
            ((a[static_cast<std::size_t>(row) * cols + j] -
              factor * a[static_cast<std::size_t>(rank) * cols + j]) %
                 p +
             p) %
            p;
    }
    ++rank;
  }
  return rank;
}

inline bool is_prime(long long x) {
  if (x < 2) return false;
  for (long long d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

inline std::vector<std::pair<long long, int>> factorize(long long x) {
  std::vector<std::pair<long long, int>> f;
  for (long long d = 2; d * d <= x; ++d) {
    if (x % d) continue;
    int e = 0;
    while (x % d == 0) {
      x /= d;
      ++e;
    }
    f.push_back({d, e});
  }
  if (x > 1) f.push_back({x, 1});
  return f;
}

inline long long powmod_ll(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

/// Multiplicative order of a unit mod m.
inline int unit_order(long long u, long long m) {
  long long cur = u % m;
  for (int k = 1; k <= m; ++k) {
    if (cur == 1 % m) return k;
    cur = cur * u % m;
  }
  throw std::runtime_error("unit_order: not a unit");
}

/// Smallest unit of Z/(m) whose multiplicative order is exactly ord;
/// -1 when none exists.
inline long long smallest_unit_of_order(long long m, int ord) {
  for (long long u = 1; u < m; ++u) {
    if (std::gcd(u, m) != 1) continue;
    if (unit_order(u, m) == ord) return u;
  }
  return -1;
}

}  // namespace braces
