#pragma once

#include <array>

#include "braces/core.hpp"

namespace braces {

/// A set-theoretic map r on pairs of n elements, stored componentwise:
/// r(a, b) = (u[a*n+b], v[a*n+b]). Usable both for solutions derived from
/// braces and for externally supplied tables.
struct YBESolution {
  int size = 0;
  std::vector<Elem> u;  // first component of r
  std::vector<Elem> v;  // second component of r

  Elem first(Elem a, Elem b) const { return u[static_cast<std::size_t>(a) * size + b]; }
  Elem second(Elem a, Elem b) const { return v[static_cast<std::size_t>(a) * size + b]; }
};

/// r(a,b) = (lambda_a(b), lambda^{-1}_{lambda_a(b)}(a)).
inline YBESolution solution_from_brace(const FiniteBrace& B) {
  const int n = B.order();
  // Invert every lambda row once.
  std::vector<Elem> linv(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      linv[static_cast<std::size_t>(a) * n + B.lambda(Elem(a), Elem(b))] =
          static_cast<Elem>(b);
  YBESolution sol;
  sol.size = n;
  sol.u.resize(static_cast<std::size_t>(n) * n);
  sol.v.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Elem fa = B.lambda(Elem(a), Elem(b));
      sol.u[static_cast<std::size_t>(a) * n + b] = fa;
      sol.v[static_cast<std::size_t>(a) * n + b] =
          linv[static_cast<std::size_t>(fa) * n + a];
    }
  return sol;
}

struct SolutionCheck {
  bool ok = true;
  bool exhaustive = true;
  std::array<Elem, 3> witness{0, 0, 0};
};

/// Braid relation r12 r23 r12 = r23 r12 r23 over all n^3 triples (random
/// triples above the full-check threshold unless forced).
inline SolutionCheck verify_braid(const YBESolution& sol,
                                  const Limits& limits = {}) {
  limits.validate();
  SolutionCheck res;
  const int n = sol.size;
  auto braid_holds = [&](Elem x, Elem y, Elem z) {
    // left side: r12 r23 r12
    Elem a = sol.first(x, y), b = sol.second(x, y), c = z;
    Elem b2 = sol.first(b, c), c2 = sol.second(b, c);
    Elem a3 = sol.first(a, b2), b3 = sol.second(a, b2);
    // right side: r23 r12 r23
    Elem q = sol.first(y, z), w = sol.second(y, z);
    Elem p2 = sol.first(x, q), q2 = sol.second(x, q);
    Elem w3 = sol.first(q2, w), e3 = sol.second(q2, w);
    return a3 == p2 && b3 == w3 && c2 == e3;
  };
  const bool full = limits.force_full_checks || n <= limits.full_check_threshold;
  res.exhaustive = full;
  if (full) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!braid_holds(Elem(x), Elem(y), Elem(z))) {
            res.ok = false;
            res.witness = {Elem(x), Elem(y), Elem(z)};
            return res;
          }
  } else {
    std::mt19937_64 rng(0x79626521ULL);
    std::uniform_int_distribution<int> dist(0, n - 1);
    for (std::size_t k = 0; k < limits.random_triples; ++k) {
      Elem x = Elem(dist(rng)), y = Elem(dist(rng)), z = Elem(dist(rng));
      if (!braid_holds(x, y, z)) {
        res.ok = false;
        res.witness = {x, y, z};
        return res;
      }
    }
  }
  return res;
}

/// r^2 = id over all pairs.
inline SolutionCheck verify_involutive(const YBESolution& sol) {
  SolutionCheck res;
  const int n = sol.size;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Elem x = sol.first(Elem(a), Elem(b)), y = sol.second(Elem(a), Elem(b));
      if (sol.first(x, y) != a || sol.second(x, y) != b) {
        res.ok = false;
        res.witness = {Elem(a), Elem(b), 0};
        return res;
      }
    }
  return res;
}

/// Every row map f_x = r(x,.)_1 and column map g_y = r(.,y)_2 is a
/// permutation.
inline SolutionCheck verify_nondegenerate(const YBESolution& sol) {
  SolutionCheck res;
  const int n = sol.size;
  std::vector<char> seen(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      Elem img = sol.first(Elem(x), Elem(y));
      if (seen[img]) {
        res.ok = false;
        res.witness = {Elem(x), Elem(y), 0};
        return res;
      }
      seen[img] = 1;
    }
  }
  for (int y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n; ++x) {
      Elem img = sol.second(Elem(x), Elem(y));
      if (seen[img]) {
        res.ok = false;
        res.witness = {Elem(x), Elem(y), 0};
        return res;
      }
      seen[img] = 1;
    }
  }
  return res;
}

}  // namespace braces
