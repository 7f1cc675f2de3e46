#pragma once

// Shared constructions used across the test suites: reference group tables,
// quotients of multiplicative groups, and the asymmetric-product instances
// built around a simple brace of order 24.

#include <array>

#include "braces/analysis.hpp"
#include "braces/core.hpp"
#include "braces/families.hpp"
#include "braces/products.hpp"

namespace testers {

using namespace braces;

/// Multiplication table of the symmetric group on 4 points; permutations in
/// lexicographic order, (p.q)(x) = p(q(x)).
inline std::vector<Elem> s4_table() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 4>& q) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return static_cast<int>(i);
    return -1;
  };
  std::vector<Elem> table(24 * 24);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) {
      std::array<int, 4> comp;
      for (int x = 0; x < 4; ++x) comp[x] = perms[i][perms[j][x]];
      table[i * 24 + j] = static_cast<Elem>(index_of(comp));
    }
  return table;
}

/// Cyclic group table of order n.
inline std::vector<Elem> cyclic_table(int n) {
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[static_cast<std::size_t>(i) * n + j] = static_cast<Elem>((i + j) % n);
  return t;
}

/// Table of the multiplicative quotient group (B,.)/N for a normal N.
struct GroupQuotient {
  int order = 0;
  std::vector<Elem> table;
  std::vector<int> coset_of;
};

inline GroupQuotient mult_group_quotient(const FiniteBrace& B, const Subset& N) {
  const int n = B.order();
  std::vector<int> coset_of(n, -1);
  std::vector<Elem> reps;
  for (int a = 0; a < n; ++a) {
    if (coset_of[a] != -1) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<Elem>(a));
    for (Elem x : N.members) coset_of[B.mul(static_cast<Elem>(a), x)] = id;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<Elem> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] =
          static_cast<Elem>(coset_of[B.mul(reps[i], reps[j])]);
  return {m, std::move(table), std::move(coset_of)};
}

/// Elements fixed by every lambda map: { x | lambda_b(x) = x for all b }.
inline Subset lambda_fixed_set(const FiniteBrace& B) {
  std::vector<Elem> fix;
  for (int x = 0; x < B.order(); ++x) {
    bool ok = true;
    for (int b = 0; b < B.order() && ok; ++b)
      ok = B.lambda(static_cast<Elem>(b), static_cast<Elem>(x)) == x;
    if (ok) fix.push_back(static_cast<Elem>(x));
  }
  return Subset(std::move(fix));
}

/// The six invertible 2x2 matrices over F_2, in a fixed order, plus their
/// composition table.
struct GL2F2 {
  std::vector<ModMatrix> mats;
  std::vector<Elem> table;

  int index_of(const ModMatrix& M) const {
    for (std::size_t i = 0; i < mats.size(); ++i)
      if (mats[i] == M) return static_cast<int>(i);
    return -1;
  }
};

inline GL2F2 gl2_f2() {
  GL2F2 g;
  for (int bits = 0; bits < 16; ++bits) {
    ModMatrix M(2, 2,
                {static_cast<long long>(bits & 1),
                 static_cast<long long>((bits >> 1) & 1),
                 static_cast<long long>((bits >> 2) & 1),
                 static_cast<long long>((bits >> 3) & 1)});
    if (det_mod_prime(M, 2) != 0) g.mats.push_back(std::move(M));
  }
  g.table.resize(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      g.table[i * 6 + j] = static_cast<Elem>(g.index_of(g.mats[i].mul(g.mats[j])));
  return g;
}

/// Bundle for an asymmetric product T x|o S with T = (Z/2)^2 trivial,
/// S a simple non-trivial brace, and b the symplectic pairing scaled by the
/// lambda-fixed involution of S.
struct CriterionInstance {
  FiniteBrace T;
  SymmetricCocycle b;
  BraceAction action;
};

/// Builds the (Z/2)^2 instance where each s acts as the matrix selected by
/// pick_matrix(s) (an index into gl2_f2().mats).
inline CriterionInstance make_criterion_instance(
    const FiniteBrace& S, const std::function<int(Elem)>& pick_matrix) {
  Subset fix = lambda_fixed_set(S);
  if (fix.size() != 2)
    throw PreconditionError("criterion instance needs |Fix(lambda)| = 2");
  const Elem w = fix.members.back();
  if (S.add(w, w) != 0)
    throw PreconditionError("criterion instance needs an involution in Fix");

  FiniteBrace T = trivial_brace(AbelianGroupSpec({2, 2}));
  AbelianGroupSpec tspec({2, 2});
  auto pairing = [&](int t1, int t2) {
    auto a = tspec.decode(t1);
    auto b2 = tspec.decode(t2);
    return (a[0] * b2[1] + a[1] * b2[0]) % 2;
  };
  std::vector<Elem> btab(16);
  for (int t1 = 0; t1 < 4; ++t1)
    for (int t2 = 0; t2 < 4; ++t2)
      btab[t1 * 4 + t2] = pairing(t1, t2) ? w : Elem(0);
  SymmetricCocycle b{T, S, std::move(btab), true};

  GL2F2 gl = gl2_f2();
  std::vector<std::vector<Elem>> perms(S.order(), std::vector<Elem>(4));
  for (int s = 0; s < S.order(); ++s) {
    const ModMatrix& M = gl.mats[pick_matrix(static_cast<Elem>(s))];
    for (int t = 0; t < 4; ++t) {
      auto d = tspec.decode(t);
      auto img = M.apply({d[0], d[1]});
      perms[s][t] = static_cast<Elem>(
          tspec.encode({static_cast<int>(img[0]), static_cast<int>(img[1])}));
    }
  }
  BraceAction action{S, T, std::move(perms)};
  return {std::move(T), std::move(b), std::move(action)};
}

/// Identity-everywhere matrix picker.
inline std::function<int(Elem)> pick_identity() {
  GL2F2 gl = gl2_f2();
  const int id = gl.index_of(ModMatrix::identity(2, 2));
  return [id](Elem) { return id; };
}

/// Sign character of (S,.): swap matrix outside the derived subgroup.
inline std::function<int(Elem)> pick_sign_swap(const FiniteBrace& S) {
  Subset derived = commutator_subgroup(S, whole_brace(S));
  GL2F2 gl = gl2_f2();
  const int id = gl.index_of(ModMatrix::identity(2, 2));
  const int swap = gl.index_of(ModMatrix(2, 2, {0, 1, 1, 0}));
  return [derived, id, swap](Elem s) {
    return derived.contains(s) ? id : swap;
  };
}

/// Full action through (S,.)/D_2 identified with GL(2,2).
inline std::function<int(Elem)> pick_via_quotient(const FiniteBrace& S) {
  std::vector<Subset> ds = derived_series_mult(S);
  if (ds.size() < 3)
    throw PreconditionError("pick_via_quotient: derived series too short");
  GroupQuotient q = mult_group_quotient(S, ds[2]);
  if (q.order != 6)
    throw PreconditionError("pick_via_quotient: quotient is not of order 6");
  GL2F2 gl = gl2_f2();
  auto iso = find_group_isomorphism(q.table, gl.table, 6);
  if (!iso)
    throw PreconditionError("pick_via_quotient: quotient not isomorphic to GL(2,2)");
  std::vector<int> glidx(S.order());
  for (int s = 0; s < S.order(); ++s) glidx[s] = (*iso)[q.coset_of[s]];
  return [glidx](Elem s) { return glidx[s]; };
}

}  // namespace testers
