#pragma once

#include <array>
#include <numeric>
#include <optional>

#include "braces/core.hpp"

namespace braces {

// ---------------------------------------------------------------------------
// Subsets
// ---------------------------------------------------------------------------

/// A subset of a brace's elements, kept sorted and duplicate-free.
struct Subset {
  std::vector<Elem> members;

  Subset() = default;
  explicit Subset(std::vector<Elem> elems) : members(std::move(elems)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }

  std::size_t size() const { return members.size(); }
  bool contains(Elem e) const {
    return std::binary_search(members.begin(), members.end(), e);
  }
  bool operator==(const Subset& other) const { return members == other.members; }
  bool operator!=(const Subset& other) const { return !(*this == other); }
};

inline Subset whole_brace(const FiniteBrace& B) {
  std::vector<Elem> all(B.order());
  std::iota(all.begin(), all.end(), 0);
  return Subset(std::move(all));
}

inline Subset zero_subset() { return Subset({0}); }

namespace detail {

inline Subset mask_to_subset(const std::vector<char>& mask) {
  std::vector<Elem> members;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) members.push_back(static_cast<Elem>(i));
  return Subset(std::move(members));
}

inline std::vector<char> subset_to_mask(const FiniteBrace& B, const Subset& S) {
  std::vector<char> mask(B.order(), 0);
  for (Elem e : S.members) {
    if (e >= B.order()) throw StructuralError("Subset: member out of range");
    mask[e] = 1;
  }
  return mask;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Additive and multiplicative closures
// ---------------------------------------------------------------------------

/// Additive subgroup generated by a set of elements.
inline Subset additive_closure(const FiniteBrace& B,
                               const std::vector<Elem>& generators) {
  std::vector<char> mask(B.order(), 0);
  std::vector<Elem> members{0};
  mask[0] = 1;
  std::vector<Elem> work{0};
  auto push = [&](Elem e) {
    if (!mask[e]) {
      mask[e] = 1;
      members.push_back(e);
      work.push_back(e);
    }
  };
  for (Elem g : generators) {
    push(g);
    push(B.neg(g));
  }
  std::size_t head = 0;
  while (head < work.size()) {
    Elem x = work[head++];
    for (std::size_t i = 0; i < members.size(); ++i)
      push(B.add(x, members[i]));
  }
  return Subset(std::move(members));
}

/// Subgroup of (B,.) generated by a set of elements.
inline Subset multiplicative_closure(const FiniteBrace& B,
                                     const std::vector<Elem>& generators) {
  std::vector<char> mask(B.order(), 0);
  std::vector<Elem> members{0};
  mask[0] = 1;
  std::vector<Elem> work{0};
  auto push = [&](Elem e) {
    if (!mask[e]) {
      mask[e] = 1;
      members.push_back(e);
      work.push_back(e);
    }
  };
  for (Elem g : generators) {
    push(g);
    push(B.inv(g));
  }
  std::size_t head = 0;
  while (head < work.size()) {
    Elem x = work[head++];
    for (std::size_t i = 0; i < members.size(); ++i) {
      push(B.mul(x, members[i]));
      push(B.mul(members[i], x));
    }
  }
  return Subset(std::move(members));
}

// ---------------------------------------------------------------------------
// Ideal predicates
// ---------------------------------------------------------------------------

inline bool is_additive_subgroup(const FiniteBrace& B, const Subset& S) {
  if (!S.contains(0)) return false;
  auto mask = detail::subset_to_mask(B, S);
  for (Elem x : S.members) {
    if (!mask[B.neg(x)]) return false;
    for (Elem y : S.members)
      if (!mask[B.add(x, y)]) return false;
  }
  return true;
}

inline bool is_multiplicative_subgroup(const FiniteBrace& B, const Subset& S) {
  if (!S.contains(0)) return false;
  auto mask = detail::subset_to_mask(B, S);
  for (Elem x : S.members) {
    if (!mask[B.inv(x)]) return false;
    for (Elem y : S.members)
      if (!mask[B.mul(x, y)]) return false;
  }
  return true;
}

/// Subbrace: closed under both operations (hence under both inverses).
inline bool is_subbrace(const FiniteBrace& B, const Subset& S) {
  return is_additive_subgroup(B, S) && is_multiplicative_subgroup(B, S);
}

/// Left ideal: an additive subgroup I with lambda_b(I) contained in I for
/// every b in B.
inline bool is_left_ideal(const FiniteBrace& B, const Subset& I) {
  if (!is_additive_subgroup(B, I)) return false;
  auto mask = detail::subset_to_mask(B, I);
  for (int b = 0; b < B.order(); ++b)
    for (Elem a : I.members)
      if (!mask[B.lambda(static_cast<Elem>(b), a)]) return false;
  return true;
}

/// Ideal: a normal subgroup N of (B,.) with lambda_b(N) contained in N for
/// every b in B.
inline bool is_ideal(const FiniteBrace& B, const Subset& N) {
  if (!is_multiplicative_subgroup(B, N)) return false;
  auto mask = detail::subset_to_mask(B, N);
  for (int g = 0; g < B.order(); ++g) {
    for (Elem x : N.members) {
      if (!mask[B.conj(static_cast<Elem>(g), x)]) return false;
      if (!mask[B.lambda(static_cast<Elem>(g), x)]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Ideal closure and the ideal lattice
// ---------------------------------------------------------------------------

/// Smallest ideal containing the seed: worklist fixed point closing under
/// multiplicative products and inverses, conjugation by every element, and
/// every lambda_b image. Additive closure follows from these.
inline Subset ideal_closure(const FiniteBrace& B, const Subset& seed) {
  const int n = B.order();
  std::vector<char> mask(n, 0);
  std::vector<Elem> members{0};
  mask[0] = 1;
  std::vector<Elem> work{0};
  auto push = [&](Elem e) {
    if (!mask[e]) {
      mask[e] = 1;
      members.push_back(e);
      work.push_back(e);
    }
  };
  for (Elem s : seed.members) {
    if (s >= n) throw StructuralError("ideal_closure: seed out of range");
    push(s);
  }
  std::size_t head = 0;
  while (head < work.size()) {
    Elem x = work[head++];
    push(B.inv(x));
    for (std::size_t i = 0; i < members.size(); ++i) {
      push(B.mul(x, members[i]));
      push(B.mul(members[i], x));
    }
    for (int g = 0; g < n; ++g) {
      push(B.conj(static_cast<Elem>(g), x));
      push(B.lambda(static_cast<Elem>(g), x));
    }
    if (members.size() == static_cast<std::size_t>(n)) break;
  }
  return Subset(std::move(members));
}

/// Complete ideal lattice as the join-closure of the principal ideal
/// closures. Includes {0} and B.
inline std::vector<Subset> all_ideals(const FiniteBrace& B,
                                      const Limits& limits = {}) {
  limits.validate();
  if (B.order() > limits.analysis_cap)
    throw SizeGuardError("all_ideals: order " + std::to_string(B.order()) +
                         " exceeds analysis_cap " +
                         std::to_string(limits.analysis_cap));
  std::vector<Subset> ideals{zero_subset()};
  auto known = [&](const Subset& s) {
    return std::find(ideals.begin(), ideals.end(), s) != ideals.end();
  };
  for (int x = 1; x < B.order(); ++x) {
    Subset c = ideal_closure(B, Subset({static_cast<Elem>(x)}));
    if (!known(c)) ideals.push_back(std::move(c));
  }
  // Join-close: every ideal is a join of principal ideals.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = ideals.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        std::vector<Elem> both = ideals[i].members;
        both.insert(both.end(), ideals[j].members.begin(),
                    ideals[j].members.end());
        Subset join = ideal_closure(B, Subset(std::move(both)));
        if (!known(join)) {
          ideals.push_back(std::move(join));
          grew = true;
        }
      }
  }
  std::sort(ideals.begin(), ideals.end(),
            [](const Subset& a, const Subset& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.members < b.members;
            });
  return ideals;
}

// ---------------------------------------------------------------------------
// Socle and series
// ---------------------------------------------------------------------------

/// soc(B) = { a | a.b = a+b for all b }.
inline Subset socle(const FiniteBrace& B) {
  std::vector<Elem> members;
  for (int a = 0; a < B.order(); ++a) {
    bool in = true;
    for (int b = 0; b < B.order(); ++b)
      if (B.mul(Elem(a), Elem(b)) != B.add(Elem(a), Elem(b))) {
        in = false;
        break;
      }
    if (in) members.push_back(static_cast<Elem>(a));
  }
  return Subset(std::move(members));
}

namespace detail {

/// Additive subgroup generated by { a*b : a in A, b in C }.
inline Subset star_span(const FiniteBrace& B, const Subset& A,
                        const Subset& C) {
  std::vector<Elem> gens;
  gens.reserve(A.size() * C.size());
  for (Elem a : A.members)
    for (Elem c : C.members) gens.push_back(B.star(a, c));
  return additive_closure(B, gens);
}

}  // namespace detail

/// Left series B^1 = B, B^{n+1} = B * B^n, returned up to stabilization
/// (the first repeated term is dropped).
inline std::vector<Subset> left_series(const FiniteBrace& B) {
  std::vector<Subset> series{whole_brace(B)};
  for (;;) {
    Subset next = detail::star_span(B, series.front(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

/// Right series B^(1) = B, B^(n+1) = B^(n) * B.
inline std::vector<Subset> right_series(const FiniteBrace& B) {
  std::vector<Subset> series{whole_brace(B)};
  for (;;) {
    Subset next = detail::star_span(B, series.back(), series.front());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

/// d-series d_1 = B^2, d_{i+1} = d_i^2, returned up to stabilization.
inline std::vector<Subset> d_series(const FiniteBrace& B) {
  Subset whole = whole_brace(B);
  std::vector<Subset> series{detail::star_span(B, whole, whole)};
  for (;;) {
    Subset next = detail::star_span(B, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

inline bool is_trivial(const FiniteBrace& B) {
  return B.add_table() == B.mul_table();
}

inline bool is_left_nilpotent(const FiniteBrace& B) {
  return left_series(B).back().size() == 1;
}

inline bool is_right_nilpotent(const FiniteBrace& B) {
  return right_series(B).back().size() == 1;
}

inline bool is_solvable(const FiniteBrace& B) {
  return d_series(B).back().size() == 1;
}

inline bool is_perfect(const FiniteBrace& B) {
  Subset whole = whole_brace(B);
  return detail::star_span(B, whole, whole) == whole;
}

/// Simplicity by brute force: the ideal closure of every nonzero singleton
/// must be the whole brace. Independent of any structure theorems, so it
/// doubles as the oracle for the simplicity criteria.
inline bool is_simple(const FiniteBrace& B) {
  if (B.order() <= 1) return false;
  for (int x = 1; x < B.order(); ++x)
    if (ideal_closure(B, Subset({static_cast<Elem>(x)})).size() !=
        static_cast<std::size_t>(B.order()))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Subbrace extraction and quotients
// ---------------------------------------------------------------------------

struct SubbraceResult {
  FiniteBrace brace;
  std::vector<Elem> to_parent;  // new index -> parent element
};

/// Re-encodes a subset closed under both operations as a brace of its own.
/// Member 0 of the sorted subset is the parent's 0, so neutrality is kept.
inline SubbraceResult subbrace(const FiniteBrace& B, const Subset& S,
                               const Limits& limits = {}) {
  if (!is_subbrace(B, S))
    throw PreconditionError("subbrace: subset is not closed under + and .");
  const int m = static_cast<int>(S.size());
  std::vector<int> to_sub(B.order(), -1);
  for (int i = 0; i < m; ++i) to_sub[S.members[i]] = i;
  std::vector<Elem> add(static_cast<std::size_t>(m) * m);
  std::vector<Elem> mul(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      add[static_cast<std::size_t>(i) * m + j] =
          static_cast<Elem>(to_sub[B.add(S.members[i], S.members[j])]);
      mul[static_cast<std::size_t>(i) * m + j] =
          static_cast<Elem>(to_sub[B.mul(S.members[i], S.members[j])]);
    }
  FiniteBrace sub(m, std::move(add), std::move(mul),
                  {{"construction", "subbrace"}});
  detail::require_valid(sub, limits, "subbrace");
  return {std::move(sub), S.members};
}

struct QuotientResult {
  FiniteBrace quotient;
  BraceMap projection;  // source = parent, target = quotient
};

/// Quotient brace B/I for an ideal I. Cosets are indexed by ascending
/// minimal representative; the coset of 0 becomes element 0. Additive and
/// multiplicative cosets coincide for ideals, which is asserted.
inline QuotientResult quotient(const FiniteBrace& B, const Subset& I,
                               const Limits& limits = {}) {
  if (!is_ideal(B, I))
    throw PreconditionError("quotient: subset is not an ideal");
  const int n = B.order();
  std::vector<int> coset_of(n, -1);
  std::vector<Elem> reps;
  for (int a = 0; a < n; ++a) {
    if (coset_of[a] != -1) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<Elem>(a));
    // additive coset a + I
    for (Elem x : I.members) {
      Elem y = B.add(static_cast<Elem>(a), x);
      if (coset_of[y] != -1 && coset_of[y] != id)
        throw PreconditionError("quotient: additive cosets are inconsistent");
      coset_of[y] = id;
    }
    // multiplicative coset a.I must be the same set
    for (Elem x : I.members) {
      Elem y = B.mul(static_cast<Elem>(a), x);
      if (coset_of[y] != id)
        throw PreconditionError(
            "quotient: multiplicative coset differs from additive coset");
    }
  }
  const int m = static_cast<int>(reps.size());
  std::vector<Elem> add(static_cast<std::size_t>(m) * m);
  std::vector<Elem> mul(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      add[static_cast<std::size_t>(i) * m + j] =
          static_cast<Elem>(coset_of[B.add(reps[i], reps[j])]);
      mul[static_cast<std::size_t>(i) * m + j] =
          static_cast<Elem>(coset_of[B.mul(reps[i], reps[j])]);
    }
  FiniteBrace Q(m, std::move(add), std::move(mul),
                {{"construction", "quotient"},
                 {"parent_order", std::to_string(n)},
                 {"ideal_size", std::to_string(I.size())}});
  detail::require_valid(Q, limits, "quotient");
  std::vector<Elem> proj(n);
  for (int a = 0; a < n; ++a) proj[a] = static_cast<Elem>(coset_of[a]);
  BraceMap pi(B, Q, std::move(proj));
  MorphismReport rep = verify_morphism(pi);
  if (!rep.is_homomorphism() || !rep.surjective)
    throw PreconditionError("quotient: projection is not a surjective morphism");
  return {std::move(Q), std::move(pi)};
}

/// Checks HN/N isomorphic to H/(H n N) by direct construction of both
/// quotients and the canonical map.
inline bool verify_second_iso(const FiniteBrace& B, const Subset& H,
                              const Subset& N, const Limits& limits = {}) {
  if (!is_subbrace(B, H))
    throw PreconditionError("verify_second_iso: H is not a subbrace");
  if (!is_ideal(B, N))
    throw PreconditionError("verify_second_iso: N is not an ideal");

  // HN as a set of products.
  std::vector<Elem> hn;
  for (Elem h : H.members)
    for (Elem x : N.members) hn.push_back(B.mul(h, x));
  Subset HN(std::move(hn));
  if (!is_subbrace(B, HN)) return false;

  SubbraceResult sHN = subbrace(B, HN, limits);
  SubbraceResult sH = subbrace(B, H, limits);

  auto restrict_to = [](const SubbraceResult& sub, const Subset& big) {
    std::vector<Elem> members;
    for (int i = 0; i < sub.brace.order(); ++i)
      if (big.contains(sub.to_parent[i])) members.push_back(static_cast<Elem>(i));
    return Subset(std::move(members));
  };

  Subset N_in_HN = restrict_to(sHN, N);
  std::vector<Elem> hin;
  for (Elem e : N.members)
    if (H.contains(e)) hin.push_back(e);
  Subset HnN_parent(std::move(hin));
  Subset HnN_in_H = restrict_to(sH, HnN_parent);

  if (!is_ideal(sHN.brace, N_in_HN) || !is_ideal(sH.brace, HnN_in_H))
    return false;

  QuotientResult q1 = quotient(sHN.brace, N_in_HN, limits);
  QuotientResult q2 = quotient(sH.brace, HnN_in_H, limits);
  if (q1.quotient.order() != q2.quotient.order()) return false;

  // Canonical map: class of h in H/(HnN) -> class of h in HN/N.
  std::vector<int> parent_to_hn(B.order(), -1);
  for (int i = 0; i < sHN.brace.order(); ++i)
    parent_to_hn[sHN.to_parent[i]] = i;
  std::vector<Elem> img(q2.quotient.order(), 0);
  std::vector<char> assigned(q2.quotient.order(), 0);
  for (int i = 0; i < sH.brace.order(); ++i) {
    Elem parent = sH.to_parent[i];
    Elem cls2 = q2.projection(static_cast<Elem>(i));
    Elem cls1 = q1.projection(static_cast<Elem>(parent_to_hn[parent]));
    if (assigned[cls2] && img[cls2] != cls1) return false;  // ill-defined
    img[cls2] = cls1;
    assigned[cls2] = 1;
  }
  BraceMap canonical(q2.quotient, q1.quotient, std::move(img));
  return verify_morphism(canonical).is_isomorphism();
}

// ---------------------------------------------------------------------------
// Derived series of the multiplicative group
// ---------------------------------------------------------------------------

/// Commutator subgroup of the subgroup D inside (B,.).
inline Subset commutator_subgroup(const FiniteBrace& B, const Subset& D) {
  std::vector<Elem> gens;
  for (Elem x : D.members)
    for (Elem y : D.members) gens.push_back(B.comm(x, y));
  return multiplicative_closure(B, gens);
}

/// Derived series of (B,.) down to stabilization, starting with B itself.
inline std::vector<Subset> derived_series_mult(const FiniteBrace& B) {
  std::vector<Subset> series{whole_brace(B)};
  for (;;) {
    Subset next = commutator_subgroup(B, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

/// Derived length of (B,.); -1 when the series stabilizes above {0}.
inline int derived_length_mult(const FiniteBrace& B) {
  std::vector<Subset> series = derived_series_mult(B);
  if (series.back().size() != 1) return -1;
  return static_cast<int>(series.size()) - 1;
}

/// Nilpotency of (B,.) via the upper central series on tables.
inline bool is_mult_group_nilpotent(const FiniteBrace& B) {
  const int n = B.order();
  std::vector<char> center(n, 0);
  center[0] = 1;
  for (;;) {
    std::vector<char> next(n, 0);
    int count = 0;
    for (int x = 0; x < n; ++x) {
      bool in = true;
      for (int y = 0; y < n; ++y)
        if (!center[B.comm(Elem(x), Elem(y))]) {
          in = false;
          break;
        }
      next[x] = in ? 1 : 0;
      count += in;
    }
    if (count == n) return true;
    if (next == center) return false;
    center = std::move(next);
  }
}

// ---------------------------------------------------------------------------
// Group isomorphism search
// ---------------------------------------------------------------------------

namespace detail {

inline int table_element_order(const std::vector<Elem>& mul, int n, int x,
                               int neutral) {
  int ord = 1;
  int cur = x;
  while (cur != neutral) {
    cur = mul[static_cast<std::size_t>(cur) * n + x];
    ++ord;
    if (ord > n) return -1;  // not a group table
  }
  return ord;
}

inline int table_neutral(const std::vector<Elem>& mul, int n) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = mul[static_cast<std::size_t>(e) * n + a] == a &&
           mul[static_cast<std::size_t>(a) * n + e] == a;
    if (ok) return e;
  }
  return -1;
}

struct IsoSearch {
  const std::vector<Elem>& mulA;
  const std::vector<Elem>& mulB;
  int n;
  int eA, eB;
  std::vector<int> ordA, ordB;
  std::vector<Elem> gens;  // generators of A

  /// Propagates phi over the subgroup generated by the first n_gens
  /// generators; fails on any conflict or injectivity violation. When the
  /// whole group is covered the result is checked to be a homomorphism.
  bool propagate(std::size_t n_gens, const std::vector<Elem>& images,
                 std::vector<Elem>* phi_out) const {
    std::vector<int> phi(n, -1);
    phi[eA] = eB;
    std::vector<Elem> work{static_cast<Elem>(eA)};
    std::vector<char> image_hit(n, 0);
    image_hit[eB] = 1;
    std::size_t head = 0;
    while (head < work.size()) {
      Elem x = work[head++];
      for (std::size_t k = 0; k < n_gens; ++k) {
        Elem y = mulA[static_cast<std::size_t>(x) * n + gens[k]];
        Elem fy = mulB[static_cast<std::size_t>(phi[x]) * n + images[k]];
        if (phi[y] == -1) {
          if (image_hit[fy]) return false;  // would break injectivity
          phi[y] = fy;
          image_hit[fy] = 1;
          work.push_back(y);
        } else if (phi[y] != static_cast<int>(fy)) {
          return false;
        }
      }
    }
    if (phi_out == nullptr) return true;  // prefix consistency only
    if (work.size() != static_cast<std::size_t>(n)) return false;
    // Full homomorphism check.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Elem ab = mulA[static_cast<std::size_t>(a) * n + b];
        if (phi[ab] != mulB[static_cast<std::size_t>(phi[a]) * n + phi[b]])
          return false;
      }
    phi_out->assign(phi.begin(), phi.end());
    return true;
  }

  bool search(std::size_t k, std::vector<Elem>& images,
              std::vector<Elem>& phi_out) const {
    if (k == gens.size()) return propagate(k, images, &phi_out);
    for (int cand = 0; cand < n; ++cand) {
      if (ordB[cand] != ordA[gens[k]]) continue;
      images[k] = static_cast<Elem>(cand);
      if (!propagate(k + 1, images, nullptr)) continue;
      if (search(k + 1, images, phi_out)) return true;
    }
    return false;
  }
};

}  // namespace detail

/// Searches for a group isomorphism between two multiplication tables by
/// backtracking over generator images with element-order pruning. Exact
/// within the configured cap.
inline std::optional<std::vector<Elem>> find_group_isomorphism(
    const std::vector<Elem>& mulA, const std::vector<Elem>& mulB, int n,
    const Limits& limits = {}) {
  limits.validate();
  if (n > limits.iso_cap)
    throw SizeGuardError("find_group_isomorphism: order exceeds iso_cap");
  if (mulA.size() != static_cast<std::size_t>(n) * n ||
      mulB.size() != static_cast<std::size_t>(n) * n)
    throw StructuralError("find_group_isomorphism: bad table size");

  detail::IsoSearch s{mulA, mulB, n, 0, 0, {}, {}, {}};
  s.eA = detail::table_neutral(mulA, n);
  s.eB = detail::table_neutral(mulB, n);
  if (s.eA < 0 || s.eB < 0)
    throw StructuralError("find_group_isomorphism: table has no neutral element");
  s.ordA.resize(n);
  s.ordB.resize(n);
  for (int x = 0; x < n; ++x) {
    s.ordA[x] = detail::table_element_order(mulA, n, x, s.eA);
    s.ordB[x] = detail::table_element_order(mulB, n, x, s.eB);
    if (s.ordA[x] < 0 || s.ordB[x] < 0)
      throw StructuralError("find_group_isomorphism: not a group table");
  }
  {
    auto a = s.ordA, b = s.ordB;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;  // order profiles differ
  }
  // Greedy generating set: keep adding the smallest element outside the
  // generated subgroup.
  std::vector<char> generated(n, 0);
  generated[s.eA] = 1;
  int covered = 1;
  while (covered < n) {
    int pick = -1;
    for (int x = 0; x < n; ++x)
      if (!generated[x]) {
        pick = x;
        break;
      }
    s.gens.push_back(static_cast<Elem>(pick));
    // close under products with the new generator set
    std::vector<Elem> members;
    for (int x = 0; x < n; ++x)
      if (generated[x]) members.push_back(static_cast<Elem>(x));
    std::vector<Elem> work = {static_cast<Elem>(pick)};
    generated[pick] = 1;
    members.push_back(static_cast<Elem>(pick));
    ++covered;
    std::size_t head = 0;
    while (head < work.size()) {
      Elem x = work[head++];
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (Elem p : {mulA[static_cast<std::size_t>(x) * n + members[i]],
                       mulA[static_cast<std::size_t>(members[i]) * n + x]}) {
          if (!generated[p]) {
            generated[p] = 1;
            members.push_back(p);
            work.push_back(p);
            ++covered;
          }
        }
      }
    }
  }
  std::vector<Elem> images(s.gens.size(), 0);
  std::vector<Elem> phi;
  if (s.search(0, images, phi)) return phi;
  return std::nullopt;
}

inline bool group_isomorphic(const std::vector<Elem>& mulA,
                             const std::vector<Elem>& mulB, int n,
                             const Limits& limits = {}) {
  return find_group_isomorphism(mulA, mulB, n, limits).has_value();
}

inline bool group_isomorphic(const FiniteBrace& B1, const FiniteBrace& B2,
                             const Limits& limits = {}) {
  if (B1.order() != B2.order()) return false;
  return group_isomorphic(B1.mul_table(), B2.mul_table(), B1.order(), limits);
}

// ---------------------------------------------------------------------------
// Analysis report
// ---------------------------------------------------------------------------

struct AnalysisReport {
  int order = 0;
  bool simple = false;
  bool perfect = false;
  bool trivial = false;
  bool solvable = false;
  bool left_nilpotent = false;
  bool right_nilpotent = false;
  std::size_t socle_size = 0;
  std::vector<std::size_t> left_series_sizes;
  std::vector<std::size_t> right_series_sizes;
  std::vector<std::size_t> d_series_sizes;
  int derived_length_mult = 0;
  std::optional<std::size_t> ideal_count;
};

inline AnalysisReport analyze(const FiniteBrace& B, bool with_ideals = false,
                              const Limits& limits = {}) {
  AnalysisReport r;
  r.order = B.order();
  r.trivial = is_trivial(B);
  r.simple = is_simple(B);
  r.perfect = is_perfect(B);
  r.socle_size = socle(B).size();
  for (const Subset& s : left_series(B)) r.left_series_sizes.push_back(s.size());
  for (const Subset& s : right_series(B)) r.right_series_sizes.push_back(s.size());
  for (const Subset& s : d_series(B)) r.d_series_sizes.push_back(s.size());
  r.left_nilpotent = r.left_series_sizes.back() == 1;
  r.right_nilpotent = r.right_series_sizes.back() == 1;
  r.solvable = r.d_series_sizes.back() == 1;
  r.derived_length_mult = derived_length_mult(B);
  if (with_ideals) r.ideal_count = all_ideals(B, limits).size();
  return r;
}

}  // namespace braces
