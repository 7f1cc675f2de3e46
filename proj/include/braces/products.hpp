#pragma once

#include "braces/analysis.hpp"
#include "braces/core.hpp"

namespace braces {

// ---------------------------------------------------------------------------
// Actions
// ---------------------------------------------------------------------------

/// A homomorphism from (S,.) into the brace automorphisms of T, stored as
/// one explicit permutation of T per element of S.
struct BraceAction {
  FiniteBrace actor;   // S
  FiniteBrace target;  // T
  std::vector<std::vector<Elem>> perms;  // perms[s][t]

  Elem apply(Elem s, Elem t) const { return perms[s][t]; }
};

struct Violation {
  std::string rule;
  std::vector<int> witness;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;

  void fail(std::string rule, std::vector<int> witness) {
    valid = false;
    violations.push_back({std::move(rule), std::move(witness)});
  }
  std::string summary() const {
    if (valid) return "valid";
    std::string s = violations.front().rule + " at (";
    for (std::size_t i = 0; i < violations.front().witness.size(); ++i)
      s += (i ? "," : "") + std::to_string(violations.front().witness[i]);
    return s + ")";
  }
};

/// Checks that every alpha_s is a brace automorphism of T, that alpha_0 is
/// the identity, and that s -> alpha_s is a homomorphism from (S,.).
inline ValidationReport validate_action(const BraceAction& action) {
  ValidationReport report;
  const int ns = action.actor.order();
  const int nt = action.target.order();
  if (action.perms.size() != static_cast<std::size_t>(ns)) {
    report.fail("perm_count", {static_cast<int>(action.perms.size())});
    return report;
  }
  for (int s = 0; s < ns; ++s) {
    if (action.perms[s].size() != static_cast<std::size_t>(nt)) {
      report.fail("perm_size", {s});
      return report;
    }
    std::vector<char> seen(nt, 0);
    for (int t = 0; t < nt; ++t) {
      Elem v = action.perms[s][t];
      if (v >= nt || seen[v]) {
        report.fail("not_permutation", {s, t});
        return report;
      }
      seen[v] = 1;
    }
  }
  for (int t = 0; t < nt; ++t)
    if (action.perms[0][t] != t) {
      report.fail("alpha_zero_not_identity", {t});
      break;
    }
  // Brace automorphism of T: additive and multiplicative homomorphism.
  for (int s = 0; s < ns && report.valid; ++s) {
    const auto& p = action.perms[s];
    for (int t1 = 0; t1 < nt && report.valid; ++t1)
      for (int t2 = 0; t2 < nt; ++t2) {
        if (p[action.target.add(Elem(t1), Elem(t2))] !=
            action.target.add(p[t1], p[t2])) {
          report.fail("not_additive_automorphism", {s, t1, t2});
          break;
        }
        if (p[action.target.mul(Elem(t1), Elem(t2))] !=
            action.target.mul(p[t1], p[t2])) {
          report.fail("not_multiplicative_automorphism", {s, t1, t2});
          break;
        }
      }
  }
  // Homomorphism from (S,.): alpha_{s.s'} = alpha_s o alpha_{s'}.
  for (int s1 = 0; s1 < ns && report.valid; ++s1)
    for (int s2 = 0; s2 < ns && report.valid; ++s2) {
      const auto& left = action.perms[action.actor.mul(Elem(s1), Elem(s2))];
      const auto& p1 = action.perms[s1];
      const auto& p2 = action.perms[s2];
      for (int t = 0; t < nt; ++t)
        if (left[t] != p1[p2[t]]) {
          report.fail("not_action_homomorphism", {s1, s2, t});
          break;
        }
    }
  return report;
}

/// The action in which every element of S acts as the identity on T.
inline BraceAction trivial_action(const FiniteBrace& T, const FiniteBrace& S) {
  std::vector<Elem> id(T.order());
  for (int t = 0; t < T.order(); ++t) id[t] = static_cast<Elem>(t);
  return BraceAction{S, T, std::vector<std::vector<Elem>>(S.order(), id)};
}

// ---------------------------------------------------------------------------
// Symmetric 2-cocycles
// ---------------------------------------------------------------------------

/// A symmetric 2-cocycle b : T x T -> S on (T,+) with values in (S,+),
/// stored densely. When bilinear is set the compatibility check uses the
/// two bilinear conditions instead of the general one.
struct SymmetricCocycle {
  FiniteBrace domain;    // T
  FiniteBrace codomain;  // S
  std::vector<Elem> table;  // |T| x |T| row-major, entries are S elements
  bool bilinear = false;

  Elem at(Elem t1, Elem t2) const {
    return table[static_cast<std::size_t>(t1) * domain.order() + t2];
  }
};

/// The zero cocycle into S.
inline SymmetricCocycle zero_cocycle(const FiniteBrace& T,
                                     const FiniteBrace& S) {
  return SymmetricCocycle{
      T, S,
      std::vector<Elem>(static_cast<std::size_t>(T.order()) * T.order(), 0),
      true};
}

/// Checks the cocycle laws and the compatibility condition with the action.
/// With the bilinear flag the check verifies bilinearity plus the two
/// conditions lambda_s(b(t2,t3)) = b(alpha_s t2, alpha_s t3) and
/// b(t2,t3) = b(lambda_t1 t2, lambda_t1 t3); otherwise the general
/// condition s.b(t2,t3) + b(t1.alpha_s(t2+t3), t1) =
/// b(t1.alpha_s(t2), t1.alpha_s(t3)) + s is checked in full. Above the
/// full-check threshold the triple loops switch to random sampling.
inline ValidationReport validate_cocycle(const SymmetricCocycle& b,
                                         const BraceAction& action,
                                         const Limits& limits = {}) {
  limits.validate();
  ValidationReport report;
  const FiniteBrace& T = b.domain;
  const FiniteBrace& S = b.codomain;
  const int nt = T.order();
  const int ns = S.order();
  if (b.table.size() != static_cast<std::size_t>(nt) * nt) {
    report.fail("table_size", {static_cast<int>(b.table.size())});
    return report;
  }
  for (Elem e : b.table)
    if (e >= ns) {
      report.fail("value_out_of_range", {e});
      return report;
    }
  if (action.actor.order() != ns || action.target.order() != nt) {
    report.fail("action_shape_mismatch", {});
    return report;
  }

  if (b.at(0, 0) != 0) report.fail("b_zero_zero", {});
  for (int t1 = 0; t1 < nt && report.valid; ++t1)
    for (int t2 = 0; t2 < nt; ++t2)
      if (b.at(Elem(t1), Elem(t2)) != b.at(Elem(t2), Elem(t1))) {
        report.fail("not_symmetric", {t1, t2});
        break;
      }
  for (int t = 0; t < nt; ++t)
    if (b.at(Elem(t), 0) != 0) {
      report.fail("b_t_zero", {t});
      break;
    }

  const bool full =
      limits.force_full_checks || nt <= limits.cocycle_full_threshold;

  auto cocycle_law = [&](Elem t1, Elem t2, Elem t3) {
    return S.add(b.at(T.add(t1, t2), t3), b.at(t1, t2)) ==
           S.add(b.at(t1, T.add(t2, t3)), b.at(t2, t3));
  };
  auto for_triples = [&](auto&& body) {
    if (full) {
      for (int t1 = 0; t1 < nt; ++t1)
        for (int t2 = 0; t2 < nt; ++t2)
          for (int t3 = 0; t3 < nt; ++t3)
            if (!body(Elem(t1), Elem(t2), Elem(t3))) return;
    } else {
      std::mt19937_64 rng(0x636f6379ULL);
      std::uniform_int_distribution<int> dist(0, nt - 1);
      for (std::size_t k = 0; k < limits.random_triples; ++k)
        if (!body(Elem(dist(rng)), Elem(dist(rng)), Elem(dist(rng)))) return;
    }
  };

  for_triples([&](Elem t1, Elem t2, Elem t3) {
    if (!cocycle_law(t1, t2, t3)) {
      report.fail("cocycle_law", {t1, t2, t3});
      return false;
    }
    return true;
  });
  if (!report.valid) return report;

  if (b.bilinear) {
    for_triples([&](Elem t1, Elem t2, Elem t3) {
      if (b.at(T.add(t1, t2), t3) != S.add(b.at(t1, t3), b.at(t2, t3))) {
        report.fail("not_bilinear", {t1, t2, t3});
        return false;
      }
      if (b.at(t2, t3) != b.at(T.lambda(t1, t2), T.lambda(t1, t3))) {
        report.fail("compat_lambda", {t1, t2, t3});
        return false;
      }
      return true;
    });
    for (int s = 0; s < ns && report.valid; ++s)
      for (int t2 = 0; t2 < nt && report.valid; ++t2)
        for (int t3 = 0; t3 < nt; ++t3) {
          if (S.lambda(Elem(s), b.at(Elem(t2), Elem(t3))) !=
              b.at(action.apply(Elem(s), Elem(t2)),
                   action.apply(Elem(s), Elem(t3)))) {
            report.fail("compat_alpha", {s, t2, t3});
            break;
          }
        }
  } else {
    for (int s = 0; s < ns && report.valid; ++s) {
      for_triples([&](Elem t1, Elem t2, Elem t3) {
        Elem lhs = S.add(S.mul(Elem(s), b.at(t2, t3)),
                         b.at(T.mul(t1, action.apply(Elem(s), T.add(t2, t3))), t1));
        Elem rhs = S.add(b.at(T.mul(t1, action.apply(Elem(s), t2)),
                              T.mul(t1, action.apply(Elem(s), t3))),
                         Elem(s));
        if (lhs != rhs) {
          report.fail("compat_general", {s, t1, t2, t3});
          return false;
        }
        return true;
      });
      if (!report.valid) break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Semidirect product
// ---------------------------------------------------------------------------

/// Semidirect product of braces: componentwise addition and twisted
/// multiplication (t1,s1).(t2,s2) = (t1.alpha_{s1}(t2), s1.s2). Pair (t,s)
/// is encoded as t*|S| + s.
inline FiniteBrace semidirect_product(const FiniteBrace& T,
                                      const FiniteBrace& S,
                                      const BraceAction& action,
                                      const Limits& limits = {}) {
  if (action.actor.order() != S.order() || action.target.order() != T.order())
    throw StructuralError("semidirect_product: action shape mismatch");
  ValidationReport ar = validate_action(action);
  if (!ar.valid)
    throw PreconditionError("semidirect_product: invalid action: " +
                            ar.summary());
  const long long order = static_cast<long long>(T.order()) * S.order();
  limits.guard_order(order, "semidirect_product");
  const int n = static_cast<int>(order);
  const int ns = S.order();
  std::vector<Elem> add(static_cast<std::size_t>(n) * n);
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const Elem t1 = static_cast<Elem>(a / ns), s1 = static_cast<Elem>(a % ns);
    for (int c = 0; c < n; ++c) {
      const Elem t2 = static_cast<Elem>(c / ns), s2 = static_cast<Elem>(c % ns);
      add[static_cast<std::size_t>(a) * n + c] =
          static_cast<Elem>(T.add(t1, t2) * ns + S.add(s1, s2));
      mul[static_cast<std::size_t>(a) * n + c] = static_cast<Elem>(
          T.mul(t1, action.apply(s1, t2)) * ns + S.mul(s1, s2));
    }
  }
  FiniteBrace B(n, std::move(add), std::move(mul),
                {{"construction", "semidirect_product"},
                 {"t_order", std::to_string(T.order())},
                 {"s_order", std::to_string(S.order())}});
  detail::require_valid(B, limits, "semidirect_product");
  return B;
}

// ---------------------------------------------------------------------------
// Wreath product
// ---------------------------------------------------------------------------

/// Wreath product G2 wr G1 = H2 x| G1 where H2 is the brace of functions
/// G1 -> G2 under pointwise operations and G1 acts by argument translation.
/// A function f is encoded base |G2| with f(0) least significant; a pair
/// (f, g) is encoded f_index*|G1| + g.
struct WreathProduct {
  FiniteBrace brace;
  int base_order = 0;   // |G2|
  int top_order = 0;    // |G1|
  long long fun_count = 0;  // |G2|^|G1|

  int fun_digit(long long f_idx, int pos) const {
    for (int i = 0; i < pos; ++i) f_idx /= base_order;
    return static_cast<int>(f_idx % base_order);
  }
  long long fun_index(const std::vector<int>& digits) const {
    long long idx = 0;
    for (std::size_t i = digits.size(); i-- > 0;)
      idx = idx * base_order + digits[i];
    return idx;
  }
  Elem pair_index(long long f_idx, int g_idx) const {
    return static_cast<Elem>(f_idx * top_order + g_idx);
  }
  long long f_part(Elem pair) const { return pair / top_order; }
  int g_part(Elem pair) const { return pair % top_order; }
};

inline WreathProduct wreath_product(const FiniteBrace& G2,
                                    const FiniteBrace& G1,
                                    const Limits& limits = {}) {
  limits.validate();
  long long fun_count = 1;
  for (int i = 0; i < G1.order(); ++i) {
    fun_count *= G2.order();
    if (fun_count * G1.order() > limits.max_order)
      throw SizeGuardError("wreath_product: |G2|^|G1| * |G1| exceeds max_order");
  }
  limits.guard_order(fun_count * G1.order(), "wreath_product");
  const int nh = static_cast<int>(fun_count);
  const int ng = G1.order();

  // H2: pointwise operations on functions G1 -> G2.
  std::vector<Elem> hadd(static_cast<std::size_t>(nh) * nh);
  std::vector<Elem> hmul(static_cast<std::size_t>(nh) * nh);
  std::vector<int> da(ng), db(ng), dc(ng);
  auto decode_fun = [&](int f, std::vector<int>& d) {
    for (int i = 0; i < ng; ++i) {
      d[i] = f % G2.order();
      f /= G2.order();
    }
  };
  auto encode_fun = [&](const std::vector<int>& d) {
    long long idx = 0;
    for (int i = ng; i-- > 0;) idx = idx * G2.order() + d[i];
    return static_cast<Elem>(idx);
  };
  for (int a = 0; a < nh; ++a) {
    decode_fun(a, da);
    for (int c = 0; c < nh; ++c) {
      decode_fun(c, db);
      for (int i = 0; i < ng; ++i)
        dc[i] = G2.add(static_cast<Elem>(da[i]), static_cast<Elem>(db[i]));
      hadd[static_cast<std::size_t>(a) * nh + c] = encode_fun(dc);
      for (int i = 0; i < ng; ++i)
        dc[i] = G2.mul(static_cast<Elem>(da[i]), static_cast<Elem>(db[i]));
      hmul[static_cast<std::size_t>(a) * nh + c] = encode_fun(dc);
    }
  }
  FiniteBrace H2(nh, std::move(hadd), std::move(hmul),
                 {{"construction", "wreath_function_brace"}});
  detail::require_valid(H2, limits, "wreath_product (function brace)");

  // sigma(g)(f)(x) = f(g^{-1}.x)
  std::vector<std::vector<Elem>> perms(ng, std::vector<Elem>(nh));
  for (int g = 0; g < ng; ++g) {
    const Elem ginv = G1.inv(static_cast<Elem>(g));
    for (int f = 0; f < nh; ++f) {
      decode_fun(f, da);
      for (int x = 0; x < ng; ++x)
        dc[x] = da[G1.mul(ginv, static_cast<Elem>(x))];
      perms[g][f] = encode_fun(dc);
    }
  }
  BraceAction sigma{G1, H2, std::move(perms)};
  FiniteBrace W = semidirect_product(H2, G1, sigma, limits);
  W.merge_meta({{"construction", "wreath_product"},
                {"base_order", std::to_string(G2.order())},
                {"top_order", std::to_string(G1.order())}});
  return WreathProduct{std::move(W), G2.order(), G1.order(), fun_count};
}

/// Extends an automorphism alpha1 of G1 to the automorphism
/// (f, g) -> (f o alpha1^{-1}, alpha1(g)) of G2 wr G1.
inline BraceMap induced_wreath_automorphism(const WreathProduct& W,
                                            const BraceMap& alpha1) {
  if (alpha1.source.order() != W.top_order ||
      alpha1.target.order() != W.top_order)
    throw StructuralError("induced_wreath_automorphism: alpha1 order mismatch");
  if (!alpha1.source.same_tables(alpha1.target))
    throw PreconditionError(
        "induced_wreath_automorphism: alpha1 is not an endomap of G1");
  if (!verify_morphism(alpha1).is_isomorphism())
    throw PreconditionError(
        "induced_wreath_automorphism: alpha1 is not an automorphism");
  BraceMap inv1 = inverse_map(alpha1);
  const int ng = W.top_order;
  std::vector<Elem> image(W.brace.order());
  std::vector<int> digits(ng), moved(ng);
  for (int e = 0; e < W.brace.order(); ++e) {
    long long f = W.f_part(static_cast<Elem>(e));
    int g = W.g_part(static_cast<Elem>(e));
    for (int x = 0; x < ng; ++x) digits[x] = W.fun_digit(f, x);
    for (int x = 0; x < ng; ++x) moved[x] = digits[inv1(static_cast<Elem>(x))];
    image[e] = W.pair_index(W.fun_index(moved), alpha1(static_cast<Elem>(g)));
  }
  BraceMap alpha2(W.brace, W.brace, std::move(image));
  if (!verify_morphism(alpha2).is_isomorphism())
    throw PreconditionError(
        "induced_wreath_automorphism: induced map failed verification");
  return alpha2;
}

// ---------------------------------------------------------------------------
// Asymmetric product
// ---------------------------------------------------------------------------

/// Asymmetric product T x|o S via a symmetric 2-cocycle b and an action
/// alpha:
///   (t1,s1)+(t2,s2) = (t1+t2, s1+s2+b(t1,t2))
///   (t1,s1).(t2,s2) = (t1.alpha_{s1}(t2), s1.s2)
/// The constructor validates the action and the cocycle, verifies the brace
/// axioms of the result, checks the extracted lambda map against
///   lambda_{(t1,s1)}(t2,s2) =
///     (lambda_{t1} alpha_{s1}(t2), lambda_{s1}(s2) - b(lambda_{t1} alpha_{s1}(t2), t1)),
/// checks the socle against
///   { (t,s) | lambda_s = id, lambda_t o alpha_s = id, b(t,.) = 0 },
/// and checks that T x {0} is a normal subgroup of the multiplicative group
/// and {0} x S a left ideal.
inline FiniteBrace asymmetric_product(const FiniteBrace& T,
                                      const FiniteBrace& S,
                                      const SymmetricCocycle& b,
                                      const BraceAction& action,
                                      const Limits& limits = {}) {
  if (action.actor.order() != S.order() || action.target.order() != T.order())
    throw StructuralError("asymmetric_product: action shape mismatch");
  if (b.domain.order() != T.order() || b.codomain.order() != S.order())
    throw StructuralError("asymmetric_product: cocycle shape mismatch");
  ValidationReport ar = validate_action(action);
  if (!ar.valid)
    throw PreconditionError("asymmetric_product: invalid action: " +
                            ar.summary());
  ValidationReport cr = validate_cocycle(b, action, limits);
  if (!cr.valid)
    throw PreconditionError("asymmetric_product: invalid cocycle: " +
                            cr.summary());
  const long long order = static_cast<long long>(T.order()) * S.order();
  limits.guard_order(order, "asymmetric_product");
  const int n = static_cast<int>(order);
  const int ns = S.order();
  std::vector<Elem> add(static_cast<std::size_t>(n) * n);
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const Elem t1 = static_cast<Elem>(a / ns), s1 = static_cast<Elem>(a % ns);
    for (int c = 0; c < n; ++c) {
      const Elem t2 = static_cast<Elem>(c / ns), s2 = static_cast<Elem>(c % ns);
      add[static_cast<std::size_t>(a) * n + c] = static_cast<Elem>(
          T.add(t1, t2) * ns + S.add(S.add(s1, s2), b.at(t1, t2)));
      mul[static_cast<std::size_t>(a) * n + c] = static_cast<Elem>(
          T.mul(t1, action.apply(s1, t2)) * ns + S.mul(s1, s2));
    }
  }
  FiniteBrace B(n, std::move(add), std::move(mul),
                {{"construction", "asymmetric_product"},
                 {"t_order", std::to_string(T.order())},
                 {"s_order", std::to_string(S.order())}});
  detail::require_valid(B, limits, "asymmetric_product");

  // Extracted lambda map must match the product formula.
  for (int a = 0; a < n; ++a) {
    const Elem t1 = static_cast<Elem>(a / ns), s1 = static_cast<Elem>(a % ns);
    for (int c = 0; c < n; ++c) {
      const Elem t2 = static_cast<Elem>(c / ns), s2 = static_cast<Elem>(c % ns);
      const Elem tpart = T.lambda(t1, action.apply(s1, t2));
      const Elem spart = S.sub(S.lambda(s1, s2), b.at(tpart, t1));
      if (B.lambda(static_cast<Elem>(a), static_cast<Elem>(c)) !=
          static_cast<Elem>(tpart * ns + spart))
        throw PreconditionError(
            "asymmetric_product: lambda map does not match the product formula");
    }
  }

  // Socle must match the closed form.
  {
    std::vector<Elem> expected;
    std::vector<char> lam_id_s(ns, 0);
    for (int s = 0; s < ns; ++s) {
      bool id = true;
      for (int y = 0; y < ns && id; ++y)
        id = S.lambda(Elem(s), Elem(y)) == Elem(y);
      lam_id_s[s] = id ? 1 : 0;
    }
    for (int t = 0; t < T.order(); ++t) {
      bool bzero = true;
      for (int t2 = 0; t2 < T.order() && bzero; ++t2)
        bzero = b.at(Elem(t), Elem(t2)) == 0;
      if (!bzero) continue;
      for (int s = 0; s < ns; ++s) {
        if (!lam_id_s[s]) continue;
        bool id = true;
        for (int t2 = 0; t2 < T.order() && id; ++t2)
          id = T.lambda(Elem(t), action.apply(Elem(s), Elem(t2))) == Elem(t2);
        if (id) expected.push_back(static_cast<Elem>(t * ns + s));
      }
    }
    if (socle(B) != Subset(std::move(expected)))
      throw PreconditionError(
          "asymmetric_product: socle does not match the closed form");
  }

  // T x {0} must come out normal in (B,.) and {0} x S a left ideal;
  // verified on every constructed instance rather than assumed.
  {
    std::vector<Elem> tpart;
    for (int t = 0; t < T.order(); ++t)
      tpart.push_back(static_cast<Elem>(t * ns));
    Subset TS(std::move(tpart));
    if (!is_multiplicative_subgroup(B, TS))
      throw PreconditionError("asymmetric_product: T x {0} is not a subgroup");
    auto mask = detail::subset_to_mask(B, TS);
    for (int g = 0; g < n; ++g)
      for (Elem x : TS.members)
        if (!mask[B.conj(static_cast<Elem>(g), x)])
          throw PreconditionError("asymmetric_product: T x {0} is not normal");
    std::vector<Elem> spart;
    for (int s = 0; s < ns; ++s) spart.push_back(static_cast<Elem>(s));
    if (!is_left_ideal(B, Subset(std::move(spart))))
      throw PreconditionError(
          "asymmetric_product: {0} x S is not a left ideal");
  }
  return B;
}

// ---------------------------------------------------------------------------
// Simplicity criterion for asymmetric products with trivial T
// ---------------------------------------------------------------------------

/// For T trivial, S simple non-trivial, and b non-degenerate in the sense
/// that every nonzero t has b(t,t') != 0 for some t', the product
/// T x|o S is simple exactly when the images of alpha_s - id generate T.
/// All three hypotheses are checked, not assumed.
inline bool simplicity_by_image_criterion(const FiniteBrace& T,
                                          const FiniteBrace& S,
                                          const SymmetricCocycle& b,
                                          const BraceAction& action,
                                          const Limits& limits = {}) {
  if (!is_trivial(T))
    throw PreconditionError("simplicity_by_image_criterion: T is not trivial");
  if (is_trivial(S) || !is_simple(S))
    throw PreconditionError(
        "simplicity_by_image_criterion: S is not a simple non-trivial brace");
  if (b.domain.order() != T.order() || b.codomain.order() != S.order() ||
      action.actor.order() != S.order() || action.target.order() != T.order())
    throw StructuralError("simplicity_by_image_criterion: shape mismatch");
  for (int t = 1; t < T.order(); ++t) {
    bool hit = false;
    for (int t2 = 0; t2 < T.order() && !hit; ++t2)
      hit = b.at(Elem(t), Elem(t2)) != 0;
    if (!hit)
      throw PreconditionError(
          "simplicity_by_image_criterion: b(t,t') = 0 for all t' at some "
          "nonzero t (non-degeneracy hypothesis fails)");
  }
  ValidationReport ar = validate_action(action);
  if (!ar.valid)
    throw PreconditionError("simplicity_by_image_criterion: invalid action: " +
                            ar.summary());
  std::vector<Elem> gens;
  for (int s = 0; s < S.order(); ++s)
    for (int t = 0; t < T.order(); ++t)
      gens.push_back(T.sub(action.apply(Elem(s), Elem(t)), Elem(t)));
  Subset span = additive_closure(T, gens);
  (void)limits;
  return span.size() == static_cast<std::size_t>(T.order());
}

}  // namespace braces
