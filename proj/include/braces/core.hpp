#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace braces {

/// Element of a finite brace, encoded as an index 0..n-1. Index 0 is the
/// shared neutral element of both group structures.
using Elem = std::uint16_t;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base class for all library errors.
class BraceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data (wrong table sizes, out-of-range entries, ...).
class StructuralError : public BraceError {
public:
  using BraceError::BraceError;
};

/// A construction would exceed a configured resource limit.
class SizeGuardError : public BraceError {
public:
  using BraceError::BraceError;
};

/// A mathematical hypothesis of a construction is violated. The message
/// names the specific condition that failed.
class PreconditionError : public BraceError {
public:
  using BraceError::BraceError;
};

// ---------------------------------------------------------------------------
// Limits
// ---------------------------------------------------------------------------

/// Resource limits shared by constructors and verification routines.
struct Limits {
  /// Constructors refuse to build braces larger than this.
  int max_order = 4096;
  /// Hard ceiling for max_order overrides; element indices must fit 16 bits.
  static constexpr int hard_max_order = 16384;
  /// Exhaustive O(n^3) axiom checks up to this order, sampling above.
  int full_check_threshold = 1024;
  /// The cocycle compatibility check samples above this |T|.
  int cocycle_full_threshold = 512;
  /// Cap for lattice-style enumerations (all_ideals).
  int analysis_cap = 512;
  /// Cap for the group isomorphism backtracking search.
  int iso_cap = 256;
  /// Number of random triples checked when sampling replaces full checks.
  std::size_t random_triples = 1000000;
  /// Force exhaustive checks regardless of order.
  bool force_full_checks = false;

  void validate() const {
    if (max_order < 1 || max_order > hard_max_order)
      throw StructuralError("Limits: max_order must be in [1, " +
                            std::to_string(hard_max_order) + "]");
    if (full_check_threshold < 1 || cocycle_full_threshold < 1 ||
        analysis_cap < 1 || iso_cap < 1)
      throw StructuralError("Limits: thresholds must be positive");
  }

  void guard_order(long long order, const std::string& what) const {
    validate();
    if (order < 1)
      throw StructuralError(what + ": order must be positive");
    if (order > max_order)
      throw SizeGuardError(what + ": order " + std::to_string(order) +
                           " exceeds max_order " + std::to_string(max_order));
  }
};

// ---------------------------------------------------------------------------
// AbelianGroupSpec
// ---------------------------------------------------------------------------

/// A finite abelian group given as a direct product of cyclic groups.
/// Elements are encoded mixed-radix with the first listed factor least
/// significant: index = x0 + c0*(x1 + c1*(x2 + ...)).
struct AbelianGroupSpec {
  std::vector<int> cyclic_orders;

  AbelianGroupSpec() = default;
  explicit AbelianGroupSpec(std::vector<int> orders)
      : cyclic_orders(std::move(orders)) {
    for (int c : cyclic_orders)
      if (c < 1) throw StructuralError("AbelianGroupSpec: cyclic order < 1");
    if (cyclic_orders.empty())
      throw StructuralError("AbelianGroupSpec: empty factor list");
  }

  long long order() const {
    long long n = 1;
    for (int c : cyclic_orders) {
      n *= c;
      if (n > Limits::hard_max_order) return n;  // caller guards
    }
    return n;
  }

  std::vector<int> decode(long long index) const {
    std::vector<int> digits(cyclic_orders.size());
    for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
      digits[i] = static_cast<int>(index % cyclic_orders[i]);
      index /= cyclic_orders[i];
    }
    return digits;
  }

  long long encode(const std::vector<int>& digits) const {
    long long index = 0;
    for (std::size_t i = cyclic_orders.size(); i-- > 0;) {
      int d = digits[i] % cyclic_orders[i];
      if (d < 0) d += cyclic_orders[i];
      index = index * cyclic_orders[i] + d;
    }
    return index;
  }

  long long add(long long a, long long b) const {
    auto da = decode(a), db = decode(b);
    for (std::size_t i = 0; i < da.size(); ++i)
      da[i] = (da[i] + db[i]) % cyclic_orders[i];
    return encode(da);
  }
};

// ---------------------------------------------------------------------------
// FiniteBrace
// ---------------------------------------------------------------------------

struct AxiomViolation {
  std::string axiom;  // short rule name
  Elem a = 0, b = 0, c = 0;  // witness triple (unused positions are 0)
};

struct VerifyReport {
  bool valid = false;
  bool exhaustive = true;          // full O(n^3) triple checks ran
  std::size_t checked_triples = 0; // sampled triples when not exhaustive
  std::vector<AxiomViolation> violations;  // first witness per axiom
};

/// A finite left brace as explicit operation tables. Immutable after
/// construction; safe to share read-only between threads.
///
/// The constructor performs structural validation only (sizes and ranges).
/// Mathematical validity is checked by verify_brace_axioms.
class FiniteBrace {
public:
  FiniteBrace(int order, std::vector<Elem> add_table,
              std::vector<Elem> mul_table,
              std::map<std::string, std::string> meta = {})
      : n_(order),
        add_(std::move(add_table)),
        mul_(std::move(mul_table)),
        meta_(std::move(meta)) {
    if (n_ < 1) throw StructuralError("FiniteBrace: order must be >= 1");
    if (n_ > Limits::hard_max_order)
      throw StructuralError("FiniteBrace: order exceeds element index range");
    const std::size_t nn = static_cast<std::size_t>(n_) * n_;
    if (add_.size() != nn || mul_.size() != nn)
      throw StructuralError("FiniteBrace: table size does not match order");
    for (Elem e : add_)
      if (e >= n_) throw StructuralError("FiniteBrace: add entry out of range");
    for (Elem e : mul_)
      if (e >= n_) throw StructuralError("FiniteBrace: mul entry out of range");
    build_caches();
  }

  int order() const { return n_; }

  Elem add(Elem a, Elem b) const { return add_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  /// lambda(a, b) = a.b - a, the lambda map of the brace applied as
  /// lambda_a(b).
  Elem lambda(Elem a, Elem b) const { return sub(mul(a, b), a); }

  /// Inverse of the permutation b -> lambda(a, b).
  Elem lambda_inv(Elem a, Elem b) const {
    for (int x = 0; x < n_; ++x)
      if (lambda(a, static_cast<Elem>(x)) == b) return static_cast<Elem>(x);
    throw StructuralError("lambda_inv: lambda_a is not surjective");
  }

  /// star(a, b) = a.b - a - b = (lambda_a - id)(b).
  Elem star(Elem a, Elem b) const { return sub(lambda(a, b), b); }

  /// Conjugation g.x.g^{-1} in the multiplicative group.
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }

  /// Commutator x^{-1}.y^{-1}.x.y in the multiplicative group.
  Elem comm(Elem x, Elem y) const {
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }

  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& mul_table() const { return mul_; }
  const std::vector<Elem>& neg_table() const { return neg_; }
  const std::vector<Elem>& inv_table() const { return inv_; }

  const std::map<std::string, std::string>& meta() const { return meta_; }
  void set_meta(std::map<std::string, std::string> meta) { meta_ = std::move(meta); }
  void merge_meta(const std::map<std::string, std::string>& extra) {
    for (const auto& [k, v] : extra) meta_[k] = v;
  }

  bool same_tables(const FiniteBrace& other) const {
    return n_ == other.n_ && add_ == other.add_ && mul_ == other.mul_;
  }

private:
  void build_caches() {
    neg_.assign(n_, 0);
    inv_.assign(n_, 0);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (add(static_cast<Elem>(a), static_cast<Elem>(b)) == 0) {
          neg_[a] = static_cast<Elem>(b);
          break;
        }
      }
      for (int b = 0; b < n_; ++b) {
        if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 0 &&
            mul(static_cast<Elem>(b), static_cast<Elem>(a)) == 0) {
          inv_[a] = static_cast<Elem>(b);
          break;
        }
      }
    }
  }

  int n_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::map<std::string, std::string> meta_;
};

// ---------------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------------

namespace detail {

inline bool rows_and_cols_are_permutations(const FiniteBrace& B, bool use_mul,
                                           VerifyReport& report,
                                           const std::string& prefix) {
  const int n = B.order();
  bool ok = true;
  std::vector<char> seen(n);
  for (int i = 0; i < n && ok; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      Elem v = use_mul ? B.mul(Elem(i), Elem(j)) : B.add(Elem(i), Elem(j));
      if (seen[v]) {
        report.violations.push_back({prefix + "_row_latin", Elem(i), Elem(j), v});
        ok = false;
        break;
      }
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n && ok; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      Elem v = use_mul ? B.mul(Elem(i), Elem(j)) : B.add(Elem(i), Elem(j));
      if (seen[v]) {
        report.violations.push_back({prefix + "_col_latin", Elem(i), Elem(j), v});
        ok = false;
        break;
      }
      seen[v] = 1;
    }
  }
  return ok;
}

}  // namespace detail

/// Checks the full brace axiom set: (B,+) abelian group, (B,.) group, the
/// shared neutral element 0, and the compatibility law
/// a.(b+c)+a = a.b + a.c. For orders above the full-check threshold the
/// triple-quantified axioms are sampled on random triples instead (the
/// Latin-square and pairwise checks always run in full); the report records
/// which mode was used.
inline VerifyReport verify_brace_axioms(const FiniteBrace& B,
                                        const Limits& limits = {}) {
  limits.validate();
  VerifyReport report;
  const int n = B.order();

  bool add_latin = detail::rows_and_cols_are_permutations(B, false, report, "add");
  bool mul_latin = detail::rows_and_cols_are_permutations(B, true, report, "mul");

  // Shared neutral element: 0 must be neutral for both operations.
  for (int a = 0; a < n; ++a) {
    Elem e = static_cast<Elem>(a);
    if (B.add(0, e) != e || B.add(e, 0) != e) {
      report.violations.push_back({"add_neutral", e, 0, 0});
      break;
    }
  }
  for (int a = 0; a < n; ++a) {
    Elem e = static_cast<Elem>(a);
    if (B.mul(0, e) != e || B.mul(e, 0) != e) {
      report.violations.push_back({"mul_neutral", e, 0, 0});
      break;
    }
  }

  // Commutativity of +.
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (B.add(Elem(a), Elem(b)) != B.add(Elem(b), Elem(a))) {
          report.violations.push_back({"add_commutative", Elem(a), Elem(b), 0});
          return;
        }
  }();

  // Cached inverses must be genuine (only meaningful when tables are Latin).
  if (add_latin && mul_latin) {
    for (int a = 0; a < n; ++a) {
      Elem e = static_cast<Elem>(a);
      if (B.add(e, B.neg(e)) != 0) {
        report.violations.push_back({"add_inverse", e, B.neg(e), 0});
        break;
      }
      if (B.mul(e, B.inv(e)) != 0) {
        report.violations.push_back({"mul_inverse", e, B.inv(e), 0});
        break;
      }
    }
  }

  const bool full = limits.force_full_checks || n <= limits.full_check_threshold;
  report.exhaustive = full;

  auto check_triple = [&](Elem a, Elem b, Elem c, bool& aa, bool& ma, bool& cp) {
    if (aa && B.add(B.add(a, b), c) != B.add(a, B.add(b, c))) {
      report.violations.push_back({"add_associative", a, b, c});
      aa = false;
    }
    if (ma && B.mul(B.mul(a, b), c) != B.mul(a, B.mul(b, c))) {
      report.violations.push_back({"mul_associative", a, b, c});
      ma = false;
    }
    if (cp && B.add(B.mul(a, B.add(b, c)), a) !=
                  B.add(B.mul(a, b), B.mul(a, c))) {
      report.violations.push_back({"compatibility", a, b, c});
      cp = false;
    }
  };

  bool aa = true, ma = true, cp = true;
  if (full) {
    for (int a = 0; a < n && (aa || ma || cp); ++a)
      for (int b = 0; b < n && (aa || ma || cp); ++b)
        for (int c = 0; c < n; ++c) {
          check_triple(Elem(a), Elem(b), Elem(c), aa, ma, cp);
          if (!aa && !ma && !cp) break;
        }
  } else {
    std::mt19937_64 rng(0x62726163ULL);  // fixed seed, reproducible runs
    std::uniform_int_distribution<int> dist(0, n - 1);
    for (std::size_t k = 0; k < limits.random_triples && (aa || ma || cp); ++k) {
      check_triple(Elem(dist(rng)), Elem(dist(rng)), Elem(dist(rng)), aa, ma, cp);
      ++report.checked_triples;
    }
  }

  report.valid = report.violations.empty();
  return report;
}

namespace detail {

inline void require_valid(const FiniteBrace& B, const Limits& limits,
                          const std::string& what) {
  VerifyReport r = verify_brace_axioms(B, limits);
  if (!r.valid) {
    const auto& v = r.violations.front();
    throw PreconditionError(what + ": brace axioms fail at " + v.axiom +
                            " with witness (" + std::to_string(v.a) + "," +
                            std::to_string(v.b) + "," + std::to_string(v.c) +
                            ")");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// The trivial brace on the given abelian group: a+b = a.b.
inline FiniteBrace trivial_brace(const AbelianGroupSpec& spec,
                                 const Limits& limits = {}) {
  const long long order = spec.order();
  limits.guard_order(order, "trivial_brace");
  const int n = static_cast<int>(order);
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] =
          static_cast<Elem>(spec.add(a, b));
  std::map<std::string, std::string> meta{{"family", "trivial"}};
  std::string orders;
  for (std::size_t i = 0; i < spec.cyclic_orders.size(); ++i)
    orders += (i ? "," : "") + std::to_string(spec.cyclic_orders[i]);
  meta["orders"] = orders;
  FiniteBrace B(n, table, table, std::move(meta));
  detail::require_valid(B, limits, "trivial_brace");
  return B;
}

/// Builds a brace from a lambda map on an abelian group via
/// a.b = lambda_a(b) + a, then verifies the axioms. Throws
/// PreconditionError with a witness if lam is not a valid lambda map.
inline FiniteBrace brace_from_lambda(
    const AbelianGroupSpec& add_spec,
    const std::function<Elem(Elem, Elem)>& lam, const Limits& limits = {},
    std::map<std::string, std::string> meta = {}) {
  const long long order = add_spec.order();
  limits.guard_order(order, "brace_from_lambda");
  const int n = static_cast<int>(order);
  std::vector<Elem> add(static_cast<std::size_t>(n) * n);
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      add[static_cast<std::size_t>(a) * n + b] =
          static_cast<Elem>(add_spec.add(a, b));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Elem lab = lam(static_cast<Elem>(a), static_cast<Elem>(b));
      if (lab >= n)
        throw StructuralError("brace_from_lambda: lambda value out of range");
      mul[static_cast<std::size_t>(a) * n + b] =
          add[static_cast<std::size_t>(lab) * n + a];
    }
  FiniteBrace B(n, std::move(add), std::move(mul), std::move(meta));
  detail::require_valid(B, limits, "brace_from_lambda");
  return B;
}

/// Componentwise direct product. Pair (x, y) is encoded as x*|B2| + y, the
/// left factor most significant.
inline FiniteBrace direct_product(const FiniteBrace& B1, const FiniteBrace& B2,
                                  const Limits& limits = {}) {
  const long long order = static_cast<long long>(B1.order()) * B2.order();
  limits.guard_order(order, "direct_product");
  const int n = static_cast<int>(order);
  const int n2 = B2.order();
  std::vector<Elem> add(static_cast<std::size_t>(n) * n);
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const Elem a1 = static_cast<Elem>(a / n2), a2 = static_cast<Elem>(a % n2);
    for (int b = 0; b < n; ++b) {
      const Elem b1 = static_cast<Elem>(b / n2), b2 = static_cast<Elem>(b % n2);
      add[static_cast<std::size_t>(a) * n + b] =
          static_cast<Elem>(B1.add(a1, b1) * n2 + B2.add(a2, b2));
      mul[static_cast<std::size_t>(a) * n + b] =
          static_cast<Elem>(B1.mul(a1, b1) * n2 + B2.mul(a2, b2));
    }
  }
  FiniteBrace B(n, std::move(add), std::move(mul),
                {{"construction", "direct_product"}});
  detail::require_valid(B, limits, "direct_product");
  return B;
}

// ---------------------------------------------------------------------------
// Brace maps
// ---------------------------------------------------------------------------

/// A total map between braces, stored as an image table.
struct BraceMap {
  FiniteBrace source;
  FiniteBrace target;
  std::vector<Elem> image;  // image[x] in target, one entry per source element

  BraceMap(FiniteBrace src, FiniteBrace tgt, std::vector<Elem> img)
      : source(std::move(src)), target(std::move(tgt)), image(std::move(img)) {
    if (image.size() != static_cast<std::size_t>(source.order()))
      throw StructuralError("BraceMap: image size does not match source order");
    for (Elem e : image)
      if (e >= target.order())
        throw StructuralError("BraceMap: image entry out of range");
  }

  Elem operator()(Elem x) const { return image[x]; }
};

inline BraceMap identity_map(const FiniteBrace& B) {
  std::vector<Elem> img(B.order());
  for (int i = 0; i < B.order(); ++i) img[i] = static_cast<Elem>(i);
  return BraceMap(B, B, std::move(img));
}

/// g after f; requires f.target and g.source to have equal order.
inline BraceMap compose(const BraceMap& g, const BraceMap& f) {
  if (f.target.order() != g.source.order())
    throw StructuralError("compose: middle orders disagree");
  std::vector<Elem> img(f.source.order());
  for (int x = 0; x < f.source.order(); ++x) img[x] = g.image[f.image[x]];
  return BraceMap(f.source, g.target, std::move(img));
}

/// Inverse of a bijective map.
inline BraceMap inverse_map(const BraceMap& m) {
  if (m.source.order() != m.target.order())
    throw PreconditionError("inverse_map: map is not bijective");
  std::vector<Elem> img(m.target.order(), 0);
  std::vector<char> hit(m.target.order(), 0);
  for (int x = 0; x < m.source.order(); ++x) {
    if (hit[m.image[x]])
      throw PreconditionError("inverse_map: map is not injective");
    hit[m.image[x]] = 1;
    img[m.image[x]] = static_cast<Elem>(x);
  }
  return BraceMap(m.target, m.source, std::move(img));
}

struct MorphismReport {
  bool additive_hom = true;
  bool multiplicative_hom = true;
  bool injective = true;
  bool surjective = true;
  Elem add_witness_a = 0, add_witness_b = 0;
  Elem mul_witness_a = 0, mul_witness_b = 0;

  bool is_homomorphism() const { return additive_hom && multiplicative_hom; }
  bool is_isomorphism() const {
    return additive_hom && multiplicative_hom && injective && surjective;
  }
};

/// Exhaustively checks whether a map is an additive/multiplicative
/// homomorphism and whether it is bijective.
inline MorphismReport verify_morphism(const BraceMap& m) {
  MorphismReport r;
  const int n = m.source.order();
  for (int a = 0; a < n && (r.additive_hom || r.multiplicative_hom); ++a)
    for (int b = 0; b < n; ++b) {
      if (r.additive_hom &&
          m.image[m.source.add(Elem(a), Elem(b))] !=
              m.target.add(m.image[a], m.image[b])) {
        r.additive_hom = false;
        r.add_witness_a = Elem(a);
        r.add_witness_b = Elem(b);
      }
      if (r.multiplicative_hom &&
          m.image[m.source.mul(Elem(a), Elem(b))] !=
              m.target.mul(m.image[a], m.image[b])) {
        r.multiplicative_hom = false;
        r.mul_witness_a = Elem(a);
        r.mul_witness_b = Elem(b);
      }
      if (!r.additive_hom && !r.multiplicative_hom) break;
    }
  std::vector<char> hit(m.target.order(), 0);
  for (Elem e : m.image) {
    if (hit[e]) r.injective = false;
    hit[e] = 1;
  }
  r.surjective =
      std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  return r;
}

}  // namespace braces
