#pragma once

#include "braces/analysis.hpp"
#include "braces/core.hpp"
#include "braces/matmod.hpp"
#include "braces/products.hpp"

namespace braces {

// ---------------------------------------------------------------------------
// Quadratic forms over Z/(p^r)
// ---------------------------------------------------------------------------

/// Quadratic form Q(x) = sum_{i<=j} coeffs[i][j] x_i x_j over (Z/(p^r))^n,
/// with its polar bilinear form b(x,y) = Q(x+y) - Q(x) - Q(y).
struct QuadraticFormSpec {
  int p = 2;
  int r = 1;
  int n = 1;
  std::vector<long long> coeffs;  // n x n row-major, zero below the diagonal

  QuadraticFormSpec(int prime, int exponent, int rank,
                    std::vector<long long> upper)
      : p(prime), r(exponent), n(rank), coeffs(std::move(upper)) {
    if (!is_prime(p)) throw StructuralError("QuadraticFormSpec: p not prime");
    if (r < 1 || n < 1) throw StructuralError("QuadraticFormSpec: r,n >= 1");
    if (coeffs.size() != static_cast<std::size_t>(n) * n)
      throw StructuralError("QuadraticFormSpec: coefficient count");
    const long long m = modulus();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto& c = coeffs[static_cast<std::size_t>(i) * n + j];
        if (i > j && c % m != 0)
          throw StructuralError("QuadraticFormSpec: not upper-triangular");
        c = ((c % m) + m) % m;
      }
  }

  long long modulus() const {
    long long m = 1;
    for (int i = 0; i < r; ++i) {
      m *= p;
      if (m > Limits::hard_max_order)
        throw SizeGuardError("QuadraticFormSpec: p^r exceeds the order ceiling");
    }
    return m;
  }

  long long eval(const std::vector<long long>& x) const {
    const long long m = modulus();
    long long q = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        q = (q + coeffs[static_cast<std::size_t>(i) * n + j] % m * (x[i] % m) %
                     m * (x[j] % m)) %
            m;
    return q;
  }

  long long polar(const std::vector<long long>& x,
                  const std::vector<long long>& y) const {
    const long long m = modulus();
    std::vector<long long> sum(n);
    for (int i = 0; i < n; ++i) sum[i] = (x[i] + y[i]) % m;
    long long v = (eval(sum) - eval(x) - eval(y)) % m;
    return (v + m) % m;
  }

  ModMatrix polar_matrix() const {
    const long long m = modulus();
    std::vector<long long> b(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        b[static_cast<std::size_t>(i) * n + j] =
            (coeffs[static_cast<std::size_t>(i) * n + j] +
             coeffs[static_cast<std::size_t>(j) * n + i]) %
            m;
    return ModMatrix(n, m, std::move(b));
  }

  /// Non-degeneracy of the polar form: det of its matrix is a unit mod p^r.
  bool polar_nondegenerate() const {
    return det_mod_prime(polar_matrix(), p) != 0;
  }
};

namespace detail {

/// Multiply with saturation just above the hard order ceiling, so order
/// computations can never overflow before the size guard fires.
inline long long sat_mul_order(long long a, long long b) {
  const long long cap = 4LL * Limits::hard_max_order;
  if (b > 0 && a > cap / b) return cap + 1;
  return a * b;
}

inline std::vector<long long> decode_vector(long long idx, long long mod,
                                            int len) {
  std::vector<long long> v(len);
  for (int i = 0; i < len; ++i) {
    v[i] = idx % mod;
    idx /= mod;
  }
  return v;
}

inline long long encode_vector(const std::vector<long long>& v, long long mod) {
  long long idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * mod + (v[i] % mod);
  return idx;
}

inline bool matrices_orthogonal_for(const ModMatrix& M, const ModMatrix& form) {
  // M^t * form * M == form
  const int n = M.n;
  std::vector<long long> mt(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mt[static_cast<std::size_t>(i) * n + j] = M.at(j, i);
  ModMatrix Mt(n, M.mod, std::move(mt));
  return Mt.mul(form).mul(M) == form;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Small named examples
// ---------------------------------------------------------------------------

/// Order-12 brace K x| Z/3 where K = Z/2 x Z/2 and x acts as the x-th power
/// of the matrix [[0,1],[1,1]] over F_2. Right nilpotent but not left
/// nilpotent.
inline FiniteBrace build_b3(const Limits& limits = {}) {
  FiniteBrace K = trivial_brace(AbelianGroupSpec({2, 2}), limits);
  FiniteBrace Z3 = trivial_brace(AbelianGroupSpec({3}), limits);
  ModMatrix M(2, 2, {0, 1, 1, 1});
  AbelianGroupSpec kspec({2, 2});
  std::vector<std::vector<Elem>> perms(3, std::vector<Elem>(4));
  for (int x = 0; x < 3; ++x) {
    ModMatrix Mx = M.pow(x);
    for (int k = 0; k < 4; ++k) {
      auto d = kspec.decode(k);
      auto img = Mx.apply({d[0], d[1]});
      perms[x][k] = static_cast<Elem>(
          kspec.encode({static_cast<int>(img[0]), static_cast<int>(img[1])}));
    }
  }
  BraceAction action{Z3, K, std::move(perms)};
  FiniteBrace B = semidirect_product(K, Z3, action, limits);
  B.merge_meta({{"family", "b3"}});
  return B;
}

/// Order-72 perfect brace Z/3 x| B that is not simple, built from a simple
/// brace B of order 24 through the index-2 sign-like character of its
/// multiplicative group.
inline FiniteBrace build_perfect_not_simple(const FiniteBrace& B24,
                                            const Limits& limits = {}) {
  if (B24.order() != 24)
    throw PreconditionError("build_perfect_not_simple: brace must have order 24");
  if (!is_simple(B24))
    throw PreconditionError("build_perfect_not_simple: brace is not simple");
  Subset derived = commutator_subgroup(B24, whole_brace(B24));
  if (derived.size() * 2 != static_cast<std::size_t>(B24.order()))
    throw PreconditionError(
        "build_perfect_not_simple: multiplicative abelianization is not of "
        "order 2, no sign-like morphism onto Aut(Z/3)");
  FiniteBrace T = trivial_brace(AbelianGroupSpec({3}), limits);
  std::vector<std::vector<Elem>> perms(24, std::vector<Elem>(3));
  for (int s = 0; s < 24; ++s) {
    const bool flip = !derived.contains(static_cast<Elem>(s));
    for (int z = 0; z < 3; ++z)
      perms[s][z] = static_cast<Elem>(flip ? (3 - z) % 3 : z);
  }
  BraceAction action{B24, T, std::move(perms)};
  FiniteBrace B = semidirect_product(T, B24, action, limits);
  B.merge_meta({{"family", "perfect_not_simple"}});
  return B;
}

// ---------------------------------------------------------------------------
// Iterated wreath construction (two levels)
// ---------------------------------------------------------------------------

/// Simple brace Gbar_2 x|o A of order p1*p2^p1 built from the wreath product
/// G_2 = F_{p2} wr F_{p1}: the central ideal N_2 of constant functions is
/// factored out, a unit gamma of order p2 mod p1 induces the action of
/// A = F_{p2}, and the cocycle comes from the augmentation-style bilinear
/// form on the function brace. Every intermediate object is re-verified.
inline FiniteBrace build_wreath_simple(int p1, int p2,
                                       const Limits& limits = {}) {
  if (!is_prime(p1) || !is_prime(p2))
    throw PreconditionError("build_wreath_simple: p1 and p2 must be prime");
  if ((p1 - 1) % p2 != 0)
    throw PreconditionError("build_wreath_simple: p2 must divide p1 - 1");

  FiniteBrace G1 = trivial_brace(AbelianGroupSpec({p1}), limits);
  FiniteBrace F2 = trivial_brace(AbelianGroupSpec({p2}), limits);
  WreathProduct W = wreath_product(F2, G1, limits);
  const FiniteBrace& G2 = W.brace;

  // N_2: pairs (f, 0) with f constant.
  long long unit_sum = 0;  // index of the constant-1 function
  {
    long long power = 1;
    for (int i = 0; i < p1; ++i) {
      unit_sum += power;
      power *= p2;
    }
  }
  std::vector<Elem> n2;
  for (int c = 0; c < p2; ++c)
    n2.push_back(W.pair_index(c * unit_sum, 0));
  Subset N2(std::move(n2));

  for (Elem x : N2.members) {
    for (int g = 0; g < G2.order(); ++g) {
      if (G2.mul(static_cast<Elem>(g), x) != G2.mul(x, static_cast<Elem>(g)))
        throw PreconditionError(
            "build_wreath_simple: N_2 is not central in the multiplicative group");
      if (G2.mul(x, static_cast<Elem>(g)) != G2.add(x, static_cast<Elem>(g)))
        throw PreconditionError(
            "build_wreath_simple: N_2 is not inside the socle");
    }
  }
  if (!is_ideal(G2, N2))
    throw PreconditionError("build_wreath_simple: N_2 is not an ideal");

  QuotientResult q = quotient(G2, N2, limits);
  const FiniteBrace& Gbar = q.quotient;

  // gamma: smallest unit of order p2 in F_{p1}^*.
  long long gamma = smallest_unit_of_order(p1, p2);
  if (gamma < 0)
    throw PreconditionError("build_wreath_simple: no unit of order p2 mod p1");

  std::vector<Elem> a1img(p1);
  for (int z = 0; z < p1; ++z)
    a1img[z] = static_cast<Elem>(gamma * z % p1);
  BraceMap alpha1(G1, G1, std::move(a1img));
  BraceMap alpha2 = induced_wreath_automorphism(W, alpha1);

  for (Elem x : N2.members)
    if (!N2.contains(alpha2(x)))
      throw PreconditionError(
          "build_wreath_simple: induced automorphism does not preserve N_2");

  // alpha'_2 on Gbar, checked to be well defined on every element.
  std::vector<Elem> a2bar(Gbar.order(), 0);
  std::vector<char> seen(Gbar.order(), 0);
  for (int x = 0; x < G2.order(); ++x) {
    Elem cls = q.projection(static_cast<Elem>(x));
    Elem img = q.projection(alpha2(static_cast<Elem>(x)));
    if (seen[cls] && a2bar[cls] != img)
      throw PreconditionError(
          "build_wreath_simple: induced automorphism of Gbar is ill-defined");
    a2bar[cls] = img;
    seen[cls] = 1;
  }
  BraceMap alpha2bar(Gbar, Gbar, std::move(a2bar));
  if (!verify_morphism(alpha2bar).is_isomorphism())
    throw PreconditionError(
        "build_wreath_simple: induced map on Gbar is not an automorphism");

  FiniteBrace A = trivial_brace(AbelianGroupSpec({p2}), limits);
  std::vector<std::vector<Elem>> aperms(p2);
  {
    BraceMap cur = identity_map(Gbar);
    for (int i = 0; i < p2; ++i) {
      aperms[i] = cur.image;
      cur = compose(alpha2bar, cur);
    }
    if (cur.image != identity_map(Gbar).image)
      throw PreconditionError(
          "build_wreath_simple: induced automorphism does not have order "
          "dividing p2");
  }
  BraceAction action{A, Gbar, std::move(aperms)};

  // b_2 on the function brace: eps(f1).eps(f2) - eps(f1 pointwise* f2).
  auto eps = [&](long long f) {
    long long s = 0;
    for (int i = 0; i < p1; ++i) s += W.fun_digit(f, i);
    return s % p2;
  };
  auto b2 = [&](long long f1, long long f2) {
    long long dot = 0;
    for (int i = 0; i < p1; ++i)
      dot += static_cast<long long>(W.fun_digit(f1, i)) * W.fun_digit(f2, i);
    long long v = (eps(f1) * eps(f2) - dot) % p2;
    return (v + p2) % p2;
  };
  for (int f = 0; f < W.fun_count; ++f)
    for (int c = 0; c < p2; ++c)
      if (b2(c * unit_sum, f) != 0)
        throw PreconditionError(
            "build_wreath_simple: b_2 does not vanish on constant functions");

  // Induced form on Gbar, with a well-definedness sweep over coset members.
  const int ng = Gbar.order();
  std::vector<Elem> btable(static_cast<std::size_t>(ng) * ng, 0);
  std::vector<char> bset(static_cast<std::size_t>(ng) * ng, 0);
  for (int x = 0; x < G2.order(); ++x)
    for (int y = 0; y < G2.order(); ++y) {
      Elem cx = q.projection(static_cast<Elem>(x));
      Elem cy = q.projection(static_cast<Elem>(y));
      Elem v = static_cast<Elem>(
          b2(W.f_part(static_cast<Elem>(x)), W.f_part(static_cast<Elem>(y))));
      std::size_t at = static_cast<std::size_t>(cx) * ng + cy;
      if (bset[at] && btable[at] != v)
        throw PreconditionError(
            "build_wreath_simple: induced bilinear form is ill-defined");
      btable[at] = v;
      bset[at] = 1;
    }

  // Non-degeneracy of the induced form on Hbar_2 = classes of (f, 0).
  {
    std::vector<Elem> hbar;
    for (int f = 0; f < W.fun_count; ++f)
      hbar.push_back(q.projection(W.pair_index(f, 0)));
    Subset Hbar(std::move(hbar));
    for (Elem h : Hbar.members) {
      if (h == 0) continue;
      bool hit = false;
      for (Elem h2 : Hbar.members)
        if (btable[static_cast<std::size_t>(h) * ng + h2] != 0) {
          hit = true;
          break;
        }
      if (!hit)
        throw PreconditionError(
            "build_wreath_simple: induced form on Hbar_2 is degenerate");
    }
  }

  SymmetricCocycle b{Gbar, A, std::move(btable), true};
  FiniteBrace B = asymmetric_product(Gbar, A, b, action, limits);
  B.merge_meta({{"family", "wreath_simple"},
                {"p1", std::to_string(p1)},
                {"p2", std::to_string(p2)},
                {"gamma", std::to_string(gamma)}});
  return B;
}

// ---------------------------------------------------------------------------
// Generalized construction
// ---------------------------------------------------------------------------

struct GeneralizedBlock {
  int l = 0;        // modulus of the cyclic factor acting through c
  int n = 0;        // rank of the F_p block
  ModMatrix b;      // non-degenerate symmetric bilinear form over F_p
  ModMatrix c;      // orthogonal, order l
  ModMatrix f;      // orthogonal, order p
  long long gamma = 0;  // unit of Z/(l) of order p
};

struct GeneralizedData {
  int p = 0;
  std::vector<GeneralizedBlock> blocks;
};

struct GeneralizedResult {
  FiniteBrace brace;
  bool predicted_simple = false;
  Subset i_prime;  // the canonical ideal built from im(c_i-id)+im(f_i-id)
};

/// Asymmetric product B = ((Z/p)^n x| A) x|o Z/p from per-block data
/// (b_i, c_i, f_i, gamma_i). Every stated hypothesis is checked and the
/// violated condition is named in the error. predicted_simple reports the
/// criterion im(c_i-id)+im(f_i-id) = (Z/p)^{n_i} for all i; the ideal I'
/// spanned by those images is returned and verified.
inline GeneralizedResult build_generalized(const GeneralizedData& data,
                                           const Limits& limits = {}) {
  const int p = data.p;
  if (!is_prime(p))
    throw PreconditionError("build_generalized: p is not prime");
  if (data.blocks.empty())
    throw PreconditionError("build_generalized: no blocks");
  const int s = static_cast<int>(data.blocks.size());

  for (int i = 0; i < s; ++i) {
    const auto& blk = data.blocks[i];
    const std::string tag = "block " + std::to_string(i + 1) + ": ";
    if (blk.l <= 1)
      throw PreconditionError("build_generalized: " + tag + "l_i must be > 1");
    for (auto [qprime, e] : factorize(blk.l))
      if ((qprime - 1) % p != 0)
        throw PreconditionError(
            "build_generalized: " + tag +
            "p must divide q-1 for every prime divisor q of l_i");
    if (blk.n < 1 || blk.b.n != blk.n || blk.c.n != blk.n || blk.f.n != blk.n ||
        blk.b.mod != p || blk.c.mod != p || blk.f.mod != p)
      throw StructuralError("build_generalized: " + tag + "matrix shapes");
    for (int a = 0; a < blk.n; ++a)
      for (int bcol = 0; bcol < blk.n; ++bcol)
        if (blk.b.at(a, bcol) != blk.b.at(bcol, a))
          throw PreconditionError("build_generalized: " + tag +
                                  "b_i is not symmetric");
    if (rank_mod_prime(blk.b.a, blk.n, blk.n, p) != blk.n)
      throw PreconditionError("build_generalized: " + tag +
                              "b_i is degenerate");
    if (!detail::matrices_orthogonal_for(blk.c, blk.b))
      throw PreconditionError("build_generalized: " + tag +
                              "c_i is not orthogonal for b_i");
    if (!detail::matrices_orthogonal_for(blk.f, blk.b))
      throw PreconditionError("build_generalized: " + tag +
                              "f_i is not orthogonal for b_i");
    if (blk.c.order(1 << 16) != blk.l)
      throw PreconditionError("build_generalized: " + tag +
                              "c_i does not have order l_i");
    if (blk.f.order(1 << 16) != p)
      throw PreconditionError("build_generalized: " + tag +
                              "f_i does not have order p");
    if (std::gcd(blk.gamma, static_cast<long long>(blk.l)) != 1)
      throw PreconditionError("build_generalized: " + tag +
                              "gamma_i is not invertible in Z/(l_i)");
    if (unit_order(blk.gamma, blk.l) != p)
      throw PreconditionError("build_generalized: " + tag +
                              "gamma_i does not have order p");
    if (std::gcd(((blk.gamma - 1) % blk.l + blk.l) % blk.l,
                 static_cast<long long>(blk.l)) != 1)
      throw PreconditionError("build_generalized: " + tag +
                              "gamma_i - 1 is not invertible in Z/(l_i)");
    if (blk.f.mul(blk.c) != blk.c.pow(blk.gamma).mul(blk.f))
      throw PreconditionError("build_generalized: " + tag +
                              "f_i c_i = c_i^{gamma_i} f_i fails");
  }

  int n_total = 0;
  long long order = p;  // the final Z/p factor
  for (const auto& blk : data.blocks) {
    n_total += blk.n;
    for (int k = 0; k < blk.n; ++k) order = detail::sat_mul_order(order, p);
    order = detail::sat_mul_order(order, blk.l);
  }
  limits.guard_order(order, "build_generalized");

  std::vector<int> uspec_orders(n_total, p);
  AbelianGroupSpec uspec(uspec_orders);
  FiniteBrace U = trivial_brace(uspec, limits);
  std::vector<int> aorders;
  for (const auto& blk : data.blocks) aorders.push_back(blk.l);
  AbelianGroupSpec aspec(aorders);
  FiniteBrace A = trivial_brace(aspec, limits);

  std::vector<int> offsets(s, 0);
  for (int i = 1; i < s; ++i)
    offsets[i] = offsets[i - 1] + data.blocks[i - 1].n;

  // Powers of the block matrices.
  std::vector<std::vector<ModMatrix>> cpow(s), fpow(s);
  for (int i = 0; i < s; ++i) {
    cpow[i].push_back(ModMatrix::identity(data.blocks[i].n, p));
    for (int k = 1; k < data.blocks[i].l; ++k)
      cpow[i].push_back(cpow[i].back().mul(data.blocks[i].c));
    fpow[i].push_back(ModMatrix::identity(data.blocks[i].n, p));
    for (int k = 1; k < p; ++k)
      fpow[i].push_back(fpow[i].back().mul(data.blocks[i].f));
  }

  auto split_u = [&](long long u_idx) {
    std::vector<std::vector<long long>> parts(s);
    auto digits = detail::decode_vector(u_idx, p, n_total);
    for (int i = 0; i < s; ++i)
      parts[i].assign(digits.begin() + offsets[i],
                      digits.begin() + offsets[i] + data.blocks[i].n);
    return parts;
  };
  auto join_u = [&](const std::vector<std::vector<long long>>& parts) {
    std::vector<long long> digits;
    for (const auto& part : parts)
      digits.insert(digits.end(), part.begin(), part.end());
    return detail::encode_vector(digits, p);
  };

  // beta: A acts on U by block powers of c_i.
  std::vector<std::vector<Elem>> bperms(A.order(), std::vector<Elem>(U.order()));
  for (int a = 0; a < A.order(); ++a) {
    auto adig = aspec.decode(a);
    for (int u = 0; u < U.order(); ++u) {
      auto parts = split_u(u);
      for (int i = 0; i < s; ++i) parts[i] = cpow[i][adig[i]].apply(parts[i]);
      bperms[a][u] = static_cast<Elem>(join_u(parts));
    }
  }
  BraceAction beta{A, U, std::move(bperms)};
  FiniteBrace T = semidirect_product(U, A, beta, limits);

  FiniteBrace S = trivial_brace(AbelianGroupSpec({p}), limits);

  // alpha_mu acts by f_i^mu on the vector blocks and gamma_i^mu on A.
  const int na = A.order();
  std::vector<std::vector<Elem>> aperms(p, std::vector<Elem>(T.order()));
  for (int mu = 0; mu < p; ++mu) {
    std::vector<long long> gamma_pow(s);
    for (int i = 0; i < s; ++i)
      gamma_pow[i] = powmod_ll(data.blocks[i].gamma, mu, data.blocks[i].l);
    for (int t = 0; t < T.order(); ++t) {
      const int u = t / na;
      const int a = t % na;
      auto parts = split_u(u);
      for (int i = 0; i < s; ++i) parts[i] = fpow[i][mu].apply(parts[i]);
      auto adig = aspec.decode(a);
      for (int i = 0; i < s; ++i)
        adig[i] = static_cast<int>(gamma_pow[i] * adig[i] % data.blocks[i].l);
      aperms[mu][t] =
          static_cast<Elem>(join_u(parts) * na + aspec.encode(adig));
    }
  }
  BraceAction alpha{S, T, std::move(aperms)};

  // b((u,a),(v,a')) = sum_i b_i(u_i, v_i).
  auto block_form = [&](int i, const std::vector<long long>& x,
                        const std::vector<long long>& y) {
    long long acc = 0;
    for (int row = 0; row < data.blocks[i].n; ++row)
      for (int col = 0; col < data.blocks[i].n; ++col)
        acc = (acc + x[row] * data.blocks[i].b.at(row, col) % p * y[col]) % p;
    return acc;
  };
  const int nt = T.order();
  std::vector<Elem> btable(static_cast<std::size_t>(nt) * nt);
  for (int t1 = 0; t1 < nt; ++t1) {
    auto parts1 = split_u(t1 / na);
    for (int t2 = 0; t2 < nt; ++t2) {
      auto parts2 = split_u(t2 / na);
      long long acc = 0;
      for (int i = 0; i < s; ++i) acc = (acc + block_form(i, parts1[i], parts2[i])) % p;
      btable[static_cast<std::size_t>(t1) * nt + t2] = static_cast<Elem>(acc);
    }
  }
  SymmetricCocycle b{T, S, std::move(btable), true};

  FiniteBrace B = asymmetric_product(T, S, b, alpha, limits);
  {
    std::map<std::string, std::string> meta{{"family", "generalized"},
                                            {"p", std::to_string(p)}};
    std::string ls, gs;
    for (int i = 0; i < s; ++i) {
      ls += (i ? "," : "") + std::to_string(data.blocks[i].l);
      gs += (i ? "," : "") + std::to_string(data.blocks[i].gamma);
    }
    meta["l"] = ls;
    meta["gamma"] = gs;
    B.merge_meta(meta);
  }

  // Simplicity criterion: im(c_i - id) + im(f_i - id) spans each block.
  bool predicted = true;
  std::vector<std::vector<char>> span_mask(s);
  for (int i = 0; i < s; ++i) {
    const auto& blk = data.blocks[i];
    std::vector<long long> stacked;  // 2n x n over F_p, rows = images^t
    ModMatrix cm = blk.c.add_scaled_identity(-1);
    ModMatrix fm = blk.f.add_scaled_identity(-1);
    for (int col = 0; col < blk.n; ++col) {
      std::vector<long long> crow(blk.n), frow(blk.n);
      for (int row = 0; row < blk.n; ++row) {
        crow[row] = cm.at(row, col);
        frow[row] = fm.at(row, col);
      }
      stacked.insert(stacked.end(), crow.begin(), crow.end());
      stacked.insert(stacked.end(), frow.begin(), frow.end());
    }
    const bool full =
        rank_mod_prime(stacked, 2 * blk.n, blk.n, p) == blk.n;
    predicted = predicted && full;

    // Enumerate the image span for the ideal I'.
    long long count = 1;
    for (int k = 0; k < blk.n; ++k) count *= p;
    std::vector<char> mask(count, 0);
    mask[0] = 1;
    std::vector<long long> members{0}, work{0};
    std::vector<long long> gens;
    for (int col = 0; col < blk.n; ++col) {
      std::vector<long long> cv(blk.n), fv(blk.n);
      for (int row = 0; row < blk.n; ++row) {
        cv[row] = cm.at(row, col);
        fv[row] = fm.at(row, col);
      }
      gens.push_back(detail::encode_vector(cv, p));
      gens.push_back(detail::encode_vector(fv, p));
    }
    for (long long g : gens)
      if (!mask[g]) {
        mask[g] = 1;
        members.push_back(g);
        work.push_back(g);
      }
    std::size_t head = 0;
    while (head < work.size()) {
      long long x = work[head++];
      auto dx = detail::decode_vector(x, p, blk.n);
      for (std::size_t mi = 0; mi < members.size(); ++mi) {
        auto dy = detail::decode_vector(members[mi], p, blk.n);
        for (int k = 0; k < blk.n; ++k) dy[k] = (dy[k] + dx[k]) % p;
        long long z = detail::encode_vector(dy, p);
        if (!mask[z]) {
          mask[z] = 1;
          members.push_back(z);
          work.push_back(z);
        }
      }
    }
    if (full != (members.size() == static_cast<std::size_t>(count)))
      throw BraceError("build_generalized: rank and span computations disagree");
    span_mask[i] = std::move(mask);
  }

  std::vector<Elem> iprime;
  for (int t = 0; t < nt; ++t) {
    auto parts = split_u(t / na);
    bool in = true;
    for (int i = 0; i < s && in; ++i)
      in = span_mask[i][detail::encode_vector(parts[i], p)] != 0;
    if (!in) continue;
    for (int mu = 0; mu < p; ++mu)
      iprime.push_back(static_cast<Elem>(t * p + mu));
  }
  Subset Iprime(std::move(iprime));
  if (!is_ideal(B, Iprime))
    throw PreconditionError("build_generalized: canonical subset I' failed the "
                            "ideal check");

  return {std::move(B), predicted, std::move(Iprime)};
}

// ---------------------------------------------------------------------------
// Concrete cyclotomic realization
// ---------------------------------------------------------------------------

/// One block of the concrete construction: R = F_p[x]/(x^{l-1}+...+x+1) with
/// c = multiplication by the class of x, f the substitution x -> x^gamma,
/// and the all-ones-off-diagonal bilinear form.
inline GeneralizedBlock cyclotomic_block(int p, int l) {
  if (!is_prime(p)) throw PreconditionError("cyclotomic_block: p not prime");
  if (l <= 1) throw PreconditionError("cyclotomic_block: l must be > 1");
  for (auto [qprime, e] : factorize(l))
    if ((qprime - 1) % p != 0)
      throw PreconditionError(
          "cyclotomic_block: p must divide q-1 for every prime divisor q of l");
  const int n = l - 1;

  // gamma via CRT: per prime power component, the smallest unit of order p.
  long long gamma = 0, mod_so_far = 1;
  for (auto [qprime, e] : factorize(l)) {
    long long qe = 1;
    for (int k = 0; k < e; ++k) qe *= qprime;
    long long g = smallest_unit_of_order(qe, p);
    if (g < 0)
      throw PreconditionError("cyclotomic_block: no unit of order p mod q^e");
    // combine gamma = g (mod qe) with the accumulated residue
    for (long long cand = gamma;; cand += mod_so_far)
      if (cand % qe == g) {
        gamma = cand;
        break;
      }
    mod_so_far *= qe;
  }

  // c: multiplication by xi; column l-2 is -(1,...,1).
  std::vector<long long> cm(static_cast<std::size_t>(n) * n, 0);
  for (int j = 0; j + 1 < n; ++j) cm[static_cast<std::size_t>(j + 1) * n + j] = 1;
  for (int i = 0; i < n; ++i) cm[static_cast<std::size_t>(i) * n + (n - 1)] = p - 1;
  ModMatrix c(n, p, std::move(cm));

  // f: xi^j -> xi^{j*gamma mod l}, where xi^{l-1} = -(1+...+xi^{l-2}).
  std::vector<long long> fm(static_cast<std::size_t>(n) * n, 0);
  for (int j = 0; j < n; ++j) {
    long long k = j * gamma % l;
    if (k < n)
      fm[static_cast<std::size_t>(k) * n + j] = 1;
    else
      for (int i = 0; i < n; ++i) fm[static_cast<std::size_t>(i) * n + j] = p - 1;
  }
  ModMatrix f(n, p, std::move(fm));

  std::vector<long long> bm(static_cast<std::size_t>(n) * n, 1);
  for (int i = 0; i < n; ++i) bm[static_cast<std::size_t>(i) * n + i] = 0;
  ModMatrix b(n, p, std::move(bm));

  if (det_mod_prime(c.add_scaled_identity(-1), p) == 0)
    throw PreconditionError("cyclotomic_block: c - id is not invertible");

  return GeneralizedBlock{l, n, std::move(b), std::move(c), std::move(f), gamma};
}

/// Simple brace from the concrete cyclotomic data for a prime p and moduli
/// l_1,...,l_s. Delegates to build_generalized; the simplicity criterion is
/// guaranteed because every c_i - id is invertible.
inline GeneralizedResult build_concrete(int p, const std::vector<int>& l,
                                        const Limits& limits = {}) {
  if (l.empty()) throw PreconditionError("build_concrete: empty modulus list");
  GeneralizedData data;
  data.p = p;
  for (int li : l) data.blocks.push_back(cyclotomic_block(p, li));
  GeneralizedResult result = build_generalized(data, limits);
  if (!result.predicted_simple)
    throw BraceError("build_concrete: criterion unexpectedly not satisfied");
  std::string ls, gs;
  for (std::size_t i = 0; i < l.size(); ++i) {
    ls += (i ? "," : "") + std::to_string(l[i]);
    gs += (i ? "," : "") + std::to_string(data.blocks[i].gamma);
  }
  result.brace.merge_meta(
      {{"family", "concrete"}, {"p", std::to_string(p)}, {"l", ls}, {"gamma", gs}});
  return result;
}

// ---------------------------------------------------------------------------
// H braces and matched products
// ---------------------------------------------------------------------------

namespace detail {

inline void check_h_inputs(const QuadraticFormSpec& Q, const ModMatrix& f) {
  const long long m = Q.modulus();
  if (f.n != Q.n || f.mod != m)
    throw StructuralError("build_H: f shape or modulus mismatch");
  if (f.pow(m) != ModMatrix::identity(Q.n, m))
    throw PreconditionError(
        "build_H: f^{p^r} != id (order must be a power of p dividing p^r)");
  long long count = 1;
  for (int i = 0; i < Q.n; ++i) count *= m;
  for (long long x = 0; x < count; ++x) {
    auto v = decode_vector(x, m, Q.n);
    if (Q.eval(f.apply(v)) != Q.eval(v))
      throw PreconditionError("build_H: f is not orthogonal for Q");
  }
}

}  // namespace detail

/// Brace on (Z/(p^r))^{n+1} with lambda
///   lambda_{(x,mu)}(y,mu') = (f^{mu-Q(x)}(y), mu' + b(x, f^{mu-Q(x)}(y))).
/// Coordinates are encoded least significant first, with mu last.
inline FiniteBrace build_H(const QuadraticFormSpec& Q, const ModMatrix& f,
                           const Limits& limits = {}) {
  detail::check_h_inputs(Q, f);
  const long long m = Q.modulus();
  long long order = 1;
  for (int i = 0; i <= Q.n; ++i) order = detail::sat_mul_order(order, m);
  limits.guard_order(order, "build_H");

  std::vector<ModMatrix> fp{ModMatrix::identity(Q.n, m)};
  for (long long k = 1; k < m; ++k) fp.push_back(fp.back().mul(f));

  AbelianGroupSpec spec(std::vector<int>(Q.n + 1, static_cast<int>(m)));
  auto lam = [&](Elem a, Elem bb) -> Elem {
    auto da = spec.decode(a);
    auto db = spec.decode(bb);
    std::vector<long long> x(da.begin(), da.begin() + Q.n);
    std::vector<long long> y(db.begin(), db.begin() + Q.n);
    const long long mu = da[Q.n], mu2 = db[Q.n];
    long long e = ((mu - Q.eval(x)) % m + m) % m;
    auto fy = fp[e].apply(y);
    long long out_mu = (mu2 + Q.polar(x, fy)) % m;
    std::vector<int> digits(Q.n + 1);
    for (int i = 0; i < Q.n; ++i) digits[i] = static_cast<int>(fy[i]);
    digits[Q.n] = static_cast<int>(out_mu);
    return static_cast<Elem>(spec.encode(digits));
  };
  FiniteBrace H = brace_from_lambda(spec, lam, limits,
                                    {{"family", "h_brace"},
                                     {"p", std::to_string(Q.p)},
                                     {"r", std::to_string(Q.r)},
                                     {"n", std::to_string(Q.n)}});
  return H;
}

struct HPrimeResult {
  FiniteBrace h_prime;
  BraceMap phi;  // phi.source is the H brace, phi.target is h_prime
};

/// H' = T x|o S with cocycle -b and action alpha(mu) = f^mu, together with
/// the isomorphism phi(x, mu) = (x, mu - Q(x)) from H, verified exhaustively.
inline HPrimeResult build_H_prime_and_phi(const QuadraticFormSpec& Q,
                                          const ModMatrix& f,
                                          const Limits& limits = {}) {
  FiniteBrace H = build_H(Q, f, limits);
  const long long m = Q.modulus();
  FiniteBrace T = trivial_brace(
      AbelianGroupSpec(std::vector<int>(Q.n, static_cast<int>(m))), limits);
  FiniteBrace S = trivial_brace(AbelianGroupSpec({static_cast<int>(m)}), limits);

  std::vector<ModMatrix> fp{ModMatrix::identity(Q.n, m)};
  for (long long k = 1; k < m; ++k) fp.push_back(fp.back().mul(f));
  std::vector<std::vector<Elem>> perms(S.order(), std::vector<Elem>(T.order()));
  for (int mu = 0; mu < S.order(); ++mu)
    for (int t = 0; t < T.order(); ++t) {
      auto v = detail::decode_vector(t, m, Q.n);
      perms[mu][t] = static_cast<Elem>(detail::encode_vector(fp[mu].apply(v), m));
    }
  BraceAction alpha{S, T, std::move(perms)};

  const int nt = T.order();
  std::vector<Elem> btable(static_cast<std::size_t>(nt) * nt);
  for (int t1 = 0; t1 < nt; ++t1) {
    auto x = detail::decode_vector(t1, m, Q.n);
    for (int t2 = 0; t2 < nt; ++t2) {
      auto y = detail::decode_vector(t2, m, Q.n);
      btable[static_cast<std::size_t>(t1) * nt + t2] =
          static_cast<Elem>((m - Q.polar(x, y)) % m);
    }
  }
  SymmetricCocycle minus_b{T, S, std::move(btable), true};
  FiniteBrace Hp = asymmetric_product(T, S, minus_b, alpha, limits);
  Hp.merge_meta({{"family", "h_prime"},
                 {"p", std::to_string(Q.p)},
                 {"r", std::to_string(Q.r)},
                 {"n", std::to_string(Q.n)}});

  AbelianGroupSpec hspec(std::vector<int>(Q.n + 1, static_cast<int>(m)));
  std::vector<Elem> phi_img(H.order());
  for (int a = 0; a < H.order(); ++a) {
    auto d = hspec.decode(a);
    std::vector<long long> x(d.begin(), d.begin() + Q.n);
    long long t_idx = detail::encode_vector(x, m);
    long long s_val = ((d[Q.n] - Q.eval(x)) % m + m) % m;
    phi_img[a] = static_cast<Elem>(t_idx * m + s_val);
  }
  BraceMap phi(H, Hp, std::move(phi_img));
  if (!verify_morphism(phi).is_isomorphism())
    throw BraceError("build_H_prime_and_phi: phi failed the isomorphism check");
  return {std::move(Hp), std::move(phi)};
}

struct MatchedFactor {
  QuadraticFormSpec Q;
  ModMatrix f;
  ModMatrix c;
};

struct MatchedData {
  std::vector<MatchedFactor> factors;
  std::vector<long long> v_s;  // row vector over Z/(p_s^{r_s})
};

struct MatchedResult {
  FiniteBrace matched;       // H_1 |x ... |x H_s
  FiniteBrace asym;          // T' x|o S'
  BraceMap phi_prime;        // matched -> asym
  bool predicted_simple = false;  // all c_i - id invertible
};

/// Iterated matched product of the H_i = H(p_i^{r_i}, n_i, Q_i, f_i) and its
/// asymmetric-product form, with the isomorphism phi' between them. All data
/// hypotheses are verified, including the twisting identity
/// Q_s(c_s(x)) = Q_s(x) + v_s x^t.
inline MatchedResult build_matched_and_phi_prime(const MatchedData& data,
                                                 const Limits& limits = {}) {
  const int s = static_cast<int>(data.factors.size());
  if (s < 1) throw PreconditionError("build_matched: no factors");
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      if (data.factors[i].Q.p == data.factors[j].Q.p)
        throw PreconditionError("build_matched: the primes p_i must be distinct");
  for (int i = 0; i + 1 < s; ++i)
    if (data.factors[i].Q.p == 2)
      throw PreconditionError("build_matched: p_1,...,p_{s-1} must be odd");

  std::vector<long long> mods(s);
  for (int i = 0; i < s; ++i) {
    const auto& F = data.factors[i];
    mods[i] = F.Q.modulus();
    detail::check_h_inputs(F.Q, F.f);  // f_i orthogonal, f_i^{m_i} = id
    if (!F.Q.polar_nondegenerate())
      throw PreconditionError("build_matched: Q_" + std::to_string(i + 1) +
                              " is degenerate");
    if (F.c.n != F.Q.n || F.c.mod != mods[i])
      throw StructuralError("build_matched: c shape mismatch");
    if (F.f.mul(F.c) != F.c.mul(F.f))
      throw PreconditionError("build_matched: f_i c_i = c_i f_i fails at i = " +
                              std::to_string(i + 1));
  }
  const auto& last = data.factors[s - 1];
  if (data.v_s.size() != static_cast<std::size_t>(last.Q.n))
    throw StructuralError("build_matched: v_s has wrong length");
  if (s == 1) {
    if (last.c != ModMatrix::identity(last.Q.n, mods[0]))
      throw PreconditionError(
          "build_matched: the degenerate s = 1 case requires c_1 = id");
  } else {
    for (int i = 0; i + 1 < s; ++i) {
      const auto& F = data.factors[i];
      long long count = 1;
      for (int k = 0; k < F.Q.n; ++k) count *= mods[i];
      for (long long x = 0; x < count; ++x) {
        auto v = detail::decode_vector(x, mods[i], F.Q.n);
        if (F.Q.eval(F.c.apply(v)) != F.Q.eval(v))
          throw PreconditionError("build_matched: c_" + std::to_string(i + 1) +
                                  " is not orthogonal for Q_" +
                                  std::to_string(i + 1));
      }
      if (F.c.order(1 << 16) != mods[i + 1])
        throw PreconditionError("build_matched: c_" + std::to_string(i + 1) +
                                " does not have order p_" +
                                std::to_string(i + 2) + "^{r_" +
                                std::to_string(i + 2) + "}");
    }
    if (last.c.order(1 << 16) != mods[0])
      throw PreconditionError(
          "build_matched: c_s does not have order p_1^{r_1}");
  }
  {
    // (Qj+1): Q_s(c_s(x)) = Q_s(x) + v_s x^t for all x.
    long long count = 1;
    for (int k = 0; k < last.Q.n; ++k) count *= mods[s - 1];
    for (long long x = 0; x < count; ++x) {
      auto v = detail::decode_vector(x, mods[s - 1], last.Q.n);
      long long dot = 0;
      for (int k = 0; k < last.Q.n; ++k)
        dot = (dot + data.v_s[k] * v[k]) % mods[s - 1];
      if (last.Q.eval(last.c.apply(v)) !=
          (last.Q.eval(v) + dot) % mods[s - 1])
        throw PreconditionError("build_matched: condition (Qj+1) fails: "
                                "Q_s(c_s(x)) != Q_s(x) + v_s x^t");
    }
  }

  long long order = 1;
  for (int i = 0; i < s; ++i)
    for (int k = 0; k <= data.factors[i].Q.n; ++k)
      order = detail::sat_mul_order(order, mods[i]);
  limits.guard_order(order, "build_matched");

  // Power tables. c_i is exponentiated by values mod m_{i+1} (cyclically),
  // c_s by values mod m_1; partial sums id + c_s + ... + c_s^{e-1} as well.
  std::vector<std::vector<ModMatrix>> fpow(s), cpow(s);
  for (int i = 0; i < s; ++i) {
    const auto& F = data.factors[i];
    fpow[i].push_back(ModMatrix::identity(F.Q.n, mods[i]));
    for (long long k = 1; k < mods[i]; ++k)
      fpow[i].push_back(fpow[i].back().mul(F.f));
    const long long erange = mods[(i + 1) % s];
    cpow[i].push_back(ModMatrix::identity(F.Q.n, mods[i]));
    for (long long k = 1; k < erange; ++k)
      cpow[i].push_back(cpow[i].back().mul(F.c));
  }
  std::vector<ModMatrix> csum;  // csum[e] = id + c_s + ... + c_s^{e-1}
  {
    const int nlast = last.Q.n;
    csum.push_back(ModMatrix(nlast, mods[s - 1],
                             std::vector<long long>(
                                 static_cast<std::size_t>(nlast) * nlast, 0)));
    for (long long e = 1; e < mods[0]; ++e) {
      std::vector<long long> sum(static_cast<std::size_t>(nlast) * nlast);
      const ModMatrix& prev = csum.back();
      const ModMatrix& ce = cpow[s - 1][e - 1];
      for (std::size_t k = 0; k < sum.size(); ++k)
        sum[k] = (prev.a[k] + ce.a[k]) % mods[s - 1];
      csum.push_back(ModMatrix(nlast, mods[s - 1], std::move(sum)));
    }
  }

  // Matched brace on coordinates (x_1, mu_1, ..., x_s, mu_s).
  std::vector<int> mspec_orders;
  for (int i = 0; i < s; ++i) {
    for (int k = 0; k < data.factors[i].Q.n; ++k)
      mspec_orders.push_back(static_cast<int>(mods[i]));
    mspec_orders.push_back(static_cast<int>(mods[i]));
  }
  AbelianGroupSpec mspec(mspec_orders);

  std::vector<int> coord_offset(s, 0);
  for (int i = 1; i < s; ++i)
    coord_offset[i] = coord_offset[i - 1] + data.factors[i - 1].Q.n + 1;

  auto lam = [&](Elem a, Elem bb) -> Elem {
    auto da = mspec.decode(a);
    auto db = mspec.decode(bb);
    std::vector<std::vector<long long>> x(s), y(s);
    std::vector<long long> mu(s), mu2(s), e(s);
    for (int i = 0; i < s; ++i) {
      const int off = coord_offset[i];
      const int ni = data.factors[i].Q.n;
      x[i].assign(da.begin() + off, da.begin() + off + ni);
      y[i].assign(db.begin() + off, db.begin() + off + ni);
      mu[i] = da[off + ni];
      mu2[i] = db[off + ni];
      e[i] = ((mu[i] - data.factors[i].Q.eval(x[i])) % mods[i] + mods[i]) %
             mods[i];
    }
    std::vector<int> out(da.size());
    for (int i = 0; i < s; ++i) {
      const auto& F = data.factors[i];
      const long long g = (i + 1 < s) ? e[i + 1] : e[0];
      auto yi = cpow[i][g].apply(y[i]);
      yi = fpow[i][e[i]].apply(yi);
      long long m2 = (mu2[i] + F.Q.polar(x[i], yi)) % mods[i];
      if (i == s - 1) {
        auto sy = csum[g].apply(y[i]);
        long long dot = 0;
        for (int k = 0; k < F.Q.n; ++k)
          dot = (dot + data.v_s[k] * sy[k]) % mods[i];
        m2 = (m2 + dot) % mods[i];
      }
      const int off = coord_offset[i];
      for (int k = 0; k < F.Q.n; ++k) out[off + k] = static_cast<int>(yi[k]);
      out[off + F.Q.n] = static_cast<int>(m2);
    }
    return static_cast<Elem>(mspec.encode(out));
  };
  FiniteBrace matched =
      brace_from_lambda(mspec, lam, limits, {{"family", "matched"}});

  // T' x|o S'.
  std::vector<int> tspec_orders, sspec_orders;
  for (int i = 0; i < s; ++i) {
    for (int k = 0; k < data.factors[i].Q.n; ++k)
      tspec_orders.push_back(static_cast<int>(mods[i]));
    sspec_orders.push_back(static_cast<int>(mods[i]));
  }
  AbelianGroupSpec tspec(tspec_orders), sspec(sspec_orders);
  FiniteBrace T = trivial_brace(tspec, limits);
  FiniteBrace S = trivial_brace(sspec, limits);

  std::vector<int> t_offset(s, 0);
  for (int i = 1; i < s; ++i)
    t_offset[i] = t_offset[i - 1] + data.factors[i - 1].Q.n;

  std::vector<std::vector<Elem>> aperms(S.order(), std::vector<Elem>(T.order()));
  for (int sv = 0; sv < S.order(); ++sv) {
    auto mu = sspec.decode(sv);
    for (int t = 0; t < T.order(); ++t) {
      auto d = tspec.decode(t);
      std::vector<int> out(d.size());
      for (int i = 0; i < s; ++i) {
        const auto& F = data.factors[i];
        std::vector<long long> xi(d.begin() + t_offset[i],
                                  d.begin() + t_offset[i] + F.Q.n);
        const long long g = (i + 1 < s) ? mu[i + 1] : mu[0];
        auto img = fpow[i][mu[i]].apply(cpow[i][g].apply(xi));
        for (int k = 0; k < F.Q.n; ++k)
          out[t_offset[i] + k] = static_cast<int>(img[k]);
      }
      aperms[sv][t] = static_cast<Elem>(tspec.encode(out));
    }
  }
  BraceAction alpha{S, T, std::move(aperms)};

  const int nt = T.order();
  std::vector<Elem> btable(static_cast<std::size_t>(nt) * nt);
  for (int t1 = 0; t1 < nt; ++t1) {
    auto d1 = tspec.decode(t1);
    for (int t2 = 0; t2 < nt; ++t2) {
      auto d2 = tspec.decode(t2);
      std::vector<int> vals(s);
      for (int i = 0; i < s; ++i) {
        const auto& F = data.factors[i];
        std::vector<long long> xi(d1.begin() + t_offset[i],
                                  d1.begin() + t_offset[i] + F.Q.n);
        std::vector<long long> yi(d2.begin() + t_offset[i],
                                  d2.begin() + t_offset[i] + F.Q.n);
        vals[i] = static_cast<int>((mods[i] - F.Q.polar(xi, yi)) % mods[i]);
      }
      btable[static_cast<std::size_t>(t1) * nt + t2] =
          static_cast<Elem>(sspec.encode(vals));
    }
  }
  SymmetricCocycle bprime{T, S, std::move(btable), true};
  FiniteBrace asym = asymmetric_product(T, S, bprime, alpha, limits);
  asym.merge_meta({{"family", "matched_asymmetric_form"}});

  // phi'(x_1, mu_1, ..., x_s, mu_s) = (x_1,...,x_s, mu_1 - Q_1(x_1),...).
  std::vector<Elem> img(matched.order());
  for (int a = 0; a < matched.order(); ++a) {
    auto d = mspec.decode(a);
    std::vector<int> tdig(t_offset[s - 1] + data.factors[s - 1].Q.n);
    std::vector<int> sdig(s);
    for (int i = 0; i < s; ++i) {
      const auto& F = data.factors[i];
      std::vector<long long> xi(d.begin() + coord_offset[i],
                                d.begin() + coord_offset[i] + F.Q.n);
      for (int k = 0; k < F.Q.n; ++k)
        tdig[t_offset[i] + k] = static_cast<int>(xi[k]);
      sdig[i] = static_cast<int>(
          ((d[coord_offset[i] + F.Q.n] - F.Q.eval(xi)) % mods[i] + mods[i]) %
          mods[i]);
    }
    img[a] = static_cast<Elem>(tspec.encode(tdig) * S.order() +
                               sspec.encode(sdig));
  }
  BraceMap phi_prime(matched, asym, std::move(img));
  if (!verify_morphism(phi_prime).is_isomorphism())
    throw BraceError("build_matched_and_phi_prime: phi' failed verification");

  bool predicted = true;
  for (int i = 0; i < s; ++i)
    predicted = predicted &&
                det_mod_prime(data.factors[i].c.add_scaled_identity(-1),
                              data.factors[i].Q.p) != 0;

  return {std::move(matched), std::move(asym), std::move(phi_prime), predicted};
}

}  // namespace braces
