#include <gtest/gtest.h>

#include "braces/analysis.hpp"
#include "braces/families.hpp"
#include "braces/products.hpp"
#include "helpers.hpp"

using namespace braces;

namespace {

BraceAction b3_action() {
  FiniteBrace K = trivial_brace(AbelianGroupSpec({2, 2}));
  FiniteBrace Z3 = trivial_brace(AbelianGroupSpec({3}));
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
  return BraceAction{Z3, K, std::move(perms)};
}

}  // namespace

TEST(ValidateAction, TrivialActionIsValid) {
  FiniteBrace T = build_b3();
  FiniteBrace S = trivial_brace(AbelianGroupSpec({2}));
  EXPECT_TRUE(validate_action(trivial_action(T, S)).valid);
}

TEST(ValidateAction, B3MatrixActionIsValid) {
  EXPECT_TRUE(validate_action(b3_action()).valid);
}

TEST(ValidateAction, AdditiveButNotMultiplicativeBreaks) {
  // Coordinate swap on the K part of B3 preserves + but not the twisted
  // multiplication.
  FiniteBrace T = build_b3();
  FiniteBrace S = trivial_brace(AbelianGroupSpec({2}));
  AbelianGroupSpec kspec({2, 2});
  std::vector<Elem> swapped(12);
  for (int k = 0; k < 4; ++k)
    for (int x = 0; x < 3; ++x) {
      auto d = kspec.decode(k);
      swapped[k * 3 + x] = static_cast<Elem>(kspec.encode({d[1], d[0]}) * 3 + x);
    }
  std::vector<Elem> id(12);
  for (int i = 0; i < 12; ++i) id[i] = static_cast<Elem>(i);
  BraceAction action{S, T, {id, swapped}};
  ValidationReport r = validate_action(action);
  EXPECT_FALSE(r.valid);
  bool saw_mult = false;
  for (const auto& v : r.violations)
    saw_mult = saw_mult || v.rule == "not_multiplicative_automorphism";
  EXPECT_TRUE(saw_mult);
}

TEST(ValidateCocycle, ZeroCocycleIsValid) {
  FiniteBrace T = trivial_brace(AbelianGroupSpec({2, 2}));
  FiniteBrace S = trivial_brace(AbelianGroupSpec({3}));
  EXPECT_TRUE(
      validate_cocycle(zero_cocycle(T, S), trivial_action(T, S)).valid);
}

TEST(ValidateCocycle, PairingIsValidBilinear) {
  FiniteBrace T = trivial_brace(AbelianGroupSpec({2, 2}));
  FiniteBrace S = trivial_brace(AbelianGroupSpec({2}));
  AbelianGroupSpec tspec({2, 2});
  std::vector<Elem> table(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      auto x = tspec.decode(a), y = tspec.decode(b);
      table[a * 4 + b] = static_cast<Elem>((x[0] * y[1] + x[1] * y[0]) % 2);
    }
  SymmetricCocycle b{T, S, std::move(table), true};
  EXPECT_TRUE(validate_cocycle(b, trivial_action(T, S)).valid);
}

TEST(ValidateCocycle, CorruptedEntryBreaksLaw) {
  FiniteBrace T = trivial_brace(AbelianGroupSpec({2, 2}));
  FiniteBrace S = trivial_brace(AbelianGroupSpec({2}));
  SymmetricCocycle b = zero_cocycle(T, S);
  b.bilinear = false;
  // keep symmetry and b(0,0)=0 so the cocycle law itself must catch it
  b.table[1 * 4 + 2] = 1;
  b.table[2 * 4 + 1] = 1;
  ValidationReport r = validate_cocycle(b, trivial_action(T, S));
  EXPECT_FALSE(r.valid);
  bool law = false;
  for (const auto& v : r.violations) law = law || v.rule == "cocycle_law";
  EXPECT_TRUE(law);
}

TEST(Semidirect, TrivialActionGivesDirectProduct) {
  FiniteBrace T = build_b3();
  FiniteBrace S = trivial_brace(AbelianGroupSpec({2}));
  FiniteBrace semi = semidirect_product(T, S, trivial_action(T, S));
  FiniteBrace direct = direct_product(T, S);
  EXPECT_TRUE(semi.same_tables(direct));
}

TEST(Semidirect, B3FromAction) {
  FiniteBrace K = trivial_brace(AbelianGroupSpec({2, 2}));
  FiniteBrace Z3 = trivial_brace(AbelianGroupSpec({3}));
  FiniteBrace B = semidirect_product(K, Z3, b3_action());
  EXPECT_EQ(B.order(), 12);
  EXPECT_TRUE(B.same_tables(build_b3()));
  EXPECT_FALSE(is_left_nilpotent(B));
}

TEST(Semidirect, EqualsAsymmetricWithZeroCocycle) {
  FiniteBrace K = trivial_brace(AbelianGroupSpec({2, 2}));
  FiniteBrace Z3 = trivial_brace(AbelianGroupSpec({3}));
  BraceAction action = b3_action();
  FiniteBrace semi = semidirect_product(K, Z3, action);
  FiniteBrace asym = asymmetric_product(K, Z3, zero_cocycle(K, Z3), action);
  EXPECT_TRUE(semi.same_tables(asym));
}

TEST(Semidirect, RejectsInvalidAction) {
  FiniteBrace T = build_b3();
  FiniteBrace S = trivial_brace(AbelianGroupSpec({2}));
  BraceAction broken = trivial_action(T, S);
  std::swap(broken.perms[1][0], broken.perms[1][1]);  // moves 0, not an auto
  EXPECT_THROW(semidirect_product(T, S, broken), PreconditionError);
}

TEST(Wreath, TrivialTopFactor) {
  FiniteBrace b3 = build_b3();
  FiniteBrace one = trivial_brace(AbelianGroupSpec({1}));
  WreathProduct W = wreath_product(b3, one);
  EXPECT_TRUE(W.brace.same_tables(b3));
}

TEST(Wreath, F2WrZ3MatchesGroupRingSemidirect) {
  FiniteBrace F2 = trivial_brace(AbelianGroupSpec({2}));
  FiniteBrace Z3 = trivial_brace(AbelianGroupSpec({3}));
  WreathProduct W = wreath_product(F2, Z3);
  EXPECT_EQ(W.brace.order(), 24);

  // F_2[Z/3] as the trivial brace on (Z/2)^3 with Z/3 acting by left
  // multiplication; the canonical identification is the identity on indices.
  FiniteBrace KG = trivial_brace(AbelianGroupSpec({2, 2, 2}));
  std::vector<std::vector<Elem>> perms(3, std::vector<Elem>(8));
  for (int g = 0; g < 3; ++g)
    for (int f = 0; f < 8; ++f) {
      int img = 0;
      for (int x = 0; x < 3; ++x) {
        int pre = ((x - g) % 3 + 3) % 3;  // f(g^{-1} x)
        img |= ((f >> pre) & 1) << x;
      }
      perms[g][f] = static_cast<Elem>(img);
    }
  BraceAction leftmult{Z3, KG, std::move(perms)};
  FiniteBrace semi = semidirect_product(KG, Z3, leftmult);
  EXPECT_TRUE(W.brace.same_tables(semi));
  BraceMap ident(W.brace, semi, identity_map(W.brace).image);
  EXPECT_TRUE(verify_morphism(ident).is_isomorphism());
}

TEST(Wreath, FunctionBraceOperationsArePointwise) {
  // Non-trivial base: functions Z/2 -> B3 add and multiply digit by digit.
  FiniteBrace b3 = build_b3();
  FiniteBrace Z2 = trivial_brace(AbelianGroupSpec({2}));
  WreathProduct W = wreath_product(b3, Z2);
  ASSERT_EQ(W.brace.order(), 288);
  for (int f1 = 0; f1 < W.fun_count; f1 += 7)
    for (int f2 = 0; f2 < W.fun_count; f2 += 5) {
      Elem sum = W.brace.add(W.pair_index(f1, 0), W.pair_index(f2, 0));
      Elem prod = W.brace.mul(W.pair_index(f1, 0), W.pair_index(f2, 0));
      for (int pos = 0; pos < 2; ++pos) {
        Elem d1 = static_cast<Elem>(W.fun_digit(f1, pos));
        Elem d2 = static_cast<Elem>(W.fun_digit(f2, pos));
        EXPECT_EQ(W.fun_digit(W.f_part(sum), pos), b3.add(d1, d2));
        EXPECT_EQ(W.fun_digit(W.f_part(prod), pos), b3.mul(d1, d2));
      }
    }
}

TEST(Wreath, SizeGuardRejectsIteratedTower) {
  // F_2 wr Gbar_2 would need 2^12 * 12 elements.
  FiniteBrace F2 = trivial_brace(AbelianGroupSpec({2}));
  FiniteBrace big = trivial_brace(AbelianGroupSpec({12}));
  EXPECT_THROW(wreath_product(F2, big), SizeGuardError);
}

TEST(InducedAutomorphism, IdentityInducesIdentity) {
  FiniteBrace F2 = trivial_brace(AbelianGroupSpec({2}));
  FiniteBrace Z3 = trivial_brace(AbelianGroupSpec({3}));
  WreathProduct W = wreath_product(F2, Z3);
  BraceMap ind = induced_wreath_automorphism(W, identity_map(Z3));
  EXPECT_EQ(ind.image, identity_map(W.brace).image);
}

TEST(InducedAutomorphism, NegationHasOrderTwo) {
  FiniteBrace F2 = trivial_brace(AbelianGroupSpec({2}));
  FiniteBrace Z3 = trivial_brace(AbelianGroupSpec({3}));
  WreathProduct W = wreath_product(F2, Z3);
  BraceMap neg(Z3, Z3, {0, 2, 1});
  BraceMap ind = induced_wreath_automorphism(W, neg);
  EXPECT_NE(ind.image, identity_map(W.brace).image);
  EXPECT_EQ(compose(ind, ind).image, identity_map(W.brace).image);
}

TEST(InducedAutomorphism, Functoriality) {
  FiniteBrace F2 = trivial_brace(AbelianGroupSpec({2}));
  FiniteBrace Z5 = trivial_brace(AbelianGroupSpec({5}));
  WreathProduct W = wreath_product(F2, Z5);
  // x -> 2x and x -> 3x are automorphisms of Z/5.
  std::vector<Elem> dbl(5), tpl(5);
  for (int x = 0; x < 5; ++x) {
    dbl[x] = static_cast<Elem>(2 * x % 5);
    tpl[x] = static_cast<Elem>(3 * x % 5);
  }
  BraceMap a(Z5, Z5, dbl), b(Z5, Z5, tpl);
  BraceMap lhs = induced_wreath_automorphism(W, compose(a, b));
  BraceMap rhs = compose(induced_wreath_automorphism(W, a),
                         induced_wreath_automorphism(W, b));
  EXPECT_EQ(lhs.image, rhs.image);
}

TEST(Asymmetric, ZeroDataGivesDirectProduct) {
  FiniteBrace T = trivial_brace(AbelianGroupSpec({2, 2}));
  FiniteBrace S = trivial_brace(AbelianGroupSpec({3}));
  FiniteBrace asym =
      asymmetric_product(T, S, zero_cocycle(T, S), trivial_action(T, S));
  EXPECT_TRUE(asym.same_tables(direct_product(T, S)));
}

TEST(Asymmetric, RejectsBrokenCocycle) {
  FiniteBrace T = trivial_brace(AbelianGroupSpec({2, 2}));
  FiniteBrace S = trivial_brace(AbelianGroupSpec({2}));
  SymmetricCocycle b = zero_cocycle(T, S);
  b.table[1 * 4 + 2] = 1;  // asymmetric now
  EXPECT_THROW(asymmetric_product(T, S, b, trivial_action(T, S)),
               PreconditionError);
}

TEST(Criterion, FullImageInstanceIsSimple) {
  FiniteBrace S = build_wreath_simple(3, 2);
  auto inst = testers::make_criterion_instance(S, testers::pick_via_quotient(S));
  EXPECT_TRUE(simplicity_by_image_criterion(inst.T, S, inst.b, inst.action));
  FiniteBrace prod = asymmetric_product(inst.T, S, inst.b, inst.action);
  EXPECT_EQ(prod.order(), 96);
  EXPECT_TRUE(is_simple(prod));
}

TEST(Criterion, TrivialActionGivesZeroImage) {
  FiniteBrace S = build_wreath_simple(3, 2);
  auto inst = testers::make_criterion_instance(S, testers::pick_identity());
  EXPECT_FALSE(simplicity_by_image_criterion(inst.T, S, inst.b, inst.action));
  FiniteBrace prod = asymmetric_product(inst.T, S, inst.b, inst.action);
  EXPECT_FALSE(is_simple(prod));
}

TEST(Criterion, HypothesisFailuresAreNamed) {
  FiniteBrace S = build_wreath_simple(3, 2);
  auto inst = testers::make_criterion_instance(S, testers::pick_identity());
  // degenerate b
  SymmetricCocycle zero = zero_cocycle(inst.T, S);
  try {
    simplicity_by_image_criterion(inst.T, S, zero, inst.action);
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("non-degeneracy"), std::string::npos);
  }
  // S not simple
  FiniteBrace Z2 = trivial_brace(AbelianGroupSpec({2}));
  try {
    simplicity_by_image_criterion(inst.T, Z2, zero_cocycle(inst.T, Z2),
                                  trivial_action(inst.T, Z2));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("simple"), std::string::npos);
  }
  // T not trivial
  FiniteBrace b3 = build_b3();
  EXPECT_THROW(simplicity_by_image_criterion(b3, S, zero_cocycle(b3, S),
                                             trivial_action(b3, S)),
               PreconditionError);
}
