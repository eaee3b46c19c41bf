#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "qsl/identities.hpp"

using namespace qsl;

namespace {

const BKGenerators& bk11() {
  static const BKGenerators bk = alpha_beta_gamma(SuperCfg{1, 1}, 4);
  return bk;
}

const BKGenerators& bk21() {
  static const BKGenerators bk = alpha_beta_gamma(SuperCfg{2, 1}, 4);
  return bk;
}

NCPoly gen11(int i, int j) { return NCPoly::generator(SuperCfg{1, 1}, i, j); }

}  // namespace

TEST_CASE("series coefficients match their closed forms at (1,1)") {
  NCPoly a = gen11(1, 1), b = gen11(1, 2), c = gen11(2, 1), d = gen11(2, 2);
  QScalar q = QScalar::q(), qinv = QScalar::q_power(-1);
  CHECK(bk11().a(1) == a - d);
  CHECK(bk11().b(1) == a - d);
  CHECK(bk11().g(1) == a - d);
  CHECK(bk11().a(2) == d * d - a * d + qinv * (b * c));
  CHECK(bk11().b(2) == a * a - a * d - q * (b * c));
  CHECK(bk11().g(2) == a * a - d * d - (q + qinv) * (b * c));
  CHECK(bk11().a(0).is_one());
  CHECK(bk11().b(0).is_one());
  CHECK(bk11().a(-1).is_zero());
  CHECK(bk11().b(-3).is_zero());
  CHECK(bk11().g(0).is_zero());        // m - n = 0
  CHECK(bk21().g(0) == NCPoly(1));     // m - n = 1
  CHECK_THROWS_AS(bk11().a(5), std::out_of_range);
  CHECK_THROWS_AS(bk11().g(-1), std::out_of_range);
  CHECK_THROWS_AS(alpha_beta_gamma(SuperCfg{1, 1}, 0), std::invalid_argument);
}

TEST_CASE("truncated series arithmetic respects the order tag") {
  Series s = elementary_series_neg(bk11(), 3);
  Series t = complete_series(bk11(), 2);
  CHECK((s * t).order == 2);
  Series p(2);
  p.at(0) = NCPoly(1);
  p.at(1) = NCPoly(2);
  p.at(2) = NCPoly(3);
  Series dp = p.derivative();
  CHECK(dp.order == 1);
  CHECK(dp[0] == NCPoly(2));
  CHECK(dp[1] == NCPoly(6));
  CHECK_THROWS_AS(Series(0).derivative(), std::logic_error);
}

TEST_CASE("mutually inverse generating series") {
  CheckReport r0 = verify_macmahon(bk11(), 0);
  INFO(r0.witness);
  CHECK(r0.pass);
  CheckReport r1 = verify_macmahon(bk11(), 4);
  INFO(r1.witness);
  CHECK(r1.pass);
  CheckReport r2 = verify_macmahon(bk21(), 4);
  INFO(r2.witness);
  CHECK(r2.pass);
  // order-2 coefficient by hand: beta_2 - alpha_1 beta_1 + alpha_2 = 0
  CHECK((bk11().b(2) - bk11().a(1) * bk11().b(1) + bk11().a(2)).is_zero());
  CHECK((bk21().b(2) - bk21().a(1) * bk21().b(1) + bk21().a(2)).is_zero());
  CHECK_THROWS_AS(verify_macmahon(bk11(), 5), std::invalid_argument);
}

TEST_CASE("power-trace differential identities") {
  CheckReport r1 = verify_newton(bk11(), 3);
  INFO(r1.witness);
  CHECK(r1.pass);
  CheckReport r2 = verify_newton(bk21(), 3);
  INFO(r2.witness);
  CHECK(r2.pass);
  for (const BKGenerators& bk : {bk11(), bk21()}) {
    CHECK(bk.g(1) == bk.a(1));
    CHECK(NCPoly(2) * bk.a(2) == bk.a(1) * bk.g(1) - bk.g(2));
  }
  CheckReport c1 = macmahon_newton_consistency(bk11(), 4);
  INFO(c1.witness);
  CHECK(c1.pass);
  CheckReport c2 = macmahon_newton_consistency(bk21(), 4);
  INFO(c2.witness);
  CHECK(c2.pass);
  CHECK_THROWS_AS(verify_newton(bk11(), 4), std::invalid_argument);
}

TEST_CASE("series coefficient families commute pairwise") {
  CheckReport r1 = verify_commutative_family(bk11(), 4);
  INFO(r1.witness);
  CHECK(r1.pass);
  CheckReport r2 = verify_commutative_family(bk21(), 4);
  INFO(r2.witness);
  CHECK(r2.pass);
}

TEST_CASE("Littlewood-Richardson coefficients from character orthogonality") {
  CHECK(lr_coefficient(Partition{2, 1}, Partition{2}, Partition{1}) == 1);
  CHECK(lr_coefficient(Partition{3}, Partition{2}, Partition{1}) == 1);
  CHECK(lr_coefficient(Partition{1, 1, 1}, Partition{2}, Partition{1}) == 0);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{1, 1}, Partition{1}) == 1);
  CHECK(lr_coefficient(Partition{4}, Partition{2}, Partition{2}) == 1);
  CHECK(lr_coefficient(Partition{3, 1}, Partition{2}, Partition{2}) == 1);
  CHECK(lr_coefficient(Partition{2, 2}, Partition{2}, Partition{2}) == 1);
  CHECK(lr_coefficient(Partition{2, 1, 1}, Partition{2}, Partition{2}) == 0);
  CHECK(lr_coefficient(Partition{2, 2}, Partition{1, 1}, Partition{1, 1}) == 1);
  CHECK(lr_coefficient(Partition{2, 1, 1}, Partition{1, 1}, Partition{1, 1}) == 1);
  CHECK(lr_coefficient(Partition{1, 1, 1, 1}, Partition{1, 1}, Partition{1, 1}) == 1);
  CHECK(lr_coefficient(Partition{4}, Partition{1, 1}, Partition{1, 1}) == 0);
  CHECK(lr_coefficient(Partition{3, 1}, Partition{2, 1}, Partition{1}) == 1);
  CHECK(lr_coefficient(Partition{2, 2}, Partition{2, 1}, Partition{1}) == 1);
  CHECK(lr_coefficient(Partition{2, 1, 1}, Partition{2, 1}, Partition{1}) == 1);
  CHECK(lr_coefficient(Partition{4}, Partition{2, 1}, Partition{1}) == 0);
  Partition empty{std::vector<int>{}};
  CHECK(lr_coefficient(Partition{2}, Partition{2}, empty) == 1);
  CHECK(lr_coefficient(Partition{2}, empty, Partition{1, 1}) == 0);
  CHECK(lr_coefficient(Partition{3}, Partition{1}, Partition{1}) == 0);
}

TEST_CASE("determinant correspondences for normalized immanant sums") {
  for (int r = 1; r <= 4; ++r)
    for (const Partition& lam : partitions_of(r)) {
      CheckReport rep = goulden_jackson(lam, bk11());
      INFO(rep.params + " : " + rep.witness);
      CHECK(rep.pass);
    }
  for (int r = 1; r <= 3; ++r)
    for (const Partition& lam : partitions_of(r)) {
      CheckReport rep = goulden_jackson(lam, bk21());
      INFO(rep.params + " : " + rep.witness);
      CHECK(rep.pass);
    }
  // frozen small determinants
  CHECK(determinant(alpha_jt_matrix(bk11(), Partition{1, 1})) == bk11().a(2));
  CHECK(determinant(beta_jt_matrix(bk11(), Partition{1, 1})) ==
        bk11().b(1) * bk11().b(1) - bk11().b(2));
  Matrix<NCPoly> A2 = alpha_jt_matrix(bk11(), Partition{2});
  CHECK(A2(0, 0) == bk11().a(1));
  CHECK(A2(0, 1) == bk11().a(2));
  CHECK(A2(1, 0) == NCPoly(1));
  CHECK(A2(1, 1) == bk11().a(1));
  CHECK(determinant(A2) == bk11().a(1) * bk11().a(1) - bk11().a(2));
  CHECK(determinant(beta_jt_matrix(bk11(), Partition{2})) == bk11().b(2));
  CHECK(immanant_sum(Partition{2, 2}, SuperCfg{1, 1}).is_zero());
  CHECK(determinant(alpha_jt_matrix(bk11(), Partition{2, 2})).is_zero());
}

TEST_CASE("multiset splits enumerate ordered refinements") {
  auto s1 = multiset_splits({1, 2}, {1, 1});
  REQUIRE(s1.size() == 2);
  CHECK(s1[0] == std::vector<MultiIndex>{{2}, {1}});
  CHECK(s1[1] == std::vector<MultiIndex>{{1}, {2}});
  CHECK(multiset_splits({1, 1}, {1, 1}).size() == 1);
  CHECK(multiset_splits({1, 1, 2}, {2, 1}).size() == 2);
  CHECK(multiset_splits({1, 1, 2}, {1, 2}).size() == 2);
  auto s2 = multiset_splits({1, 2, 3}, {1, 2});
  CHECK(s2.size() == 3);
  for (const auto& split : s2) {
    MultiIndex joined;
    for (const MultiIndex& piece : split)
      joined.insert(joined.end(), piece.begin(), piece.end());
    std::sort(joined.begin(), joined.end());
    CHECK(joined == MultiIndex{1, 2, 3});
  }
  CHECK_THROWS_AS(multiset_splits({2, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("product expansion with LR multiplicities") {
  SuperCfg cfg{1, 1};
  NCPoly a = gen11(1, 1), b = gen11(1, 2), c = gen11(2, 1), d = gen11(2, 2);
  CheckReport r0 = verify_littlewood_product(Partition{1}, Partition{1}, {1, 2}, cfg);
  INFO(r0.witness);
  CHECK(r0.pass);
  // frozen common value at I = (1,2): the two length-2 immanants sum to
  // -2 x11 x22 - (q - q^-1) x12 x21
  NCPoly both = immanant({Partition{2}, {1, 2}, {1, 2}, cfg}) +
                immanant({Partition{1, 1}, {1, 2}, {1, 2}, cfg});
  CHECK(both == QScalar(-2) * (a * d) -
                    (QScalar::q() - QScalar::q_power(-1)) * (b * c));
  for (const MultiIndex& I : nondecreasing_indices(cfg, 2)) {
    CheckReport rep = verify_littlewood_product(Partition{1}, Partition{1}, I, cfg);
    INFO(rep.params + " : " + rep.witness);
    CHECK(rep.pass);
  }
  for (const MultiIndex& I : nondecreasing_indices(cfg, 3)) {
    for (const auto& [mu, nu] :
         {std::pair<Partition, Partition>{Partition{2}, Partition{1}},
          std::pair<Partition, Partition>{Partition{1}, Partition{1, 1}}}) {
      CheckReport rep = verify_littlewood_product(mu, nu, I, cfg);
      INFO(rep.params + " : " + rep.witness);
      CHECK(rep.pass);
    }
  }
  SuperCfg big{2, 1};
  CheckReport rb1 = verify_littlewood_product(Partition{1}, Partition{1}, {1, 3}, big);
  INFO(rb1.witness);
  CHECK(rb1.pass);
  CheckReport rb2 =
      verify_littlewood_product(Partition{2}, Partition{1}, {1, 2, 3}, big);
  INFO(rb2.witness);
  CHECK(rb2.pass);
  CHECK_THROWS_AS(verify_littlewood_product(Partition{2}, Partition{1}, {1, 2}, cfg),
                  std::invalid_argument);
}

TEST_CASE("induced-character factorizations") {
  SuperCfg cfg{1, 1};
  // single-block shapes collapse to plain immanants
  for (const MultiIndex& I : nondecreasing_indices(cfg, 2)) {
    CHECK(immanant(induced_character(Partition{2}, InducedKind::trivial), I, I, cfg) ==
          immanant({Partition{2}, I, I, cfg}));
    CHECK(immanant(induced_character(Partition{2}, InducedKind::sign), I, I, cfg) ==
          immanant({Partition{1, 1}, I, I, cfg}));
    CheckReport rep = verify_lmw(Partition{2}, I, cfg);
    INFO(rep.params + " : " + rep.witness);
    CHECK(rep.pass);
    CheckReport rep2 = verify_lmw(Partition{1, 1}, I, cfg);
    INFO(rep2.params + " : " + rep2.witness);
    CHECK(rep2.pass);
  }
  for (const MultiIndex& I : nondecreasing_indices(cfg, 3)) {
    for (const Partition& lam : partitions_of(3)) {
      CheckReport rep = verify_lmw(lam, I, cfg);
      INFO(rep.params + " : " + rep.witness);
      CHECK(rep.pass);
    }
  }
  SuperCfg big{2, 1};
  CheckReport rb = verify_lmw(Partition{2, 1}, {1, 2, 3}, big);
  INFO(rb.witness);
  CHECK(rb.pass);
  CHECK_THROWS_AS(verify_lmw(Partition{2, 1}, {1, 2}, cfg), std::invalid_argument);
}

TEST_CASE("characteristic-series root data in the commutative image") {
  BerezinianRoots r11 = berezinian_roots(bk11());
  REQUIRE(r11.solved);
  INFO(r11.char_equation.witness);
  CHECK(r11.char_equation.pass);
  INFO(r11.extended_det.witness);
  CHECK(r11.extended_det.pass);
  SRat x1(SPoly::x_var(1, 1, 1)), y1(SPoly::y_var(1, 1, 1));
  CHECK(r11.ebar[1] == -y1);
  CHECK(r11.e[1] == x1);
  // quotient form of the solved coefficient
  SRat pa1(phi_specialize(bk11().a(1), 1, 1));
  SRat pa2(phi_specialize(bk11().a(2), 1, 1));
  CHECK(r11.ebar[1] == -(pa2 / pa1));
  CHECK(r11.e[1] == pa1 - pa2 / pa1);

  BKGenerators bk10 = alpha_beta_gamma(SuperCfg{1, 0}, 2);
  BerezinianRoots r10 = berezinian_roots(bk10);
  REQUIRE(r10.solved);
  CHECK(r10.ebar.size() == 1);
  CHECK(r10.e[1] == SRat(SPoly::x_var(1, 0, 1)));
  CHECK(r10.char_equation.pass);
  CHECK(r10.extended_det.pass);

  BerezinianRoots r21 = berezinian_roots(bk21());
  REQUIRE(r21.solved);
  INFO(r21.char_equation.witness);
  CHECK(r21.char_equation.pass);
  INFO(r21.extended_det.witness);
  CHECK(r21.extended_det.pass);
  SRat u1(SPoly::x_var(2, 1, 1)), u2(SPoly::x_var(2, 1, 2)), v1(SPoly::y_var(2, 1, 1));
  CHECK(r21.ebar[1] == -v1);
  CHECK(r21.e[1] == u1 + u2);
  CHECK(r21.e[2] == u1 * u2);

  CHECK_THROWS_AS(berezinian_roots(alpha_beta_gamma(SuperCfg{2, 1}, 3)),
                  std::invalid_argument);
}

TEST_CASE("tableau polynomial equals specialized sum and determinant") {
  for (int r = 1; r <= 4; ++r)
    for (const Partition& lam : partitions_of(r)) {
      CheckReport rep = verify_littlewood_three(lam, bk11());
      INFO(rep.params + " : " + rep.witness);
      CHECK(rep.pass);
    }
  for (int r = 1; r <= 3; ++r)
    for (const Partition& lam : partitions_of(r)) {
      CheckReport rep = verify_littlewood_three(lam, bk21());
      INFO(rep.params + " : " + rep.witness);
      CHECK(rep.pass);
    }
  CHECK(phi_specialize(bk11().a(1), 1, 1) ==
        SPoly::x_var(1, 1, 1) + SPoly::y_var(1, 1, 1));
  CHECK(super_schur(Partition{2, 2}, 1, 1).is_zero());
  CHECK(phi_specialize(immanant_sum(Partition{2, 2}, SuperCfg{1, 1}), 1, 1).is_zero());
}

TEST_CASE("Hessenberg immanant formula over the commutative image") {
  for (int r = 1; r <= 4; ++r)
    for (const Partition& lam : partitions_of(r)) {
      CheckReport rep = hessenberg_check(lam, bk11());
      INFO(rep.params + " : " + rep.witness);
      CHECK(rep.pass);
    }
  for (int r = 1; r <= 3; ++r)
    for (const Partition& lam : partitions_of(r)) {
      CheckReport rep = hessenberg_check(lam, bk21());
      INFO(rep.params + " : " + rep.witness);
      CHECK(rep.pass);
    }
  // r = 2 by hand: (gamma_1^2 - gamma_2) / 2 specializes to the image of alpha_2
  SPoly g1 = phi_specialize(bk11().g(1), 1, 1);
  SPoly g2 = phi_specialize(bk11().g(2), 1, 1);
  CHECK(SPoly(QScalar(2).inverse()) * (g1 * g1 - g2) ==
        phi_specialize(bk11().a(2), 1, 1));
}

TEST_CASE("specialized immanant sums are linearly independent") {
  CheckReport r1 = iso_sym_independence(bk11(), 4);
  INFO(r1.params + " : " + r1.witness);
  CHECK(r1.pass);
  CHECK(r1.params.find("count=10") != std::string::npos);
  CheckReport r2 = iso_sym_independence(bk21(), 3);
  INFO(r2.params + " : " + r2.witness);
  CHECK(r2.pass);
  CHECK(r2.params.find("count=6") != std::string::npos);
}

TEST_CASE("localized (1|1) algebra") {
  SuperCfg cfg{1, 1};
  NCPoly a = gen11(1, 1), b = gen11(1, 2), c = gen11(2, 1), d = gen11(2, 2);
  const NCPoly& piv = Loc11::pivot();
  CHECK(piv == a - d);
  CHECK(Loc11::pivot_inverse() * Loc11(piv) == Loc11(NCPoly(1)));
  CHECK(Loc11(piv) * Loc11::pivot_inverse() == Loc11(NCPoly(1)));
  CHECK(Loc11::pivot_inverse(2) * Loc11(piv) == Loc11::pivot_inverse(1));
  // q-commutation past the odd generators
  CHECK(Loc11::inv_times(b) == QScalar::q() * Loc11(b, 1));
  CHECK(Loc11::inv_times(c) == QScalar::q() * Loc11(c, 1));
  CHECK(Loc11::inv_times(b * c) == QScalar::q_power(2) * Loc11(b * c, 1));
  // push past an even generator leaves a nilpotent correction
  QScalar theta = (QScalar::q() - QScalar::q_power(-1)) * QScalar::q_power(2);
  CHECK(Loc11::inv_times(a) == Loc11(a, 1) + theta * Loc11(b * c, 2));
  CHECK(Loc11::inv_times(d) == Loc11(d, 1) + theta * Loc11(b * c, 2));
  CHECK(Loc11::inv_times(piv) == Loc11(piv, 1));
  // ring axioms on sample elements
  Loc11 x(a, 1), y(b * c, 2), z(d, 1);
  CHECK((x + y) * z == x * z + y * z);
  CHECK(x * (y + z) == x * y + x * z);
  CHECK(Loc11().is_zero());
  CHECK(Loc11().to_string() == "0");
  CHECK_THROWS_AS(Loc11(NCPoly(1), -1), std::invalid_argument);
}

TEST_CASE("characteristic identity in the localized (1|1) algebra") {
  CheckReport rep = verify_cayley_hamilton_11();
  INFO(rep.witness);
  CHECK(rep.pass);
  // the two roots differ by the pivot and commute
  SuperCfg cfg{1, 1};
  NCPoly alpha2 = immanant_sum_supertrace(Partition{1, 1}, cfg);
  Loc11 w1 = Loc11(Loc11::pivot()) - Loc11(alpha2, 1);
  Loc11 p1 = -Loc11(alpha2, 1);
  CHECK(w1 - p1 == Loc11(Loc11::pivot()));
  CHECK(w1 * p1 == p1 * w1);
}

TEST_CASE("experimental higher-rank residual at the commutative level") {
  // (1,1): the identity is proven, so its commutative shadow vanishes
  std::vector<SRat> res11 = ch_general_residual_commutative(bk11());
  REQUIRE(res11.size() == 2);
  for (const SRat& r : res11) CHECK(r == SRat(0));
  // (2,1): evaluated and reported only
  std::vector<SRat> res21 = ch_general_residual_commutative(bk21());
  CHECK(res21.size() == 3);
}

TEST_CASE("check reports serialize to JSON") {
  CheckReport rep{"demo", "m=1 n=1"};
  CHECK(rep.to_json() ==
        "{\"identity\":\"demo\",\"params\":\"m=1 n=1\",\"status\":\"pass\"}");
  rep.fail("bad \"coefficient\"");
  rep.fail("second failure ignored");
  CHECK(rep.to_json() ==
        "{\"identity\":\"demo\",\"params\":\"m=1 n=1\",\"status\":\"fail\","
        "\"witness\":\"bad \\\"coefficient\\\"\"}");
}
