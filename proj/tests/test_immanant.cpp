#include <catch2/catch_amalgamated.hpp>

#include "qsl/immanant.hpp"

using namespace qsl;

namespace {
QScalar q() { return QScalar::q(); }
QScalar qp(long k) { return QScalar::q_power(k); }
NCPoly gen(const SuperCfg& cfg, int i, int j) { return NCPoly::generator(cfg, i, j); }
}  // namespace

TEST_CASE("degree-one immanants are signed matrix entries") {
  SuperCfg cfg{1, 1};
  CHECK(immanant({Partition{{1}}, {1}, {1}, cfg}) == gen(cfg, 1, 1));
  CHECK(immanant({Partition{{1}}, {2}, {2}, cfg}) == -gen(cfg, 2, 2));
  CHECK(immanant({Partition{{1}}, {1}, {2}, cfg}) == gen(cfg, 1, 2));
  // sum over singletons is the supertrace of X
  CHECK(immanant({Partition{{1}}, {1}, {1}, cfg}) +
            immanant({Partition{{1}}, {2}, {2}, cfg}) ==
        AqMatrix::x(cfg).supertrace());
}

TEST_CASE("degree-two immanants at one odd direction") {
  SuperCfg cfg{1, 1};
  NCPoly x11 = gen(cfg, 1, 1), x12 = gen(cfg, 1, 2), x21 = gen(cfg, 2, 1),
         x22 = gen(cfg, 2, 2);
  CHECK(immanant({Partition{{1, 1}}, {1, 2}, {1, 2}, cfg}) ==
        -(x11 * x22) + qp(-1) * (x12 * x21));
  CHECK(immanant({Partition{{2}}, {1, 2}, {1, 2}, cfg}) ==
        -(x11 * x22) - q() * (x12 * x21));
}

TEST_CASE("both evaluation paths agree") {
  for (SuperCfg cfg : {SuperCfg{1, 1}, SuperCfg{2, 1}})
    for (int r = 1; r <= 3; ++r)
      for (const Partition& lam : partitions_of(r))
        for (const MultiIndex& I : nondecreasing_indices(cfg, r)) {
          NCPoly direct = immanant({lam, I, I, cfg});
          CHECK(direct == immanant_via_idempotent(lam, I, cfg));
        }
}

TEST_CASE("idempotent path is tableau independent") {
  SuperCfg cfg{1, 1};
  Partition lam{{2, 1}};
  MultiIndex I{1, 1, 2};
  NCPoly ref = immanant_via_idempotent(lam, I, cfg);
  for (const StandardTableau& t : standard_tableaux(lam))
    CHECK(immanant_via_idempotent(lam, I, cfg, &t) == ref);
}

TEST_CASE("immanants vanish outside the fat hook") {
  SuperCfg cfg{1, 1};
  Partition lam{{2, 2}};
  CHECK_FALSE(in_fat_hook(lam, cfg));
  CHECK(in_fat_hook(Partition{{3, 1}}, cfg));
  CHECK(in_fat_hook(Partition{{2, 1, 1}}, cfg));
  for (const MultiIndex& I : nondecreasing_indices(cfg, 4)) {
    CHECK(immanant({lam, I, I, cfg}).is_zero());
    CHECK(immanant_via_idempotent(lam, I, cfg).is_zero());
  }
  // a couple of off-diagonal entries as well
  CHECK(immanant({lam, {1, 1, 2, 2}, {1, 2, 1, 2}, cfg}).is_zero());
  CHECK(immanant({lam, {1, 2, 2, 1}, {2, 2, 1, 1}, cfg}).is_zero());
}

TEST_CASE("normalized immanant sums at one odd direction") {
  SuperCfg cfg{1, 1};
  NCPoly x11 = gen(cfg, 1, 1), x12 = gen(cfg, 1, 2), x21 = gen(cfg, 2, 1),
         x22 = gen(cfg, 2, 2);
  CHECK(immanant_sum(Partition{{1}}, cfg) == x11 - x22);
  // column sum: alpha_2 = x22^2 - x11 x22 + q^{-1} x12 x21
  CHECK(immanant_sum(Partition{{1, 1}}, cfg) ==
        x22 * x22 - x11 * x22 + qp(-1) * (x12 * x21));
  // row sum: beta_2 = x11^2 - x11 x22 - q x12 x21
  CHECK(immanant_sum(Partition{{2}}, cfg) ==
        x11 * x11 - x11 * x22 - q() * (x12 * x21));
  CHECK(immanant_sum(Partition{{2, 2}}, cfg).is_zero());
}

TEST_CASE("immanant sums agree with the bare-idempotent supertrace") {
  for (SuperCfg cfg : {SuperCfg{1, 1}, SuperCfg{2, 1}})
    for (int r = 1; r <= 3; ++r)
      for (const Partition& lam : partitions_of(r))
        CHECK(immanant_sum(lam, cfg) == immanant_sum_supertrace(lam, cfg));
  // degree 4 at the smallest configuration, all tableaux
  SuperCfg cfg{1, 1};
  for (const Partition& lam : partitions_of(4)) {
    NCPoly ref = immanant_sum(lam, cfg);
    for (const StandardTableau& t : standard_tableaux(lam))
      CHECK(immanant_sum_supertrace(lam, cfg, &t) == ref);
  }
}

TEST_CASE("immanants over arbitrary Hecke characters are linear") {
  SuperCfg cfg{1, 1};
  HeckeElt a = character_element(Partition{{2}});
  HeckeElt b = character_element(Partition{{1, 1}});
  MultiIndex I{1, 2}, J{2, 1};
  CHECK(immanant(a + b, I, J, cfg) ==
        immanant(a, I, J, cfg) + immanant(b, I, J, cfg));
}
