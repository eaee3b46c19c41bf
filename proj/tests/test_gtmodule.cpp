#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qsl/gtmodule.hpp"

using namespace qsl;

namespace {

NCPoly gen(const SuperCfg& cfg, int i, int j) { return NCPoly::generator(cfg, i, j); }

GTPattern pat(int m, int n, std::vector<std::vector<int>> rows) {
  return GTPattern(m, n, std::move(rows));
}

/// All weak compositions of r into `parts` nonnegative entries.
std::vector<std::vector<int>> weak_compositions(int r, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == parts - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (parts > 0) rec(rec, 0, r);
  return out;
}

}  // namespace

TEST_CASE("covariant weights of hook partitions") {
  CovariantWeight w = covariant_weight(Partition{{2, 1}}, 1, 1);
  CHECK(w.entries == std::vector<int>{2, 1});
  CHECK(covariant_weight(Partition{{1}}, 2, 2).entries == std::vector<int>{1, 0, 0, 0});
  CHECK(covariant_weight(Partition{{1, 1, 1}}, 1, 1).entries == std::vector<int>{1, 2});
  CHECK(covariant_weight(Partition{{3, 1, 1}}, 1, 2).entries == std::vector<int>{3, 2, 0});
  CHECK_THROWS_AS(covariant_weight(Partition{{2, 2}}, 1, 1), std::invalid_argument);
}

TEST_CASE("pattern validity and enumeration at one odd direction") {
  // single box: two patterns, one per letter
  auto p1 = enumerate_patterns(Partition{{1}}, 1, 1);
  REQUIRE(p1.size() == 2);
  CHECK(p1[0] == pat(1, 1, {{0}, {1, 0}}));
  CHECK(p1[1] == pat(1, 1, {{1}, {1, 0}}));
  // outside the fat hook: no patterns for the partition
  CHECK(enumerate_patterns(Partition{{2, 2}}, 1, 1).empty());
  // row of two boxes: middle entry 1 or 2
  auto p2 = enumerate_patterns(Partition{{2}}, 1, 1);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0] == pat(1, 1, {{1}, {2, 0}}));
  CHECK(p2[1] == pat(1, 1, {{2}, {2, 0}}));
  CHECK(pattern_to_tableau(p2[0]).rows == std::vector<std::vector<int>>{{1, 2}});
  CHECK(pattern_to_tableau(p2[1]).rows == std::vector<std::vector<int>>{{1, 1}});
  // malformed steps across the odd band are rejected
  CHECK_FALSE(pat(1, 1, {{3}, {2, 0}}).valid());
  CHECK(pat(1, 1, {{2}, {2, 0}}).valid());
  // the corner degeneration: a zero above the band forces a zero step
  CHECK_FALSE(pat(1, 1, {{1}, {0, 1}}).with_delta(1, 1, -1).valid());
  CHECK(pat(1, 1, {{1}, {2, 0}}).to_json() == "[[1],[2,0]]");
}

TEST_CASE("highest pattern takes the top-row prefix shape") {
  CovariantWeight w = covariant_weight(Partition{{2, 1}}, 2, 1);
  GTPattern top = highest_pattern(w);
  CHECK(top.rows() == std::vector<std::vector<int>>{{2}, {2, 1}, {2, 1, 0}});
  CHECK(top.valid());
  CHECK(top.weight() == std::vector<long>{2, 1, 0});
}

TEST_CASE("pattern counting, tableau bijection, and weights") {
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    CheckReport rep = gt_structure_report(m, n, 4);
    INFO(rep.params << " " << rep.witness);
    CHECK(rep.pass);
  }
}

TEST_CASE("Cartan action reads off the row-sum differences") {
  GTPattern P = pat(1, 1, {{2}, {2, 1}});
  GTVector v{{P, QScalar(1)}};
  CHECK(gt_action(GTGen::cartan, 1, v) == scaled(v, QScalar::q_power(2)));
  CHECK(gt_action(GTGen::cartan, 2, v) == scaled(v, QScalar::q_power(1)));
}

TEST_CASE("defining relations hold on pattern modules") {
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    CheckReport rep = gt_relation_report(m, n, 3, BracketConvention::q_integer);
    INFO(rep.params << " " << rep.witness);
    CHECK(rep.pass);
  }
}

TEST_CASE("bracket convention is adjudicated by the relations") {
  BracketAdjudication adj = adjudicate_bracket_convention(1, 1, 2);
  INFO(adj.summary.params << " " << adj.summary.witness);
  CHECK(adj.summary.pass);
  CHECK(adj.passing == BracketConvention::q_integer);
  CHECK(adj.q_convention.pass);
  CHECK_FALSE(adj.integer_convention.pass);
  CHECK_FALSE(adj.integer_convention.witness.empty());
  BracketAdjudication adj21 = adjudicate_bracket_convention(2, 1, 2);
  CHECK(adj21.summary.pass);
  CHECK(adj21.passing == BracketConvention::q_integer);
}

TEST_CASE("character elements resolve into primitive idempotents") {
  for (int r = 1; r <= 3; ++r)
    for (const Partition& lam : partitions_of(r)) {
      HeckeElt sum(r);
      for (const StandardTableau& tab : standard_tableaux(lam))
        sum += primitive_idempotent(tab);
      CHECK(character_element(lam) == schur_element(lam) * sum);
    }
}

TEST_CASE("idempotent images of distinct-letter tensors have unit norm") {
  for (SuperCfg cfg : {SuperCfg{1, 1}, SuperCfg{2, 1}})
    for (int r = 1; r <= cfg.dim(); ++r) {
      MultiIndex I;
      for (int k = 1; k <= r; ++k) I.push_back(k);
      for (const Partition& lam : partitions_of(r))
        for (const SchurWeylVector& sw : schur_weyl_basis(lam, I, cfg)) {
          INFO("lambda=" << lam.to_string() << " T=" << sw.tableau.to_string());
          CHECK(sw.norm2.is_one());
          CHECK(sw.semistandard);
          CHECK_FALSE(sw.vector.empty());
        }
    }
}

TEST_CASE("Schur-Weyl vectors: vanishing, weights, covariance, class sums") {
  SuperCfg cfg{1, 1};
  for (int r = 1; r <= 3; ++r)
    for (const Partition& lam : partitions_of(r)) {
      if (!lam.fits_hook(cfg.m, cfg.n)) continue;
      for (const MultiIndex& I : nondecreasing_indices(cfg, r)) {
        CheckReport rep = schur_weyl_report(lam, I, cfg);
        INFO(rep.params << " " << rep.witness);
        CHECK(rep.pass);
      }
    }
  SuperCfg big{2, 1};
  for (const Partition& lam : partitions_of(3)) {
    CheckReport rep = schur_weyl_report(lam, MultiIndex{1, 2, 3}, big);
    INFO(rep.params << " " << rep.witness);
    CHECK(rep.pass);
    CheckReport rep2 = schur_weyl_report(lam, MultiIndex{1, 1, 3}, big);
    INFO(rep2.params << " " << rep2.witness);
    CHECK(rep2.pass);
  }
}

TEST_CASE("idempotent image ranks match pattern counts and fill the power") {
  for (int r = 1; r <= 3; ++r) {
    CheckReport rep = schur_weyl_completeness_report(SuperCfg{1, 1}, r);
    INFO(rep.params << " " << rep.witness);
    CHECK(rep.pass);
  }
  for (int r = 1; r <= 2; ++r) {
    CheckReport rep = schur_weyl_completeness_report(SuperCfg{2, 1}, r);
    INFO(rep.params << " " << rep.witness);
    CHECK(rep.pass);
  }
}

TEST_CASE("weight-space supertrace at a single box") {
  SuperCfg cfg{1, 1};
  KostantReport even = kostant_supertrace_check(Partition{{1}}, {1, 0}, cfg);
  CHECK(even.report.pass);
  CHECK(even.lhs == gen(cfg, 1, 1));
  CHECK(even.rhs == gen(cfg, 1, 1));
  KostantReport odd = kostant_supertrace_check(Partition{{1}}, {0, 1}, cfg);
  CHECK(odd.report.pass);
  CHECK(odd.lhs == -gen(cfg, 2, 2));
  CHECK(odd.rhs == -gen(cfg, 2, 2));
}

TEST_CASE("weight-space supertrace across all contents at one odd direction") {
  SuperCfg cfg{1, 1};
  for (int r = 1; r <= 3; ++r)
    for (const Partition& lam : partitions_of(r)) {
      if (!lam.fits_hook(cfg.m, cfg.n)) continue;
      for (const std::vector<int>& mu : weak_compositions(r, cfg.dim())) {
        KostantReport rep = kostant_supertrace_check(lam, mu, cfg);
        INFO(rep.report.params << " " << rep.report.witness);
        CHECK(rep.report.pass);
      }
    }
  KostantReport hook = kostant_supertrace_check(Partition{{2, 1}}, {2, 1}, cfg);
  INFO(hook.report.witness);
  CHECK(hook.report.pass);
  CHECK_FALSE(hook.lhs.is_zero());
}

TEST_CASE("weight-space supertrace at two even directions") {
  SuperCfg cfg{2, 1};
  for (const std::vector<int>& mu :
       {std::vector<int>{1, 1, 1}, {2, 0, 1}, {0, 2, 1}}) {
    KostantReport rep = kostant_supertrace_check(Partition{{2, 1}}, mu, cfg);
    INFO(rep.report.params << " " << rep.report.witness);
    CHECK(rep.report.pass);
  }
}
