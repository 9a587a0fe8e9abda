#include "nustab/classifier.hpp"

#include <doctest.h>

#include <sstream>

using namespace nustab;

TEST_CASE("mu_fns_ratio matches the printed closed forms")
{
  // SU(3): 2n(n+2)/(n+1)^2 at n = 2
  CHECK(mu_fns_ratio(instantiate("SU(n+1)", {{"n", 2}})) == Rational(16, 9));
  // CP^p through the adjoint weight
  CHECK(mu_fns_ratio(instantiate("A III CP", {{"p", 4}})) == 2);
  // SU(5)/SO(5) via c(2 w1) on A4
  CHECK(mu_fns_ratio(instantiate("A I", {{"n", 5}})) == Rational(56, 25));

  auto broken = instantiate("A I", {{"n", 5}});
  broken.fns_weights.clear();
  CHECK_THROWS_AS(mu_fns_ratio(broken), std::invalid_argument);
}

TEST_CASE("conformal verdict thresholds")
{
  CHECK(conformal_verdict(Rational(13, 9), false) == ConformalClass::Unstable);
  CHECK(conformal_verdict(Rational(2), false) == ConformalClass::Neutral);
  CHECK(conformal_verdict(Rational(7, 3), false) == ConformalClass::Stable);
  CHECK_THROWS_WITH_AS(conformal_verdict(Rational(2), true), doctest::Contains("sphere"),
                       std::invalid_argument);
}

TEST_CASE("classify: one example per rule")
{
  auto spin5 = classify(instantiate("Spin(5)", {}));
  CHECK(spin5.kind == VerdictKind::LinearlyUnstable);
  CHECK(spin5.rule_fired == Rule::ConformalUnstable);
  CHECK(spin5.conformal_ratio == Rational(5, 3));

  auto ci = classify(instantiate("C I", {{"n", 3}}));
  CHECK(ci.kind == VerdictKind::LinearlyUnstable);
  CHECK(ci.rule_fired == Rule::HilbertUnstable);
  CHECK(ci.conformal_ratio == 2);  // ratio exactly 2 but Hilbert-unstable wins

  auto q3 = classify(instantiate("B I small", {}));
  CHECK(q3.kind == VerdictKind::LinearlyUnstable);
  CHECK(q3.rule_fired == Rule::HilbertUnstable);

  auto cp3 = classify(instantiate("A III CP", {{"p", 3}}));
  CHECK(cp3.kind == VerdictKind::NeutrallyLinearlyStable);
  CHECK(cp3.rule_fired == Rule::HermitianNeutral);

  auto ai4 = classify(instantiate("A I", {{"n", 4}}));
  CHECK(ai4.kind == VerdictKind::NeutrallyLinearlyStable);
  CHECK(ai4.rule_fired == Rule::IDeformableNeutral);
  CHECK(ai4.conformal_ratio == Rational(9, 4));  // 2*3*6/16 > 2

  auto g = classify(instantiate("G", {}));
  CHECK(g.kind == VerdictKind::LinearlyStable);
  CHECK(g.rule_fired == Rule::StrictlyStable);
  CHECK(g.conformal_ratio == Rational(7, 3));

  CHECK_THROWS_WITH_AS(classify(instantiate("C II sphere", {})),
                       doctest::Contains("sphere"), std::invalid_argument);
}

TEST_CASE("classify: totality and exact reproduction across the catalog")
{
  for (const auto& r : representative_catalog()) {
    if (r.is_sphere) continue;
    auto v = classify(r);
    CHECK(v.kind != VerdictKind::Undetermined);
    CHECK(v.kind == r.expected_verdict);
    CHECK(v.conformal_ratio == r.expected_fns_ratio);
    if (r.hilbert_status == HilbertStatus::Unknown) CHECK(v.conformal_ratio < 2);
  }
}

TEST_CASE("rule-1 precedence: Hilbert status cannot override conformal instability")
{
  for (const auto& r : representative_catalog()) {
    if (r.is_sphere || r.expected_fns_ratio >= 2) continue;
    for (auto hs : {HilbertStatus::Stable, HilbertStatus::Neutral, HilbertStatus::Unstable,
                    HilbertStatus::Unknown}) {
      auto copy = r;
      copy.hilbert_status = hs;
      auto v = classify(copy);
      CHECK(v.kind == VerdictKind::LinearlyUnstable);
      CHECK(v.rule_fired == Rule::ConformalUnstable);
    }
  }
}

TEST_CASE("classify_product")
{
  auto s2 = instantiate("B II", {{"q", 1}});
  auto cp2 = instantiate("A III CP", {{"p", 2}});

  auto v = classify_product({s2, s2});
  CHECK(v.kind == VerdictKind::LinearlyUnstable);
  CHECK(v.evidence.find("(1/2) g1 - (1/2) g2") != std::string::npos);

  auto v2 = classify_product({cp2, s2});
  CHECK(v2.kind == VerdictKind::LinearlyUnstable);
  CHECK(v2.evidence.find("(1/4) g1 - (1/2) g2") != std::string::npos);

  CHECK_THROWS_AS(classify_product({s2}), std::invalid_argument);
}

TEST_CASE("emit_table formats")
{
  auto g2 = instantiate("G2", {});
  const std::string md = emit_table({g2}, TableFormat::Markdown);
  CHECK(md.find("| G2 | 14 | 2 | 2 | H.stable | n.l.stable |") != std::string::npos);

  const std::string csv = emit_table(std::vector<SymmetricSpaceRecord>{}, TableFormat::Csv);
  CHECK(csv == "space,dim,mu_fns_ratio,min_L_ratio,hilbert,verdict\n");

  const std::string json = emit_table(enumerate_catalog(10), "json");
  CHECK(json.find("\"space\": \"G2/SO(4)\"") != std::string::npos);
  CHECK(json.find("\"verdict\": \"l.stable\"") != std::string::npos);

  CHECK_THROWS_AS(emit_table({g2}, "tsv"), std::invalid_argument);

  // byte stability
  CHECK(emit_table(enumerate_catalog(10), "md") == emit_table(enumerate_catalog(10), "md"));
}

TEST_CASE("monotone closed forms at sample parameters")
{
  // spot check the printed family formulas at several parameters
  for (int n : {3, 4, 5, 10}) {
    CHECK(mu_fns_ratio(instantiate("A I", {{"n", n}})) ==
          Rational(2 * (n - 1) * (n + 2), n * n));
    CHECK(mu_fns_ratio(instantiate("Sp(n)", {{"n", n}})) == Rational(2 * n + 1, n + 1));
  }
  for (int q : {3, 4, 5, 10})
    CHECK(mu_fns_ratio(instantiate("B I (3,2q)", {{"q", q}})) ==
          Rational(4 * q + 6, 2 * q + 1));
  for (int n : {4, 5, 6, 10})
    CHECK(mu_fns_ratio(instantiate("Spin(2n)", {{"n", n}})) == Rational(2 * n - 1, n - 1));
}
