#include "nustab/classifier.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace nustab {

std::string to_string(Rule r)
{
  switch (r) {
    case Rule::ConformalUnstable: return "ConformalUnstable";
    case Rule::HilbertUnstable: return "HilbertUnstable";
    case Rule::HermitianNeutral: return "HermitianNeutral";
    case Rule::IDeformableNeutral: return "IDeformableNeutral";
    case Rule::StrictlyStable: return "StrictlyStable";
    case Rule::SphereExcluded: return "SphereExcluded";
    case Rule::Undetermined: return "Undetermined";
  }
  throw std::logic_error("unreachable rule");
}

Rational mu_fns_ratio(const SymmetricSpaceRecord& record)
{
  const RootSystem& rs = shared_root_system(record.g_type, record.g_rank);
  if (record.is_group_type) {
    // Peter-Weyl: the first eigenvalue comes from the nontrivial
    // representation of minimal Casimir.
    return record.einstein_ratio_normalizer * rs.min_nontrivial_casimir().second;
  }
  if (record.fns_weights.empty())
    throw std::invalid_argument(record.name + ": no spherical weight candidates stored");
  bool have = false;
  Rational best;
  for (const Weight& w : record.fns_weights) {
    const Rational c = rs.casimir(w);
    if (!have || c < best) {
      best = c;
      have = true;
    }
  }
  return record.einstein_ratio_normalizer * best;
}

ConformalClass conformal_verdict(const Rational& ratio, bool is_sphere)
{
  if (is_sphere)
    throw std::invalid_argument("conformal verdict: the classification excludes the standard sphere");
  if (ratio < 2) return ConformalClass::Unstable;
  if (ratio == 2) return ConformalClass::Neutral;
  return ConformalClass::Stable;
}

StabilityVerdict classify(const SymmetricSpaceRecord& record)
{
  if (record.is_sphere)
    throw std::invalid_argument("classify: the classification excludes the standard sphere (" +
                                record.name + ")");
  StabilityVerdict v;
  v.conformal_ratio = mu_fns_ratio(record);
  std::ostringstream ev;
  ev << record.name << ": first Laplace eigenvalue ratio -mu_fns/lambda = "
     << to_fraction_string(v.conformal_ratio) << " on " << to_string(record.g_type)
     << std::to_string(record.g_rank) << "; Hilbert status "
     << to_string(record.hilbert_status) << ". ";

  if (v.conformal_ratio < 2) {
    v.kind = VerdictKind::LinearlyUnstable;
    v.rule_fired = Rule::ConformalUnstable;
    ev << "Ratio below 2: the second variation is positive along a conformal direction.";
  } else if (record.hilbert_status == HilbertStatus::Unstable) {
    v.kind = VerdictKind::LinearlyUnstable;
    v.rule_fired = Rule::HilbertUnstable;
    ev << "Hilbert-unstable: a transverse traceless direction has positive second variation.";
  } else if (v.conformal_ratio == 2) {
    v.kind = VerdictKind::NeutrallyLinearlyStable;
    v.rule_fired = Rule::HermitianNeutral;
    ev << "Ratio exactly 2: conformal directions built from first eigenfunctions are "
          "null directions outside Im div*.";
    if (record.hilbert_status == HilbertStatus::Neutral)
      ev << " The Hilbert zero mode contributes further neutral transverse traceless "
            "directions.";
  } else if (record.hilbert_status == HilbertStatus::Neutral) {
    v.kind = VerdictKind::NeutrallyLinearlyStable;
    v.rule_fired = Rule::IDeformableNeutral;
    ev << "Infinitesimally deformable: a transverse traceless zero mode of the "
          "stability operator exists while conformal directions are strictly negative.";
  } else if (record.hilbert_status == HilbertStatus::Stable) {
    v.kind = VerdictKind::LinearlyStable;
    v.rule_fired = Rule::StrictlyStable;
    ev << "Ratio above 2 and Hilbert-stable: the second variation is negative definite "
          "off Im div*.";
  } else {
    v.kind = VerdictKind::Undetermined;
    v.rule_fired = Rule::Undetermined;
    ev << "Hilbert status unknown and conformal directions are strictly stable: "
          "undecidable from the stored data.";
  }
  v.evidence = ev.str();
  return v;
}

StabilityVerdict classify_product(const std::vector<SymmetricSpaceRecord>& factors)
{
  if (factors.size() < 2)
    throw std::invalid_argument("classify_product: need at least 2 factors");
  StabilityVerdict v;
  v.kind = VerdictKind::LinearlyUnstable;
  v.rule_fired = Rule::HilbertUnstable;
  bool have = false;
  for (const auto& f : factors) {
    const Rational r = f.expected_fns_ratio;
    if (!have || r < v.conformal_ratio) {
      v.conformal_ratio = r;
      have = true;
    }
  }
  std::ostringstream ev;
  ev << "Product of " << factors.size() << " positive Einstein factors (";
  for (size_t i = 0; i < factors.size(); ++i)
    ev << (i ? ", " : "") << factors[i].name;
  const int n1 = factors[0].dimension, n2 = factors[1].dimension;
  ev << "): the direction h = (1/" << n1 << ") g1 - (1/" << n2
     << ") g2 is transverse traceless with N h = lambda h, so the second variation "
        "is positive along it.";
  v.evidence = ev.str();
  return v;
}

namespace {

struct TableRow {
  std::string name, dim, fns, minL, hilbert, verdict;
};

TableRow row_of(const SymmetricSpaceRecord& r)
{
  return {r.name,
          std::to_string(r.dimension),
          to_fraction_string(r.expected_fns_ratio),
          to_fraction_string(r.min_L_ratio),
          hilbert_table_label(r.hilbert_status),
          verdict_table_label(r.expected_verdict)};
}

}  // namespace

std::string emit_table(const std::vector<SymmetricSpaceRecord>& records, TableFormat fmt)
{
  std::ostringstream os;
  switch (fmt) {
    case TableFormat::Markdown: {
      os << "| space | dim | -mu_fns/lambda | min L_i/lambda | Hilbert | nu-verdict |\n";
      os << "|---|---|---|---|---|---|\n";
      for (const auto& r : records) {
        const TableRow t = row_of(r);
        os << "| " << t.name << " | " << t.dim << " | " << t.fns << " | " << t.minL
           << " | " << t.hilbert << " | " << t.verdict << " |\n";
      }
      break;
    }
    case TableFormat::Csv: {
      os << "space,dim,mu_fns_ratio,min_L_ratio,hilbert,verdict\n";
      for (const auto& r : records) {
        const TableRow t = row_of(r);
        os << t.name << ',' << t.dim << ',' << t.fns << ',' << t.minL << ',' << t.hilbert
           << ',' << t.verdict << '\n';
      }
      break;
    }
    case TableFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : records) {
        const TableRow t = row_of(r);
        arr.push_back({{"space", t.name},
                       {"dim", r.dimension},
                       {"mu_fns_ratio", t.fns},
                       {"min_L_ratio", t.minL},
                       {"hilbert", t.hilbert},
                       {"verdict", t.verdict}});
      }
      os << arr.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

std::string emit_table(const std::vector<SymmetricSpaceRecord>& records,
                       const std::string& fmt)
{
  if (fmt == "markdown" || fmt == "md") return emit_table(records, TableFormat::Markdown);
  if (fmt == "csv") return emit_table(records, TableFormat::Csv);
  if (fmt == "json") return emit_table(records, TableFormat::Json);
  throw std::invalid_argument("unknown table format \"" + fmt + "\"");
}

}  // namespace nustab
