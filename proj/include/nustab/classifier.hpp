#ifndef NUSTAB_CLASSIFIER_HPP
#define NUSTAB_CLASSIFIER_HPP

#include "nustab/catalog.hpp"

#include <string>
#include <vector>

namespace nustab {

/// Which branch of the decision procedure produced the verdict.
enum class Rule {
  ConformalUnstable,
  HilbertUnstable,
  HermitianNeutral,
  IDeformableNeutral,
  StrictlyStable,
  SphereExcluded,
  Undetermined,
};

std::string to_string(Rule r);

enum class ConformalClass { Unstable, Neutral, Stable };

struct StabilityVerdict {
  VerdictKind kind = VerdictKind::Undetermined;
  Rational conformal_ratio;  // -mu_fns / lambda
  Rule rule_fired = Rule::Undetermined;
  std::string evidence;
};

/// -mu_fns / lambda from the Casimir engine: 4 * min nontrivial Casimir for
/// group type, 2 * min over the stored spherical weight candidates otherwise.
Rational mu_fns_ratio(const SymmetricSpaceRecord& record);

/// Sign test of the second variation in conformal directions. Ratios below 2
/// mean a positive direction exists; 2 exactly is the neutral borderline.
/// Throws for spheres, which the classification excludes.
ConformalClass conformal_verdict(const Rational& ratio, bool is_sphere);

/// Full decision procedure, in order: (1) conformal instability,
/// (2) Hilbert instability, (3) ratio exactly 2, (4) Hilbert zero mode,
/// (5) strict stability. Throws on sphere input.
StabilityVerdict classify(const SymmetricSpaceRecord& record);

/// Product of two or more positive Einstein factors with a common constant
/// is always unstable; the verdict names the destabilizing direction.
StabilityVerdict classify_product(const std::vector<SymmetricSpaceRecord>& factors);

enum class TableFormat { Markdown, Csv, Json };

std::string emit_table(const std::vector<SymmetricSpaceRecord>& records, TableFormat fmt);
std::string emit_table(const std::vector<SymmetricSpaceRecord>& records,
                       const std::string& fmt);  // "markdown"|"md", "csv", "json"

}  // namespace nustab

#endif
