#ifndef NUSTAB_CATALOG_HPP
#define NUSTAB_CATALOG_HPP

#include "nustab/rational.hpp"
#include "nustab/root_system.hpp"

#include <nlohmann/json_fwd.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace nustab {

/// Stability of the metric with respect to the total-scalar-curvature
/// (Hilbert) functional on transverse traceless tensors. Catalog data, not
/// computed here. Neutral = the Hessian has a zero eigenvalue (the metric is
/// infinitesimally deformable).
enum class HilbertStatus { Stable, Neutral, Unstable, Unknown };

enum class VerdictKind {
  LinearlyStable,
  NeutrallyLinearlyStable,
  LinearlyUnstable,
  Undetermined,
};

std::string to_string(HilbertStatus s);
HilbertStatus hilbert_status_from_string(const std::string& s);
std::string to_string(VerdictKind k);
std::string verdict_table_label(VerdictKind k);  // "l.stable", "n.l.stable", ...
std::string hilbert_table_label(HilbertStatus s);
VerdictKind verdict_kind_from_string(const std::string& s);

using Params = std::map<std::string, int>;

/// One catalog row: a simply-connected irreducible symmetric space of
/// compact type with its eigenvalue data in the normalization where the
/// Einstein constant of the Killing metric is 1/4 (group type) or 1/2.
struct SymmetricSpaceRecord {
  std::string label;   // Cartan classification label: "A I", "E VII", "B_n", ...
  std::string name;    // display name with parameters bound, e.g. "SU(5)/SO(5)"
  std::vector<std::string> aliases;
  Params params;

  bool is_group_type = false;
  bool is_sphere = false;     // spheres stay in the catalog but are never classified
  bool is_hermitian = false;
  int dimension = 0;

  LieType g_type = LieType::A;  // root system of G
  int g_rank = 0;

  int einstein_ratio_normalizer = 2;  // 4 for group type, 2 otherwise
  /// Candidate highest weights of the first spherical representations;
  /// empty for group type (the engine minimizes over all small weights).
  std::vector<Weight> fns_weights;

  Rational expected_fns_ratio;  // printed -mu_fns / lambda
  Rational min_L_ratio;         // printed min L_i / lambda (upper-bound proxy only)
  HilbertStatus hilbert_status = HilbertStatus::Unknown;
  VerdictKind expected_verdict = VerdictKind::Undetermined;

  RootSystem root_system() const { return RootSystem::build(g_type, g_rank); }

  bool operator==(const SymmetricSpaceRecord& o) const;
};

/// A parameterized catalog row (one printed table line).
struct Family {
  std::string id;          // unique row id, e.g. "C II HP"
  std::string label;       // Cartan label shared by related rows, e.g. "C II"
  std::vector<std::string> param_names;  // in canonical order
  std::string range_text;  // the printed constraint, e.g. "p >= q >= 2"
  std::function<bool(const Params&)> in_range;
  std::function<SymmetricSpaceRecord(const Params&)> make;
  Params min_params;  // smallest valid parameters (empty for fixed rows)
};

const std::vector<Family>& families();

/// Builds the record for a family id or Cartan label. Throws
/// std::invalid_argument with the printed constraint on bad parameters.
SymmetricSpaceRecord instantiate(const std::string& family_or_label, const Params& params);

/// All non-sphere records of dimension <= max_dim, ordered by
/// (dimension, label, name). Requires max_dim >= 4.
std::vector<SymmetricSpaceRecord> enumerate_catalog(int max_dim);

/// Representative parameter choices for a family: each parameter swept over
/// {min, min+1, min+2, extra} intersected with the valid range.
std::vector<Params> representative_params(const Family& f, int extra = 10);

/// Every family at representative parameters (deduplicated, deterministic).
std::vector<SymmetricSpaceRecord> representative_catalog();

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Re-derives every ratio from the Casimir engine and checks it against the
/// stored value, along with the structural invariants. Violations are
/// collected, not thrown.
ValidationReport validate_catalog(const std::vector<SymmetricSpaceRecord>& records);
ValidationReport validate_catalog();  // over representative_catalog()

// JSON schema: one object per record, rationals as "p/q" strings.
nlohmann::json record_to_json(const SymmetricSpaceRecord& r);
SymmetricSpaceRecord record_from_json(const nlohmann::json& j);
nlohmann::json catalog_to_json(const std::vector<SymmetricSpaceRecord>& records);
std::vector<SymmetricSpaceRecord> catalog_from_json(const nlohmann::json& j);
std::vector<SymmetricSpaceRecord> load_catalog_file(const std::string& path);

/// Resolves a user-facing space name: display name, alias, or
/// "<family or label> k=v ..." / "<family or label> v1 v2" form.
/// Throws std::invalid_argument listing near matches when unknown.
SymmetricSpaceRecord resolve_space_name(const std::string& text,
                                        const std::vector<SymmetricSpaceRecord>* extra = nullptr);

}  // namespace nustab

#endif
