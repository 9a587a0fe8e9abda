#ifndef NUSTAB_ROOT_SYSTEM_HPP
#define NUSTAB_ROOT_SYSTEM_HPP

#include "nustab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nustab {

enum class LieType { A, B, C, D, E6, E7, E8, F4, G2 };

std::string to_string(LieType t);
LieType lie_type_from_string(const std::string& s);

/// Dominant integral weight in fundamental-weight coordinates.
struct Weight {
  std::vector<int> coeffs;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coeffs(std::move(c)) {}

  int rank() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  bool is_dominant() const;  // all coefficients >= 0
  int coeff_sum() const;
  std::string to_string() const;  // "c1,c2,...,cr"

  bool operator==(const Weight& o) const { return coeffs == o.coeffs; }
  bool operator!=(const Weight& o) const { return coeffs != o.coeffs; }
};

/// A positive root written in simple-root coordinates.
struct PositiveRoot {
  std::vector<int> simple_coeffs;
  Rational rho_pairing;  // <rho, alpha>, precomputed for the dimension formula
};

/// One compact simple type with exact Cartan data.
///
/// The bilinear form on weights is the inverse of the symmetrized Cartan
/// matrix, normalized so long roots have squared length 2. The casimir()
/// eigenvalue is rescaled so the adjoint representation gets exactly 1
/// (Killing normalization); that is the scale in which the catalog's
/// eigenvalue ratios live.
class RootSystem {
public:
  static RootSystem build(LieType type, int rank);

  LieType type() const { return type_; }
  int rank() const { return rank_; }

  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  /// Per-row multipliers d_i (long roots 1) with d_i * C_ij symmetric.
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  std::vector<std::vector<int>> symmetrized_cartan() const;
  /// Gram matrix <w_i, w_j> of the fundamental weights (inverse symmetrized Cartan).
  const std::vector<std::vector<Rational>>& weight_gram() const { return gram_; }

  Weight highest_root() const { return theta_; }
  Weight weyl_vector() const;  // all-ones coefficient vector
  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }

  Rational inner_product(const Weight& a, const Weight& b) const;
  /// <L, L + 2 rho> before the adjoint rescaling.
  Rational casimir_raw(const Weight& w) const;
  /// Casimir eigenvalue with casimir(highest_root()) == 1 exactly.
  Rational casimir(const Weight& w) const;

  /// Nonzero dominant weight of minimal Casimir among coefficient sums
  /// <= coeff_bound; ties go to the earliest fundamental weights (the
  /// coefficient vector smallest when read from the last coordinate).
  std::pair<Weight, Rational> min_nontrivial_casimir(int coeff_bound = 2) const;

  Integer weyl_dim(const Weight& w) const;

  std::string name() const;  // e.g. "B3"

private:
  RootSystem() = default;

  LieType type_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> symmetrizer_;
  std::vector<std::vector<Rational>> gram_;
  Weight theta_;
  Rational casimir_theta_raw_;
  std::vector<PositiveRoot> positive_roots_;

  void check_rank(const Weight& w, const char* what) const;
};

/// Enumerates all dominant weights with 1 <= coefficient sum <= bound.
std::vector<Weight> dominant_weights_up_to(int rank, int bound);

/// Process-wide cache; root systems are immutable once built.
const RootSystem& shared_root_system(LieType type, int rank);

}  // namespace nustab

#endif
