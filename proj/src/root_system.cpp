#include "nustab/root_system.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace nustab {

std::string to_string(LieType t)
{
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
    case LieType::E8: return "E8";
    case LieType::F4: return "F4";
    case LieType::G2: return "G2";
  }
  throw std::logic_error("unreachable lie type");
}

LieType lie_type_from_string(const std::string& s)
{
  if (s == "A") return LieType::A;
  if (s == "B") return LieType::B;
  if (s == "C") return LieType::C;
  if (s == "D") return LieType::D;
  if (s == "E6") return LieType::E6;
  if (s == "E7") return LieType::E7;
  if (s == "E8") return LieType::E8;
  if (s == "F4") return LieType::F4;
  if (s == "G2") return LieType::G2;
  throw std::invalid_argument("unknown Lie type \"" + s + "\"");
}

bool Weight::is_zero() const
{
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

bool Weight::is_dominant() const
{
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

int Weight::coeff_sum() const
{
  int s = 0;
  for (int c : coeffs) s += c;
  return s;
}

std::string Weight::to_string() const
{
  std::ostringstream os;
  for (int i = 0; i < rank(); ++i) {
    if (i) os << ',';
    os << coeffs[i];
  }
  return os.str();
}

namespace {

// Cartan matrix conventions: C_ij = 2 (a_i, a_j) / (a_j, a_j), Bourbaki node
// numbering for the exceptional types (E: chain 1-3-4-...-n with node 2
// attached to node 4).
std::vector<std::vector<int>> cartan_for(LieType t, int n)
{
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j, int cij = -1, int cji = -1) {
    c[i - 1][j - 1] = cij;
    c[j - 1][i - 1] = cji;
  };
  switch (t) {
    case LieType::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case LieType::B:
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
      link(n - 1, n, -2, -1);  // a_n short
      break;
    case LieType::C:
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
      link(n - 1, n, -1, -2);  // a_n long
      break;
    case LieType::D:
      for (int i = 1; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1);
      link(n - 2, n);
      break;
    case LieType::E6:
    case LieType::E7:
    case LieType::E8:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case LieType::F4:
      link(1, 2);
      link(2, 3, -2, -1);  // a3, a4 short
      link(3, 4);
      break;
    case LieType::G2:
      link(1, 2, -1, -3);  // a1 short
      break;
  }
  return c;
}

std::vector<int> symmetrizer_for(LieType t, int n)
{
  std::vector<int> d(n, 1);
  switch (t) {
    case LieType::B:
      d[n - 1] = 2;
      break;
    case LieType::C:
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case LieType::F4:
      d[2] = d[3] = 2;
      break;
    case LieType::G2:
      d[0] = 3;
      break;
    default:
      break;
  }
  return d;
}

Weight highest_root_for(LieType t, int n)
{
  std::vector<int> w(n, 0);
  switch (t) {
    case LieType::A:
      if (n == 1) {
        w[0] = 2;
      } else {
        w[0] = 1;
        w[n - 1] = 1;
      }
      break;
    case LieType::B:
      if (n == 2)
        w[1] = 2;
      else
        w[1] = 1;
      break;
    case LieType::C:
      w[0] = 2;
      break;
    case LieType::D:
      w[1] = 1;
      break;
    case LieType::E6:
      w[1] = 1;
      break;
    case LieType::E7:
      w[0] = 1;
      break;
    case LieType::E8:
      w[7] = 1;
      break;
    case LieType::F4:
      w[0] = 1;
      break;
    case LieType::G2:
      w[1] = 1;
      break;
  }
  return Weight(w);
}

void validate_rank(LieType t, int n)
{
  auto fail = [&](const std::string& msg) { throw std::invalid_argument(msg); };
  switch (t) {
    case LieType::A:
      if (n < 1) fail("type A needs rank >= 1");
      break;
    case LieType::B:
      if (n == 1) fail("B1 coincides with A1; build (A,1) instead");
      if (n < 2) fail("type B needs rank >= 2");
      break;
    case LieType::C:
      if (n == 2)
        fail("C2 coincides with B2 (Sp(2) and Spin(5) are isomorphic); "
             "the canonical representative is (B,2)");
      if (n < 3) fail("type C needs rank >= 3");
      break;
    case LieType::D:
      if (n == 3) fail("D3 coincides with A3; the canonical representative is (A,3)");
      if (n == 2) fail("D2 is not simple (A1 x A1)");
      if (n < 4) fail("type D needs rank >= 4");
      break;
    case LieType::E6:
      if (n != 6) fail("E6 has rank 6");
      break;
    case LieType::E7:
      if (n != 7) fail("E7 has rank 7");
      break;
    case LieType::E8:
      if (n != 8) fail("E8 has rank 8");
      break;
    case LieType::F4:
      if (n != 4) fail("F4 has rank 4");
      break;
    case LieType::G2:
      if (n != 2) fail("G2 has rank 2");
      break;
  }
}

// Exact inverse of a small matrix by Gauss-Jordan elimination.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m)
{
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0)
      throw std::invalid_argument("singular matrix");
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    const Rational p = m[col][col];
    for (int j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

std::vector<std::vector<int>> RootSystem::symmetrized_cartan() const
{
  std::vector<std::vector<int>> b(rank_, std::vector<int>(rank_, 0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) b[i][j] = symmetrizer_[i] * cartan_[i][j];
  return b;
}

RootSystem RootSystem::build(LieType type, int rank)
{
  validate_rank(type, rank);
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.cartan_ = cartan_for(type, rank);
  rs.symmetrizer_ = symmetrizer_for(type, rank);
  rs.theta_ = highest_root_for(type, rank);

  std::vector<std::vector<Rational>> b(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) b[i][j] = rs.symmetrizer_[i] * rs.cartan_[i][j];
  rs.gram_ = invert(std::move(b));

  // Positive roots in simple-root coordinates, grown by root strings.
  // beta + a_i is a root iff p - <beta, a_i^vee> > 0 where p is the depth of
  // the a_i-string below beta.
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> simple(rank, 0);
    simple[i] = 1;
    roots.insert(simple);
    frontier.push_back(simple);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < rank; ++i) {
        int pairing = 0;  // <beta, a_i^vee> = sum_j k_j C_ji
        for (int j = 0; j < rank; ++j) pairing += beta[j] * rs.cartan_[j][i];
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          bool nonneg = std::all_of(down.begin(), down.end(), [](int k) { return k >= 0; });
          if (!nonneg || !roots.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  for (const auto& r : roots) {
    PositiveRoot pr;
    pr.simple_coeffs = r;
    Rational rho_pair = 0;  // <rho, alpha> = sum_i k_i d_i with d_i = (a_i,a_i)/2
    for (int i = 0; i < rank; ++i)
      rho_pair += Rational(r[i], rs.symmetrizer_[i]);
    pr.rho_pairing = rho_pair;
    rs.positive_roots_.push_back(std::move(pr));
  }

  rs.casimir_theta_raw_ = rs.casimir_raw(rs.theta_);
  return rs;
}

Weight RootSystem::weyl_vector() const
{
  return Weight(std::vector<int>(rank_, 1));
}

void RootSystem::check_rank(const Weight& w, const char* what) const
{
  if (w.rank() != rank_) {
    std::ostringstream os;
    os << what << ": weight has rank " << w.rank() << ", root system " << name()
       << " has rank " << rank_;
    throw std::invalid_argument(os.str());
  }
}

Rational RootSystem::inner_product(const Weight& a, const Weight& b) const
{
  check_rank(a, "inner_product");
  check_rank(b, "inner_product");
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b.coeffs[j] == 0) continue;
      s += Rational(a.coeffs[i]) * b.coeffs[j] * gram_[i][j];
    }
  }
  return s;
}

Rational RootSystem::casimir_raw(const Weight& w) const
{
  check_rank(w, "casimir");
  if (!w.is_dominant())
    throw std::invalid_argument("casimir: weight " + w.to_string() + " is not dominant");
  // <w, w + 2 rho> with rho = sum of fundamental weights
  Rational s = inner_product(w, w);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += 2 * Rational(w.coeffs[i]) * gram_[i][j];
  return s;
}

Rational RootSystem::casimir(const Weight& w) const
{
  return casimir_raw(w) / casimir_theta_raw_;
}

std::vector<Weight> dominant_weights_up_to(int rank, int bound)
{
  std::vector<Weight> out;
  std::vector<int> cur(rank, 0);
  // lexicographic enumeration; order does not matter to callers
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == rank) {
      Weight w{cur};
      if (!w.is_zero()) out.push_back(w);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      cur[pos] = c;
      rec(pos + 1, remaining - c);
    }
    cur[pos] = 0;
  };
  rec(0, bound);
  return out;
}

std::pair<Weight, Rational> RootSystem::min_nontrivial_casimir(int coeff_bound) const
{
  if (coeff_bound < 2)
    throw std::invalid_argument("min_nontrivial_casimir: coeff_bound must be >= 2");
  bool have = false;
  Weight best;
  Rational best_val;
  auto colex_less = [](const Weight& a, const Weight& b) {
    for (int i = a.rank() - 1; i >= 0; --i)
      if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
    return false;
  };
  for (const Weight& w : dominant_weights_up_to(rank_, coeff_bound)) {
    const Rational c = casimir(w);
    if (!have || c < best_val || (c == best_val && colex_less(w, best))) {
      have = true;
      best = w;
      best_val = c;
    }
  }
  return {best, best_val};
}

Integer RootSystem::weyl_dim(const Weight& w) const
{
  check_rank(w, "weyl_dim");
  if (!w.is_dominant())
    throw std::invalid_argument("weyl_dim: weight " + w.to_string() + " is not dominant");
  Rational dim = 1;
  for (const auto& alpha : positive_roots_) {
    Rational num = alpha.rho_pairing;  // <w + rho, alpha>
    for (int i = 0; i < rank_; ++i) {
      if (w.coeffs[i] && alpha.simple_coeffs[i])
        num += Rational(w.coeffs[i] * alpha.simple_coeffs[i], symmetrizer_[i]);
    }
    dim *= num / alpha.rho_pairing;
  }
  if (boost::multiprecision::denominator(dim) != 1)
    throw std::logic_error("weyl_dim: non-integer result");
  return boost::multiprecision::numerator(dim);
}

const RootSystem& shared_root_system(LieType type, int rank)
{
  static std::mutex mutex;
  static std::map<std::pair<LieType, int>, RootSystem> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(type, rank);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, RootSystem::build(type, rank)).first;
  return it->second;
}

std::string RootSystem::name() const
{
  switch (type_) {
    case LieType::A:
    case LieType::B:
    case LieType::C:
    case LieType::D:
      return to_string(type_) + std::to_string(rank_);
    default:
      return to_string(type_);
  }
}

}  // namespace nustab
