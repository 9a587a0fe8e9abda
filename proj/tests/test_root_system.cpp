#include "nustab/root_system.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <vector>

using namespace nustab;

namespace {

// Independent oracle for the classical types: fundamental weights written in
// orthogonal coordinates. Everything here is hand-derivable and shares no
// code with the Cartan-matrix route in RootSystem.
struct EpsOracle {
  int ambient;
  Rational e_norm;                          // (e_a, e_a)
  std::vector<std::vector<Rational>> omega; // fundamental weights, eps coords

  Rational ip(const std::vector<Rational>& a, const std::vector<Rational>& b) const
  {
    Rational s = 0;
    for (int i = 0; i < ambient; ++i) s += a[i] * b[i];
    return s * e_norm;
  }

  std::vector<Rational> weight_vec(const Weight& w) const
  {
    std::vector<Rational> v(ambient, 0);
    for (size_t i = 0; i < w.coeffs.size(); ++i)
      for (int a = 0; a < ambient; ++a) v[a] += w.coeffs[i] * omega[i][a];
    return v;
  }

  // <w, w + 2 rho> on the working scale
  Rational casimir_raw(const Weight& w) const
  {
    std::vector<Rational> v = weight_vec(w);
    std::vector<Rational> rho(ambient, 0);
    for (const auto& om : omega)
      for (int a = 0; a < ambient; ++a) rho[a] += om[a];
    std::vector<Rational> shifted = v;
    for (int a = 0; a < ambient; ++a) shifted[a] += 2 * rho[a];
    return ip(v, shifted);
  }
};

EpsOracle make_oracle(LieType t, int n)
{
  EpsOracle o;
  switch (t) {
    case LieType::A: {
      o.ambient = n + 1;
      o.e_norm = 1;
      for (int i = 1; i <= n; ++i) {
        std::vector<Rational> w(n + 1, Rational(-i, n + 1));
        for (int a = 0; a < i; ++a) w[a] += 1;
        o.omega.push_back(w);
      }
      break;
    }
    case LieType::B: {
      o.ambient = n;
      o.e_norm = 1;
      for (int i = 1; i <= n; ++i) {
        std::vector<Rational> w(n, 0);
        const Rational v = (i == n) ? Rational(1, 2) : Rational(1);
        for (int a = 0; a < i; ++a) w[a] = v;
        o.omega.push_back(w);
      }
      break;
    }
    case LieType::C: {
      o.ambient = n;
      o.e_norm = Rational(1, 2);  // long roots 2 e_i keep squared length 2
      for (int i = 1; i <= n; ++i) {
        std::vector<Rational> w(n, 0);
        for (int a = 0; a < i; ++a) w[a] = 1;
        o.omega.push_back(w);
      }
      break;
    }
    case LieType::D: {
      o.ambient = n;
      o.e_norm = 1;
      for (int i = 1; i <= n - 2; ++i) {
        std::vector<Rational> w(n, 0);
        for (int a = 0; a < i; ++a) w[a] = 1;
        o.omega.push_back(w);
      }
      std::vector<Rational> spin_minus(n, Rational(1, 2));
      spin_minus[n - 1] = Rational(-1, 2);
      o.omega.push_back(spin_minus);
      o.omega.push_back(std::vector<Rational>(n, Rational(1, 2)));
      break;
    }
    default:
      throw std::logic_error("oracle only covers classical types");
  }
  return o;
}

const std::vector<std::pair<LieType, std::vector<int>>>& type_ranks()
{
  static const std::vector<std::pair<LieType, std::vector<int>>> tr = {
      {LieType::A, {1, 4, 8}},  {LieType::B, {2, 5, 9}},  {LieType::C, {3, 6, 10}},
      {LieType::D, {4, 7, 10}}, {LieType::E6, {6}},       {LieType::E7, {7}},
      {LieType::E8, {8}},       {LieType::F4, {4}},       {LieType::G2, {2}},
  };
  return tr;
}

}  // namespace

TEST_CASE("cartan data of A2 and G2")
{
  auto a2 = RootSystem::build(LieType::A, 2);
  CHECK(a2.cartan_matrix() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(a2.highest_root() == Weight({1, 1}));

  auto g2 = RootSystem::build(LieType::G2, 2);
  CHECK(g2.highest_root() == Weight({0, 1}));
  CHECK(g2.weyl_dim(g2.highest_root()) == 14);  // adjoint
  CHECK(g2.weyl_dim(Weight({1, 0})) == 7);
}

TEST_CASE("invalid ranks and low-rank coincidences")
{
  CHECK_THROWS_AS(RootSystem::build(LieType::C, 2), std::invalid_argument);
  CHECK_THROWS_WITH_AS(RootSystem::build(LieType::C, 2),
                       doctest::Contains("Spin(5)"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(LieType::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(LieType::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(LieType::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(LieType::E6, 7), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(LieType::F4, 3), std::invalid_argument);
}

TEST_CASE("B2 carries the C2 casimir spectrum under coefficient swap")
{
  // Sp(2) ~ Spin(5): the isomorphism exchanges the two fundamental weights.
  auto b2 = RootSystem::build(LieType::B, 2);
  auto c2_oracle = make_oracle(LieType::C, 2);
  const Rational theta_c2 = c2_oracle.casimir_raw(Weight({2, 0}));  // 2 e_1
  for (const Weight& w : dominant_weights_up_to(2, 3)) {
    Weight swapped({w.coeffs[1], w.coeffs[0]});
    CHECK(b2.casimir(swapped) == c2_oracle.casimir_raw(w) / theta_c2);
  }
}

TEST_CASE("inner product: zero weight, hand-inverted A2 gram, symmetry")
{
  auto a2 = RootSystem::build(LieType::A, 2);
  const Weight zero({0, 0});
  CHECK(a2.inner_product(zero, Weight({3, 5})) == 0);

  // By hand: B = [[2,-1],[-1,2]], B^{-1} = 1/3 [[2,1],[1,2]], so
  // <w1,w1> = 2/3 and <a1,a1> = 2 (long root).
  CHECK(a2.inner_product(Weight({1, 0}), Weight({1, 0})) == Rational(2, 3));
  const Weight alpha1({2, -1});
  CHECK(a2.inner_product(alpha1, alpha1) == 2);
  CHECK(a2.inner_product(Weight({1, 0}), Weight({1, 0})) /
            a2.inner_product(alpha1, alpha1) ==
        Rational(1, 3));

  std::mt19937_64 rng(7);
  for (const auto& [type, ranks] : type_ranks()) {
    auto rs = RootSystem::build(type, ranks.front());
    std::uniform_int_distribution<int> dist(0, 6);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<int> a(rs.rank()), b(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) {
        a[i] = dist(rng);
        b[i] = dist(rng);
      }
      CHECK(rs.inner_product(Weight(a), Weight(b)) == rs.inner_product(Weight(b), Weight(a)));
    }
  }

  CHECK_THROWS_AS(a2.inner_product(Weight({1, 0, 0}), Weight({1, 0})), std::invalid_argument);
}

TEST_CASE("casimir normalization, positivity, monotonicity")
{
  for (const auto& [type, ranks] : type_ranks()) {
    for (int r : ranks) {
      auto rs = RootSystem::build(type, r);
      CHECK(rs.casimir(Weight(std::vector<int>(r, 0))) == 0);
      CHECK(rs.casimir(rs.highest_root()) == 1);
      for (const Weight& w : dominant_weights_up_to(r, 3)) {
        CHECK(rs.inner_product(w, w) > 0);
        const Rational c = rs.casimir(w);
        CHECK(c > 0);
        // bumping any single coefficient strictly increases the eigenvalue
        for (int i = 0; i < r; ++i) {
          Weight up = w;
          up.coeffs[i] += 1;
          CHECK(rs.casimir(up) > c);
        }
      }
    }
  }

  auto a2 = RootSystem::build(LieType::A, 2);
  CHECK_THROWS_AS(a2.casimir(Weight({-1, 2})), std::invalid_argument);
}

TEST_CASE("casimir agrees with the orthogonal-coordinate oracle on classical types")
{
  for (const auto& [type, ranks] : type_ranks()) {
    if (type != LieType::A && type != LieType::B && type != LieType::C &&
        type != LieType::D)
      continue;
    for (int r : ranks) {
      auto rs = RootSystem::build(type, r);
      auto oracle = make_oracle(type, r);
      for (const Weight& w : dominant_weights_up_to(r, 2))
        CHECK(rs.casimir_raw(w) == oracle.casimir_raw(w));
    }
  }
}

TEST_CASE("hand-checked casimir values")
{
  for (int n = 1; n <= 8; ++n) {
    auto rs = RootSystem::build(LieType::A, n);
    std::vector<int> w(n, 0);
    w[0] = 1;
    CHECK(rs.casimir(Weight(w)) == Rational(n * (n + 2), 2 * (n + 1) * (n + 1)));
  }
  auto b3 = RootSystem::build(LieType::B, 3);
  CHECK(b3.casimir(Weight({0, 0, 1})) == Rational(21, 40));  // spinor
  CHECK(b3.casimir(Weight({1, 0, 0})) == Rational(3, 5));    // vector
}

TEST_CASE("minimal nontrivial casimir")
{
  auto a2 = RootSystem::build(LieType::A, 2);
  auto [w_a2, c_a2] = a2.min_nontrivial_casimir();
  CHECK(w_a2 == Weight({1, 0}));  // tie with (0,1) resolved to the first fundamental
  CHECK(c_a2 == Rational(4, 9));

  auto b3 = RootSystem::build(LieType::B, 3);
  auto [w_b3, c_b3] = b3.min_nontrivial_casimir();
  CHECK(w_b3 == Weight({0, 0, 1}));
  CHECK(c_b3 == Rational(21, 40));

  auto c3 = RootSystem::build(LieType::C, 3);
  auto [w_c3, c_c3] = c3.min_nontrivial_casimir();
  CHECK(w_c3 == Weight({1, 0, 0}));
  CHECK(c_c3 == Rational(7, 16));
  CHECK(4 * c_c3 == Rational(7, 4));  // (2n+1)/(n+1) at n = 3

  CHECK_THROWS_AS(a2.min_nontrivial_casimir(1), std::invalid_argument);

  // the minimum has stabilized by coefficient sum 2
  for (const auto& [type, ranks] : type_ranks()) {
    for (int r : ranks) {
      auto rs = RootSystem::build(type, r);
      auto base = rs.min_nontrivial_casimir(2);
      for (int bound = 3; bound <= 4; ++bound) {
        auto again = rs.min_nontrivial_casimir(bound);
        CHECK(again.second == base.second);
        CHECK(again.first == base.first);
      }
    }
  }
}

TEST_CASE("weyl dimension formula")
{
  auto a2 = RootSystem::build(LieType::A, 2);
  CHECK(a2.weyl_dim(Weight({1, 0})) == 3);
  CHECK(a2.weyl_dim(Weight({0, 0})) == 1);
  CHECK(a2.weyl_dim(a2.highest_root()) == 8);

  auto b3 = RootSystem::build(LieType::B, 3);
  CHECK(b3.weyl_dim(Weight({0, 0, 1})) == 8);

  // adjoint and defining dimensions across all types
  std::map<std::string, Integer> adjoint = {
      {"A4", 24}, {"B5", 55}, {"C3", 21}, {"D4", 28}, {"E6", 78},
      {"E7", 133}, {"E8", 248}, {"F4", 52}, {"G2", 14},
  };
  std::vector<std::pair<LieType, int>> list = {
      {LieType::A, 4}, {LieType::B, 5}, {LieType::C, 3},
      {LieType::D, 4}, {LieType::E6, 6}, {LieType::E7, 7},
      {LieType::E8, 8}, {LieType::F4, 4}, {LieType::G2, 2}};
  for (auto [t, r] : list) {
    auto rs = RootSystem::build(t, r);
    CHECK(rs.weyl_dim(rs.highest_root()) == adjoint.at(rs.name()));
  }

  auto e6 = RootSystem::build(LieType::E6, 6);
  CHECK(e6.weyl_dim(Weight({1, 0, 0, 0, 0, 0})) == 27);
  auto e7 = RootSystem::build(LieType::E7, 7);
  CHECK(e7.weyl_dim(Weight({0, 0, 0, 0, 0, 0, 1})) == 56);
  auto f4 = RootSystem::build(LieType::F4, 4);
  CHECK(f4.weyl_dim(Weight({0, 0, 0, 1})) == 26);
  auto e8 = RootSystem::build(LieType::E8, 8);
  CHECK(e8.weyl_dim(Weight({0, 0, 0, 0, 0, 0, 0, 2})) == 27000);
}

TEST_CASE("positive root counts")
{
  auto count = [](LieType t, int r) {
    return RootSystem::build(t, r).positive_roots().size();
  };
  CHECK(count(LieType::A, 4) == 10);
  CHECK(count(LieType::B, 5) == 25);
  CHECK(count(LieType::C, 3) == 9);
  CHECK(count(LieType::D, 4) == 12);
  CHECK(count(LieType::G2, 2) == 6);
  CHECK(count(LieType::F4, 4) == 24);
  CHECK(count(LieType::E6, 6) == 36);
  CHECK(count(LieType::E7, 7) == 63);
  CHECK(count(LieType::E8, 8) == 120);
}

TEST_CASE("rational formatting round trip")
{
  CHECK(to_fraction_string(Rational(21, 40)) == "21/40");
  CHECK(to_fraction_string(Rational(4)) == "4");
  CHECK(parse_fraction("21/40") == Rational(21, 40));
  CHECK(parse_fraction("-3/9") == Rational(-1, 3));
  CHECK(parse_fraction("7") == 7);
  CHECK_THROWS_AS(parse_fraction("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
}
