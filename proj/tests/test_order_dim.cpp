#include <doctest.h>

#include <algorithm>

#include "borbits/order_dim.hpp"

using namespace borbits;

namespace {

struct Fixture {
  RootSystem rs;
  CominusculeData cd;
  Fixture(Type t, int rank, int alpha_index)
      : rs(RootSystem::build(t, rank)), cd(build_cominuscule_data(rs, rs.simples()[alpha_index])) {}
};

}  // namespace

TEST_CASE("rank one: two incomparable closed orbits below the open one") {
  Fixture f(Type::A, 1, 0);
  auto pairs = enumerate_admissible_pairs(f.cd);
  REQUIRE(pairs.size() == 3);
  const AdmissiblePair& bottom_id = pairs[0];
  const AdmissiblePair& bottom_s = pairs[1];
  const AdmissiblePair& top = pairs[2];
  REQUIRE(bottom_id.v.is_identity());
  REQUIRE(top.s.size() == 1);

  CHECK(dim_simply_laced(f.cd, bottom_id) == 1);
  CHECK(dim_simply_laced(f.cd, bottom_s) == 1);
  CHECK(dim_simply_laced(f.cd, top) == 2);
  CHECK(!pair_leq(f.cd, bottom_id, bottom_s));
  CHECK(!pair_leq(f.cd, bottom_s, bottom_id));
  CHECK(pair_leq(f.cd, bottom_id, top));
  CHECK(pair_leq(f.cd, bottom_s, top));
  CHECK(!pair_leq(f.cd, top, bottom_s));

  // the action of the unique simple root
  CHECK(m_alpha(f.cd, 0, bottom_id) == top);
  CHECK(m_alpha(f.cd, 0, bottom_s) == top);
  CHECK(m_alpha(f.cd, 0, top) == top);
  auto fiber = m_alpha_fiber(f.cd, 0, top, pairs);
  REQUIRE(fiber.size() == 2);
  CHECK(fiber[0] == bottom_id);
  CHECK(fiber[1] == bottom_s);
  CHECK(m_alpha_fiber(f.cd, 0, bottom_id, pairs).empty());
}

TEST_CASE("dimension formula on A3") {
  Fixture f(Type::A, 3, 1);
  for (const WeylElement& v : enumerate_wp(f.cd))
    CHECK(dim_simply_laced(f.cd, {v, {}}) == 4);  // #Psi for every fiber base point

  WeylElement top = omega_p(f.cd);
  std::vector<RootId> inv = phi_plus_of(f.cd, top);
  // a maximal root of Phi+(omega) contributes exactly one
  RootId maximal = inv.back();
  for (RootId g : inv)
    if (f.rs.root_leq(maximal, g)) maximal = g;
  CHECK(dim_simply_laced(f.cd, {top, {maximal}}) == 5);
}

TEST_CASE("m_alpha matches the case analysis on small examples") {
  Fixture f(Type::A, 3, 1);
  auto pairs = enumerate_admissible_pairs(f.cd);
  for (const AdmissiblePair& p : pairs)
    for (int a = 0; a < f.rs.rank(); ++a) {
      AdmissiblePair q = m_alpha(f.cd, a, p);
      CHECK(pair_leq(f.cd, p, q));
      int dp = dim_simply_laced(f.cd, p), dq = dim_simply_laced(f.cd, q);
      CHECK(dq == (q == p ? dp : dp + 1));
      // fixed points are exactly the descending-sigma cases
      Involution sig = sigma_of_image(f.cd, p.v, p.s);
      if (sends_negative(f.rs, sig.w, f.rs.simples()[a])) CHECK(q == p);
    }
}

TEST_CASE("type C dimensions") {
  Fixture f(Type::C, 2, 1);
  WeylElement top = omega_p(f.cd);
  auto rid = [&](Coords c) { return f.rs.root_of(c); };

  TypeCSet both = typec_admissible(f.cd, top, {rid({2, 0}), rid({0, 2})});
  CHECK(dim_typec(f.cd, both) == 6);  // the open orbit

  TypeCSet empty = typec_admissible(f.cd, top, {});
  CHECK(dim_typec(f.cd, empty) == 3);

  std::vector<RootId> s{rid({1, 1}), rid({2, 0})};
  std::sort(s.begin(), s.end());
  TypeCSet mixed = typec_admissible(f.cd, top, s);
  CHECK(dim_typec(f.cd, mixed) == 5);
  YSet y = y_typec(f.cd, mixed);
  CHECK(y.members == mixed.s);

  // not full admissible: rejected by the dimension formula
  Fixture c5(Type::C, 5, 4);
  auto r5 = [&](int i, int j) {
    Coords c(5, 0);
    c[i - 1] += 1;
    c[j - 1] += 1;
    return c5.rs.root_of(c);
  };
  std::vector<RootId> a2{r5(1, 5), r5(2, 4), r5(2, 2)};
  std::sort(a2.begin(), a2.end());
  TypeCSet t = typec_admissible(c5.cd, omega_p(c5.cd), a2);
  CHECK_THROWS_AS(dim_typec(c5.cd, t), std::invalid_argument);
}

TEST_CASE("Y away from characteristic 2 matches the involution length") {
  Fixture f(Type::B, 2, 0);
  for (const WeylElement& v : enumerate_wp(f.cd))
    for (const auto& s : enumerate_orthogonal_subsets(f.cd, v)) {
      YSet y = y_char_ne2(f.cd, v, s);
      CHECK(static_cast<int>(y.members.size()) == inv_length(sigma_of_image(f.cd, v, s)));
      for (RootId b : s) CHECK(std::binary_search(y.members.begin(), y.members.end(), b));
    }
  CHECK(y_char_ne2(f.cd, WeylElement::identity(2), {}).members.empty());
}

TEST_CASE("type B dimension table at rank 2, frozen by hand") {
  Fixture f(Type::B, 2, 0);
  const RootSystem& rs = f.rs;
  WeylElement top = omega_p(f.cd);
  RootId lo = rs.root_of({1, -1}), a0 = rs.root_of({1, 0}), hi = rs.root_of({1, 1});
  auto dim_of = [&](std::vector<RootId> s, bool special) {
    std::sort(s.begin(), s.end());
    return dim_typeb(f.cd, TypeBParam{top, s, special});
  };
  CHECK(dim_of({}, false) == 3);
  CHECK(dim_of({lo}, false) == 5);
  CHECK(dim_of({a0}, false) == 4);  // 3 + L(s_{v(a0)}) - #{a > a0} = 3 + 2 - 1
  CHECK(dim_of({hi}, false) == 4);
  CHECK(dim_of({lo, hi}, false) == 6);
  CHECK(dim_of({a0, hi}, true) == 5);
  CHECK_THROWS_AS(dim_of({lo, a0}, false), std::invalid_argument);

  DimTable table = typeb_dim_table(f.cd, enumerate_wp(f.cd));
  CHECK(table.params.size() == 12);
  CHECK(std::is_sorted(table.dims.begin(), table.dims.end()));
  CHECK(table.dims.front() == 3);
  CHECK(table.dims.back() == 6);
}

TEST_CASE("poset construction on A3") {
  Fixture f(Type::A, 3, 1);
  OrbitPoset poset = build_poset(f.cd);
  CHECK(poset.params.size() == enumerate_admissible_pairs(f.cd).size());
  CHECK(!poset.conjectural);
  for (auto& [i, j] : poset.covers) {
    CHECK(poset.leq[i][j]);
    CHECK(poset.dims[j] == poset.dims[i] + 1);
  }
  for (size_t i = 0; i < poset.params.size(); ++i)
    for (size_t j = 0; j < poset.params.size(); ++j)
      if (i != j && poset.leq[i][j]) CHECK(poset.dims[i] < poset.dims[j]);
}

TEST_CASE("conjectural poset for type C is flagged") {
  Fixture f(Type::C, 2, 1);
  OrbitPoset poset = build_conjectural_poset(f.cd);
  CHECK(poset.conjectural);
  CHECK(poset.params.size() == 12);  // sum over the four coset representatives
  for (auto& [i, j] : poset.covers) CHECK(poset.leq[i][j]);
}
