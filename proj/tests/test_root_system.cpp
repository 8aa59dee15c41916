#include <doctest.h>

#include <algorithm>

#include "borbits/root_system.hpp"

using namespace borbits;

namespace {

Coords vec(std::initializer_list<int> v) { return Coords(v); }

std::vector<Coords> coord_set(const RootSystem& rs, const std::vector<RootId>& ids) {
  std::vector<Coords> out;
  for (RootId r : ids) out.push_back(rs.coords(r));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("C2 positive roots match the realization") {
  RootSystem rs = RootSystem::build(Type::C, 2);
  std::vector<Coords> want{{1, -1}, {0, 2}, {1, 1}, {2, 0}};
  std::sort(want.begin(), want.end());
  CHECK(coord_set(rs, rs.positives()) == want);
  CHECK(rs.is_short(rs.root_of(vec({1, 1}))));
  CHECK(rs.is_long(rs.root_of(vec({2, 0}))));
}

TEST_CASE("A1 has a single positive root") {
  RootSystem rs = RootSystem::build(Type::A, 1);
  CHECK(rs.num_roots() == 2);
  CHECK(rs.coords(rs.positives()[0]) == vec({1, -1}));
  CHECK(rs.is_long(rs.positives()[0]));
}

TEST_CASE("positive root counts by closure") {
  CHECK(RootSystem::build(Type::E7, 7).positives().size() == 63);
  CHECK(RootSystem::build(Type::E6, 6).positives().size() == 36);
  CHECK(RootSystem::build(Type::D, 4).positives().size() == 12);
  CHECK(RootSystem::build(Type::B, 3).positives().size() == 9);
  CHECK(RootSystem::build(Type::A, 4).positives().size() == 10);
}

TEST_CASE("unsupported systems are rejected") {
  CHECK_THROWS_AS(parse_type("G2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type("F4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type("E8"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(Type::C, 1), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(Type::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(Type::E6, 7), std::invalid_argument);
}

TEST_CASE("cominuscule simple roots per type") {
  auto indices = [](const RootSystem& rs) {
    std::vector<int> out;
    auto com = cominuscule_simple_roots(rs);
    for (int i = 0; i < rs.rank(); ++i)
      if (std::find(com.begin(), com.end(), rs.simples()[i]) != com.end()) out.push_back(i + 1);
    return out;
  };
  CHECK(indices(RootSystem::build(Type::B, 4)) == std::vector<int>{1});
  CHECK(indices(RootSystem::build(Type::C, 4)) == std::vector<int>{4});
  CHECK(indices(RootSystem::build(Type::A, 3)) == std::vector<int>{1, 2, 3});
  CHECK(indices(RootSystem::build(Type::D, 5)) == std::vector<int>{1, 4, 5});
  CHECK(indices(RootSystem::build(Type::E6, 6)) == std::vector<int>{1, 6});
  CHECK(indices(RootSystem::build(Type::E7, 7)) == std::vector<int>{7});
}

TEST_CASE("cominuscule data for B and C") {
  RootSystem b = RootSystem::build(Type::B, 3);
  CominusculeData cdb = build_cominuscule_data(b, b.root_of(vec({1, -1, 0})));
  std::vector<Coords> want{{1, -1, 0}, {1, 1, 0}, {1, 0, -1}, {1, 0, 1}, {1, 0, 0}};
  std::sort(want.begin(), want.end());
  CHECK(coord_set(b, cdb.psi) == want);

  RootSystem c = RootSystem::build(Type::C, 3);
  CominusculeData cdc = build_cominuscule_data(c, c.root_of(vec({0, 0, 2})));
  std::vector<Coords> wantc{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
  std::sort(wantc.begin(), wantc.end());
  CHECK(coord_set(c, cdc.psi) == wantc);
  CHECK(cdc.phi_p_pos.size() == 3);  // type A_2 Levi

  RootSystem a = RootSystem::build(Type::A, 3);
  CominusculeData cda = build_cominuscule_data(a, a.simples()[1]);
  CHECK(cda.psi.size() == 4);

  CHECK_THROWS_AS(build_cominuscule_data(b, b.simples()[1]), std::invalid_argument);
}

TEST_CASE("pairing and coefficient") {
  RootSystem c = RootSystem::build(Type::C, 3);
  RootId theta = c.highest_root();
  CHECK(c.coords(theta) == vec({2, 0, 0}));
  CHECK(c.pairing(c.root_of(vec({1, 1, 0})), c.root_of(vec({2, 0, 0}))) == 1);
  CHECK(c.coefficient(theta, 2) == 1);   // alpha_P = alpha_n
  CHECK(c.coefficient(theta, 0) == 2);
  for (RootId r : c.positives()) CHECK(c.pairing(r, r) == 2);
  CHECK_THROWS_AS(c.root_of(vec({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("root order in C5") {
  RootSystem c = RootSystem::build(Type::C, 5);
  RootId a = c.root_of(vec({0, 1, 0, 1, 0}));  // e2+e4
  RootId b = c.root_of(vec({0, 2, 0, 0, 0}));  // 2e2
  CHECK(c.root_leq(a, b));
  CHECK(!c.root_leq(b, a));
  CHECK(c.root_leq(a, a));
  RootId x = c.root_of(vec({1, 0, 0, 0, 1}));  // e1+e5
  CHECK(!c.root_leq(x, a));
  CHECK(!c.root_leq(a, x));
}

TEST_CASE("suc on Psi of C5") {
  RootSystem c = RootSystem::build(Type::C, 5);
  CominusculeData cd = build_cominuscule_data(c, c.root_of(vec({0, 0, 0, 0, 2})));
  CHECK(c.coords(suc(cd, c.root_of(vec({0, 1, 0, 1, 0})))) == vec({0, 2, 0, 0, 0}));
  CHECK(c.coords(suc(cd, c.root_of(vec({1, 0, 0, 0, 1})))) == vec({2, 0, 0, 0, 0}));
  RootId long_root = c.root_of(vec({0, 0, 2, 0, 0}));
  CHECK(suc(cd, long_root) == long_root);
  CHECK_THROWS_AS(suc(cd, c.root_of(vec({1, -1, 0, 0, 0}))), std::invalid_argument);
}

TEST_CASE("orthogonality predicates") {
  RootSystem c = RootSystem::build(Type::C, 3);
  RootId a = c.root_of(vec({2, 0, 0})), b = c.root_of(vec({0, 2, 0}));
  CHECK(is_orthogonal_set(c, {a, b}));
  CHECK(is_strongly_orthogonal_set(c, {a, b}));
  CHECK(is_orthogonal_set(c, {}));
  CHECK(is_strongly_orthogonal_set(c, {}));
  CHECK(!is_orthogonal_set(c, {c.root_of(vec({1, 1, 0})), a}));

  // orthogonal but not strongly orthogonal: e1-e2 and e1+e2 sum to 2e1
  CHECK(is_orthogonal_set(c, {c.root_of(vec({1, -1, 0})), c.root_of(vec({1, 1, 0}))}));
  CHECK(!is_strongly_orthogonal_set(c, {c.root_of(vec({1, -1, 0})), c.root_of(vec({1, 1, 0}))}));
}

TEST_CASE("type B Psi is a chain with orthogonal partners") {
  RootSystem b = RootSystem::build(Type::B, 4);
  CominusculeData cd = build_cominuscule_data(b, b.simples()[0]);
  for (RootId x : cd.psi)
    for (RootId y : cd.psi) CHECK((b.root_leq(x, y) || b.root_leq(y, x)));
  // each long root of Psi has exactly one orthogonal partner there
  for (RootId x : cd.psi) {
    int perp = 0;
    for (RootId y : cd.psi)
      if (x != y && b.dot(x, y) == 0) ++perp;
    CHECK(perp == (b.is_long(x) ? 1 : 0));
  }
}
