#include <doctest.h>

#include <algorithm>

#include "borbits/text_io.hpp"

using namespace borbits;

namespace {

struct Fixture {
  RootSystem rs;
  CominusculeData cd;
  Fixture(Type t, int rank, int alpha_index)
      : rs(RootSystem::build(t, rank)), cd(build_cominuscule_data(rs, rs.simples()[alpha_index])) {}
};

}  // namespace

TEST_CASE("root text round trip") {
  for (auto [t, n, k] : {std::tuple{Type::A, 3, 1}, {Type::B, 3, 0}, {Type::C, 3, 2},
                         {Type::D, 4, 0}, {Type::E6, 6, 0}}) {
    Fixture f(t, n, k);
    for (RootId r = 0; r < f.rs.num_roots(); ++r)
      CHECK(parse_root(f.rs, root_to_text(f.rs, r)) == r);
  }
  Fixture c(Type::C, 3, 2);
  CHECK(root_to_text(c.rs, c.rs.root_of({2, 0, 0})) == "1+1");
  CHECK(parse_root(c.rs, "1+1") == c.rs.root_of({2, 0, 0}));
  CHECK(parse_root(c.rs, "1-2") == c.rs.root_of({1, -1, 0}));
  Fixture b(Type::B, 3, 0);
  CHECK(parse_root(b.rs, "1") == b.rs.root_of({1, 0, 0}));
  CHECK(root_to_text(b.rs, b.rs.root_of({1, 0, 0})) == "1");
  CHECK_THROWS_AS(parse_root(c.rs, "1+9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root(c.rs, "nonsense"), std::invalid_argument);
  CHECK(parse_root_set(c.rs, "{1+2, 1+1}") ==
        parse_root_set(c.rs, "1+1,1+2"));
  CHECK(parse_root_set(c.rs, "").empty());
}

TEST_CASE("word text round trip") {
  CHECK(word_to_text({}) == "e");
  CHECK(word_to_text({2, 1, 3}) == "2 1 3");
  CHECK(parse_word("2 1 3") == Word{2, 1, 3});
  CHECK(parse_word("2,1,3") == Word{2, 1, 3});
  CHECK(parse_word("e").empty());
}

TEST_CASE("parameter JSON round trips") {
  Fixture c2(Type::C, 2, 1);
  for (const WeylElement& v : enumerate_wp(c2.cd))
    for (const TypeCSet& t : typec_enumerate_full_admissible(c2.cd, v)) {
      OrbitParam p = to_orbit_param(t);
      OrbitParam q = param_from_json(c2.cd, param_to_json(c2.cd, p));
      CHECK(q == p);
      CHECK(q.x_part == p.x_part);
      CHECK(q.z_part == p.z_part);
      CHECK(q.pad == p.pad);
    }

  Fixture b2(Type::B, 2, 0);
  for (const WeylElement& v : enumerate_wp(b2.cd))
    for (const TypeBParam& t : typeb_enumerate(b2.cd, v)) {
      OrbitParam p = to_orbit_param(t);
      OrbitParam q = param_from_json(b2.cd, param_to_json(b2.cd, p));
      CHECK(q == p);
      CHECK(q.typeb_special == p.typeb_special);
    }

  Fixture a3(Type::A, 3, 1);
  auto pairs = enumerate_admissible_pairs(a3.cd);
  std::vector<OrbitParam> params;
  for (const AdmissiblePair& p : pairs) params.push_back(to_orbit_param(p));
  std::string listing = listing_to_json(a3.cd, "admissible-pairs", params);
  auto back = listing_from_json(a3.cd, listing);
  REQUIRE(back.size() == params.size());
  for (size_t i = 0; i < back.size(); ++i) CHECK(back[i] == params[i]);
  // emission is deterministic
  CHECK(listing == listing_to_json(a3.cd, "admissible-pairs", params));
}

TEST_CASE("poset JSON and DOT") {
  Fixture a3(Type::A, 3, 1);
  OrbitPoset poset = build_poset(a3.cd);
  OrbitPoset back = poset_from_json(a3.cd, poset_to_json(a3.cd, poset));
  CHECK(back.params.size() == poset.params.size());
  CHECK(back.leq == poset.leq);
  CHECK(back.covers == poset.covers);
  CHECK(back.dims == poset.dims);

  std::string dot = poset_to_dot(a3.cd, poset);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("v=e S={}") != std::string::npos);
  CHECK(dot.rfind("digraph orbits {", 0) == 0);
}

TEST_CASE("dimension table JSON carries the type B convention and round trips") {
  Fixture b2(Type::B, 2, 0);
  DimTable t = typeb_dim_table(b2.cd, enumerate_wp(b2.cd));
  std::string json = dim_table_to_json(b2.cd, t);
  CHECK(json.find("reflection-through-v(alpha0)") != std::string::npos);
  DimTable back = dim_table_from_json(b2.cd, json);
  CHECK(back.dims == t.dims);
  REQUIRE(back.params.size() == t.params.size());
  for (size_t i = 0; i < back.params.size(); ++i) CHECK(back.params[i] == t.params[i]);
}

TEST_CASE("diagram of the C5 reference set") {
  Fixture f(Type::C, 5, 4);
  std::vector<RootId> s = parse_root_set(f.rs, "1+5,1+1,2+4,2+2");
  std::string got = typec_diagram(f.cd, omega_p(f.cd), s, {});
  std::string want =
      "    5   4   3   2   1\n"
      "  +---+---+---+---+---+\n"
      "1 | X |   |   |   | Z |\n"
      "  +---+---+---+---+---+\n"
      "2 |   | X |   | Z |\n"
      "  +---+---+---+---+\n"
      "3 |   |   |   |\n"
      "  +---+---+---+\n"
      "4 |   |   |\n"
      "  +---+---+\n"
      "5 |   |\n"
      "  +---+\n";
  CHECK(got == want);
}

TEST_CASE("diagram corner cases") {
  Fixture f(Type::C, 2, 1);
  std::string empty = typec_diagram(f.cd, omega_p(f.cd), {}, {});
  CHECK(empty ==
        "    2   1\n"
        "  +---+---+\n"
        "1 |   |   |\n"
        "  +---+---+\n"
        "2 |   |\n"
        "  +---+\n");
  // a lone long root sits in X, on the diagonal cell of the first row
  std::string lone = typec_diagram(f.cd, omega_p(f.cd), {f.rs.root_of({2, 0})}, {});
  CHECK(lone.find("1 |   | X |") != std::string::npos);

  DiagramOptions shade;
  shade.shade = f.rs.root_of({1, 1});
  std::string shaded = typec_diagram(f.cd, omega_p(f.cd), {}, shade);
  CHECK(shaded.find("1 |   | o |") != std::string::npos);  // 2e1 above e1+e2
  CHECK(shaded.find("2 | . |") != std::string::npos);      // 2e2 below e1+e2

  CHECK_THROWS_AS(typec_diagram(f.cd, omega_p(f.cd), {f.rs.root_of({1, -1})}, {}),
                  std::invalid_argument);

  // non-admissible sets render with plain markers and a note
  std::vector<RootId> bad{f.rs.root_of({1, 1}), f.rs.root_of({0, 2})};
  std::sort(bad.begin(), bad.end());
  std::string plain = typec_diagram(f.cd, omega_p(f.cd), bad, {});
  CHECK(plain.find("*") != std::string::npos);
  CHECK(plain.find("not admissible") != std::string::npos);
}
