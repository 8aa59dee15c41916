// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Everything asserted here is exact; the checks are either
// direct desk-scale counts or agreements between independent routes.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <iostream>
#include <map>
#include <set>

#include "borbits/text_io.hpp"
#include "borbits/verify.hpp"

using namespace borbits;

namespace {

struct Gate {
  int failures = 0;
  std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();
  void criterion(int number, const std::string& what, bool pass, const std::string& detail = "") {
    auto now = std::chrono::steady_clock::now();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - mark).count();
    mark = now;
    std::cout << "[criterion " << number << "] " << (pass ? "PASS" : "FAIL") << " — " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << " [" << ms << " ms]" << std::endl;
    if (!pass) ++failures;
  }
};

struct Systems {
  std::deque<RootSystem> owned;
  const RootSystem& build(Type t, int n) {
    owned.push_back(RootSystem::build(t, n));
    return owned.back();
  }
  CominusculeData cd(Type t, int n, int alpha_index) {
    const RootSystem& rs = build(t, n);
    return build_cominuscule_data(rs, rs.simples()[alpha_index]);
  }
};

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<int> cominuscule_indices(const RootSystem& rs) {
  std::vector<int> out;
  auto com = cominuscule_simple_roots(rs);
  for (int i = 0; i < rs.rank(); ++i)
    if (std::find(com.begin(), com.end(), rs.simples()[i]) != com.end()) out.push_back(i + 1);
  return out;
}

// 1. Cominuscule detection and the Psi displays for B and C.
void criterion1(Gate& gate, Systems& sys) {
  bool ok = true;
  for (int n = 2; n <= 6; ++n) ok = ok && cominuscule_indices(sys.build(Type::B, n)) == std::vector<int>{1};
  for (int n = 2; n <= 6; ++n)
    ok = ok && cominuscule_indices(sys.build(Type::C, n)) == std::vector<int>{n};
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    ok = ok && cominuscule_indices(sys.build(Type::A, n)) == all;
  }
  for (int n = 4; n <= 6; ++n)
    ok = ok && cominuscule_indices(sys.build(Type::D, n)) == std::vector<int>{1, n - 1, n};
  ok = ok && cominuscule_indices(sys.build(Type::E6, 6)) == std::vector<int>{1, 6};
  ok = ok && cominuscule_indices(sys.build(Type::E7, 7)) == std::vector<int>{7};

  for (int n = 2; n <= 6; ++n) {
    const RootSystem& b = sys.build(Type::B, n);
    CominusculeData cd = build_cominuscule_data(b, b.simples()[0]);
    std::set<Coords> want;
    for (int i = 2; i <= n; ++i) {
      Coords p(n, 0), m(n, 0);
      p[0] = m[0] = 1;
      p[i - 1] = 1;
      m[i - 1] = -1;
      want.insert(p);
      want.insert(m);
    }
    Coords e1(n, 0);
    e1[0] = 1;
    want.insert(e1);
    std::set<Coords> got;
    for (RootId r : cd.psi) got.insert(b.coords(r));
    ok = ok && got == want;

    const RootSystem& c = sys.build(Type::C, n);
    CominusculeData cdc = build_cominuscule_data(c, c.simples()[n - 1]);
    std::set<Coords> wantc;
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        Coords x(n, 0);
        x[i - 1] += 1;
        x[j - 1] += 1;
        wantc.insert(x);
      }
    std::set<Coords> gotc;
    for (RootId r : cdc.psi) gotc.insert(c.coords(r));
    ok = ok && gotc == wantc;
  }
  gate.criterion(1, "cominuscule detection and Psi displays", ok,
                 "A,B,C,D ranks to 6, E6, E7");
}

// 2. Sizes of W^P.
void criterion2(Gate& gate, Systems& sys) {
  bool ok = true;
  for (int p = 1; p <= 3; ++p)
    for (int q = p; p + q <= 6; ++q) {
      CominusculeData cd = sys.cd(Type::A, p + q - 1, p - 1);
      ok = ok && static_cast<long long>(enumerate_wp(cd).size()) == binomial(p + q, p);
    }
  for (int n = 2; n <= 5; ++n)
    ok = ok && enumerate_wp(sys.cd(Type::B, n, 0)).size() == static_cast<size_t>(2 * n);
  for (int n = 2; n <= 6; ++n)
    ok = ok && enumerate_wp(sys.cd(Type::C, n, n - 1)).size() == (1u << n);
  ok = ok && enumerate_wp(sys.cd(Type::E6, 6, 0)).size() == 27;
  ok = ok && enumerate_wp(sys.cd(Type::E7, 7, 6)).size() == 56;
  gate.criterion(2, "sizes of W^P", ok, "binomials, 2n, 2^n, 27, 56");
}

// 3. Recursive Bruhat comparison equals the subword oracle.
void criterion3(Gate& gate, Systems& sys) {
  bool ok = true;
  std::string detail;
  for (auto [t, n] : {std::pair{Type::A, 3}, {Type::B, 3}}) {
    const RootSystem& rs = sys.build(t, n);
    auto all = all_elements(rs);
    long long pairs = 0;
    for (const WeylElement& w : all) {
      std::set<WeylElement> lower = subword_lower_set(rs, w);
      for (const WeylElement& u : all) {
        ++pairs;
        ok = ok && bruhat_leq(rs, u, w) == (lower.count(u) > 0);
      }
    }
    detail += system_label(t, n) + ":" + std::to_string(pairs) + " ";
  }
  gate.criterion(3, "Bruhat order equals the subword oracle", ok, detail + "ordered pairs");
}

// 4. The reference completion in C5.
void criterion4(Gate& gate, Systems& sys) {
  CominusculeData cd = sys.cd(Type::C, 5, 4);
  const RootSystem& rs = cd.system();
  auto rid = [&](int i, int j) {
    Coords c(5, 0);
    c[i - 1] += 1;
    c[j - 1] += 1;
    return rs.root_of(c);
  };
  std::vector<RootId> start{rid(1, 5), rid(2, 4), rid(2, 2)};
  std::sort(start.begin(), start.end());
  TypeCSet t = typec_admissible(cd, omega_p(cd), start);
  TypeCSet bar = typec_completion(cd, t);
  std::vector<RootId> want{rid(1, 5), rid(1, 1), rid(2, 4), rid(2, 2)};
  std::sort(want.begin(), want.end());
  std::vector<RootId> want_x{rid(1, 5), rid(2, 4)}, want_z{rid(1, 1), rid(2, 2)};
  std::sort(want_x.begin(), want_x.end());
  std::sort(want_z.begin(), want_z.end());
  bool ok = bar.s == want && bar.x_part == want_x && bar.z_part == want_z;
  std::map<RootId, RootId> pad(bar.pad.begin(), bar.pad.end());
  ok = ok && pad[rid(1, 1)] == rid(1, 5) && pad[rid(2, 2)] == rid(2, 4);
  gate.criterion(4, "completion of {e1+e5, e2+e4, 2e2} in C5", ok,
                 "adds 2e1; X/Z/pad as displayed");
}

// 5. Completion laws over C3 (all v) and C4 (omega).
void criterion5(Gate& gate, Systems& sys) {
  bool ok = true;
  long long sets = 0;
  auto run = [&](const CominusculeData& cd, const WeylElement& v) {
    for (const TypeCSet& t : typec_enumerate_admissible(cd, v)) {
      ++sets;
      TypeCSet bar = typec_completion(cd, t);
      ok = ok && std::includes(bar.s.begin(), bar.s.end(), t.s.begin(), t.s.end());
      ok = ok && typec_try_admissible(cd, v, bar.s).has_value();
      ok = ok && typec_completion(cd, bar) == bar;
      ok = ok && typec_is_full_admissible(cd, v, t.s) == (bar == t);
    }
  };
  CominusculeData c3 = sys.cd(Type::C, 3, 2);
  for (const WeylElement& v : enumerate_wp(c3)) run(c3, v);
  CominusculeData c4 = sys.cd(Type::C, 4, 3);
  run(c4, omega_p(c4));
  gate.criterion(5, "completion laws (subset, admissible, idempotent, fixpoint)", ok,
                 std::to_string(sets) + " admissible sets");
}

// 6. Orbit counts at C2 and the rook count at A3.
void criterion6(Gate& gate, Systems& sys) {
  CominusculeData c2 = sys.cd(Type::C, 2, 1);
  size_t fa = typec_enumerate_full_admissible(c2, omega_p(c2)).size();
  size_t orth = enumerate_orthogonal_subsets(c2, omega_p(c2)).size();
  CominusculeData a3 = sys.cd(Type::A, 3, 1);
  size_t rook = enumerate_orthogonal_subsets(a3, omega_p(a3)).size();
  long long rook_identity = 0;
  for (int k = 0; k <= 2; ++k) {
    long long perm = 1;
    for (int i = 1; i <= k; ++i) perm *= i;
    rook_identity += binomial(2, k) * binomial(2, k) * perm;
  }
  bool ok = fa == 6 && orth == 5 && rook == 7 && rook_identity == 7;
  gate.criterion(6, "orbit counts: C2 6 vs 5, A3 rook count 7", ok,
                 "full=" + std::to_string(fa) + " orth=" + std::to_string(orth) +
                     " rook=" + std::to_string(rook));
}

// 7. Dimension reconciliations.
void criterion7(Gate& gate, Systems& sys) {
  bool ok = true;
  long long pairs = 0;
  std::vector<CominusculeData> cds;
  for (int k = 0; k < 3; ++k) cds.push_back(sys.cd(Type::A, 3, k));
  cds.push_back(sys.cd(Type::B, 3, 0));
  cds.push_back(sys.cd(Type::C, 3, 2));
  cds.push_back(sys.cd(Type::D, 4, 0));
  for (const auto& cd : cds)
    for (const WeylElement& v : enumerate_wp(cd))
      for (const auto& s : enumerate_orthogonal_subsets(cd, v)) {
        ++pairs;
        ok = ok && static_cast<int>(y_char_ne2(cd, v, s).members.size()) ==
                       inv_length(sigma_of_image(cd, v, s));
      }

  long long params = 0;
  auto run = [&](const CominusculeData& cd, const WeylElement& v) {
    int psi = static_cast<int>(cd.psi.size());
    for (const TypeCSet& t : typec_enumerate_full_admissible(cd, v)) {
      ++params;
      ok = ok && dim_typec(cd, t) == psi + static_cast<int>(y_typec(cd, t).members.size());
    }
  };
  CominusculeData c3 = sys.cd(Type::C, 3, 2);
  for (const WeylElement& v : enumerate_wp(c3)) run(c3, v);
  CominusculeData c4 = sys.cd(Type::C, 4, 3);
  run(c4, omega_p(c4));
  gate.criterion(7, "dimension reconciliations", ok,
                 std::to_string(pairs) + " orthogonal pairs, " + std::to_string(params) +
                     " full admissible");
}

// 8. Involution laws.
void criterion8(Gate& gate, Systems& sys) {
  bool ok = true;
  long long checked = 0;
  for (auto [t, n] : {std::pair{Type::A, 3}, {Type::B, 3}, {Type::C, 3}}) {
    const RootSystem& rs = sys.build(t, n);
    for (const Involution& s : involutions_of(rs))
      for (int i = 0; i < rs.rank(); ++i) {
        ++checked;
        Involution c = circ(rs, i, s);
        bool up = bruhat_leq(rs, s.w, c.w);
        bool down = bruhat_leq(rs, c.w, s.w);
        ok = ok && (up || down);
        ok = ok && inv_length(c) == inv_length(s) + (up ? 1 : -1);
        bool splus = length(rs, compose(simple_reflection(rs, i), s.w)) > s.l;
        ok = ok && up == splus;
      }
  }
  // injectivity of sigma on strongly orthogonal subsets of Psi
  for (auto [t, n, k] : {std::tuple{Type::A, 3, 1}, {Type::B, 3, 0}, {Type::C, 3, 2}}) {
    CominusculeData cd = sys.cd(t, n, k);
    const RootSystem& rs = cd.system();
    std::map<WeylElement, std::vector<RootId>> seen;
    for (const auto& s : enumerate_orthogonal_subsets(cd, omega_p(cd))) {
      if (!is_strongly_orthogonal_set(rs, s)) continue;
      Involution sig = sigma_from_set(rs, s);
      ok = ok && sig.lambda == static_cast<int>(s.size());
      auto [it, fresh] = seen.emplace(sig.w, s);
      ok = ok && (fresh || it->second == s);
    }
  }
  gate.criterion(8, "involution laws (length step, comparability, injectivity)", ok,
                 std::to_string(checked) + " (sigma, alpha) pairs");
}

// 9. Order laws at A3 (both alpha_P up to symmetry) and D4.
void criterion9(Gate& gate, Systems& sys) {
  bool ok = true;
  std::string detail;
  for (auto [t, n, k] : {std::tuple{Type::A, 3, 0}, {Type::A, 3, 1}, {Type::D, 4, 0}}) {
    CominusculeData cd = sys.cd(t, n, k);
    const RootSystem& rs = cd.system();
    auto pairs = enumerate_admissible_pairs(cd);
    int m = static_cast<int>(pairs.size());
    detail += system_label(t, n) + "/a" + std::to_string(k + 1) + ":" + std::to_string(m) + " ";
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
    std::vector<int> dims(m);
    for (int i = 0; i < m; ++i) dims[i] = dim_simply_laced(cd, pairs[i]);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) leq[i][j] = pair_leq(cd, pairs[i], pairs[j]);
    std::vector<std::vector<int>> mtab(m, std::vector<int>(rs.rank(), -1));
    for (int i = 0; i < m; ++i)
      for (int a = 0; a < rs.rank(); ++a) {
        AdmissiblePair q = m_alpha(cd, a, pairs[i]);
        for (int j = 0; j < m; ++j)
          if (pairs[j] == q) mtab[i][a] = j;
        ok = ok && mtab[i][a] >= 0;
      }
    for (int i = 0; i < m; ++i) {
      ok = ok && leq[i][i];
      for (int j = 0; j < m; ++j) {
        if (i != j && leq[i][j]) ok = ok && !leq[j][i] && dims[i] < dims[j];
        for (int k2 = 0; k2 < m; ++k2)
          if (leq[i][j] && leq[j][k2]) ok = ok && leq[i][k2];
      }
    }
    for (int i = 0; i < m; ++i)
      for (int a = 0; a < rs.rank(); ++a) {
        ok = ok && leq[i][mtab[i][a]];
        for (int j = 0; j < m; ++j)
          if (leq[i][j]) ok = ok && leq[mtab[i][a]][mtab[j][a]];
        if (mtab[i][a] == i) continue;
        for (int y = 0; y < m; ++y) {
          bool lhs = leq[y][mtab[i][a]];
          bool rhs = leq[y][i];
          for (int z = 0; !rhs && z < m; ++z) rhs = mtab[z][a] == mtab[y][a] && leq[z][i];
          ok = ok && lhs == rhs;
        }
      }
  }
  gate.criterion(9, "order laws (partial order, dimension, action, one-step)", ok, detail);
}

// 10. Byte determinism of the command line output.
void criterion10(Gate& gate) {
  const char* cli = std::getenv("BORBITS_CLI");
  if (!cli) {
    gate.criterion(10, "byte determinism of enumerate/poset output", false,
                   "BORBITS_CLI not set");
    return;
  }
  auto capture = [&](const std::string& args) {
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    std::string out;
    if (FILE* p = popen(cmd.c_str(), "r")) {
      std::array<char, 4096> buf;
      size_t n;
      while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
      pclose(p);
    }
    return out;
  };
  bool ok = true;
  for (const std::string& args :
       {std::string("enumerate --type C --rank 3 --v all --format json"),
        std::string("poset --type A --rank 3 --alpha-p 2 --format dot"),
        std::string("dims --type B --rank 3 --format json"),
        std::string("enumerate --type D --rank 4 --alpha-p 1 --format text")}) {
    std::string a = capture(args);
    std::string b = capture(args);
    ok = ok && !a.empty() && a == b;
  }
  gate.criterion(10, "byte determinism of enumerate/poset output", ok, "4 commands, two runs each");
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  Gate gate;
  Systems sys;
  criterion1(gate, sys);
  criterion2(gate, sys);
  criterion3(gate, sys);
  criterion4(gate, sys);
  criterion5(gate, sys);
  criterion6(gate, sys);
  criterion7(gate, sys);
  criterion8(gate, sys);
  criterion9(gate, sys);
  criterion10(gate);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << (gate.failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << gate.failures << " failing criteria, " << ms << " ms)" << std::endl;
  return gate.failures == 0 ? 0 : 1;
}
