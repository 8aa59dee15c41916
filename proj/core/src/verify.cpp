#include "borbits/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>

#include "borbits/text_io.hpp"

#include "exact_rank.hpp"

namespace borbits {

namespace {

struct Reporter {
  std::vector<CheckResult>& out;
  std::string suite;

  void add(const std::string& name, bool pass, const std::string& detail, bool hard) {
    out.push_back(CheckResult{suite, name, hard, pass, detail});
  }
  void hard(const std::string& name, bool pass, const std::string& detail = "") {
    add(name, pass, detail, true);
  }
  void obs(const std::string& name, bool pass, const std::string& detail = "") {
    add(name, pass, detail, false);
  }
};

// Owns the root systems so CominusculeData pointers stay valid for the run.
struct Store {
  std::deque<RootSystem> systems;
  std::map<std::pair<Type, int>, const RootSystem*> built;

  const RootSystem& get(Type t, int rank) {
    auto key = std::make_pair(t, rank);
    auto it = built.find(key);
    if (it != built.end()) return *it->second;
    systems.push_back(RootSystem::build(t, rank));
    built[key] = &systems.back();
    return systems.back();
  }
  CominusculeData cd(Type t, int rank, int alpha_index) {
    const RootSystem& rs = get(t, rank);
    return build_cominuscule_data(rs, rs.simples()[alpha_index]);
  }
};

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool linearly_independent(const RootSystem& rs, const std::vector<RootId>& s) {
  if (s.empty()) return true;
  std::vector<std::vector<std::int64_t>> m;
  for (RootId r : s) {
    const auto& d = rs.delta_coords(r);
    m.emplace_back(d.begin(), d.end());
  }
  return detail::exact_matrix_rank(std::move(m)) == static_cast<int>(s.size());
}

std::string sys_name(const CominusculeData& cd) {
  return system_label(cd.system().type(), cd.system().rank()) + "/alpha_" +
         std::to_string(cd.alpha_p_index + 1);
}

long long expected_positive_count(Type t, int n) {
  switch (t) {
    case Type::A: return static_cast<long long>(n) * (n + 1) / 2;
    case Type::B:
    case Type::C: return static_cast<long long>(n) * n;
    case Type::D: return static_cast<long long>(n) * (n - 1);
    case Type::E6: return 36;
    case Type::E7: return 63;
  }
  return -1;
}

std::vector<WeylElement> subgroup_of(const RootSystem& rs, const std::vector<int>& gens) {
  std::vector<WeylElement> out{WeylElement::identity(rs.rank())};
  std::set<WeylElement> seen(out.begin(), out.end());
  for (size_t i = 0; i < out.size(); ++i)
    for (int g : gens) {
      WeylElement c = compose(simple_reflection(rs, g), out[i]);
      if (seen.insert(c).second) out.push_back(c);
    }
  return out;
}

bool strictly_less(const RootSystem& rs, RootId a, RootId b) {
  return a != b && rs.root_leq(a, b);
}

// ---------------------------------------------------------------- root suite

void suite_root(Reporter& rep, Store& store, int max_rank) {
  std::vector<CominusculeData> cds;
  for (int n = 1; n <= std::min(max_rank, 6); ++n)
    for (int k = 0; k < n; ++k) cds.push_back(store.cd(Type::A, n, k));
  for (int n = 2; n <= std::min(max_rank, 6); ++n) {
    cds.push_back(store.cd(Type::B, n, 0));
    cds.push_back(store.cd(Type::C, n, n - 1));
  }
  for (int n = 4; n <= std::min(max_rank, 6); ++n) {
    cds.push_back(store.cd(Type::D, n, 0));
    cds.push_back(store.cd(Type::D, n, n - 1));
  }
  if (max_rank >= 6) {
    cds.push_back(store.cd(Type::E6, 6, 0));
    cds.push_back(store.cd(Type::E6, 6, 5));
  }
  if (max_rank >= 7) cds.push_back(store.cd(Type::E7, 7, 6));

  // Cominuscule detection for every supported type, independent of max_rank.
  {
    bool ok = true;
    std::string bad;
    auto expect = [&](Type t, int n, std::vector<int> idx) {
      const RootSystem& rs = store.get(t, n);
      std::vector<RootId> want;
      for (int i : idx) want.push_back(rs.simples()[i]);
      if (cominuscule_simple_roots(rs) != want) {
        ok = false;
        bad += " " + type_name(t) + std::to_string(n);
      }
    };
    for (int n = 1; n <= 4; ++n) {
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) all[i] = i;
      expect(Type::A, n, all);
    }
    for (int n = 2; n <= 4; ++n) expect(Type::B, n, {0});
    for (int n = 2; n <= 4; ++n) expect(Type::C, n, {n - 1});
    for (int n = 4; n <= 5; ++n) expect(Type::D, n, {0, n - 2, n - 1});
    expect(Type::E6, 6, {0, 5});
    expect(Type::E7, 7, {6});
    rep.hard("cominuscule_detection", ok, ok ? "A,B,C,D,E6,E7" : "failed at" + bad);
  }

  // Psi displays for types B and C, as printed.
  {
    bool ok = true;
    for (int n = 2; n <= std::min(max_rank, 6); ++n) {
      const RootSystem& rs = store.get(Type::B, n);
      auto cdb = store.cd(Type::B, n, 0);
      std::vector<Coords> want;
      for (int i = 2; i <= n; ++i) {
        Coords p(n, 0), m(n, 0);
        p[0] = 1;
        p[i - 1] = 1;
        m[0] = 1;
        m[i - 1] = -1;
        want.push_back(p);
        want.push_back(m);
      }
      Coords e1(n, 0);
      e1[0] = 1;
      want.push_back(e1);
      std::sort(want.begin(), want.end());
      std::vector<Coords> got;
      for (RootId r : cdb.psi) got.push_back(rs.coords(r));
      std::sort(got.begin(), got.end());
      ok = ok && got == want;

      const RootSystem& rc = store.get(Type::C, n);
      auto cdc = store.cd(Type::C, n, n - 1);
      std::vector<Coords> wantc;
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
          Coords c(n, 0);
          c[i - 1] += 1;
          c[j - 1] += 1;
          wantc.push_back(c);
        }
      std::sort(wantc.begin(), wantc.end());
      std::vector<Coords> gotc;
      for (RootId r : cdc.psi) gotc.push_back(rc.coords(r));
      std::sort(gotc.begin(), gotc.end());
      ok = ok && gotc == wantc;
    }
    rep.hard("psi_displays_B_C", ok);
  }

  long long pairs_checked = 0;
  bool counts_ok = true, negation_ok = true, pairing_ok = true, order_ok = true;
  bool psi_sum_ok = true, strong_ok = true, theta_ok = true;
  for (const auto& cd : cds) {
    const RootSystem& rs = cd.system();
    counts_ok = counts_ok && static_cast<long long>(rs.positives().size()) ==
                                 expected_positive_count(rs.type(), rs.rank());
    for (RootId r = 0; r < rs.num_roots(); ++r) {
      negation_ok = negation_ok && rs.negate(rs.negate(r)) == r &&
                    rs.is_positive(r) != rs.is_positive(rs.negate(r));
      pairing_ok = pairing_ok && rs.pairing(r, r) == 2;
    }
    const auto& pos = rs.positives();
    for (RootId a : pos) {
      order_ok = order_ok && rs.root_leq(a, a);
      for (RootId b : pos) {
        if (rs.root_leq(a, b) && rs.root_leq(b, a) && a != b) order_ok = false;
        for (RootId c : pos)
          if (rs.root_leq(a, b) && rs.root_leq(b, c) && !rs.root_leq(a, c)) order_ok = false;
      }
    }
    for (RootId g : cd.psi)
      for (RootId d : cd.psi) {
        ++pairs_checked;
        Coords sum = rs.coords(g);
        for (size_t k = 0; k < sum.size(); ++k) sum[k] += rs.coords(d)[k];
        if (g != d && rs.find(sum)) psi_sum_ok = false;
        Coords dif = rs.coords(g);
        for (size_t k = 0; k < dif.size(); ++k) dif[k] -= rs.coords(d)[k];
        auto dr = rs.find(dif);
        if (dr && !cd.in_phi_p[*dr]) psi_sum_ok = false;
        if (g < d && rs.dot(g, d) == 0 && !is_strongly_orthogonal_set(rs, {g, d}))
          strong_ok = false;
      }
    theta_ok = theta_ok && rs.coefficient(cd.theta, cd.alpha_p_index) == 1;
    for (RootId r : pos) theta_ok = theta_ok && rs.root_leq(r, cd.theta);
  }
  rep.hard("positive_counts", counts_ok);
  rep.hard("negation_closure", negation_ok);
  rep.hard("pairing_alpha_alpha_2", pairing_ok);
  rep.hard("root_order_is_partial_order", order_ok);
  rep.hard("psi_sum_difference", psi_sum_ok,
           std::to_string(pairs_checked) + " Psi pairs over " + std::to_string(cds.size()) +
               " systems");
  rep.hard("orthogonal_pairs_in_psi_strongly_orthogonal", strong_ok);
  rep.hard("theta_is_unique_maximum", theta_ok);

  // Type B: Psi is totally ordered; each long root has a unique orthogonal
  // partner and the short root sits between comparable partners.
  {
    bool ok = true;
    for (int n = 2; n <= std::min(max_rank, 6); ++n) {
      auto cd = store.cd(Type::B, n, 0);
      const RootSystem& rs = cd.system();
      RootId a0 = typeb_short_root(cd);
      for (RootId a : cd.psi) {
        std::vector<RootId> perp;
        for (RootId b : cd.psi) {
          if (a != b && !rs.root_leq(a, b) && !rs.root_leq(b, a)) ok = false;
          if (a != b && rs.dot(a, b) == 0) perp.push_back(b);
        }
        if (rs.dot(a, a0) == 0 && a != a0) ok = false;
        if (rs.is_long(a)) {
          if (perp.size() != 1) ok = false;
          else if (strictly_less(rs, a, perp[0]) &&
                   !(strictly_less(rs, a, a0) && strictly_less(rs, a0, perp[0])))
            ok = false;
        }
      }
    }
    rep.hard("typeb_psi_chain_and_perp", ok);
  }
}

// ---------------------------------------------------------------- weyl suite

void suite_weyl(Reporter& rep, Store& store, int max_rank) {
  // Reduced words: length agreement and round trip.
  {
    bool ok = true;
    std::string range = "W(A3), W(B3)";
    std::vector<const RootSystem*> groups{&store.get(Type::A, 3), &store.get(Type::B, 3)};
    if (max_rank >= 4) {
      for (Type t : {Type::A, Type::B, Type::C, Type::D}) groups.push_back(&store.get(t, 4));
      range = "all rank <= 4 classical groups";
    }
    for (const RootSystem* rsp : groups) {
      const RootSystem& rs = *rsp;
      for (const WeylElement& w : all_elements(rs)) {
        Word word = reduced_word(rs, w);
        ok = ok && static_cast<int>(word.size()) == length(rs, w);
        ok = ok && element_from_word(rs, word) == w;
        ok = ok && length(rs, inverse(rs, w)) == length(rs, w);
      }
    }
    rep.hard("reduced_word_roundtrip", ok, range);
  }

  std::vector<CominusculeData> cds;
  for (int k = 0; k < 3; ++k) cds.push_back(store.cd(Type::A, 3, k));
  cds.push_back(store.cd(Type::B, 3, 0));
  cds.push_back(store.cd(Type::C, 3, 2));
  if (max_rank >= 4) cds.push_back(store.cd(Type::D, 4, 0));

  // Maximal/minimal root moves between W^P levels.
  {
    bool ok = true;
    long long checked = 0;
    for (const auto& cd : cds) {
      const RootSystem& rs = cd.system();
      for (const WeylElement& v : enumerate_wp(cd)) {
        std::vector<RootId> inv = inversion_set(rs, v);
        WeylElement vinv = inverse(rs, v);
        for (int i = 0; i < rs.rank(); ++i) {
          RootId alpha = rs.simples()[i];
          if (!sends_negative(rs, vinv, alpha)) continue;
          ++checked;
          RootId beta = rs.negate(act(rs, vinv, alpha));
          bool maximal = std::binary_search(inv.begin(), inv.end(), beta);
          for (RootId g : inv)
            if (strictly_less(rs, beta, g)) maximal = false;
          WeylElement u = compose(simple_reflection(rs, i), v);
          std::vector<RootId> inv_u = inversion_set(rs, u);
          bool minimal = !std::binary_search(inv_u.begin(), inv_u.end(), beta);
          for (RootId g : cd.psi)
            if (!std::binary_search(inv_u.begin(), inv_u.end(), g) && strictly_less(rs, g, beta))
              minimal = false;
          ok = ok && maximal && minimal;
        }
        // converse directions
        for (RootId beta : inv) {
          bool maximal = true;
          for (RootId g : inv)
            if (strictly_less(rs, beta, g)) maximal = false;
          if (!maximal) continue;
          ++checked;
          RootId alpha = rs.negate(act(rs, v, beta));
          const auto& simples = rs.simples();
          ok = ok && std::find(simples.begin(), simples.end(), alpha) != simples.end();
        }
        for (RootId beta : cd.psi) {
          if (std::binary_search(inv.begin(), inv.end(), beta)) continue;
          bool minimal = true;
          for (RootId g : cd.psi)
            if (!std::binary_search(inv.begin(), inv.end(), g) && strictly_less(rs, g, beta))
              minimal = false;
          if (!minimal) continue;
          ++checked;
          RootId alpha = act(rs, v, beta);
          const auto& simples = rs.simples();
          ok = ok && std::find(simples.begin(), simples.end(), alpha) != simples.end();
          if (ok) {
            WeylElement u = compose(reflection(rs, alpha), v);
            ok = ok && length(rs, u) == length(rs, v) + 1 && in_wp(cd, u);
          }
        }
      }
    }
    rep.hard("wp_descent_maximal_minimal", ok, std::to_string(checked) + " triples");
  }

  // Descent monotonicity triples for the Bruhat order.
  {
    bool ok = true;
    long long checked = 0;
    for (Type t : {Type::A, Type::B}) {
      const RootSystem& rs = store.get(t, 3);
      auto all = all_elements(rs);
      for (const WeylElement& u : all)
        for (const WeylElement& v : all) {
          if (u == v || !bruhat_leq(rs, u, v)) continue;
          for (int i = 0; i < rs.rank(); ++i) {
            ++checked;
            WeylElement su = compose(simple_reflection(rs, i), u);
            WeylElement sv = compose(simple_reflection(rs, i), v);
            bool u_up = length(rs, su) > length(rs, u);
            bool v_up = length(rs, sv) > length(rs, v);
            if (u_up && v_up) ok = ok && bruhat_leq(rs, su, sv);
            if (!u_up && !v_up) ok = ok && bruhat_leq(rs, su, sv);
            if (u_up && !v_up) ok = ok && bruhat_leq(rs, u, sv) && bruhat_leq(rs, su, v);
          }
        }
    }
    rep.hard("descent_lifting_triples", ok, std::to_string(checked) + " triples in W(A3), W(B3)");
  }

  // W^P sizes.
  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= std::min(max_rank, 4); ++n)
      for (int k = 0; k < n; ++k) {
        auto cd = store.cd(Type::A, n, k);
        ok = ok && static_cast<long long>(enumerate_wp(cd).size()) == binomial(n + 1, k + 1);
      }
    for (int n = 2; n <= std::min(max_rank, 4); ++n) {
      ok = ok && enumerate_wp(store.cd(Type::B, n, 0)).size() == static_cast<size_t>(2 * n);
      ok = ok && enumerate_wp(store.cd(Type::C, n, n - 1)).size() == (1u << n);
    }
    for (int n = 4; n <= std::min(max_rank, 5); ++n) {
      ok = ok && enumerate_wp(store.cd(Type::D, n, 0)).size() == static_cast<size_t>(2 * n);
      ok = ok && enumerate_wp(store.cd(Type::D, n, n - 1)).size() == (1u << (n - 1));
    }
    if (max_rank >= 6) {
      ok = ok && enumerate_wp(store.cd(Type::E6, 6, 0)).size() == 27;
      detail += " E6:27";
    }
    if (max_rank >= 7) {
      ok = ok && enumerate_wp(store.cd(Type::E7, 7, 6)).size() == 56;
      detail += " E7:56";
    }
    rep.hard("wp_sizes", ok, "binomials, 2n, 2^n" + detail);
  }

  // Coset representatives: projection onto W^P, coset invariance, maximum.
  {
    bool ok = true;
    for (const auto& cd : {store.cd(Type::A, 3, 1), store.cd(Type::B, 3, 0)}) {
      const RootSystem& rs = cd.system();
      auto wp = enumerate_wp(cd);
      std::set<WeylElement> wp_set(wp.begin(), wp.end());
      auto w_p_group = subgroup_of(rs, cd.delta_p);
      for (const WeylElement& w : all_elements(rs)) {
        WeylElement r = coset_rep_p(cd, w);
        ok = ok && wp_set.count(r) > 0;
        for (const WeylElement& p : w_p_group) ok = ok && coset_rep_p(cd, compose(w, p)) == r;
      }
      WeylElement top = omega_p(cd);
      for (const WeylElement& u : wp) {
        ok = ok && coset_rep_p(cd, u) == u;
        ok = ok && bruhat_leq(rs, u, top);
      }
      ok = ok && inversion_set(rs, top) == cd.psi;
      for (size_t i = 1; i < wp.size(); ++i)
        ok = ok && length(rs, wp[i - 1]) <= length(rs, wp[i]);
    }
    rep.hard("coset_representatives", ok);
  }
}

// -------------------------------------------------------------- bruhat suite

void suite_bruhat(Reporter& rep, Store& store, int max_rank) {
  (void)max_rank;
  for (auto [t, n] : {std::pair{Type::A, 2}, {Type::A, 3}, {Type::B, 3}}) {
    const RootSystem& rs = store.get(t, n);
    auto all = all_elements(rs);
    std::map<WeylElement, std::set<WeylElement>> lower;
    for (const WeylElement& w : all) lower[w] = subword_lower_set(rs, w);
    long long pairs = 0, agree = 0;
    bool ok = true;
    for (const WeylElement& u : all)
      for (const WeylElement& w : all) {
        ++pairs;
        bool fast = bruhat_leq(rs, u, w);
        bool slow = lower[w].count(u) > 0;
        if (fast == slow) ++agree;
        ok = ok && fast == slow;
        if (u.is_identity()) ok = ok && fast;
        if (u == w) ok = ok && fast;
        if (fast && length(rs, u) == length(rs, w)) ok = ok && u == w;
      }
    rep.hard("oracle_agreement_" + type_name(t) + std::to_string(n), ok,
             std::to_string(agree) + "/" + std::to_string(pairs) + " ordered pairs");
  }
}

// ----------------------------------------------------------- involution suite

void suite_involution(Reporter& rep, Store& store, int max_rank) {
  (void)max_rank;
  std::vector<const RootSystem*> systems{&store.get(Type::A, 3), &store.get(Type::B, 3),
                                         &store.get(Type::C, 3)};
  bool len_ok = true, comp_ok = true, circ_ok = true, int_ok = true;
  long long checked = 0;
  for (const RootSystem* rsp : systems) {
    const RootSystem& rs = *rsp;
    for (const Involution& s : involutions_of(rs)) {
      int_ok = int_ok && (s.l + s.lambda) % 2 == 0;
      for (int i = 0; i < rs.rank(); ++i) {
        ++checked;
        Involution t = circ(rs, i, s);
        circ_ok = circ_ok && circ(rs, i, t) == s;
        bool up = bruhat_leq(rs, s.w, t.w);
        bool down = bruhat_leq(rs, t.w, s.w);
        comp_ok = comp_ok && (up || down);
        bool splus = length(rs, compose(simple_reflection(rs, i), s.w)) > s.l;
        comp_ok = comp_ok && ((t.l > s.l) == splus);
        len_ok = len_ok && inv_length(t) == inv_length(s) + (up && !(t == s) ? 1 : -1);
      }
    }
  }
  rep.hard("circ_length_step", len_ok,
           std::to_string(checked) + " (sigma, alpha) pairs in W(A3), W(B3), W(C3)");
  rep.hard("circ_comparability", comp_ok);
  rep.hard("circ_is_involutive", circ_ok);
  rep.hard("involution_length_integral", int_ok);

  // Monotonicity triples for the circle action, A3.
  {
    const RootSystem& rs = store.get(Type::A, 3);
    auto invs = involutions_of(rs);
    bool ok = true;
    long long triples = 0;
    for (const Involution& s : invs)
      for (const Involution& t : invs) {
        if (s == t || !bruhat_leq(rs, s.w, t.w)) continue;
        for (int i = 0; i < rs.rank(); ++i) {
          ++triples;
          Involution cs = circ(rs, i, s), ct = circ(rs, i, t);
          bool s_up = inv_length(cs) > inv_length(s);
          bool t_up = inv_length(ct) > inv_length(t);
          if (s_up && t_up) ok = ok && bruhat_leq(rs, cs.w, ct.w);
          if (!s_up && !t_up) ok = ok && bruhat_leq(rs, cs.w, ct.w);
          if (s_up && !t_up) ok = ok && bruhat_leq(rs, cs.w, t.w) && bruhat_leq(rs, s.w, ct.w);
        }
      }
    rep.hard("circ_lifting_triples", ok, std::to_string(triples) + " triples in I(W(A3))");
  }

  // sigma_S on strongly orthogonal subsets of Psi: injective, lambda = |S|.
  {
    bool ok = true;
    long long sets = 0;
    std::vector<CominusculeData> cds{store.cd(Type::A, 3, 1), store.cd(Type::B, 2, 0),
                                     store.cd(Type::B, 3, 0), store.cd(Type::C, 2, 1),
                                     store.cd(Type::C, 3, 2)};
    for (const auto& cd : cds) {
      const RootSystem& rs = cd.system();
      std::map<WeylElement, std::vector<RootId>> seen;
      for (const auto& s : enumerate_orthogonal_subsets(cd, omega_p(cd))) {
        if (!is_strongly_orthogonal_set(rs, s)) continue;
        ++sets;
        Involution sig = sigma_from_set(rs, s);
        ok = ok && sig.lambda == static_cast<int>(s.size());
        auto [it, fresh] = seen.emplace(sig.w, s);
        ok = ok && (fresh || it->second == s);
      }
    }
    rep.hard("sigma_injective_on_strongly_orthogonal", ok, std::to_string(sets) + " sets");
  }
}

// -------------------------------------------------------------- params suite

void suite_params(Reporter& rep, Store& store, int max_rank) {
  // Desk-scale counts.
  {
    auto a3 = store.cd(Type::A, 3, 1);
    auto c2 = store.cd(Type::C, 2, 1);
    bool ok = enumerate_orthogonal_subsets(a3, omega_p(a3)).size() == 7;
    ok = ok && enumerate_orthogonal_subsets(c2, omega_p(c2)).size() == 5;
    ok = ok && typec_enumerate_full_admissible(c2, omega_p(c2)).size() == 6;
    auto b2 = store.cd(Type::B, 2, 0);
    ok = ok && typeb_enumerate(b2, omega_p(b2)).size() == 6;
    rep.hard("reference_counts", ok, "A3/7, C2/5 vs 6, B2/6");
  }

  // Type B family agrees with the defining condition, brute force.
  {
    bool ok = true;
    long long families = 0;
    for (int n = 2; n <= std::min(max_rank, 3); ++n) {
      auto cd = store.cd(Type::B, n, 0);
      const RootSystem& rs = cd.system();
      RootId a0 = typeb_short_root(cd);
      for (const WeylElement& v : enumerate_wp(cd)) {
        ++families;
        std::vector<RootId> pp = phi_plus_of(cd, v);
        std::set<std::vector<RootId>> expected;
        for (std::uint32_t mask = 0; mask < (1u << pp.size()); ++mask) {
          std::vector<RootId> s;
          for (size_t j = 0; j < pp.size(); ++j)
            if (mask & (1u << j)) s.push_back(pp[j]);
          bool keep = is_orthogonal_set(rs, s);
          if (!keep && s.size() == 2 && std::count(s.begin(), s.end(), a0)) {
            RootId g = s[0] == a0 ? s[1] : s[0];
            Coords d = rs.coords(g);
            for (size_t k = 0; k < d.size(); ++k) d[k] -= rs.coords(a0)[k];
            auto dr = rs.find(d);
            keep = dr && rs.is_positive(*dr) && cd.in_phi_p[*dr];
          }
          if (keep) expected.insert(s);
        }
        std::set<std::vector<RootId>> got;
        for (const auto& p : typeb_enumerate(cd, v)) got.insert(p.s);
        ok = ok && got == expected;
      }
    }
    rep.hard("typeb_family_brute_force", ok, std::to_string(families) + " families");
  }

  // Admissible partitions: recomputed closed form, pad uniqueness,
  // linear independence, and the long-root extension rule.
  {
    bool ok = true, indep = true, remark = true;
    long long sets = 0;
    for (int n = 2; n <= std::min(max_rank, 4); ++n) {
      auto cd = store.cd(Type::C, n, n - 1);
      const RootSystem& rs = cd.system();
      for (const WeylElement& v : enumerate_wp(cd)) {
        std::vector<RootId> pp = phi_plus_of(cd, v);
        for (const TypeCSet& t : typec_enumerate_admissible(cd, v)) {
          ++sets;
          std::vector<RootId> shorts, x_closed;
          for (RootId r : t.s)
            if (rs.is_short(r)) shorts.push_back(r);
          for (RootId r : t.s) {
            bool orth = true;
            for (RootId a : shorts) orth = orth && (r == a || rs.dot(r, a) == 0);
            if (rs.is_short(r) || orth) x_closed.push_back(r);
          }
          ok = ok && x_closed == t.x_part;
          for (auto& [z, x] : t.pad) {
            int count = 0;
            for (RootId a : t.x_part) {
              Coords d = rs.coords(z);
              for (size_t k = 0; k < d.size(); ++k) d[k] -= rs.coords(a)[k];
              auto dr = rs.find(d);
              if (dr && rs.is_positive(*dr) && cd.in_phi_p[*dr]) ++count;
            }
            ok = ok && count == 1;
            (void)x;
          }
          indep = indep && linearly_independent(rs, t.s);
          for (RootId beta : pp) {
            if (!rs.is_long(beta) || std::binary_search(t.s.begin(), t.s.end(), beta)) continue;
            std::vector<RootId> bigger = t.s;
            bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), beta), beta);
            bool adm = typec_try_admissible(cd, v, bigger).has_value();
            bool rule = true;   // for every alpha in S: (alpha,beta) != 0 implies alpha < beta
            bool nless = true;  // beta not below any alpha in S
            for (RootId a : t.s) {
              if (rs.dot(a, beta) != 0 && !strictly_less(rs, a, beta)) rule = false;
              if (strictly_less(rs, beta, a)) nless = false;
            }
            remark = remark && adm == rule && (!nless || adm);
          }
        }
      }
    }
    rep.hard("typec_partition_closed_form", ok, std::to_string(sets) + " admissible sets");
    rep.hard("typec_admissible_independent", indep);
    rep.hard("typec_long_root_extension_rule", remark);
  }

  // Both enumeration strategies agree.
  {
    bool ok = true;
    for (int n = 2; n <= std::min(max_rank, 4); ++n) {
      auto cd = store.cd(Type::C, n, n - 1);
      for (const WeylElement& v : enumerate_wp(cd)) {
        auto a = typec_enumerate_full_admissible(cd, v, EnumStrategy::Filter);
        auto b = typec_enumerate_full_admissible(cd, v, EnumStrategy::Incremental);
        ok = ok && a.size() == b.size();
        for (size_t i = 0; ok && i < a.size(); ++i) ok = a[i] == b[i];
      }
    }
    rep.hard("typec_enumeration_strategies_agree", ok);
  }

  // Orbit counts: full admissible dominates the orthogonal family, strictly
  // from rank 2 on.
  {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= std::min(max_rank, 4); ++n) {
      auto cd = store.cd(Type::C, n, n - 1);
      auto top = omega_p(cd);
      size_t fa = typec_enumerate_full_admissible(cd, top).size();
      size_t orth = enumerate_orthogonal_subsets(cd, top).size();
      ok = ok && fa > orth;
      detail += " C" + std::to_string(n) + ":" + std::to_string(fa) + ">" + std::to_string(orth);
    }
    rep.hard("typec_counts_dominate_orthogonal", ok, detail);
  }

  // Essential roots: example and truncation monotonicity.
  {
    auto c2 = store.cd(Type::C, 2, 1);
    const RootSystem& rs2 = c2.system();
    auto top2 = omega_p(c2);
    std::vector<RootId> s{rs2.root_of({1, 1}), rs2.root_of({2, 0})};
    std::sort(s.begin(), s.end());
    TypeCSet t = typec_admissible(c2, top2, s);
    bool ok = typec_is_essential(c2, t, rs2.root_of({2, 0}));

    long long checked = 0;
    for (int n = 3; n <= std::min(max_rank, 4); ++n) {
      auto cd = store.cd(Type::C, n, n - 1);
      const RootSystem& rs = cd.system();
      for (const WeylElement& v : enumerate_wp(cd))
        for (const TypeCSet& t2 : typec_enumerate_admissible(cd, v))
          for (RootId beta : t2.z_part) {
            if (!typec_is_essential(cd, t2, beta)) continue;
            for (RootId a : cd.psi) {
              if (!strictly_less(rs, beta, a)) continue;
              std::vector<RootId> cut;
              for (RootId g : t2.s)
                if (strictly_less(rs, g, a)) cut.push_back(g);
              ++checked;
              TypeCSet tc = typec_admissible(cd, v, cut);
              ok = ok && typec_is_essential(cd, tc, beta);
            }
          }
    }
    rep.hard("essential_truncation_monotone", ok, std::to_string(checked) + " truncations");
  }
}

// ---------------------------------------------------------- completion suite

void suite_completion(Reporter& rep, Store& store, int max_rank) {
  bool laws = true, fixpoint = true;
  long long sets = 0;
  auto run_laws = [&](const CominusculeData& cd, const WeylElement& v) {
    for (const TypeCSet& t : typec_enumerate_admissible(cd, v)) {
      ++sets;
      TypeCSet bar = typec_completion(cd, t);
      laws = laws && std::includes(bar.s.begin(), bar.s.end(), t.s.begin(), t.s.end());
      laws = laws && typec_try_admissible(cd, v, bar.s).has_value();
      laws = laws && typec_completion(cd, bar) == bar;
      laws = laws && bar.x_part == t.x_part;
      bool full = typec_is_full_admissible(cd, v, t.s);
      fixpoint = fixpoint && full == (bar == t);
    }
  };
  {
    auto cd = store.cd(Type::C, 3, 2);
    for (const WeylElement& v : enumerate_wp(cd)) run_laws(cd, v);
  }
  if (max_rank >= 4) {
    auto cd = store.cd(Type::C, 4, 3);
    run_laws(cd, omega_p(cd));
  }
  rep.hard("completion_laws", laws,
           std::to_string(sets) + " admissible sets (C3 all v" +
               (max_rank >= 4 ? ", C4 omega" : "") + ")");
  rep.hard("full_iff_fixpoint", fixpoint);

  if (max_rank >= 5) {
    auto cd = store.cd(Type::C, 5, 4);
    const RootSystem& rs = cd.system();
    auto top = omega_p(cd);
    long long c5_sets = 0;
    bool c5_laws = true;
    for (const TypeCSet& t5 : typec_enumerate_admissible(cd, top)) {
      ++c5_sets;
      TypeCSet bar = typec_completion(cd, t5);
      c5_laws = c5_laws && std::includes(bar.s.begin(), bar.s.end(), t5.s.begin(), t5.s.end());
      c5_laws = c5_laws && typec_completion(cd, bar) == bar && bar.x_part == t5.x_part;
    }
    rep.hard("completion_laws_c5_top", c5_laws, std::to_string(c5_sets) + " admissible sets");
    auto rid = [&](int i, int j) {
      Coords c(5, 0);
      c[i - 1] += 1;
      c[j - 1] += 1;
      return rs.root_of(c);
    };
    std::vector<RootId> a2{rid(1, 5), rid(2, 4), rid(2, 2)};
    std::sort(a2.begin(), a2.end());
    TypeCSet t = typec_admissible(cd, top, a2);
    TypeCSet bar = typec_completion(cd, t);
    std::vector<RootId> a1{rid(1, 5), rid(1, 1), rid(2, 4), rid(2, 2)};
    std::sort(a1.begin(), a1.end());
    bool ok = bar.s == a1 && typec_a_set(cd, t).empty() &&
              typec_b_set(cd, t) == std::vector<RootId>{rid(1, 1)};

    // Completion driven by a long root of X alone.
    std::vector<RootId> b2{rid(1, 5), rid(2, 2)};
    std::sort(b2.begin(), b2.end());
    TypeCSet u = typec_admissible(cd, top, b2);
    ok = ok && typec_b_set(cd, u).empty() &&
         typec_a_set(cd, u) == std::vector<RootId>{rid(1, 1)};

    // Both one-sided shapes occur among admissible sets at C5.
    bool found_a_only = false, found_b_only = false;
    for (const TypeCSet& t5 : typec_enumerate_admissible(cd, top)) {
      bool a_empty = typec_a_set(cd, t5).empty();
      bool b_empty = typec_b_set(cd, t5).empty();
      if (!a_empty && b_empty) found_a_only = true;
      if (a_empty && !b_empty) found_b_only = true;
    }
    rep.hard("c5_reference_completions", ok && found_a_only && found_b_only,
             "X-rule-only and Z-rule-only instances both realized");
  }
}

// ---------------------------------------------------------------- dims suite

void suite_dims(Reporter& rep, Store& store, int max_rank) {
  // |Y(v,S)| away from characteristic 2 equals L(sigma_{v(S)}).
  {
    std::vector<CominusculeData> cds;
    for (int k = 0; k < 3; ++k) cds.push_back(store.cd(Type::A, 3, k));
    cds.push_back(store.cd(Type::B, 3, 0));
    cds.push_back(store.cd(Type::C, 3, 2));
    if (max_rank >= 4) cds.push_back(store.cd(Type::D, 4, 0));
    bool ok = true;
    long long pairs = 0;
    for (const auto& cd : cds)
      for (const WeylElement& v : enumerate_wp(cd))
        for (const auto& s : enumerate_orthogonal_subsets(cd, v)) {
          ++pairs;
          YSet y = y_char_ne2(cd, v, s);
          ok = ok && static_cast<int>(y.members.size()) ==
                         inv_length(sigma_of_image(cd, v, s));
          for (RootId b : s)
            ok = ok && std::binary_search(y.members.begin(), y.members.end(), b);
        }
    rep.hard("y_charne2_equals_involution_length", ok,
             std::to_string(pairs) + " pairs (A3 all alpha, B3, C3" +
                 (max_rank >= 4 ? ", D4" : "") + ")");
  }

  // Type C: the closed formula, the Y description, and the #Y identity.
  {
    bool ok = true;
    long long params = 0;
    auto run = [&](const CominusculeData& cd, const WeylElement& v) {
      const RootSystem& rs = cd.system();
      std::vector<RootId> pp = phi_plus_of(cd, v);
      int psi = static_cast<int>(cd.psi.size());
      for (const TypeCSet& t : typec_enumerate_full_admissible(cd, v)) {
        ++params;
        YSet y = y_typec(cd, t);
        int dim = dim_typec(cd, t);
        ok = ok && dim == psi + static_cast<int>(y.members.size());
        // closed form: short roots count only when their successor is in
        // Phi+(v); at omega^P that is #S_s
        int shorts = 0;
        for (RootId r : t.s)
          if (rs.is_short(r) && std::binary_search(pp.begin(), pp.end(), suc(cd, r))) ++shorts;
        ok = ok && static_cast<int>(y.members.size()) ==
                       inv_length(sigma_of_image(cd, t.v, t.x_part)) - shorts +
                           static_cast<int>(t.z_part.size());
        if (t.s.empty()) ok = ok && dim == psi;
      }
    };
    {
      auto cd = store.cd(Type::C, 3, 2);
      for (const WeylElement& v : enumerate_wp(cd)) run(cd, v);
    }
    if (max_rank >= 4) {
      auto cd = store.cd(Type::C, 4, 3);
      run(cd, omega_p(cd));
    }
    rep.hard("typec_dimension_reconciliation", ok, std::to_string(params) + " full admissible");
  }

  // Bookkeeping: dim - l(v) is the fiber-orbit dimension, inside [0, #Psi];
  // the open orbit has dimension 2#Psi and is unique.
  {
    bool ok = true;
    auto check_family = [&](const CominusculeData& cd, const DimTable& t) {
      const RootSystem& rs = cd.system();
      int psi = static_cast<int>(cd.psi.size());
      int open_count = 0;
      for (size_t i = 0; i < t.params.size(); ++i) {
        int off = t.dims[i] - length(rs, t.params[i].v);
        ok = ok && off >= 0 && off <= psi;
        if (t.dims[i] == 2 * psi) {
          ++open_count;
          ok = ok && inversion_set(rs, t.params[i].v) == cd.psi;
        }
        ok = ok && t.dims[i] >= psi;
      }
      ok = ok && open_count == 1;
    };
    for (int k : {0, 1}) {
      auto cd = store.cd(Type::A, 3, k);
      check_family(cd, simply_laced_dim_table(cd, enumerate_wp(cd)));
    }
    for (int n = 2; n <= std::min(max_rank, 4); ++n) {
      auto cd = store.cd(Type::B, n, 0);
      check_family(cd, typeb_dim_table(cd, enumerate_wp(cd)));
      auto cdc = store.cd(Type::C, n, n - 1);
      check_family(cdc, typec_dim_table(cdc, enumerate_wp(cdc)));
    }
    if (max_rank >= 4) {
      auto cd = store.cd(Type::D, 4, 0);
      check_family(cd, simply_laced_dim_table(cd, enumerate_wp(cd)));
    }
    rep.hard("dimension_bookkeeping_and_open_orbit", ok);
  }
}

// --------------------------------------------------------------- order suite

void suite_order(Reporter& rep, Store& store, const CominusculeData& cd) {
  (void)store;
  const RootSystem& rs = cd.system();
  std::string tag = sys_name(cd);
  auto pairs = enumerate_admissible_pairs(cd);
  int n = static_cast<int>(pairs.size());

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<int> dims(n);
  for (int i = 0; i < n; ++i) dims[i] = dim_simply_laced(cd, pairs[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = pair_leq(cd, pairs[i], pairs[j]);

  auto index_of = [&](const AdmissiblePair& p) {
    for (int i = 0; i < n; ++i)
      if (pairs[i] == p) return i;
    return -1;
  };
  std::vector<std::vector<int>> mtab(n, std::vector<int>(rs.rank()));
  bool m_closed = true;
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < rs.rank(); ++a) {
      mtab[i][a] = index_of(m_alpha(cd, a, pairs[i]));
      m_closed = m_closed && mtab[i][a] >= 0;
    }
  rep.hard(tag + "/action_closed", m_closed, std::to_string(n) + " pairs");

  bool po = true;
  for (int i = 0; i < n; ++i) {
    po = po && leq[i][i];
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) po = false;
      for (int k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k]) po = false;
    }
  }
  rep.hard(tag + "/partial_order", po);

  bool mono = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j] && dims[i] >= dims[j]) mono = false;
  rep.hard(tag + "/strict_dimension_monotonicity", mono);

  bool up = true, step = true, act_mono = true, restrict_ok = true;
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < rs.rank(); ++a) {
      int m = mtab[i][a];
      up = up && leq[i][m];
      step = step && (m == i ? dims[m] == dims[i] : dims[m] == dims[i] + 1);
      for (int j = 0; j < n; ++j)
        if (leq[i][j] && !leq[mtab[i][a]][mtab[j][a]]) act_mono = false;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i][j] &&
          !bruhat_leq(rs, sigma_of_image(cd, pairs[i].v, pairs[i].s).w,
                      sigma_of_image(cd, pairs[j].v, pairs[j].s).w))
        restrict_ok = false;
  rep.hard(tag + "/x_leq_mx", up);
  rep.hard(tag + "/move_dimension_step", step);
  rep.hard(tag + "/action_monotone", act_mono);
  rep.hard(tag + "/restriction_to_involutions", restrict_ok);

  bool one_step = true;
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < rs.rank(); ++a) {
      if (mtab[i][a] == i) continue;
      for (int y = 0; y < n; ++y) {
        bool lhs = leq[y][mtab[i][a]];
        bool rhs = leq[y][i];
        for (int z = 0; !rhs && z < n; ++z) rhs = mtab[z][a] == mtab[y][a] && leq[z][i];
        if (lhs != rhs) one_step = false;
      }
    }
  rep.hard(tag + "/one_step_property", one_step);

  bool forces_fiber = true, min_fiber = true;
  int psi = static_cast<int>(cd.psi.size());
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < rs.rank(); ++a) {
      Involution sig = sigma_of_image(cd, pairs[i].v, pairs[i].s);
      bool fiber = false;
      for (int z = 0; z < n && !fiber; ++z) fiber = z != i && mtab[z][a] == i;
      if (sends_negative(rs, sig.w, rs.simples()[a]) && !fiber) forces_fiber = false;
      if (dims[i] == psi && fiber) min_fiber = false;
    }
  rep.hard(tag + "/descending_sigma_forces_fiber", forces_fiber);
  rep.hard(tag + "/minimal_pairs_have_empty_fibers", min_fiber);

  OrbitPoset poset = build_poset(cd);
  bool poset_ok = static_cast<int>(poset.params.size()) == n;
  // covers regenerate the strict order
  std::vector<std::vector<bool>> closure(n, std::vector<bool>(n, false));
  for (auto& [i, j] : poset.covers) closure[i][j] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (closure[i][k] && closure[k][j]) closure[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && closure[i][j] != (poset.leq[i][j] && i != j)) poset_ok = false;
  rep.hard(tag + "/covers_generate_order", poset_ok);

  bool idem = true, cover_step = true;
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < rs.rank(); ++a) idem = idem && mtab[mtab[i][a]][a] == mtab[i][a];
  for (auto& [i, j] : poset.covers) cover_step = cover_step && dims[j] == dims[i] + 1;
  rep.obs(tag + "/m_alpha_idempotent", idem, "observation, no theorem");
  rep.obs(tag + "/covers_step_dimension_by_one", cover_step, "observation, no theorem");
}

void suite_order_all(Reporter& rep, Store& store, int max_rank) {
  suite_order(rep, store, store.cd(Type::A, 3, 0));
  suite_order(rep, store, store.cd(Type::A, 3, 1));
  if (max_rank >= 4) suite_order(rep, store, store.cd(Type::D, 4, 0));

  // The rank-1 poset: the two one-dimensional orbits are incomparable, both
  // below the open orbit.
  auto cd = store.cd(Type::A, 1, 0);
  auto pairs = enumerate_admissible_pairs(cd);
  bool ok = pairs.size() == 3;
  if (ok) {
    const AdmissiblePair& bottom1 = pairs[0];  // (id, {})
    const AdmissiblePair& bottom2 = pairs[1];  // (s, {})
    const AdmissiblePair& top = pairs[2];      // (s, {alpha})
    ok = bottom1.s.empty() && bottom2.s.empty() && top.s.size() == 1;
    ok = ok && !pair_leq(cd, bottom1, bottom2) && !pair_leq(cd, bottom2, bottom1);
    ok = ok && pair_leq(cd, bottom1, top) && pair_leq(cd, bottom2, top);
    ok = ok && dim_simply_laced(cd, bottom1) == 1 && dim_simply_laced(cd, bottom2) == 1 &&
         dim_simply_laced(cd, top) == 2;
  }
  rep.hard("A1/v_shaped_poset", ok, "(id,{}) and (s,{}) incomparable below (s,{alpha})");
}

}  // namespace

std::set<WeylElement> subword_lower_set(const RootSystem& rs, const WeylElement& w) {
  Word word = reduced_word(rs, w);
  std::set<WeylElement> reach{WeylElement::identity(rs.rank())};
  for (int letter : word) {
    std::set<WeylElement> next = reach;
    for (const WeylElement& x : reach) next.insert(compose(x, simple_reflection(rs, letter - 1)));
    reach = std::move(next);
  }
  return reach;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"root",       "weyl", "bruhat", "involution",
                                              "params",     "completion", "dims", "order"};
  return names;
}

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  Store store;
  auto wants = [&](const std::string& s) {
    return opts.suites.empty() ||
           std::find(opts.suites.begin(), opts.suites.end(), s) != opts.suites.end();
  };
  Reporter rep{out, ""};
  if (wants("root")) {
    rep.suite = "root";
    suite_root(rep, store, opts.max_rank);
  }
  if (wants("weyl")) {
    rep.suite = "weyl";
    suite_weyl(rep, store, opts.max_rank);
  }
  if (wants("bruhat")) {
    rep.suite = "bruhat";
    suite_bruhat(rep, store, opts.max_rank);
  }
  if (wants("involution")) {
    rep.suite = "involution";
    suite_involution(rep, store, opts.max_rank);
  }
  if (wants("params")) {
    rep.suite = "params";
    suite_params(rep, store, opts.max_rank);
  }
  if (wants("completion")) {
    rep.suite = "completion";
    suite_completion(rep, store, opts.max_rank);
  }
  if (wants("dims")) {
    rep.suite = "dims";
    suite_dims(rep, store, opts.max_rank);
  }
  if (wants("order")) {
    rep.suite = "order";
    suite_order_all(rep, store, opts.max_rank);
  }
  return out;
}

bool verify_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (r.hard && !r.pass) return false;
  return true;
}

}  // namespace borbits
