#include "borbits/orbit_params.hpp"

#include <algorithm>
#include <string>

namespace borbits {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

bool set_contains(const std::vector<RootId>& s, RootId r) {
  return std::binary_search(s.begin(), s.end(), r);
}

std::vector<RootId> set_minus(const std::vector<RootId>& s, RootId r) {
  std::vector<RootId> out;
  out.reserve(s.size());
  for (RootId x : s)
    if (x != r) out.push_back(x);
  return out;
}

// Ordering contract for emitted families: by size, then lexicographically.
template <typename T>
void sort_family(std::vector<T>& fam) {
  std::sort(fam.begin(), fam.end(), [](const T& a, const T& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

std::optional<RootId> root_sum(const RootSystem& rs, RootId a, RootId b) {
  Coords c = rs.coords(a);
  const Coords& d = rs.coords(b);
  for (size_t k = 0; k < c.size(); ++k) c[k] += d[k];
  return rs.find(c);
}

std::optional<RootId> root_diff(const RootSystem& rs, RootId a, RootId b) {
  Coords c = rs.coords(a);
  const Coords& d = rs.coords(b);
  for (size_t k = 0; k < c.size(); ++k) c[k] -= d[k];
  return rs.find(c);
}

}  // namespace

std::vector<RootId> phi_plus_of(const CominusculeData& cd, const WeylElement& v) {
  const RootSystem& rs = cd.system();
  std::vector<RootId> inv = inversion_set(rs, v);
  for (RootId r : inv)
    if (!cd.in_psi[r]) fail("v is not a minimal coset representative");
  return inv;
}

std::vector<std::vector<RootId>> enumerate_orthogonal_subsets(const CominusculeData& cd,
                                                              const WeylElement& v) {
  const RootSystem& rs = cd.system();
  std::vector<RootId> roots = phi_plus_of(cd, v);
  std::vector<std::vector<RootId>> out;
  std::vector<RootId> cur;
  auto rec = [&](auto&& self, size_t from) -> void {
    out.push_back(cur);
    for (size_t j = from; j < roots.size(); ++j) {
      bool ok = true;
      for (RootId r : cur)
        if (rs.dot(r, roots[j]) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(roots[j]);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  sort_family(out);
  return out;
}

std::vector<AdmissiblePair> enumerate_admissible_pairs(const CominusculeData& cd) {
  if (!cd.system().simply_laced())
    fail("admissible pairs parametrize simply laced systems only; use the type B/C families");
  std::vector<AdmissiblePair> out;
  for (const WeylElement& v : enumerate_wp(cd))
    for (auto& s : enumerate_orthogonal_subsets(cd, v)) out.push_back({v, std::move(s)});
  return out;
}

RootId typeb_short_root(const CominusculeData& cd) {
  const RootSystem& rs = cd.system();
  if (rs.type() != Type::B) fail("short Psi root is a type B notion");
  RootId a0 = -1;
  for (RootId r : cd.psi)
    if (rs.is_short(r)) {
      if (a0 != -1) fail("Psi has more than one short root");
      a0 = r;
    }
  if (a0 == -1) fail("Psi has no short root");
  return a0;
}

std::vector<TypeBParam> typeb_enumerate(const CominusculeData& cd, const WeylElement& v) {
  const RootSystem& rs = cd.system();
  if (rs.type() != Type::B) fail("H_v is defined for type B");
  std::vector<TypeBParam> out;
  for (auto& s : enumerate_orthogonal_subsets(cd, v)) out.push_back({v, std::move(s), false});

  std::vector<RootId> pp = phi_plus_of(cd, v);
  RootId a0 = typeb_short_root(cd);
  if (set_contains(pp, a0)) {
    for (RootId g : cd.phi_p_pos) {
      auto sum = root_sum(rs, a0, g);
      if (!sum || !set_contains(pp, *sum)) continue;
      std::vector<RootId> s{a0, *sum};
      std::sort(s.begin(), s.end());
      out.push_back({v, std::move(s), true});
    }
  }
  std::sort(out.begin(), out.end(), [](const TypeBParam& a, const TypeBParam& b) {
    if (a.s.size() != b.s.size()) return a.s.size() < b.s.size();
    return a.s < b.s;
  });
  return out;
}

std::optional<TypeCSet> typec_try_admissible(const CominusculeData& cd, const WeylElement& v,
                                             const std::vector<RootId>& s, std::string* why) {
  const RootSystem& rs = cd.system();
  if (rs.type() != Type::C) fail("admissible sets with X/Z partition are a type C notion");
  auto reject = [&](const std::string& msg) -> std::optional<TypeCSet> {
    if (why) *why = msg;
    return std::nullopt;
  };

  std::vector<RootId> pp = phi_plus_of(cd, v);
  TypeCSet t;
  t.v = v;
  t.s = s;
  std::sort(t.s.begin(), t.s.end());
  for (size_t i = 0; i + 1 < t.s.size(); ++i)
    if (t.s[i] == t.s[i + 1]) fail("duplicate root in S");
  for (RootId r : t.s)
    if (!set_contains(pp, r)) return reject("S is not contained in Phi+(v)");

  // X(S) = S_s u { long beta orthogonal to S_s }; the partition is unique.
  std::vector<RootId> shorts;
  for (RootId r : t.s)
    if (rs.is_short(r)) shorts.push_back(r);
  for (RootId r : t.s) {
    if (rs.is_short(r)) {
      t.x_part.push_back(r);
      continue;
    }
    bool orth = true;
    for (RootId a : shorts)
      if (rs.dot(r, a) != 0) {
        orth = false;
        break;
      }
    (orth ? t.x_part : t.z_part).push_back(r);
  }
  if (!is_orthogonal_set(rs, t.x_part)) return reject("X(S) is not orthogonal");

  for (RootId beta : t.z_part) {
    RootId padded = -1;
    for (RootId alpha : t.x_part) {
      auto d = root_diff(rs, beta, alpha);
      if (d && rs.is_positive(*d) && cd.in_phi_p[*d]) {
        if (padded != -1) throw std::logic_error("pad is not unique for an admissible set");
        padded = alpha;
      }
    }
    if (padded == -1)
      return reject("long root " + std::to_string(beta) +
                    " in Z(S) is not pad + gamma for any pad in X(S), gamma in Phi_P^+");
    t.pad.emplace_back(beta, padded);
  }
  return t;
}

TypeCSet typec_admissible(const CominusculeData& cd, const WeylElement& v,
                          const std::vector<RootId>& s) {
  std::string why;
  auto t = typec_try_admissible(cd, v, s, &why);
  if (!t) fail("set is not admissible: " + why);
  return *t;
}

namespace {

RootId pad_of(const TypeCSet& t, RootId z) {
  for (auto& [b, p] : t.pad)
    if (b == z) return p;
  throw std::logic_error("pad lookup outside Z(S)");
}

// Candidates for both completion rules are successors of short roots of S
// that lie in Phi+(v) and not already in S.
std::vector<std::pair<RootId, RootId>> completion_candidates(const CominusculeData& cd,
                                                             const TypeCSet& t) {
  const RootSystem& rs = cd.system();
  std::vector<RootId> pp = phi_plus_of(cd, t.v);
  std::vector<std::pair<RootId, RootId>> out;  // (beta = suc(alpha), alpha)
  for (RootId alpha : t.s) {
    if (!rs.is_short(alpha)) continue;
    RootId beta = suc(cd, alpha);
    if (set_contains(t.s, beta) || !set_contains(pp, beta)) continue;
    out.emplace_back(beta, alpha);
  }
  return out;
}

}  // namespace

std::vector<RootId> typec_a_set(const CominusculeData& cd, const TypeCSet& t) {
  const RootSystem& rs = cd.system();
  std::vector<RootId> out;
  for (auto [beta, alpha] : completion_candidates(cd, t)) {
    for (RootId gamma : t.x_part) {
      if (!rs.is_long(gamma)) continue;
      if (rs.root_leq(gamma, beta) && gamma != beta && !rs.root_leq(gamma, alpha)) {
        out.push_back(beta);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootId> typec_b_set(const CominusculeData& cd, const TypeCSet& t) {
  const RootSystem& rs = cd.system();
  std::vector<RootId> out;
  for (auto [beta, alpha] : completion_candidates(cd, t)) {
    for (RootId gamma : t.z_part) {
      if (rs.root_leq(gamma, beta) && gamma != beta && !rs.root_leq(pad_of(t, gamma), alpha)) {
        out.push_back(beta);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TypeCSet typec_completion(const CominusculeData& cd, const TypeCSet& t) {
  TypeCSet cur = t;
  for (int pass = 0;; ++pass) {
    std::vector<RootId> add = typec_a_set(cd, cur);
    std::vector<RootId> b = typec_b_set(cd, cur);
    add.insert(add.end(), b.begin(), b.end());
    std::sort(add.begin(), add.end());
    add.erase(std::unique(add.begin(), add.end()), add.end());
    if (add.empty()) return cur;
    // One pass reaches the fixed point; a second round of additions would
    // contradict the closure theorem.
    if (pass > 0) throw std::logic_error("completion needed more than one pass");
    std::vector<RootId> s = cur.s;
    s.insert(s.end(), add.begin(), add.end());
    cur = typec_admissible(cd, cur.v, s);
  }
}

bool typec_is_full_admissible(const CominusculeData& cd, const WeylElement& v,
                              const std::vector<RootId>& s) {
  auto t = typec_try_admissible(cd, v, s);
  if (!t) return false;
  return typec_a_set(cd, *t).empty() && typec_b_set(cd, *t).empty();
}

namespace {

template <typename Keep>
std::vector<TypeCSet> typec_enumerate_filtered(const CominusculeData& cd, const WeylElement& v,
                                               EnumStrategy strategy, Keep keep) {
  const RootSystem& rs = cd.system();
  std::vector<RootId> pp = phi_plus_of(cd, v);
  std::vector<TypeCSet> out;

  bool filter = strategy == EnumStrategy::Filter ||
                (strategy == EnumStrategy::Auto && pp.size() <= 20);
  if (filter && pp.size() > 25) fail("subset filter over more than 2^25 sets; use Incremental");
  if (filter) {
    // Exhaustive subset filter.
    for (std::uint32_t mask = 0; mask < (1u << pp.size()); ++mask) {
      std::vector<RootId> s;
      for (size_t j = 0; j < pp.size(); ++j)
        if (mask & (1u << j)) s.push_back(pp[j]);
      auto t = typec_try_admissible(cd, v, s);
      if (t && keep(*t)) out.push_back(std::move(*t));
    }
  } else {
    // Incremental generation: an admissible set is an orthogonal X plus any
    // set Z of successors of short members of X that stay inside Phi+(v).
    for (auto& x : enumerate_orthogonal_subsets(cd, v)) {
      std::vector<RootId> cands;
      for (RootId alpha : x) {
        if (!rs.is_short(alpha)) continue;
        RootId beta = suc(cd, alpha);
        if (std::binary_search(pp.begin(), pp.end(), beta) &&
            !std::binary_search(x.begin(), x.end(), beta))
          cands.push_back(beta);
      }
      std::sort(cands.begin(), cands.end());
      for (std::uint32_t mask = 0; mask < (1u << cands.size()); ++mask) {
        std::vector<RootId> s = x;
        for (size_t j = 0; j < cands.size(); ++j)
          if (mask & (1u << j)) s.push_back(cands[j]);
        std::sort(s.begin(), s.end());
        auto t = typec_try_admissible(cd, v, s);
        if (!t) throw std::logic_error("incremental generation produced a non-admissible set");
        if (keep(*t)) out.push_back(std::move(*t));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const TypeCSet& a, const TypeCSet& b) {
    if (a.s.size() != b.s.size()) return a.s.size() < b.s.size();
    return a.s < b.s;
  });
  return out;
}

}  // namespace

std::vector<TypeCSet> typec_enumerate_admissible(const CominusculeData& cd, const WeylElement& v,
                                                 EnumStrategy strategy) {
  return typec_enumerate_filtered(cd, v, strategy, [](const TypeCSet&) { return true; });
}

std::vector<TypeCSet> typec_enumerate_full_admissible(const CominusculeData& cd,
                                                      const WeylElement& v,
                                                      EnumStrategy strategy) {
  return typec_enumerate_filtered(cd, v, strategy, [&](const TypeCSet& t) {
    return typec_a_set(cd, t).empty() && typec_b_set(cd, t).empty();
  });
}

bool typec_is_essential(const CominusculeData& cd, const TypeCSet& t, RootId beta) {
  if (!set_contains(t.z_part, beta)) fail("essential roots are elements of Z(S)");
  TypeCSet smaller = typec_admissible(cd, t.v, set_minus(t.s, beta));
  TypeCSet closed = typec_completion(cd, smaller);
  return !set_contains(closed.s, beta);
}

}  // namespace borbits
