#include "borbits/order_dim.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>

namespace borbits {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

bool set_contains(const std::vector<RootId>& s, RootId r) {
  return std::binary_search(s.begin(), s.end(), r);
}

std::vector<RootId> set_plus(const std::vector<RootId>& s, RootId r) {
  std::vector<RootId> out = s;
  out.insert(std::lower_bound(out.begin(), out.end(), r), r);
  return out;
}

std::optional<RootId> root_diff(const RootSystem& rs, RootId a, RootId b) {
  Coords c = rs.coords(a);
  const Coords& d = rs.coords(b);
  for (size_t k = 0; k < c.size(); ++k) c[k] -= d[k];
  return rs.find(c);
}

std::optional<RootId> root_sum(const RootSystem& rs, RootId a, RootId b) {
  Coords c = rs.coords(a);
  const Coords& d = rs.coords(b);
  for (size_t k = 0; k < c.size(); ++k) c[k] += d[k];
  return rs.find(c);
}

void check_admissible(const CominusculeData& cd, const AdmissiblePair& p) {
  std::vector<RootId> pp = phi_plus_of(cd, p.v);
  for (RootId r : p.s)
    if (!set_contains(pp, r)) fail("S is not contained in Phi+(v)");
  if (!is_orthogonal_set(cd.system(), p.s)) fail("S is not orthogonal");
}

bool orthogonal_to_all(const RootSystem& rs, const std::vector<RootId>& s, RootId r) {
  for (RootId x : s)
    if (rs.dot(x, r) != 0) return false;
  return true;
}

}  // namespace

OrbitParam to_orbit_param(const AdmissiblePair& p) { return OrbitParam{p.v, p.s, {}, {}, {}, false}; }

OrbitParam to_orbit_param(const TypeBParam& p) {
  return OrbitParam{p.v, p.s, {}, {}, {}, p.special_pair};
}

OrbitParam to_orbit_param(const TypeCSet& t) {
  return OrbitParam{t.v, t.s, t.x_part, t.z_part, t.pad, false};
}

Involution sigma_of_image(const CominusculeData& cd, const WeylElement& v,
                          const std::vector<RootId>& s) {
  const RootSystem& rs = cd.system();
  std::vector<RootId> image;
  for (RootId r : s) image.push_back(act(rs, v, r));
  return sigma_from_set(rs, image);
}

bool pair_leq(const CominusculeData& cd, const AdmissiblePair& a, const AdmissiblePair& b) {
  const RootSystem& rs = cd.system();
  check_admissible(cd, a);
  check_admissible(cd, b);
  Involution sa = sigma_of_image(cd, a.v, a.s);
  Involution sb = sigma_of_image(cd, b.v, b.s);
  if (!bruhat_leq(rs, sa.w, sb.w)) return false;
  if (!bruhat_leq(rs, a.v, b.v)) return false;
  WeylElement u_sigma = compose(a.v, sigma_from_set(rs, a.s).w);
  WeylElement v_sigma = compose(b.v, sigma_from_set(rs, b.s).w);
  WeylElement rep_u = coset_rep_p(cd, u_sigma);
  WeylElement rep_v = coset_rep_p(cd, v_sigma);
  if (!bruhat_leq(rs, rep_u, a.v)) return false;  // always true; evaluated, not assumed
  return bruhat_leq(rs, rep_v, rep_u);
}

AdmissiblePair m_alpha(const CominusculeData& cd, int simple_index, const AdmissiblePair& p) {
  const RootSystem& rs = cd.system();
  if (!rs.simply_laced()) fail("m_alpha acts on simply laced admissible pairs");
  if (simple_index < 0 || simple_index >= rs.rank()) fail("simple index out of range");
  check_admissible(cd, p);
  RootId alpha = rs.simples()[simple_index];

  Involution sigma = sigma_of_image(cd, p.v, p.s);
  if (sends_negative(rs, sigma.w, alpha)) return p;  // fixed point

  RootId beta = act(rs, inverse(rs, p.v), alpha);
  if (!rs.is_positive(beta)) {
    // s_a v < v: attach -beta below v when possible.
    RootId nb = rs.negate(beta);
    if (!set_contains(p.s, nb) && orthogonal_to_all(rs, p.s, nb))
      return {p.v, set_plus(p.s, nb)};
    return p;
  }
  if (cd.in_psi[beta]) {
    // v < s_a v in W^P: move up, attaching beta when possible.
    WeylElement up = compose(simple_reflection(rs, simple_index), p.v);
    if (orthogonal_to_all(rs, p.s, beta)) return {up, set_plus(p.s, beta)};
    return {up, p.s};
  }

  // beta in Delta_P: a positive Levi root hit by a simple root is simple.
  int weight = 0;
  for (int c : rs.delta_coords(beta)) weight += c;
  if (!cd.in_phi_p[beta] || weight != 1)
    throw std::logic_error("v^{-1}(alpha) is neither in +-Psi nor a simple Levi root");
  WeylElement sb = reflection(rs, beta);
  std::vector<RootId> reflected;
  for (RootId r : p.s) reflected.push_back(act(rs, sb, r));
  std::sort(reflected.begin(), reflected.end());
  if (reflected != p.s) return {p.v, reflected};

  // s_beta fixes S pointwise. At most one gamma in S admits gamma - beta
  // and at most one delta admits delta + beta.
  RootId gamma = -1, delta = -1;
  for (RootId r : p.s) {
    if (gamma == -1 && root_diff(rs, r, beta)) gamma = r;
    if (delta == -1 && root_sum(rs, r, beta)) delta = r;
  }
  if (gamma == -1) return p;
  RootId gm = *root_diff(rs, gamma, beta);
  if (delta == -1) {
    std::vector<RootId> s = p.s;
    s.erase(std::remove(s.begin(), s.end(), gamma), s.end());
    return {p.v, set_plus(s, gm)};
  }
  auto tau = root_diff(rs, gm, delta);  // gamma - beta - delta, a Phi_P root
  if (!tau) throw std::logic_error("gamma - beta - delta is not a root");
  if (rs.is_positive(*tau)) return p;
  std::vector<RootId> s = p.s;
  s.erase(std::remove_if(s.begin(), s.end(), [&](RootId r) { return r == gamma || r == delta; }),
          s.end());
  return {p.v, set_plus(set_plus(s, gm), *root_sum(rs, delta, beta))};
}

std::vector<AdmissiblePair> m_alpha_fiber(const CominusculeData& cd, int simple_index,
                                          const AdmissiblePair& p,
                                          const std::vector<AdmissiblePair>& all) {
  std::vector<AdmissiblePair> out;
  for (const AdmissiblePair& q : all)
    if (!(q == p) && m_alpha(cd, simple_index, q) == p) out.push_back(q);
  return out;
}

int dim_simply_laced(const CominusculeData& cd, const AdmissiblePair& p) {
  check_admissible(cd, p);
  return static_cast<int>(cd.psi.size()) + inv_length(sigma_of_image(cd, p.v, p.s));
}

int dim_typec(const CominusculeData& cd, const TypeCSet& t) {
  const RootSystem& rs = cd.system();
  if (!typec_a_set(cd, t).empty() || !typec_b_set(cd, t).empty())
    fail("dimension formula requires a full admissible set");
  // Only short members whose successor lies in Phi+(v) are subtracted; at
  // v = omega^P that is all of S_s. Counting every short root would disagree
  // with the Y description below the top cell.
  std::vector<RootId> pp = phi_plus_of(cd, t.v);
  int shorts = 0;
  for (RootId r : t.s)
    if (rs.is_short(r) && set_contains(pp, suc(cd, r))) ++shorts;
  int l = inv_length(sigma_of_image(cd, t.v, t.x_part));
  return static_cast<int>(cd.psi.size()) + l - shorts + static_cast<int>(t.z_part.size());
}

int dim_typeb(const CominusculeData& cd, const TypeBParam& p) {
  const RootSystem& rs = cd.system();
  if (rs.type() != Type::B) fail("H formula applies to type B");
  std::vector<RootId> pp = phi_plus_of(cd, p.v);
  for (RootId r : p.s)
    if (!set_contains(pp, r)) fail("S is not contained in Phi+(v)");
  RootId a0 = typeb_short_root(cd);
  int psi = static_cast<int>(cd.psi.size());

  auto count_between = [&](RootId lo, std::optional<RootId> hi) {
    int n = 0;
    for (RootId r : pp) {
      if (r == lo || !rs.root_leq(lo, r)) continue;
      if (hi && (r == *hi || !rs.root_leq(r, *hi))) continue;
      ++n;
    }
    return n;
  };

  if (p.s == std::vector<RootId>{a0}) {
    int l = inv_length(sigma_of_image(cd, p.v, {a0}));
    return psi + l - count_between(a0, std::nullopt);
  }
  if (p.special_pair || !is_orthogonal_set(rs, p.s)) {
    if (p.s.size() != 2 || !set_contains(p.s, a0)) fail("S is not in the family H_v");
    RootId g = p.s[0] == a0 ? p.s[1] : p.s[0];
    auto diff = root_diff(rs, g, a0);
    if (!diff || !rs.is_positive(*diff) || !cd.in_phi_p[*diff]) fail("S is not in the family H_v");
    int l = inv_length(sigma_of_image(cd, p.v, {a0}));
    return psi + l - count_between(a0, g);
  }
  return psi + inv_length(sigma_of_image(cd, p.v, p.s));
}

YSet y_typec(const CominusculeData& cd, const TypeCSet& t) {
  const RootSystem& rs = cd.system();
  if (!typec_a_set(cd, t).empty() || !typec_b_set(cd, t).empty())
    fail("Y is stated for full admissible sets");
  YSet y{t.v, t.s, {}};
  for (RootId beta : phi_plus_of(cd, t.v)) {
    bool in = set_contains(t.s, beta);
    if (!in && rs.is_short(beta)) {
      for (RootId alpha : t.x_part) {
        auto d = root_diff(rs, beta, alpha);
        if (d && rs.is_positive(*d)) {
          in = true;
          break;
        }
      }
    }
    if (in) y.members.push_back(beta);
  }
  return y;
}

YSet y_char_ne2(const CominusculeData& cd, const WeylElement& v, const std::vector<RootId>& s) {
  const RootSystem& rs = cd.system();
  std::vector<RootId> pp = phi_plus_of(cd, v);
  for (RootId r : s)
    if (!set_contains(pp, r)) fail("S is not contained in Phi+(v)");
  if (!is_orthogonal_set(rs, s)) fail("S is not orthogonal");
  YSet y{v, s, {}};
  for (RootId beta : pp) {
    bool in = set_contains(s, beta);
    if (!in) {
      for (RootId alpha : s) {
        auto d = root_diff(rs, beta, alpha);
        if (d && rs.is_positive(*d)) {
          in = true;
          break;
        }
      }
    }
    if (in) y.members.push_back(beta);
  }
  return y;
}

namespace {

// Covers: related pairs with no intermediate node. Word-packed rows and
// columns keep this O(n^2 * n/64).
std::vector<std::pair<int, int>> transitive_reduction(const std::vector<std::vector<bool>>& leq) {
  int n = static_cast<int>(leq.size());
  int words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> row(n, std::vector<std::uint64_t>(words, 0));
  std::vector<std::vector<std::uint64_t>> col(n, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j]) {
        row[i][j / 64] |= 1ull << (j % 64);
        col[j][i / 64] |= 1ull << (i % 64);
      }
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool through = false;
      for (int w = 0; w < words && !through; ++w)
        if (row[i][w] & col[j][w]) through = true;
      if (!through) covers.emplace_back(i, j);
    }
  return covers;
}

OrbitPoset finish_poset(OrbitPoset p) {
  int n = static_cast<int>(p.params.size());
  for (int i = 0; i < n; ++i) {
    if (!p.leq[i][i]) throw std::logic_error("order relation is not reflexive");
    for (int j = 0; j < n; ++j)
      if (i != j && p.leq[i][j] && p.leq[j][i])
        throw std::logic_error("order relation is not antisymmetric");
  }
  p.covers = transitive_reduction(p.leq);
  return p;
}

}  // namespace

OrbitPoset build_poset(const CominusculeData& cd) {
  OrbitPoset p;
  std::vector<AdmissiblePair> pairs = enumerate_admissible_pairs(cd);
  int n = static_cast<int>(pairs.size());
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    p.params.push_back(to_orbit_param(pairs[i]));
    p.dims.push_back(dim_simply_laced(cd, pairs[i]));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.leq[i][j] = pair_leq(cd, pairs[i], pairs[j]);
  return finish_poset(std::move(p));
}

namespace {

// The deford-shaped relation evaluated through the orthogonal part X(S).
bool x_part_leq(const CominusculeData& cd, const OrbitParam& a, const std::vector<RootId>& xa,
                const OrbitParam& b, const std::vector<RootId>& xb) {
  const RootSystem& rs = cd.system();
  Involution sa = sigma_of_image(cd, a.v, xa);
  Involution sb = sigma_of_image(cd, b.v, xb);
  if (!bruhat_leq(rs, sa.w, sb.w)) return false;
  if (!bruhat_leq(rs, a.v, b.v)) return false;
  WeylElement rep_u = coset_rep_p(cd, compose(a.v, sigma_from_set(rs, xa).w));
  WeylElement rep_v = coset_rep_p(cd, compose(b.v, sigma_from_set(rs, xb).w));
  if (!bruhat_leq(rs, rep_u, a.v)) return false;
  return bruhat_leq(rs, rep_v, rep_u);
}

std::vector<RootId> x_part_of(const CominusculeData& cd, const OrbitParam& p) {
  if (cd.system().type() == Type::C) return p.x_part;
  if (p.typeb_special) return {typeb_short_root(cd)};
  return p.s;
}

}  // namespace

OrbitPoset build_conjectural_poset(const CominusculeData& cd) {
  const RootSystem& rs = cd.system();
  OrbitPoset p;
  p.conjectural = true;
  if (rs.type() == Type::C) {
    for (const WeylElement& v : enumerate_wp(cd))
      for (const TypeCSet& t : typec_enumerate_full_admissible(cd, v)) {
        p.params.push_back(to_orbit_param(t));
        p.dims.push_back(dim_typec(cd, t));
      }
  } else if (rs.type() == Type::B) {
    for (const WeylElement& v : enumerate_wp(cd))
      for (const TypeBParam& t : typeb_enumerate(cd, v)) {
        p.params.push_back(to_orbit_param(t));
        p.dims.push_back(dim_typeb(cd, t));
      }
  } else {
    return build_poset(cd);
  }
  int n = static_cast<int>(p.params.size());
  // The sigma_{v(X)} chain alone identifies all parameters with the same
  // (v, X); order those fibers by inclusion of the remaining long roots so
  // the relation stays antisymmetric.
  std::vector<std::vector<RootId>> xs(n), extra(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = x_part_of(cd, p.params[i]);
    std::set_difference(p.params[i].s.begin(), p.params[i].s.end(), xs[i].begin(), xs[i].end(),
                        std::back_inserter(extra[i]));
  }
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool same_fiber = p.params[i].v == p.params[j].v && xs[i] == xs[j];
      if (same_fiber)
        p.leq[i][j] = std::includes(extra[j].begin(), extra[j].end(), extra[i].begin(),
                                    extra[i].end());
      else
        p.leq[i][j] = x_part_leq(cd, p.params[i], xs[i], p.params[j], xs[j]);
    }
  return finish_poset(std::move(p));
}

namespace {

DimTable grade_table(std::vector<std::pair<OrbitParam, int>> rows,
                     const std::vector<WeylElement>& vs) {
  auto v_index = [&](const WeylElement& v) {
    for (size_t i = 0; i < vs.size(); ++i)
      if (vs[i] == v) return i;
    return vs.size();
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    size_t ia = v_index(a.first.v), ib = v_index(b.first.v);
    if (ia != ib) return ia < ib;
    if (a.first.s.size() != b.first.s.size()) return a.first.s.size() < b.first.s.size();
    return a.first.s < b.first.s;
  });
  DimTable t;
  for (auto& [param, dim] : rows) {
    t.params.push_back(std::move(param));
    t.dims.push_back(dim);
  }
  return t;
}

}  // namespace

DimTable typec_dim_table(const CominusculeData& cd, const std::vector<WeylElement>& vs) {
  std::vector<std::pair<OrbitParam, int>> rows;
  for (const WeylElement& v : vs)
    for (const TypeCSet& t : typec_enumerate_full_admissible(cd, v))
      rows.emplace_back(to_orbit_param(t), dim_typec(cd, t));
  return grade_table(std::move(rows), vs);
}

DimTable typeb_dim_table(const CominusculeData& cd, const std::vector<WeylElement>& vs) {
  std::vector<std::pair<OrbitParam, int>> rows;
  for (const WeylElement& v : vs)
    for (const TypeBParam& t : typeb_enumerate(cd, v))
      rows.emplace_back(to_orbit_param(t), dim_typeb(cd, t));
  return grade_table(std::move(rows), vs);
}

DimTable simply_laced_dim_table(const CominusculeData& cd, const std::vector<WeylElement>& vs) {
  std::vector<std::pair<OrbitParam, int>> rows;
  for (const WeylElement& v : vs)
    for (auto& s : enumerate_orthogonal_subsets(cd, v)) {
      AdmissiblePair p{v, std::move(s)};
      rows.emplace_back(to_orbit_param(p), dim_simply_laced(cd, p));
    }
  return grade_table(std::move(rows), vs);
}

}  // namespace borbits
