#include "borbits/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace borbits {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

int vdot(const Coords& a, const Coords& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

std::vector<Coords> simple_basis(Type type, int rank, int* ambient_dim) {
  std::vector<Coords> delta;
  auto unit = [&](int i, int dim) {
    Coords c(dim, 0);
    c[i] = 1;
    return c;
  };
  switch (type) {
    case Type::A: {
      if (rank < 1) fail("type A requires rank >= 1");
      *ambient_dim = rank + 1;
      for (int i = 0; i < rank; ++i) {
        Coords c(rank + 1, 0);
        c[i] = 1;
        c[i + 1] = -1;
        delta.push_back(c);
      }
      break;
    }
    case Type::B: {
      if (rank < 2) fail("type B requires rank >= 2");
      *ambient_dim = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        Coords c(rank, 0);
        c[i] = 1;
        c[i + 1] = -1;
        delta.push_back(c);
      }
      delta.push_back(unit(rank - 1, rank));
      break;
    }
    case Type::C: {
      if (rank < 2) fail("type C requires rank >= 2");
      *ambient_dim = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        Coords c(rank, 0);
        c[i] = 1;
        c[i + 1] = -1;
        delta.push_back(c);
      }
      Coords c(rank, 0);
      c[rank - 1] = 2;
      delta.push_back(c);
      break;
    }
    case Type::D: {
      if (rank < 4) fail("type D requires rank >= 4");
      *ambient_dim = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        Coords c(rank, 0);
        c[i] = 1;
        c[i + 1] = -1;
        delta.push_back(c);
      }
      Coords c(rank, 0);
      c[rank - 2] = 1;
      c[rank - 1] = 1;
      delta.push_back(c);
      break;
    }
    case Type::E6:
    case Type::E7: {
      int want = type == Type::E6 ? 6 : 7;
      if (rank != want) fail("type " + type_name(type) + " has fixed rank " + std::to_string(want));
      *ambient_dim = 8;
      // Doubled so every entry is an integer; norms are uniformly 8.
      delta = {
          {1, -1, -1, -1, -1, -1, -1, 1},
          {2, 2, 0, 0, 0, 0, 0, 0},
          {-2, 2, 0, 0, 0, 0, 0, 0},
          {0, -2, 2, 0, 0, 0, 0, 0},
          {0, 0, -2, 2, 0, 0, 0, 0},
          {0, 0, 0, -2, 2, 0, 0, 0},
      };
      if (type == Type::E7) delta.push_back({0, 0, 0, 0, -2, 2, 0, 0});
      break;
    }
  }
  return delta;
}

}  // namespace

std::string type_name(Type t) {
  switch (t) {
    case Type::A: return "A";
    case Type::B: return "B";
    case Type::C: return "C";
    case Type::D: return "D";
    case Type::E6: return "E6";
    case Type::E7: return "E7";
  }
  return "?";
}

std::string system_label(Type t, int rank) {
  if (t == Type::E6 || t == Type::E7) return type_name(t);
  return type_name(t) + std::to_string(rank);
}

Type parse_type(const std::string& s) {
  if (s == "A" || s == "a") return Type::A;
  if (s == "B" || s == "b") return Type::B;
  if (s == "C" || s == "c") return Type::C;
  if (s == "D" || s == "d") return Type::D;
  if (s == "E6" || s == "e6") return Type::E6;
  if (s == "E7" || s == "e7") return Type::E7;
  fail("unsupported type '" + s +
       "': no parabolic subgroup with abelian unipotent radical (supported: A, B, C, D, E6, E7)");
}

bool RootSystem::simply_laced() const {
  return type_ == Type::A || type_ == Type::D || type_ == Type::E6 || type_ == Type::E7;
}

RootSystem RootSystem::build(Type type, int rank) {
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  std::vector<Coords> delta = simple_basis(type, rank, &rs.ambient_dim_);

  // Closure of the base under simple reflections. Each root is carried
  // together with its expansion in the simple basis.
  std::map<Coords, std::vector<int>> known;
  std::vector<Coords> work;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    known.emplace(delta[i], e);
    work.push_back(delta[i]);
  }
  std::vector<int> simple_norm(rank);
  for (int i = 0; i < rank; ++i) simple_norm[i] = vdot(delta[i], delta[i]);

  while (!work.empty()) {
    Coords g = work.back();
    work.pop_back();
    std::vector<int> gd = known.at(g);
    for (int i = 0; i < rank; ++i) {
      int num = 2 * vdot(g, delta[i]);
      if (num % simple_norm[i] != 0) fail("non-crystallographic pairing encountered");
      int p = num / simple_norm[i];
      if (p == 0) continue;
      Coords h(g.size());
      for (size_t k = 0; k < g.size(); ++k) h[k] = g[k] - p * delta[i][k];
      std::vector<int> hd = gd;
      hd[i] -= p;
      if (known.emplace(h, hd).second) work.push_back(h);
    }
  }

  for (auto& [c, d] : known) {
    rs.coords_.push_back(c);
    rs.delta_.push_back(d);
  }
  int n = rs.num_roots();
  rs.norm2_.resize(n);
  rs.positive_.resize(n);
  rs.neg_.resize(n);
  rs.max_norm2_ = 0;
  for (RootId r = 0; r < n; ++r) {
    rs.norm2_[r] = vdot(rs.coords_[r], rs.coords_[r]);
    rs.max_norm2_ = std::max(rs.max_norm2_, rs.norm2_[r]);
    bool any_pos = false, any_neg = false;
    for (int c : rs.delta_[r]) {
      if (c > 0) any_pos = true;
      if (c < 0) any_neg = true;
    }
    if (any_pos == any_neg) fail("mixed-sign root expansion: base is not a valid base");
    rs.positive_[r] = any_pos;
    if (rs.positive_[r]) rs.positives_.push_back(r);
  }
  for (RootId r = 0; r < n; ++r) {
    Coords m = rs.coords_[r];
    for (int& x : m) x = -x;
    auto it = std::lower_bound(rs.coords_.begin(), rs.coords_.end(), m);
    if (it == rs.coords_.end() || *it != m) fail("root set not closed under negation");
    rs.neg_[r] = static_cast<RootId>(it - rs.coords_.begin());
  }
  for (int i = 0; i < rank; ++i) rs.simples_.push_back(rs.root_of(delta[i]));

  rs.theta_ = -1;
  for (RootId r : rs.positives_) {
    bool maximal = true;
    for (RootId s : rs.positives_) {
      if (s != r && !rs.root_leq(s, r)) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      if (rs.theta_ != -1) fail("highest root is not unique: system is reducible");
      rs.theta_ = r;
    }
  }
  if (rs.theta_ == -1) fail("no highest root found");
  return rs;
}

std::optional<RootId> RootSystem::find(const Coords& c) const {
  auto it = std::lower_bound(coords_.begin(), coords_.end(), c);
  if (it == coords_.end() || *it != c) return std::nullopt;
  return static_cast<RootId>(it - coords_.begin());
}

std::optional<RootId> RootSystem::find_delta(const std::vector<int>& d) const {
  Coords c(ambient_dim_, 0);
  for (int i = 0; i < rank_; ++i) {
    if (d[i] == 0) continue;
    const Coords& a = coords_[simples_[i]];
    for (int k = 0; k < ambient_dim_; ++k) c[k] += d[i] * a[k];
  }
  return find(c);
}

RootId RootSystem::root_of(const Coords& c) const {
  auto r = find(c);
  if (!r) fail("not a root of " + system_label(type_, rank_));
  return *r;
}

int RootSystem::dot(RootId a, RootId b) const {
  return vdot(coords_.at(a), coords_.at(b));
}

int RootSystem::pairing(RootId beta, RootId alpha) const {
  int num = 2 * dot(beta, alpha);
  if (num % norm2_.at(alpha) != 0) fail("non-integral pairing");
  return num / norm2_.at(alpha);
}

int RootSystem::coefficient(RootId gamma, int simple_index) const {
  if (simple_index < 0 || simple_index >= rank_) fail("simple index out of range");
  return delta_.at(gamma)[simple_index];
}

bool RootSystem::root_leq(RootId a, RootId b) const {
  const auto& da = delta_.at(a);
  const auto& db = delta_.at(b);
  for (int i = 0; i < rank_; ++i)
    if (db[i] < da[i]) return false;
  return true;
}

bool is_orthogonal_set(const RootSystem& rs, const std::vector<RootId>& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (rs.dot(s[i], s[j]) != 0) return false;
  return true;
}

bool is_strongly_orthogonal_set(const RootSystem& rs, const std::vector<RootId>& s) {
  if (!is_orthogonal_set(rs, s)) return false;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) {
      Coords sum = rs.coords(s[i]);
      Coords dif = rs.coords(s[i]);
      const Coords& b = rs.coords(s[j]);
      for (size_t k = 0; k < sum.size(); ++k) {
        sum[k] += b[k];
        dif[k] -= b[k];
      }
      if (rs.find(sum) || rs.find(dif)) return false;
    }
  return true;
}

std::vector<RootId> cominuscule_simple_roots(const RootSystem& rs) {
  std::vector<RootId> out;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.coefficient(rs.highest_root(), i) == 1) out.push_back(rs.simples()[i]);
  return out;
}

CominusculeData build_cominuscule_data(const RootSystem& rs, RootId alpha_p) {
  auto candidates = cominuscule_simple_roots(rs);
  if (std::find(candidates.begin(), candidates.end(), alpha_p) == candidates.end())
    fail("alpha_p is not a cominuscule simple root of " + type_name(rs.type()));
  CominusculeData cd;
  cd.rs = &rs;
  cd.alpha_p = alpha_p;
  cd.theta = rs.highest_root();
  for (int i = 0; i < rs.rank(); ++i) {
    if (rs.simples()[i] == alpha_p)
      cd.alpha_p_index = i;
    else
      cd.delta_p.push_back(i);
  }
  cd.in_psi.assign(rs.num_roots(), false);
  cd.in_phi_p.assign(rs.num_roots(), false);
  for (RootId r = 0; r < rs.num_roots(); ++r) {
    int c = rs.coefficient(r, cd.alpha_p_index);
    if (c == 0) {
      cd.in_phi_p[r] = true;
      if (rs.is_positive(r)) cd.phi_p_pos.push_back(r);
    } else if (rs.is_positive(r)) {
      if (c != 1) fail("alpha_p coefficient exceeds 1: not cominuscule");
      cd.in_psi[r] = true;
      cd.psi.push_back(r);
    }
  }
  return cd;
}

RootId suc(const CominusculeData& cd, RootId alpha) {
  const RootSystem& rs = cd.system();
  if (rs.type() != Type::C) fail("suc is defined for type C only");
  if (alpha < 0 || alpha >= rs.num_roots() || !cd.in_psi[alpha]) fail("suc: root not in Psi");
  if (rs.is_long(alpha)) return alpha;
  // alpha = e_i + e_j with i < j; the larger non-orthogonal long root is 2e_i.
  const Coords& c = rs.coords(alpha);
  Coords out(c.size(), 0);
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 1) {
      out[k] = 2;
      break;
    }
  }
  return rs.root_of(out);
}

}  // namespace borbits
