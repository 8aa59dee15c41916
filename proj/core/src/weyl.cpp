#include "borbits/weyl.hpp"

#include <algorithm>
#include <set>

namespace borbits {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

int delta_sign(const std::vector<int>& d) {
  for (int x : d) {
    if (x > 0) return 1;
    if (x < 0) return -1;
  }
  return 0;
}

}  // namespace

WeylElement WeylElement::identity(int rank) {
  WeylElement w;
  w.rank_ = rank;
  w.m_.assign(rank * rank, 0);
  for (int i = 0; i < rank; ++i) w.entry(i, i) = 1;
  return w;
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (entry(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<int> WeylElement::apply(const std::vector<int>& delta) const {
  std::vector<int> out(rank_, 0);
  for (int j = 0; j < rank_; ++j) {
    int c = delta[j];
    if (c == 0) continue;
    for (int i = 0; i < rank_; ++i) out[i] += c * entry(i, j);
  }
  return out;
}

WeylElement simple_reflection(const RootSystem& rs, int simple_index) {
  if (simple_index < 0 || simple_index >= rs.rank()) fail("simple index out of range");
  return reflection(rs, rs.simples()[simple_index]);
}

WeylElement reflection(const RootSystem& rs, RootId beta) {
  if (beta < 0 || beta >= rs.num_roots()) fail("reflection: not a root");
  int n = rs.rank();
  WeylElement w = WeylElement::identity(n);
  const std::vector<int>& db = rs.delta_coords(beta);
  for (int j = 0; j < n; ++j) {
    int p = rs.pairing(rs.simples()[j], beta);
    if (p == 0) continue;
    for (int i = 0; i < n; ++i) w.entry(i, j) -= p * db[i];
  }
  return w;
}

RootId act(const RootSystem& rs, const WeylElement& w, RootId r) {
  auto out = rs.find_delta(w.apply(rs.delta_coords(r)));
  if (!out) fail("Weyl element does not permute the root set");
  return *out;
}

bool sends_negative(const RootSystem& rs, const WeylElement& w, RootId r) {
  return delta_sign(w.apply(rs.delta_coords(r))) < 0;
}

WeylElement compose(const WeylElement& w, const WeylElement& u) {
  int n = w.rank();
  WeylElement out = WeylElement::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += w.entry(i, k) * u.entry(k, j);
      out.entry(i, j) = s;
    }
  return out;
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  // w permutes the roots; read the preimages of the simple roots off the
  // forward action instead of inverting the matrix.
  int n = rs.rank();
  WeylElement out = WeylElement::identity(n);
  std::vector<int> found(n, 0);
  for (RootId r = 0; r < rs.num_roots(); ++r) {
    std::vector<int> img = w.apply(rs.delta_coords(r));
    for (int j = 0; j < n; ++j) {
      if (found[j]) continue;
      const std::vector<int>& ej = rs.delta_coords(rs.simples()[j]);
      if (img == ej) {
        const std::vector<int>& dr = rs.delta_coords(r);
        for (int i = 0; i < n; ++i) out.entry(i, j) = dr[i];
        found[j] = 1;
      }
    }
  }
  for (int j = 0; j < n; ++j)
    if (!found[j]) fail("Weyl element does not permute the root set");
  return out;
}

int length(const RootSystem& rs, const WeylElement& w) {
  int l = 0;
  for (RootId r : rs.positives())
    if (sends_negative(rs, w, r)) ++l;
  return l;
}

std::vector<RootId> inversion_set(const RootSystem& rs, const WeylElement& w) {
  std::vector<RootId> out;
  for (RootId r : rs.positives())
    if (sends_negative(rs, w, r)) out.push_back(r);
  return out;
}

bool left_descent(const RootSystem& rs, const WeylElement& w, int simple_index) {
  // s_a w < w iff w^{-1}(alpha) < 0 iff alpha = w(gamma) for a negative gamma.
  return sends_negative(rs, inverse(rs, w), rs.simples()[simple_index]);
}

bool right_descent(const RootSystem& rs, const WeylElement& w, int simple_index) {
  return sends_negative(rs, w, rs.simples()[simple_index]);
}

Word reduced_word(const RootSystem& rs, const WeylElement& w) {
  Word out;
  WeylElement cur = w;
  while (!cur.is_identity()) {
    int i = 0;
    while (i < rs.rank() && !right_descent(rs, cur, i)) ++i;
    if (i == rs.rank()) fail("element has no descent but is not the identity");
    cur = compose(cur, simple_reflection(rs, i));
    out.push_back(i + 1);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

WeylElement product_of_word(const RootSystem& rs, const Word& word) {
  WeylElement w = WeylElement::identity(rs.rank());
  for (int i : word) {
    if (i < 1 || i > rs.rank()) fail("word letter out of range: " + std::to_string(i));
    w = compose(w, simple_reflection(rs, i - 1));
  }
  return w;
}

WeylElement element_from_word(const RootSystem& rs, const Word& word) {
  WeylElement w = product_of_word(rs, word);
  if (length(rs, w) != static_cast<int>(word.size()))
    fail("word is not reduced: length " + std::to_string(length(rs, w)) + " != " +
         std::to_string(word.size()) + " letters");
  return w;
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w) {
  WeylElement cu = u, cw = w;
  WeylElement cu_inv = inverse(rs, u), cw_inv = inverse(rs, w);
  int lu = length(rs, cu), lw = length(rs, cw);
  while (true) {
    if (lu > lw) return false;
    if (cw.is_identity()) return cu.is_identity();
    if (cu == cw) return true;
    int i = 0;
    while (i < rs.rank() && !sends_negative(rs, cw_inv, rs.simples()[i])) ++i;
    WeylElement s = simple_reflection(rs, i);
    cw = compose(s, cw);
    cw_inv = compose(cw_inv, s);
    --lw;
    if (sends_negative(rs, cu_inv, rs.simples()[i])) {
      cu = compose(s, cu);
      cu_inv = compose(cu_inv, s);
      --lu;
    }
  }
}

std::vector<WeylElement> all_elements(const RootSystem& rs) {
  std::set<WeylElement> seen;
  std::vector<WeylElement> frontier{WeylElement::identity(rs.rank())};
  seen.insert(frontier[0]);
  std::vector<WeylElement> out = frontier;
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : frontier)
      for (int i = 0; i < rs.rank(); ++i) {
        WeylElement c = compose(simple_reflection(rs, i), w);
        if (seen.insert(c).second) next.push_back(c);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&](const WeylElement& a, const WeylElement& b) {
    int la = length(rs, a), lb = length(rs, b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

bool in_wp(const CominusculeData& cd, const WeylElement& w) {
  const RootSystem& rs = cd.system();
  for (RootId r : rs.positives())
    if (sends_negative(rs, w, r) && !cd.in_psi[r]) return false;
  return true;
}

std::vector<WeylElement> enumerate_wp(const CominusculeData& cd) {
  const RootSystem& rs = cd.system();
  std::set<WeylElement> seen;
  std::vector<WeylElement> frontier{WeylElement::identity(rs.rank())};
  seen.insert(frontier[0]);
  std::vector<WeylElement> out = frontier;
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : frontier)
      for (int i = 0; i < rs.rank(); ++i) {
        WeylElement c = compose(simple_reflection(rs, i), w);
        if (seen.count(c) || !in_wp(cd, c)) continue;
        seen.insert(c);
        next.push_back(c);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&](const WeylElement& a, const WeylElement& b) {
    auto ia = inversion_set(rs, a), ib = inversion_set(rs, b);
    if (ia.size() != ib.size()) return ia.size() < ib.size();
    return ia < ib;
  });
  return out;
}

WeylElement coset_rep_p(const CominusculeData& cd, const WeylElement& w) {
  const RootSystem& rs = cd.system();
  WeylElement cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : cd.delta_p) {
      if (sends_negative(rs, cur, rs.simples()[i])) {
        cur = compose(cur, simple_reflection(rs, i));
        changed = true;
        break;
      }
    }
  }
  return cur;
}

WeylElement omega_p(const CominusculeData& cd) {
  auto wp = enumerate_wp(cd);
  const WeylElement& top = wp.back();
  if (inversion_set(cd.system(), top).size() != cd.psi.size())
    fail("no element with inversion set Psi");
  return top;
}

}  // namespace borbits
