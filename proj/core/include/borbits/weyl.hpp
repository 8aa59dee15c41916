#pragma once

// Weyl group elements as isometries of the root lattice, represented by an
// integer matrix in the simple-root basis (column j = image of alpha_j).
// Composition and the action on roots are small integer matrix products,
// and equality of matrices is the canonical equality test. Reduced words
// are recovered on demand from descents.

#include <vector>

#include "borbits/root_system.hpp"

namespace borbits {

using Word = std::vector<int>;  // 1-based simple indices, base order

class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(int rank);

  int rank() const { return rank_; }
  bool is_identity() const;

  // Entry (i,j): coefficient of alpha_i in the image of alpha_j.
  int entry(int i, int j) const { return m_[i * rank_ + j]; }
  int& entry(int i, int j) { return m_[i * rank_ + j]; }

  // Image of a vector written in the simple basis.
  std::vector<int> apply(const std::vector<int>& delta) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rank_ == b.rank_ && a.m_ == b.m_;
  }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.m_ < b.m_; }

 private:
  int rank_ = 0;
  std::vector<int> m_;
};

WeylElement simple_reflection(const RootSystem& rs, int simple_index);  // 0-based
WeylElement reflection(const RootSystem& rs, RootId beta);

RootId act(const RootSystem& rs, const WeylElement& w, RootId r);
bool sends_negative(const RootSystem& rs, const WeylElement& w, RootId r);

// compose(w, u) = w o u (first u, then w).
WeylElement compose(const WeylElement& w, const WeylElement& u);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

int length(const RootSystem& rs, const WeylElement& w);
// {alpha in Phi+ | w(alpha) < 0}, in RootId order; its size is length(w).
std::vector<RootId> inversion_set(const RootSystem& rs, const WeylElement& w);

bool left_descent(const RootSystem& rs, const WeylElement& w, int simple_index);
bool right_descent(const RootSystem& rs, const WeylElement& w, int simple_index);

// Lexicographically first reduced word built from right descents.
Word reduced_word(const RootSystem& rs, const WeylElement& w);
// Multiplies out a word and rejects it when it is not reduced.
WeylElement element_from_word(const RootSystem& rs, const Word& word);
// Same, but without the reduced check (for internal products).
WeylElement product_of_word(const RootSystem& rs, const Word& word);

// Bruhat order via the descent recursion: pick alpha with s_a w < w; descend
// to (s_a u, s_a w) when s_a u < u and to (u, s_a w) otherwise.
bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w);

// The whole group, sorted by (length, matrix). Intended for small rank.
std::vector<WeylElement> all_elements(const RootSystem& rs);

// Minimal coset representatives of W/W_P: breadth-first closure from the
// identity under left multiplication by simple reflections, keeping the
// elements with Phi+(w) inside Psi. Sorted by length, ties broken by the
// root order of inversion sets; the output ordering is part of the contract.
std::vector<WeylElement> enumerate_wp(const CominusculeData& cd);

bool in_wp(const CominusculeData& cd, const WeylElement& w);
// Representative of w W_P in W^P.
WeylElement coset_rep_p(const CominusculeData& cd, const WeylElement& w);
// The maximal element, identified by Phi+(w) = Psi.
WeylElement omega_p(const CominusculeData& cd);

}  // namespace borbits
