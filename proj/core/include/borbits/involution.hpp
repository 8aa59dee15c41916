#pragma once

// Involutions in W, the sigma_S construction and the circle action
// s_a o sigma, together with the involution length
//   L(sigma) = (l(sigma) + lambda(sigma)) / 2
// where lambda is the dimension of the (-1)-eigenspace of sigma on the
// rational span of the roots (computed by exact integer rank, no floats).

#include <vector>

#include "borbits/root_system.hpp"
#include "borbits/weyl.hpp"

namespace borbits {

struct Involution {
  WeylElement w;
  int l = 0;       // Coxeter length
  int lambda = 0;  // (-1)-eigenspace dimension

  friend bool operator==(const Involution& a, const Involution& b) { return a.w == b.w; }
  friend bool operator<(const Involution& a, const Involution& b) { return a.w < b.w; }
};

// Validates w*w = id and computes l and lambda.
Involution make_involution(const RootSystem& rs, const WeylElement& w);

// sigma_S = product of the reflections through the roots of S; S must be
// pairwise orthogonal so the factors commute. lambda(sigma_S) = |S|.
Involution sigma_from_set(const RootSystem& rs, const std::vector<RootId>& s);

// s_a o sigma = s_a sigma when they commute, s_a sigma s_a otherwise.
Involution circ(const RootSystem& rs, int simple_index, const Involution& sigma);

// L(sigma) = (l + lambda)/2; throws if the sum is odd.
int inv_length(const Involution& sigma);

// All involutions (including the identity), enumerated by filtering W.
std::vector<Involution> involutions_of(const RootSystem& rs);

}  // namespace borbits
