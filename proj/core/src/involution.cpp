#include "borbits/involution.hpp"

#include <cstdint>

#include "exact_rank.hpp"

namespace borbits {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

int minus_one_eigenspace_dim(const WeylElement& w) {
  int n = w.rank();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = w.entry(i, j) + (i == j ? 1 : 0);
  return n - detail::exact_matrix_rank(std::move(m));
}

}  // namespace

Involution make_involution(const RootSystem& rs, const WeylElement& w) {
  if (!compose(w, w).is_identity()) fail("element is not an involution");
  return Involution{w, length(rs, w), minus_one_eigenspace_dim(w)};
}

Involution sigma_from_set(const RootSystem& rs, const std::vector<RootId>& s) {
  if (!is_orthogonal_set(rs, s)) fail("sigma_S requires a pairwise orthogonal set");
  WeylElement w = WeylElement::identity(rs.rank());
  for (RootId r : s) w = compose(w, reflection(rs, r));
  return make_involution(rs, w);
}

Involution circ(const RootSystem& rs, int simple_index, const Involution& sigma) {
  WeylElement s = simple_reflection(rs, simple_index);
  WeylElement ss = compose(s, sigma.w);
  if (ss == compose(sigma.w, s)) return make_involution(rs, ss);
  return make_involution(rs, compose(ss, s));
}

int inv_length(const Involution& sigma) {
  int sum = sigma.l + sigma.lambda;
  if (sum % 2 != 0) fail("l + lambda is odd: not an involution length");
  return sum / 2;
}

std::vector<Involution> involutions_of(const RootSystem& rs) {
  std::vector<Involution> out;
  for (const WeylElement& w : all_elements(rs))
    if (compose(w, w).is_identity()) out.push_back(make_involution(rs, w));
  return out;
}

}  // namespace borbits
