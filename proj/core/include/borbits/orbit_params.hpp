#pragma once

// Orbit parameters for the three families:
//
//   simply laced : admissible pairs (v, S), v in W^P, S an orthogonal subset
//                  of Phi+(v);
//   type B       : the family H_v = { S orthogonal } u { {a0, a0+g} } where
//                  a0 is the unique short root of Psi and g in Phi_P^+;
//   type C       : full admissible sets. S = X(S) u Z(S) is admissible when
//                  X(S) is orthogonal and every beta in Z(S) is long and
//                  equals pad(beta) + gamma for a unique pad(beta) in X(S)
//                  and gamma in Phi_P^+. The completion closes S under the
//                  two rules below; S is full admissible when it is a fixed
//                  point, and those sets label the orbits uniquely.
//
// Completion rules (A adds successors forced by long roots of X, B those
// forced by roots of Z):
//   A(S) = { beta in Phi+(v)\S | beta = suc(alpha), alpha in S short,
//            exists gamma in X(S) long with beta > gamma and not(alpha > gamma) }
//   B(S) = { beta in Phi+(v)\S | beta = suc(alpha), alpha in S short,
//            exists gamma in Z(S) with beta > gamma and not(alpha > pad(gamma)) }
//
// All emitted families are ordered by |S| first and then lexicographically
// on the sorted root ids; sets are kept sorted ascending.

#include <optional>
#include <utility>
#include <vector>

#include "borbits/root_system.hpp"
#include "borbits/weyl.hpp"

namespace borbits {

struct AdmissiblePair {
  WeylElement v;
  std::vector<RootId> s;  // sorted

  friend bool operator==(const AdmissiblePair& a, const AdmissiblePair& b) {
    return a.v == b.v && a.s == b.s;
  }
};

struct TypeBParam {
  WeylElement v;
  std::vector<RootId> s;
  bool special_pair = false;  // true for S = {a0, a0+gamma}

  friend bool operator==(const TypeBParam& a, const TypeBParam& b) {
    return a.v == b.v && a.s == b.s;
  }
};

struct TypeCSet {
  WeylElement v;
  std::vector<RootId> s;
  std::vector<RootId> x_part;
  std::vector<RootId> z_part;
  std::vector<std::pair<RootId, RootId>> pad;  // (z root, its pad in X), sorted by z

  friend bool operator==(const TypeCSet& a, const TypeCSet& b) {
    return a.v == b.v && a.s == b.s;
  }
};

// Phi+(v) for v in W^P (throws otherwise), in RootId order.
std::vector<RootId> phi_plus_of(const CominusculeData& cd, const WeylElement& v);

// All pairwise-orthogonal subsets of Phi+(v), including the empty set.
std::vector<std::vector<RootId>> enumerate_orthogonal_subsets(const CominusculeData& cd,
                                                              const WeylElement& v);

// Union over v in W^P order; simply laced systems only.
std::vector<AdmissiblePair> enumerate_admissible_pairs(const CominusculeData& cd);

// The family H_v of type B.
std::vector<TypeBParam> typeb_enumerate(const CominusculeData& cd, const WeylElement& v);
// The unique short root a0 of Psi in type B.
RootId typeb_short_root(const CominusculeData& cd);

// Computes the X/Z partition and the pad map, or explains the rejection.
std::optional<TypeCSet> typec_try_admissible(const CominusculeData& cd, const WeylElement& v,
                                             const std::vector<RootId>& s,
                                             std::string* why = nullptr);
TypeCSet typec_admissible(const CominusculeData& cd, const WeylElement& v,
                          const std::vector<RootId>& s);

std::vector<RootId> typec_a_set(const CominusculeData& cd, const TypeCSet& t);
std::vector<RootId> typec_b_set(const CominusculeData& cd, const TypeCSet& t);

// Full admissible completion. Runs the closure to a fixed point and checks
// that one pass suffices, which the theory guarantees.
TypeCSet typec_completion(const CominusculeData& cd, const TypeCSet& t);

bool typec_is_full_admissible(const CominusculeData& cd, const WeylElement& v,
                              const std::vector<RootId>& s);

// Auto filters all subsets while |Phi+(v)| <= 20 and switches to incremental
// generation (orthogonal X plus any subset of in-range successors) above.
// Both routes emit identical families; verify cross-checks them.
enum class EnumStrategy { Auto, Filter, Incremental };

std::vector<TypeCSet> typec_enumerate_admissible(const CominusculeData& cd, const WeylElement& v,
                                                 EnumStrategy strategy = EnumStrategy::Auto);
std::vector<TypeCSet> typec_enumerate_full_admissible(const CominusculeData& cd,
                                                      const WeylElement& v,
                                                      EnumStrategy strategy = EnumStrategy::Auto);

// beta in Z(S) is essential when it does not reappear in the completion of
// S \ {beta}.
bool typec_is_essential(const CominusculeData& cd, const TypeCSet& t, RootId beta);

}  // namespace borbits
