#pragma once

// Irreducible reduced root systems of types A, B, C, D, E6, E7 in explicit
// integer coordinates, plus the cominuscule data attached to a simple root
// alpha_P with coefficient 1 in the highest root.
//
// Coordinate conventions (all arithmetic is exact integer arithmetic):
//   A_n : e_i - e_j in R^{n+1}
//   B_n : {+-e_i} u {+-e_i +- e_j} in R^n, base (e1-e2, ..., e_{n-1}-e_n, e_n)
//   C_n : {+-e_i +- e_j | i != j} u {+-2e_i}, base (e1-e2, ..., e_{n-1}-e_n, 2e_n)
//   D_n : {+-e_i +- e_j}, base (e1-e2, ..., e_{n-1}-e_n, e_{n-1}+e_n)
//   E6/E7 : the usual realization inside R^8, scaled by 2 so every coordinate
//           is an integer; simple-root order alpha_1..alpha_7 as in README.
//
// Every root carries its expansion in the simple basis ("delta coordinates"),
// so positivity, the root order (beta - alpha a nonnegative combination of
// simple roots) and the coefficient [gamma, alpha_i] are all coordinate reads.
//
// Roots are stored sorted lexicographically by ambient coordinates; a RootId
// is an index into that table, and all set-valued results are emitted in
// RootId order. This fixes deterministic iteration and serialization.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace borbits {

enum class Type { A, B, C, D, E6, E7 };

std::string type_name(Type t);
// "A3", "C5", "E7": the E types carry their rank already.
std::string system_label(Type t, int rank);

// Parses "A", "B", "C", "D", "E6", "E7". Anything else (G2, F4, E8, ...)
// is rejected: those groups admit no parabolic with abelian unipotent radical.
Type parse_type(const std::string& s);

using Coords = std::vector<int>;
using RootId = int;

enum class LengthClass { Short, Long };

struct Root {
  Coords coords;
  LengthClass length_class;
};

class RootSystem {
 public:
  // Generates the full root set by closing the simple basis under simple
  // reflections. Throws std::invalid_argument for unsupported rank
  // (A: n>=1, B/C: n>=2, D: n>=4, E6/E7: rank must equal 6/7).
  static RootSystem build(Type type, int rank);

  Type type() const { return type_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }
  bool simply_laced() const;

  int num_roots() const { return static_cast<int>(coords_.size()); }
  const Coords& coords(RootId r) const { return coords_.at(r); }
  const std::vector<int>& delta_coords(RootId r) const { return delta_.at(r); }
  Root root(RootId r) const { return Root{coords(r), length_class(r)}; }

  bool is_positive(RootId r) const { return positive_.at(r); }
  int norm2(RootId r) const { return norm2_.at(r); }
  LengthClass length_class(RootId r) const {
    return norm2_.at(r) == max_norm2_ ? LengthClass::Long : LengthClass::Short;
  }
  bool is_long(RootId r) const { return length_class(r) == LengthClass::Long; }
  bool is_short(RootId r) const { return length_class(r) == LengthClass::Short; }

  // Simple roots in the documented base order; positives in RootId order.
  const std::vector<RootId>& simples() const { return simples_; }
  const std::vector<RootId>& positives() const { return positives_; }

  std::optional<RootId> find(const Coords& c) const;
  std::optional<RootId> find_delta(const std::vector<int>& d) const;
  RootId root_of(const Coords& c) const;  // throws if not a root
  RootId negate(RootId r) const { return neg_.at(r); }

  // <beta, alpha-check> = 2(beta,alpha)/(alpha,alpha); always an integer.
  int pairing(RootId beta, RootId alpha) const;
  // [gamma, alpha_i]: coefficient of the i-th simple root (0-based index).
  int coefficient(RootId gamma, int simple_index) const;

  // Root order: true iff b - a is a nonnegative combination of simple roots.
  bool root_leq(RootId a, RootId b) const;

  RootId highest_root() const { return theta_; }

  int dot(RootId a, RootId b) const;
  bool orthogonal(RootId a, RootId b) const { return dot(a, b) == 0; }

 private:
  RootSystem() = default;

  Type type_ = Type::A;
  int rank_ = 0;
  int ambient_dim_ = 0;
  int max_norm2_ = 0;
  RootId theta_ = -1;
  std::vector<Coords> coords_;           // sorted lexicographically
  std::vector<std::vector<int>> delta_;  // expansion in the simple basis
  std::vector<int> norm2_;
  std::vector<bool> positive_;
  std::vector<RootId> neg_;
  std::vector<RootId> simples_;
  std::vector<RootId> positives_;
};

// Pairwise orthogonality; the empty set is orthogonal.
bool is_orthogonal_set(const RootSystem& rs, const std::vector<RootId>& s);
// Orthogonal and additionally a+-b is never a root.
bool is_strongly_orthogonal_set(const RootSystem& rs, const std::vector<RootId>& s);

// The cominuscule slice attached to alpha_P: Phi_P = {gamma | [gamma,alpha_P]=0},
// Psi = {gamma in Phi+ | [gamma,alpha_P]=1} = Phi+ \ Phi_P.
struct CominusculeData {
  const RootSystem* rs = nullptr;
  int alpha_p_index = -1;  // 0-based position in the simple basis
  RootId alpha_p = -1;
  RootId theta = -1;
  std::vector<RootId> psi;        // RootId order
  std::vector<RootId> phi_p_pos;  // positive part of Phi_P, RootId order
  std::vector<int> delta_p;       // simple indices other than alpha_p_index
  std::vector<bool> in_psi;       // indexed by RootId
  std::vector<bool> in_phi_p;

  const RootSystem& system() const { return *rs; }
};

// Simple roots with coefficient 1 in the highest root, in base order.
std::vector<RootId> cominuscule_simple_roots(const RootSystem& rs);

// Throws if alpha_p is not cominuscule.
CominusculeData build_cominuscule_data(const RootSystem& rs, RootId alpha_p);

// Type C only. For a short root e_i+e_j (i<j) in Psi returns the long root
// 2e_i (the larger of the two non-orthogonal long roots); long roots are fixed.
RootId suc(const CominusculeData& cd, RootId alpha);

}  // namespace borbits
