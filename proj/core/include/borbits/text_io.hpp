#pragma once

// Text and JSON forms of the library objects.
//
// Root syntax for the classical types: "i+j" is e_i+e_j (i <= j; "i+i" is
// 2e_i in type C), "i-j" is e_i-e_j, and a bare "i" is e_i in type B.
// E6/E7 roots print as their coordinate tuple. JSON always carries roots as
// integer coordinate arrays and Weyl elements as reduced words (1-based
// simple indices). Emission is deterministic; parse(emit(x)) == x.

#include <optional>
#include <string>

#include "borbits/order_dim.hpp"

namespace borbits {

std::string root_to_text(const RootSystem& rs, RootId r);
RootId parse_root(const RootSystem& rs, const std::string& text);
// Comma-separated roots; whitespace is ignored; "{}" or "" is the empty set.
std::vector<RootId> parse_root_set(const RootSystem& rs, const std::string& text);
std::string set_to_text(const RootSystem& rs, const std::vector<RootId>& s);

std::string word_to_text(const Word& w);  // identity prints as "e"
Word parse_word(const std::string& text);

std::string param_to_text(const CominusculeData& cd, const OrbitParam& p);
std::string param_to_json(const CominusculeData& cd, const OrbitParam& p);
OrbitParam param_from_json(const CominusculeData& cd, const std::string& json);

std::string listing_to_json(const CominusculeData& cd, const std::string& family,
                            const std::vector<OrbitParam>& params);
std::vector<OrbitParam> listing_from_json(const CominusculeData& cd, const std::string& json);

std::string poset_to_json(const CominusculeData& cd, const OrbitPoset& p);
OrbitPoset poset_from_json(const CominusculeData& cd, const std::string& json);
// Nodes are rank-grouped by dimension; edges are the covers, drawn upward.
std::string poset_to_dot(const CominusculeData& cd, const OrbitPoset& p);

std::string dim_table_to_text(const CominusculeData& cd, const DimTable& t);
std::string dim_table_to_json(const CominusculeData& cd, const DimTable& t);
DimTable dim_table_from_json(const CominusculeData& cd, const std::string& json);

struct DiagramOptions {
  bool unicode = false;
  std::optional<RootId> shade;  // mark cells below "." and above "o"
};

// Triangular grid of Psi for type C: row i, column j (counted from the
// right) is e_i+e_j, the diagonal cell (i,i) is 2e_i. Members of the set are
// marked X or Z by their partition slot when the set is admissible for v,
// and "*" otherwise.
std::string typec_diagram(const CominusculeData& cd, const WeylElement& v,
                          const std::vector<RootId>& s, const DiagramOptions& opts = {});

}  // namespace borbits
