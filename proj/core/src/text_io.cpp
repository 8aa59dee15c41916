#include "borbits/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace borbits {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::string classical_root_text(const RootSystem& rs, RootId r) {
  const Coords& c = rs.coords(r);
  std::vector<std::pair<int, int>> nz;  // (1-based index, value)
  for (size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) nz.emplace_back(static_cast<int>(k) + 1, c[k]);
  if (nz.size() == 1) {
    auto [i, v] = nz[0];
    if (v == 2) return std::to_string(i) + "+" + std::to_string(i);          // 2e_i
    if (v == -2) return "-(" + std::to_string(i) + "+" + std::to_string(i) + ")";
    if (v == 1) return std::to_string(i);                                    // e_i
    return "-" + std::to_string(i);
  }
  auto [i, vi] = nz[0];
  auto [j, vj] = nz[1];
  if (vi == 1) return std::to_string(i) + (vj == 1 ? "+" : "-") + std::to_string(j);
  // leading coordinate negative: print as the negated positive root
  std::string inner = std::to_string(i) + (vj == -1 ? "+" : "-") + std::to_string(j);
  return "-(" + inner + ")";
}

std::string tuple_text(const Coords& c) {
  std::string out = "(";
  for (size_t k = 0; k < c.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(c[k]);
  }
  return out + ")";
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

std::string root_to_text(const RootSystem& rs, RootId r) {
  if (r < 0 || r >= rs.num_roots()) fail("root id out of range");
  switch (rs.type()) {
    case Type::A:
    case Type::B:
    case Type::C:
    case Type::D:
      return classical_root_text(rs, r);
    default:
      return tuple_text(rs.coords(r));
  }
}

RootId parse_root(const RootSystem& rs, const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.empty()) fail("empty root");
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    if (s.size() > 1 && s[1] == '(') {
      if (s.back() != ')') fail("unbalanced parentheses in root '" + text + "'");
      s = s.substr(2, s.size() - 3);
    } else {
      s = s.substr(1);  // bare "-i" (negative short root in type B)
    }
  }
  Coords c(rs.ambient_dim(), 0);
  if (!s.empty() && s[0] == '(') {
    if (s.back() != ')') fail("unbalanced parentheses in root '" + text + "'");
    std::stringstream in(s.substr(1, s.size() - 2));
    std::string tok;
    size_t k = 0;
    while (std::getline(in, tok, ',')) {
      if (k >= c.size()) fail("too many coordinates in root '" + text + "'");
      c[k++] = std::stoi(tok);
    }
    if (k != c.size()) fail("expected " + std::to_string(c.size()) + " coordinates");
  } else {
    size_t pos = s.find_first_of("+-", 1);
    auto index = [&](const std::string& t) {
      size_t used = 0;
      int i = std::stoi(t, &used);
      if (used != t.size() || i < 1 || i > rs.ambient_dim())
        fail("bad coordinate index in root '" + text + "'");
      return i - 1;
    };
    if (pos == std::string::npos) {
      c[index(s)] = 1;  // bare e_i (type B short roots)
    } else {
      int i = index(s.substr(0, pos));
      int j = index(s.substr(pos + 1));
      c[i] += 1;
      c[j] += s[pos] == '+' ? 1 : -1;
    }
  }
  if (neg)
    for (int& x : c) x = -x;
  auto r = rs.find(c);
  if (!r) fail("'" + text + "' is not a root of " + system_label(rs.type(), rs.rank()));
  return *r;
}

std::vector<RootId> parse_root_set(const RootSystem& rs, const std::string& text) {
  std::string s = strip_spaces(text);
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') fail("unbalanced braces in set '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<RootId> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(parse_root(rs, tok));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string set_to_text(const RootSystem& rs, const std::vector<RootId>& s) {
  std::string out = "{";
  for (size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += root_to_text(rs, s[k]);
  }
  return out + "}";
}

std::string word_to_text(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out += " ";
    out += std::to_string(w[k]);
  }
  return out;
}

Word parse_word(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::stringstream in(s);
  Word out;
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    size_t used = 0;
    int i = std::stoi(tok, &used);
    if (used != tok.size() || i < 1) fail("bad word letter '" + tok + "'");
    out.push_back(i);
  }
  return out;
}

namespace {

json roots_json(const RootSystem& rs, const std::vector<RootId>& s) {
  json arr = json::array();
  for (RootId r : s) arr.push_back(rs.coords(r));
  return arr;
}

std::vector<RootId> roots_from_json(const RootSystem& rs, const json& arr) {
  std::vector<RootId> out;
  for (const auto& item : arr) out.push_back(rs.root_of(item.get<Coords>()));
  return out;
}

json param_json_obj(const CominusculeData& cd, const OrbitParam& p) {
  const RootSystem& rs = cd.system();
  json obj;
  obj["v"] = reduced_word(rs, p.v);
  obj["S"] = roots_json(rs, p.s);
  if (rs.type() == Type::C) {
    obj["X"] = roots_json(rs, p.x_part);
    obj["Z"] = roots_json(rs, p.z_part);
    json pad = json::object();
    for (auto& [z, x] : p.pad) {
      auto zi = std::lower_bound(p.z_part.begin(), p.z_part.end(), z) - p.z_part.begin();
      auto xi = std::lower_bound(p.x_part.begin(), p.x_part.end(), x) - p.x_part.begin();
      pad[std::to_string(zi)] = xi;
    }
    obj["pad"] = pad;
  }
  return obj;
}

OrbitParam param_from_json_obj(const CominusculeData& cd, const json& obj) {
  const RootSystem& rs = cd.system();
  OrbitParam p;
  p.v = element_from_word(rs, obj.at("v").get<Word>());
  p.s = roots_from_json(rs, obj.at("S"));
  std::sort(p.s.begin(), p.s.end());
  std::vector<RootId> pp = phi_plus_of(cd, p.v);
  for (RootId r : p.s)
    if (!std::binary_search(pp.begin(), pp.end(), r)) fail("S is not contained in Phi+(v)");
  if (rs.type() == Type::C) {
    TypeCSet t = typec_admissible(cd, p.v, p.s);
    p.x_part = t.x_part;
    p.z_part = t.z_part;
    p.pad = t.pad;
    if (obj.contains("X") &&
        (roots_from_json(rs, obj.at("X")) != t.x_part || roots_from_json(rs, obj.at("Z")) != t.z_part))
      fail("stored X/Z partition disagrees with the recomputed one");
  } else if (rs.type() == Type::B) {
    RootId a0 = typeb_short_root(cd);
    p.typeb_special = !is_orthogonal_set(rs, p.s) && p.s.size() == 2 &&
                      std::binary_search(p.s.begin(), p.s.end(), a0);
    if (!p.typeb_special && !is_orthogonal_set(rs, p.s)) fail("S is not in the family H_v");
  } else if (!is_orthogonal_set(rs, p.s)) {
    fail("S is not orthogonal");
  }
  return p;
}

json system_header(const CominusculeData& cd) {
  json obj;
  obj["type"] = type_name(cd.system().type());
  obj["rank"] = cd.system().rank();
  obj["alpha_p"] = cd.alpha_p_index + 1;
  return obj;
}

void check_header(const CominusculeData& cd, const json& obj) {
  if (obj.at("type").get<std::string>() != type_name(cd.system().type()) ||
      obj.at("rank").get<int>() != cd.system().rank() ||
      obj.at("alpha_p").get<int>() != cd.alpha_p_index + 1)
    fail("serialized data belongs to a different cominuscule system");
}

}  // namespace

std::string param_to_text(const CominusculeData& cd, const OrbitParam& p) {
  const RootSystem& rs = cd.system();
  std::string out = "v=[" + word_to_text(reduced_word(rs, p.v)) + "] S=" + set_to_text(rs, p.s);
  if (rs.type() == Type::C) {
    out += " X=" + set_to_text(rs, p.x_part) + " Z=" + set_to_text(rs, p.z_part);
    if (!p.pad.empty()) {
      out += " pad:";
      for (size_t k = 0; k < p.pad.size(); ++k) {
        out += (k ? "," : "") + root_to_text(rs, p.pad[k].first) + "->" +
               root_to_text(rs, p.pad[k].second);
      }
    }
  }
  if (p.typeb_special) out += " (pair a0,a0+gamma)";
  return out;
}

std::string param_to_json(const CominusculeData& cd, const OrbitParam& p) {
  return param_json_obj(cd, p).dump();
}

OrbitParam param_from_json(const CominusculeData& cd, const std::string& text) {
  return param_from_json_obj(cd, json::parse(text));
}

std::string listing_to_json(const CominusculeData& cd, const std::string& family,
                            const std::vector<OrbitParam>& params) {
  json obj = system_header(cd);
  obj["family"] = family;
  obj["count"] = params.size();
  json arr = json::array();
  for (const OrbitParam& p : params) arr.push_back(param_json_obj(cd, p));
  obj["params"] = arr;
  return obj.dump(2) + "\n";
}

std::vector<OrbitParam> listing_from_json(const CominusculeData& cd, const std::string& text) {
  json obj = json::parse(text);
  check_header(cd, obj);
  std::vector<OrbitParam> out;
  for (const auto& item : obj.at("params")) out.push_back(param_from_json_obj(cd, item));
  if (obj.at("count").get<size_t>() != out.size()) fail("count field disagrees with params");
  return out;
}

std::string poset_to_json(const CominusculeData& cd, const OrbitPoset& p) {
  json obj = system_header(cd);
  if (p.conjectural) obj["conjectural"] = true;
  json params = json::array();
  for (const OrbitParam& q : p.params) params.push_back(param_json_obj(cd, q));
  obj["params"] = params;
  json leq = json::array();
  for (const auto& row : p.leq) leq.push_back(row);
  obj["leq"] = leq;
  json covers = json::array();
  for (auto& [i, j] : p.covers) covers.push_back(json::array({i, j}));
  obj["covers"] = covers;
  obj["dims"] = p.dims;
  return obj.dump(2) + "\n";
}

OrbitPoset poset_from_json(const CominusculeData& cd, const std::string& text) {
  json obj = json::parse(text);
  check_header(cd, obj);
  OrbitPoset p;
  p.conjectural = obj.value("conjectural", false);
  for (const auto& item : obj.at("params")) p.params.push_back(param_from_json_obj(cd, item));
  for (const auto& row : obj.at("leq")) p.leq.push_back(row.get<std::vector<bool>>());
  for (const auto& c : obj.at("covers")) p.covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  p.dims = obj.at("dims").get<std::vector<int>>();
  if (p.leq.size() != p.params.size() || p.dims.size() != p.params.size())
    fail("poset arrays have inconsistent sizes");
  return p;
}

std::string poset_to_dot(const CominusculeData& cd, const OrbitPoset& p) {
  const RootSystem& rs = cd.system();
  std::string out = "digraph orbits {\n  rankdir=BT;\n  node [shape=box];\n";
  if (p.conjectural) out += "  label=\"conjectural order (no theorem)\";\n";
  for (size_t i = 0; i < p.params.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"v=" +
           word_to_text(reduced_word(rs, p.params[i].v)) + " S=" +
           set_to_text(rs, p.params[i].s) + "\"];\n";
  }
  int max_dim = 0;
  for (int d : p.dims) max_dim = std::max(max_dim, d);
  for (int d = 0; d <= max_dim; ++d) {
    std::string group;
    for (size_t i = 0; i < p.params.size(); ++i)
      if (p.dims[i] == d) group += " n" + std::to_string(i) + ";";
    if (!group.empty()) out += "  { rank=same;" + group + " }\n";
  }
  for (auto& [i, j] : p.covers)
    out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
  return out + "}\n";
}

std::string dim_table_to_text(const CominusculeData& cd, const DimTable& t) {
  std::string out;
  for (size_t i = 0; i < t.params.size(); ++i)
    out += "dim=" + std::to_string(t.dims[i]) + "  " + param_to_text(cd, t.params[i]) + "\n";
  return out;
}

std::string dim_table_to_json(const CominusculeData& cd, const DimTable& t) {
  json obj = system_header(cd);
  if (cd.system().type() == Type::B)
    obj["h_formula_convention"] = "reflection-through-v(alpha0)";
  json params = json::array();
  for (const OrbitParam& p : t.params) params.push_back(param_json_obj(cd, p));
  obj["params"] = params;
  obj["dims"] = t.dims;
  return obj.dump(2) + "\n";
}

DimTable dim_table_from_json(const CominusculeData& cd, const std::string& text) {
  json obj = json::parse(text);
  check_header(cd, obj);
  DimTable t;
  for (const auto& item : obj.at("params")) t.params.push_back(param_from_json_obj(cd, item));
  t.dims = obj.at("dims").get<std::vector<int>>();
  if (t.dims.size() != t.params.size()) fail("dims and params have different lengths");
  return t;
}

std::string typec_diagram(const CominusculeData& cd, const WeylElement& v,
                          const std::vector<RootId>& s, const DiagramOptions& opts) {
  const RootSystem& rs = cd.system();
  if (rs.type() != Type::C) fail("diagrams are drawn for type C");
  for (RootId r : s)
    if (!cd.in_psi[r]) fail("root " + root_to_text(rs, r) + " is not in Psi");
  int n = rs.rank();

  std::optional<TypeCSet> part = typec_try_admissible(cd, v, s);
  auto cell_root = [&](int i, int j) {  // 1-based row i, column j >= i
    Coords c(n, 0);
    c[i - 1] += 1;
    c[j - 1] += 1;
    return rs.root_of(c);
  };
  auto mark = [&](int i, int j) -> std::string {
    RootId r = cell_root(i, j);
    if (std::find(s.begin(), s.end(), r) != s.end()) {
      if (!part) return "*";
      if (std::binary_search(part->z_part.begin(), part->z_part.end(), r)) return "Z";
      return "X";
    }
    if (opts.shade) {
      if (r != *opts.shade && rs.root_leq(r, *opts.shade)) return ".";
      if (r != *opts.shade && rs.root_leq(*opts.shade, r)) return "o";
    }
    return " ";
  };

  const char* h = opts.unicode ? "───" : "---";
  const char* vert = opts.unicode ? "│" : "|";
  const char* cross = opts.unicode ? "┼" : "+";
  std::string out = "   ";
  for (int j = n; j >= 1; --j) out += " " + std::to_string(j) + "  ";
  while (!out.empty() && out.back() == ' ') out.pop_back();
  out += "\n";
  auto border = [&](int cells) {
    std::string line = "  ";
    for (int k = 0; k < cells; ++k) line += std::string(cross) + h;
    return line + cross + "\n";
  };
  out += border(n);
  for (int i = 1; i <= n; ++i) {
    std::string line = std::to_string(i) + " ";
    for (int j = n; j >= i; --j) line += std::string(vert) + " " + mark(i, j) + " ";
    out += line + vert + "\n";
    out += border(n - i + 1);
  }
  if (!part) out += "(set is not admissible for v; members shown as *)\n";
  return out;
}

}  // namespace borbits
