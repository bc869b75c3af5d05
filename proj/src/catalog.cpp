// Builtin named algebras and the catalog extension file parser.

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "comer/embed.hpp"

namespace comer {

namespace {

AtomStructure closed_structure(int atoms, std::vector<int> converse,
                               const std::vector<std::array<int, 3>>& seeds) {
  AtomStructure s = make_atom_structure(atoms, std::move(converse));
  for (const std::array<int, 3>& t : seeds) s.forbid(t[0], t[1], t[2]);
  peirce_close(s);
  return s;
}

std::vector<NamedAlgebra> make_builtins() {
  std::vector<NamedAlgebra> entries;

  // 34_65: symmetric atoms a, b, c (plus identity); a is flexible.
  {
    NamedAlgebra alg;
    alg.name = "34_65";
    alg.atom_names = {"a", "b", "c"};
    alg.structure = closed_structure(3, {}, {{1, 1, 2}, {2, 2, 1}});
    alg.notes = "symmetric diversity atoms a,b,c; forbidden cycles bbc and ccb; a flexible";
    entries.push_back(std::move(alg));
  }
  // 35_37: diversity atoms a, r, r~ with r~ the converse of r.
  {
    NamedAlgebra alg;
    alg.name = "35_37";
    alg.atom_names = {"a", "r", "r~"};
    alg.structure = closed_structure(3, {0, 2, 1}, {{1, 1, 1}});
    alg.notes = "diversity atoms a, r, r~; forbidden cycle rrr; a flexible";
    entries.push_back(std::move(alg));
  }
  // 59_65: symmetric atoms a, b, c.
  {
    NamedAlgebra alg;
    alg.name = "59_65";
    alg.atom_names = {"a", "b", "c"};
    alg.structure = closed_structure(3, {}, {{1, 1, 1}, {2, 1, 1}});
    alg.notes = "symmetric diversity atoms a,b,c; forbidden cycles bbb and cbb; a flexible";
    entries.push_back(std::move(alg));
  }
  // 42_65 = A_3([i,i,i+1]); kept for reference, carries no embedding
  // template because no cyclic-group representation is known to exist.
  {
    NamedAlgebra alg;
    alg.name = "42_65";
    alg.atom_names = {"a0", "a1", "a2"};
    alg.structure = make_An(3, 0, 1);
    alg.notes = "equals A_3([i,i,i+1]); not representable";
    alg.known_not_representable = true;
    entries.push_back(std::move(alg));
  }
  return entries;
}

}  // namespace

const std::vector<NamedAlgebra>& builtin_catalog() {
  static const std::vector<NamedAlgebra> entries = make_builtins();
  return entries;
}

const NamedAlgebra* find_algebra(const std::vector<NamedAlgebra>& entries, const std::string& name) {
  for (const NamedAlgebra& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const NamedAlgebra& catalog_lookup(const std::string& name) {
  const NamedAlgebra* found = find_algebra(builtin_catalog(), name);
  if (found == nullptr) throw UnknownAlgebraError("unknown algebra: " + name);
  return *found;
}

SchemeTemplate scheme_for(const std::string& name, int n) {
  if (find_algebra(builtin_catalog(), name) == nullptr) throw UnknownAlgebraError("unknown algebra: " + name);

  SchemeTemplate tmpl;
  if (name == "34_65") {
    // b -> X_0, c -> X_{n/2}, a -> everything else; needs even n > 4
    // and symmetric classes.
    if (n <= 4 || n % 2 != 0)
      throw IncompatibleColorCountError("34_65 needs an even color count greater than 4, got " + std::to_string(n));
    tmpl.scheme = make_scheme(n, {{0, 0, n / 2}}, KParity::even);
    std::vector<int> rest;
    for (int i = 1; i < n; ++i)
      if (i != n / 2) rest.push_back(i);
    tmpl.atom_cosets = {rest, {0}, {n / 2}};
    return tmpl;
  }
  if (name == "35_37") {
    // r -> X_0, r~ -> X_{n/2}, a -> everything else; k odd makes every
    // class asymmetric with converse shift n/2.
    if (n < 4 || n % 2 != 0)
      throw IncompatibleColorCountError("35_37 needs an even color count of at least 4, got " + std::to_string(n));
    tmpl.scheme = make_scheme(n, {{0, 0, 0}}, KParity::odd);
    std::vector<int> rest;
    for (int i = 1; i < n; ++i)
      if (i != n / 2) rest.push_back(i);
    tmpl.atom_cosets = {rest, {0}, {n / 2}};
    return tmpl;
  }
  if (name == "59_65") {
    // Fixed recipe over 8 colors: b -> X_0, c -> X_6 u X_7, a -> the rest.
    if (n != 8) throw IncompatibleColorCountError("the 59_65 template is specific to 8 colors, got " + std::to_string(n));
    tmpl.scheme = make_scheme(8, {{0, 0, 0}, {0, 0, 6}, {0, 0, 7}}, KParity::even);
    tmpl.atom_cosets = {{1, 2, 3, 4, 5}, {0}, {6, 7}};
    return tmpl;
  }
  throw IncompatibleColorCountError("no embedding template is known for " + name);
}

// ---- catalog extension files ----------------------------------------------
//
// Line grammar (see README for the full description):
//
//   algebra <name>
//   atoms <name> <name> ...
//   converse <name> <name>          zero or more, converse pairs
//   forbidden <name> <name> <name>  seed cycles; closure is applied
//   note <free text>                optional
//   template <atom> <i,j,...>       optional, one line per atom
//   scheme <i,j,k>                  optional, repeatable; with template
//   parity even|odd|any             optional, default even
//   end
//
// '#' starts a comment; blank lines are ignored.

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw Error("empty entry in integer list '" + text + "'");
    values.push_back(std::stoi(item));
  }
  return values;
}

int atom_index(const std::vector<std::string>& names, const std::string& name, int line_no) {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    throw Error("catalog line " + std::to_string(line_no) + ": unknown atom '" + name + "'");
  return static_cast<int>(it - names.begin());
}

}  // namespace

std::vector<NamedAlgebra> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file: " + path);

  std::vector<NamedAlgebra> entries;
  std::string line;
  int line_no = 0;

  bool open = false;
  NamedAlgebra current;
  std::vector<std::pair<int, int>> converse_pairs;
  std::vector<std::array<int, 3>> seeds;
  std::vector<std::vector<int>> template_sets;
  std::vector<std::array<int, 3>> scheme_reps;
  KParity parity = KParity::even;
  bool saw_template = false, saw_scheme = false;

  auto finish = [&]() {
    if (current.atom_names.empty())
      throw Error("catalog entry '" + current.name + "' declares no atoms");
    const int count = static_cast<int>(current.atom_names.size());
    std::vector<int> conv(count);
    std::iota(conv.begin(), conv.end(), 0);
    for (const auto& [a, b] : converse_pairs) {
      conv[a] = b;
      conv[b] = a;
    }
    current.structure = make_atom_structure(count, conv);
    for (const std::array<int, 3>& t : seeds) current.structure.forbid(t[0], t[1], t[2]);
    peirce_close(current.structure);
    if (saw_template != saw_scheme)
      throw Error("catalog entry '" + current.name + "' must give both template and scheme, or neither");
    if (saw_template) {
      SchemeTemplate tmpl;
      int n = 0;
      for (const std::vector<int>& set : template_sets)
        for (int i : set) n = std::max(n, i + 1);
      tmpl.scheme = make_scheme(n, scheme_reps, parity);
      tmpl.atom_cosets = template_sets;
      if (static_cast<int>(template_sets.size()) != count)
        throw Error("catalog entry '" + current.name + "' template does not cover every atom");
      current.file_template = std::move(tmpl);
    }
    if (find_algebra(entries, current.name) != nullptr || find_algebra(builtin_catalog(), current.name) != nullptr)
      throw Error("duplicate algebra name '" + current.name + "'");
    entries.push_back(std::move(current));
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::vector<std::string> tok = split_ws(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];

    if (kw == "algebra") {
      if (open) throw Error("catalog line " + std::to_string(line_no) + ": previous entry not closed with 'end'");
      if (tok.size() != 2) throw Error("catalog line " + std::to_string(line_no) + ": expected 'algebra <name>'");
      open = true;
      current = NamedAlgebra{};
      current.name = tok[1];
      converse_pairs.clear();
      seeds.clear();
      template_sets.clear();
      scheme_reps.clear();
      parity = KParity::even;
      saw_template = saw_scheme = false;
      continue;
    }
    if (!open) throw Error("catalog line " + std::to_string(line_no) + ": '" + kw + "' outside an algebra block");

    if (kw == "atoms") {
      current.atom_names.assign(tok.begin() + 1, tok.end());
    } else if (kw == "converse") {
      if (tok.size() != 3) throw Error("catalog line " + std::to_string(line_no) + ": expected 'converse <a> <b>'");
      converse_pairs.emplace_back(atom_index(current.atom_names, tok[1], line_no),
                                  atom_index(current.atom_names, tok[2], line_no));
    } else if (kw == "forbidden") {
      if (tok.size() != 4)
        throw Error("catalog line " + std::to_string(line_no) + ": expected 'forbidden <x> <y> <z>'");
      seeds.push_back({atom_index(current.atom_names, tok[1], line_no),
                       atom_index(current.atom_names, tok[2], line_no),
                       atom_index(current.atom_names, tok[3], line_no)});
    } else if (kw == "note") {
      current.notes = line.substr(line.find("note") + 5);
      if (current.notes.find("not representable") != std::string::npos) current.known_not_representable = true;
    } else if (kw == "template") {
      if (tok.size() != 3)
        throw Error("catalog line " + std::to_string(line_no) + ": expected 'template <atom> <i,j,...>'");
      const int a = atom_index(current.atom_names, tok[1], line_no);
      if (template_sets.size() < current.atom_names.size()) template_sets.resize(current.atom_names.size());
      template_sets[a] = parse_int_list(tok[2]);
      saw_template = true;
    } else if (kw == "scheme") {
      if (tok.size() != 2) throw Error("catalog line " + std::to_string(line_no) + ": expected 'scheme <i,j,k>'");
      const std::vector<int> v = parse_int_list(tok[1]);
      if (v.size() != 3) throw Error("catalog line " + std::to_string(line_no) + ": scheme needs three indices");
      scheme_reps.push_back({v[0], v[1], v[2]});
      saw_scheme = true;
    } else if (kw == "parity") {
      if (tok.size() != 2) throw Error("catalog line " + std::to_string(line_no) + ": expected 'parity <p>'");
      parity = parity_from_string(tok[1]);
    } else if (kw == "end") {
      finish();
      open = false;
    } else {
      throw Error("catalog line " + std::to_string(line_no) + ": unknown directive '" + kw + "'");
    }
  }
  if (open) throw Error("catalog file ends inside an algebra block (missing 'end')");
  return entries;
}

}  // namespace comer
