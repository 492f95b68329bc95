#include "fairgame/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <map>
#include <sstream>
#include <vector>

namespace fairgame {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// "G12" -> ("G", 12); "G1.2" -> ("G", 1, 2); "Q" -> ("Q").
struct Key {
  std::string base;
  int i = 0;
  int l = 0;
};

std::optional<Key> parse_key(const std::string& k) {
  Key key;
  std::size_t pos = 0;
  while (pos < k.size() && std::isalpha(static_cast<unsigned char>(k[pos]))) ++pos;
  key.base = k.substr(0, pos);
  if (key.base.empty()) return std::nullopt;
  if (pos == k.size()) return key;
  auto num = [&](int& out) {
    std::size_t start = pos;
    while (pos < k.size() && std::isdigit(static_cast<unsigned char>(k[pos]))) ++pos;
    if (start == pos) return false;
    out = std::stoi(k.substr(start, pos - start));
    return out >= 1;
  };
  if (!num(key.i)) return std::nullopt;
  if (pos < k.size()) {
    if (k[pos] != '.') return std::nullopt;
    ++pos;
    if (!num(key.l) || pos != k.size()) return std::nullopt;
  }
  return key;
}

struct SetLine {
  Key key;
  VertexSet set;
  int line;
};

WinningCondition build_condition(const std::string& type, const std::vector<SetLine>& sets, int n, int cond_line) {
  const VertexSet none(static_cast<std::size_t>(n));
  const VertexSet all(static_cast<std::size_t>(n), true);
  auto fail = [&](const SetLine& s, const std::string& msg) -> void { throw ParseError(s.line, msg); };
  auto single = [&](const std::string& base, const VertexSet& dflt) {
    VertexSet out = dflt;
    for (auto& s : sets)
      if (s.key.base == base) out = s.set;
    return out;
  };
  auto indexed = [&](const std::string& base) {
    std::vector<VertexSet> out;
    for (auto& s : sets)
      if (s.key.base == base) {
        if (static_cast<int>(out.size()) < s.key.i) out.resize(static_cast<std::size_t>(s.key.i), none);
        out[static_cast<std::size_t>(s.key.i - 1)] = s.set;
      }
    return out;
  };
  auto allow = [&](std::initializer_list<const char*> singles, std::initializer_list<const char*> lists,
                   bool two_level = false) {
    std::map<std::string, int> seen;
    for (auto& s : sets) {
      bool is_single = false, is_list = false;
      for (auto* b : singles) is_single = is_single || s.key.base == b;
      for (auto* b : lists) is_list = is_list || s.key.base == b;
      if (!is_single && !is_list) fail(s, "set " + s.key.base + " does not belong to condition " + type);
      if (is_single && s.key.i != 0) fail(s, "set " + s.key.base + " takes no index");
      if (is_list && s.key.i == 0) fail(s, "set " + s.key.base + " needs an index");
      if (s.key.l != 0 && !(two_level && s.key.base == "G")) fail(s, "unexpected goal index");
      std::string id = s.key.base + std::to_string(s.key.i) + "." + std::to_string(s.key.l);
      if (seen.count(id)) fail(s, "duplicate set line");
      seen[id] = s.line;
    }
  };
  auto pairs = [&]() {
    auto G = indexed("G");
    auto R = indexed("R");
    const std::size_t k = std::max(G.size(), R.size());
    G.resize(k, none);
    R.resize(k, none);
    std::vector<RabinPair> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back({G[i], R[i]});
    return out;
  };

  if (type == "safereach") {
    allow({"T", "Q"}, {});
    return SafeReach{single("T", none), single("Q", all)};
  }
  if (type == "safety") {
    allow({"Q"}, {});
    return Safety{single("Q", all)};
  }
  if (type == "buchi") {
    allow({"G"}, {});
    return Buchi{single("G", none)};
  }
  if (type == "safebuchi") {
    allow({"G", "Q"}, {});
    return SafeBuchi{single("G", none), single("Q", all)};
  }
  if (type == "cobuchi") {
    allow({"A"}, {});
    return CoBuchi{single("A", none)};
  }
  if (type == "genbuchi") {
    allow({"Q"}, {"F"});
    return GenBuchi{indexed("F"), single("Q", all)};
  }
  if (type == "gencobuchi") {
    allow({}, {"A"});
    return GenCoBuchi{indexed("A")};
  }
  if (type == "rabin") {
    allow({}, {"G", "R"});
    return Rabin{pairs()};
  }
  if (type == "rabinchain") {
    allow({}, {"G", "R"});
    return RabinChain{pairs()};
  }
  if (type == "genrabin") {
    allow({}, {"G", "R"}, true);
    GenRabin c;
    auto R = indexed("R");
    std::size_t k = R.size();
    for (auto& s : sets) k = std::max(k, static_cast<std::size_t>(s.key.i));
    R.resize(k, none);
    c.pairs.resize(k);
    for (std::size_t i = 0; i < k; ++i) c.pairs[i].R = R[i];
    for (auto& s : sets) {
      if (s.key.base != "G") continue;
      if (s.key.l == 0) fail(s, "generalized goal sets are written G<pair>.<goal>");
      auto& G = c.pairs[static_cast<std::size_t>(s.key.i - 1)].G;
      if (static_cast<int>(G.size()) < s.key.l) G.resize(static_cast<std::size_t>(s.key.l), none);
      G[static_cast<std::size_t>(s.key.l - 1)] = s.set;
    }
    return c;
  }
  if (type == "parity") {
    allow({}, {"color"});
    auto colors = indexed("color");
    if (colors.size() % 2) colors.push_back(none);
    return Parity{colors};
  }
  if (type == "gr1") {
    allow({}, {"A", "F"});
    return GR1{indexed("A"), indexed("F")};
  }
  if (type == "muller") {
    allow({}, {"F"});
    return Muller{indexed("F")};
  }
  throw ParseError(cond_line, "unknown condition type '" + type + "'");
}

}  // namespace

GameFile parse_game_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool header = false;
  struct V {
    std::string name;
    Owner owner;
  };
  struct E {
    int u, v;
    bool live;
    int line;
  };
  std::vector<V> vertices;
  std::map<std::string, int> ids;
  std::vector<E> edges;
  std::string cond_type;
  int cond_line = 0;
  std::vector<std::pair<std::string, std::pair<std::vector<std::string>, int>>> raw_sets;

  auto lookup = [&](const std::string& name, int line) {
    auto it = ids.find(name);
    if (it == ids.end()) throw ParseError(line, "unknown vertex '" + name + "'");
    return it->second;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto words = split(line);
    if (words.empty()) continue;
    if (!header) {
      if (words.size() != 2 || words[0] != "fairgame" || words[1] != "v1")
        throw ParseError(line_no, "missing header 'fairgame v1'");
      header = true;
      continue;
    }
    auto colon = line.find(':');
    if (colon != std::string::npos) {
      if (cond_type.empty()) throw ParseError(line_no, "set line before 'condition'");
      auto key = split(line.substr(0, colon));
      if (key.size() != 1) throw ParseError(line_no, "malformed set key");
      raw_sets.push_back({key[0], {split(line.substr(colon + 1)), line_no}});
      continue;
    }
    if (words[0] == "vertex") {
      if (!cond_type.empty()) throw ParseError(line_no, "vertex after condition");
      if (words.size() != 3) throw ParseError(line_no, "expected 'vertex <name> <p0|p1|random>'");
      Owner o;
      if (words[2] == "p0")
        o = Owner::P0;
      else if (words[2] == "p1")
        o = Owner::P1;
      else if (words[2] == "random")
        o = Owner::Random;
      else
        throw ParseError(line_no, "unknown owner '" + words[2] + "'");
      if (ids.count(words[1])) throw ParseError(line_no, "duplicate vertex '" + words[1] + "'");
      ids[words[1]] = static_cast<int>(vertices.size());
      vertices.push_back({words[1], o});
    } else if (words[0] == "edge") {
      if (!cond_type.empty()) throw ParseError(line_no, "edge after condition");
      if (words.size() < 3 || words.size() > 4 || (words.size() == 4 && words[3] != "live"))
        throw ParseError(line_no, "expected 'edge <u> <v> [live]'");
      int u = lookup(words[1], line_no), v = lookup(words[2], line_no);
      bool live = words.size() == 4;
      if (live && vertices[static_cast<std::size_t>(u)].owner != Owner::P1)
        throw ParseError(line_no, "live edge from non-p1 vertex '" + words[1] + "'");
      edges.push_back({u, v, live, line_no});
    } else if (words[0] == "condition") {
      if (!cond_type.empty()) throw ParseError(line_no, "a file holds exactly one condition");
      if (words.size() != 2) throw ParseError(line_no, "expected 'condition <type>'");
      cond_type = words[1];
      cond_line = line_no;
    } else {
      throw ParseError(line_no, "unexpected '" + words[0] + "'");
    }
  }
  if (!header) throw ParseError(0, "missing header 'fairgame v1'");
  if (cond_type.empty()) throw ParseError(0, "missing condition");
  const int n = static_cast<int>(vertices.size());
  std::vector<SetLine> sets;
  for (auto& [key, body] : raw_sets) {
    auto k = parse_key(key);
    if (!k) throw ParseError(body.second, "malformed set key '" + key + "'");
    VertexSet s(static_cast<std::size_t>(n));
    for (auto& name : body.first) s.insert(lookup(name, body.second));
    sets.push_back({*k, s, body.second});
  }
  WinningCondition cond = build_condition(cond_type, sets, n, cond_line);

  bool stochastic = false;
  for (auto& v : vertices) stochastic = stochastic || v.owner == Owner::Random;
  GameFile f{GameGraph{}, cond};
  if (stochastic) {
    StochasticGameGraph g;
    for (auto& v : vertices) g.add_vertex(v.owner, v.name);
    for (auto& e : edges) g.add_edge(e.u, e.v);
    f.arena = std::move(g);
  } else {
    GameGraph g;
    for (auto& v : vertices) g.add_vertex(v.owner, v.name);
    for (auto& e : edges) g.add_edge(e.u, e.v, e.live);
    f.arena = std::move(g);
  }
  return f;
}

GameFile parse_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_game_text(buf.str());
}

int arena_size(const Arena& a) {
  return std::visit([](const auto& g) { return g.size(); }, a);
}

const std::string& vertex_name(const Arena& a, int v) {
  return std::visit([&](const auto& g) -> const std::string& { return g.name(v); }, a);
}

std::string names_of(const Arena& a, const VertexSet& s) {
  std::string out;
  s.for_each([&](int v) {
    if (!out.empty()) out += ' ';
    out += vertex_name(a, v);
  });
  return out;
}

std::string emit_game(const GameFile& f) {
  std::ostringstream out;
  out << "fairgame v1\n";
  const Arena& a = f.arena;
  const int n = arena_size(a);
  std::visit(overloaded{
                 [&](const GameGraph& g) {
                   for (int v = 0; v < n; ++v) out << "vertex " << g.name(v) << ' ' << owner_name(g.owner(v)) << '\n';
                   for (int v = 0; v < n; ++v)
                     for (int w : g.successors(v))
                       out << "edge " << g.name(v) << ' ' << g.name(w) << (g.is_live(v, w) ? " live" : "") << '\n';
                 },
                 [&](const StochasticGameGraph& g) {
                   for (int v = 0; v < n; ++v) out << "vertex " << g.name(v) << ' ' << owner_name(g.owner(v)) << '\n';
                   for (int v = 0; v < n; ++v)
                     for (int w : g.successors(v)) out << "edge " << g.name(v) << ' ' << g.name(w) << '\n';
                 },
             },
             a);
  out << "condition " << condition_keyword(f.cond) << '\n';
  auto set = [&](const std::string& key, const VertexSet& s) {
    out << key << ':';
    s.for_each([&](int v) { out << ' ' << vertex_name(a, v); });
    out << '\n';
  };
  auto list = [&](const std::string& base, const std::vector<VertexSet>& sets) {
    for (std::size_t i = 0; i < sets.size(); ++i) set(base + std::to_string(i + 1), sets[i]);
  };
  auto pairs = [&](const std::vector<RabinPair>& ps) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      set("G" + std::to_string(i + 1), ps[i].G);
      set("R" + std::to_string(i + 1), ps[i].R);
    }
  };
  std::visit(overloaded{
                 [&](const SafeReach& c) { set("T", c.T); set("Q", c.Q); },
                 [&](const Safety& c) { set("Q", c.Q); },
                 [&](const Buchi& c) { set("G", c.G); },
                 [&](const SafeBuchi& c) { set("G", c.G); set("Q", c.Q); },
                 [&](const CoBuchi& c) { set("A", c.A); },
                 [&](const GenBuchi& c) { list("F", c.F); set("Q", c.Q); },
                 [&](const GenCoBuchi& c) { list("A", c.A); },
                 [&](const Rabin& c) { pairs(c.pairs); },
                 [&](const RabinChain& c) { pairs(c.pairs); },
                 [&](const GenRabin& c) {
                   for (std::size_t i = 0; i < c.pairs.size(); ++i) {
                     for (std::size_t l = 0; l < c.pairs[i].G.size(); ++l)
                       set("G" + std::to_string(i + 1) + "." + std::to_string(l + 1), c.pairs[i].G[l]);
                     set("R" + std::to_string(i + 1), c.pairs[i].R);
                   }
                 },
                 [&](const Parity& c) { list("color", c.colors); },
                 [&](const GR1& c) { list("A", c.A); list("F", c.F); },
                 [&](const Muller& c) { list("F", c.F); },
             },
             f.cond);
  return out.str();
}

std::string emit_game(const GameGraph& g, const WinningCondition& c) { return emit_game(GameFile{g, c}); }

}  // namespace fairgame
