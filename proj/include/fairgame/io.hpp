#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "fairgame/condition.hpp"
#include "fairgame/game.hpp"

namespace fairgame {

using Arena = std::variant<GameGraph, StochasticGameGraph>;

struct GameFile {
  Arena arena;
  WinningCondition cond;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Format:
//   fairgame v1
//   vertex <name> <p0|p1|random>
//   edge <u> <v> [live]
//   condition <type>
//   <KEY>: <names...>
// '#' starts a comment. A file holding a random vertex yields a
// StochasticGameGraph (no live edges allowed there).
GameFile parse_game_text(const std::string& text);
GameFile parse_game(const std::string& path);

std::string emit_game(const GameFile& f);
std::string emit_game(const GameGraph& g, const WinningCondition& c);

int arena_size(const Arena& a);
const std::string& vertex_name(const Arena& a, int v);
std::string names_of(const Arena& a, const VertexSet& s);

}  // namespace fairgame
