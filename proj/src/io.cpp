#include "domino/io.hpp"

#include <algorithm>
#include <sstream>

namespace domino {

namespace {

Json square_json(const Square& s) { return Json::array({s.row, s.col}); }

Square square_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw DomainError("a square must be [row, col]");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const DominoTableau& t) {
  Json out;
  out["rank"] = t.rank();
  if (!t.has_staircase_core()) out["core"] = t.core();
  Json dominos = Json::array();
  for (const Domino& d : t.dominos()) {
    dominos.push_back({{"label", d.label()}, {"cells", Json::array({square_json(d.first()), square_json(d.second())})}});
  }
  out["dominoes"] = std::move(dominos);
  return out;
}

Json to_json(const TableauPair& p) { return {{"left", to_json(p.left)}, {"right", to_json(p.right)}}; }

Json to_json(const CycleSet& c, const CycleClass& cls) {
  Json out;
  out["labels"] = c.labels;
  out["kind"] = to_string(cls.kind);
  out["sb"] = cls.back ? square_json(*cls.back) : Json(nullptr);
  out["sf"] = cls.front ? square_json(*cls.front) : Json(nullptr);
  return out;
}

Json to_json(const CellPartition& p) {
  Json blocks = Json::array();
  for (const auto& block : p.blocks) {
    Json words = Json::array();
    for (const SignedPermutation& w : block) words.push_back(format_word(w));
    blocks.push_back(std::move(words));
  }
  return {{"kind", to_string(p.kind)}, {"n", p.n}, {"rank", p.rank}, {"blocks", std::move(blocks)}};
}

Json to_json(const VerifyReport& r) {
  Json out;
  out["suite"] = r.suite;
  out["n"] = r.n;
  out["rank"] = r.rank;
  if (r.m >= 0) out["m"] = r.m;
  out["checked"] = r.checked;
  out["violations"] = r.violations;
  out["passed"] = r.passed();
  out["witnesses"] = r.witnesses;
  return out;
}

DominoTableau tableau_from_json(const Json& j) {
  try {
    const Json& rank = field(j, "rank");
    if (!rank.is_number_integer()) throw DomainError("rank must be an integer");
    std::vector<Domino> dominos;
    for (const Json& d : field(j, "dominoes")) {
      const Json& cells = field(d, "cells");
      if (!cells.is_array() || cells.size() != 2) throw DomainError("a domino has exactly two cells");
      const Json& label = field(d, "label");
      if (!label.is_number_integer()) throw DomainError("label must be an integer");
      dominos.emplace_back(label.get<int>(), square_from(cells[0]), square_from(cells[1]));
    }
    if (j.contains("core")) return DominoTableau(rank.get<int>(), j.at("core").get<Partition>(), std::move(dominos));
    return DominoTableau(rank.get<int>(), std::move(dominos));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed tableau: ") + e.what());
  }
}

TableauPair pair_from_json(const Json& j) {
  return {tableau_from_json(field(j, "left")), tableau_from_json(field(j, "right"))};
}

std::string render_ascii(const DominoTableau& t) {
  const std::vector<Square> cells = t.squares();
  if (cells.empty()) return "(empty)\n";
  int rows = 0, cols = 0, digits = 1;
  for (const Square& s : cells) {
    rows = std::max(rows, s.row);
    cols = std::max(cols, s.col);
  }
  for (const Domino& d : t.dominos()) digits = std::max(digits, static_cast<int>(std::to_string(d.label()).size()));

  const int width = digits + 2;  // interior of one square
  const int stride = width + 1;
  std::vector<std::string> canvas(2 * rows + 1, std::string(cols * stride + 1, ' '));
  auto put = [&](int y, int x, const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i) canvas[y][x + i] = text[i];
  };

  for (const Square& s : cells) {
    const int top = 2 * (s.row - 1), left = (s.col - 1) * stride;
    put(top, left, "+" + std::string(width, '-') + "+");
    put(top + 2, left, "+" + std::string(width, '-') + "+");
    canvas[top + 1][left] = '|';
    canvas[top + 1][left + stride] = '|';
    if (t.in_core(s)) put(top + 1, left + 1 + (width - 1) / 2, ".");
  }
  for (const Domino& d : t.dominos()) {
    const Square a = d.first();
    const int top = 2 * (a.row - 1), left = (a.col - 1) * stride;
    const std::string label = std::to_string(d.label());
    if (d.horizontal()) {
      canvas[top + 1][left + stride] = ' ';
      const int span = 2 * width + 1;
      put(top + 1, left + 1 + (span - static_cast<int>(label.size())) / 2, label);
    } else {
      put(top + 2, left + 1, std::string(width, ' '));
      put(top + 1, left + 1 + (width - static_cast<int>(label.size())) / 2, label);
    }
  }

  // A joint inside a straight wall is not a corner of anything.
  const std::vector<std::string> drawn = canvas;
  auto at = [&](int y, int x) {
    if (y < 0 || y >= static_cast<int>(drawn.size()) || x < 0 || x >= static_cast<int>(drawn[y].size())) return ' ';
    return drawn[y][x];
  };
  for (int y = 0; y < static_cast<int>(drawn.size()); ++y) {
    for (int x = 0; x < static_cast<int>(drawn[y].size()); ++x) {
      if (drawn[y][x] != '+') continue;
      const bool up = at(y - 1, x) == '|', down = at(y + 1, x) == '|';
      const bool left = at(y, x - 1) == '-', right = at(y, x + 1) == '-';
      if (left && right && !up && !down) canvas[y][x] = '-';
      if (up && down && !left && !right) canvas[y][x] = '|';
    }
  }

  std::string out;
  for (std::string& line : canvas) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

std::string render_ascii(const TableauPair& p) {
  auto split = [](const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
  };
  const std::vector<std::string> left = split(render_ascii(p.left));
  const std::vector<std::string> right = split(render_ascii(p.right));
  std::size_t width = 0;
  for (const std::string& l : left) width = std::max(width, l.size());

  std::string out;
  for (std::size_t i = 0; i < std::max(left.size(), right.size()); ++i) {
    std::string line = i < left.size() ? left[i] : "";
    if (i < right.size()) line += std::string(width - line.size() + 4, ' ') + right[i];
    out += line + "\n";
  }
  return out;
}

std::string to_dot(int n, int rank, const std::vector<OperatorEdge>& edges) {
  std::ostringstream os;
  os << "graph lambda_n" << n << "_r" << rank << " {\n";
  for (const SignedPermutation& w : enumerate_group(n)) os << "  \"" << format_word(w) << "\";\n";
  for (const OperatorEdge& e : edges) {
    os << "  \"" << format_word(e.from) << "\" -- \"" << format_word(e.to) << "\" [label=\"" << to_string(e.op)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace domino
