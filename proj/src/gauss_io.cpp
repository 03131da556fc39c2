#include "cwkit/gauss.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cwkit {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& tok, int line, const std::string& what) {
  try {
    size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "malformed " + what + " '" + tok + "'");
  }
}

struct RawRecord {
  std::string name;
  std::vector<long long> framings;
  bool have_framings = false;
  int framings_line = 0;
  std::vector<std::vector<long long>> component_entries;
  std::vector<int> component_lines;
  std::map<long long, int> signs;  // label -> +-1
  bool have_signs = false;
  int signs_line = 0;
  int base_component = 1;
  int base_gap = 0;
  int base_line = 0;
  int first_line = 0;
};

FramedLink build_link(const RawRecord& rec) {
  if (rec.component_entries.empty()) throw ParseError(rec.first_line, "record has no components");
  if (!rec.have_framings) throw ParseError(rec.first_line, "record has no framings line");
  if (!rec.have_signs) throw ParseError(rec.first_line, "record has no signs line");
  if (rec.framings.size() != rec.component_entries.size())
    throw ParseError(rec.framings_line,
                     "framing count mismatch: " + std::to_string(rec.framings.size()) + " framings for " +
                         std::to_string(rec.component_entries.size()) + " components");

  // Crossing labels are arbitrary positive integers; renumber densely by
  // ascending label value.
  std::map<long long, std::pair<int, int>> occurrences;  // label -> (over count, under count)
  for (size_t c = 0; c < rec.component_entries.size(); ++c) {
    for (long long entry : rec.component_entries[c]) {
      long long label = entry > 0 ? entry : -entry;
      auto& occ = occurrences[label];
      (entry > 0 ? occ.first : occ.second)++;
    }
  }
  for (const auto& [label, occ] : occurrences) {
    int total = occ.first + occ.second;
    if (occ.first > 1)
      throw ParseError(rec.component_lines.front(), "duplicate over-pass for crossing " + std::to_string(label));
    if (occ.second > 1)
      throw ParseError(rec.component_lines.front(), "duplicate under-pass for crossing " + std::to_string(label));
    if (total != 2)
      throw ParseError(rec.component_lines.front(),
                       "crossing " + std::to_string(label) + " appears " + std::to_string(total) + " times (expected 2)");
  }

  std::map<long long, int> dense;
  for (const auto& [label, occ] : occurrences) {
    int id = static_cast<int>(dense.size());
    dense[label] = id;
  }

  for (const auto& [label, s] : rec.signs)
    if (!occurrences.count(label))
      throw ParseError(rec.signs_line, "chiral sign for unknown crossing " + std::to_string(label));
  for (const auto& [label, occ] : occurrences)
    if (!rec.signs.count(label))
      throw ParseError(rec.signs_line, "missing chiral sign for crossing " + std::to_string(label));

  GaussDiagram g;
  g.arrows.resize(dense.size());
  for (const auto& [label, id] : dense) g.arrows[id].sign = rec.signs.at(label);
  for (size_t c = 0; c < rec.component_entries.size(); ++c) {
    std::vector<Slot> comp;
    for (long long entry : rec.component_entries[c]) {
      long long label = entry > 0 ? entry : -entry;
      comp.push_back(Slot{dense.at(label), entry > 0 ? End::Tail : End::Head});
    }
    g.components.push_back(std::move(comp));
  }

  if (rec.base_component != 1)
    throw ParseError(rec.base_line ? rec.base_line : rec.first_line,
                     "base point out of range (base must lie on the first component)");
  int gaps = std::max<int>(1, static_cast<int>(g.components[0].size()));
  if (rec.base_gap < 0 || rec.base_gap >= gaps)
    throw ParseError(rec.base_line ? rec.base_line : rec.first_line, "base point out of range");
  g.base = BasePoint{0, rec.base_gap};

  reindex_endpoints(g);
  try {
    check_valid(g);
  } catch (const ValidationError& e) {
    throw ParseError(rec.first_line, e.what());
  }

  FramedLink link;
  link.diagram = std::move(g);
  link.framings = rec.framings;
  link.name = rec.name;
  return link;
}

}  // namespace

std::vector<FramedLink> parse_links(const std::string& text) {
  std::vector<FramedLink> out;
  RawRecord rec;
  bool in_record = false;

  auto flush = [&]() {
    if (in_record) out.push_back(build_link(rec));
    rec = RawRecord{};
    in_record = false;
  };

  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) {
      flush();
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "expected 'key: value'");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (!in_record) {
      in_record = true;
      rec.first_line = lineno;
    }
    if (key == "name") {
      rec.name = value;
    } else if (key == "framings") {
      rec.have_framings = true;
      rec.framings_line = lineno;
      for (const std::string& tok : split_ws(value)) rec.framings.push_back(parse_int(tok, lineno, "framing"));
    } else if (key == "component") {
      std::vector<long long> entries;
      for (const std::string& tok : split_ws(value)) {
        long long v = parse_int(tok, lineno, "crossing entry");
        if (v == 0) throw ParseError(lineno, "crossing label 0 is not allowed");
        entries.push_back(v);
      }
      if (entries.empty()) throw ParseError(lineno, "empty component");
      rec.component_entries.push_back(std::move(entries));
      rec.component_lines.push_back(lineno);
    } else if (key == "signs") {
      rec.have_signs = true;
      rec.signs_line = lineno;
      for (const std::string& tok : split_ws(value)) {
        auto sep = tok.find(':');
        if (sep == std::string::npos || sep + 2 != tok.size() || (tok[sep + 1] != '+' && tok[sep + 1] != '-'))
          throw ParseError(lineno, "malformed sign token '" + tok + "'");
        long long label = parse_int(tok.substr(0, sep), lineno, "sign label");
        if (rec.signs.count(label))
          throw ParseError(lineno, "duplicate chiral sign for crossing " + std::to_string(label));
        rec.signs[label] = tok[sep + 1] == '+' ? 1 : -1;
      }
    } else if (key == "base") {
      rec.base_line = lineno;
      auto toks = split_ws(value);
      if (toks.size() != 2) throw ParseError(lineno, "base needs 'component gap'");
      rec.base_component = static_cast<int>(parse_int(toks[0], lineno, "base component"));
      rec.base_gap = static_cast<int>(parse_int(toks[1], lineno, "base gap"));
    } else {
      throw ParseError(lineno, "unknown key '" + key + "'");
    }
  }
  flush();
  return out;
}

FramedLink parse_link(const std::string& text) {
  auto links = parse_links(text);
  if (links.size() != 1)
    throw ParseError(1, "expected exactly one record, found " + std::to_string(links.size()));
  return links.front();
}

std::string serialize(const FramedLink& link) {
  const GaussDiagram& g = link.diagram;
  std::ostringstream os;
  if (!link.name.empty()) os << "name: " << link.name << "\n";
  os << "framings:";
  for (long long f : link.framings) os << " " << f;
  os << "\n";
  for (const auto& comp : g.components) {
    if (comp.empty()) throw std::invalid_argument("cannot serialize an empty component");
    os << "component:";
    for (const Slot& s : comp) os << " " << (s.end == End::Tail ? s.arrow + 1 : -(s.arrow + 1));
    os << "\n";
  }
  os << "signs:";
  for (int i = 0; i < g.arrow_count(); ++i) os << " " << (i + 1) << ":" << (g.arrows[i].sign > 0 ? '+' : '-');
  os << "\n";
  if (g.base) os << "base: 1 " << g.base->gap << "\n";
  return os.str();
}

}  // namespace cwkit
