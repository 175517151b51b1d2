#include "hsp/text/presentation_io.hpp"

#include <sstream>
#include <vector>

#include "hsp/errors.hpp"
#include "hsp/text/parser.hpp"

namespace hsp {

std::string write_presentation(const Presentation& pres) {
  const Alphabet& al = *pres.alphabet();
  std::ostringstream out;
  out << "presentation " << pres.name() << "\n";
  for (const auto& g : al.generators()) {
    out << "gen " << g.name << " parity=" << to_string(g.parity) << " class=" << to_string(g.cls);
    if (g.inverse_of) out << " inverse_of=" << *g.inverse_of;
    if (!g.aliases.empty()) {
      out << " alias=";
      for (std::size_t k = 0; k < g.aliases.size(); ++k) out << (k ? "," : "") << g.aliases[k];
    }
    out << "\n";
  }
  for (const auto& r : pres.rules()) out << "rule " << to_string(al, r.lhs) << " -> " << to_string(r.rhs) << "\n";
  return out.str();
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> parts;
  std::istringstream in{std::string(line)};
  for (std::string s; in >> s;) parts.push_back(s);
  return parts;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

}  // namespace

PresentationPtr read_presentation(std::string_view text) {
  std::string name = "unnamed";
  std::vector<GeneratorDecl> gens;
  struct PendingRule {
    std::size_t offset;
    std::string lhs;
    std::string rhs;
  };
  std::vector<PendingRule> pending;

  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto parts = split_ws(line);
    if (!parts.empty()) {
      const std::string& kw = parts[0];
      if (kw == "presentation") {
        if (parts.size() != 2) throw SyntaxError(offset, "expected 'presentation <name>'");
        name = parts[1];
      } else if (kw == "gen") {
        if (parts.size() < 2) throw SyntaxError(offset, "expected a generator name");
        GeneratorDecl g;
        g.name = parts[1];
        bool have_parity = false, have_class = false;
        for (std::size_t k = 2; k < parts.size(); ++k) {
          auto eq = parts[k].find('=');
          if (eq == std::string::npos) throw SyntaxError(offset, "expected key=value, got '" + parts[k] + "'");
          std::string key = parts[k].substr(0, eq), value = parts[k].substr(eq + 1);
          if (key == "parity") {
            auto p = parse_parity(value);
            if (!p) throw SyntaxError(offset, "bad parity '" + value + "'");
            g.parity = *p;
            have_parity = true;
          } else if (key == "class") {
            auto c = parse_generator_class(value);
            if (!c) throw SyntaxError(offset, "bad class '" + value + "'");
            g.cls = *c;
            have_class = true;
          } else if (key == "inverse_of") {
            g.inverse_of = value;
          } else if (key == "alias") {
            g.aliases = split_commas(value);
          } else {
            throw SyntaxError(offset, "unknown key '" + key + "'");
          }
        }
        if (!have_parity || !have_class) throw SyntaxError(offset, "gen needs parity= and class=");
        gens.push_back(std::move(g));
      } else if (kw == "rule") {
        auto start = line.find("rule") + 4;
        auto arrow = line.find("->", start);
        if (arrow == std::string_view::npos) throw SyntaxError(offset, "expected '->'");
        pending.push_back({offset + start, std::string(line.substr(start, arrow - start)),
                           std::string(line.substr(arrow + 2))});
      } else {
        throw SyntaxError(offset, "unknown directive '" + kw + "'");
      }
    }
    offset = end + 1;
  }

  PresentationBuilder builder(name, std::move(gens));
  for (const auto& r : pending) {
    Expression lhs = [&] {
      try {
        return parse_expression(r.lhs, builder.alphabet());
      } catch (const SyntaxError& e) {
        throw SyntaxError(r.offset + e.position(), e.detail());
      }
    }();
    if (lhs.size() != 1 || !lhs.terms().begin()->second.is_one() || lhs.terms().begin()->first.empty())
      throw SyntaxError(r.offset, "rule lhs must be a single word");
    Expression rhs = [&] {
      try {
        return parse_expression(r.rhs, builder.alphabet());
      } catch (const SyntaxError& e) {
        throw SyntaxError(r.offset + r.lhs.size() + 2 + e.position(), e.detail());
      }
    }();
    builder.rule(lhs.terms().begin()->first, std::move(rhs));
  }
  return builder.build(Validation::Full);
}

}  // namespace hsp
