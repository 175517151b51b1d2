#include "hsp/algebra/generator.hpp"

#include <array>
#include <utility>

#include "hsp/errors.hpp"

namespace hsp {

namespace {

constexpr std::array<std::pair<GeneratorClass, std::string_view>, 8> kClassNames{{
    {GeneratorClass::Parameter, "parameter"},
    {GeneratorClass::Coordinate, "coordinate"},
    {GeneratorClass::Differential, "differential"},
    {GeneratorClass::Derivative, "derivative"},
    {GeneratorClass::Group, "group"},
    {GeneratorClass::GroupInverse, "group_inverse"},
    {GeneratorClass::CoordinateInverse, "coordinate_inverse"},
    {GeneratorClass::Oscillator, "oscillator"},
}};

}  // namespace

std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string_view to_string(GeneratorClass c) {
  for (const auto& [k, name] : kClassNames)
    if (k == c) return name;
  return "unknown";
}

std::optional<Parity> parse_parity(std::string_view s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  return std::nullopt;
}

std::optional<GeneratorClass> parse_generator_class(std::string_view s) {
  for (const auto& [k, name] : kClassNames)
    if (name == s) return k;
  return std::nullopt;
}

Alphabet::Alphabet(std::vector<GeneratorDecl> generators) : gens_(std::move(generators)) {
  if (gens_.size() > 0xffff) throw ConstructionFailure("too many generators");
  inverse_of_.resize(gens_.size());
  inverse_.resize(gens_.size());
  bool seen_non_parameter = false;
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    const auto& g = gens_[k];
    auto id = static_cast<GenId>(k);
    if (g.is_parameter()) {
      if (seen_non_parameter) throw ConstructionFailure("parameter '" + g.name + "' after non-parameter generator");
      ++num_parameters_;
    } else {
      seen_non_parameter = true;
    }
    if (!by_name_.emplace(g.name, id).second) throw ConstructionFailure("duplicate generator '" + g.name + "'");
    for (const auto& alias : g.aliases)
      if (!by_name_.emplace(alias, id).second) throw ConstructionFailure("duplicate alias '" + alias + "'");
  }
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    const auto& g = gens_[k];
    if (!g.inverse_of) continue;
    auto base = find(*g.inverse_of);
    if (!base) throw ConstructionFailure("'" + g.name + "' inverts unknown generator '" + *g.inverse_of + "'");
    if (gens_[*base].parity != Parity::Even || g.parity != Parity::Even)
      throw ConstructionFailure("only even generators can be inverted ('" + g.name + "')");
    inverse_of_[k] = *base;
    inverse_[*base] = static_cast<GenId>(k);
  }
}

std::optional<GenId> Alphabet::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

GenId Alphabet::id(std::string_view name) const {
  auto g = find(name);
  if (!g) throw UnknownGenerator(std::string(name));
  return *g;
}

}  // namespace hsp
