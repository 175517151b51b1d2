#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hsp {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

enum class GeneratorClass : std::uint8_t {
  Parameter,
  Coordinate,
  Differential,
  Derivative,
  Group,
  GroupInverse,
  CoordinateInverse,
  Oscillator,
};

std::string_view to_string(Parity p);
std::string_view to_string(GeneratorClass c);
std::optional<Parity> parse_parity(std::string_view s);
std::optional<GeneratorClass> parse_generator_class(std::string_view s);

using GenId = std::uint16_t;

struct GeneratorDecl {
  std::string name;
  Parity parity = Parity::Even;
  GeneratorClass cls = GeneratorClass::Coordinate;
  /// Name of the generator this one inverts, for adjoined inverses.
  std::optional<std::string> inverse_of;
  /// Extra spellings accepted by the parser.
  std::vector<std::string> aliases;

  bool is_parameter() const { return cls == GeneratorClass::Parameter; }
  std::uint32_t weight() const { return is_parameter() ? 0 : 1; }
};

/// Ordered generator set. A generator's id is its sort position.
class Alphabet {
 public:
  /// Throws ConstructionFailure on duplicate names or misplaced parameters.
  explicit Alphabet(std::vector<GeneratorDecl> generators);

  std::size_t size() const { return gens_.size(); }
  const GeneratorDecl& operator[](GenId id) const { return gens_[id]; }
  const std::vector<GeneratorDecl>& generators() const { return gens_; }

  std::optional<GenId> find(std::string_view name) const;
  /// Throws UnknownGenerator.
  GenId id(std::string_view name) const;

  Parity parity(GenId id) const { return gens_[id].parity; }
  bool is_parameter(GenId id) const { return id < num_parameters_; }
  std::size_t num_parameters() const { return num_parameters_; }
  /// Id of the generator that `id` inverts, if any.
  std::optional<GenId> inverse_of(GenId id) const { return inverse_of_[id]; }
  /// Id of the adjoined inverse of `id`, if any.
  std::optional<GenId> inverse(GenId id) const { return inverse_[id]; }

 private:
  std::vector<GeneratorDecl> gens_;
  std::unordered_map<std::string, GenId> by_name_;
  std::vector<std::optional<GenId>> inverse_of_;
  std::vector<std::optional<GenId>> inverse_;
  std::size_t num_parameters_ = 0;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

}  // namespace hsp
