#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsp {

/// Base class for every failure raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// The denominator vanishes at the evaluation point and the numerator does not.
class PoleAtPoint : public Error {
 public:
  explicit PoleAtPoint(const std::string& what) : Error("pole at point: " + what) {}
};

/// Both numerator and denominator vanish. Unreachable for reduced fractions.
class IndeterminateAtPoint : public Error {
 public:
  explicit IndeterminateAtPoint(const std::string& what)
      : Error("indeterminate at point: " + what) {}
};

class MixedPresentation : public Error {
 public:
  MixedPresentation() : Error("expressions belong to different alphabets") {}
};

class FuelExhausted : public Error {
 public:
  explicit FuelExhausted(std::size_t budget)
      : Error("rewrite budget of " + std::to_string(budget) + " steps exhausted"),
        budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

class MissingImage : public Error {
 public:
  explicit MissingImage(const std::string& generator)
      : Error("no image for generator '" + generator + "'"), generator_(generator) {}
  const std::string& generator() const { return generator_; }

 private:
  std::string generator_;
};

class IncompleteLocalization : public Error {
 public:
  explicit IncompleteLocalization(const std::string& what)
      : Error("incomplete localization: " + what) {}
};

class ConstructionFailure : public Error {
 public:
  explicit ConstructionFailure(const std::string& what)
      : Error("construction failure: " + what) {}
};

class RoundTripFailure : public Error {
 public:
  RoundTripFailure(const std::string& generator, const std::string& residual)
      : Error("round trip failed on '" + generator + "', residual " + residual) {}
};

class NotInvolutive : public Error {
 public:
  explicit NotInvolutive(const std::string& generator)
      : Error("involution squared is not the identity on '" + generator + "'"),
        generator_(generator) {}
  const std::string& generator() const { return generator_; }

 private:
  std::string generator_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error("syntax error at " + std::to_string(position) + ": " + what),
        position_(position),
        detail_(what) {}
  std::size_t position() const { return position_; }
  /// The message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown generator '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace hsp
