#pragma once

#include <string>
#include <string_view>

#include "hsp/algebra/presentation.hpp"

namespace hsp {

/// Line format, '#' starts a comment:
///   presentation <name>
///   gen <name> parity=<even|odd> class=<class> [inverse_of=<name>] [alias=<a,b,...>]
///   rule <word> -> <expression>
/// Generators are listed in ascending order.
std::string write_presentation(const Presentation& pres);

/// Builds with full validation. Throws SyntaxError (byte offset into
/// `text`), UnknownGenerator or ConstructionFailure.
PresentationPtr read_presentation(std::string_view text);

}  // namespace hsp
