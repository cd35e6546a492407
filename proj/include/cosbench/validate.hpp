#pragma once

#include "cosbench/types.hpp"

#include <optional>
#include <string>

namespace cosbench {

// Structural invariant checks. Returns std::nullopt when the scene is valid,
// otherwise a human-readable reason. Generators must only emit scenes that
// pass these.

std::optional<std::string> validate(const BrickScene& s);
std::optional<std::string> validate(const NlvrScene& s);
std::optional<std::string> validate(const NavMap& m);
std::optional<std::string> validate_scene(const Scene& s);

} // namespace cosbench
