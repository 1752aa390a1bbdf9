#pragma once

// Figure scenes regenerated from the kernel: distance contrast, taxicab
// circle, unit t-radian, and the segment-splitting constructions.

#include "taxisect/scene.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace taxisect {

const std::vector<std::string>& demo_figure_names();

// Throws DomainError for an unknown name.
Scene demo_figure(std::string_view name);

}  // namespace taxisect
