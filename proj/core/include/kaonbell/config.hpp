#pragma once

#include <filesystem>
#include <string_view>

#include "kaonbell/kinematics.hpp"

namespace kaonbell {

/// Parses `key = value` lines (keys: gamma_s, gamma_l, delta_m, velocity).
/// Blank lines and `#` comments are skipped; absent keys keep their defaults.
/// Unknown keys, repeated keys and malformed numbers throw DomainError, as do
/// constants that fail DecayParams::validate().
DecayParams parse_decay_params(std::string_view text);

DecayParams load_decay_params(const std::filesystem::path& path);

}  // namespace kaonbell
