#pragma once

#include <rotor/plmap.hpp>

#include <string>

namespace rotor::svg {

// Graph of a lift over one period [0, 1]. Jumps are drawn with open circles at the one-sided
// limits and a filled circle at the value.
std::string render(const PLLift& f, const std::string& title = "");
void emit(const PLLift& f, const std::string& path, const std::string& title = "");

}  // namespace rotor::svg
