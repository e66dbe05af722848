#pragma once

#include <stdexcept>
#include <string>

namespace syzrank {

// Cross-check or arithmetic failure inside the library, as opposed to bad
// input. The CLI maps this to its own exit code.
struct internal_inconsistency : std::logic_error {
    explicit internal_inconsistency(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace syzrank
