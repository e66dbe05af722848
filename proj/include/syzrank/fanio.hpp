#pragma once

#include <string>

#include "syzrank/toric.hpp"

namespace syzrank {

// Fan file format:
//   rays: (1, 0) (0, 1) (-1, 0) (0, -1)
//   cones: {0, 1} {1, 2} {2, 3} {3, 0}
//   complete: true
// '#' starts a comment; whitespace and line breaks are free-form.
Fan parse_fan_text(const std::string& text);
Fan load_fan_file(const std::string& path);

}  // namespace syzrank
