#pragma once

#include <string>

namespace chkit {

enum class Tri { Yes, No, Unknown };

inline std::string tri_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    default: return "Unknown";
  }
}

}  // namespace chkit
