#pragma once

namespace gaussdeg {
inline constexpr const char* kArtifactVersion = "1.0.0";
}
