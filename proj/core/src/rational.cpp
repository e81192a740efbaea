#include "gonalis/rational.hpp"

// All of Rat is inline; this translation unit just anchors the header in the
// library so missing-symbol issues surface at library build time.
namespace gonalis {
namespace {
[[maybe_unused]] const Rat kAnchor{};
}
}  // namespace gonalis
