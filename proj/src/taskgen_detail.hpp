#pragma once

// Internals shared by the taskgen translation units.

#include <cstdint>

namespace cosbench {
namespace taskgen {
namespace detail {

constexpr uint64_t kTagStructure = 1;
constexpr uint64_t kTagColors = 2;
constexpr uint64_t kTagLabels = 3;
constexpr uint64_t kTagTarget = 4;
constexpr uint64_t kTagDescription = 5;
constexpr uint64_t kTagSize = 6;
constexpr uint64_t kTagNlvr = 7;
constexpr uint64_t kTagNav = 8;

constexpr uint64_t kEvalStream = 0xE7A1;
constexpr uint64_t kDemoStream = 0xDE30;

constexpr int kMaxResample = 10000;

} // namespace detail
} // namespace taskgen
} // namespace cosbench
