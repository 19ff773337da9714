#ifndef CHROMA_LIMITS_HPP
#define CHROMA_LIMITS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chroma {

// Thrown when a configured resource cap would be exceeded. Operations fail
// loudly instead of returning truncated results.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Resource caps plus the worker-pool width. Exponential graphs grow as m^n
// and face posets grow much faster, so every expensive operation takes an
// explicit budget. Results never depend on the thread count.
struct SizeLimits {
    std::uint64_t max_vertices = 1'000'000;   // vertices of a constructed graph
    std::uint64_t max_simplices = 2'000'000;  // simplices enumerated per skeleton
    std::uint64_t max_paths = 1'000'000;      // alternating paths per source cell
    int threads = 1;                          // workers inside library calls
};

} // namespace chroma

#endif
