#ifndef VCP_HASHING_HPP
#define VCP_HASHING_HPP

#include <cstdint>

namespace vcp {

// splitmix64 finalizer. Fixed constants so partition results are
// reproducible across platforms and builds.
inline std::uint64_t mix64(std::uint64_t x)
{
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

// Salted hash: h(key; seed) = mix64(key xor mix64(seed + golden)).
inline std::uint64_t hash_u64(std::uint64_t key, std::uint64_t seed)
{
    return mix64(key ^ mix64(seed + 0x9e3779b97f4a7c15ULL));
}

} // namespace vcp

#endif
