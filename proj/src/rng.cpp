#include "ris/rng.hpp"

namespace ris {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : Rng(seed, stream, 0) {}

Rng::Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) {
    // Mix the key words through splitmix so neighbouring trials decorrelate.
    std::uint64_t key = seed;
    std::uint64_t mixed = splitmix64(key);
    key = mixed ^ (stream * 0xd1b54a32d192ed03ULL);
    mixed = splitmix64(key);
    key = mixed ^ (substream * 0x8cb92ba72f3d8dd7ULL);
    for (auto& word : s_) {
        word = splitmix64(key);
    }
}

Rng::result_type Rng::operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double Rng::normal() { return normal_(*this); }

}  // namespace ris
