#pragma once

#include <cstdint>

namespace ewens {

// Names one reproducible random stream. Equal (seed, stream_id) gives a
// bit-identical sequence on every platform; distinct stream_ids give
// statistically independent streams for parallel work.
struct RandomSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  friend bool operator==(const RandomSeed&, const RandomSeed&) = default;
};

namespace detail {

// SplitMix64 finalizer (Steele, Lea, Flood; also xorshift-family seeding).
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kStreamSalt = 0xD1B54A32D192ED03ULL;
inline constexpr std::uint64_t kSubstreamSalt = 0x8BB84B93962EACC9ULL;

}  // namespace detail

// SplitMix64 generator. The state walks by the golden-ratio increment and
// each output is the mixed state; the initial state is a hash of
// (seed, stream_id), so streams are cheap to derive and portable.
//
// The algorithm and all constants are fixed: seeds quoted in reports and
// tests reproduce exactly on any conforming platform.
class SplitMix64 {
 public:
  explicit SplitMix64(RandomSeed rs)
      : state_(detail::mix64(rs.seed + detail::kGolden) ^
               detail::mix64(rs.stream_id + detail::kStreamSalt)) {}

  // Child stream for one unit of work (e.g. one Monte Carlo sample).
  // Partitioning work over substreams makes results independent of how
  // the work is batched across threads.
  static SplitMix64 substream(RandomSeed rs, std::uint64_t index) {
    SplitMix64 g(rs);
    g.state_ = detail::mix64(g.state_ ^ (index + detail::kSubstreamSalt));
    return g;
  }

  std::uint64_t next_u64() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  // Uniform on [0,1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ewens
