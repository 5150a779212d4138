#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace decay {

/// SplitMix64; used to expand seeds into generator state.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

/// xoshiro256++. Stream k of a seed is built by hashing (seed, k), so any
/// trajectory's noise sequence is independent of execution order.
struct Xoshiro256pp {
  std::array<std::uint64_t, 4> s{};

  static Xoshiro256pp stream(std::uint64_t seed, std::uint64_t stream_index) {
    SplitMix64 sm(seed ^ (0xA3EC647659359ACDull * (stream_index + 1)));
    Xoshiro256pp g;
    do {
      for (auto& w : g.s) w = sm.next();
    } while (g.s[0] == 0 && g.s[1] == 0 && g.s[2] == 0 && g.s[3] == 0);
    return g;
  }

  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
    const std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
  }

  /// Uniform in (0, 1); never returns exactly 0.
  double uniform01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }
};

namespace detail {

/// Ziggurat tables for the standard normal (Marsaglia & Tsang, 128 layers).
struct ZigguratTables {
  std::uint32_t kn[128];
  double wn[128];
  double fn[128];

  ZigguratTables() {
    constexpr double m = 2147483648.0;  // 2^31
    double dn = 3.442619855899;
    double tn = dn;
    const double vn = 9.91256303526217e-3;
    double q = vn / std::exp(-0.5 * dn * dn);
    kn[0] = static_cast<std::uint32_t>((dn / q) * m);
    kn[1] = 0;
    wn[0] = q / m;
    wn[127] = dn / m;
    fn[0] = 1.0;
    fn[127] = std::exp(-0.5 * dn * dn);
    for (int i = 126; i >= 1; --i) {
      dn = std::sqrt(-2.0 * std::log(vn / dn + std::exp(-0.5 * dn * dn)));
      kn[i + 1] = static_cast<std::uint32_t>((dn / tn) * m);
      tn = dn;
      fn[i] = std::exp(-0.5 * dn * dn);
      wn[i] = dn / m;
    }
  }
};

inline const ZigguratTables& ziggurat() {
  static const ZigguratTables tables;
  return tables;
}

}  // namespace detail

/// Standard normal deviates (ziggurat with exact wedge/tail fallback) on top
/// of a dedicated xoshiro stream.
struct GaussianStream {
  Xoshiro256pp rng;

  static GaussianStream stream(std::uint64_t seed, std::uint64_t stream_index) {
    return GaussianStream{Xoshiro256pp::stream(seed, stream_index)};
  }

  double next() {
    const auto& z = detail::ziggurat();
    for (;;) {
      const std::int32_t hz = static_cast<std::int32_t>(rng.next() >> 32);
      const std::uint32_t iz = static_cast<std::uint32_t>(hz) & 127u;
      if (static_cast<std::uint32_t>(hz < 0 ? -static_cast<std::int64_t>(hz)
                                            : static_cast<std::int64_t>(hz)) < z.kn[iz]) {
        return hz * z.wn[iz];
      }
      constexpr double r = 3.442619855899;
      if (iz == 0) {  // tail
        double x, y;
        do {
          x = -std::log(rng.uniform01()) / r;
          y = -std::log(rng.uniform01());
        } while (y + y < x * x);
        return hz > 0 ? r + x : -(r + x);
      }
      const double x = hz * z.wn[iz];
      if (z.fn[iz] + rng.uniform01() * (z.fn[iz - 1] - z.fn[iz]) < std::exp(-0.5 * x * x)) {
        return x;
      }
    }
  }
};

}  // namespace decay
