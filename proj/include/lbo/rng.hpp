// Copyright 2026 The lbo Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>

namespace lbo {

/*!
 * SplitMix64.
 *
 * The state is a plain value: copies are independent streams, and split()
 * derives a child stream from (state, index) without advancing the parent.
 * Uniform doubles are built from the top 53 bits so results are
 * bit-identical on every platform.
 */
class SplitMix64
{
  public:
    using result_type = std::uint64_t;

    constexpr explicit SplitMix64(std::uint64_t seed = 0) noexcept
        : state_(seed)
    {
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept
    {
        return std::numeric_limits<result_type>::max();
    }

    constexpr result_type operator()() noexcept
    {
        state_ += kGamma;
        return mix(state_);
    }

    //! Uniform in [0, 1).
    constexpr double uniform() noexcept
    {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    constexpr double uniform(double lo, double hi) noexcept
    {
        return lo + (hi - lo) * uniform();
    }

    //! Uniform integer in [0, n).
    constexpr std::uint64_t below(std::uint64_t n) noexcept
    {
        // Multiply-shift; bias is < n / 2^64.
        __extension__ using u128 = unsigned __int128;
        return static_cast<std::uint64_t>(
            (static_cast<u128>((*this)()) * n) >> 64);
    }

    //! Independent child stream keyed by index; the parent is unchanged.
    constexpr SplitMix64 split(std::uint64_t index) const noexcept
    {
        return SplitMix64(mix(state_ ^ mix(index * kGamma + kGamma)));
    }

    constexpr std::uint64_t state() const noexcept { return state_; }

    friend constexpr bool
    operator==(SplitMix64 const&, SplitMix64 const&) = default;

  private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace lbo
