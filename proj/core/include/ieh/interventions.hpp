#pragma once

#include <cstdint>

#include "ieh/matrix.hpp"
#include "ieh/signal.hpp"

namespace ieh {

/// Flip period, cyclic delay and flip-schedule offset, all in integer
/// samples. The delay is reduced modulo the series length on application.
struct InterventionParams {
  std::int64_t tau = 1;          // flip ON/OFF period, >= 1
  std::int64_t phi = 0;          // cyclic delay, >= 0
  std::int64_t flip_offset = 0;  // start offset of the flip schedule, >= 0
};

void validate(const InterventionParams& p);

/// Sign applied to sample i: -1 when floor((i - flip_offset) / tau) is even
/// (flip active in even-numbered blocks), +1 otherwise.
int flip_sign(std::int64_t i, std::int64_t tau, std::int64_t flip_offset);

/// Samplewise sign flip toggled on and off with period tau.
VoltageSeries periodic_flip(const VoltageSeries& v, std::int64_t tau, std::int64_t flip_offset = 0);

/// out_i = v_{(i + phi) mod d}; wrap-around delay.
VoltageSeries cyclic_shift(const VoltageSeries& v, std::int64_t phi);

/// Single-channel pipeline: the periodic flip alone.
VoltageSeries intervene_single(const VoltageSeries& v, const InterventionParams& p);

/// Two-channel pipeline: shift the second channel, sum, then flip jointly.
VoltageSeries intervene_pair(const VoltageSeries& v1, const VoltageSeries& v2,
                             const InterventionParams& p);

/// Explicit operator forms; both are orthogonal by construction.
Matrix flip_matrix(std::size_t d, std::int64_t tau, std::int64_t flip_offset = 0);
Matrix shift_matrix(std::size_t d, std::int64_t phi);

}  // namespace ieh
