#include "ieh/interventions.hpp"

namespace ieh {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

std::int64_t wrap_index(std::int64_t i, std::int64_t d) {
  std::int64_t m = i % d;
  if (m < 0) {
    m += d;
  }
  return m;
}

}  // namespace

void validate(const InterventionParams& p) {
  if (p.tau < 1) {
    throw ConfigError("tau must be at least 1 sample");
  }
  if (p.phi < 0) {
    throw ConfigError("phi must be nonnegative");
  }
  if (p.flip_offset < 0) {
    throw ConfigError("flip_offset must be nonnegative");
  }
}

int flip_sign(std::int64_t i, std::int64_t tau, std::int64_t flip_offset) {
  return floor_div(i - flip_offset, tau) % 2 == 0 ? -1 : 1;
}

VoltageSeries periodic_flip(const VoltageSeries& v, std::int64_t tau, std::int64_t flip_offset) {
  if (tau < 1) {
    throw ConfigError("tau must be at least 1 sample");
  }
  VoltageSeries out = v;
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    if (flip_sign(static_cast<std::int64_t>(i), tau, flip_offset) < 0) {
      out.samples[i] = -out.samples[i];
    }
  }
  return out;
}

VoltageSeries cyclic_shift(const VoltageSeries& v, std::int64_t phi) {
  const auto d = static_cast<std::int64_t>(v.samples.size());
  VoltageSeries out;
  out.sample_rate = v.sample_rate;
  out.samples.resize(v.samples.size());
  for (std::int64_t i = 0; i < d; ++i) {
    out.samples[static_cast<std::size_t>(i)] =
        v.samples[static_cast<std::size_t>(wrap_index(i + phi, d))];
  }
  return out;
}

VoltageSeries intervene_single(const VoltageSeries& v, const InterventionParams& p) {
  validate(p);
  return periodic_flip(v, p.tau, p.flip_offset);
}

VoltageSeries intervene_pair(const VoltageSeries& v1, const VoltageSeries& v2,
                             const InterventionParams& p) {
  validate(p);
  if (v1.samples.size() != v2.samples.size()) {
    throw DimensionError("intervene_pair: channel lengths differ");
  }
  const VoltageSeries shifted = cyclic_shift(v2, p.phi);
  VoltageSeries sum = v1;
  for (std::size_t i = 0; i < sum.samples.size(); ++i) {
    sum.samples[i] += shifted.samples[i];
  }
  return periodic_flip(sum, p.tau, p.flip_offset);
}

Matrix flip_matrix(std::size_t d, std::int64_t tau, std::int64_t flip_offset) {
  if (tau < 1) {
    throw ConfigError("tau must be at least 1 sample");
  }
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = flip_sign(static_cast<std::int64_t>(i), tau, flip_offset);
  }
  return m;
}

Matrix shift_matrix(std::size_t d, std::int64_t phi) {
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto j = wrap_index(static_cast<std::int64_t>(i) + phi, static_cast<std::int64_t>(d));
    m(i, static_cast<std::size_t>(j)) = 1.0;
  }
  return m;
}

}  // namespace ieh
