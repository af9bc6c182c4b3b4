#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groebner/ideal.hpp"

namespace locmult {

struct SamuelConfig {
  GbConfig gb;
  // Hilbert-Samuel values are sampled for n = 1..max_n.
  unsigned max_n = 24;
  // Number of trailing differences that must agree.
  unsigned window = 3;
};

// A multiplicity together with the evidence that produced it.
struct MultiplicityCertificate {
  enum class Method { exact_hilbert_series, finite_difference };

  std::int64_t value = 0;
  unsigned dimension = 0;
  Method method = Method::exact_hilbert_series;

  // exact_hilbert_series
  std::optional<HilbertSeries> series;

  // finite_difference: samples[i] = hs(i + 1); differences[i] is the d-th
  // difference at n = window_start + i.
  std::vector<std::uint64_t> samples;
  unsigned window_start = 0;
  unsigned window_width = 0;
  std::vector<std::int64_t> differences;
};

std::string method_name(MultiplicityCertificate::Method m);

// Throws PreconditionError("support-not-origin") unless I + a has finite
// colength and every variable lies in its radical.
void require_origin_support(const Ideal& ideal, const Ideal& a, const GbConfig& config = {});

// length(A/(I + a^n)) at the origin.
std::uint64_t hs_function(const Ideal& ideal, const Ideal& a, unsigned n, const SamuelConfig& config = {});

// hs(I, m, n) for n = 0..bound from a single truncated standard basis.
std::vector<std::uint64_t> hs_maximal(const Ideal& ideal, unsigned bound, const GbConfig& config = {});

// The stabilized d-th difference of n -> hs(I, a, n).
MultiplicityCertificate multiplicity_wrt(const Ideal& ideal, const Ideal& a, unsigned d,
                                         const SamuelConfig& config = {});

// d-th backward difference of values at index n (values[k] = f(k)).
std::int64_t backward_difference(const std::vector<std::uint64_t>& values, unsigned n, unsigned d);

}  // namespace locmult
