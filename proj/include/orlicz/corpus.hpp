#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orlicz/grid.hpp"

namespace orlicz {

/*! One synthetic test function with its provenance tag. Cone entries carry
 *  the construction's smoothness bound and exponent; indicator entries carry
 *  their window edge length in `scale` so ratio sweeps can group them by
 *  size; other tags leave those fields at 0. */
struct CorpusEntry {
  std::string tag;  // indicator | constant | spike | lipschitz-cone | random-smooth
  std::string name;
  SampledFunction f;
  double lipschitz_bound = 0.0;
  double beta = 0.0;
  double scale = 0.0;
};

struct Corpus {
  std::uint64_t seed = 0;
  std::vector<CorpusEntry> entries;
};

/*! Snaps v to the nearest multiple of 2^-26. Window sums of snapped values
 *  of moderate size stay exact in double precision on every grid this
 *  project uses, which is what lets the pointwise suites compare results
 *  without tolerances. */
double quantize_value(double v);
SampledFunction quantized(const SampledFunction& f);

/*! Uniform noise in [0,1) smoothed by `passes` rounds of neighbor averaging
 *  (zero outside the grid unless Periodic), then snapped to the
 *  exact-summation lattice. Same seed, same function, on every platform. */
SampledFunction synth_random_smooth(const Grid& g, std::uint64_t seed, int passes = 2);

/*! Default mix: 8 indicators at dyadic sizes, 4 cone sums of order beta,
 *  2 spikes of order gamma, 4 random smooth fields. The caller picks gamma
 *  small enough that dist^{-gamma} stays integrable for the norms in play.
 *  Cone tips sit in the low half of the grid and spikes in the high half, so
 *  the two sharp features never share a window. */
Corpus default_corpus(const Grid& g, std::uint64_t seed, double beta, double gamma);

}  // namespace orlicz
