#pragma once
#include <random>

#include "npb/actions.hpp"
#include "npb/freealg.hpp"

namespace npb {

// Seeded, deterministic source of in-variety algebras and representations.
// Candidates are built constructively (truncated free algebras, ideal
// quotients, basis changes, the standard example families) and verified by
// classify/checkAction before being returned; plain rejection sampling over
// structure constants essentially never lands in a variety.
class Sampler {
public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  long nextLong(long lo, long hi); // inclusive bounds
  Scalar nextScalar(const Field& f, int spread = 2);

  BiAlgebra randomAlgebra(Variety v, const Field& f, int maxDim);

  struct Instance {
    BiAlgebra p;
    Representation rep;
  };
  Instance randomInstance(Variety v, const Field& f, int maxP, int maxM);

  std::mt19937_64& rng() { return rng_; }

private:
  std::mt19937_64 rng_;
  BiAlgebra shrinkToDim(Variety v, BiAlgebra p, int maxDim);
  BiAlgebra randomBasisChange(const BiAlgebra& p);
};

} // namespace npb
