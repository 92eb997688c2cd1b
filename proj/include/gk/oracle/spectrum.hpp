#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gk/oracle/presentation.hpp"

namespace gk::oracle {

struct SpectrumReport {
  GroupId label;
  enum class Mode { ExactEnum, CycleType, RationalForm, Sampled } mode =
      Mode::ExactEnum;
  std::vector<uint64_t> orders;             // sorted element orders
  std::map<uint64_t, uint64_t> counts;      // ExactEnum: how many per order
  Int group_size = 0;                       // enumerated size (quotient size)
  uint64_t budget = 0, seed = 0, samples = 0;
  std::map<uint64_t, std::string> witness;  // Sampled: order -> element text

  bool exact() const { return mode != Mode::Sampled; }
  bool contains(uint64_t m) const;
  std::string to_json() const;
};

/// Fully enumerated group: packed canonical keys, sorted.
struct EnumeratedGroup {
  Presentation pres;
  std::vector<u128> elements;
};

/// Breadth-first closure under the generators; identifies scalar classes
/// when the presentation is projective. Throws if the size would exceed
/// `bound`, or if an expected order is set and the closure misses it.
EnumeratedGroup enumerate_group(const Presentation& pres, const Int& bound);

SpectrumReport enumerate_spectrum(const Presentation& pres, const Int& bound);
SpectrumReport spectrum_of(const EnumeratedGroup& g);

/// Spectrum of the subgroup cut out by `pred` (membership filter).
SpectrumReport subgroup_spectrum(const EnumeratedGroup& g,
                                 const std::function<bool(const Mat&)>& pred,
                                 const GroupId& label, const Int& expected);

/// Product-replacement random walk; every reported order is the exact order
/// of a recorded group element (stored as its matrix text). Deterministic
/// for a fixed seed and budget.
SpectrumReport sample_spectrum(const Presentation& pres, uint64_t budget,
                               uint64_t seed);

/// Exact spectrum of A_n / S_n / (S_k x S_{n-k}) n A_n by cycle types.
SpectrumReport cycle_type_spectrum(const GroupId& g);

/// Exact spectrum of GL_n(q) = SL_n(q) = L_n(q) at q = 2 from rational
/// canonical forms: block of an irreducible of degree d with multiplicative
/// order e, Jordan multiplicity k, has order e * p^ceil(log_p k).
SpectrumReport rational_form_spectrum(int n, int q);

/// Order of the coset (modulo scalars when projective) of a matrix.
unsigned presentation_element_order(const Presentation& pres, const Mat& m);

}  // namespace gk::oracle
