#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clifcomp/analysis.hpp"

namespace clifcomp {

// Finite set of exact vectors sharing one signature, kept sorted in the
// structural order so reports and CSV exports are reproducible.
struct VectorSet {
  Signature sig = Signature::of(3, 0);
  NormId form = NormId::NStar;
  std::vector<Multivector> elements;

  bool contains(const Multivector& m) const;
};

VectorSet make_vector_set(Signature sig, NormId form, std::vector<Multivector> elems);

// All multivectors supported on the domain with coordinates drawn from the
// grid and form value exactly 1. Grids generating more than 10^7 candidate
// tuples are rejected.
VectorSet enumerate_norm_units(Signature sig, NormId form, Domain domain,
                               const std::vector<QSqrt3>& grid);
const std::vector<QSqrt3>& default_grid();  // {0, +-1/2, +-1}

struct ClosureResult {
  bool cap_exceeded = false;
  VectorSet set;  // meaningful when !cap_exceeded
  std::string note;
};

// Smallest superset of the seed closed under the handle's product and under
// negation, by worklist saturation. Growth past `cap` elements reports
// CapExceeded. Closures whose elements are dyadic-rational and whose basis
// products have integer coordinates run on a fast integer representation;
// anything else takes the generic exact path.
ClosureResult product_closure(const VectorSet& seed, const AlgebraHandle& h, int cap);

struct RootSystemReport {
  int count = 0;
  int rank = 0;
  std::vector<int> component_sizes;
  // Scaled so the shortest root has <x,x> = 2; key is the exact pairing value.
  std::vector<std::pair<QSqrt3, int>> histogram;  // common per-root histogram
  bool uniform_histogram = false;
  int length_classes = 0;
  std::string type_label = "unknown";  // A1^k, D4, D4+D4, F4, E8, unknown
};

// Identification by count, exact span rank, orthogonal-component structure
// and per-root inner-product histograms. Mixed norm values beyond the
// two-length F4 allowance (long/short ratio 2) throw.
RootSystemReport identify_root_system(const VectorSet& set);

struct SeedHit {
  Multivector seed;
  int closure_size;
};

struct SeedSearchResult {
  std::vector<SeedHit> hits;  // closure size == target, in candidate order
  int examined = 0;
  int cap_exceeded = 0;
};

// Closure size of base + {candidate} for every candidate, in parallel;
// returns the candidates whose closure hits the target exactly.
SeedSearchResult seed_search(const VectorSet& candidates, const VectorSet& base,
                             const AlgebraHandle& h, int target, int cap, int threads = 0);

std::string vector_set_to_csv(const VectorSet& s);
VectorSet vector_set_from_csv(const std::string& csv, Signature sig, NormId form);

}  // namespace clifcomp
