#pragma once

// Brute-force enumeration of Or(m,n), the generation closure of ι_n under
// face, degeneracy and wedge, and the image-coefficient census.

#include <map>
#include <vector>

#include "orientals/morphism.hpp"

namespace orientals {

struct EnumerationOptions {
  // Largest image coefficient considered.
  Coefficient cap = 1;
  // Worker threads splitting the vertex profiles; 0 or 1 runs inline.
  unsigned threads = 1;
};

// Every morphism in Or(m,n) with image coefficients <= cap, sorted by the
// chain-map order.
std::vector<OrMorphism> enumerate_or(int m, int n, const EnumerationOptions& opts = {});

// All monotone sequences 0 <= x(0) <= ... <= x(m) <= n, lexicographically.
std::vector<std::vector<int>> monotone_profiles(int m, int n);

struct ClosureOptions {
  // Extra dimensions the fixpoint may pass through before results are cut
  // back to max_dim. Canonical-form assembly of a dimension-d element runs
  // through wedges of dimension d+1, so the default is 1.
  int headroom = 1;
};

// Least subset of Or(-,n) containing ι_n and closed under face, degeneracy
// and defined wedges, computed up to max_dim + headroom and truncated to
// dimensions <= max_dim. Entry d is sorted by the chain-map order.
std::vector<std::vector<OrMorphism>> generation_closure(int n, int max_dim, const ClosureOptions& opts = {});

struct CensusRow {
  int m = 0;
  std::size_t closure_size = 0;
  Coefficient closure_max_coefficient = 0;
  // Smallest cap at which enumeration contains the closure.
  Coefficient cap_used = 1;
  std::size_t enumerated_size = 0;
  bool contains_closure = false;
  bool equals_closure = false;
};

struct CensusReport {
  int n = 0;
  int max_dim = 0;
  std::vector<CensusRow> rows;
  Coefficient max_coefficient() const;
};

// For each m <= max_dim: closure statistics, then enumeration with the cap
// raised from 1 until it contains the closure (bounded by the observed
// maximum coefficient).
CensusReport coefficient_census(int n, int max_dim);

}  // namespace orientals
