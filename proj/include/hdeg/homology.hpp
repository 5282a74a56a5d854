#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdeg/graph.hpp"

namespace hdeg {

struct HomologyOptions {
  // Remove dominated vertices (N(u) contained in N(v) deletes v) before
  // building boundary matrices.  Collapses preserve homotopy type; switching
  // this off is the slow reference path used to validate the folds.
  bool use_folds = true;
};

// Ranks over Q of the reduced homology of the independence complex of the
// subgraph induced on w.  betti[s+1] = rank of degree-s homology, starting
// at s = -1 (nonzero there only for the empty complex).
std::vector<long long> independence_betti(const Graph& g, VertexSet w,
                                          const HomologyOptions& opts = {});

// Largest s with nonvanishing reduced homology, or absent when every rank
// vanishes (contractible-like complexes).
std::optional<int> max_nonvanishing_degree(const Graph& g, VertexSet w,
                                           const HomologyOptions& opts = {});

struct RegularityOptions {
  int cap = 18;          // vertex limit for the 2^n subset loop
  int jobs = 1;          // parallel workers over subset blocks
  bool use_folds = true;
};

struct RegularityReport {
  int reg = 0;
  int nu = 0;
  int mu = 0;
  std::string method;  // "homology" or "cw_formula"
};

// Castelnuovo-Mumford regularity of the quotient by the edge ideal:
// max over W of (s+1) with nonvanishing degree-s homology of the
// independence complex of the induced subgraph, exact ranks over Q.
// Fills nu/mu and checks nu <= reg <= mu.  Throws BudgetExceeded above cap.
RegularityReport regularity_homology(const Graph& g,
                                     const RegularityOptions& opts = {});

}  // namespace hdeg
