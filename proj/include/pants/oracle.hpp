#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pants/exploration.hpp"
#include "pants/polytope.hpp"

namespace pants {

struct OracleLimits {
  std::size_t max_cycles = 100000;
  std::size_t max_nodes = 10000000;
};

/// Vertex-simple cycles of the graph, classified.
struct CycleCatalog {
  std::vector<SimpleLoop> cycles;
  std::vector<LoopType> types;
  /// Vertex bitset of each cycle.
  std::vector<std::vector<std::uint64_t>> masks;
  /// Number of simple cycles met during enumeration, stored or not.
  std::size_t enumerated = 0;

  std::size_t size() const noexcept { return cycles.size(); }
  bool conflict(std::size_t a, std::size_t b) const;
};

/// Every simple cycle exactly once, typed through its hemispheres.
/// Throws LimitExceeded past limits.max_cycles cycles or limits.max_nodes
/// search nodes.
CycleCatalog all_simple_cycles(const SigmaGraph& g, const OracleLimits& limits = {});

/// Non-contractible cycles sufficient for packing questions: a cycle is left
/// out when a chord cuts off a smaller cycle of the same type (which can take
/// its place in any packing), and cycles with equal type and vertex set are
/// stored once. max_cycles bounds the stored cycles only.
CycleCatalog packing_catalog(const SigmaGraph& g, const OracleLimits& limits = {});

/// Largest number of pairwise vertex-disjoint cycles of type i.
int max_disjoint_type(const CycleCatalog& catalog, int i, const OracleLimits& limits = {});
int max_disjoint_type(const SigmaGraph& g, int i, const OracleLimits& limits = {});

/// Types of all laminations (including the empty one), sorted.
std::vector<LaminationType> lamination_space_bruteforce(const CycleCatalog& catalog,
                                                        const OracleLimits& limits = {});
std::vector<LaminationType> lamination_space_bruteforce(const SigmaGraph& g,
                                                        const OracleLimits& limits = {});

}  // namespace pants
