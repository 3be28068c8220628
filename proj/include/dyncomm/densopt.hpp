#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dyncomm/graph.hpp"
#include "dyncomm/partition.hpp"

namespace dyncomm {

/// Unweighted internal density 2e / (n(n−1)), self-loops ignored. A
/// singleton has density 0. Throws EmptyInputError for an empty set.
double community_density(const DynGraph& g, std::span<const VertexId> members);

/// Average density per community. Throws EmptyInputError when p has no
/// communities.
double adc(const DynGraph& g, const Partition& p);

struct DensitySplit {
  CommunityId original = 0;
  std::vector<CommunityId> parts;
};

struct DensityReport {
  double adc_before = 0;
  double adc_after = 0;
  std::vector<DensitySplit> splits;
};

struct DensityResult {
  /// Canonical ids (smallest member).
  Partition partition;
  DensityReport report;
};

/// Splits every disconnected community into its connected components when
/// their mean density is strictly higher than the community's own density
/// and the split does not lower the average density per community.
/// Communities are visited by ascending canonical id, repeating until no
/// split applies; report ids are canonical.
DensityResult optimize_density(const DynGraph& g, const Partition& p);

}  // namespace dyncomm
