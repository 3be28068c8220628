#include "dyncomm/densopt.hpp"

#include <set>

#include "dyncomm/errors.hpp"

namespace dyncomm {

double community_density(const DynGraph& g, std::span<const VertexId> members) {
  if (members.empty()) throw EmptyInputError("density of an empty community");
  const std::set<VertexId> in(members.begin(), members.end());
  for (VertexId v : in) g.neighbors(v);  // validates membership
  const double n = static_cast<double>(in.size());
  if (in.size() < 2) return 0.0;
  std::size_t edges = 0;
  for (VertexId v : in)
    for (const auto& [u, w] : g.neighbors(v))
      if (u > v && in.contains(u)) ++edges;
  return 2.0 * static_cast<double>(edges) / (n * (n - 1));
}

namespace {

std::vector<VertexId> as_vector(const std::set<VertexId>& s) {
  return {s.begin(), s.end()};
}

}  // namespace

double adc(const DynGraph& g, const Partition& p) {
  if (p.community_count() == 0)
    throw EmptyInputError("average density of a partition with no communities");
  double sum = 0;
  for (CommunityId c : p.communities())
    sum += community_density(g, as_vector(p.members(c)));
  return sum / static_cast<double>(p.community_count());
}

DensityResult optimize_density(const DynGraph& g, const Partition& p) {
  const Partition canon = p.canonical(g);
  DensityResult result;
  result.report.adc_before = adc(g, canon);

  std::map<CommunityId, std::vector<VertexId>> groups;
  std::map<CommunityId, double> density;
  double sum = 0;
  for (CommunityId c : canon.communities()) {
    groups[c] = as_vector(canon.members(c));
    density[c] = community_density(g, groups[c]);
    sum += density[c];
  }

  // A split must also keep the average from dropping: low-density parts can
  // pull it down even when their own mean beats the community. Accepting a
  // split can make an earlier rejected one acceptable, so sweep to a fixpoint.
  std::set<CommunityId> settled;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<CommunityId> pending;
    for (const auto& [c, members] : groups)
      if (!settled.contains(c)) pending.push_back(c);
    for (CommunityId c : pending) {
      const auto components = g.connected_components(groups.at(c));
      if (components.size() < 2) {
        settled.insert(c);
        continue;
      }
      std::vector<double> part_density;
      double part_sum = 0;
      for (const auto& comp : components) {
        part_density.push_back(community_density(g, comp));
        part_sum += part_density.back();
      }
      const double k = static_cast<double>(components.size());
      const double n = static_cast<double>(groups.size());
      if (!(part_sum / k > density[c])) {
        settled.insert(c);
        continue;
      }
      const double new_sum = sum - density[c] + part_sum;
      if (new_sum * n < sum * (n - 1 + k) - 1e-12) continue;

      DensitySplit split{c, {}};
      sum = new_sum;
      density.erase(c);
      groups.erase(c);
      for (std::size_t i = 0; i < components.size(); ++i) {
        const CommunityId id = components[i].front();
        split.parts.push_back(id);
        density[id] = part_density[i];
        settled.insert(id);
        groups[id] = components[i];
      }
      result.report.splits.push_back(std::move(split));
      changed = true;
    }
  }

  std::map<VertexId, CommunityId> out;
  for (const auto& [c, members] : groups)
    for (VertexId v : members) out[v] = c;
  result.partition = Partition::from_mapping(g, out);
  result.report.adc_after = adc(g, result.partition);
  return result;
}

}  // namespace dyncomm
