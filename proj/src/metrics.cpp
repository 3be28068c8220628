#include "dyncomm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dyncomm/errors.hpp"

namespace dyncomm {

double stability(const Mapping& prev, const Mapping& next) {
  const Mapping a = canonicalize(prev);
  const Mapping b = canonicalize(next);
  std::size_t changed = 0;
  std::size_t total = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    ++total;
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      ++changed;
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      ++changed;
      ++ib;
    } else {
      if (ia->second != ib->second) ++changed;
      ++ia;
      ++ib;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(changed) / static_cast<double>(total);
}

double partition_similarity(const Mapping& a, const Mapping& b) {
  if (a.size() != b.size())
    throw InvalidArgumentError("partitions cover different vertex sets");
  if (a.empty()) throw EmptyInputError("similarity of empty partitions");

  std::map<CommunityId, double> na;
  std::map<CommunityId, double> nb;
  std::map<std::pair<CommunityId, CommunityId>, double> joint;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first)
      throw InvalidArgumentError("partitions cover different vertex sets");
    na[ia->second] += 1;
    nb[ib->second] += 1;
    joint[{ia->second, ib->second}] += 1;
  }
  const double n = static_cast<double>(a.size());
  auto entropy = [n](const std::map<CommunityId, double>& counts) {
    double h = 0;
    for (const auto& [c, k] : counts) h -= (k / n) * std::log(k / n);
    return h;
  };
  const double ha = entropy(na);
  const double hb = entropy(nb);
  if (ha + hb == 0) return 1.0;

  double mi = 0;
  for (const auto& [key, k] : joint)
    mi += (k / n) * std::log(k * n / (na.at(key.first) * nb.at(key.second)));
  const double nmi = 2 * mi / (ha + hb);
  return std::clamp(nmi, 0.0, 1.0);
}

}  // namespace dyncomm
