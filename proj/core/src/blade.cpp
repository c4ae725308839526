#include "spin7/blade.hpp"

#include <algorithm>

namespace spin7 {
namespace {

struct BladeTables {
  // sub[mask][k]: sub-blades of mask with k covectors, increasing mask order.
  std::array<std::array<std::vector<Blade>, kDim + 1>, kBladeCount> sub;
  // of_rank[k]: all rank-k blades, increasing mask order.
  std::array<std::vector<Blade>, kDim + 1> of_rank;
  // rank_index[mask]: position of mask within of_rank[rank(mask)].
  std::array<int, kBladeCount> rank_index;

  BladeTables() {
    for (Blade mask = 0; mask < kBladeCount; ++mask) {
      Blade s = mask;
      while (true) {
        sub[mask][blade_rank(s)].push_back(s);
        if (s == 0) break;
        s = (s - 1) & mask;
      }
      for (auto& bucket : sub[mask]) std::sort(bucket.begin(), bucket.end());
    }
    for (int k = 0; k <= kDim; ++k) of_rank[k] = sub[kVolumeBlade][k];
    for (int k = 0; k <= kDim; ++k)
      for (std::size_t i = 0; i < of_rank[k].size(); ++i)
        rank_index[of_rank[k][i]] = static_cast<int>(i);
  }
};

const BladeTables& tables() {
  static const BladeTables t;
  return t;
}

}  // namespace

const std::vector<Blade>& sub_blades(Blade mask, int k) {
  return tables().sub[mask][k];
}

const std::vector<Blade>& blades_of_rank(int k) { return tables().of_rank[k]; }

int blade_rank_index(Blade a) { return tables().rank_index[a]; }

}  // namespace spin7
