#pragma once

#include <vector>

#include "affgrass/partitions.hpp"

namespace affgrass {

struct LittlewoodData {
  int n = 0;
  Partition core;
  std::vector<Partition> quotient;  // runner k = indices congruent to k mod n
  std::vector<long> shifts;         // per-runner bead shift, equal to the charge of the core
};

LittlewoodData decompose(const Partition& p, int n);
// throws std::invalid_argument if core is not an n-core, n = quotient.size()
Partition compose(const Partition& core, const std::vector<Partition>& quotient);
// inverse map driven directly by runner shifts (zero sum)
Partition compose_from_shifts(const std::vector<long>& shifts, const std::vector<Partition>& quotient);
// the n-core whose runner shifts are the given zero-sum vector
Partition core_from_shifts(const std::vector<long>& shifts);

// hooks of p divisible by n, and n times the hooks of the quotient
Multiset divisible_hooks(const Partition& p, int n);
Multiset scaled_quotient_hooks(const Partition& p, int n);

// Restriction of the decomposition to conjugates of doubled distinct partitions.
struct DdtrReport {
  bool core_is_ddtr = false;
  bool quotient_mirror = false;   // nu(j) = nu(n-2-j)^tr
  bool last_is_ddtr = false;
  bool middle_is_sc = true;       // only meaningful for even n
  bool weight_identity = false;
  bool hook_identity = false;
  bool all() const {
    return core_is_ddtr && quotient_mirror && last_is_ddtr && middle_is_sc && weight_identity && hook_identity;
  }
};
// throws std::invalid_argument if p is not a conjugate doubled distinct partition
DdtrReport ddtr_decompose_check(const Partition& p, int n);

long floor_div(long a, long b);
long floor_mod(long a, long b);

}  // namespace affgrass
