#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace affgrass {

// Weakly decreasing positive parts; trailing zeros are never stored.
using Partition = std::vector<int>;
// Sorted ascending, repeated entries kept.
using Multiset = std::vector<int>;

bool is_partition(const Partition& p);
bool is_distinct(const Partition& p);
// Drops zero parts and checks ordering; throws std::invalid_argument.
Partition make_partition(std::vector<int> parts);
// Parses "4,4,3,2" (empty string or "-" is the empty partition).
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);

int weight(const Partition& p);
int durfee_size(const Partition& p);
Partition conjugate(const Partition& p);

// hook length of each box, row by row
std::vector<std::vector<int>> hook_grid(const Partition& p);
Multiset hooks(const Partition& p);
// boxes with hook < n, i.e. #H_n(lambda)
int count_below(const Multiset& hooks, int n);

bool is_core(const Partition& p, int n);
std::vector<int> residue_counts(const Partition& p, int n);

// Bi-infinite 0/1 boundary word: all 0 before lo, all 1 after the window.
struct BoundaryWord {
  long lo = 0;
  std::string window;

  int letter(long k) const;
  long hi() const { return lo + static_cast<long>(window.size()); }
  bool operator==(const BoundaryWord& o) const { return lo == o.lo && window == o.window; }
};

BoundaryWord canonical(BoundaryWord w);
BoundaryWord psi(const Partition& p);
// throws std::invalid_argument on an unbalanced word
Partition psi_inv(const BoundaryWord& w);
// #{k <= -1 : c_k = 1} - #{k >= 0 : c_k = 0}; zero exactly for words of partitions
long word_charge(const BoundaryWord& w);

struct HookPair {
  int row = 0, col = 0;     // box, 0-based
  long i = 0, j = 0;        // c_i = 1, c_j = 0, j - i = hook
  bool above_word = false;  // read off the word
  bool above_diagram = false;
};
std::vector<HookPair> hook_index_pairs(const Partition& p);

// enumeration
std::vector<Partition> partitions_of(int m);
std::vector<Partition> distinct_partitions_of(int m);

// distinct partition families
Partition from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs);
void frobenius(const Partition& p, std::vector<int>& arms, std::vector<int>& legs);

Partition double_distinct(const Partition& lb);    // (lb_i | lb_i - 1)
Partition sc_from_distinct(const Partition& lb);   // (lb_i - 1 | lb_i - 1)
Partition ddtr_from_distinct(const Partition& lb); // (lb_i - 1 | lb_i)

std::optional<Partition> distinct_from_dd(const Partition& p);
std::optional<Partition> distinct_from_sc(const Partition& p);
std::optional<Partition> distinct_from_ddtr(const Partition& p);

bool is_sc(const Partition& p);
bool is_dd(const Partition& p);
bool is_ddtr(const Partition& p);
bool is_sc_word(const Partition& p);
bool is_dd_word(const Partition& p);
bool is_ddtr_word(const Partition& p);

// hooks of the shifted diagram, each box getting the extra lb_{j+1}
Multiset shifted_hooks(const Partition& lb);
// shifted hooks with the parts themselves removed (the transposed multiset)
Multiset shifted_hooks_tr(const Partition& lb);
// hooks(double_distinct(lb)) assembled from shifted hooks
Multiset dd_hook_multiset(const Partition& lb);
// lb with every part lowered by one, zeros dropped
Partition lowered(const Partition& lb);

enum class Family { D, DR, DTR, DTRR, S };
std::string family_name(Family f);
bool in_family(const Partition& lb, Family f, int g);

Multiset multiset_union(Multiset a, const Multiset& b);

}  // namespace affgrass
