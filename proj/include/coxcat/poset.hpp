#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coxcat/rational.hpp"

namespace coxcat {

// An antichain is kept as a strictly increasing list of element indices.
using Antichain = std::vector<int>;

// Finite poset where every maximal chain from a minimal element to a fixed
// element has the same length; rank 0 = minimal elements, covers add 1.
class RankedPoset {
 public:
  RankedPoset() = default;

  // leq(a, b) must define a partial order on 0..size-1.
  static RankedPoset from_leq(int size, const std::function<bool(int, int)>& leq);
  static RankedPoset from_covers(int size, const std::vector<std::pair<int, int>>& covers);

  int size() const { return m_; }
  bool leq(int a, int b) const { return leq_[a * m_ + b] != 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  int rank_of(int e) const { return rank_[e]; }
  int max_rank() const { return max_rank_; }  // -1 when empty
  const std::vector<int>& rank_elements(int i) const { return by_rank_[i]; }
  const std::vector<int>& minimal_elements() const;
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // Bit rows over elements, words-per-row stride.
  int words() const { return words_; }
  const std::uint64_t* down(int e) const { return down_.data() + e * words_; }  // {x : x <= e}
  const std::uint64_t* up(int e) const { return up_.data() + e * words_; }      // {x : x >= e}
  // Elements strictly comparable to e (up or down, excluding e itself).
  const std::uint64_t* comp(int e) const { return comp_.data() + e * words_; }

  std::vector<std::vector<int>> components() const;

 private:
  void finish();  // derive covers, ranks, masks; validates order axioms

  int m_ = 0;
  int words_ = 0;
  int max_rank_ = -1;
  std::vector<std::uint8_t> leq_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> by_rank_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::uint64_t> down_, up_, comp_;
};

bool is_antichain(const RankedPoset& p, const Antichain& a);
// Sorts, checks element range and pairwise incomparability.
Antichain make_antichain(const RankedPoset& p, std::vector<int> elems);

// tau_p: add p if the result is still an antichain, remove p if present.
Antichain toggle(const RankedPoset& p, int elem, const Antichain& a);
// Product of tau_p over rank row i, applied in increasing index order.
Antichain rank_toggle(const RankedPoset& p, int row, const Antichain& a);

// Minimal elements of the complement of the order ideal generated by a.
Antichain rowmotion(const RankedPoset& p, const Antichain& a);
Antichain rowmotion_inverse(const RankedPoset& p, const Antichain& a);
// Toggle every element once in linear extension order, minimal elements first.
Antichain rowmotion_via_toggles(const RankedPoset& p, const Antichain& a,
                                const std::vector<int>& linear_extension);

// Composition of rank toggle runs (i..max), i = 0, 1, ..., max; an involution.
Antichain rowvacuation(const RankedPoset& p, const Antichain& a);

enum class AntichainOp { Rowmotion, Rowvacuation, RowInvRvac };
const char* op_name(AntichainOp op);
Antichain apply_op(const RankedPoset& p, AntichainOp op, const Antichain& a);

// Minimal elements lying below some member of a.
std::vector<int> support(const RankedPoset& p, const Antichain& a);

struct InducedSubposet {
  RankedPoset poset;
  std::vector<int> to_parent;    // subposet index -> parent index
  std::vector<int> from_parent;  // parent index -> subposet index, -1 if absent
};

// P_X: elements not above any minimal element outside X. X must consist of
// minimal elements. The result is an order ideal of p, so ranks agree.
InducedSubposet restrict_to_support(const RankedPoset& p, const std::vector<int>& x);

struct OrbitReport {
  AntichainOp op;
  std::vector<Antichain> orbit;  // starts at the seed antichain
  Rational average_size() const;
};

OrbitReport orbit_of(const RankedPoset& p, AntichainOp op, const Antichain& a);

// All antichains in depth-first order over indices; lexicographic on the
// sorted index lists, starting with the empty antichain.
std::vector<Antichain> all_antichains(const RankedPoset& p);
long long count_antichains(const RankedPoset& p);

bool is_linear_extension(const RankedPoset& p, const std::vector<int>& order);
std::vector<int> default_linear_extension(const RankedPoset& p);  // by (rank, index)
std::vector<int> random_linear_extension(const RankedPoset& p, std::mt19937_64& rng);

// Image of an antichain under an element permutation of the poset.
Antichain apply_permutation(const std::vector<int>& perm, const Antichain& a);

}  // namespace coxcat
