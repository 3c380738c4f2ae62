#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxcat/poset.hpp"

namespace coxcat {

enum class Family { A, B, C, D, E, F, G };
class RootPosetBuilder;

struct TypeLabel {
  Family family;
  int rank;

  bool operator==(const TypeLabel& o) const = default;
  std::string str() const;
};

// Parses "A", "D" (rank supplied separately) as well as "E6".."E8", "F4", "G2".
TypeLabel parse_type(const std::string& family, std::optional<int> rank);

struct Root {
  std::vector<int> coeffs;   // over simple roots, 1-based index i at coeffs[i-1]
  std::vector<int> ambient;  // standard realization; empty for E/F/G
  int height = 0;
};

// Positive root poset: order by componentwise dominance of simple coefficients,
// rank = height - 1. Elements are sorted by (height, coeffs lexicographic).
class RootPoset {
 public:
  TypeLabel type() const { return type_; }
  int rank() const { return rank_; }                // number of simple roots
  int coxeter_number() const { return coxeter_h_; }
  const RankedPoset& poset() const { return poset_; }
  int size() const { return poset_.size(); }

  const Root& root(int e) const { return roots_[e]; }
  const std::vector<Root>& roots() const { return roots_; }
  int element_by_coeffs(const std::vector<int>& coeffs) const;  // -1 if absent
  // Simple root alpha_i (1-based) as a poset element.
  int simple(int i) const { return simples_[i - 1]; }
  // Inverse of simple(): 1-based index when e is minimal, otherwise 0.
  int simple_index(int e) const;

  // Distinguished subsets; absent when not defined for the type.
  const std::optional<std::vector<int>>& subset_L() const { return subset_L_; }
  const std::optional<std::vector<int>>& subset_S() const { return subset_S_; }

  // The poset automorphism alpha -> -w0(alpha) as an element permutation.
  const std::vector<int>& neg_w0() const { return neg_w0_; }

  // Type A only: the interval [i, j] of element e, 1 <= i < j <= rank+1.
  std::pair<int, int> interval_of(int e) const;
  int element_by_interval(int lo, int hi) const;

  friend class RootPosetBuilder;

 private:
  TypeLabel type_{Family::A, 0};
  int rank_ = 0;
  int coxeter_h_ = 0;
  RankedPoset poset_;
  std::vector<Root> roots_;
  std::vector<int> simples_;
  std::optional<std::vector<int>> subset_L_, subset_S_;
  std::vector<int> neg_w0_;
};

RootPoset build_type_A(int n);  // n >= 1 simple roots, intervals in [n+1]
RootPoset build_type_B(int n);  // n >= 2; the C_n poset carrying B root data
RootPoset build_type_C(int n);  // n >= 2
RootPoset build_type_D(int n);  // n >= 4
RootPoset build_root_poset(TypeLabel t);

// eta: the flip [i,j] -> [n+1-j, n+1-i] on a type A poset (= neg_w0).
int eta(const RootPoset& a, int e);

// delta: swaps e_i - e_n and e_i + e_n on a type D poset; fixes the rest.
int delta(const RootPoset& d, int e);

// Folding of a type D_n poset onto C_{n-1}: identifies each delta orbit with
// one C element. image[e] is the C element of a D element e.
struct GammaFolding {
  RootPoset c_poset;
  std::vector<int> image;
  std::vector<std::vector<int>> preimage;  // per C element, sorted
};
GammaFolding gamma_folding(const RootPoset& d);

// Unfolding of a C_n subset into the eta-symmetric subset of A_{2n-1}.
std::vector<int> iota(const RootPoset& c, const RootPoset& a2n1, const std::vector<int>& s);

// Degrees of the Weyl group, recovered from the rank sizes of the poset
// (conjugate partition of the height distribution), ascending.
std::vector<int> degrees(const RootPoset& p);

// prod (d_i + h) / d_i, taken per connected component.
long long catalan_number(const RootPoset& p);
long long catalan_from_degrees(const std::vector<int>& degrees, int h);

// Antichain counts by cardinality, computed by enumeration.
std::vector<long long> narayana_counts(const RootPoset& p);

// Closed form for rowvacuation on a type A antichain of intervals.
std::vector<std::pair<int, int>> lalanne_kreweras(const std::vector<std::pair<int, int>>& a,
                                                  int ground);

}  // namespace coxcat
