#pragma once

#include <string>
#include <vector>

#include "coxcat/root_system.hpp"

namespace coxcat {

// Signed permutation of {±1, ..., ±n}: img[i-1] = w(i), and w(-i) = -w(i).
// Plain permutations are the special case without negative entries.
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> img);
  static SignedPerm identity(int n);

  int n() const { return int(img_.size()); }
  int apply(int v) const { return v > 0 ? img_[v - 1] : -img_[-v - 1]; }
  const std::vector<int>& image() const { return img_; }

  SignedPerm inverse() const;
  SignedPerm operator*(const SignedPerm& o) const;  // this applied after o
  bool operator==(const SignedPerm& o) const = default;
  bool operator<(const SignedPerm& o) const { return img_ < o.img_; }

  bool is_plain() const;
  int sign_changes() const;  // #{i in 1..n : w(i) < 0}

  // Signed cycle notation: each paired orbit printed once starting from its
  // smallest positive value, balanced orbits printed in full, fixed points
  // omitted, identity rendered as "e".
  std::string cycle_string() const;
  static SignedPerm from_cycles(int n, const std::string& text);

 private:
  std::vector<int> img_;
};

// Reflection length = codimension of the fixed space. One formula serves the
// symmetric group, the hyperoctahedral group and its even subgroup alike.
int absolute_length(const SignedPerm& w);

// s_i on {±1..±n} for the given family; i is a 1-based simple index.
SignedPerm simple_reflection(Family family, int n, int i);

int weyl_ambient(TypeLabel t);    // n of the signed-permutation realization
long long weyl_order(TypeLabel t);

struct BipartiteCoxeter {
  SignedPerm c, c_left, c_right;
  std::vector<int> left, right;  // 1-based simple indices, two-colored diagram
};
// c = c_left * c_right with node 1 on the left side.
BipartiteCoxeter bipartite_coxeter(TypeLabel t);

// The noncrossing partitions NC(W, c): the interval [e, c] of the absolute
// order, for the classical families realized as (signed) permutations.
class NoncrossingLattice {
 public:
  static NoncrossingLattice build(TypeLabel t, long long capacity = 1000000);

  TypeLabel type() const { return type_; }
  const BipartiteCoxeter& coxeter() const { return cox_; }
  int size() const { return int(elements_.size()); }
  // Elements sorted by (absolute length, image lexicographic).
  const SignedPerm& element(int k) const { return elements_[k]; }
  int index_of(const SignedPerm& w) const;  // -1 when absent
  int rank_of(int k) const;

  bool leq(int a, int b) const;        // absolute order
  int kreweras(int k) const;           // w -> c w^{-1}
  int kreweras_inverse(int k) const;   // w -> w^{-1} c
  int flip(int k) const;               // w -> c_left w^{-1} c_left
  std::vector<long long> rank_counts() const;

 private:
  TypeLabel type_{Family::A, 0};
  BipartiteCoxeter cox_;
  std::vector<SignedPerm> elements_;
};

}  // namespace coxcat
