#include "coxcat/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "coxcat/errors.hpp"
#include "doctest.h"

using namespace coxcat;

TEST_CASE("type labels parse and print") {
  CHECK(parse_type("A", 4) == TypeLabel{Family::A, 4});
  CHECK(parse_type("E6", std::nullopt) == TypeLabel{Family::E, 6});
  CHECK(parse_type("F4", 4) == TypeLabel{Family::F, 4});
  CHECK(TypeLabel{Family::D, 6}.str() == "D6");
  CHECK_THROWS_AS(parse_type("E6", 7), argument_error);
  CHECK_THROWS_AS(parse_type("H3", std::nullopt), argument_error);
  CHECK_THROWS_AS(parse_type("D", 3), argument_error);
  CHECK_THROWS_AS(parse_type("A", std::nullopt), argument_error);
}

TEST_CASE("sizes, coxeter numbers and catalan numbers") {
  struct Row {
    TypeLabel t;
    int size, h;
    long long cat;
  };
  const std::vector<Row> table = {
      {{Family::A, 2}, 3, 3, 5},      {{Family::A, 3}, 6, 4, 14},
      {{Family::A, 9}, 45, 10, 16796}, {{Family::B, 3}, 9, 6, 20},
      {{Family::C, 3}, 9, 6, 20},     {{Family::C, 5}, 25, 10, 252},
      {{Family::D, 4}, 12, 6, 50},    {{Family::D, 5}, 20, 8, 182},
      {{Family::D, 6}, 30, 10, 672},  {{Family::G, 2}, 6, 6, 8},
      {{Family::F, 4}, 24, 12, 105},  {{Family::E, 6}, 36, 12, 833},
      {{Family::E, 7}, 63, 18, 4160}, {{Family::E, 8}, 120, 30, 25080},
  };
  for (const auto& row : table) {
    auto p = build_root_poset(row.t);
    CAPTURE(row.t.str());
    CHECK(p.size() == row.size);
    CHECK(p.coxeter_number() == row.h);
    CHECK(catalan_number(p) == row.cat);
    CHECK(p.rank() == row.t.rank);
  }
}

TEST_CASE("degrees recovered from the rank sizes") {
  auto degs = [](TypeLabel t) { return degrees(build_root_poset(t)); };
  CHECK(degs({Family::A, 3}) == std::vector<int>{2, 3, 4});
  CHECK(degs({Family::B, 4}) == std::vector<int>{2, 4, 6, 8});
  CHECK(degs({Family::C, 4}) == std::vector<int>{2, 4, 6, 8});
  CHECK(degs({Family::D, 4}) == std::vector<int>{2, 4, 4, 6});
  CHECK(degs({Family::D, 6}) == std::vector<int>{2, 4, 6, 6, 8, 10});
  CHECK(degs({Family::G, 2}) == std::vector<int>{2, 6});
  CHECK(degs({Family::F, 4}) == std::vector<int>{2, 6, 8, 12});
  CHECK(degs({Family::E, 6}) == std::vector<int>{2, 5, 6, 8, 9, 12});
  CHECK(degs({Family::E, 7}) == std::vector<int>{2, 6, 8, 10, 12, 14, 18});
  CHECK(degs({Family::E, 8}) == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
  CHECK(catalan_from_degrees({2, 3}, 3) == 5);
}

TEST_CASE("highest roots of the exceptional types") {
  auto top = [](TypeLabel t) {
    auto p = build_root_poset(t);
    return p.root(p.size() - 1).coeffs;
  };
  CHECK(top({Family::G, 2}) == std::vector<int>{3, 2});
  CHECK(top({Family::F, 4}) == std::vector<int>{2, 3, 4, 2});
  CHECK(top({Family::E, 6}) == std::vector<int>{1, 2, 2, 3, 2, 1});
  CHECK(top({Family::E, 7}) == std::vector<int>{2, 2, 3, 4, 3, 2, 1});
  CHECK(top({Family::E, 8}) == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("intervals name type A roots") {
  auto a3 = build_type_A(3);
  for (int e = 0; e < a3.size(); ++e) {
    auto [lo, hi] = a3.interval_of(e);
    CHECK(a3.element_by_interval(lo, hi) == e);
    CHECK(a3.root(e).height == hi - lo);
    // ambient +1 at lo, -1 at hi
    CHECK(a3.root(e).ambient[lo - 1] == 1);
    CHECK(a3.root(e).ambient[hi - 1] == -1);
  }
  CHECK_THROWS_AS(a3.element_by_interval(2, 2), argument_error);
  CHECK_THROWS_AS(build_type_C(3).interval_of(0), argument_error);
}

TEST_CASE("simple roots are indexed") {
  for (TypeLabel t : {TypeLabel{Family::A, 4}, {Family::C, 3}, {Family::D, 5},
                      {Family::F, 4}}) {
    auto p = build_root_poset(t);
    for (int i = 1; i <= p.rank(); ++i) {
      int e = p.simple(i);
      CHECK(p.root(e).height == 1);
      CHECK(p.root(e).coeffs[i - 1] == 1);
      CHECK(p.simple_index(e) == i);
    }
    CHECK(p.simple_index(p.size() - 1) == 0);
  }
}

TEST_CASE("marked subset sizes match the expected counts") {
  auto a9 = build_type_A(9);
  REQUIRE(a9.subset_L());
  REQUIRE(a9.subset_S());
  CHECK(a9.subset_L()->size() == 5);
  CHECK(a9.subset_S()->size() == 9);
  auto a4 = build_type_A(4);  // even ground set has no short-side subset
  CHECK(a4.subset_L()->size() == 2);
  CHECK(!a4.subset_S());
  for (int n : {2, 3, 5}) {
    auto c = build_type_C(n);
    CHECK(c.subset_L()->size() == std::size_t(n));
    CHECK(c.subset_S()->size() == std::size_t(n));
  }
  for (int n : {4, 5, 6}) {
    auto d = build_type_D(n);
    CHECK(d.subset_L()->size() == std::size_t(n));
    CHECK(d.subset_S()->size() == std::size_t(2 * (n - 1)));
  }
  auto b3 = build_type_B(3);
  CHECK(b3.subset_L()->size() == 3);
  CHECK(b3.subset_S()->size() == 3);
  // the B-side short set is exactly the short roots
  for (int e : *b3.subset_S()) {
    int abs_sum = 0;
    for (int v : b3.root(e).ambient) abs_sum += std::abs(v);
    CHECK(abs_sum == 1);
  }
}

TEST_CASE("B and C posets are isomorphic under the standard dictionary") {
  for (int n : {2, 3, 4, 5}) {
    auto b = build_type_B(n);
    auto c = build_type_C(n);
    REQUIRE(b.size() == c.size());
    // e_i - e_j stays put; e_i + e_j moves to e_i + e_{j+1} with e_{n+1} = 0;
    // 2 e_i moves to e_i + e_{i+1}
    auto by_ambient = [&](const std::vector<int>& target) {
      for (int e = 0; e < b.size(); ++e)
        if (b.root(e).ambient == target) return e;
      return -1;
    };
    std::vector<int> to_b(c.size(), -1);
    for (int e = 0; e < c.size(); ++e) {
      const auto& amb = c.root(e).ambient;
      std::vector<int> target(n, 0);
      int i = -1, j = -1;
      for (int k = 0; k < n; ++k) {
        if (amb[k] == 0) continue;
        if (i < 0)
          i = k;
        else
          j = k;
      }
      if (amb[i] == 2) {
        j = i + 1;  // 2 e_i
        target[i] = 1;
        if (j < n) target[j] = 1;
      } else if (amb[j] < 0) {
        target = amb;  // e_i - e_j
      } else {
        target[i] = 1;  // e_i + e_j
        if (j + 1 < n) target[j + 1] = 1;
      }
      to_b[e] = by_ambient(target);
      REQUIRE(to_b[e] >= 0);
      CHECK(b.root(to_b[e]).height == c.root(e).height);
    }
    std::vector<int> sorted_to_b = to_b;
    std::sort(sorted_to_b.begin(), sorted_to_b.end());
    CHECK(std::unique(sorted_to_b.begin(), sorted_to_b.end()) == sorted_to_b.end());
    for (int x = 0; x < c.size(); ++x)
      for (int y = 0; y < c.size(); ++y)
        CHECK(c.poset().leq(x, y) == b.poset().leq(to_b[x], to_b[y]));
    // the dictionary carries the C marked sets to the B marked sets
    auto mapped = [&](const std::vector<int>& s) {
      std::vector<int> out;
      for (int e : s) out.push_back(to_b[e]);
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK(mapped(*c.subset_L()) == *b.subset_L());
    CHECK(mapped(*c.subset_S()) == *b.subset_S());
  }
}

TEST_CASE("eta is the interval flip and an order automorphism") {
  auto a = build_type_A(5);
  const int ground = 6;
  for (int e = 0; e < a.size(); ++e) {
    auto [lo, hi] = a.interval_of(e);
    auto [flo, fhi] = a.interval_of(eta(a, e));
    CHECK(flo == ground + 1 - hi);
    CHECK(fhi == ground + 1 - lo);
    CHECK(eta(a, eta(a, e)) == e);
    for (int f = 0; f < a.size(); ++f)
      CHECK(a.poset().leq(e, f) == a.poset().leq(eta(a, e), eta(a, f)));
  }
  CHECK_THROWS_AS(eta(build_type_C(2), 0), argument_error);
}

TEST_CASE("delta swaps the forked coordinates") {
  for (int n : {4, 5}) {
    auto d = build_type_D(n);
    int moved = 0;
    for (int e = 0; e < d.size(); ++e) {
      CHECK(delta(d, delta(d, e)) == e);
      if (delta(d, e) != e) ++moved;
      for (int f = 0; f < d.size(); ++f)
        CHECK(d.poset().leq(e, f) == d.poset().leq(delta(d, e), delta(d, f)));
    }
    CHECK(moved == 2 * (n - 1));  // exactly the e_i +- e_n roots
    // delta swaps the two fork simples
    CHECK(delta(d, d.simple(n - 1)) == d.simple(n));
  }
}

TEST_CASE("neg_w0 matches delta in odd D ranks and is trivial in even ones") {
  for (int n : {4, 5, 6, 7}) {
    auto d = build_type_D(n);
    for (int e = 0; e < d.size(); ++e) {
      if (n % 2 == 1)
        CHECK(d.neg_w0()[e] == delta(d, e));
      else
        CHECK(d.neg_w0()[e] == e);
    }
  }
  for (TypeLabel t : {TypeLabel{Family::B, 3}, {Family::C, 4}, {Family::G, 2},
                      {Family::F, 4}, {Family::E, 7}, {Family::E, 8}}) {
    auto p = build_root_poset(t);
    for (int e = 0; e < p.size(); ++e) CHECK(p.neg_w0()[e] == e);
  }
  auto e6 = build_root_poset({Family::E, 6});
  int moved = 0;
  for (int e = 0; e < e6.size(); ++e) {
    CHECK(e6.neg_w0()[e6.neg_w0()[e]] == e);
    if (e6.neg_w0()[e] != e) ++moved;
    for (int f = 0; f < e6.size(); ++f)
      CHECK(e6.poset().leq(e, f) == e6.poset().leq(e6.neg_w0()[e], e6.neg_w0()[f]));
  }
  CHECK(moved > 0);
}

TEST_CASE("gamma folds D onto C preserving order") {
  for (int n : {4, 5, 6}) {
    auto d = build_type_D(n);
    auto g = gamma_folding(d);
    CHECK(g.c_poset.type() == TypeLabel{Family::C, n - 1});
    int doubled = 0;
    for (int f = 0; f < g.c_poset.size(); ++f) {
      for (int e : g.preimage[f]) CHECK(g.image[e] == f);
      if (g.preimage[f].size() == 2) {
        ++doubled;
        CHECK(delta(d, g.preimage[f][0]) == g.preimage[f][1]);
      } else {
        CHECK(delta(d, g.preimage[f][0]) == g.preimage[f][0]);
      }
    }
    CHECK(doubled == n - 1);
    // fibers of size two are exactly the short-side marked set of C
    std::vector<int> twos;
    for (int f = 0; f < g.c_poset.size(); ++f)
      if (g.preimage[f].size() == 2) twos.push_back(f);
    CHECK(twos == *g.c_poset.subset_S());
    // gamma is a quotient morphism: order on C = projected order on D
    for (int e = 0; e < d.size(); ++e)
      for (int f = 0; f < d.size(); ++f)
        if (d.poset().leq(e, f))
          CHECK(g.c_poset.poset().leq(g.image[e], g.image[f]));
    for (int x = 0; x < g.c_poset.size(); ++x)
      for (int y = 0; y < g.c_poset.size(); ++y)
        if (g.c_poset.poset().leq(x, y)) {
          bool witnessed = false;
          for (int e : g.preimage[x])
            for (int f : g.preimage[y])
              if (d.poset().leq(e, f)) witnessed = true;
          CHECK(witnessed);
        }
  }
}

TEST_CASE("iota unfolds C antichains to eta-symmetric A antichains") {
  for (int n : {2, 3}) {
    auto c = build_type_C(n);
    auto a = build_type_A(2 * n - 1);
    std::vector<Antichain> images;
    for (const auto& ac : all_antichains(c.poset())) {
      auto img = iota(c, a, ac);
      CHECK(is_antichain(a.poset(), img));
      Antichain reflected;
      for (int e : img) reflected.push_back(eta(a, e));
      std::sort(reflected.begin(), reflected.end());
      CHECK(reflected == img);
      images.push_back(img);
    }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    // injective and onto the symmetric antichains
    CHECK(static_cast<long long>(images.size()) == catalan_number(c));
    long long symmetric = 0;
    for (const auto& ac : all_antichains(a.poset())) {
      Antichain reflected;
      for (int e : ac) reflected.push_back(eta(a, e));
      std::sort(reflected.begin(), reflected.end());
      if (reflected == ac) ++symmetric;
    }
    CHECK(symmetric == static_cast<long long>(images.size()));
  }
  // spot check: the long root 2e_1 of C_2 unfolds to the single interval [1,4]
  auto c2 = build_type_C(2);
  auto a3 = build_type_A(3);
  std::vector<int> target(2, 0);
  target[0] = 2;
  target[1] = 1;
  int long_root = c2.element_by_coeffs(target);
  REQUIRE(long_root >= 0);
  auto img = iota(c2, a3, {long_root});
  REQUIRE(img.size() == 1);
  CHECK(a3.interval_of(img[0]) == std::pair<int, int>{1, 4});
}

TEST_CASE("narayana counts are symmetric and total to catalan") {
  for (TypeLabel t : {TypeLabel{Family::A, 2}, {Family::A, 4}, {Family::B, 3},
                      {Family::C, 4}, {Family::D, 4}, {Family::G, 2}, {Family::F, 4}}) {
    auto p = build_root_poset(t);
    auto nar = narayana_counts(p);
    CHECK(int(nar.size()) == p.rank() + 1);
    CHECK(nar.front() == 1);
    CHECK(nar.back() == 1);
    for (std::size_t k = 0; k < nar.size(); ++k) CHECK(nar[k] == nar[nar.size() - 1 - k]);
    CHECK(std::accumulate(nar.begin(), nar.end(), 0LL) == catalan_number(p));
  }
  auto a2 = build_type_A(2);
  CHECK(narayana_counts(a2) == std::vector<long long>{1, 3, 1});
}

TEST_CASE("antichain counts match the product formula") {
  for (TypeLabel t : {TypeLabel{Family::A, 5}, {Family::B, 4}, {Family::C, 4},
                      {Family::D, 5}, {Family::G, 2}, {Family::F, 4}, {Family::E, 6}}) {
    auto p = build_root_poset(t);
    CHECK(count_antichains(p.poset()) == catalan_number(p));
  }
}

TEST_CASE("rowvacuation agrees with the interval index formula") {
  for (int n = 1; n <= 5; ++n) {
    auto a = build_type_A(n);
    const int ground = n + 1;
    for (const auto& ac : all_antichains(a.poset())) {
      std::vector<std::pair<int, int>> intervals;
      for (int e : ac) intervals.push_back(a.interval_of(e));
      auto image = lalanne_kreweras(intervals, ground);
      Antichain expect = rowvacuation(a.poset(), ac);
      Antichain got;
      for (auto [lo, hi] : image) got.push_back(a.element_by_interval(lo, hi));
      std::sort(got.begin(), got.end());
      CHECK(got == expect);
    }
  }
  // worked instance: {[1,3]} -> {[1,3],[3,4]} on the ground set of size 4
  auto image = lalanne_kreweras({{1, 3}}, 4);
  std::sort(image.begin(), image.end());
  CHECK(image == std::vector<std::pair<int, int>>{{1, 3}, {3, 4}});
  CHECK_THROWS_AS(lalanne_kreweras({{1, 3}, {2, 3}}, 4), argument_error);
  CHECK_THROWS_AS(lalanne_kreweras({{0, 2}}, 4), argument_error);
}

TEST_CASE("rank rows of the root poset list roots by height") {
  auto p = build_root_poset({Family::D, 4});
  for (int e = 0; e < p.size(); ++e)
    CHECK(p.poset().rank_of(e) == p.root(e).height - 1);
  // elements sorted by (height, coeffs)
  for (int e = 0; e + 1 < p.size(); ++e) {
    const auto& x = p.root(e);
    const auto& y = p.root(e + 1);
    CHECK((x.height < y.height || (x.height == y.height && x.coeffs < y.coeffs)));
  }
}
