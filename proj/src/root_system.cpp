#include "coxcat/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "coxcat/errors.hpp"

namespace coxcat {

namespace {

const char* family_letter(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
  }
  return "?";
}

Root make_root(std::vector<int> coeffs, std::vector<int> ambient) {
  Root r;
  r.height = std::accumulate(coeffs.begin(), coeffs.end(), 0);
  r.coeffs = std::move(coeffs);
  r.ambient = std::move(ambient);
  return r;
}

// ambient helpers for the B/C/D families on coordinates 1..n
std::vector<int> amb(int n, int i, int ci, int j, int cj) {
  std::vector<int> v(n, 0);
  v[i - 1] += ci;
  if (j > 0) v[j - 1] += cj;
  return v;
}

}  // namespace

class RootPosetBuilder {
 public:
  TypeLabel type;
  int rank;
  std::vector<Root> roots;
  std::vector<std::vector<int>> marked_L, marked_S;  // by coeffs, resolved later
  std::vector<int> sigma;  // simple index permutation realizing -w0, 1-based

  RootPoset finish() &&;
};

RootPoset RootPosetBuilder::finish() && {
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeffs < b.coeffs;
  });
  RootPoset out;
  out.type_ = type;
  out.rank_ = rank;
  out.roots_ = std::move(roots);
  const auto& rs = out.roots_;

  auto dominated = [&](int a, int b) {
    for (int k = 0; k < rank; ++k)
      if (rs[a].coeffs[k] > rs[b].coeffs[k]) return false;
    return true;
  };
  out.poset_ = RankedPoset::from_leq(int(rs.size()), dominated);

  out.simples_.assign(rank, -1);
  for (int e = 0; e < int(rs.size()); ++e) {
    ensure(out.poset_.rank_of(e) == rs[e].height - 1, "rank disagrees with height");
    if (rs[e].height == 1)
      for (int k = 0; k < rank; ++k)
        if (rs[e].coeffs[k] == 1) out.simples_[k] = e;
  }
  for (int k = 0; k < rank; ++k) ensure(out.simples_[k] >= 0, "missing simple root");

  out.coxeter_h_ = out.poset_.max_rank() + 2;
  ensure(2 * int(rs.size()) == rank * out.coxeter_h_,
         "root count does not match rank times coxeter number over two");

  out.neg_w0_.assign(rs.size(), -1);
  for (int e = 0; e < int(rs.size()); ++e) {
    std::vector<int> image(rank);
    for (int k = 0; k < rank; ++k) image[sigma[k] - 1] = rs[e].coeffs[k];
    int f = out.element_by_coeffs(image);
    ensure(f >= 0, "-w0 image is not a positive root");
    out.neg_w0_[e] = f;
  }

  auto resolve = [&](const std::vector<std::vector<int>>& marked) {
    std::vector<int> ids;
    for (const auto& c : marked) {
      int e = out.element_by_coeffs(c);
      ensure(e >= 0, "marked subset member is not a root");
      ids.push_back(e);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  if (!marked_L.empty()) out.subset_L_ = resolve(marked_L);
  if (!marked_S.empty()) out.subset_S_ = resolve(marked_S);
  return out;
}

namespace {

std::vector<int> identity_sigma(int rank) {
  std::vector<int> s(rank);
  std::iota(s.begin(), s.end(), 1);
  return s;
}

// Positive roots from the pairing matrix m[i][j] = <alpha_j, alpha_i^vee>,
// grown height by height along root strings.
std::vector<std::vector<int>> closure_roots(const std::vector<std::vector<int>>& m) {
  const int r = int(m.size());
  std::map<std::vector<int>, int> seen;  // coeffs -> height
  std::vector<std::vector<int>> level;
  for (int i = 0; i < r; ++i) {
    std::vector<int> unit(r, 0);
    unit[i] = 1;
    seen[unit] = 1;
    level.push_back(unit);
  }
  int height = 1;
  while (!level.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : level)
      for (int i = 0; i < r; ++i) {
        int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += beta[j] * m[i][j];
        int down = 0;
        std::vector<int> probe = beta;
        while (true) {
          probe[i] -= 1;
          if (probe[i] < 0 || !seen.count(probe)) break;
          ++down;
        }
        if (down - pairing >= 1) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!seen.count(up)) {
            seen[up] = height + 1;
            next.push_back(up);
          }
        }
      }
    level = std::move(next);
    ++height;
  }
  std::vector<std::vector<int>> out;
  for (const auto& [coeffs, ht] : seen) out.push_back(coeffs);
  return out;
}

}  // namespace

std::string TypeLabel::str() const {
  return std::string(family_letter(family)) + std::to_string(rank);
}

TypeLabel parse_type(const std::string& family, std::optional<int> rank) {
  std::string f = family;
  int r = rank.value_or(0);
  if (f.size() == 2 && f[1] >= '0' && f[1] <= '9') {
    int embedded = f[1] - '0';
    require(!rank || *rank == embedded, "rank conflicts with type name " + family);
    r = embedded;
    f = f.substr(0, 1);
  }
  require(f.size() == 1, "unknown type " + family);
  require(r > 0, "type " + family + " needs a rank");
  switch (f[0]) {
    case 'A': require(r >= 1, "type A needs rank >= 1"); return {Family::A, r};
    case 'B': require(r >= 2, "type B needs rank >= 2"); return {Family::B, r};
    case 'C': require(r >= 2, "type C needs rank >= 2"); return {Family::C, r};
    case 'D': require(r >= 4, "type D needs rank >= 4"); return {Family::D, r};
    case 'E': require(r >= 6 && r <= 8, "type E rank must be 6, 7 or 8"); return {Family::E, r};
    case 'F': require(r == 4, "type F rank must be 4"); return {Family::F, r};
    case 'G': require(r == 2, "type G rank must be 2"); return {Family::G, r};
    default: throw argument_error("unknown type " + family);
  }
}

int RootPoset::element_by_coeffs(const std::vector<int>& coeffs) const {
  for (int e = 0; e < int(roots_.size()); ++e)
    if (roots_[e].coeffs == coeffs) return e;
  return -1;
}

int RootPoset::simple_index(int e) const {
  for (int k = 0; k < rank_; ++k)
    if (simples_[k] == e) return k + 1;
  return 0;
}

std::pair<int, int> RootPoset::interval_of(int e) const {
  require(type_.family == Family::A, "intervals are defined on type A posets only");
  const auto& c = roots_[e].coeffs;
  int lo = 0, hi = 0;
  for (int k = 0; k < rank_; ++k)
    if (c[k] == 1) {
      if (lo == 0) lo = k + 1;
      hi = k + 2;
    }
  return {lo, hi};
}

int RootPoset::element_by_interval(int lo, int hi) const {
  require(type_.family == Family::A, "intervals are defined on type A posets only");
  require(1 <= lo && lo < hi && hi <= rank_ + 1,
          "interval out of range for this type A poset");
  std::vector<int> c(rank_, 0);
  for (int k = lo; k < hi; ++k) c[k - 1] = 1;
  return element_by_coeffs(c);
}

RootPoset build_type_A(int n) {
  require(n >= 1, "type A needs rank >= 1");
  RootPosetBuilder b;
  b.type = {Family::A, n};
  b.rank = n;
  const int ground = n + 1;
  for (int i = 1; i < ground; ++i)
    for (int j = i + 1; j <= ground; ++j) {
      std::vector<int> c(n, 0);
      for (int k = i; k < j; ++k) c[k - 1] = 1;
      b.roots.push_back(make_root(std::move(c), amb(ground, i, +1, j, -1)));
    }
  auto interval_coeffs = [&](int i, int j) {
    std::vector<int> c(n, 0);
    for (int k = i; k < j; ++k) c[k - 1] = 1;
    return c;
  };
  for (int i = 1; 2 * i < ground + 1; ++i)
    b.marked_L.push_back(interval_coeffs(i, ground + 1 - i));
  if (ground % 2 == 0) {
    int half = ground / 2;
    for (int j = half + 1; j <= ground; ++j)
      b.marked_S.push_back(interval_coeffs(half, j));
    for (int i = 1; i < half; ++i)
      b.marked_S.push_back(interval_coeffs(i, half + 1));
  }
  b.sigma.assign(n, 0);
  for (int k = 1; k <= n; ++k) b.sigma[k - 1] = n + 1 - k;
  return std::move(b).finish();
}

RootPoset build_type_C(int n) {
  require(n >= 2, "type C needs rank >= 2");
  RootPosetBuilder b;
  b.type = {Family::C, n};
  b.rank = n;
  auto coeffs_minus = [&](int i, int j) {  // e_i - e_j
    std::vector<int> c(n, 0);
    for (int k = i; k < j; ++k) c[k - 1] = 1;
    return c;
  };
  auto coeffs_plus = [&](int i, int j) {  // e_i + e_j, i < j <= n
    std::vector<int> c(n, 0);
    for (int k = i; k < j; ++k) c[k - 1] = 1;
    for (int k = j; k < n; ++k) c[k - 1] = 2;
    c[n - 1] += 1;
    return c;
  };
  auto coeffs_long = [&](int i) {  // 2 e_i
    std::vector<int> c(n, 0);
    for (int k = i; k < n; ++k) c[k - 1] = 2;
    c[n - 1] = 1;
    return c;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      b.roots.push_back(make_root(coeffs_minus(i, j), amb(n, i, +1, j, -1)));
      b.roots.push_back(make_root(coeffs_plus(i, j), amb(n, i, +1, j, +1)));
    }
  for (int i = 1; i <= n; ++i)
    b.roots.push_back(make_root(coeffs_long(i), amb(n, i, +2, 0, 0)));
  for (int i = 1; i <= n; ++i) b.marked_L.push_back(coeffs_long(i));
  for (int i = 1; i < n; ++i) b.marked_S.push_back(coeffs_plus(i, n));
  b.marked_S.push_back(coeffs_long(n));
  b.sigma = identity_sigma(n);
  return std::move(b).finish();
}

RootPoset build_type_B(int n) {
  require(n >= 2, "type B needs rank >= 2");
  RootPosetBuilder b;
  b.type = {Family::B, n};
  b.rank = n;
  auto coeffs_minus = [&](int i, int j) {  // e_i - e_j
    std::vector<int> c(n, 0);
    for (int k = i; k < j; ++k) c[k - 1] = 1;
    return c;
  };
  auto coeffs_plus = [&](int i, int j) {  // e_i + e_j, i < j <= n
    std::vector<int> c(n, 0);
    for (int k = i; k < j; ++k) c[k - 1] = 1;
    for (int k = j; k <= n; ++k) c[k - 1] = 2;
    return c;
  };
  auto coeffs_short = [&](int i) {  // e_i
    std::vector<int> c(n, 0);
    for (int k = i; k <= n; ++k) c[k - 1] = 1;
    return c;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      b.roots.push_back(make_root(coeffs_minus(i, j), amb(n, i, +1, j, -1)));
      b.roots.push_back(make_root(coeffs_plus(i, j), amb(n, i, +1, j, +1)));
    }
  for (int i = 1; i <= n; ++i)
    b.roots.push_back(make_root(coeffs_short(i), amb(n, i, +1, 0, 0)));
  // images of the C-side marked subsets under the standard poset isomorphism
  for (int i = 1; i < n; ++i) b.marked_L.push_back(coeffs_plus(i, i + 1));
  b.marked_L.push_back(coeffs_short(n));
  for (int i = 1; i <= n; ++i) b.marked_S.push_back(coeffs_short(i));
  b.sigma = identity_sigma(n);
  return std::move(b).finish();
}

RootPoset build_type_D(int n) {
  require(n >= 4, "type D needs rank >= 4");
  RootPosetBuilder b;
  b.type = {Family::D, n};
  b.rank = n;
  auto coeffs_minus = [&](int i, int j) {  // e_i - e_j
    std::vector<int> c(n, 0);
    for (int k = i; k < j; ++k) c[k - 1] = 1;
    return c;
  };
  auto coeffs_plus = [&](int i, int j) {  // e_i + e_j, i < j <= n
    std::vector<int> c(n, 0);
    if (j == n) {
      for (int k = i; k <= n - 2; ++k) c[k - 1] = 1;
      c[n - 1] = 1;
    } else {
      for (int k = i; k < j; ++k) c[k - 1] = 1;
      for (int k = j; k <= n - 2; ++k) c[k - 1] = 2;
      c[n - 2] += 1;
      c[n - 1] += 1;
    }
    return c;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      b.roots.push_back(make_root(coeffs_minus(i, j), amb(n, i, +1, j, -1)));
      b.roots.push_back(make_root(coeffs_plus(i, j), amb(n, i, +1, j, +1)));
    }
  for (int i = 1; i <= n - 2; ++i) b.marked_L.push_back(coeffs_plus(i, i + 1));
  b.marked_L.push_back(coeffs_minus(n - 1, n));
  b.marked_L.push_back(coeffs_plus(n - 1, n));
  for (int i = 1; i < n; ++i) {
    b.marked_S.push_back(coeffs_minus(i, n));
    b.marked_S.push_back(coeffs_plus(i, n));
  }
  b.sigma = identity_sigma(n);
  if (n % 2 == 1) std::swap(b.sigma[n - 2], b.sigma[n - 1]);
  return std::move(b).finish();
}

RootPoset build_root_poset(TypeLabel t) {
  switch (t.family) {
    case Family::A: return build_type_A(t.rank);
    case Family::B: return build_type_B(t.rank);
    case Family::C: return build_type_C(t.rank);
    case Family::D: return build_type_D(t.rank);
    default: break;
  }
  std::vector<std::vector<int>> m;
  auto simply_laced = [&](int r, const std::vector<std::pair<int, int>>& edges) {
    m.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) m[i][i] = 2;
    for (auto [x, y] : edges) m[x - 1][y - 1] = m[y - 1][x - 1] = -1;
  };
  switch (t.family) {
    case Family::E: {
      std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}};
      if (t.rank >= 7) edges.push_back({6, 7});
      if (t.rank >= 8) edges.push_back({7, 8});
      simply_laced(t.rank, edges);
      break;
    }
    case Family::F:
      // alpha1, alpha2 long; alpha3, alpha4 short
      m = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      break;
    case Family::G:
      // alpha1 short, alpha2 long
      m = {{2, -3}, {-1, 2}};
      break;
    default:
      throw argument_error("unsupported type " + t.str());
  }
  RootPosetBuilder b;
  b.type = t;
  b.rank = t.rank;
  for (auto& c : closure_roots(m)) b.roots.push_back(make_root(std::move(c), {}));
  b.sigma = identity_sigma(t.rank);
  if (t.family == Family::E && t.rank == 6) {
    b.sigma = {6, 2, 5, 4, 3, 1};
  }
  return std::move(b).finish();
}

int eta(const RootPoset& a, int e) {
  require(a.type().family == Family::A, "eta acts on type A posets");
  return a.neg_w0()[e];  // reversal of simple indices, independent of parity
}

namespace {

// (i, j, sign) of a B/C/D ambient vector; long roots 2e_i come back as
// (i, i, +), short e_i as (i, 0, +).
struct AmbientName {
  int i = 0, j = 0;
  int sign = +1;
};

AmbientName ambient_name(const Root& r) {
  AmbientName out;
  for (int k = 0; k < int(r.ambient.size()); ++k) {
    int v = r.ambient[k];
    if (v == 0) continue;
    if (v == 2) return {k + 1, k + 1, +1};
    if (out.i == 0) {
      out.i = k + 1;
    } else {
      out.j = k + 1;
      out.sign = v > 0 ? +1 : -1;
    }
  }
  return out;
}

}  // namespace

int delta(const RootPoset& d, int e) {
  require(d.type().family == Family::D, "delta acts on type D posets");
  const int n = d.rank();
  AmbientName name = ambient_name(d.root(e));
  if (name.j != n) return e;
  std::vector<int> target(n, 0);
  target[name.i - 1] = 1;
  target[n - 1] = -name.sign;
  for (int f = 0; f < d.size(); ++f)
    if (d.root(f).ambient == target) return f;
  throw internal_error("delta image not found");
}

GammaFolding gamma_folding(const RootPoset& d) {
  require(d.type().family == Family::D, "gamma folds type D posets");
  const int n = d.rank();
  GammaFolding out;
  out.c_poset = build_type_C(n - 1);
  out.image.assign(d.size(), -1);
  out.preimage.assign(out.c_poset.size(), {});
  auto c_elem = [&](int i, int j, int sign) {
    std::vector<int> target(n - 1, 0);
    if (i == j) {
      target[i - 1] = 2;
    } else {
      target[i - 1] = 1;
      target[j - 1] = sign;
    }
    for (int f = 0; f < out.c_poset.size(); ++f)
      if (out.c_poset.root(f).ambient == target) return f;
    throw internal_error("gamma image not found");
  };
  for (int e = 0; e < d.size(); ++e) {
    AmbientName name = ambient_name(d.root(e));
    int f;
    if (name.j == n)
      f = c_elem(name.i, n - 1, +1);  // both e_i - e_n and e_i + e_n
    else if (name.sign < 0)
      f = c_elem(name.i, name.j, -1);
    else
      f = c_elem(name.i, name.j - 1, +1);
    out.image[e] = f;
    out.preimage[f].push_back(e);
  }
  for (auto& pre : out.preimage) {
    std::sort(pre.begin(), pre.end());
    ensure(!pre.empty() && pre.size() <= 2, "gamma fibers must have one or two elements");
  }
  return out;
}

std::vector<int> iota(const RootPoset& c, const RootPoset& a2n1, const std::vector<int>& s) {
  require(c.type().family == Family::C, "iota unfolds type C posets");
  const int n = c.rank();
  require(a2n1.type().family == Family::A && a2n1.rank() == 2 * n - 1,
          "iota target must be the type A poset on a ground set of twice the size");
  std::vector<int> out;
  auto push = [&](int lo, int hi) {
    int e = a2n1.element_by_interval(lo, hi);
    ensure(e >= 0, "unfolded interval missing");
    out.push_back(e);
  };
  for (int e : s) {
    AmbientName name = ambient_name(c.root(e));
    if (name.i == name.j) {
      push(name.i, 2 * n + 1 - name.i);
    } else if (name.sign < 0) {
      push(name.i, name.j);
      push(2 * n + 1 - name.j, 2 * n + 1 - name.i);
    } else {
      push(name.i, 2 * n + 1 - name.j);
      push(name.j, 2 * n + 1 - name.i);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<int> degrees_from_rank_sizes(const std::vector<int>& sizes) {
  for (std::size_t i = 1; i < sizes.size(); ++i)
    ensure(sizes[i] <= sizes[i - 1], "rank sizes must weakly decrease");
  std::vector<int> out;
  if (sizes.empty()) return out;
  for (int k = 1; k <= sizes[0]; ++k) {
    int conj = 0;
    for (int s : sizes)
      if (s >= k) ++conj;
    out.push_back(conj + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> degrees(const RootPoset& p) {
  std::vector<int> sizes;
  for (int i = 0; i <= p.poset().max_rank(); ++i)
    sizes.push_back(int(p.poset().rank_elements(i).size()));
  auto out = degrees_from_rank_sizes(sizes);
  ensure(int(out.size()) == p.rank(), "degree count must equal the rank");
  return out;
}

long long catalan_from_degrees(const std::vector<int>& degs, int h) {
  long long num = 1, den = 1;
  for (int d : degs) {
    num *= d + h;
    den *= d;
    long long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  ensure(den == 1, "catalan product must be an integer");
  return num;
}

long long catalan_number(const RootPoset& p) {
  long long total = 1;
  for (const auto& component : p.poset().components()) {
    int max_rank = 0;
    for (int e : component) max_rank = std::max(max_rank, p.poset().rank_of(e));
    std::vector<int> sizes(max_rank + 1, 0);
    for (int e : component) ++sizes[p.poset().rank_of(e)];
    total *= catalan_from_degrees(degrees_from_rank_sizes(sizes), max_rank + 2);
  }
  return total;
}

std::vector<long long> narayana_counts(const RootPoset& p) {
  std::vector<long long> out(p.rank() + 1, 0);
  for (const auto& a : all_antichains(p.poset())) {
    ensure(a.size() < out.size(), "antichain wider than the rank");
    ++out[a.size()];
  }
  return out;
}

std::vector<std::pair<int, int>> lalanne_kreweras(
    const std::vector<std::pair<int, int>>& a, int ground) {
  std::vector<std::pair<int, int>> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> drop_i(ground + 1, false), drop_j(ground + 1, false);
  int prev_lo = 0, prev_hi = 0;
  for (auto [lo, hi] : sorted) {
    require(1 <= lo && lo < hi && hi <= ground, "interval out of range");
    require(lo > prev_lo && hi > prev_hi, "intervals do not form an antichain");
    prev_lo = lo;
    prev_hi = hi;
    drop_i[hi - 1] = true;
    drop_j[lo + 1] = true;
  }
  std::vector<int> is, js;
  for (int v = 1; v <= ground - 1; ++v)
    if (!drop_i[v]) is.push_back(v);
  for (int v = 2; v <= ground; ++v)
    if (!drop_j[v]) js.push_back(v);
  ensure(is.size() == js.size(), "mismatched index sets");
  std::vector<std::pair<int, int>> out;
  for (std::size_t k = 0; k < is.size(); ++k) out.push_back({is[k], js[k]});
  return out;
}

}  // namespace coxcat
