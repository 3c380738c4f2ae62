#include "coxcat/poset.hpp"

#include <algorithm>
#include <numeric>

#include "coxcat/errors.hpp"

namespace coxcat {

namespace {

using Words = std::vector<std::uint64_t>;

inline void set_bit(std::uint64_t* w, int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
inline void clear_bit(std::uint64_t* w, int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
inline bool test_bit(const std::uint64_t* w, int i) {
  return (w[i >> 6] >> (i & 63)) & 1;
}
inline bool intersects(const std::uint64_t* a, const std::uint64_t* b, int words) {
  for (int i = 0; i < words; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

Words to_mask(const RankedPoset& p, const Antichain& a) {
  Words m(p.words(), 0);
  for (int e : a) set_bit(m.data(), e);
  return m;
}

Antichain from_mask(const RankedPoset& p, const Words& m) {
  Antichain a;
  for (int e = 0; e < p.size(); ++e)
    if (test_bit(m.data(), e)) a.push_back(e);
  return a;
}

// In-place tau over one rank row, increasing index order.
void rank_toggle_mask(const RankedPoset& p, int row, Words& m) {
  for (int e : p.rank_elements(row)) {
    if (test_bit(m.data(), e))
      clear_bit(m.data(), e);
    else if (!intersects(m.data(), p.comp(e), p.words()))
      set_bit(m.data(), e);
  }
}

}  // namespace

RankedPoset RankedPoset::from_leq(int size, const std::function<bool(int, int)>& leq) {
  require(size >= 0, "poset size must be nonnegative");
  RankedPoset p;
  p.m_ = size;
  p.leq_.assign(std::size_t(size) * size, 0);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (leq(a, b)) p.leq_[a * size + b] = 1;
  p.finish();
  return p;
}

RankedPoset RankedPoset::from_covers(int size, const std::vector<std::pair<int, int>>& covers) {
  require(size >= 0, "poset size must be nonnegative");
  std::vector<std::vector<int>> above(size);
  for (auto [x, y] : covers) {
    require(x >= 0 && x < size && y >= 0 && y < size && x != y, "cover out of range");
    above[x].push_back(y);
  }
  RankedPoset p;
  p.m_ = size;
  p.leq_.assign(std::size_t(size) * size, 0);
  // reachability from each element upward
  for (int s = 0; s < size; ++s) {
    std::vector<int> stack{s};
    p.leq_[s * size + s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : above[x])
        if (!p.leq_[s * size + y]) {
          p.leq_[s * size + y] = 1;
          stack.push_back(y);
        }
    }
  }
  p.finish();
  return p;
}

void RankedPoset::finish() {
  const int m = m_;
  words_ = (m + 63) / 64;
  down_.assign(std::size_t(m) * words_, 0);
  up_.assign(std::size_t(m) * words_, 0);
  comp_.assign(std::size_t(m) * words_, 0);

  for (int a = 0; a < m; ++a) {
    require(leq_[a * m + a] != 0, "order not reflexive");
    for (int b = 0; b < m; ++b) {
      if (a != b && leq_[a * m + b] && leq_[b * m + a])
        throw argument_error("order not antisymmetric");
      if (leq_[a * m + b]) {
        set_bit(up_.data() + a * words_, b);
        set_bit(down_.data() + b * words_, a);
      }
    }
  }
  // transitivity: a <= b implies down(a) within down(b)
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && leq_[a * m + b])
        for (int w = 0; w < words_; ++w)
          require((down(a)[w] & ~down(b)[w]) == 0, "order not transitive");

  for (int e = 0; e < m; ++e) {
    auto* c = comp_.data() + e * words_;
    for (int w = 0; w < words_; ++w) c[w] = down(e)[w] | up(e)[w];
    clear_bit(c, e);
  }

  // covers: a < b with empty open interval; the intersection of up(a) and
  // down(b) is then exactly {a, b}
  covers_.clear();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b || !leq_[a * m + b]) continue;
      int pop = 0;
      for (int w = 0; w < words_; ++w)
        pop += std::popcount(up(a)[w] & down(b)[w]);
      if (pop == 2) covers_.push_back({a, b});
    }

  // ranks along any saturated chain; all cover steps must agree
  rank_.assign(m, -1);
  std::vector<std::vector<int>> below(m);
  for (auto [x, y] : covers_) below[y].push_back(x);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> downsize(m, 0);
  for (int e = 0; e < m; ++e)
    for (int w = 0; w < words_; ++w) downsize[e] += std::popcount(down(e)[w]);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return downsize[a] < downsize[b]; });
  max_rank_ = m == 0 ? -1 : 0;
  for (int e : order) {
    if (below[e].empty()) {
      rank_[e] = 0;
      continue;
    }
    int r = rank_[below[e][0]] + 1;
    for (int z : below[e])
      require(rank_[z] + 1 == r, "poset is not ranked");
    rank_[e] = r;
    max_rank_ = std::max(max_rank_, r);
  }
  by_rank_.assign(max_rank_ + 1, {});
  for (int e = 0; e < m; ++e) by_rank_[rank_[e]].push_back(e);
}

const std::vector<int>& RankedPoset::minimal_elements() const {
  static const std::vector<int> empty;
  return m_ == 0 ? empty : by_rank_[0];
}

std::vector<std::vector<int>> RankedPoset::components() const {
  std::vector<int> comp_id(m_, -1);
  std::vector<std::vector<int>> adj(m_);
  for (auto [x, y] : covers_) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<std::vector<int>> out;
  for (int s = 0; s < m_; ++s) {
    if (comp_id[s] >= 0) continue;
    int id = int(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp_id[s] = id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      out[id].push_back(x);
      for (int y : adj[x])
        if (comp_id[y] < 0) {
          comp_id[y] = id;
          stack.push_back(y);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_antichain(const RankedPoset& p, const Antichain& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] >= p.size()) return false;
    if (i > 0 && a[i] <= a[i - 1]) return false;
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (p.comparable(a[i], a[j])) return false;
  }
  return true;
}

Antichain make_antichain(const RankedPoset& p, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  require(is_antichain(p, elems), "not an antichain of this poset");
  return elems;
}

Antichain toggle(const RankedPoset& p, int elem, const Antichain& a) {
  require(elem >= 0 && elem < p.size(), "toggle element out of range");
  Antichain out;
  out.reserve(a.size() + 1);
  bool present = false;
  bool blocked = false;
  for (int y : a) {
    if (y == elem) {
      present = true;
      continue;
    }
    if (p.comparable(elem, y)) blocked = true;
    out.push_back(y);
  }
  if (present) return out;
  if (blocked) return a;
  out.insert(std::upper_bound(out.begin(), out.end(), elem), elem);
  return out;
}

Antichain rank_toggle(const RankedPoset& p, int row, const Antichain& a) {
  require(row >= 0 && row <= p.max_rank(), "rank row out of range");
  Words m = to_mask(p, a);
  rank_toggle_mask(p, row, m);
  return from_mask(p, m);
}

Antichain rowmotion(const RankedPoset& p, const Antichain& a) {
  const int words = p.words();
  Words ideal(words, 0);
  for (int y : a)
    for (int w = 0; w < words; ++w) ideal[w] |= p.down(y)[w];
  Antichain out;
  for (int x = 0; x < p.size(); ++x) {
    if (test_bit(ideal.data(), x)) continue;
    bool minimal = true;
    for (int w = 0; w < words && minimal; ++w) {
      std::uint64_t lower = p.down(x)[w] & ~ideal[w];
      if (w == (x >> 6)) lower &= ~(std::uint64_t(1) << (x & 63));
      if (lower) minimal = false;
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

Antichain rowmotion_inverse(const RankedPoset& p, const Antichain& a) {
  Words m = to_mask(p, a);
  for (int i = p.max_rank(); i >= 0; --i) rank_toggle_mask(p, i, m);
  return from_mask(p, m);
}

Antichain rowmotion_via_toggles(const RankedPoset& p, const Antichain& a,
                                const std::vector<int>& linear_extension) {
  require(is_linear_extension(p, linear_extension), "not a linear extension");
  Words m = to_mask(p, a);
  for (int e : linear_extension) {
    if (test_bit(m.data(), e))
      clear_bit(m.data(), e);
    else if (!intersects(m.data(), p.comp(e), p.words()))
      set_bit(m.data(), e);
  }
  return from_mask(p, m);
}

Antichain rowvacuation(const RankedPoset& p, const Antichain& a) {
  Words m = to_mask(p, a);
  for (int start = 0; start <= p.max_rank(); ++start)
    for (int i = start; i <= p.max_rank(); ++i) rank_toggle_mask(p, i, m);
  return from_mask(p, m);
}

const char* op_name(AntichainOp op) {
  switch (op) {
    case AntichainOp::Rowmotion: return "rowmotion";
    case AntichainOp::Rowvacuation: return "rowvacuation";
    case AntichainOp::RowInvRvac: return "rowinv-rvac";
  }
  return "?";
}

Antichain apply_op(const RankedPoset& p, AntichainOp op, const Antichain& a) {
  switch (op) {
    case AntichainOp::Rowmotion: return rowmotion(p, a);
    case AntichainOp::Rowvacuation: return rowvacuation(p, a);
    case AntichainOp::RowInvRvac: return rowmotion_inverse(p, rowvacuation(p, a));
  }
  throw argument_error("unknown operator");
}

std::vector<int> support(const RankedPoset& p, const Antichain& a) {
  std::vector<int> out;
  for (int e : p.minimal_elements())
    for (int y : a)
      if (p.leq(e, y)) {
        out.push_back(e);
        break;
      }
  return out;
}

InducedSubposet restrict_to_support(const RankedPoset& p, const std::vector<int>& x) {
  const auto& mins = p.minimal_elements();
  for (int e : x)
    require(std::find(mins.begin(), mins.end(), e) != mins.end(),
            "restriction set must consist of minimal elements");
  Words banned(p.words(), 0);
  for (int e : mins)
    if (std::find(x.begin(), x.end(), e) == x.end())
      for (int w = 0; w < p.words(); ++w) banned[w] |= p.up(e)[w];
  InducedSubposet out;
  out.from_parent.assign(p.size(), -1);
  for (int e = 0; e < p.size(); ++e)
    if (!test_bit(banned.data(), e)) {
      out.from_parent[e] = int(out.to_parent.size());
      out.to_parent.push_back(e);
    }
  const auto& keep = out.to_parent;
  out.poset = RankedPoset::from_leq(
      int(keep.size()), [&](int a, int b) { return p.leq(keep[a], keep[b]); });
  return out;
}

Rational OrbitReport::average_size() const {
  std::int64_t total = 0;
  for (const auto& a : orbit) total += std::int64_t(a.size());
  return Rational(total, std::int64_t(orbit.size()));
}

OrbitReport orbit_of(const RankedPoset& p, AntichainOp op, const Antichain& a) {
  require(is_antichain(p, a), "orbit seed is not an antichain");
  OrbitReport rep;
  rep.op = op;
  rep.orbit.push_back(a);
  Antichain cur = apply_op(p, op, a);
  while (cur != a) {
    rep.orbit.push_back(cur);
    cur = apply_op(p, op, cur);
    ensure(rep.orbit.size() <= std::size_t(1) << 40, "orbit failed to close");
  }
  return rep;
}

namespace {
void enumerate_rec(const RankedPoset& p, int start, Antichain& cur, Words& conflict,
                   const std::function<void(const Antichain&)>& fn) {
  fn(cur);
  for (int e = start; e < p.size(); ++e) {
    if (test_bit(conflict.data(), e)) continue;
    cur.push_back(e);
    Words saved = conflict;
    for (int w = 0; w < p.words(); ++w) conflict[w] |= p.comp(e)[w];
    enumerate_rec(p, e + 1, cur, conflict, fn);
    conflict = saved;
    cur.pop_back();
  }
}
}  // namespace

std::vector<Antichain> all_antichains(const RankedPoset& p) {
  std::vector<Antichain> out;
  Antichain cur;
  Words conflict(p.words(), 0);
  enumerate_rec(p, 0, cur, conflict, [&](const Antichain& a) { out.push_back(a); });
  return out;
}

long long count_antichains(const RankedPoset& p) {
  long long n = 0;
  Antichain cur;
  Words conflict(p.words(), 0);
  enumerate_rec(p, 0, cur, conflict, [&](const Antichain&) { ++n; });
  return n;
}

bool is_linear_extension(const RankedPoset& p, const std::vector<int>& order) {
  if (int(order.size()) != p.size()) return false;
  std::vector<int> pos(p.size(), -1);
  for (int i = 0; i < int(order.size()); ++i) {
    if (order[i] < 0 || order[i] >= p.size() || pos[order[i]] >= 0) return false;
    pos[order[i]] = i;
  }
  for (auto [x, y] : p.covers())
    if (pos[x] > pos[y]) return false;
  return true;
}

std::vector<int> default_linear_extension(const RankedPoset& p) {
  std::vector<int> out;
  for (int i = 0; i <= p.max_rank(); ++i)
    for (int e : p.rank_elements(i)) out.push_back(e);
  return out;
}

std::vector<int> random_linear_extension(const RankedPoset& p, std::mt19937_64& rng) {
  std::vector<int> indeg(p.size(), 0);
  std::vector<std::vector<int>> above(p.size());
  for (auto [x, y] : p.covers()) {
    ++indeg[y];
    above[x].push_back(y);
  }
  std::vector<int> avail;
  for (int e = 0; e < p.size(); ++e)
    if (indeg[e] == 0) avail.push_back(e);
  std::vector<int> out;
  while (!avail.empty()) {
    std::size_t k = rng() % avail.size();
    int e = avail[k];
    avail.erase(avail.begin() + k);
    out.push_back(e);
    for (int y : above[e])
      if (--indeg[y] == 0) avail.push_back(y);
  }
  ensure(int(out.size()) == p.size(), "linear extension sampling got stuck");
  return out;
}

Antichain apply_permutation(const std::vector<int>& perm, const Antichain& a) {
  Antichain out;
  out.reserve(a.size());
  for (int e : a) out.push_back(perm.at(e));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxcat
