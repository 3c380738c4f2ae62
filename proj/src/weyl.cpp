#include "coxcat/weyl.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "coxcat/errors.hpp"

namespace coxcat {

SignedPerm::SignedPerm(std::vector<int> img) : img_(std::move(img)) {
  const int n = int(img_.size());
  std::vector<bool> hit(n, false);
  for (int v : img_) {
    int a = std::abs(v);
    require(1 <= a && a <= n && !hit[a - 1], "not a signed permutation");
    hit[a - 1] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  return SignedPerm(std::move(img));
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 1; i <= n(); ++i) {
    int v = img_[i - 1];
    img[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return SignedPerm(std::move(img));
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  require(n() == o.n(), "size mismatch");
  std::vector<int> img(img_.size());
  for (int i = 1; i <= n(); ++i) img[i - 1] = apply(o.apply(i));
  return SignedPerm(std::move(img));
}

bool SignedPerm::is_plain() const {
  return std::all_of(img_.begin(), img_.end(), [](int v) { return v > 0; });
}

int SignedPerm::sign_changes() const {
  return int(std::count_if(img_.begin(), img_.end(), [](int v) { return v < 0; }));
}

std::string SignedPerm::cycle_string() const {
  std::string out;
  std::vector<bool> visited(n(), false);
  for (int s = 1; s <= n(); ++s) {
    if (visited[s - 1]) continue;
    std::vector<int> cycle = {s};
    visited[s - 1] = true;
    for (int v = apply(s); v != s; v = apply(v)) {
      cycle.push_back(v);
      visited[std::abs(v) - 1] = true;
    }
    if (cycle.size() == 1) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

SignedPerm SignedPerm::from_cycles(int n, const std::string& text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char ch = text[i];
    if (ch == 0xE2) {  // unicode minus sign U+2212
      require(i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
                  static_cast<unsigned char>(text[i + 2]) == 0x92,
              "unexpected character in cycle notation");
      s += '-';
      i += 2;
    } else if (!std::isspace(ch)) {
      s += char(ch);
    }
  }
  if (s.empty() || s == "e") return SignedPerm::identity(n);
  std::vector<int> img(n, 0);
  auto assign = [&](int from, int to) {
    int pos = std::abs(from);
    require(pos >= 1 && pos <= n && std::abs(to) <= n, "cycle value out of range");
    int v = from > 0 ? to : -to;
    require(img[pos - 1] == 0 || img[pos - 1] == v, "inconsistent cycles");
    img[pos - 1] = v;
  };
  std::size_t i = 0;
  while (i < s.size()) {
    require(s[i] == '(', "expected '(' in cycle notation");
    std::vector<int> cycle;
    ++i;
    while (i < s.size() && s[i] != ')') {
      int sign = 1;
      if (s[i] == '-') {
        sign = -1;
        ++i;
      }
      require(i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])),
              "expected an integer in cycle notation");
      int v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        v = 10 * v + (s[i++] - '0');
      cycle.push_back(sign * v);
      if (i < s.size() && s[i] == ',') ++i;
    }
    require(i < s.size(), "unterminated cycle");
    ++i;
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) assign(cycle[k], cycle[k + 1]);
    if (cycle.size() > 1) assign(cycle.back(), cycle.front());
  }
  for (int k = 1; k <= n; ++k)
    if (img[k - 1] == 0) img[k - 1] = k;
  return SignedPerm(std::move(img));
}

int absolute_length(const SignedPerm& w) {
  const int n = w.n();
  std::vector<bool> visited(n, false);
  int paired = 0;
  for (int s = 1; s <= n; ++s) {
    if (visited[s - 1]) continue;
    visited[s - 1] = true;
    int v = w.apply(s);
    while (std::abs(v) != s) {
      visited[std::abs(v) - 1] = true;
      v = w.apply(v);
    }
    if (v == s) ++paired;  // v == -s marks a balanced orbit, fixing nothing
  }
  return n - paired;
}

SignedPerm simple_reflection(Family family, int n, int i) {
  require(i >= 1, "simple index must be positive");
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = k + 1;
  switch (family) {
    case Family::A:
      require(i <= n - 1, "simple index out of range");
      std::swap(img[i - 1], img[i]);
      break;
    case Family::B:
    case Family::C:
      require(i <= n, "simple index out of range");
      if (i < n)
        std::swap(img[i - 1], img[i]);
      else
        img[n - 1] = -n;
      break;
    case Family::D:
      require(i <= n, "simple index out of range");
      if (i < n) {
        std::swap(img[i - 1], img[i]);
      } else {
        img[n - 2] = -n;
        img[n - 1] = -(n - 1);
      }
      break;
    default:
      throw argument_error("no signed-permutation realization for this family");
  }
  return SignedPerm(std::move(img));
}

int weyl_ambient(TypeLabel t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C:
    case Family::D: return t.rank;
    default: throw argument_error("no signed-permutation realization for " + t.str());
  }
}

long long weyl_order(TypeLabel t) {
  long long f = 1;
  for (int k = 2; k <= weyl_ambient(t); ++k) f *= k;
  switch (t.family) {
    case Family::A: return f;
    case Family::B:
    case Family::C: return f << t.rank;
    case Family::D: return f << (t.rank - 1);
    default: throw argument_error("no signed-permutation realization for " + t.str());
  }
}

namespace {

std::vector<std::pair<int, int>> dynkin_edges(TypeLabel t) {
  std::vector<std::pair<int, int>> edges;
  int path_end = t.family == Family::D ? t.rank - 1 : t.rank;
  for (int i = 1; i < path_end; ++i) edges.push_back({i, i + 1});
  if (t.family == Family::D) edges.push_back({t.rank - 2, t.rank});
  return edges;
}

}  // namespace

BipartiteCoxeter bipartite_coxeter(TypeLabel t) {
  const int n = weyl_ambient(t);
  const int r = t.rank;
  std::vector<int> color(r + 1, -1);
  std::vector<std::vector<int>> adj(r + 1);
  for (auto [a, b] : dynkin_edges(t)) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::queue<int> q;
  color[1] = 0;
  q.push(1);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        q.push(w);
      }
  }
  BipartiteCoxeter out;
  out.c_left = SignedPerm::identity(n);
  out.c_right = SignedPerm::identity(n);
  for (int i = 1; i <= r; ++i) {
    ensure(color[i] >= 0, "disconnected diagram");
    if (color[i] == 0) {
      out.left.push_back(i);
      out.c_left = out.c_left * simple_reflection(t.family, n, i);
    } else {
      out.right.push_back(i);
      out.c_right = out.c_right * simple_reflection(t.family, n, i);
    }
  }
  out.c = out.c_left * out.c_right;
  return out;
}

NoncrossingLattice NoncrossingLattice::build(TypeLabel t, long long capacity) {
  const long long order = weyl_order(t);
  if (order > capacity)
    throw capacity_error("group of order " + std::to_string(order) +
                         " exceeds capacity " + std::to_string(capacity));
  const int n = weyl_ambient(t);
  std::vector<SignedPerm> gens;
  for (int i = 1; i <= t.rank; ++i) gens.push_back(simple_reflection(t.family, n, i));

  std::map<std::vector<int>, bool> seen;
  std::queue<SignedPerm> frontier;
  SignedPerm id = SignedPerm::identity(n);
  seen[id.image()] = true;
  frontier.push(id);
  std::vector<SignedPerm> group;
  while (!frontier.empty()) {
    SignedPerm w = frontier.front();
    frontier.pop();
    group.push_back(w);
    for (const auto& s : gens) {
      SignedPerm ws = w * s;
      if (!seen.count(ws.image())) {
        seen[ws.image()] = true;
        frontier.push(ws);
      }
    }
  }
  ensure(static_cast<long long>(group.size()) == order, "group enumeration size mismatch");

  NoncrossingLattice out;
  out.type_ = t;
  out.cox_ = bipartite_coxeter(t);
  const int lc = absolute_length(out.cox_.c);
  ensure(lc == t.rank, "coxeter element length must equal the rank");
  int reflections = 0;
  for (const auto& w : group) {
    if (absolute_length(w) == 1) ++reflections;
    if (absolute_length(w) + absolute_length(w.inverse() * out.cox_.c) == lc)
      out.elements_.push_back(w);
  }
  int roots;
  switch (t.family) {
    case Family::A: roots = t.rank * (t.rank + 1) / 2; break;
    case Family::B:
    case Family::C: roots = t.rank * t.rank; break;
    default: roots = t.rank * (t.rank - 1); break;
  }
  ensure(reflections == roots, "reflection count must match the positive roots");
  std::sort(out.elements_.begin(), out.elements_.end(), [](const auto& a, const auto& b) {
    int la = absolute_length(a), lb = absolute_length(b);
    if (la != lb) return la < lb;
    return a.image() < b.image();
  });
  return out;
}

int NoncrossingLattice::index_of(const SignedPerm& w) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), w,
                             [](const SignedPerm& a, const SignedPerm& b) {
                               int la = absolute_length(a), lb = absolute_length(b);
                               if (la != lb) return la < lb;
                               return a.image() < b.image();
                             });
  if (it == elements_.end() || !(*it == w)) return -1;
  return int(it - elements_.begin());
}

int NoncrossingLattice::rank_of(int k) const { return absolute_length(elements_[k]); }

bool NoncrossingLattice::leq(int a, int b) const {
  const SignedPerm& u = elements_[a];
  const SignedPerm& w = elements_[b];
  return absolute_length(u) + absolute_length(u.inverse() * w) == absolute_length(w);
}

int NoncrossingLattice::kreweras(int k) const {
  int r = index_of(cox_.c * elements_[k].inverse());
  ensure(r >= 0, "kreweras complement left the lattice");
  return r;
}

int NoncrossingLattice::kreweras_inverse(int k) const {
  int r = index_of(elements_[k].inverse() * cox_.c);
  ensure(r >= 0, "inverse kreweras complement left the lattice");
  return r;
}

int NoncrossingLattice::flip(int k) const {
  int r = index_of(cox_.c_left * elements_[k].inverse() * cox_.c_left);
  ensure(r >= 0, "flip left the lattice");
  return r;
}

std::vector<long long> NoncrossingLattice::rank_counts() const {
  std::vector<long long> out(type_.rank + 1, 0);
  for (const auto& w : elements_) ++out[absolute_length(w)];
  return out;
}

}  // namespace coxcat
