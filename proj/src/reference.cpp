#include "egobw/reference.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>

namespace egobw::reference {

namespace {

Int128 abs128(Int128 x) { return x < 0 ? -x : x; }

Int128 gcd128(Int128 a, Int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int128 checked_mul(Int128 a, Int128 b) {
  Int128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("rational overflow");
  return out;
}

Int128 checked_add(Int128 a, Int128 b) {
  Int128 out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("rational overflow");
  return out;
}

}  // namespace

Rational::Rational(Int128 num, Int128 den) : num_(num), den_(den) {
  if (den_ == 0) throw std::domain_error("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int128 g = gcd128(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational& Rational::operator+=(const Rational& other) {
  Int128 g = gcd128(den_, other.den_);
  Int128 left = checked_mul(num_, other.den_ / g);
  Int128 right = checked_mul(other.num_, den_ / g);
  *this = Rational(checked_add(left, right), checked_mul(den_ / g, other.den_));
  return *this;
}

double Rational::to_double() const {
  // Split off the integer part so large denominators keep their precision.
  Int128 whole = num_ / den_;
  Int128 rest = num_ % den_;
  return static_cast<double>(whole) + static_cast<double>(rest) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  auto digits = [](Int128 x) {
    if (x == 0) return std::string("0");
    bool neg = x < 0;
    std::string s;
    while (x != 0) {
      int d = static_cast<int>(x % 10);
      s.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
      x /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
  };
  if (den_ == 1) return digits(num_);
  return digits(num_) + "/" + digits(den_);
}

EgoNetwork build_ego_network(const Graph& g, VertexId p) {
  if (!g.is_valid(p)) throw GraphError("invalid vertex id");
  EgoNetwork ego;
  ego.center = p;
  ego.members.push_back(p);
  for (VertexId v : g.neighbors(p)) ego.members.push_back(v);
  const std::size_t size = ego.members.size();
  ego.adjacency.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      if (g.has_edge(ego.members[i], ego.members[j])) {
        ego.adjacency[i].push_back(j);
        ego.adjacency[j].push_back(i);
      }
    }
  }
  return ego;
}

EgoOracle brute_force_cb(const Graph& g, VertexId p) {
  const EgoNetwork ego = build_ego_network(g, p);
  const std::size_t size = ego.members.size();
  EgoOracle out;

  for (std::size_t i = 1; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      VertexId u = ego.members[i];
      VertexId v = ego.members[j];
      if (g.has_edge(u, v)) continue;
      Int128 connectors = 0;
      for (std::size_t w = 1; w < size; ++w) {
        VertexId x = ego.members[w];
        if (x != u && x != v && g.has_edge(x, u) && g.has_edge(x, v)) ++connectors;
      }
      out.by_formula += Rational(1, connectors + 1);
    }
  }

  // Shortest paths inside the ego network from every neighbor.
  for (std::size_t s = 1; s < size; ++s) {
    std::vector<long> dist(size, -1);
    std::vector<Int128> sigma(size, 0);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    sigma[s] = 1;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y : ego.adjacency[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
        if (dist[y] == dist[x] + 1) sigma[y] += sigma[x];
      }
    }
    for (std::size_t t = s + 1; t < size; ++t) {
      // The center is adjacent to both ends, so it lies on a shortest path
      // iff the distance is 2, and then on exactly one of them.
      if (dist[t] == 2) out.by_path_counting += Rational(1, sigma[t]);
    }
  }
  return out;
}

std::vector<double> brandes_betweenness(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<double> centrality(n, 0.0);
  std::vector<long> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> preds(n);
  std::queue<VertexId> queue;

  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    stack.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    queue.push(s);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop();
      stack.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      VertexId w = *it;
      for (VertexId v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) centrality[w] += delta[w];
    }
  }
  for (auto& c : centrality) c /= 2.0;
  return centrality;
}

double topk_overlap(const std::vector<double>& a, const std::vector<double>& b, std::size_t k,
                    double tie_eps) {
  if (a.size() != b.size()) throw std::invalid_argument("rankings cover different vertex sets");
  if (k == 0 || k > a.size()) throw std::invalid_argument("k must be in [1, n]");

  auto kth = [k](std::vector<double> scores) {
    std::nth_element(scores.begin(), scores.begin() + static_cast<long>(k - 1), scores.end(),
                     std::greater<>());
    return scores[k - 1];
  };
  const double ta = kth(a);
  const double tb = kth(b);

  // Vertices strictly above the k-th score are forced into the top-k; those
  // tied with it compete for the remaining slots.
  std::size_t forced_a = 0, forced_b = 0, both_forced = 0;
  std::size_t forced_a_tied_b = 0, tied_a_forced_b = 0, both_tied = 0;
  for (std::size_t v = 0; v < a.size(); ++v) {
    bool fa = a[v] > ta + tie_eps;
    bool fb = b[v] > tb + tie_eps;
    bool xa = !fa && a[v] >= ta - tie_eps;
    bool xb = !fb && b[v] >= tb - tie_eps;
    forced_a += fa;
    forced_b += fb;
    both_forced += fa && fb;
    forced_a_tied_b += fa && xb;
    tied_a_forced_b += xa && fb;
    both_tied += xa && xb;
  }
  std::size_t slots_a = k - forced_a;
  std::size_t slots_b = k - forced_b;
  std::size_t take_b = std::min(slots_b, forced_a_tied_b);
  std::size_t take_a = std::min(slots_a, tied_a_forced_b);
  std::size_t shared = std::min({slots_a - take_a, slots_b - take_b, both_tied});
  return static_cast<double>(both_forced + take_b + take_a + shared) / static_cast<double>(k);
}

}  // namespace egobw::reference
