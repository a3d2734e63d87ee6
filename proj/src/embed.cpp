// Copyright 2026 The chainskip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chainskip/embed.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

#include "chainskip/error.hpp"
#include "chainskip/rng.hpp"

namespace chainskip {

const std::vector<QubitId>& Embedding::chain(QubitId program) const {
  auto it = chains.find(program);
  if (it == chains.end())
    throw UnknownQubitError("no chain for program qubit " + std::to_string(program));
  return it->second;
}

EmbedderParams EmbedderParams::reference_scale(std::uint64_t seed) {
  return EmbedderParams{1000.0, 20, 20, seed};
}

void EmbedderParams::validate() const {
  if (!(timeout_seconds > 0) || max_no_improvement <= 0 || tries <= 0)
    throw InvalidArgument("embedder parameters must be positive");
}

namespace {

using Clock = std::chrono::steady_clock;
using Distance = std::int64_t;
constexpr Distance kFar = std::numeric_limits<Distance>::max();
constexpr std::size_t npos = Graph::npos;

// A chain is a tree over physical qubits. data_ maps each qubit to its
// parent and a reference count (children plus links pointing at it). links_
// maps each neighbouring program qubit to the qubit of this chain that
// touches the neighbour's chain; the chain's own label maps to its root.
class Chain {
 public:
  Chain(std::vector<int>& fill, std::size_t label) : fill_(&fill), label_(label) {}

  void bind(std::vector<int>& fill) { fill_ = &fill; }
  std::size_t label() const { return label_; }
  std::size_t size() const { return data_.size(); }
  bool contains(std::size_t q) const { return data_.count(q) != 0; }
  int refcount(std::size_t q) const { return data_.at(q).second; }

  std::vector<std::size_t> qubits() const {
    std::vector<std::size_t> out;
    out.reserve(data_.size());
    for (const auto& [q, pr] : data_) out.push_back(q);
    return out;
  }

  std::size_t link(std::size_t x) const {
    auto it = links_.find(x);
    return it == links_.end() ? npos : it->second;
  }

  void set_link(std::size_t x, std::size_t q) {
    links_[x] = q;
    ++data_.at(q).second;
  }

  std::size_t drop_link(std::size_t x) {
    auto it = links_.find(x);
    if (it == links_.end()) return npos;
    std::size_t q = it->second;
    --data_.at(q).second;
    links_.erase(it);
    return q;
  }

  void set_root(std::size_t q) {
    links_.emplace(label_, q);
    data_.emplace(q, std::pair<std::size_t, int>{q, 2});
    ++(*fill_)[q];
  }

  void clear() {
    for (const auto& [q, pr] : data_) --(*fill_)[q];
    data_.clear();
    links_.clear();
  }

  void add_leaf(std::size_t q, std::size_t parent) {
    data_.emplace(q, std::pair<std::size_t, int>{parent, 0});
    ++(*fill_)[q];
    ++data_.at(parent).second;
  }

  // Removes q if nothing references it and returns its parent; otherwise
  // returns q unchanged.
  std::size_t trim_leaf(std::size_t q) {
    auto it = data_.find(q);
    auto [parent, refs] = it->second;
    if (refs != 0) return q;
    --(*fill_)[q];
    data_.erase(it);
    --data_.at(parent).second;
    return parent;
  }

  std::size_t trim_branch(std::size_t q) {
    for (std::size_t p = trim_leaf(q); p != q; p = trim_leaf(q)) q = p;
    return q;
  }

  // Walks q, parent[q], ... until reaching `other`, adding every qubit on
  // the way to this chain, then links the two chains at the meeting point.
  void link_path(Chain& other, std::size_t q, const std::vector<std::size_t>& parent) {
    std::size_t p = parent[q];
    if (p == npos) {
      p = q;
    } else {
      while (!other.contains(p)) {
        if (contains(p))
          trim_branch(q);
        else
          add_leaf(p, q);
        q = p;
        p = parent[p];
      }
    }
    set_link(other.label_, q);
    other.set_link(label_, p);
  }

  // Takes over the unreferenced tail of `other` that leads to this chain,
  // stopping once this chain reaches `limit` qubits (0 means no limit).
  void steal(Chain& other, std::size_t limit = 0) {
    std::size_t q = drop_link(other.label_);
    std::size_t p = other.drop_link(label_);
    while (limit == 0 || size() < limit) {
      std::size_t r = other.trim_leaf(p);
      if (r == p) break;
      auto it = data_.find(p);
      if (it == data_.end()) {
        add_leaf(p, q);
      } else if (p != q) {
        ++it->second.second;
        trim_branch(q);
        --data_.at(p).second;
      }
      q = p;
      p = r;
    }
    set_link(other.label_, q);
    other.set_link(label_, p);
  }

  struct Frozen {
    std::map<std::size_t, std::pair<std::size_t, int>> data;
    std::map<std::size_t, std::size_t> links;
    std::vector<std::pair<std::size_t, std::size_t>> incoming;  // (neighbour, its link qubit)
  };

  Frozen freeze(std::vector<Chain>& chains) {
    Frozen f;
    for (const auto& [x, q] : links_)
      if (x != label_) f.incoming.emplace_back(x, chains[x].drop_link(label_));
    for (const auto& [q, pr] : data_) --(*fill_)[q];
    f.data.swap(data_);
    f.links.swap(links_);
    return f;
  }

  void thaw(std::vector<Chain>& chains, Frozen& f) {
    data_.swap(f.data);
    links_.swap(f.links);
    for (const auto& [q, pr] : data_) ++(*fill_)[q];
    for (const auto& [x, q] : f.incoming) chains[x].set_link(label_, q);
  }

 private:
  std::vector<int>* fill_;
  std::size_t label_;
  std::map<std::size_t, std::pair<std::size_t, int>> data_;
  std::map<std::size_t, std::size_t> links_;
};

// Chains plus per-qubit fill counts for one embedding state.
class State {
 public:
  explicit State(std::size_t num_vars, std::size_t num_qubits) : fill_(num_qubits, 0) {
    chains_.reserve(num_vars);
    for (std::size_t x = 0; x < num_vars; ++x) chains_.emplace_back(fill_, x);
  }
  State(const State& o) : fill_(o.fill_), chains_(o.chains_) { rebind(); }
  State& operator=(const State& o) {
    fill_ = o.fill_;
    chains_ = o.chains_;
    rebind();
    return *this;
  }

  Chain& chain(std::size_t x) { return chains_[x]; }
  const Chain& chain(std::size_t x) const { return chains_[x]; }
  std::vector<Chain>& chains() { return chains_; }
  int fill(std::size_t q) const { return fill_[q]; }
  int max_fill() const { return fill_.empty() ? 0 : *std::max_element(fill_.begin(), fill_.end()); }

  void tear_out(std::size_t x, const Graph& src) {
    chains_[x].clear();
    for (auto y : src.neighbors_of_index(x)) chains_[y].drop_link(x);
  }

  void steal_all(std::size_t x, const Graph& src) {
    for (auto y : src.neighbors_of_index(x)) {
      if (chains_[x].link(y) == npos || chains_[y].link(x) == npos) continue;
      chains_[x].steal(chains_[y]);
    }
  }

  // Hands the path segments of x back to the neighbours they lead to.
  void flip_back(std::size_t x, const Graph& src, std::size_t limit) {
    for (auto y : src.neighbors_of_index(x))
      if (chains_[y].size() != 0) chains_[y].steal(chains_[x], limit);
  }

  // Overfull histogram (count of qubits at fill 2, 3, ...) while chains
  // overlap, chain-length histogram once they do not. Returns true in the
  // latter case.
  bool statistics(std::vector<std::size_t>& stats) const {
    const int top = max_fill();
    if (top > 1) {
      stats.assign(static_cast<std::size_t>(top) - 1, 0);
      for (int w : fill_)
        if (w > 1) ++stats[static_cast<std::size_t>(w) - 2];
      return false;
    }
    std::size_t longest = 0;
    for (const auto& c : chains_) longest = std::max(longest, c.size());
    stats.assign(longest + 1, 0);
    for (const auto& c : chains_) ++stats[c.size()];
    return true;
  }

 private:
  void rebind() {
    for (auto& c : chains_) c.bind(fill_);
  }

  std::vector<int> fill_;
  std::vector<Chain> chains_;
};

// Tear-out-and-replace search. Qubit costs grow exponentially with fill,
// scaled so the worst current fill still fits the distance type.
class Pathfinder {
 public:
  Pathfinder(const Graph& src, const Graph& hw, const EmbedderParams& p, Clock::time_point deadline)
      : src_(src),
        hw_(hw),
        p_(p),
        deadline_(deadline),
        rng_(p.seed),
        n_vars_(src.num_nodes()),
        n_qubits_(hw.num_nodes()),
        best_(src.num_nodes(), hw.num_nodes()),
        nbrs_(n_vars_),
        perms_(n_vars_, std::vector<std::size_t>(n_qubits_)),
        parents_(n_vars_, std::vector<std::size_t>(n_qubits_, npos)),
        distances_(n_vars_, std::vector<Distance>(n_qubits_, kFar)),
        visited_(n_vars_, std::vector<char>(n_qubits_, 0)),
        qubit_weight_(n_qubits_, 0),
        total_(n_qubits_, 0) {
    std::size_t max_degree = 0;
    for (std::size_t x = 0; x < n_vars_; ++x) {
      const auto& nb = src.neighbors_of_index(x);
      nbrs_[x].assign(nb.begin(), nb.end());
      max_degree = std::max(max_degree, nbrs_[x].size());
    }
    headroom_ = 62.0 - std::log2(static_cast<double>(std::max<std::size_t>(max_degree, 1) * n_qubits_));
    default_bound_ = static_cast<int>(std::floor(headroom_));
    weight_bound_ = default_bound_;
    std::vector<std::size_t> perm(n_qubits_);
    std::iota(perm.begin(), perm.end(), 0);
    for (auto& pm : perms_) {
      std::shuffle(perm.begin(), perm.end(), rng_);
      pm = perm;
    }
  }

  std::optional<State> run(EmbedOutcome& out) {
    State cur(n_vars_, n_qubits_);
    ++out.attempts;
    if (!initialize(cur)) return std::nullopt;
    check_improvement(cur);
    improved_ = true;
    cur = best_;

    for (int trial = p_.tries; trial-- > 0 && !embedded_;) {
      int patience = p_.max_no_improvement;
      pushback_ = 0;
      while (patience > 0 && !embedded_) {
        if (timed_out(out)) return finish(out);
        desperate_ = patience <= 1 || trial == 0;
        int r;
        if (pushback_ < static_cast<int>(n_vars_)) {
          r = pushdown_pass(cur);
        } else {
          --pushback_;
          r = overfill_pass(cur);
        }
        if (r < 0) cur = best_;
        if (r <= 0) {
          --patience;
          improved_ = false;
        } else {
          patience = p_.max_no_improvement;
          pushback_ = 0;
          improved_ = true;
        }
      }
      if (trial > 0 && !embedded_) {
        if (timed_out(out)) return finish(out);
        ++out.attempts;
        desperate_ = false;
        pushback_ = 0;
        cur = State(n_vars_, n_qubits_);
        if (!initialize(cur)) return finish(out);
        best_stats_.clear();
        check_improvement(cur);
      }
    }

    if (embedded_) {
      weight_bound_ = 1;
      cur = best_;
      for (int patience = p_.max_no_improvement; patience > 0;) {
        if (timed_out(out)) break;
        desperate_ = patience == 1;
        State last = cur;
        int r = chainlength_pass(cur);
        if (r < 0) cur = last;
        if (r <= 0) {
          --patience;
          improved_ = false;
        } else {
          patience = p_.max_no_improvement;
          improved_ = true;
        }
      }
    }
    return finish(out);
  }

 private:
  bool timed_out(EmbedOutcome& out) {
    if (Clock::now() < deadline_) return false;
    out.timed_out = true;
    return true;
  }

  std::optional<State> finish(EmbedOutcome& out) {
    std::size_t clean = 0;
    for (std::size_t x = 0; x < n_vars_; ++x) {
      const auto qs = best_.chain(x).qubits();
      if (!qs.empty() && std::all_of(qs.begin(), qs.end(), [this](std::size_t q) { return best_.fill(q) == 1; }))
        ++clean;
    }
    out.best_partial = std::max(out.best_partial, clean);
    if (!embedded_) return std::nullopt;
    return best_;
  }

  std::size_t randint(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  // Priority-first order: repeatedly take the unvisited program qubit with
  // the most already visited neighbours.
  std::vector<std::size_t> pfs_order() {
    std::vector<std::size_t> shuffled(n_vars_), key(n_vars_);
    std::iota(shuffled.begin(), shuffled.end(), 0);
    std::shuffle(shuffled.begin(), shuffled.end(), rng_);
    for (std::size_t i = 0; i < n_vars_; ++i) key[shuffled[i]] = i;
    std::vector<char> visited(n_vars_, 0);
    std::vector<std::size_t> order;
    order.reserve(n_vars_);
    using Item = std::tuple<std::ptrdiff_t, std::size_t, std::size_t>;
    for (auto start : shuffled) {
      if (visited[start]) continue;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
      pq.emplace(0, key[start], start);
      while (!pq.empty()) {
        auto [d, k, x] = pq.top();
        pq.pop();
        if (visited[x]) continue;
        visited[x] = 1;
        order.push_back(x);
        for (auto y : nbrs_[x]) {
          if (visited[y]) continue;
          std::ptrdiff_t seen = 0;
          for (auto w : nbrs_[y]) seen -= visited[w];
          pq.emplace(seen, key[y], y);
        }
      }
    }
    return order;
  }

  std::vector<std::size_t> shuffled_order() {
    std::vector<std::size_t> order(n_vars_);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng_);
    return order;
  }

  void populate_weights(int max_fill) {
    max_fill = std::min(63, max_fill);
    const double log2base = max_fill <= 0 ? 1.0 : headroom_ / max_fill;
    const double base = std::exp2(log2base);
    double power = 1.0;
    weights_.fill(kFar);
    for (int i = 0; i <= max_fill; ++i) {
      weights_[static_cast<std::size_t>(i)] = static_cast<Distance>(power);
      power *= base;
    }
  }

  Distance weight(int fill) const { return fill < 64 ? weights_[static_cast<std::size_t>(fill)] : kFar; }

  void distances_from_chain(const State& s, std::size_t v) {
    auto& parent = parents_[v];
    auto& dist = distances_[v];
    auto& visited = visited_[v];
    const auto& perm = perms_[v];
    std::fill(visited.begin(), visited.end(), 0);
    using Item = std::tuple<Distance, std::size_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (auto q : s.chain(v).qubits()) {
      pq.emplace(0, perm[q], q);
      parent[q] = npos;
      visited[q] = 1;
    }
    // Qubit weights sit on the node being entered, so the first pop to reach
    // a qubit already gives its shortest distance.
    while (!pq.empty()) {
      auto [d, rank, z] = pq.top();
      pq.pop();
      dist[z] = d;
      for (auto q : hw_.neighbors_of_index(z)) {
        if (visited[q]) continue;
        visited[q] = 1;
        if (s.fill(q) >= weight_bound_) {
          dist[q] = kFar;
        } else {
          parent[q] = z;
          pq.emplace(d + qubit_weight_[q], perm[q], q);
        }
      }
    }
  }

  void accumulate(const State& s, std::size_t v) {
    for (auto q : s.chain(v).qubits()) {
      const Distance w = qubit_weight_[q];
      if (total_[q] != kFar && w != kFar && s.fill(q) < weight_bound_ && w > 0)
        total_[q] += w;
      else
        total_[q] = kFar;
    }
    const auto& dist = distances_[v];
    const auto& visited = visited_[v];
    for (std::size_t q = 0; q < n_qubits_; ++q) {
      if (visited[q] && total_[q] != kFar && dist[q] != kFar && s.fill(q) < weight_bound_)
        total_[q] += dist[q];
      else
        total_[q] = kFar;
    }
  }

  void prepare_root_distances(const State& s, std::size_t u) {
    std::fill(total_.begin(), total_.end(), 0);
    populate_weights(s.max_fill());
    for (std::size_t q = 0; q < n_qubits_; ++q) qubit_weight_[q] = weight(s.fill(q));
    bool any = false;
    for (auto v : nbrs_[u]) {
      if (s.chain(v).size() == 0) continue;
      any = true;
      distances_from_chain(s, v);
      accumulate(s, v);
    }
    if (!any)
      for (std::size_t q = 0; q < n_qubits_; ++q)
        total_[q] = s.fill(q) >= weight_bound_ ? kFar : std::max(qubit_weight_[q], total_[q]);
  }

  // Grows the chain from root q0, joining each neighbour from the branch
  // point of the chain nearest to it.
  void construct_chain(State& s, std::size_t u, std::size_t q0) {
    Chain& cu = s.chain(u);
    cu.set_root(q0);
    for (auto v : nbrs_[u]) {
      if (s.chain(v).size() == 0) continue;
      const auto& dist = distances_[v];
      const auto& visited = visited_[v];
      std::size_t qv = q0;
      Distance dqv = visited[q0] ? dist[q0] : kFar;
      for (auto q : cu.qubits()) {
        if (cu.refcount(q) <= 1) continue;
        const Distance dq = visited[q] ? dist[q] : kFar;
        if (dq < dqv) {
          dqv = dq;
          qv = q;
        }
      }
      cu.link_path(s.chain(v), qv, parents_[v]);
    }
  }

  // Routes a new chain for the torn-out program qubit u.
  bool route(State& s, std::size_t u, std::size_t target) {
    auto& nb = nbrs_[u];
    if (nb.size() > 2) {
      const std::size_t i = randint(0, nb.size() - 2);
      std::swap(nb[i], nb[i + 1]);
    } else if (nb.size() == 2 && randint(0, 1)) {
      std::swap(nb[0], nb[1]);
    }
    if (!nb.empty()) perms_[u].swap(perms_[nb[randint(0, nb.size() - 1)]]);

    prepare_root_distances(s, u);
    const Distance best = *std::min_element(total_.begin(), total_.end());
    if (best == kFar) return false;
    std::vector<std::size_t> minima;
    for (std::size_t q = 0; q < n_qubits_; ++q)
      if (total_[q] == best) minima.push_back(q);
    construct_chain(s, u, minima[randint(0, minima.size() - 1)]);
    s.flip_back(u, src_, target);
    return true;
  }

  bool find_chain(State& s, std::size_t u) {
    if (embedded_ || desperate_) s.steal_all(u, src_);
    if (embedded_) {
      auto frozen = s.chain(u).freeze(s.chains());
      if (!route(s, u, target_chainsize_)) s.chain(u).thaw(s.chains(), frozen);
      return true;
    }
    s.tear_out(u, src_);
    return route(s, u, target_chainsize_);
  }

  bool initialize(State& s) {
    for (auto u : pfs_order())
      if (!find_chain(s, u)) return false;
    return true;
  }

  // Keeps s as the new best if its histogram is smaller, comparing from the
  // top bucket down.
  bool check_improvement(const State& s) {
    std::vector<std::size_t> stats;
    const bool disjoint = s.statistics(stats);
    bool better = false;
    if (disjoint && !embedded_) {
      embedded_ = true;
      better = true;
    }
    if (!disjoint && embedded_) return false;
    if (!better) {
      if (best_stats_.empty() || stats.size() < best_stats_.size()) {
        better = true;
      } else if (stats.size() == best_stats_.size()) {
        for (std::size_t i = stats.size(); i-- > 0;) {
          if (stats[i] == best_stats_[i]) continue;
          better = stats[i] < best_stats_[i];
          break;
        }
      }
    }
    if (better) {
      best_ = s;
      best_stats_ = std::move(stats);
      if (embedded_) target_chainsize_ = best_stats_.size() - 1;
    }
    return better;
  }

  int overfill_pass(State& s) {
    bool improved = false;
    for (auto u : pfs_order()) {
      if (!find_chain(s, u)) return -1;
      improved |= check_improvement(s);
      if (embedded_) break;
    }
    return improved ? 1 : 0;
  }

  // Re-routes each chain without letting it reach a higher fill than it has.
  int pushdown_pass(State& s) {
    const int old_bound = weight_bound_;
    bool improved = false;
    for (auto u : shuffled_order()) {
      if (pushback_ < static_cast<int>(n_vars_)) {
        s.steal_all(u, src_);
        int fill = 0;
        for (auto q : s.chain(u).qubits()) fill = std::max(fill, s.fill(q));
        weight_bound_ = fill;
        auto frozen = s.chain(u).freeze(s.chains());
        if (!route(s, u, 0)) {
          pushback_ += 3;
          s.chain(u).thaw(s.chains(), frozen);
          s.flip_back(u, src_, 0);
        }
      } else {
        weight_bound_ = old_bound;
        s.steal_all(u, src_);
        s.tear_out(u, src_);
        if (!route(s, u, 0)) {
          weight_bound_ = old_bound;
          return -1;
        }
      }
      improved |= check_improvement(s);
      if (embedded_) break;
    }
    weight_bound_ = old_bound;
    return improved ? 1 : 0;
  }

  int chainlength_pass(State& s) {
    bool improved = false;
    const auto order = improved_ && !last_order_.empty() ? last_order_ : pfs_order();
    last_order_ = order;
    for (auto u : order) {
      if (!find_chain(s, u)) return -1;
      improved |= check_improvement(s);
    }
    return improved ? 1 : 0;
  }

  const Graph& src_;
  const Graph& hw_;
  const EmbedderParams& p_;
  Clock::time_point deadline_;
  Rng rng_;
  std::size_t n_vars_;
  std::size_t n_qubits_;
  State best_;
  std::vector<std::size_t> best_stats_;
  std::vector<std::vector<std::size_t>> nbrs_;
  std::vector<std::vector<std::size_t>> perms_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<std::vector<Distance>> distances_;
  std::vector<std::vector<char>> visited_;
  std::vector<Distance> qubit_weight_;
  std::vector<Distance> total_;
  std::array<Distance, 64> weights_{};
  std::vector<std::size_t> last_order_;
  double headroom_ = 0.0;
  int default_bound_ = 0;
  int weight_bound_ = 0;
  int pushback_ = 0;
  std::size_t target_chainsize_ = 0;
  bool embedded_ = false;
  bool desperate_ = false;
  bool improved_ = false;
};

}  // namespace

EmbedOutcome find_embedding(const Graph& source, const HardwareGraph& hw, const EmbedderParams& p) {
  p.validate();
  if (source.num_nodes() == 0) throw InvalidArgument("cannot embed an empty source graph");

  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(p.timeout_seconds));
  EmbedOutcome out;
  if (source.num_nodes() <= hw.num_nodes() && hw.num_nodes() > 0) {
    Pathfinder search(source, hw, p, deadline);
    if (auto state = search.run(out)) {
      Embedding e;
      for (std::size_t x = 0; x < source.num_nodes(); ++x) {
        std::vector<QubitId> chain;
        for (auto q : state->chain(x).qubits()) chain.push_back(hw.nodes()[q]);
        std::sort(chain.begin(), chain.end());
        e.chains.emplace(source.nodes()[x], std::move(chain));
      }
      if (validate(e, source, hw).empty()) {
        out.embedding = std::move(e);
        out.best_partial = source.num_nodes();
      }
    }
  }
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::missing_chain: return "missing_chain";
    case ViolationKind::empty_chain: return "empty_chain";
    case ViolationKind::unknown_program_qubit: return "unknown_program_qubit";
    case ViolationKind::unknown_physical_qubit: return "unknown_physical_qubit";
    case ViolationKind::overlap: return "overlap";
    case ViolationKind::disconnected_chain: return "disconnected_chain";
    case ViolationKind::missing_coupler: return "missing_coupler";
  }
  return "unknown";
}

std::vector<Violation> validate(const Embedding& e, const Graph& source, const HardwareGraph& hw) {
  std::vector<Violation> out;
  auto add = [&out](ViolationKind k, QubitId prog, QubitId other, QubitId phys, std::string msg) {
    out.push_back(Violation{k, prog, other, phys, std::move(msg)});
  };

  for (const auto& [prog, chain] : e.chains)
    if (!source.contains(prog))
      add(ViolationKind::unknown_program_qubit, prog, 0, 0,
          "chain for program qubit " + std::to_string(prog) + " not in source graph");

  std::map<QubitId, QubitId> owner;
  for (QubitId prog : source.nodes()) {
    auto it = e.chains.find(prog);
    if (it == e.chains.end()) {
      add(ViolationKind::missing_chain, prog, 0, 0, "program qubit " + std::to_string(prog) + " has no chain");
      continue;
    }
    const auto& chain = it->second;
    if (chain.empty()) {
      add(ViolationKind::empty_chain, prog, 0, 0, "program qubit " + std::to_string(prog) + " has an empty chain");
      continue;
    }
    bool all_known = true;
    for (QubitId phys : chain) {
      if (!hw.contains(phys)) {
        all_known = false;
        add(ViolationKind::unknown_physical_qubit, prog, 0, phys,
            "physical qubit " + std::to_string(phys) + " not in hardware graph");
        continue;
      }
      auto [o, fresh] = owner.emplace(phys, prog);
      if (!fresh)
        add(ViolationKind::overlap, o->second, prog, phys,
            "physical qubit " + std::to_string(phys) + " shared by program qubits " +
                std::to_string(o->second) + " and " + std::to_string(prog));
    }
    if (!all_known) continue;

    // Connectivity of the induced subgraph.
    std::set<QubitId> members(chain.begin(), chain.end());
    std::set<QubitId> seen{chain.front()};
    std::vector<QubitId> stack{chain.front()};
    while (!stack.empty()) {
      QubitId u = stack.back();
      stack.pop_back();
      for (QubitId v : hw.neighbors(u))
        if (members.count(v) && seen.insert(v).second) stack.push_back(v);
    }
    if (seen.size() != members.size()) {
      for (QubitId phys : members)
        if (!seen.count(phys)) {
          add(ViolationKind::disconnected_chain, prog, 0, phys,
              "chain of program qubit " + std::to_string(prog) + " is disconnected at physical qubit " +
                  std::to_string(phys));
          break;
        }
    }
  }

  for (const auto& [a, b] : source.edges()) {
    auto ia = e.chains.find(a), ib = e.chains.find(b);
    if (ia == e.chains.end() || ib == e.chains.end()) continue;
    bool joined = false;
    for (QubitId u : ia->second) {
      if (!hw.contains(u)) continue;
      for (QubitId v : hw.neighbors(u))
        if (std::binary_search(ib->second.begin(), ib->second.end(), v)) {
          joined = true;
          break;
        }
      if (joined) break;
    }
    if (!joined)
      add(ViolationKind::missing_coupler, a, b, 0,
          "no coupler between chains of program qubits " + std::to_string(a) + " and " + std::to_string(b));
  }
  return out;
}

EmbeddingMetrics metrics(const Embedding& e, const HardwareGraph& hw, double embed_time) {
  EmbeddingMetrics m;
  m.embed_time = embed_time;
  if (e.chains.empty()) {
    m.unused_qubits = hw.num_nodes();
    return m;
  }
  double sum = 0.0;
  for (const auto& [prog, chain] : e.chains) {
    sum += static_cast<double>(chain.size());
    m.used_qubits += chain.size();
    m.max_chain_len = std::max(m.max_chain_len, chain.size());
  }
  const double count = static_cast<double>(e.chains.size());
  m.avg_chain_len = sum / count;
  double var = 0.0;
  for (const auto& [prog, chain] : e.chains) {
    double d = static_cast<double>(chain.size()) - m.avg_chain_len;
    var += d * d;
  }
  m.chain_len_variance = var / count;
  m.unused_qubits = hw.num_nodes() >= m.used_qubits ? hw.num_nodes() - m.used_qubits : 0;
  return m;
}

}  // namespace chainskip
