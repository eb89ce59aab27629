#pragma once

// Breadth-first and beam search over double-braid words on the dense qubit.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

#include "su2k/braid/qubit.hpp"
#include "su2k/synth/su2.hpp"

namespace su2k {

struct SearchConfig {
  int k = 3;
  /// Empty means s1^2, s1^-2, s2^2, s2^-2.
  std::vector<BraidWord> generators;
  int max_depth = 10;
  /// 0 keeps every new gate (exhaustive); otherwise the beam_width gates closest to the target.
  std::size_t beam_width = 0;
  /// Search stops once the best error is at most epsilon.
  double epsilon = 1e-10;
  /// Grid resolution for identifying gates.
  double delta = 1e-6;
  /// Cap on stored gates; exceeding it ends the search with a partial result.
  std::size_t max_states = 5'000'000;

  static std::vector<BraidWord> default_generators() {
    return {BraidWord{{1, 2}}, BraidWord{{1, -2}}, BraidWord{{2, 2}}, BraidWord{{2, -2}}};
  }

  const std::vector<BraidWord>& generator_words() const {
    static const std::vector<BraidWord> defaults = default_generators();
    return generators.empty() ? defaults : generators;
  }

  void validate() const {
    if (k < 2) throw DomainError("synthesis needs k >= 2, got k=" + std::to_string(k));
    if (max_depth < 1) throw DomainError("max_depth must be >= 1");
    if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
    if (!(delta > 0)) throw DomainError("delta must be positive");
    if (max_states < 1) throw DomainError("max_states must be positive");
    for (const auto& g : generator_words()) {
      if (g.empty()) throw DomainError("empty generator word");
      if (!g.is_double_braid()) throw DomainError("generator '" + g.to_string() + "' is not a double braid");
      if (g.max_generator() > 2) throw DomainError("generator '" + g.to_string() + "' uses more than s1, s2");
    }
  }
};

struct DepthRow {
  int depth = 0;
  /// Products formed up to this depth.
  std::size_t explored = 0;
  /// Distinct gates stored up to this depth.
  std::size_t distinct = 0;
  double best_error = 1;
  BraidWord best_word;
};

struct SynthResult {
  std::vector<DepthRow> rows;
  std::size_t explored = 0;
  double seconds = 0;
  /// max_states was reached before max_depth.
  bool partial = false;
  /// Exhaustive search found no new gate at some depth: the reachable set is finite.
  bool closed = false;
};

namespace detail {

struct GridKey {
  std::array<std::int64_t, 4> v;
  friend bool operator==(const GridKey&, const GridKey&) = default;
};

struct GridKeyHash {
  std::size_t operator()(const GridKey& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : k.v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Grid cell of u up to sign: the first nonzero coordinate is made positive.
inline GridKey grid_key(const SU2& u, double delta) {
  GridKey key{{std::llround(u.a / delta), std::llround(u.b / delta), std::llround(u.c / delta), std::llround(u.d / delta)}};
  for (auto x : key.v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : key.v) y = -y;
    break;
  }
  return key;
}

}  // namespace detail

/// Gates reachable by products of the generators, grown one depth at a time with grid deduplication.
class GateTree {
 public:
  struct Node {
    SU2 gate;
    std::uint32_t parent;
    std::uint32_t generator;
  };

  explicit GateTree(const SearchConfig& config) : config_(config) {
    config_.validate();
    const BraidRepresentation<double> rep(dense_qubit_basis(Level(config_.k)));
    for (const auto& w : config_.generator_words()) generators_.push_back(SU2::from_matrix(rep.evaluate(w), 1e-9));
    nodes_.push_back({SU2::identity(), 0, 0});
    seen_.insert(detail::grid_key(nodes_[0].gate, config_.delta));
    layer_start_ = {0, 1};
  }

  int depth() const { return static_cast<int>(layer_start_.size()) - 2; }
  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t layer_begin(int d) const { return layer_start_[static_cast<std::size_t>(d)]; }
  std::size_t layer_end(int d) const { return layer_start_[static_cast<std::size_t>(d) + 1]; }
  std::size_t explored() const { return explored_; }
  bool partial() const { return partial_; }
  bool closed() const { return closed_; }

  /// Adds the next depth. Returns false when nothing more can be added (closed or capped).
  bool grow(const SU2* beam_target = nullptr) {
    if (partial_ || closed_) return false;
    const int d = depth();
    const std::size_t begin = layer_begin(d), end = layer_end(d);
    for (std::size_t i = begin; i < end && !partial_; ++i) {
      for (std::size_t g = 0; g < generators_.size(); ++g) {
        ++explored_;
        const SU2 next = nodes_[i].gate * generators_[g];
        if (!seen_.insert(detail::grid_key(next, config_.delta)).second) continue;
        nodes_.push_back({next, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(g)});
        if (nodes_.size() >= config_.max_states) {
          partial_ = true;
          break;
        }
      }
    }
    if (config_.beam_width > 0 && beam_target && nodes_.size() - end > config_.beam_width) {
      std::vector<std::pair<double, std::size_t>> order;
      for (std::size_t i = end; i < nodes_.size(); ++i) order.emplace_back(projective_distance(nodes_[i].gate, *beam_target), i);
      std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      order.resize(config_.beam_width);
      std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
      std::vector<Node> kept;
      for (const auto& o : order) kept.push_back(nodes_[o.second]);
      nodes_.resize(end);
      nodes_.insert(nodes_.end(), kept.begin(), kept.end());
    }
    layer_start_.push_back(nodes_.size());
    if (nodes_.size() == end && config_.beam_width == 0 && !partial_) closed_ = true;
    return true;
  }

  BraidWord word(std::size_t index) const {
    std::vector<std::uint32_t> gens;
    for (std::size_t i = index; i != 0; i = nodes_[i].parent) gens.push_back(nodes_[i].generator);
    BraidWord out;
    for (auto it = gens.rbegin(); it != gens.rend(); ++it)
      for (const auto& l : config_.generator_words()[*it].letters()) out.append(l.generator, l.exponent);
    return out;
  }

 private:
  SearchConfig config_;
  std::vector<SU2> generators_;
  std::vector<Node> nodes_;
  std::unordered_set<detail::GridKey, detail::GridKeyHash> seen_;
  std::vector<std::size_t> layer_start_;
  std::size_t explored_ = 0;
  bool partial_ = false;
  bool closed_ = false;
};

namespace detail {

inline constexpr double kImprovement = 1e-14;

/// Best gate among one layer of the tree, folded into the running best.
inline void scan_layer(const GateTree& tree, int d, const SU2& target, double& best, std::size_t& best_index) {
  for (std::size_t i = tree.layer_begin(d); i < tree.layer_end(d); ++i) {
    const double e = projective_distance(tree.nodes()[i].gate, target);
    if (e < best - kImprovement) {
      best = e;
      best_index = i;
    }
  }
}

}  // namespace detail

/// Best double-braid word per depth for one target (unitary, any global phase).
inline SynthResult synthesize(const SearchConfig& config, const CMatrixD& target) {
  const auto start = std::chrono::steady_clock::now();
  const SU2 t = SU2::from_matrix(target);
  GateTree tree(config);
  SynthResult out;
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_index = 0;
  auto record = [&](int d) {
    detail::scan_layer(tree, d, t, best, best_index);
    out.rows.push_back({d, tree.explored(), tree.layer_end(d), best, tree.word(best_index)});
  };
  record(0);
  while (tree.depth() < config.max_depth && best > config.epsilon) {
    if (!tree.grow(&t)) break;
    record(tree.depth());
  }
  out.explored = tree.explored();
  out.partial = tree.partial();
  out.closed = tree.closed();
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

struct ProfileRow {
  int depth = 0;
  std::size_t explored = 0;
  std::size_t distinct = 0;
  double min_error = 0;
  double mean_error = 0;
  double max_error = 0;
};

struct ErrorProfile {
  int k = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<ProfileRow> rows;
  bool partial = false;
  bool closed = false;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// Per-depth statistics of the best error over `samples` Haar-random targets drawn with `seed`.
/// Exhaustive mode shares one tree among all targets; beam mode grows one tree per target and
/// sums explored and distinct counts over targets.
inline ErrorProfile error_profile(const SearchConfig& config, std::size_t samples, std::uint64_t seed = kDefaultSeed) {
  if (samples < 1) throw DomainError("error_profile needs at least one sample");
  config.validate();
  std::mt19937_64 rng(seed);
  std::vector<SU2> targets;
  for (std::size_t s = 0; s < samples; ++s) targets.push_back(haar_random_su2(rng));

  ErrorProfile out;
  out.k = config.k;
  out.samples = samples;
  out.seed = seed;
  const std::size_t depths = static_cast<std::size_t>(config.max_depth) + 1;
  std::vector<std::vector<double>> errors(depths, std::vector<double>(samples, 1.0));
  std::vector<std::size_t> explored(depths, 0), distinct(depths, 0);

  auto run = [&](GateTree& tree, const std::vector<std::size_t>& which, bool beam) {
    std::vector<double> best(which.size(), std::numeric_limits<double>::infinity());
    std::vector<std::size_t> index(which.size(), 0);
    for (int d = 0; d <= config.max_depth; ++d) {
      if (d > 0) tree.grow(beam ? &targets[which[0]] : nullptr);
      const int layer = std::min(d, tree.depth());
      for (std::size_t j = 0; j < which.size(); ++j) {
        if (layer == d) detail::scan_layer(tree, d, targets[which[j]], best[j], index[j]);
        errors[static_cast<std::size_t>(d)][which[j]] = best[j];
      }
      explored[static_cast<std::size_t>(d)] += tree.explored();
      distinct[static_cast<std::size_t>(d)] += tree.layer_end(layer);
    }
    out.partial = out.partial || tree.partial();
    out.closed = out.closed || tree.closed();
  };

  if (config.beam_width == 0) {
    GateTree tree(config);
    std::vector<std::size_t> all(samples);
    std::iota(all.begin(), all.end(), 0);
    run(tree, all, false);
  } else {
    for (std::size_t s = 0; s < samples; ++s) {
      GateTree tree(config);
      run(tree, {s}, true);
    }
  }
  for (std::size_t d = 0; d < depths; ++d) {
    const auto& e = errors[d];
    ProfileRow row;
    row.depth = static_cast<int>(d);
    row.explored = explored[d];
    row.distinct = distinct[d];
    row.min_error = *std::min_element(e.begin(), e.end());
    row.max_error = *std::max_element(e.begin(), e.end());
    row.mean_error = std::accumulate(e.begin(), e.end(), 0.0) / static_cast<double>(e.size());
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace su2k
