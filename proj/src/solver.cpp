#include "rubikred/solver.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <unordered_map>

#include "rubikred/errors.hpp"

namespace rubikred {

std::string_view to_string(Decision decision) {
  switch (decision) {
    case Decision::Yes:
      return "yes";
    case Decision::No:
      return "no";
    case Decision::CapacityExceeded:
      return "capacity-exceeded";
  }
  return "";
}

bool pair_allowed(const Move& prev, const Move& next, Metric metric) {
  if (prev.axis != next.axis) return true;
  if (prev.index != next.index) return prev.index < next.index;
  return metric == Metric::Sqtm && prev.rotation == Rotation::Cw && next.rotation == Rotation::Cw;
}

bool triple_allowed(const Move& a, const Move& b, const Move& c, Metric metric) {
  (void)metric;
  return !(same_slice(a, b) && same_slice(b, c));
}

namespace {

struct CapacityHit {};

using Path = std::vector<std::uint16_t>;

template <typename Label>
class Engine {
 public:
  Engine(const Puzzle& puzzle, Metric metric, std::vector<Label> start, std::vector<Label> goal,
         bool recolor, const SearchBudget& budget)
      : metric_(metric),
        budget_(budget),
        recolor_(recolor),
        moves_(enumerate_moves(puzzle.kind(), puzzle.side(), metric)),
        start_(std::move(start)),
        goal_(std::move(goal)) {
    actions_.reserve(moves_.size());
    for (const Move& mv : moves_) actions_.push_back(move_action(puzzle, mv));
    inverse_.reserve(moves_.size());
    for (const Move& mv : moves_) {
      const auto it = std::find(moves_.begin(), moves_.end(), inverse_move(mv));
      inverse_.push_back(static_cast<std::size_t>(it - moves_.begin()));
    }
    encode(goal_, goal_key_);
  }

  SearchResult run() {
    SearchResult result;
    try {
      const std::optional<Path> found =
          budget_.strategy == Strategy::Unidirectional ? unidirectional() : bidirectional();
      if (found) {
        result.status = SearchStatus::Solved;
        for (std::uint16_t k : *found) result.moves.push_back(moves_[k]);
      } else {
        result.status = SearchStatus::NoSolution;
      }
    } catch (const CapacityHit&) {
      result.status = SearchStatus::CapacityExceeded;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  void bump() {
    if (++nodes_ > budget_.node_limit) throw CapacityHit{};
  }

  void apply(std::vector<Label>& state, std::size_t k) {
    bump();
    actions_[k].apply(std::span<Label>(state), scratch_);
  }

  void revert(std::vector<Label>& state, std::size_t k) {
    actions_[inverse_[k]].apply(std::span<Label>(state), scratch_);
  }

  // Byte key; colourings are renamed by first occurrence so that every
  // recolouring of a state shares one key.
  void encode(const std::vector<Label>& state, std::string& out) const {
    if (recolor_) {
      std::array<std::uint8_t, 256> rename;
      rename.fill(0xFF);
      std::uint8_t next = 0;
      out.resize(state.size());
      for (std::size_t i = 0; i < state.size(); ++i) {
        auto& r = rename[static_cast<std::uint8_t>(state[i])];
        if (r == 0xFF) r = next++;
        out[i] = static_cast<char>(r);
      }
    } else {
      out.resize(state.size() * sizeof(Label));
      std::memcpy(out.data(), state.data(), out.size());
    }
  }

  bool allowed(int prev2, int prev, std::size_t next) const {
    if (!budget_.prune || prev < 0) return true;
    if (!pair_allowed(moves_[prev], moves_[next], metric_)) return false;
    return prev2 < 0 || triple_allowed(moves_[prev2], moves_[prev], moves_[next], metric_);
  }

  bool at_goal(const std::vector<Label>& state) {
    if (!recolor_) return state == goal_;
    encode(state, key_);
    return key_ == goal_key_;
  }

  // Iterative deepening; moves are tried in Move order, so the first hit
  // at the first successful depth is the lexicographically least.
  std::optional<Path> unidirectional() {
    for (int d = 0; d <= budget_.max_depth; ++d) {
      state_ = start_;
      path_.clear();
      if (dfs(d, -1, -1)) return path_;
    }
    return std::nullopt;
  }

  bool dfs(int remaining, int prev2, int prev) {
    if (remaining == 0) return at_goal(state_);
    for (std::size_t k = 0; k < moves_.size(); ++k) {
      if (!allowed(prev2, prev, k)) continue;
      apply(state_, k);
      path_.push_back(static_cast<std::uint16_t>(k));
      if (dfs(remaining - 1, prev, static_cast<int>(k))) return true;
      path_.pop_back();
      revert(state_, k);
    }
    return false;
  }

  // Depth d splits into a forward prefix of ceil(d/2) moves from the start
  // and a backward suffix of floor(d/2) inverse moves from the goal.
  std::optional<Path> bidirectional() {
    for (int d = 0; d <= budget_.max_depth; ++d) {
      const int f = (d + 1) / 2;
      build_forward(f);
      best_.reset();
      back_ = goal_;
      suffix_.clear();
      backward(d - f, -1, -1);
      if (best_) return best_;
    }
    return std::nullopt;
  }

  void build_forward(int f) {
    if (forward_depth_ == f) return;
    forward_.clear();
    forward_depth_ = -1;
    state_ = start_;
    path_.clear();
    forward_dfs(f, -1, -1);
    forward_depth_ = f;
  }

  void forward_dfs(int remaining, int prev2, int prev) {
    if (remaining == 0) {
      encode(state_, key_);
      forward_.try_emplace(key_, path_);
      return;
    }
    for (std::size_t k = 0; k < moves_.size(); ++k) {
      if (!allowed(prev2, prev, k)) continue;
      apply(state_, k);
      path_.push_back(static_cast<std::uint16_t>(k));
      forward_dfs(remaining - 1, prev, static_cast<int>(k));
      path_.pop_back();
      revert(state_, k);
    }
  }

  // suffix_ holds the suffix reversed: suffix_.back() is its first move.
  void backward(int remaining, int first, int second) {
    if (remaining == 0) {
      encode(back_, key_);
      const auto it = forward_.find(key_);
      if (it == forward_.end()) return;
      Path candidate = it->second;
      candidate.insert(candidate.end(), suffix_.rbegin(), suffix_.rend());
      if (!best_ || candidate < *best_) best_ = std::move(candidate);
      return;
    }
    for (std::size_t k = 0; k < moves_.size(); ++k) {
      if (budget_.prune && first >= 0) {
        if (!pair_allowed(moves_[k], moves_[first], metric_)) continue;
        if (second >= 0 && !triple_allowed(moves_[k], moves_[first], moves_[second], metric_)) {
          continue;
        }
      }
      apply(back_, inverse_[k]);
      suffix_.push_back(static_cast<std::uint16_t>(k));
      backward(remaining - 1, static_cast<int>(k), first);
      suffix_.pop_back();
      revert(back_, inverse_[k]);
    }
  }

  Metric metric_;
  SearchBudget budget_;
  bool recolor_;
  std::vector<Move> moves_;
  std::vector<MoveAction> actions_;
  std::vector<std::size_t> inverse_;
  std::vector<Label> start_;
  std::vector<Label> goal_;
  std::string goal_key_;

  std::uint64_t nodes_ = 0;
  std::vector<Label> state_;
  std::vector<Label> back_;
  std::vector<Label> scratch_;
  std::string key_;
  Path path_;
  Path suffix_;
  std::optional<Path> best_;
  std::unordered_map<std::string, Path> forward_;
  int forward_depth_ = -1;
};

void check_budget(const Puzzle& puzzle, Metric metric, const SearchBudget& budget) {
  if (!metric_fits(puzzle.kind(), metric)) {
    throw InvalidArgument("metric " + std::string(to_string(metric)) + " does not fit a " +
                          std::string(to_string(puzzle.kind())));
  }
  if (budget.max_depth < 0) throw InvalidArgument("max_depth must be nonnegative");
  if (budget.node_limit == 0) throw InvalidArgument("node_limit must be positive");
}

template <typename Label>
SearchResult run_group(const StickerPermutation& t, Metric metric, const SearchBudget& budget) {
  const Puzzle& puzzle = t.puzzle();
  const std::size_t n = puzzle.sticker_count();
  std::vector<Label> start(n);
  std::vector<Label> goal(n);
  for (std::size_t i = 0; i < n; ++i) {
    start[t(static_cast<std::uint32_t>(i))] = static_cast<Label>(i);
    goal[i] = static_cast<Label>(i);
  }
  return Engine<Label>(puzzle, metric, std::move(start), std::move(goal), false, budget).run();
}

}  // namespace

SearchResult solve_optimal(const PuzzleConfig& start, Metric metric, const SearchBudget& budget) {
  const Puzzle& puzzle = start.puzzle();
  check_budget(puzzle, metric, budget);
  std::vector<std::uint8_t> labels;
  labels.reserve(start.colors().size());
  for (Color c : start.colors()) labels.push_back(static_cast<std::uint8_t>(c));
  const PuzzleConfig solved = make_solved(puzzle.kind(), puzzle.side());
  std::vector<std::uint8_t> goal;
  for (Color c : solved.colors()) goal.push_back(static_cast<std::uint8_t>(c));
  return Engine<std::uint8_t>(puzzle, metric, std::move(labels), std::move(goal), true, budget)
      .run();
}

SearchResult solve_optimal(const StickerPermutation& start, Metric metric,
                           const SearchBudget& budget) {
  check_budget(start.puzzle(), metric, budget);
  if (start.puzzle().sticker_count() <= 0x10000) return run_group<std::uint16_t>(start, metric, budget);
  return run_group<std::uint32_t>(start, metric, budget);
}

SearchResult solve_instance(const ReducedInstance& ri, SearchBudget budget) {
  budget.max_depth = ri.budget;
  if (ri.group) {
    if (!ri.transformation) throw InvalidArgument("group instance carries no transformation");
    return solve_optimal(*ri.transformation, ri.metric(), budget);
  }
  if (!ri.configuration) throw InvalidArgument("instance carries no configuration");
  return solve_optimal(*ri.configuration, ri.metric(), budget);
}

Decision decide(const ReducedInstance& ri, SearchBudget budget) {
  switch (solve_instance(ri, budget).status) {
    case SearchStatus::Solved:
      return Decision::Yes;
    case SearchStatus::NoSolution:
      return Decision::No;
    case SearchStatus::CapacityExceeded:
      return Decision::CapacityExceeded;
  }
  return Decision::CapacityExceeded;
}

}  // namespace rubikred
