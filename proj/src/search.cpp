#include "cws/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "cws/error.hpp"

namespace cws {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Code assemble(int n, const std::vector<Word>& words) {
  std::vector<BitString> out;
  out.reserve(words.size());
  for (Word w : words) out.emplace_back(n, w);
  return Code(n, std::move(out));
}

// One representative per coset, cosets in span order.
SelectionResult select_all(const CosetFamily& family, const ErrorModel& em,
                           std::uint64_t budget) {
  const std::size_t k = family.coset_count();
  std::vector<Word> chosen(k, 0);
  std::vector<int> slot(k, 0);
  SelectionResult result;
  std::size_t depth = 1;
  while (depth < k) {
    if (slot[depth] == 4) {
      slot[depth] = 0;
      --depth;
      if (depth == 0) return result;
      ++slot[depth];
      continue;
    }
    if (result.nodes >= budget) return result;
    ++result.nodes;
    const Word cand =
        family.base_span[depth].word() ^ family.offsets[static_cast<std::size_t>(slot[depth])];
    bool ok = true;
    for (std::size_t j = 0; j < depth; ++j) {
      if (em.contains(cand ^ chosen[j])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      chosen[depth++] = cand;
    } else {
      ++slot[depth];
    }
  }
  result.code = assemble(family.n, chosen);
  return result;
}

// Branch and bound over (coset, member) vertices for target_k < coset count.
// Live strings are those compatible with every chosen word; a coset is
// decided once a member is picked from it or it is skipped.
class SubsetSelector {
 public:
  SubsetSelector(const CosetFamily& family, const ErrorModel& em, std::size_t target,
                 std::uint64_t budget)
      : family_(family),
        errors_(em.distinct_strings()),
        target_(target),
        budget_(budget),
        alive_(std::size_t{1} << family.n, 1),
        coset_of_(std::size_t{1} << family.n, 0),
        live_count_(family.coset_count(), 4),
        decided_(family.coset_count(), 0),
        pick_(family.coset_count(), kNone) {
    for (std::size_t c = 0; c < family.coset_count(); ++c) {
      for (int s = 0; s < 4; ++s) coset_of_[family.member(c, s).word()] = static_cast<std::uint32_t>(c);
    }
  }

  SelectionResult run() {
    SelectionResult result;
    choose(0, 0);
    decided_[0] = 1;
    if (dfs(1)) {
      std::vector<Word> words;
      for (Word w : pick_) {
        if (w != kNone) words.push_back(w);
      }
      result.code = assemble(family_.n, words);
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  static constexpr Word kNone = ~Word{0};

  void kill(Word x) {
    if (!alive_[x]) return;
    alive_[x] = 0;
    --live_count_[coset_of_[x]];
    trail_.push_back(x);
  }

  void choose(std::size_t coset, Word x) {
    pick_[coset] = x;
    kill(x);
    for (Word d : errors_) kill(x ^ d);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const Word x = trail_.back();
      trail_.pop_back();
      alive_[x] = 1;
      ++live_count_[coset_of_[x]];
    }
  }

  int degree(Word x) const {
    int d = 0;
    for (Word e : errors_) d += alive_[x ^ e];
    return d;
  }

  bool dfs(std::size_t size) {
    if (size == target_) return true;
    std::size_t live = 0;
    std::size_t best = kNoCoset;
    for (std::size_t c = 0; c < live_count_.size(); ++c) {
      if (decided_[c] || live_count_[c] == 0) continue;
      ++live;
      if (best == kNoCoset || live_count_[c] < live_count_[best]) best = c;
    }
    if (size + live < target_) return false;

    std::array<std::pair<int, Word>, 4> cands;
    std::size_t count = 0;
    for (int s = 0; s < 4; ++s) {
      const Word x = family_.member(best, s).word();
      if (alive_[x]) cands[count++] = {degree(x), x};
    }
    std::stable_sort(cands.begin(), cands.begin() + static_cast<std::ptrdiff_t>(count),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    decided_[best] = 1;
    for (std::size_t i = 0; i < count; ++i) {
      if (nodes_ >= budget_) {
        decided_[best] = 0;
        return false;
      }
      ++nodes_;
      const std::size_t mark = trail_.size();
      choose(best, cands[i].second);
      if (dfs(size + 1)) return true;
      undo_to(mark);
      pick_[best] = kNone;
    }
    if (size + live - 1 >= target_ && nodes_ < budget_) {
      ++nodes_;
      if (dfs(size)) return true;
    }
    decided_[best] = 0;
    return false;
  }

  static constexpr std::size_t kNoCoset = ~std::size_t{0};

  const CosetFamily& family_;
  const std::vector<Word>& errors_;
  std::size_t target_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint8_t> alive_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<int> live_count_;
  std::vector<std::uint8_t> decided_;
  std::vector<Word> pick_;
  std::vector<Word> trail_;
};

}  // namespace

std::uint64_t derive_attempt_seed(std::uint64_t master_seed, std::uint64_t index) {
  return splitmix64(splitmix64(master_seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

std::optional<CosetFamily> build_cosets(const Basis& basis, const QubitOneSubspace& v1) {
  if (v1.cardinality != 4) return std::nullopt;
  for (int i = 1; i < 4; ++i) {
    if (in_span(basis, v1.elements[static_cast<std::size_t>(i)])) return std::nullopt;
  }
  CosetFamily family;
  family.n = basis.length();
  family.base_span = span(basis);
  family.offsets = {Word{0}, v1.x_offset().word(), v1.z_offset().word(), v1.y_offset().word()};
  return family;
}

SelectionResult select_representatives(const CosetFamily& family, const ErrorModel& em,
                                       std::size_t target_k, std::uint64_t node_budget) {
  if (family.n != em.size()) throw_invalid("select_representatives: length mismatch");
  if (target_k < 1 || target_k > family.coset_count()) {
    throw_invalid("select_representatives: target " + std::to_string(target_k) +
                  " exceeds coset count " + std::to_string(family.coset_count()));
  }
  if (target_k == 1) return {Code(family.n, {BitString::zeros(family.n)}), 0};
  if (target_k == family.coset_count()) return select_all(family, em, node_budget);
  return SubsetSelector(family, em, target_k, node_budget).run();
}

AttemptResult attempt(const ErrorModel& em, const QubitOneSubspace& v1, std::mt19937_64& rng,
                      std::size_t target_k, std::uint64_t node_budget) {
  const int n = em.size();
  AttemptResult out;
  const Basis basis = random_basis(n, n - 2, rng);
  const auto family = build_cosets(basis, v1);
  if (!family) return out;
  out.disjoint = true;
  auto sel = select_representatives(*family, em, target_k, node_budget);
  out.code = std::move(sel.code);
  out.nodes = sel.nodes;
  return out;
}

std::uint64_t default_node_budget(int n, std::uint64_t target_k) {
  const std::uint64_t cosets = std::uint64_t{1} << (n - 2);
  if (target_k >= cosets) return 4 * cosets;
  return 64 * cosets;
}

SearchResult search(const Graph& graph, const SearchConfig& config) {
  const int n = graph.size();
  if (n < 2) throw_invalid("search needs at least 2 qubits");
  const ErrorModel em(graph);
  const QubitOneSubspace v1 = qubit1_subspace(em);
  if (v1.cardinality != 4) throw_invalid("qubit-1 subspace is degenerate for this graph");

  const std::uint64_t cosets = std::uint64_t{1} << (n - 2);
  SearchResult result;
  result.target_k = config.target_k.value_or(std::min(rains_kmax(n), cosets));
  if (result.target_k < 1 || result.target_k > cosets) {
    throw_invalid("target_k must be in 1.." + std::to_string(cosets));
  }
  if (config.max_attempts < 1) throw_invalid("max_attempts must be at least 1");
  result.node_budget = config.per_attempt_node_budget != 0
                           ? config.per_attempt_node_budget
                           : default_node_budget(n, result.target_k);

  const auto t0 = std::chrono::steady_clock::now();
  const unsigned workers = std::max(1U, config.worker_count);
  const std::uint64_t batch = 256 * std::uint64_t{workers};
  std::vector<AttemptResult> slots;
  std::uint64_t next_report = config.progress_interval;

  for (std::uint64_t start = 0; start < config.max_attempts; start += batch) {
    const std::uint64_t size = std::min(batch, config.max_attempts - start);
    slots.assign(size, AttemptResult{});
    std::atomic<std::uint64_t> cursor{0};
    std::atomic<std::uint64_t> best{size};

    auto work = [&] {
      for (;;) {
        const std::uint64_t i = cursor.fetch_add(1);
        if (i >= size || i > best.load()) return;
        std::mt19937_64 rng(derive_attempt_seed(config.master_seed, start + i));
        slots[i] = attempt(em, v1, rng, result.target_k, result.node_budget);
        if (slots[i].code) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    }

    const std::uint64_t stop = std::min(best.load() + 1, size);
    for (std::uint64_t i = 0; i < stop; ++i) {
      result.disjointness_passes += slots[i].disjoint ? 1 : 0;
      result.nodes_explored += slots[i].nodes;
    }
    result.attempts_used = start + stop;
    // Reported per batch, so the callback sees at most one call per batch.
    if (config.progress && config.progress_interval != 0 && result.attempts_used >= next_report) {
      config.progress({result.attempts_used, result.disjointness_passes});
      while (next_report <= result.attempts_used) next_report += config.progress_interval;
    }
    if (best.load() < size) {
      result.code = std::move(slots[best.load()].code);
      break;
    }
  }
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace cws
