#pragma once

// Seeded property suites. Every module registers its checks here; the CLI and the
// acceptance tests run them through the same entry points.
//
// Randomness: one 64-bit seed per run. A suite named S draws from
//   mt19937_64(splitmix64(seed ^ fnv1a64(S)))
// so adding or reordering suites never perturbs an existing stream.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace fgaut::verify {

enum class Verdict { pass, fail, inconclusive };
const char* to_string(Verdict v);

struct SuiteParams {
  std::uint64_t seed = 0;
  std::optional<std::size_t> rank;    // --n
  std::optional<std::size_t> length;  // --L
  std::optional<std::size_t> depth;   // --depth
};

struct SuiteReport {
  std::string suite;
  std::string anchor;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  Verdict verdict = Verdict::pass;
  std::optional<std::string> counterexample;
  double elapsed_ms = 0;

  /// One JSON object on a single line; elapsed_ms only when `timing` is set.
  std::string to_json(bool timing = false) const;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view text);

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  static Rng for_suite(std::uint64_t seed, std::string_view suite) {
    return Rng(splitmix64(seed ^ fnv1a64(suite)));
  }
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n) by rejection; identical on every platform.
  std::size_t below(std::size_t n);
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1))); }

private:
  std::mt19937_64 engine_;
};

struct Outcome {
  std::size_t samples = 0;
  Verdict verdict = Verdict::pass;
  std::optional<std::string> counterexample;

  /// Records the first failure; later calls keep the original counterexample.
  void fail(std::string what);
  bool failed() const { return verdict == Verdict::fail; }
};

struct Suite {
  std::string name;
  std::string anchor;
  std::function<Outcome(const SuiteParams&, Rng&)> body;
};

const std::vector<Suite>& registry();

/// `all`, an exact name, or a prefix ending in `.` or `.*` (e.g. `mk.`, `families.*`).
/// Returns suites in registry order; empty when nothing matches.
std::vector<const Suite*> select(std::string_view selector);

SuiteReport run_suite(const Suite& suite, const SuiteParams& params);

/// Runs suites on up to `jobs` threads and hands reports to `emit` in selection order.
/// With `fail_fast`, emission stops after the first failing report and no new suite starts.
void run_suites(const std::vector<const Suite*>& suites, const SuiteParams& params, std::size_t jobs,
                bool fail_fast, const std::function<void(const SuiteReport&)>& emit);

}  // namespace fgaut::verify
