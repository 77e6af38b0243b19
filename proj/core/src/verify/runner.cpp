#include "suites.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <limits>
#include <mutex>
#include <thread>

namespace fgaut::verify {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string SuiteReport::to_json(bool timing) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["anchor"] = anchor;
  j["seed"] = seed;
  j["samples"] = samples;
  j["verdict"] = to_string(verdict);
  j["counterexample"] = counterexample ? nlohmann::ordered_json(*counterexample) : nlohmann::ordered_json(nullptr);
  if (timing) j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do r = engine_(); while (r >= limit);
  return static_cast<std::size_t>(r % bound);
}

void Outcome::fail(std::string what) {
  if (verdict != Verdict::fail) {
    verdict = Verdict::fail;
    counterexample = std::move(what);
  }
}

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> out;
    detail::add_word_suites(out);
    detail::add_automorphism_suites(out);
    detail::add_nielsen_suites(out);
    detail::add_mk_suites(out);
    detail::add_splitting_suites(out);
    detail::add_family_suites(out);
    return out;
  }();
  return suites;
}

std::vector<const Suite*> select(std::string_view selector) {
  std::vector<const Suite*> out;
  std::string_view prefix;
  bool is_prefix = false;
  if (selector == "all") {
    is_prefix = true;
  } else if (selector.size() >= 2 && selector.substr(selector.size() - 2) == ".*") {
    prefix = selector.substr(0, selector.size() - 1);
    is_prefix = true;
  } else if (!selector.empty() && selector.back() == '.') {
    prefix = selector;
    is_prefix = true;
  }
  for (const auto& s : registry()) {
    if (is_prefix ? s.name.compare(0, prefix.size(), prefix) == 0 : s.name == selector) out.push_back(&s);
  }
  return out;
}

SuiteReport run_suite(const Suite& suite, const SuiteParams& params) {
  Rng rng = Rng::for_suite(params.seed, suite.name);
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = suite.body(params, rng);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const auto stop = std::chrono::steady_clock::now();
  SuiteReport r;
  r.suite = suite.name;
  r.anchor = suite.anchor;
  r.seed = params.seed;
  r.samples = o.samples;
  r.verdict = o.verdict;
  r.counterexample = o.counterexample;
  if (r.verdict == Verdict::fail && !r.counterexample) r.counterexample = "unspecified";
  r.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

void run_suites(const std::vector<const Suite*>& suites, const SuiteParams& params, std::size_t jobs,
                bool fail_fast, const std::function<void(const SuiteReport&)>& emit) {
  const std::size_t n = suites.size();
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  std::vector<std::optional<SuiteReport>> slots(n);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      SuiteReport r = run_suite(*suites[i], params);
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(r);
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);

  for (std::size_t i = 0; i < n; ++i) {
    std::unique_lock lock(mu);
    // A suite that was never started (after fail-fast) leaves its slot empty.
    cv.wait(lock, [&] { return slots[i].has_value() || (stop.load() && next.load() <= i); });
    if (!slots[i]) break;
    SuiteReport r = std::move(*slots[i]);
    lock.unlock();
    emit(r);
    if (fail_fast && r.verdict == Verdict::fail) {
      stop.store(true);
      cv.notify_all();
      break;
    }
  }
  stop.store(true);
  for (auto& t : threads) t.join();
}

}  // namespace fgaut::verify
