#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace pathcrystal {

// Raised by tensor f when the action would land on the highest-weight head:
// the truncation is too short and the caller must deepen the word.
struct TruncationExhausted : std::runtime_error {
  explicit TruncationExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A cycle in the tensor-square graph disagrees with the energy recursion.
// Signals an implementation bug, never expected on valid input.
struct InconsistentPropagation : std::logic_error {
  explicit InconsistentPropagation(const std::string& what) : std::logic_error(what) {}
};

struct LemmaViolation : std::logic_error {
  explicit LemmaViolation(const std::string& what) : std::logic_error(what) {}
};

struct LevelMismatch : std::invalid_argument {
  explicit LevelMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

inline int imod(long long a, int n) {
  long long r = a % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

// Element cap for closures and enumerations; DEMAZURE_CAP overrides.
inline std::size_t default_cap() {
  if (const char* env = std::getenv("DEMAZURE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace pathcrystal
