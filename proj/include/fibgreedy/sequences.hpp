#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "fibgreedy/numeric.hpp"

namespace fibgreedy {

// Sequence indices are 0-based; greedy indices start at 1.
using Index = std::size_t;

inline constexpr std::int64_t kMaxFibIndex = 10'000'000;

// F_n for any integer n with |n| <= kMaxFibIndex (fast doubling; negative
// indices via F_{-k} = (-1)^{k+1} F_k). Throws LimitError beyond the limit.
Integer fib(std::int64_t n);

namespace detail {
struct TermCache;
}

/**
 * A Fibonacci-type sequence a_n = a_{n-1} + a_{n-2} with
 * a0 > 0, a1 >= 1, a0 <= a1 and chi = a0^2 + a1*a0 - a1^2 > 0.
 *
 * Only make_params constructs one, so every instance is valid. Copies share
 * a thread-safe memo of computed terms.
 */
class SequenceParams {
 public:
  const Integer& a0() const { return a0_; }
  const Integer& a1() const { return a1_; }
  const Integer& chi() const { return chi_; }

  // a_n, memoized.
  Integer term(Index n) const;

 private:
  friend SequenceParams make_params(const Integer& a0, const Integer& a1);
  SequenceParams(Integer a0, Integer a1, Integer chi);

  Integer a0_;
  Integer a1_;
  Integer chi_;
  std::shared_ptr<detail::TermCache> cache_;
};

// Throws ValidationError naming the first failed condition.
SequenceParams make_params(const Integer& a0, const Integer& a1);

// a_n by the recurrence (memoized).
Integer seq_term(const SequenceParams& params, Index n);

// a_n = a0 F_{n-1} + a1 F_n.
Integer seq_term_by_formula(const SequenceParams& params, Index n);

// a_{n+m} == F_{n-1} a_m + F_n a_{m+1}
bool check_shift_identity(const SequenceParams& params, Index n, Index m);

// a_n a_{n+3} - a_{n+1} a_{n+2} == (-1)^n chi
bool check_cassini_like(const SequenceParams& params, Index n);

// F_{n+m} == F_{n-1} F_m + F_n F_{m+1}, any signs.
bool check_fib_addition(std::int64_t n, std::int64_t m);

enum class PresetKind { fibonacci, lucas, custom };

struct SequencePreset {
  PresetKind kind;
  SequenceParams params;

  // "fibonacci", "lucas" or "custom:a0,a1".
  std::string name() const;

  // Presets relate internal index n to a classical subscript: a_n = F_{n+1}
  // for fibonacci and a_n = L_{n+2} for lucas. Empty for custom sequences.
  std::optional<Index> classical_offset() const;
  std::optional<char> classical_symbol() const;
};

SequencePreset fibonacci_preset();
SequencePreset lucas_preset();

// Parses "fibonacci", "lucas" or "custom:a0,a1". Throws ParseError for
// malformed text and ValidationError for invalid parameters.
SequencePreset parse_sequence_spec(std::string_view text);

}  // namespace fibgreedy
