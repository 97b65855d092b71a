#include "fibgreedy/sequences.hpp"

#include <mutex>
#include <utility>
#include <vector>

#include "fibgreedy/errors.hpp"

namespace fibgreedy {

namespace detail {

struct TermCache {
  std::mutex mutex;
  std::vector<Integer> terms;
};

}  // namespace detail

namespace {

// (F_k, F_{k+1}) by fast doubling:
//   F_{2k}   = F_k (2 F_{k+1} - F_k)
//   F_{2k+1} = F_k^2 + F_{k+1}^2
std::pair<Integer, Integer> fib_pair(std::uint64_t k) {
  if (k == 0) return {Integer(0), Integer(1)};
  auto [f, g] = fib_pair(k / 2);
  Integer even = f * (g * Integer(2) - f);
  Integer odd = f * f + g * g;
  if (k % 2 == 0) return {std::move(even), std::move(odd)};
  Integer next = even + odd;
  return {std::move(odd), std::move(next)};
}

}  // namespace

Integer fib(std::int64_t n) {
  if (n > kMaxFibIndex || n < -kMaxFibIndex) {
    throw LimitError("Fibonacci index " + std::to_string(n) + " exceeds limit " + std::to_string(kMaxFibIndex));
  }
  if (n >= 0) return fib_pair(static_cast<std::uint64_t>(n)).first;
  const auto k = static_cast<std::uint64_t>(-n);
  Integer f = fib_pair(k).first;
  return k % 2 == 0 ? -f : f;
}

// ---------------------------------------------------------------------------

SequenceParams::SequenceParams(Integer a0, Integer a1, Integer chi)
    : a0_(std::move(a0)), a1_(std::move(a1)), chi_(std::move(chi)), cache_(std::make_shared<detail::TermCache>()) {
  cache_->terms = {a0_, a1_};
}

Integer SequenceParams::term(Index n) const {
  std::lock_guard lock(cache_->mutex);
  auto& terms = cache_->terms;
  while (terms.size() <= n) {
    Integer next = terms[terms.size() - 1] + terms[terms.size() - 2];
    terms.push_back(std::move(next));
  }
  return terms[n];
}

SequenceParams make_params(const Integer& a0, const Integer& a1) {
  if (a0.sign() <= 0) throw ValidationError("a0 must be positive (got a0 = " + a0.to_string() + ")");
  if (a1 < Integer(1)) throw ValidationError("a1 must be at least 1 (got a1 = " + a1.to_string() + ")");
  if (a0 > a1) {
    throw ValidationError("a0 must not exceed a1 (got a0 = " + a0.to_string() + ", a1 = " + a1.to_string() + ")");
  }
  Integer chi = a0 * a0 + a1 * a0 - a1 * a1;
  if (chi.sign() <= 0) {
    throw ValidationError("chi must be positive (chi = a0^2 + a1*a0 - a1^2 = " + chi.to_string() + ")");
  }
  return SequenceParams(a0, a1, std::move(chi));
}

Integer seq_term(const SequenceParams& params, Index n) { return params.term(n); }

Integer seq_term_by_formula(const SequenceParams& params, Index n) {
  const auto i = static_cast<std::int64_t>(n);
  return params.a0() * fib(i - 1) + params.a1() * fib(i);
}

bool check_shift_identity(const SequenceParams& params, Index n, Index m) {
  const auto i = static_cast<std::int64_t>(n);
  return params.term(n + m) == fib(i - 1) * params.term(m) + fib(i) * params.term(m + 1);
}

bool check_cassini_like(const SequenceParams& params, Index n) {
  Integer lhs = params.term(n) * params.term(n + 3) - params.term(n + 1) * params.term(n + 2);
  return lhs == (n % 2 == 0 ? params.chi() : -params.chi());
}

bool check_fib_addition(std::int64_t n, std::int64_t m) {
  return fib(n + m) == fib(n - 1) * fib(m) + fib(n) * fib(m + 1);
}

// ---------------------------------------------------------------------------
// Presets

std::string SequencePreset::name() const {
  switch (kind) {
    case PresetKind::fibonacci:
      return "fibonacci";
    case PresetKind::lucas:
      return "lucas";
    case PresetKind::custom:
      break;
  }
  return "custom:" + params.a0().to_string() + "," + params.a1().to_string();
}

std::optional<Index> SequencePreset::classical_offset() const {
  switch (kind) {
    case PresetKind::fibonacci:
      return 1;
    case PresetKind::lucas:
      return 2;
    case PresetKind::custom:
      break;
  }
  return std::nullopt;
}

std::optional<char> SequencePreset::classical_symbol() const {
  switch (kind) {
    case PresetKind::fibonacci:
      return 'F';
    case PresetKind::lucas:
      return 'L';
    case PresetKind::custom:
      break;
  }
  return std::nullopt;
}

SequencePreset fibonacci_preset() { return {PresetKind::fibonacci, make_params(Integer(1), Integer(1))}; }

SequencePreset lucas_preset() { return {PresetKind::lucas, make_params(Integer(3), Integer(4))}; }

SequencePreset parse_sequence_spec(std::string_view text) {
  if (text == "fibonacci") return fibonacci_preset();
  if (text == "lucas") return lucas_preset();

  constexpr std::string_view prefix = "custom:";
  if (text.substr(0, prefix.size()) != prefix) {
    throw ParseError("unknown sequence \"" + std::string(text) + "\" (expected fibonacci, lucas or custom:a0,a1)");
  }
  std::string_view body = text.substr(prefix.size());
  auto comma = body.find(',');
  if (comma == std::string_view::npos) {
    throw ParseError("custom sequence \"" + std::string(text) + "\" must have the form custom:a0,a1");
  }
  Integer a0 = Integer::parse(body.substr(0, comma));
  Integer a1 = Integer::parse(body.substr(comma + 1));
  return {PresetKind::custom, make_params(a0, a1)};
}

}  // namespace fibgreedy
