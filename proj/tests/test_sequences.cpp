#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "fibgreedy/errors.hpp"
#include "fibgreedy/sequences.hpp"

using namespace fibgreedy;

namespace {

// Test-side oracle: F_n by plain iteration in both directions.
Integer fib_by_iteration(std::int64_t n) {
  Integer a(0), b(1);  // (F_k, F_{k+1}) at k = 0
  if (n >= 0) {
    for (std::int64_t k = 0; k < n; ++k) {
      Integer next = a + b;
      a = b;
      b = next;
    }
    return a;
  }
  // Step backwards: F_{k-1} = F_{k+1} - F_k.
  for (std::int64_t k = 0; k > n; --k) {
    Integer prev = b - a;
    b = a;
    a = prev;
  }
  return a;
}

std::vector<SequenceParams> tested_params() {
  return {make_params(1, 1), make_params(3, 4), make_params(2, 2), make_params(2, 3), make_params(4, 5)};
}

}  // namespace

// =============================================================================
// fib
// =============================================================================

TEST(FibTest, SmallValues) {
  EXPECT_EQ(fib(0), Integer(0));
  EXPECT_EQ(fib(1), Integer(1));
  EXPECT_EQ(fib(10), Integer(55));
  EXPECT_EQ(fib(-1), Integer(1));
  EXPECT_EQ(fib(-2), Integer(-1));
  EXPECT_EQ(fib(-3), Integer(2));
  EXPECT_EQ(fib(-4), Integer(-3));
}

TEST(FibTest, MatchesIterationBothDirections) {
  for (std::int64_t n = -400; n <= 400; ++n) EXPECT_EQ(fib(n), fib_by_iteration(n)) << "n=" << n;
}

TEST(FibTest, MillionthTerm) {
  const std::string digits = fib(1'000'000).to_string();
  EXPECT_EQ(digits.size(), 208988u);
  EXPECT_EQ(digits.substr(0, 20), "19532821287077577316");
  EXPECT_EQ(digits.substr(digits.size() - 20), "68996526838242546875");
  EXPECT_EQ(fib(-1'000'000), -fib(1'000'000));
}

TEST(FibTest, LimitEnforced) {
  EXPECT_THROW(fib(kMaxFibIndex + 1), LimitError);
  EXPECT_THROW(fib(-kMaxFibIndex - 1), LimitError);
}

// =============================================================================
// make_params and presets
// =============================================================================

TEST(ParamsTest, Chi) {
  EXPECT_EQ(make_params(1, 1).chi(), Integer(1));
  EXPECT_EQ(make_params(3, 4).chi(), Integer(5));
  EXPECT_EQ(make_params(2, 2).chi(), Integer(4));
  EXPECT_EQ(make_params(4, 5).chi(), Integer(11));
}

TEST(ParamsTest, ValidationNamesCondition) {
  auto message = [](long long a0, long long a1) -> std::string {
    try {
      make_params(a0, a1);
    } catch (const ValidationError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(message(1, 2).find("chi must be positive"), std::string::npos);
  EXPECT_NE(message(1, 2).find("-1"), std::string::npos);
  EXPECT_NE(message(0, 1).find("a0 must be positive"), std::string::npos);
  EXPECT_NE(message(-1, 1).find("a0 must be positive"), std::string::npos);
  EXPECT_NE(message(1, 0).find("a1 must be at least 1"), std::string::npos);
  EXPECT_NE(message(5, 4).find("a0 must not exceed a1"), std::string::npos);
}

TEST(ParamsTest, Presets) {
  const auto f = fibonacci_preset();
  EXPECT_EQ(f.params.a0(), Integer(1));
  EXPECT_EQ(f.params.a1(), Integer(1));
  EXPECT_EQ(f.params.chi(), Integer(1));
  EXPECT_EQ(f.name(), "fibonacci");
  EXPECT_EQ(f.classical_offset(), 1u);
  for (Index n = 0; n <= 60; ++n) EXPECT_EQ(f.params.term(n), fib(static_cast<std::int64_t>(n) + 1));

  const auto l = lucas_preset();
  EXPECT_EQ(l.params.chi(), Integer(5));
  EXPECT_EQ(l.name(), "lucas");
  EXPECT_EQ(l.classical_offset(), 2u);
  // L_k = F_{k-1} + F_{k+1}
  for (Index n = 0; n <= 60; ++n) {
    const auto k = static_cast<std::int64_t>(n) + 2;
    EXPECT_EQ(l.params.term(n), fib(k - 1) + fib(k + 1));
  }
}

TEST(ParamsTest, ParseSequenceSpec) {
  EXPECT_EQ(parse_sequence_spec("fibonacci").kind, PresetKind::fibonacci);
  EXPECT_EQ(parse_sequence_spec("lucas").kind, PresetKind::lucas);
  const auto c = parse_sequence_spec("custom:4,5");
  EXPECT_EQ(c.kind, PresetKind::custom);
  EXPECT_EQ(c.params.chi(), Integer(11));
  EXPECT_EQ(c.name(), "custom:4,5");
  EXPECT_FALSE(c.classical_offset());

  EXPECT_THROW(parse_sequence_spec("fib"), ParseError);
  EXPECT_THROW(parse_sequence_spec("custom:4"), ParseError);
  EXPECT_THROW(parse_sequence_spec("custom:4,x"), ParseError);
  EXPECT_THROW(parse_sequence_spec("custom:1,2"), ValidationError);
}

// =============================================================================
// seq_term and identities
// =============================================================================

TEST(SeqTermTest, Examples) {
  EXPECT_EQ(seq_term(make_params(1, 1), 7), Integer(21));
  EXPECT_EQ(seq_term(make_params(3, 4), 4), Integer(18));
  for (const auto& p : tested_params()) EXPECT_EQ(seq_term(p, 0), p.a0());
}

TEST(SeqTermTest, RecurrenceMatchesFormula) {
  for (const auto& p : tested_params()) {
    for (Index n = 0; n <= 500; ++n) EXPECT_EQ(seq_term(p, n), seq_term_by_formula(p, n)) << "n=" << n;
  }
}

TEST(SeqTermTest, StrictGrowth) {
  for (const auto& p : tested_params()) {
    EXPECT_GE(p.term(1), Integer(1));
    for (Index n = 1; n <= 300; ++n) {
      EXPECT_GT(p.term(n + 1), p.term(n));
      EXPECT_GT(p.term(n + 2), p.term(n) * Integer(2));
    }
  }
}

TEST(IdentityTest, ShiftExamples) {
  const auto fibp = make_params(1, 1);
  EXPECT_TRUE(check_shift_identity(fibp, 3, 4));
  EXPECT_EQ(fibp.term(7), Integer(1) * fibp.term(4) + Integer(2) * fibp.term(5));
  EXPECT_TRUE(check_shift_identity(make_params(3, 4), 5, 2));
  for (const auto& p : tested_params()) EXPECT_TRUE(check_shift_identity(p, 0, 9));
}

TEST(IdentityTest, ShiftAllSmall) {
  for (const auto& p : tested_params()) {
    for (Index n = 0; n <= 50; ++n) {
      for (Index m = 0; m <= 50; ++m) EXPECT_TRUE(check_shift_identity(p, n, m)) << n << "," << m;
    }
  }
}

TEST(IdentityTest, CassiniLikeExamples) {
  EXPECT_TRUE(check_cassini_like(make_params(1, 1), 0));
  const auto lucas = make_params(3, 4);
  EXPECT_TRUE(check_cassini_like(lucas, 1));
  EXPECT_EQ(lucas.term(1) * lucas.term(4) - lucas.term(2) * lucas.term(3), Integer(-5));
}

TEST(IdentityTest, CassiniLikeAlternates) {
  for (const auto& p : tested_params()) {
    for (Index n = 0; n <= 300; ++n) {
      EXPECT_TRUE(check_cassini_like(p, n)) << "n=" << n;
      const Integer d0 = p.term(n) * p.term(n + 3) - p.term(n + 1) * p.term(n + 2);
      const Integer d1 = p.term(n + 1) * p.term(n + 4) - p.term(n + 2) * p.term(n + 3);
      EXPECT_EQ(d0.sign(), -d1.sign());
    }
  }
}

TEST(IdentityTest, FibAddition) {
  EXPECT_TRUE(check_fib_addition(0, 0));
  EXPECT_TRUE(check_fib_addition(-3, 5));
  for (std::int64_t m = -30; m <= 30; ++m) EXPECT_TRUE(check_fib_addition(1, m));
  for (std::int64_t n = -30; n <= 30; ++n) {
    for (std::int64_t m = -30; m <= 30; ++m) EXPECT_TRUE(check_fib_addition(n, m)) << n << "," << m;
  }
}

// =============================================================================
// Concurrency
// =============================================================================

TEST(SequenceConcurrency, SharedCacheConcurrentReaders) {
  const auto params = make_params(2, 3);
  const auto copy = params;  // shares the memo
  std::vector<Integer> expected;
  for (Index n = 0; n < 800; ++n) expected.push_back(seq_term_by_formula(params, n));

  std::vector<std::thread> threads;
  std::vector<int> mismatches(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      const auto& p = t % 2 ? params : copy;
      for (Index i = 0; i < 800; ++i) {
        const Index n = t % 2 ? i : 799 - i;
        if (p.term(n) != expected[n]) ++mismatches[t];
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int t = 0; t < 8; ++t) EXPECT_EQ(mismatches[t], 0);
}
