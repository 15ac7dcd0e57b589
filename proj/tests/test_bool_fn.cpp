#include <doctest.h>

#include <array>

#include "bfcensus/bool_fn.hpp"
#include "bfcensus/errors.hpp"

using namespace bfcensus;

namespace {

bool_fn fn(std::string_view s) { return bool_fn::parse(s); }

/* Every n-variable function, table index ascending. */
template <class F>
void for_all_functions(int n, F&& body) {
  const uint32_t bits = uint32_t{1} << n;
  for (uint64_t i = 0; i < (uint64_t{1} << bits); ++i)
    body(bool_fn::from_words(n, {i << (64 - bits)}));
}

/* Reference predicate straight from the definition: weakly increasing in
   every variable under single-bit input flips. */
bool monotone_by_definition(const bool_fn& f) {
  const int n = f.vars();
  for (int v = 0; v < n; ++v) {
    const uint32_t e = uint32_t{1} << (n - 1 - v);
    for (uint32_t x = 0; x < f.num_bits(); ++x)
      if (!(x & e) && f.get(x) && !f.get(x | e)) return false;
  }
  return true;
}

} // namespace

TEST_CASE("evaluate on the AND function") {
  const bool_fn and2 = fn("0001");
  CHECK(evaluate(and2, {true, true}) == true);
  CHECK(evaluate(and2, {false, true}) == false);
  const bool_fn one0 = fn("1");
  CHECK(evaluate(one0, std::span<const bool>{}) == true);
  CHECK_THROWS_AS(evaluate(and2, {true}), std::invalid_argument);
}

TEST_CASE("weight is the support size") {
  CHECK(weight(fn("0111")) == 3);
  CHECK(weight(fn("0000")) == 0);
  CHECK(weight(fn("01101001")) == 4);
}

TEST_CASE("negate") {
  CHECK(negate(fn("0001")) == fn("1110"));
  CHECK(negate(fn("0")) == fn("1"));
  CHECK(negate(negate(fn("0111"))) == fn("0111"));
  CHECK(weight(negate(fn("01101001"))) == 8 - weight(fn("01101001")));
}

TEST_CASE("reverse and dual") {
  CHECK(reverse(fn("0001")) == fn("1000"));
  CHECK(reverse(fn("0110")) == fn("0110"));
  const bool_fn d = dual(fn("0001"));
  CHECK(d == fn("0111"));
  CHECK(is_monotone(d));
}

TEST_CASE("concat is string concatenation") {
  CHECK(concat(fn("0001"), fn("0111")) == fn("00010111"));
  CHECK(concat(fn("00"), fn("01")) == fn("0001"));
  CHECK(concat(fn("0000"), fn("0001")) == fn("00000001"));
  CHECK(is_nondegenerate(fn("00000001")));
  CHECK_THROWS_AS(concat(fn("01"), fn("0001")), std::invalid_argument);
}

TEST_CASE("concat then split round-trips") {
  for (const int n : {0, 1, 2, 3, 5, 6, 7}) {
    const uint32_t bits = uint32_t{1} << n;
    bool_fn g(n), h(n);
    for (uint32_t i = 0; i < bits; i += 3) g.set(i, true);
    for (uint32_t i = 1; i < bits; i += 2) h.set(i, true);
    const auto [g2, h2] = split(concat(g, h));
    CHECK(g2 == g);
    CHECK(h2 == h);
  }
}

TEST_CASE("leq") {
  CHECK(leq(fn("0001"), fn("0111")));
  CHECK_FALSE(leq(fn("0101"), fn("0011")));
  CHECK(leq(fn("0110"), fn("0110")));
}

TEST_CASE("shift translates inputs") {
  CHECK(shift(fn("0001"), {false, false}) == fn("0001"));
  CHECK(shift(fn("0001"), {true, false}) == fn("0100"));
  CHECK(shift(shift(fn("0111"), {true, true}), {true, true}) == fn("0111"));
}

TEST_CASE("is_monotone matches the definition on all small functions") {
  CHECK(is_monotone(fn("0001")));
  CHECK_FALSE(is_monotone(fn("10")));
  for (int n = 0; n <= 4; ++n) {
    uint64_t count = 0;
    for_all_functions(n, [&](const bool_fn& f) {
      REQUIRE(is_monotone(f) == monotone_by_definition(f));
      if (is_monotone(f)) ++count;
    });
    const uint64_t expected[] = {2, 3, 6, 20, 168};
    CHECK(count == expected[n]);
  }
}

TEST_CASE("monotone_directions") {
  const auto d_and = monotone_directions(fn("0001"));
  CHECK(d_and[0] == var_directions{true, false});
  CHECK(d_and[1] == var_directions{true, false});
  const auto d_x1 = monotone_directions(fn("0011"));
  CHECK(d_x1[0] == var_directions{true, false});
  CHECK(d_x1[1] == var_directions{true, true});
  const auto d_not = monotone_directions(fn("10"));
  CHECK(d_not[0] == var_directions{false, true});
}

TEST_CASE("signature tags and vectors") {
  CHECK(signature_of(fn("00")) == signature::zero(1));
  CHECK(signature_of(fn("01")) == signature::vec(1, 1));
  CHECK(signature_of(fn("10")) == signature::vec(1, 0));
  CHECK(signature_of(fn("11")) == signature::one(1));
  CHECK_FALSE(signature_of(fn("0110")).has_value());
  CHECK(signature_of(fn("0001")) == signature::vec(2, 0b11));
  CHECK(signature::vec(2, 0b10).str() == "10");
}

TEST_CASE("unate census over all small functions") {
  uint64_t n1 = 0, n2 = 0;
  for_all_functions(1, [&](const bool_fn& f) { n1 += is_unate(f); });
  for_all_functions(2, [&](const bool_fn& f) { n2 += is_unate(f); });
  CHECK(n1 == 4);
  CHECK(n2 == 14);
  CHECK_FALSE(is_unate(fn("0110")));
}

TEST_CASE("is_nondegenerate") {
  CHECK_FALSE(is_nondegenerate(fn("0011")));
  CHECK(is_nondegenerate(fn("00000001")));
  CHECK_FALSE(is_nondegenerate(fn("0000")));
  CHECK(is_nondegenerate(fn("0"))); // 0-variable constants depend on every variable vacuously
}

TEST_CASE("is_balanced") {
  CHECK(is_balanced(fn("0011")));
  CHECK_FALSE(is_balanced(fn("0001")));
  CHECK_THROWS_AS(is_balanced(fn("0")), std::invalid_argument);
  uint64_t bm3 = 0;
  for_all_functions(3, [&](const bool_fn& f) { bm3 += is_monotone(f) && is_balanced(f); });
  CHECK(bm3 == 4);
}

TEST_CASE("negate and reverse commute and preserve structure") {
  for (int n = 0; n <= 4; ++n) {
    for_all_functions(n, [&](const bool_fn& f) {
      REQUIRE(negate(reverse(f)) == reverse(negate(f)));
      REQUIRE(negate(negate(f)) == f);
      REQUIRE(reverse(reverse(f)) == f);
      REQUIRE(weight(negate(f)) == f.num_bits() - weight(f));
    });
  }
}

TEST_CASE("monotone duality and unate closures, exhaustive to n = 4") {
  for (int n = 0; n <= 4; ++n) {
    for_all_functions(n, [&](const bool_fn& f) {
      if (is_monotone(f)) REQUIRE(is_monotone(dual(f)));
      if (is_unate(f)) {
        REQUIRE(is_unate(negate(f)));
        for (uint32_t a = 0; a < f.num_bits(); ++a) REQUIRE(is_unate(shift(f, a)));
      } else {
        for (uint32_t a = 0; a < f.num_bits(); ++a) REQUIRE_FALSE(is_unate(shift(f, a)));
      }
    });
  }
}

TEST_CASE("signature under translation, exhaustive to n = 4") {
  for (int n = 1; n <= 4; ++n) {
    for_all_functions(n, [&](const bool_fn& f) {
      const auto sig = signature_of(f);
      if (!sig || sig->tag() != signature::kind::vec) return;
      uint32_t deg = 0;
      const auto dirs = monotone_directions(f);
      for (int v = 0; v < n; ++v)
        if (dirs[v].can_increase && dirs[v].can_decrease) deg |= uint32_t{1} << (n - 1 - v);
      for (uint32_t a = 0; a < f.num_bits(); ++a) {
        const auto shifted = signature_of(shift(f, a));
        REQUIRE(shifted.has_value());
        /* strict directions flip with the translation; degenerate ones stay weakly increasing */
        REQUIRE(shifted->dirs() == ((sig->dirs() ^ a) | deg));
        if (deg == 0) REQUIRE(shifted->dirs() == (sig->dirs() ^ a));
      }
    });
  }
}

TEST_CASE("monotone iff signature is constant or all-increasing") {
  for (int n = 0; n <= 4; ++n) {
    const uint32_t ones = (uint32_t{1} << n) - 1;
    for_all_functions(n, [&](const bool_fn& f) {
      const auto sig = signature_of(f);
      const bool all_up = sig && (sig->tag() != signature::kind::vec || sig->dirs() == ones);
      REQUIRE(is_monotone(f) == all_up);
    });
  }
}

TEST_CASE("translation orbits of monotone functions") {
  for (int n = 1; n <= 4; ++n) {
    for_all_functions(n, [&](const bool_fn& f) {
      if (!is_monotone(f)) return;
      if (is_nondegenerate(f)) {
        std::vector<bool_fn> orbit;
        for (uint32_t a = 0; a < f.num_bits(); ++a) orbit.push_back(shift(f, a));
        std::sort(orbit.begin(), orbit.end());
        REQUIRE(std::adjacent_find(orbit.begin(), orbit.end()) == orbit.end());
      } else {
        const auto dirs = monotone_directions(f);
        for (int v = 0; v < n; ++v)
          if (dirs[v].can_increase && dirs[v].can_decrease)
            REQUIRE(shift(f, uint32_t{1} << (n - 1 - v)) == f);
      }
    });
  }
}

TEST_CASE("textual round trip") {
  CHECK(fn("00010111").str() == "00010111");
  CHECK(fn("1").str() == "1");
  const bool_fn f5 = fn("0x0000ffff");
  CHECK(f5.vars() == 5);
  CHECK(weight(f5) == 16);
  CHECK(f5.str() == "0x0000ffff");
  CHECK(bool_fn::parse(f5.str()) == f5);
  CHECK(fn("0X0000FFFF") == f5);
  CHECK_THROWS_AS(fn("001"), format_error);
  CHECK_THROWS_AS(fn("0x001"), format_error);
  CHECK_THROWS_AS(fn("02"), format_error);
  /* emitter switches to hex above 16 bits */
  bool_fn f(5);
  f.set(0, true);
  CHECK(f.str() == "0x80000000");
}

TEST_CASE("records pack with f_0 in the top bit") {
  std::array<uint8_t, 1> rec{};
  fn("01").pack(rec);
  CHECK(rec[0] == 0x40);
  fn("11").pack(rec);
  CHECK(rec[0] == 0xC0);
  fn("0001").pack(rec);
  CHECK(rec[0] == 0x10);
  CHECK(bool_fn::unpack(2, rec) == fn("0001"));
}

TEST_CASE("wide functions keep predicates consistent") {
  /* n = 7 exercises the multi-word paths against the single-word kernels
     via concat: g||h is monotone iff g, h monotone and g <= h. */
  const bool_fn g = bool_fn::parse("0x0000000000000001");
  const bool_fn h = bool_fn::parse("0x00000000ffffffff");
  REQUIRE(g.vars() == 6);
  CHECK(is_monotone(g));
  CHECK(is_monotone(h));
  const bool_fn f = concat(g, h);
  CHECK(f.vars() == 7);
  CHECK(is_monotone(f) == leq(g, h));
  CHECK(weight(f) == weight(g) + weight(h));
  CHECK(split(f).first == g);
  CHECK(is_unate(negate(f)) == is_unate(f));
}
