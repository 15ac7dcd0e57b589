#include <doctest.h>

#include "bfcensus/errors.hpp"
#include "bfcensus/function_set.hpp"

using namespace bfcensus;

TEST_CASE("from_functions sorts and deduplicates") {
  const auto s = function_set::from_functions(
      2, set_origin::brute_force,
      {bool_fn::parse("0111"), bool_fn::parse("0001"), bool_fn::parse("0111")});
  REQUIRE(s.size() == 2);
  CHECK(s.at(0) == bool_fn::parse("0001"));
  CHECK(s.at(1) == bool_fn::parse("0111"));
  CHECK(s.contains(bool_fn::parse("0111")));
  CHECK_FALSE(s.contains(bool_fn::parse("0101")));
}

TEST_CASE("push_record rejects order violations") {
  function_set s(1, set_origin::brute_force);
  const uint8_t lo[1] = {0x40}, hi[1] = {0xC0};
  s.push_record(hi);
  CHECK_THROWS_AS(s.push_record(lo), order_violation_error);
  CHECK_THROWS_AS(s.push_record(hi), order_violation_error);
}

TEST_CASE("word round trip") {
  const std::vector<uint64_t> words = {0x0ull, 0x4000000000000000ull, 0xC000000000000000ull};
  const auto s = function_set::from_words(1, set_origin::monotone, words);
  CHECK(s.as_words() == words);
  CHECK(s.record(1)[0] == 0x40);
}

TEST_CASE("mixed widths are rejected") {
  CHECK_THROWS_AS(function_set::from_functions(2, set_origin::brute_force,
                                               {bool_fn::parse("01"), bool_fn::parse("0001")}),
                  std::invalid_argument);
}
