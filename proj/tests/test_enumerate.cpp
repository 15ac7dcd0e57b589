#include <doctest.h>

#include <numeric>

#include "bfcensus/enumerate.hpp"
#include "bfcensus/errors.hpp"

using namespace bfcensus;

namespace {

/* Test-side oracle: classify every n-variable function by the predicates. */
function_set brute_force_set(int n, bool (*pred)(const bool_fn&)) {
  std::vector<bool_fn> fns;
  const uint32_t bits = uint32_t{1} << n;
  for (uint64_t i = 0; i < (uint64_t{1} << bits); ++i) {
    const bool_fn f = bool_fn::from_words(n, {i << (64 - bits)});
    if (pred(f)) fns.push_back(f);
  }
  return function_set::from_functions(n, set_origin::brute_force, std::move(fns));
}

bool monotone_pred(const bool_fn& f) { return is_monotone(f); }
bool unate_pred(const bool_fn& f) { return is_unate(f); }

} // namespace

TEST_CASE("monotone census for small n") {
  const auto m1 = enumerate_monotone(1);
  REQUIRE(m1.size() == 3);
  CHECK(m1.at(0) == bool_fn::parse("00"));
  CHECK(m1.at(1) == bool_fn::parse("01"));
  CHECK(m1.at(2) == bool_fn::parse("11"));

  for (int n = 0; n <= 4; ++n)
    CHECK(enumerate_monotone(n).with_origin(set_origin::brute_force) ==
          brute_force_set(n, monotone_pred));
  CHECK(enumerate_monotone(4).size() == 168);
  CHECK(enumerate_monotone(5).size() == 7581);
}

TEST_CASE("monotone guard") {
  CHECK_THROWS_AS(enumerate_monotone(7), resource_limit_error);
  CHECK_THROWS_AS(enumerate_monotone(8, {.allow_large = true}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_monotone(-1), std::invalid_argument);
}

TEST_CASE("balanced monotone by filtering") {
  CHECK(enumerate_balanced_monotone(0).empty());
  CHECK(enumerate_balanced_monotone(3).size() == 4);
  const auto bm2 = enumerate_balanced_monotone(2);
  REQUIRE(bm2.size() == 2);
  CHECK(bm2.at(0) == bool_fn::parse("0011"));
  CHECK(bm2.at(1) == bool_fn::parse("0101"));
  CHECK(enumerate_balanced_monotone(5).size() == 621);
}

TEST_CASE("weight buckets") {
  const auto buckets2 = bucket_by_weight(enumerate_monotone(2));
  std::vector<std::size_t> sizes;
  for (const auto& b : buckets2.buckets) sizes.push_back(b.size());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 1, 1});

  const auto buckets4 = bucket_by_weight(enumerate_monotone(4));
  uint64_t total = 0;
  for (std::size_t w = 0; w < buckets4.buckets.size(); ++w) {
    CHECK(buckets4.buckets[w].size() == buckets4.buckets[buckets4.buckets.size() - 1 - w].size());
    total += buckets4.buckets[w].size();
  }
  CHECK(total == 168);

  const auto ubuckets = bucket_by_weight(enumerate_unate_set(2));
  sizes.clear();
  for (const auto& b : ubuckets.buckets) sizes.push_back(b.size());
  CHECK(sizes == std::vector<std::size_t>{1, 4, 4, 4, 1});
}

TEST_CASE("bucket pairing reproduces the filtered sets") {
  for (int n = 3; n <= 5; ++n) {
    const auto direct = enumerate_balanced_monotone(n);
    const auto paired = balanced_monotone_from_buckets(bucket_by_weight(enumerate_monotone(n - 1)));
    CHECK(direct == paired);
  }
}

TEST_CASE("bucket pairing rejects chained invocation") {
  const auto bm = enumerate_balanced_monotone(4);
  CHECK_THROWS_AS(balanced_monotone_from_buckets(bucket_by_weight(bm)), std::invalid_argument);
  const auto unate_buckets = bucket_by_weight(enumerate_unate_set(3));
  CHECK_THROWS_AS(balanced_monotone_from_buckets(unate_buckets), std::invalid_argument);
}

TEST_CASE("bucket pairing pair count matches the weight-square sum") {
  const int n = 4;
  const auto buckets = bucket_by_weight(enumerate_monotone(n));
  uint64_t expected_pairs = 0;
  for (const auto& b : buckets.buckets) expected_pairs += b.size() * b.size();
  uint64_t reported = 0;
  enumerate_options opts;
  opts.progress = [&reported](uint64_t pairs, uint64_t) { reported = pairs; };
  count_collector sink(n + 1);
  balanced_monotone_from_buckets_stream(buckets, opts, sink);
  CHECK(reported == expected_pairs);
  CHECK(sink.total() == 621); // one level above the bucketed set
}

TEST_CASE("unate base level") {
  const auto u1 = enumerate_unate(1);
  REQUIRE(u1.size() == 4);
  CHECK(u1[0].fn == bool_fn::parse("00"));
  CHECK(u1[0].sig == signature::zero(1));
  CHECK(u1[1].fn == bool_fn::parse("01"));
  CHECK(u1[1].sig == signature::vec(1, 1));
  CHECK(u1[2].fn == bool_fn::parse("10"));
  CHECK(u1[2].sig == signature::vec(1, 0));
  CHECK(u1[3].fn == bool_fn::parse("11"));
  CHECK(u1[3].sig == signature::one(1));
}

TEST_CASE("unate census equals the brute force census") {
  for (int n = 0; n <= 4; ++n)
    CHECK(enumerate_unate_set(n).with_origin(set_origin::brute_force) ==
          brute_force_set(n, unate_pred));
  CHECK(enumerate_unate_set(3).size() == 104);
}

TEST_CASE("stored signatures revalidate") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& sf : enumerate_unate(n)) REQUIRE(signature_of(sf.fn) == sf.sig);
}

TEST_CASE("unate guard") {
  CHECK_THROWS_AS(enumerate_unate(6), resource_limit_error);
  CHECK_THROWS_AS(enumerate_unate(9, {.allow_large = true}), std::invalid_argument);
}

TEST_CASE("filter_balanced") {
  CHECK(filter_balanced(enumerate_unate_set(4)).size() == 296);
  const auto bm2 = filter_balanced(enumerate_monotone(2));
  CHECK(bm2.origin() == set_origin::balanced_monotone);
  REQUIRE(bm2.size() == 2);
  CHECK(bm2.at(0) == bool_fn::parse("0011"));
  CHECK(bm2.at(1) == bool_fn::parse("0101"));
}

TEST_CASE("filter_nondegenerate") {
  const auto ndm2 = filter_nondegenerate(enumerate_monotone(2));
  REQUIRE(ndm2.size() == 2);
  CHECK(ndm2.at(0) == bool_fn::parse("0001"));
  CHECK(ndm2.at(1) == bool_fn::parse("0111"));
  CHECK(filter_nondegenerate(enumerate_unate_set(2)).size() == 8);
  CHECK(filter_nondegenerate(filter_balanced(enumerate_unate_set(2))).empty());
}

TEST_CASE("unate counts match the scaled binomial identity") {
  /* |U_n| = sum_i C(n,i) 2^i ndM_i, with ndM from the inverse transform
     of the small Dedekind numbers */
  const uint64_t nd_m[] = {2, 1, 2, 9, 114, 6894};
  for (int n = 0; n <= 5; ++n) {
    uint64_t expected = 0;
    uint64_t c = 1;
    for (int i = 0; i <= n; ++i) {
      expected += c * (uint64_t{1} << i) * nd_m[i];
      c = c * (n - i) / (i + 1);
    }
    CHECK(enumerate_unate_set(n).size() == expected);
  }
}

TEST_CASE("every generated set is strictly sorted and spills cleanly") {
  enumerate_options tiny;
  tiny.memory_budget = 1 << 12; // force shard spills inside the generators
  tiny.allow_large = true;      // the collector itself may exceed the budget
  const auto m5 = enumerate_monotone(5, tiny);
  CHECK(m5 == enumerate_monotone(5));
  const auto u5 = enumerate_unate_set(5, tiny);
  CHECK(u5.size() == 230540);
  const auto bm5 = balanced_monotone_from_buckets(bucket_by_weight(enumerate_monotone(4)), tiny);
  CHECK(bm5.size() == 621);
}

TEST_CASE("bucket pairing emits correct two-word records at n = 7") {
  /* A sampled monotone-origin subset keeps the gated-width path testable:
     the pairing over its buckets must equal the concat-based expectation. */
  const auto m6 = enumerate_monotone(6);
  std::vector<bool_fn> sample;
  for (std::size_t i = 0; i < m6.size(); i += 40000) sample.push_back(m6.at(i));
  sample.push_back(m6.at(m6.size() - 1));
  const auto subset = function_set::from_functions(6, set_origin::monotone, sample);

  std::vector<bool_fn> expected;
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j) {
      const bool_fn g = subset.at(i), h = subset.at(j);
      if (weight(g) + weight(h) == 64 && leq(g, h)) expected.push_back(concat(g, h));
    }
  const auto expected_set =
      function_set::from_functions(7, set_origin::balanced_monotone, std::move(expected));

  enumerate_options opts;
  opts.allow_large = true;
  const auto paired = balanced_monotone_from_buckets(bucket_by_weight(subset), opts);
  CHECK(paired == expected_set);
  CHECK(paired.record_bytes() == 16);
  for (std::size_t i = 0; i < paired.size(); ++i) {
    CHECK(is_monotone(paired.at(i)));
    CHECK(is_balanced(paired.at(i)));
  }
}

TEST_CASE("thread count does not change results") {
  enumerate_options one, four;
  one.threads = 1;
  four.threads = 4;
  CHECK(enumerate_monotone(5, one) == enumerate_monotone(5, four));
  CHECK(enumerate_unate_set(4, one) == enumerate_unate_set(4, four));
  CHECK(enumerate_balanced_monotone(5, one) == enumerate_balanced_monotone(5, four));
}
