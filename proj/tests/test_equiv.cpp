#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>

#include "bfcensus/enumerate.hpp"
#include "bfcensus/equiv.hpp"
#include "bfcensus/errors.hpp"

using namespace bfcensus;

namespace {

bool_fn fn(std::string_view s) { return bool_fn::parse(s); }

function_set all_functions(int n) {
  std::vector<bool_fn> fns;
  const uint32_t bits = uint32_t{1} << n;
  for (uint64_t i = 0; i < (uint64_t{1} << bits); ++i)
    fns.push_back(bool_fn::from_words(n, {i << (64 - bits)}));
  return function_set::from_functions(n, set_origin::brute_force, std::move(fns));
}

} // namespace

TEST_CASE("index tables") {
  const int swap2[] = {1, 0};
  const auto p = build_perm_index(swap2, 2);
  CHECK(p.table == std::vector<uint32_t>{0, 2, 1, 3});

  const int id3[] = {0, 1, 2};
  CHECK(build_perm_index(id3, 3).table == std::vector<uint32_t>{0, 1, 2, 3, 4, 5, 6, 7});

  const int cycle[] = {1, 2, 0};
  const auto c = build_perm_index(cycle, 3);
  const auto c3 = compose(compose(c, c), c);
  CHECK(c3.table == build_perm_index(id3, 3).table);

  const int bad[] = {0, 0};
  CHECK_THROWS_AS(build_perm_index(bad, 2), std::invalid_argument);
  const int bad2[] = {0, 2};
  CHECK_THROWS_AS(build_perm_index(bad2, 2), std::invalid_argument);
}

TEST_CASE("apply_perm reindexes") {
  const int swap2[] = {1, 0};
  const auto p = build_perm_index(swap2, 2);
  CHECK(apply_perm(fn("0010"), p) == fn("0100"));
  CHECK(apply_perm(fn("0110"), p) == fn("0110"));
  const auto f = fn("00010111");
  for (const auto& q : all_perm_indexes(3)) CHECK(weight(apply_perm(f, q)) == weight(f));
}

TEST_CASE("apply_perm respects composition, exhaustive n = 3") {
  const auto perms = all_perm_indexes(3);
  REQUIRE(perms.size() == 6);
  const auto f = fn("00101101");
  for (const auto& p : perms)
    for (const auto& q : perms)
      CHECK(apply_perm(apply_perm(f, p), q) == apply_perm(f, compose(p, q)));
}

TEST_CASE("canonical forms") {
  CHECK(canonical_form(fn("0100")) == fn("0010"));
  CHECK(canonical_form(fn("0110")) == fn("0110"));
  CHECK(canonical_form(fn("0101")) == fn("0011"));
  for (int n = 0; n <= 3; ++n) {
    const auto all = all_functions(n);
    const auto perms = all_perm_indexes(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const bool_fn f = all.at(i);
      const bool_fn c = canonical_form(f);
      CHECK(canonical_form(c) == c);
      for (const auto& p : perms) CHECK(canonical_form(apply_perm(f, p)) == c);
    }
  }
}

TEST_CASE("filter_classes small censuses") {
  CHECK(filter_classes(enumerate_unate_set(2)).class_count == 10);
  CHECK(filter_classes(enumerate_balanced_monotone(5)).class_count == 16);
  CHECK(filter_classes(enumerate_unate_set(4)).class_count == 200);
  CHECK(filter_classes(enumerate_monotone(3)).class_count == 10);
}

TEST_CASE("canonical census small values") {
  CHECK(class_census_by_canonical(filter_balanced(enumerate_unate_set(4))).class_count == 24);
  CHECK(class_census_by_canonical(enumerate_monotone(3)).class_count == 10);
}

TEST_CASE("the two class routes agree and are thread-stable") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& s : {enumerate_monotone(n), enumerate_unate_set(n),
                          enumerate_balanced_monotone(n)}) {
      const auto filtered = filter_classes(s);
      equiv_options one, four;
      one.threads = 1;
      four.threads = 4;
      const auto canon1 = class_census_by_canonical(s, one);
      const auto canon4 = class_census_by_canonical(s, four);
      CHECK(filtered.class_count == canon1.class_count);
      CHECK(canon1.representatives == canon4.representatives);
      CHECK(filtered.representatives == canon1.representatives);
      CHECK(filtered.source_size == s.size());
    }
  }
}

TEST_CASE("representatives are orbit minima") {
  const auto census = filter_classes(enumerate_unate_set(3));
  const auto perms = all_perm_indexes(3);
  for (std::size_t i = 0; i < census.representatives.size(); ++i) {
    const bool_fn r = census.representatives.at(i);
    for (const auto& p : perms) CHECK(r <= apply_perm(r, p));
  }
}

TEST_CASE("properties are closed under permutation, exhaustive to n = 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto perms = all_perm_indexes(n);
    const auto all = all_functions(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const bool_fn f = all.at(i);
      for (const auto& p : perms) {
        const bool_fn g = apply_perm(f, p);
        REQUIRE(is_monotone(g) == is_monotone(f));
        REQUIRE(is_unate(g) == is_unate(f));
        REQUIRE(is_nondegenerate(g) == is_nondegenerate(f));
        REQUIRE(is_balanced(g) == is_balanced(f));
        REQUIRE(weight(g) == weight(f));
      }
    }
  }
}

TEST_CASE("canonical form sampled at n = 4 and 5") {
  std::mt19937_64 rng(99);
  for (const int n : {4, 5}) {
    const auto perms = all_perm_indexes(n);
    for (int trial = 0; trial < 200; ++trial) {
      bool_fn f(n);
      for (uint32_t i = 0; i < f.num_bits(); ++i)
        if (rng() & 1) f.set(i, true);
      const bool_fn c = canonical_form(f);
      REQUIRE(canonical_form(c) == c);
      REQUIRE(canonical_form(apply_perm(f, perms[rng() % perms.size()])) == c);
      REQUIRE(c <= f);
    }
  }
}

TEST_CASE("class census serialization") {
  const auto census = filter_classes(enumerate_unate_set(2));
  const auto dir = std::filesystem::temp_directory_path() /
                   ("bfcensus-census-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto path = dir / "reps.fset";
  write_class_census(census, "unate", path);
  CHECK(std::filesystem::exists(path));
  std::ifstream side(path.string() + ".json");
  std::string text((std::istreambuf_iterator<char>(side)), std::istreambuf_iterator<char>());
  CHECK(text.find("\"classCount\": 10") != std::string::npos);
  CHECK(text.find("\"property\": \"unate\"") != std::string::npos);
  CHECK(text.find("\"sourceSize\": 14") != std::string::npos);
  std::filesystem::remove_all(dir);
}
