#include <doctest.h>

#include <random>

#include "bfcensus/errors.hpp"
#include "bfcensus/known_constants.hpp"
#include "bfcensus/transforms.hpp"

using namespace bfcensus;

namespace {

count_sequence seq(count_label l, std::initializer_list<const char*> values) {
  count_sequence s{l, {}};
  for (const char* v : values) s.values.emplace_back(v);
  return s;
}

} // namespace

TEST_CASE("binomial transform of the unate columns") {
  const auto nd_u = seq(count_label::nd_u, {"2", "2", "8", "72"});
  const auto u = binomial_transform(nd_u);
  CHECK(u.label == count_label::u);
  CHECK(u.values == seq(count_label::u, {"2", "4", "14", "104"}).values);
}

TEST_CASE("constant-only sequence transforms to a constant") {
  const auto p = binomial_transform(seq(count_label::nd_m, {"7", "0", "0", "0", "0"}));
  for (const auto& v : p.values) CHECK(v == 7);
}

TEST_CASE("balanced monotone row reproduces BM_5") {
  const auto bm = binomial_transform(seq(count_label::nd_bm, {"0", "1", "0", "1", "16", "526"}));
  CHECK(bm.values.back() == 621);
}

TEST_CASE("inverse binomial transform of the Dedekind prefix") {
  const auto nd_m =
      inverse_binomial_transform(seq(count_label::m, {"2", "3", "6", "20", "168", "7581"}));
  CHECK(nd_m.label == count_label::nd_m);
  CHECK(nd_m.values == seq(count_label::nd_m, {"2", "1", "2", "9", "114", "6894"}).values);
}

TEST_CASE("non-degenerate count of all functions at n = 2") {
  const auto nd_a = inverse_binomial_transform(seq(count_label::a, {"2", "4", "16"}));
  CHECK(nd_a.values[2] == 10);
}

TEST_CASE("inverse transform of the unate prefix") {
  const auto nd_u =
      inverse_binomial_transform(seq(count_label::u, {"2", "4", "14", "104", "2170"}));
  CHECK(nd_u.values == seq(count_label::nd_u, {"2", "2", "8", "72", "1824"}).values);
}

TEST_CASE("inverse transform flags impossible censuses") {
  CHECK_THROWS_AS(inverse_binomial_transform(seq(count_label::m, {"5", "0"})),
                  negative_result_error);
}

TEST_CASE("transforms round trip on random sequences") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    count_sequence nd{count_label::nd_m, {}};
    for (int i = 0; i < 10; ++i) {
      big_int v = rng();
      v = (v << 64) | rng(); // well past 64 bits
      nd.values.push_back(v);
    }
    const auto back = inverse_binomial_transform(binomial_transform(nd));
    CHECK(back.values == nd.values);
  }
}

TEST_CASE("unate scalings") {
  const auto nd_u = unate_from_monotone(seq(count_label::nd_m, {"2", "1", "2", "9"}));
  CHECK(nd_u.label == count_label::nd_u);
  CHECK(nd_u.values == seq(count_label::nd_u, {"2", "2", "8", "72"}).values);
  const auto nd_bu =
      balanced_unate_from_balanced_monotone(seq(count_label::nd_bm, {"0", "1", "0", "1", "16"}));
  CHECK(nd_bu.values == seq(count_label::nd_bu, {"0", "2", "0", "8", "256"}).values);
}

TEST_CASE("full chain from the Dedekind numbers reproduces the unate table") {
  const auto& kc = default_constants();
  const count_sequence m{count_label::m, kc.dedekind};
  const auto u = binomial_transform(unate_from_monotone(inverse_binomial_transform(m)));
  CHECK(u.values == kc.table(count_label::u).values);
  CHECK(u.values[9] == big_int("146629927766168786368451678290041110762316052"));
}

TEST_CASE("balanced unate chain reproduces BU_7") {
  const auto& kc = default_constants();
  const auto nd_bm = inverse_binomial_transform(kc.table(count_label::bm));
  CHECK(nd_bm.values == kc.table(count_label::nd_bm).values);
  const auto bu = binomial_transform(balanced_unate_from_balanced_monotone(nd_bm));
  CHECK(bu.values[7] == big_int("10393772159334"));
  CHECK(bu.values == kc.table(count_label::bu).values);
}

TEST_CASE("class count prefix sums and first differences") {
  const auto cls_m =
      class_counts_from_nondegenerate(seq(count_label::nd_cls_m, {"2", "1", "2", "5", "20", "180"}));
  CHECK(cls_m.values.back() == 210);
  const auto cls_u =
      class_counts_from_nondegenerate(seq(count_label::nd_cls_u, {"2", "2", "6", "24", "166", "3266"}));
  CHECK(cls_u.values.back() == 3466);
  const auto nd_cls_bu = nondegenerate_class_counts(
      seq(count_label::cls_bu, {"0", "2", "2", "6", "24", "254", "50172"}));
  CHECK(nd_cls_bu.values.back() == 49918);
  /* round trip */
  CHECK(class_counts_from_nondegenerate(nd_cls_bu).values ==
        seq(count_label::cls_bu, {"0", "2", "2", "6", "24", "254", "50172"}).values);
}

TEST_CASE("prefix sums of the embedded class table match A003182") {
  const auto& kc = default_constants();
  const auto cls_m = class_counts_from_nondegenerate(kc.table(count_label::nd_cls_m));
  CHECK(cls_m.values == kc.monotone_class_totals);
}

TEST_CASE("inequality checker") {
  const auto& kc = default_constants();
  std::map<count_label, count_sequence> seqs;
  seqs.emplace(count_label::m, count_sequence{count_label::m, kc.dedekind});
  seqs.emplace(count_label::u, kc.table(count_label::u));
  seqs.emplace(count_label::nd_cls_m, kc.table(count_label::nd_cls_m));
  seqs.emplace(count_label::nd_cls_u, kc.table(count_label::nd_cls_u));
  const auto report = check_inequalities(seqs);
  REQUIRE_FALSE(report.rows.empty());
  /* U_4 = 2170 <= 2^4 * 168 */
  bool found_u4 = false;
  for (const auto& r : report.rows)
    if (r.relation == "U <= 2^n M" && r.n == 4) {
      found_u4 = true;
      CHECK(r.lhs == 2170);
      CHECK(r.rhs == 2688);
    }
  CHECK(found_u4);
  /* ndClsU_2 = 6 <= 4 * 2 = 8, strict slack 2 */
  for (const auto& r : report.rows)
    if (r.relation == "ndClsU <= 2^n ndClsM" && r.n == 2) CHECK(r.slack == 2);

  /* zero-slack equality rows pass */
  std::map<count_label, count_sequence> eq;
  eq.emplace(count_label::nd_bu, seq(count_label::nd_bu, {"0", "2", "0"}));
  eq.emplace(count_label::nd_bm, seq(count_label::nd_bm, {"0", "1", "0"}));
  for (const auto& r : check_inequalities(eq).rows) CHECK(r.slack == 0);

  /* violations throw */
  std::map<count_label, count_sequence> bad;
  bad.emplace(count_label::nd_u, seq(count_label::nd_u, {"2", "5"}));
  bad.emplace(count_label::nd_m, seq(count_label::nd_m, {"2", "2"}));
  CHECK_THROWS_AS(check_inequalities(bad), inequality_violation_error);
}

TEST_CASE("count sequences serialize to CSV and JSON") {
  const auto u = seq(count_label::u, {"2", "4", "14"});
  CHECK(u.to_csv() == "n,value\n0,2\n1,4\n2,14\n");
  const auto back = count_sequence::from_json(u.to_json());
  CHECK(back == u);
  /* decimal strings survive far past 64 bits */
  const auto big = seq(count_label::u, {"146629927766168786368451678290041110762316052"});
  CHECK(count_sequence::from_json(big.to_json()) == big);
}

TEST_CASE("label names round trip") {
  for (const auto l : {count_label::m, count_label::bm, count_label::nd_cls_bu, count_label::a})
    CHECK(label_from_string(to_string(l)) == l);
  CHECK(to_string(count_label::nd_cls_m) == "ndClsM");
  CHECK_THROWS_AS(label_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("embedded table conventions at n = 0") {
  const auto& kc = default_constants();
  CHECK(kc.dedekind[0] == 2);
  CHECK(kc.table(count_label::bm).at(0) == 0);
  CHECK(kc.monotone_class_totals[0] == 2);
  CHECK(kc.table(count_label::cls_bu).at(0) == 0);
  for (const auto& [label, entry] : kc.tables) {
    CHECK_FALSE(entry.source.empty());
    CHECK(entry.seq.label == label);
  }
}
