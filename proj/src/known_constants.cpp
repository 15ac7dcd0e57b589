#include "bfcensus/known_constants.hpp"

#include <stdexcept>

namespace bfcensus {

namespace {

std::vector<big_int> seq(std::initializer_list<const char*> values) {
  std::vector<big_int> out;
  out.reserve(values.size());
  for (const char* v : values) out.emplace_back(v);
  return out;
}

known_constants build() {
  known_constants kc;

  kc.dedekind = seq({"2", "3", "6", "20", "168", "7581", "7828354", "2414682040998",
                     "56130437228687557907788",
                     "286386577668298411128469151667598498812366"});

  kc.monotone_class_totals =
      seq({"2", "3", "5", "10", "30", "210", "16353", "490013148", "1392195548889993358",
           "789204635842035040527740846300252680"});

  auto add = [&kc](count_label l, std::initializer_list<const char*> values, std::string source) {
    kc.tables.emplace(l, table_entry{count_sequence{l, seq(values)}, std::move(source)});
  };

  add(count_label::m,
      {"2", "3", "6", "20", "168", "7581", "7828354", "2414682040998",
       "56130437228687557907788", "286386577668298411128469151667598498812366"},
      "OEIS A000372");
  add(count_label::cls_m,
      {"2", "3", "5", "10", "30", "210", "16353", "490013148", "1392195548889993358",
       "789204635842035040527740846300252680"},
      "OEIS A003182");

  add(count_label::bm, {"0", "1", "2", "4", "24", "621", "492288", "81203064840"},
      "reference census");
  add(count_label::nd_bm, {"0", "1", "0", "1", "16", "526", "488866", "81199631130"},
      "reference census");

  add(count_label::u,
      {"2", "4", "14", "104", "2170", "230540", "499596550", "309075799150640",
       "14369391928071394429416818",
       "146629927766168786368451678290041110762316052"},
      "reference census");
  add(count_label::nd_u,
      {"2", "2", "8", "72", "1824", "220608", "498243968", "309072306743552",
       "14369391925598802012151296",
       "146629927766168786239127150948525247729660416"},
      "reference census");

  add(count_label::bu, {"0", "2", "4", "14", "296", "18202", "31392428", "10393772159334"},
      "reference census");
  add(count_label::nd_bu, {"0", "2", "0", "8", "256", "16832", "31287424", "10393552784640"},
      "reference census");

  add(count_label::nd_cls_m,
      {"2", "1", "2", "5", "20", "180", "16143", "489996795", "1392195548399980210",
       "789204635842035039135545297410259322"},
      "reference census");

  add(count_label::cls_bm, {"0", "1", "1", "2", "4", "16", "951"}, "reference census");
  add(count_label::nd_cls_bm, {"0", "1", "0", "1", "2", "12", "935"}, "reference census");

  add(count_label::cls_u, {"2", "4", "10", "34", "200", "3466", "829774"}, "reference census");
  add(count_label::nd_cls_u, {"2", "2", "6", "24", "166", "3266", "826308"}, "reference census");

  add(count_label::cls_bu, {"0", "2", "2", "6", "24", "254", "50172"}, "reference census");
  add(count_label::nd_cls_bu, {"0", "2", "0", "4", "18", "230", "49918"}, "reference census");

  return kc;
}

} // namespace

const count_sequence& known_constants::table(count_label l) const {
  const auto it = tables.find(l);
  if (it == tables.end())
    throw std::invalid_argument("no embedded table for " + std::string(to_string(l)));
  return it->second.seq;
}

const known_constants& default_constants() {
  static const known_constants kc = build();
  return kc;
}

} // namespace bfcensus
