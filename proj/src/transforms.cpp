#include "bfcensus/transforms.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bfcensus/errors.hpp"

namespace bfcensus {

namespace {

constexpr std::pair<count_label, std::string_view> label_names[] = {
    {count_label::m, "M"},
    {count_label::bm, "BM"},
    {count_label::u, "U"},
    {count_label::bu, "BU"},
    {count_label::a, "A"},
    {count_label::b, "B"},
    {count_label::nd_m, "ndM"},
    {count_label::nd_bm, "ndBM"},
    {count_label::nd_u, "ndU"},
    {count_label::nd_bu, "ndBU"},
    {count_label::nd_a, "ndA"},
    {count_label::nd_b, "ndB"},
    {count_label::cls_m, "clsM"},
    {count_label::cls_bm, "clsBM"},
    {count_label::cls_u, "clsU"},
    {count_label::cls_bu, "clsBU"},
    {count_label::cls_a, "clsA"},
    {count_label::cls_b, "clsB"},
    {count_label::nd_cls_m, "ndClsM"},
    {count_label::nd_cls_bm, "ndClsBM"},
    {count_label::nd_cls_u, "ndClsU"},
    {count_label::nd_cls_bu, "ndClsBU"},
    {count_label::nd_cls_a, "ndClsA"},
    {count_label::nd_cls_b, "ndClsB"},
};

} // namespace

std::string_view to_string(count_label l) {
  for (const auto& [label, name] : label_names)
    if (label == l) return name;
  return "?";
}

count_label label_from_string(std::string_view s) {
  for (const auto& [label, name] : label_names)
    if (name == s) return label;
  throw std::invalid_argument("unknown count label: " + std::string(s));
}

count_label nd_label(count_label l) {
  switch (l) {
    case count_label::m: return count_label::nd_m;
    case count_label::bm: return count_label::nd_bm;
    case count_label::u: return count_label::nd_u;
    case count_label::bu: return count_label::nd_bu;
    case count_label::a: return count_label::nd_a;
    case count_label::b: return count_label::nd_b;
    case count_label::cls_m: return count_label::nd_cls_m;
    case count_label::cls_bm: return count_label::nd_cls_bm;
    case count_label::cls_u: return count_label::nd_cls_u;
    case count_label::cls_bu: return count_label::nd_cls_bu;
    case count_label::cls_a: return count_label::nd_cls_a;
    case count_label::cls_b: return count_label::nd_cls_b;
    default: return l;
  }
}

count_label full_label(count_label l) {
  switch (l) {
    case count_label::nd_m: return count_label::m;
    case count_label::nd_bm: return count_label::bm;
    case count_label::nd_u: return count_label::u;
    case count_label::nd_bu: return count_label::bu;
    case count_label::nd_a: return count_label::a;
    case count_label::nd_b: return count_label::b;
    case count_label::nd_cls_m: return count_label::cls_m;
    case count_label::nd_cls_bm: return count_label::cls_bm;
    case count_label::nd_cls_u: return count_label::cls_u;
    case count_label::nd_cls_bu: return count_label::cls_bu;
    case count_label::nd_cls_a: return count_label::cls_a;
    case count_label::nd_cls_b: return count_label::cls_b;
    default: return l;
  }
}

std::string count_sequence::to_csv() const {
  std::ostringstream out;
  out << "n,value\n";
  for (std::size_t n = 0; n < values.size(); ++n) out << n << "," << values[n].str() << "\n";
  return out.str();
}

std::string count_sequence::to_json() const {
  nlohmann::json j;
  j["label"] = to_string(label);
  auto& vals = j["values"] = nlohmann::json::array();
  for (const auto& v : values) vals.push_back(v.str());
  return j.dump();
}

count_sequence count_sequence::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  count_sequence s{label_from_string(j.at("label").get<std::string>()), {}};
  for (const auto& v : j.at("values")) s.values.emplace_back(v.get<std::string>());
  return s;
}

std::vector<big_int> binomial_row(std::size_t n) {
  std::vector<big_int> row(n + 1);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    row[i] = 1;
    for (std::size_t k = i - 1; k >= 1; --k) row[k] += row[k - 1];
  }
  return row;
}

count_sequence binomial_transform(const count_sequence& nd) {
  count_sequence p{full_label(nd.label), std::vector<big_int>(nd.values.size())};
  for (std::size_t n = 0; n < nd.values.size(); ++n) {
    const auto row = binomial_row(n);
    big_int acc = 0;
    for (std::size_t i = 0; i <= n; ++i) acc += row[i] * nd.values[i];
    p.values[n] = acc;
  }
  return p;
}

count_sequence inverse_binomial_transform(const count_sequence& p) {
  count_sequence nd{nd_label(p.label), std::vector<big_int>(p.values.size())};
  for (std::size_t n = 0; n < p.values.size(); ++n) {
    const auto row = binomial_row(n);
    big_int acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      const big_int term = row[i] * p.values[i];
      if ((n - i) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    if (acc < 0)
      throw negative_result_error("inverse binomial transform negative at n = " + std::to_string(n) +
                                  " for " + std::string(to_string(p.label)));
    nd.values[n] = acc;
  }
  return nd;
}

namespace {

count_sequence scale_pow2(const count_sequence& in, count_label out_label) {
  count_sequence out{out_label, std::vector<big_int>(in.values.size())};
  for (std::size_t n = 0; n < in.values.size(); ++n) out.values[n] = in.values[n] << n;
  return out;
}

} // namespace

count_sequence unate_from_monotone(const count_sequence& nd_monotone) {
  return scale_pow2(nd_monotone, count_label::nd_u);
}

count_sequence balanced_unate_from_balanced_monotone(const count_sequence& nd_balanced_monotone) {
  return scale_pow2(nd_balanced_monotone, count_label::nd_bu);
}

count_sequence class_counts_from_nondegenerate(const count_sequence& nd_classes) {
  count_sequence out{full_label(nd_classes.label), std::vector<big_int>(nd_classes.values.size())};
  big_int acc = 0;
  for (std::size_t n = 0; n < nd_classes.values.size(); ++n) {
    acc += nd_classes.values[n];
    out.values[n] = acc;
  }
  return out;
}

count_sequence nondegenerate_class_counts(const count_sequence& classes) {
  count_sequence out{nd_label(classes.label), std::vector<big_int>(classes.values.size())};
  for (std::size_t n = 0; n < classes.values.size(); ++n) {
    const big_int prev = n == 0 ? big_int(0) : classes.values[n - 1];
    const big_int diff = classes.values[n] - prev;
    if (diff < 0) throw negative_result_error("class counts decreased at n = " + std::to_string(n));
    out.values[n] = diff;
  }
  return out;
}

inequality_report check_inequalities(const std::map<count_label, count_sequence>& seqs) {
  struct relation {
    count_label lhs;
    count_label rhs;
    bool equality;
    std::string_view name;
  };
  static const relation relations[] = {
      {count_label::nd_u, count_label::nd_m, true, "ndU = 2^n ndM"},
      {count_label::nd_bu, count_label::nd_bm, true, "ndBU = 2^n ndBM"},
      {count_label::u, count_label::m, false, "U <= 2^n M"},
      {count_label::bu, count_label::bm, false, "BU <= 2^n BM"},
      {count_label::nd_cls_u, count_label::nd_cls_m, false, "ndClsU <= 2^n ndClsM"},
      {count_label::nd_cls_bu, count_label::nd_cls_bm, false, "ndClsBU <= 2^n ndClsBM"},
      {count_label::cls_u, count_label::cls_m, false, "clsU <= 2^n clsM"},
      {count_label::cls_bu, count_label::cls_bm, false, "clsBU <= 2^n clsBM"},
  };
  inequality_report report;
  for (const auto& rel : relations) {
    const auto lhs_it = seqs.find(rel.lhs);
    const auto rhs_it = seqs.find(rel.rhs);
    if (lhs_it == seqs.end() || rhs_it == seqs.end()) continue;
    const std::size_t len = std::min(lhs_it->second.size(), rhs_it->second.size());
    for (std::size_t n = 0; n < len; ++n) {
      const big_int lhs = lhs_it->second.at(n);
      const big_int rhs = rhs_it->second.at(n) << n;
      const big_int slack = rhs - lhs;
      if (slack < 0 || (rel.equality && slack != 0))
        throw inequality_violation_error(std::string(rel.name) + " violated at n = " + std::to_string(n) +
                                         ": " + lhs.str() + " vs " + rhs.str());
      report.rows.push_back({std::string(rel.name), static_cast<int>(n), lhs, rhs, slack});
    }
  }
  return report;
}

} // namespace bfcensus
