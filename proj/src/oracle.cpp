#include "bfcensus/oracle.hpp"

#include <bit>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "bfcensus/enumerate.hpp"
#include "bfcensus/errors.hpp"

namespace bfcensus {

namespace {

/* Base properties censused directly from the predicate kernels. */
constexpr count_label base_labels[] = {count_label::a,  count_label::b,  count_label::m,
                                       count_label::bm, count_label::u,  count_label::bu};

struct partial_census {
  std::map<count_label, uint64_t> counts;
  std::map<count_label, std::vector<uint64_t>> by_weight;
  std::map<count_label, std::vector<uint64_t>> members; // function words, ascending

  explicit partial_census(int n, bool materialize, bool keep_all) {
    const std::size_t buckets = (std::size_t{1} << n) + 1;
    for (const auto l : base_labels) {
      counts[l] = 0;
      counts[nd_label(l)] = 0;
      by_weight[l].assign(buckets, 0);
      if (materialize && (keep_all || (l != count_label::a && l != count_label::b))) {
        members[l];
        members[nd_label(l)];
      }
    }
  }
};

void scan_range(int n, uint64_t begin, uint64_t end, partial_census& out) {
  const uint32_t bits = uint32_t{1} << n;
  const uint32_t full = (uint32_t{1} << n) - 1; // one direction bit per variable
  const uint32_t half = bits / 2;
  auto tally = [&out](count_label l, uint64_t w, uint32_t wt, bool nondeg) {
    ++out.counts[l];
    ++out.by_weight[l][wt];
    if (auto it = out.members.find(l); it != out.members.end()) it->second.push_back(w);
    if (nondeg) {
      const count_label nd = nd_label(l);
      ++out.counts[nd];
      if (auto it = out.members.find(nd); it != out.members.end()) it->second.push_back(w);
    }
  };
  for (uint64_t i = begin; i < end; ++i) {
    const uint64_t w = i << (64 - bits);
    const auto d = detail::directions_word(w, n);
    const bool mono = d.inc == full;
    const bool unate = (d.inc | d.dec) == full;
    const bool nondeg = (d.inc & d.dec) == 0;
    const uint32_t wt = static_cast<uint32_t>(std::popcount(w));
    const bool bal = n >= 1 && wt == half;
    tally(count_label::a, w, wt, nondeg);
    if (bal) tally(count_label::b, w, wt, nondeg);
    if (mono) tally(count_label::m, w, wt, nondeg);
    if (mono && bal) tally(count_label::bm, w, wt, nondeg);
    if (unate) tally(count_label::u, w, wt, nondeg);
    if (unate && bal) tally(count_label::bu, w, wt, nondeg);
  }
}

void merge_into(partial_census& acc, const partial_census& part) {
  for (const auto& [l, c] : part.counts) acc.counts[l] += c;
  for (const auto& [l, hist] : part.by_weight)
    for (std::size_t w = 0; w < hist.size(); ++w) acc.by_weight[l][w] += hist[w];
  for (const auto& [l, words] : part.members) {
    auto& dst = acc.members[l];
    dst.insert(dst.end(), words.begin(), words.end()); // ranges ascend, so append keeps order
  }
}

count_label cls_label_of(count_label base) {
  switch (base) {
    case count_label::a: return count_label::cls_a;
    case count_label::b: return count_label::cls_b;
    case count_label::m: return count_label::cls_m;
    case count_label::bm: return count_label::cls_bm;
    case count_label::u: return count_label::cls_u;
    case count_label::bu: return count_label::cls_bu;
    default: throw std::invalid_argument("not a base property label");
  }
}

} // namespace

oracle_census brute_force_census(int n, bool materialize, bool allow_large) {
  if (n < 0 || n > 5) throw std::invalid_argument("oracle census supports 0 <= n <= 5");
  if (n == 5 && !allow_large)
    throw resource_limit_error("the n = 5 oracle scan requires the allow-large override");

  const uint32_t bits = uint32_t{1} << n;
  const uint64_t total = uint64_t{1} << bits;
  const bool keep_all = n <= 4; // the full 2^32-function sets at n = 5 stay unmaterialized

  partial_census acc(n, materialize, keep_all);
  const int threads =
      n == 5 ? std::max(1, static_cast<int>(std::thread::hardware_concurrency())) : 1;
  if (threads == 1) {
    scan_range(n, 0, total, acc);
  } else {
    std::vector<partial_census> parts(threads, partial_census(n, materialize, keep_all));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t]() { scan_range(n, total * t / threads, total * (t + 1) / threads, parts[t]); });
    for (auto& th : pool) th.join();
    for (const auto& p : parts) merge_into(acc, p);
  }

  oracle_census census;
  census.n = n;
  census.counts = std::move(acc.counts);
  census.by_weight = std::move(acc.by_weight);
  for (auto& [l, words] : acc.members) {
    const set_origin origin = l == count_label::m    ? set_origin::monotone
                              : l == count_label::bm ? set_origin::balanced_monotone
                              : l == count_label::u  ? set_origin::unate
                                                     : set_origin::brute_force;
    census.sets.emplace(l, function_set::from_words(n, origin, words));
  }
  if (materialize) {
    for (const auto l : base_labels) {
      if (const auto it = census.sets.find(l); it != census.sets.end())
        census.class_counts[cls_label_of(l)] = filter_classes(it->second).class_count;
      if (const auto it = census.sets.find(nd_label(l)); it != census.sets.end())
        census.class_counts[nd_label(cls_label_of(l))] = filter_classes(it->second).class_count;
    }
  }
  return census;
}

bool verify_report::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

std::string verify_report::to_text() const {
  std::ostringstream out;
  std::size_t failures = 0;
  for (const auto& r : rows) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name << ": expected " << r.expected << ", got "
        << r.actual << "\n";
    if (!r.pass) ++failures;
  }
  out << "verification: " << rows.size() << " checks, " << failures << " failures\n";
  return out.str();
}

std::string verify_report::to_json() const {
  nlohmann::json j;
  auto& rows_json = j["rows"] = nlohmann::json::array();
  for (const auto& r : rows)
    rows_json.push_back({{"name", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}});
  j["all_pass"] = all_pass();
  return j.dump(2);
}

namespace {

class report_builder {
public:
  explicit report_builder(verify_report& report) : report_(report) {}

  template <class E, class A>
  void row(const std::string& name, const E& expected, const A& actual) {
    std::ostringstream e, a;
    e << expected;
    a << actual;
    report_.rows.push_back({name, e.str(), a.str(), e.str() == a.str()});
  }

  void boolean(const std::string& name, bool ok) {
    report_.rows.push_back({name, "true", ok ? "true" : "false", ok});
  }

private:
  verify_report& report_;
};

count_sequence oracle_sequence(const std::vector<oracle_census>& censuses, count_label l) {
  count_sequence s{l, {}};
  for (const auto& c : censuses) s.values.emplace_back(c.counts.at(l));
  return s;
}

std::string weight_histogram_symmetric(const oracle_census& c, count_label l) {
  const auto& hist = c.by_weight.at(l);
  for (std::size_t w = 0; w < hist.size(); ++w)
    if (hist[w] != hist[hist.size() - 1 - w])
      return "asymmetric at w=" + std::to_string(w);
  return "symmetric";
}

} // namespace

verify_report verify_all(const verify_options& opts, const known_constants& kc) {
  verify_report report;
  report_builder add(report);
  enumerate_options eopts;
  eopts.allow_large = opts.allow_large;
  eopts.threads = opts.threads;
  equiv_options qopts;
  qopts.threads = opts.threads;

  const int oracle_max = std::min(opts.n_max, 4);
  std::vector<oracle_census> censuses;
  for (int n = 0; n <= oracle_max; ++n) censuses.push_back(brute_force_census(n));

  /* n = 0 conventions */
  if (!censuses.empty()) {
    add.row("n=0 convention M", 2, censuses[0].counts.at(count_label::m));
    add.row("n=0 convention BM", 0, censuses[0].counts.at(count_label::bm));
    add.row("n=0 convention ndM", 2, censuses[0].counts.at(count_label::nd_m));
    add.row("n=0 convention [M]", 2, censuses[0].class_counts.at(count_label::cls_m));
  }

  for (int n = 0; n <= oracle_max; ++n) {
    const auto& c = censuses[n];
    const std::string tag = "n=" + std::to_string(n) + " ";

    /* oracle vs generators, set equality */
    add.boolean(tag + "oracle M set == enumerate", c.sets.at(count_label::m) == enumerate_monotone(n, eopts));
    add.boolean(tag + "oracle BM set == enumerate",
                c.sets.at(count_label::bm) == enumerate_balanced_monotone(n, eopts));
    const auto unate = enumerate_unate(n, eopts);
    add.boolean(tag + "oracle U set == enumerate",
                c.sets.at(count_label::u).with_origin(set_origin::unate) ==
                    enumerate_unate_set(n, eopts));
    add.row(tag + "oracle BU count vs filtered unate", c.counts.at(count_label::bu),
            filter_balanced(enumerate_unate_set(n, eopts)).size());
    bool sigs_ok = true;
    for (const auto& sf : unate)
      if (signature_of(sf.fn) != sf.sig) sigs_ok = false;
    add.boolean(tag + "unate signatures revalidate", sigs_ok);

    /* oracle vs embedded tables */
    add.row(tag + "oracle M vs A000372", kc.dedekind.at(n), c.counts.at(count_label::m));
    for (const auto l : {count_label::bm, count_label::nd_bm, count_label::u, count_label::nd_u,
                         count_label::bu, count_label::nd_bu})
      add.row(tag + "oracle " + std::string(to_string(l)) + " vs table", kc.table(l).at(n),
              c.counts.at(l));
    for (const auto l : {count_label::cls_bm, count_label::cls_u, count_label::cls_bu})
      add.row(tag + "oracle " + std::string(to_string(l)) + " vs table", kc.table(l).at(n),
              c.class_counts.at(l));
    add.row(tag + "oracle [M] vs A003182", kc.monotone_class_totals.at(n),
            c.class_counts.at(count_label::cls_m));
    add.row(tag + "oracle ndClsM vs table", kc.table(count_label::nd_cls_m).at(n),
            c.class_counts.at(count_label::nd_cls_m));

    /* scaling identities on oracle data */
    add.row(tag + "oracle ndU = 2^n ndM", c.counts.at(count_label::nd_m) << n,
            c.counts.at(count_label::nd_u));
    add.row(tag + "oracle ndBU = 2^n ndBM", c.counts.at(count_label::nd_bm) << n,
            c.counts.at(count_label::nd_bu));

    /* weight symmetry */
    add.row(tag + "oracle M weight symmetry", "symmetric", weight_histogram_symmetric(c, count_label::m));
    add.row(tag + "oracle U weight symmetry", "symmetric", weight_histogram_symmetric(c, count_label::u));

    /* class-count routes agree */
    for (const auto l : {count_label::m, count_label::bm, count_label::u, count_label::bu}) {
      const auto& s = c.sets.at(l);
      add.row(tag + "filter == canonical on " + std::string(to_string(l)),
              filter_classes(s).class_count, class_census_by_canonical(s, qopts).class_count);
    }

    /* the class prefix-sum identity on oracle data */
    if (n >= 1)
      add.row(tag + "[A] prefix: ndClsA = clsA - clsA(n-1)",
              censuses[n].class_counts.at(count_label::cls_a) -
                  censuses[n - 1].class_counts.at(count_label::cls_a),
              censuses[n].class_counts.at(count_label::nd_cls_a));
  }

  /* oracle sequence vs the inverse transform */
  if (oracle_max >= 1) {
    for (const auto l : {count_label::m, count_label::u, count_label::a, count_label::b}) {
      const auto full = oracle_sequence(censuses, l);
      const auto nd = inverse_binomial_transform(full);
      const auto nd_direct = oracle_sequence(censuses, nd_label(l));
      add.boolean("oracle nd" + std::string(to_string(l)) + " == inverse transform", nd == nd_direct);
    }
  }

  /* enumeration rows past the oracle range */
  for (int n = 5; n <= opts.n_max; ++n) {
    const std::string tag = "n=" + std::to_string(n) + " ";
    const auto mono = enumerate_monotone(n, eopts);
    add.row(tag + "enumerate M vs A000372", kc.dedekind.at(n), mono.size());
    const auto bal = filter_balanced(mono);
    add.row(tag + "enumerate BM vs table", kc.table(count_label::bm).at(n), bal.size());
    add.row(tag + "[BM] filter vs table", kc.table(count_label::cls_bm).at(n),
            filter_classes(bal).class_count);
    add.row(tag + "[M] filter vs A003182", kc.monotone_class_totals.at(n),
            filter_classes(mono).class_count);
    const auto unate = enumerate_unate_set(n, eopts);
    add.row(tag + "enumerate U vs table", kc.table(count_label::u).at(n), unate.size());
    const auto bu = filter_balanced(unate);
    add.row(tag + "enumerate BU vs table", kc.table(count_label::bu).at(n), bu.size());
    add.row(tag + "[U] filter vs table", kc.table(count_label::cls_u).at(n),
            filter_classes(unate).class_count);
    add.row(tag + "[BU] filter vs table", kc.table(count_label::cls_bu).at(n),
            filter_classes(bu).class_count);
  }

  /* transform chains against the embedded tables, full range */
  {
    const count_sequence m{count_label::m, kc.dedekind};
    const auto nd_m = inverse_binomial_transform(m);
    const auto nd_u = unate_from_monotone(nd_m);
    const auto u = binomial_transform(nd_u);
    add.boolean("chain U vs table", u.values == kc.table(count_label::u).values);
    add.boolean("chain ndU vs table", nd_u.values == kc.table(count_label::nd_u).values);

    const auto nd_bm = inverse_binomial_transform(kc.table(count_label::bm));
    add.boolean("chain ndBM vs table", nd_bm.values == kc.table(count_label::nd_bm).values);
    const auto nd_bu = balanced_unate_from_balanced_monotone(nd_bm);
    const auto bu = binomial_transform(nd_bu);
    add.boolean("chain BU vs table", bu.values == kc.table(count_label::bu).values);
    add.boolean("chain ndBU vs table", nd_bu.values == kc.table(count_label::nd_bu).values);

    const auto cls_m = class_counts_from_nondegenerate(kc.table(count_label::nd_cls_m));
    add.boolean("prefix sums of ndClsM vs A003182", cls_m.values == kc.monotone_class_totals);

    for (const auto l : {count_label::cls_bm, count_label::cls_u, count_label::cls_bu}) {
      const auto nd = nondegenerate_class_counts(kc.table(l));
      add.boolean("first differences of " + std::string(to_string(l)) + " vs table",
                  nd.values == kc.table(nd_label(l)).values);
    }

    std::map<count_label, count_sequence> seqs;
    seqs.emplace(count_label::m, m);
    seqs.emplace(count_label::nd_m, nd_m);
    for (const auto l : {count_label::u, count_label::nd_u, count_label::bm, count_label::nd_bm,
                         count_label::bu, count_label::nd_bu, count_label::cls_bm,
                         count_label::cls_u, count_label::cls_bu, count_label::nd_cls_m,
                         count_label::nd_cls_bm, count_label::nd_cls_u, count_label::nd_cls_bu})
      seqs.emplace(l, kc.table(l));
    seqs.emplace(count_label::cls_m, count_sequence{count_label::cls_m, kc.monotone_class_totals});
    bool inequalities_ok = true;
    std::string detail = "all hold";
    try {
      check_inequalities(seqs);
    } catch (const inequality_violation_error& e) {
      inequalities_ok = false;
      detail = e.what();
    }
    add.row("count inequalities on embedded tables", "all hold", inequalities_ok ? "all hold" : detail);
  }

  return report;
}

} // namespace bfcensus
