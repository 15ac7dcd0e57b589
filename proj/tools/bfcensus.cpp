/* bfcensus: enumeration, exact counting, equivalence-class censuses, and
   verification for monotone and unate Boolean functions. */

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfcensus/enumerate.hpp"
#include "bfcensus/equiv.hpp"
#include "bfcensus/errors.hpp"
#include "bfcensus/known_constants.hpp"
#include "bfcensus/oracle.hpp"
#include "bfcensus/store.hpp"
#include "bfcensus/transforms.hpp"

namespace {

using namespace bfcensus;

enum class fn_class { monotone, balanced_monotone, unate, balanced_unate };

const std::map<std::string, fn_class> class_names = {
    {"monotone", fn_class::monotone},
    {"balanced-monotone", fn_class::balanced_monotone},
    {"unate", fn_class::unate},
    {"balanced-unate", fn_class::balanced_unate},
};

std::string class_name(fn_class c, bool nondegenerate) {
  for (const auto& [name, value] : class_names)
    if (value == c) return nondegenerate ? name + "-nondegenerate" : name;
  return "?";
}

struct shared_flags {
  fn_class cls = fn_class::monotone;
  int n = 0;
  bool nondegenerate = false;
  std::string out;
  std::string format = "text";
  bool allow_large = false;
  int threads = 0;
};

void add_shared(CLI::App* cmd, shared_flags& f, bool with_class = true) {
  if (with_class)
    cmd->add_option("--class", f.cls, "function class")
        ->required()
        ->transform(CLI::CheckedTransformer(class_names, CLI::ignore_case));
  if (with_class) cmd->add_option("--n", f.n, "variable count")->required();
  cmd->add_flag("--nondegenerate", f.nondegenerate, "restrict to non-degenerate functions");
  cmd->add_option("--out", f.out, "write the resulting .fset here");
  cmd->add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_flag("--allow-large", f.allow_large, "lift the desk-scale resource guards");
  cmd->add_option("--threads", f.threads, "worker threads (0 = hardware)");
}

enumerate_options make_opts(const shared_flags& f) {
  enumerate_options opts;
  opts.allow_large = f.allow_large;
  opts.threads = f.threads;
  return opts;
}

/* Applies the weight and non-degeneracy restrictions, counts, and
   optionally persists records (with signatures when available). */
class enumerate_pipeline final : public fn_sink, public signed_sink {
public:
  enumerate_pipeline(int n, fn_class cls, bool nondegenerate, bool with_weights,
                     const std::string& out, bool signed_records)
      : n_(n),
        balanced_(cls == fn_class::balanced_monotone || cls == fn_class::balanced_unate),
        nondegenerate_(nondegenerate),
        counts_(n, with_weights) {
    if (!out.empty()) writer_.emplace(out, n, /*sorted=*/true, signed_records);
  }

  void accept(std::span<const uint8_t> record) override {
    if (!keep(record)) return;
    counts_.accept(record);
    if (writer_) writer_->add(record);
  }

  void accept(std::span<const uint8_t> record, const signature& sig) override {
    if (!keep(record)) return;
    counts_.accept(record);
    if (writer_) writer_->add(record, sig);
  }

  void finish() {
    if (writer_) writer_->close();
  }

  const count_collector& counts() const { return counts_; }

private:
  bool keep(std::span<const uint8_t> record) const {
    if (balanced_) {
      if (n_ == 0) return false;
      uint32_t w = 0;
      for (const uint8_t b : record) w += static_cast<uint32_t>(std::popcount(b));
      if (w != (uint32_t{1} << (n_ - 1))) return false;
    }
    if (nondegenerate_ && !is_nondegenerate(bool_fn::unpack(n_, record))) return false;
    return true;
  }

  int n_;
  bool balanced_;
  bool nondegenerate_;
  count_collector counts_;
  std::optional<fset_writer> writer_;
};

void run_enumeration(const shared_flags& f, enumerate_pipeline& pipe) {
  const auto opts = make_opts(f);
  switch (f.cls) {
    case fn_class::monotone: enumerate_monotone_stream(f.n, opts, pipe); break;
    case fn_class::balanced_monotone: enumerate_balanced_monotone_stream(f.n, opts, pipe); break;
    case fn_class::unate:
    case fn_class::balanced_unate: enumerate_unate_stream(f.n, opts, pipe); break;
  }
  pipe.finish();
}

int cmd_enumerate(const shared_flags& f, bool weights) {
  const bool signed_records = f.cls == fn_class::unate || f.cls == fn_class::balanced_unate;
  enumerate_pipeline pipe(f.n, f.cls, f.nondegenerate, weights, f.out, signed_records);
  run_enumeration(f, pipe);
  const auto& counts = pipe.counts();

  if (f.format == "json") {
    nlohmann::json j;
    j["class"] = class_name(f.cls, f.nondegenerate);
    j["n"] = f.n;
    j["count"] = std::to_string(counts.total());
    if (weights) {
      auto& jw = j["weights"] = nlohmann::json::array();
      for (const auto w : counts.weights()) jw.push_back(std::to_string(w));
    }
    std::cout << j.dump(2) << "\n";
  } else if (f.format == "csv") {
    if (weights) {
      std::cout << "w,count\n";
      for (std::size_t w = 0; w < counts.weights().size(); ++w)
        std::cout << w << "," << counts.weights()[w] << "\n";
    } else {
      std::cout << "n,count\n" << f.n << "," << counts.total() << "\n";
    }
  } else {
    std::cout << counts.total() << "\n";
    if (weights)
      for (std::size_t w = 0; w < counts.weights().size(); ++w)
        std::cout << w << " " << counts.weights()[w] << "\n";
  }
  return 0;
}

count_sequence transform_sequence(fn_class cls, bool nondegenerate, int n) {
  const auto& kc = default_constants();
  auto take_prefix = [n](count_sequence s) {
    if (static_cast<std::size_t>(n) >= s.values.size())
      throw std::invalid_argument("transform path covers n <= " +
                                  std::to_string(s.values.size() - 1) + " for this class");
    s.values.resize(n + 1);
    return s;
  };
  const count_sequence m{count_label::m, kc.dedekind};
  switch (cls) {
    case fn_class::monotone:
      return take_prefix(nondegenerate ? inverse_binomial_transform(m) : m);
    case fn_class::unate: {
      const auto nd_u = unate_from_monotone(inverse_binomial_transform(m));
      return take_prefix(nondegenerate ? nd_u : binomial_transform(nd_u));
    }
    case fn_class::balanced_monotone: {
      const auto bm = kc.table(count_label::bm);
      return take_prefix(nondegenerate ? inverse_binomial_transform(bm) : bm);
    }
    case fn_class::balanced_unate: {
      const auto nd_bu =
          balanced_unate_from_balanced_monotone(inverse_binomial_transform(kc.table(count_label::bm)));
      return take_prefix(nondegenerate ? nd_bu : binomial_transform(nd_bu));
    }
  }
  throw std::logic_error("unreachable");
}

int cmd_count(const shared_flags& f, const std::string& via, bool sequence) {
  big_int value;
  std::optional<count_sequence> seq;
  if (via == "transform") {
    seq = transform_sequence(f.cls, f.nondegenerate, f.n);
    value = seq->values.at(f.n);
  } else {
    enumerate_pipeline pipe(f.n, f.cls, f.nondegenerate, false, "", false);
    run_enumeration(f, pipe);
    value = pipe.counts().total();
  }

  if (sequence && !seq)
    throw std::invalid_argument("--sequence needs --via transform");

  if (f.format == "json") {
    if (sequence) {
      std::cout << seq->to_json() << "\n";
    } else {
      nlohmann::json j;
      j["class"] = class_name(f.cls, f.nondegenerate);
      j["n"] = f.n;
      j["value"] = value.str();
      std::cout << j.dump(2) << "\n";
    }
  } else if (f.format == "csv") {
    if (sequence)
      std::cout << seq->to_csv();
    else
      std::cout << "n,value\n" << f.n << "," << value.str() << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
  return 0;
}

int cmd_classes(const shared_flags& f, const std::string& method) {
  const auto opts = make_opts(f);
  function_set s(f.n);
  switch (f.cls) {
    case fn_class::monotone: s = enumerate_monotone(f.n, opts); break;
    case fn_class::balanced_monotone: s = enumerate_balanced_monotone(f.n, opts); break;
    case fn_class::unate: s = enumerate_unate_set(f.n, opts); break;
    case fn_class::balanced_unate: s = filter_balanced(enumerate_unate_set(f.n, opts)); break;
  }
  if (f.nondegenerate) s = filter_nondegenerate(s);

  equiv_options qopts;
  qopts.threads = f.threads;
  std::optional<class_census> census;
  if (method == "filter") {
    census = filter_classes(s);
  } else if (method == "canonical") {
    census = class_census_by_canonical(s, qopts);
  } else {
    census = filter_classes(s);
    const auto canonical = class_census_by_canonical(s, qopts);
    if (census->class_count != canonical.class_count) {
      std::cerr << "class-count routes disagree: filter " << census->class_count << ", canonical "
                << canonical.class_count << "\n";
      return 4;
    }
  }

  const std::string property = class_name(f.cls, f.nondegenerate);
  if (!f.out.empty()) write_class_census(*census, property, f.out);

  if (f.format == "json") {
    nlohmann::json j;
    j["property"] = property;
    j["n"] = f.n;
    j["classCount"] = census->class_count;
    j["sourceSize"] = census->source_size;
    std::cout << j.dump(2) << "\n";
  } else if (f.format == "csv") {
    std::cout << "property,n,classCount,sourceSize\n"
              << property << "," << f.n << "," << census->class_count << ","
              << census->source_size << "\n";
  } else {
    std::cout << census->class_count << "\n";
  }
  return 0;
}

int cmd_verify(int n_max, const std::string& format, bool allow_large, int threads) {
  verify_options opts;
  opts.n_max = n_max;
  opts.allow_large = allow_large;
  opts.threads = threads;
  if (n_max > 5 && !allow_large)
    throw resource_limit_error("verification beyond n = 5 runs gated enumerations; pass --allow-large");
  const auto report = verify_all(opts);
  std::cout << (format == "json" ? report.to_json() + "\n" : report.to_text());
  return report.all_pass() ? 0 : 4;
}

int cmd_fset_info(const std::string& path, int show) {
  const auto info = read_fset_info(path);
  std::cout << "n=" << info.n << " count=" << info.count << " sorted=" << (info.sorted ? 1 : 0)
            << " signatures=" << (info.has_signatures ? 1 : 0) << "\n";
  if (show > 0) {
    fset_reader r(path);
    bool_fn f;
    std::optional<signature> sig;
    for (int k = 0; k < show && r.next(f, sig); ++k) {
      std::cout << f.str();
      if (sig) std::cout << " sig=" << sig->str();
      std::cout << "\n";
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"census of monotone and unate Boolean functions"};
  app.require_subcommand(1);

  shared_flags enum_flags;
  bool enum_weights = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "generate a function set");
  add_shared(enumerate_cmd, enum_flags);
  enumerate_cmd->add_flag("--weights", enum_weights, "print the per-weight histogram");

  shared_flags count_flags;
  std::string count_via = "transform";
  bool count_sequence_out = false;
  auto* count_cmd = app.add_subcommand("count", "count a class exactly");
  add_shared(count_cmd, count_flags);
  count_cmd->add_option("--via", count_via, "computation route")
      ->check(CLI::IsMember({"transform", "enumerate"}));
  count_cmd->add_flag("--sequence", count_sequence_out, "emit the whole sequence 0..n");

  shared_flags classes_flags;
  std::string classes_method = "filter";
  auto* classes_cmd = app.add_subcommand("classes", "count equivalence classes");
  add_shared(classes_cmd, classes_flags);
  classes_cmd->add_option("--method", classes_method, "class-census route")
      ->check(CLI::IsMember({"filter", "canonical", "both"}));

  int verify_n_max = 4;
  std::string verify_format = "text";
  bool verify_allow_large = false;
  int verify_threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "check the build against the embedded tables");
  verify_cmd->add_option("--n-max", verify_n_max, "verify up to this n");
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_flag("--allow-large", verify_allow_large);
  verify_cmd->add_option("--threads", verify_threads);

  auto* fset_cmd = app.add_subcommand("fset", "inspect and combine .fset files");
  fset_cmd->require_subcommand(1);

  std::string info_path;
  int info_show = 0;
  auto* info_cmd = fset_cmd->add_subcommand("info", "print header fields");
  info_cmd->add_option("path", info_path)->required();
  info_cmd->add_option("--show", info_show, "also print the first K functions");

  std::vector<std::string> merge_inputs;
  std::string merge_out;
  auto* merge_cmd = fset_cmd->add_subcommand("merge", "sorted union of sorted files");
  merge_cmd->add_option("--out", merge_out)->required();
  merge_cmd->add_option("inputs", merge_inputs)->required()->expected(-1);

  std::string sort_in, sort_out;
  std::size_t sort_budget = std::size_t{256} << 20;
  auto* sort_cmd = fset_cmd->add_subcommand("sort", "sort and deduplicate a file");
  sort_cmd->add_option("input", sort_in)->required();
  sort_cmd->add_option("--out", sort_out)->required();
  sort_cmd->add_option("--memory-budget", sort_budget, "bytes held in memory while sorting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate_cmd->parsed()) return cmd_enumerate(enum_flags, enum_weights);
    if (count_cmd->parsed()) return cmd_count(count_flags, count_via, count_sequence_out);
    if (classes_cmd->parsed()) return cmd_classes(classes_flags, classes_method);
    if (verify_cmd->parsed())
      return cmd_verify(verify_n_max, verify_format, verify_allow_large, verify_threads);
    if (info_cmd->parsed()) return cmd_fset_info(info_path, info_show);
    if (merge_cmd->parsed()) {
      std::vector<std::filesystem::path> inputs(merge_inputs.begin(), merge_inputs.end());
      std::cout << merge_sorted(inputs, merge_out) << "\n";
      return 0;
    }
    if (sort_cmd->parsed()) {
      std::cout << external_sort(sort_in, sort_out, sort_budget) << "\n";
      return 0;
    }
  } catch (const resource_limit_error& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
