#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <json.hpp>

#include "treebal/builders.hpp"
#include "treebal/census.hpp"
#include "treebal/counts.hpp"
#include "treebal/errors.hpp"
#include "treebal/indices.hpp"
#include "treebal/minima.hpp"
#include "treebal/newick.hpp"
#include "verify.hpp"

namespace treebal::cli {

namespace {

using nlohmann::json;

constexpr std::uint32_t kMaxBuildLeaves = 1u << 22;
constexpr std::uint64_t kMaxMinN = std::uint64_t{1} << 62;
constexpr std::uint64_t kMaxQbN = 1u << 20;
constexpr std::uint64_t kMaxCountN = 20000;
constexpr std::uint64_t kMaxCurveN = 1u << 24;

struct BuilderSpec {
  std::string kind;
  std::optional<std::uint32_t> n;
  std::optional<std::uint32_t> k;
};

TreeShape build_from_spec(const BuilderSpec& spec) {
  const auto kind = parse_builder_kind(spec.kind);
  if (!kind) throw InvalidInput("unknown builder '" + spec.kind + "' (expected cat|fb|mb|gfb)");
  if (spec.k) {
    if (*kind != BuilderKind::kFullyBalanced) throw InvalidInput("--k applies only to fb");
    if (*spec.k > 22) throw InvalidInput("--k must be at most 22");
    if (spec.n && *spec.n != (1u << *spec.k)) throw InvalidInput("--n and --k disagree");
    return fully_balanced(*spec.k);
  }
  if (!spec.n) throw InvalidInput("builder needs --n");
  return build(*kind, *spec.n);
}

void add_builder_options(CLI::App* cmd, BuilderSpec& spec, const std::string& kind_flag) {
  cmd->add_option(kind_flag, spec.kind, "cat|fb|mb|gfb");
  cmd->add_option("--n", spec.n, "number of leaves")
      ->check(CLI::Range(std::uint32_t{1}, kMaxBuildLeaves));
  cmd->add_option("--k", spec.k, "fb height (2^k leaves)");
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void print_report(const TreeShape& tree, bool as_json, std::ostream& out) {
  const BalanceReport r = report(tree);
  const bool cmin = is_colless_minimal(tree);
  const bool smin = is_sackin_minimal(tree);
  if (as_json) {
    json j = {{"n", r.n},
              {"colless", r.colless},
              {"sackin", r.sackin},
              {"height", r.height},
              {"cherries", r.cherries},
              {"colless_minimal", cmin},
              {"sackin_minimal", smin}};
    j["root_partition"] =
        r.n == 1 ? json(nullptr) : json::array({r.root_partition.first, r.root_partition.second});
    out << j.dump() << '\n';
    return;
  }
  out << "n: " << r.n << '\n'
      << "colless: " << r.colless << '\n'
      << "sackin: " << r.sackin << '\n'
      << "height: " << r.height << '\n'
      << "cherries: " << r.cherries << '\n';
  if (r.n > 1) {
    out << "root_partition: " << r.root_partition.first << ',' << r.root_partition.second << '\n';
  }
  out << "colless_minimal: " << yes_no(cmin) << '\n'
      << "sackin_minimal: " << yes_no(smin) << '\n';
}

void print_summary(const CensusResult& r, bool as_json, std::ostream& out) {
  auto parts = [](const std::set<Partition>& s) {
    std::string text;
    for (const auto& [a, b] : s) {
      if (!text.empty()) text += ' ';
      text += std::to_string(a) + ',' + std::to_string(b);
    }
    return text;
  };
  if (as_json) {
    auto part_json = [](const std::set<Partition>& s) {
      json arr = json::array();
      for (const auto& [a, b] : s) arr.push_back({a, b});
      return arr;
    };
    json j = {{"n", r.n},
              {"total_shapes", r.total_shapes.str()},
              {"colless_min_value", r.colless_min_value},
              {"colless_min_count", r.colless_min_count.str()},
              {"sackin_min_value", r.sackin_min_value},
              {"sackin_min_count", r.sackin_min_count.str()},
              {"colless_min_partitions", part_json(r.colless_min_partitions)},
              {"sackin_min_partitions", part_json(r.sackin_min_partitions)},
              {"colless_not_sackin", r.colless_not_sackin.str()},
              {"colless_min_odd_odd", r.colless_min_odd_odd.str()},
              {"sackin_min_odd_odd", r.sackin_min_odd_odd.str()}};
    out << j.dump() << '\n';
    return;
  }
  out << "n: " << r.n << '\n'
      << "total_shapes: " << r.total_shapes << '\n'
      << "colless_min_value: " << r.colless_min_value << '\n'
      << "colless_min_count: " << r.colless_min_count << '\n'
      << "sackin_min_value: " << r.sackin_min_value << '\n'
      << "sackin_min_count: " << r.sackin_min_count << '\n'
      << "colless_min_partitions: " << parts(r.colless_min_partitions) << '\n'
      << "sackin_min_partitions: " << parts(r.sackin_min_partitions) << '\n'
      << "colless_not_sackin: " << r.colless_not_sackin << '\n'
      << "colless_min_odd_odd: " << r.colless_min_odd_odd << '\n'
      << "sackin_min_odd_odd: " << r.sackin_min_odd_odd << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Colless and Sackin balance of rooted binary tree shapes", "treebal"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::uint32_t> limit_flag;
  bool as_json = false;
  app.add_option("--limit", limit_flag, "enumeration guard (default from TREEBAL_ENUM_LIMIT or 24)")
      ->check(CLI::Range(1, 64));
  app.add_flag("--json", as_json, "machine-readable output");

  // index
  auto* index_cmd = app.add_subcommand("index", "balance indices of one tree");
  std::optional<std::string> newick_text;
  bool from_stdin = false;
  BuilderSpec index_spec;
  auto* newick_opt = index_cmd->add_option("--newick", newick_text, "Newick text");
  auto* stdin_opt = index_cmd->add_flag("--stdin", from_stdin, "read Newick from stdin");
  add_builder_options(index_cmd, index_spec, "--build");
  newick_opt->excludes(stdin_opt);

  // min
  auto* min_cmd = app.add_subcommand("min", "minimal Colless index c_n");
  std::uint64_t min_n = 0;
  std::string method = "recursive";
  min_cmd->add_option("--n", min_n)->required()->check(CLI::Range(std::uint64_t{1}, kMaxMinN));
  min_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"recursive", "explicit", "both"}));

  // build
  auto* build_cmd = app.add_subcommand("build", "print a builder's tree as Newick");
  BuilderSpec build_spec;
  add_builder_options(build_cmd, build_spec, "--kind");
  build_cmd->get_option("--kind")->required();

  // qb
  auto* qb_cmd = app.add_subcommand("qb", "root partitions of Colless-minimal trees");
  std::uint64_t qb_n = 0;
  qb_cmd->add_option("--n", qb_n)->required()->check(CLI::Range(std::uint64_t{2}, kMaxQbN));

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "all shapes on n leaves");
  std::uint32_t enum_n = 0;
  bool summary = false;
  enum_cmd->add_option("--n", enum_n)->required()->check(CLI::Range(1, 64));
  enum_cmd->add_flag("--summary", summary, "census summary instead of the shapes");

  // count
  auto* count_cmd = app.add_subcommand("count", "number of minimal trees for n = 1..max");
  std::string count_kind;
  std::uint64_t count_max = 0;
  count_cmd->add_option("--kind", count_kind)
      ->required()
      ->check(CLI::IsMember({"colless", "sackin", "bound-b"}));
  count_cmd->add_option("--max", count_max)
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, kMaxCountN));

  // curve
  auto* curve_cmd = app.add_subcommand("curve", "CSV of n, c_n, 2^(k_n-1)");
  std::uint64_t curve_max = 0;
  std::optional<std::string> curve_out;
  curve_cmd->add_option("--max", curve_max)
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, kMaxCurveN));
  curve_cmd->add_option("--out", curve_out, "CSV path (stdout if omitted)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the self-checks");
  VerifyOptions verify_opts;
  verify_cmd->add_option("--enum", verify_opts.max_n_enum)
      ->capture_default_str()
      ->check(CLI::Range(1, 64));
  verify_cmd->add_option("--formula", verify_opts.max_n_formula)
      ->capture_default_str()
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 20));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  const std::uint32_t limit = limit_flag ? *limit_flag : enumeration_limit();

  try {
    if (*index_cmd) {
      const int sources = (newick_text ? 1 : 0) + (from_stdin ? 1 : 0) +
                          (index_spec.kind.empty() ? 0 : 1);
      if (sources != 1) throw InvalidInput("index needs exactly one of --newick, --stdin, --build");
      TreeShape tree;
      if (newick_text) {
        tree = parse_newick(*newick_text);
      } else if (from_stdin) {
        const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        tree = parse_newick(text);
      } else {
        tree = build_from_spec(index_spec);
      }
      print_report(tree, as_json, out);
    } else if (*min_cmd) {
      const bool rec = method != "explicit", exp = method != "recursive";
      const std::uint64_t r = rec ? min_colless_recursive(min_n) : 0;
      const std::uint64_t x = exp ? min_colless_explicit(min_n) : 0;
      if (as_json) {
        json j = {{"n", min_n}};
        if (rec) j["recursive"] = r;
        if (exp) j["explicit"] = x;
        out << j.dump() << '\n';
      } else if (rec && exp) {
        out << r << ", " << x << '\n';
      } else {
        out << (rec ? r : x) << '\n';
      }
      if (rec && exp && r != x) {
        err << "mismatch at n=" << min_n << '\n';
        return kVerificationFailed;
      }
    } else if (*build_cmd) {
      const TreeShape tree = build_from_spec(build_spec);
      if (as_json) {
        out << json{{"kind", build_spec.kind}, {"n", tree.leaf_count()}, {"newick", to_newick(tree)}}.dump()
            << '\n';
      } else {
        out << to_newick(tree) << '\n';
      }
    } else if (*qb_cmd) {
      const auto parts = qb_set(qb_n);
      if (as_json) {
        json arr = json::array();
        for (const auto& [a, b] : parts) arr.push_back({a, b});
        out << arr.dump() << '\n';
      } else {
        for (const auto& [a, b] : parts) out << a << ',' << b << '\n';
      }
    } else if (*enum_cmd) {
      if (summary) {
        print_summary(census(enum_n, false, limit), as_json, out);
      } else if (as_json) {
        json arr = json::array();
        for_each_shape(enum_n, [&](const TreeShape& t) { arr.push_back(to_newick(t)); }, limit);
        out << arr.dump() << '\n';
      } else {
        for_each_shape(enum_n, [&](const TreeShape& t) { out << to_newick(t) << '\n'; }, limit);
      }
    } else if (*count_cmd) {
      BigCount (*fn)(std::uint64_t) = count_kind == "colless"  ? count_colless_minimal
                                      : count_kind == "sackin" ? count_sackin_minimal
                                                               : count_bound_b;
      json arr = json::array();
      for (std::uint64_t n = 1; n <= count_max; ++n) {
        const BigCount v = fn(n);
        if (as_json) {
          arr.push_back(v.str());
        } else {
          out << v << '\n';
        }
      }
      if (as_json) out << arr.dump() << '\n';
    } else if (*curve_cmd) {
      std::ofstream file;
      if (curve_out) {
        file.open(*curve_out);
        if (!file) {
          err << "cannot open " << *curve_out << " for writing\n";
          return kInvalidInput;
        }
      }
      std::ostream& csv = curve_out ? static_cast<std::ostream&>(file) : out;
      csv << "n,c_n,g_n\n";
      for (std::uint64_t n = 1; n <= curve_max; ++n) {
        csv << n << ',' << min_colless_explicit(n) << ',';
        if (n >= 2) csv << max_min_bound(n);
        csv << '\n';
      }
      csv.flush();
      if (!csv) {
        err << "write failed" << (curve_out ? " for " + *curve_out : std::string()) << '\n';
        return kInvalidInput;
      }
    } else if (*verify_cmd) {
      if (verify_opts.max_n_enum > limit) {
        throw SizeLimitError("--enum " + std::to_string(verify_opts.max_n_enum) +
                             " exceeds the enumeration limit " + std::to_string(limit));
      }
      verify_opts.enum_limit = limit;
      bool all = true;
      json arr = json::array();
      for (const auto& c : run_verification(verify_opts)) {
        all = all && c.passed;
        if (as_json) {
          arr.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        } else {
          out << (c.passed ? "PASS " : "FAIL ") << c.name;
          if (!c.passed) out << ": " << c.detail;
          out << '\n';
        }
      }
      if (as_json) out << arr.dump() << '\n';
      return all ? kOk : kVerificationFailed;
    }
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kGuardExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kOk;
}

}  // namespace treebal::cli
