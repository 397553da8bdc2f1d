// Command-line front end: mine, gen, compare.
//
// Exit codes: 0 ok, 1 usage, 2 parse/validation, 3 divergence,
// 4 oracle refusal.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mdus/compare.hpp"
#include "mdus/errors.hpp"
#include "mdus/generator.hpp"
#include "mdus/io.hpp"

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// "MxV": M dimensions with V values each.
void parse_dims_spec(const std::string& spec, mdus::GenParams& params) {
  const auto x = spec.find('x');
  if (x == std::string::npos || x == 0 || x + 1 == spec.size())
    throw mdus::ParameterError("bad --dims spec '" + spec +
                               "', expected MxV (e.g. 3x4)");
  try {
    params.num_dims = std::stoi(spec.substr(0, x));
    params.values_per_dim = std::stoi(spec.substr(x + 1));
  } catch (const std::exception&) {
    throw mdus::ParameterError("bad --dims spec '" + spec + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-dimensional high-utility sequential pattern mining"};
  app.require_subcommand(1);

  // mine
  auto* mine = app.add_subcommand("mine", "Mine mdHUSPs from a database");
  std::string algo = "sd", db_file, utab_file, delta_text, out_file,
              stats_file;
  int threads = 1;
  mine->add_option("--algo", algo, "em|sd|oracle")
      ->check(CLI::IsMember({"em", "sd", "oracle"}));
  mine->add_option("--db", db_file, "database file")->required();
  mine->add_option("--utab", utab_file, "profit table file")->required();
  mine->add_option("--delta", delta_text, "minimum utility ratio in (0,1]")
      ->required();
  mine->add_option("--out", out_file, "pattern output file");
  mine->add_option("--stats", stats_file, "stats JSON output file");
  mine->add_option("--threads", threads, "worker thread count");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a synthetic database");
  std::string out_prefix, dims_spec = "3x4";
  mdus::GenParams params;
  gen->add_option("--out-prefix", out_prefix, "output prefix")->required();
  gen->add_option("--transactions", params.num_transactions, "transactions");
  gen->add_option("--items", params.num_items, "distinct items");
  gen->add_option("--dims", dims_spec, "MxV: M dimensions, V values each");
  gen->add_option("--avg-itemsets", params.avg_itemsets_per_seq,
                  "average itemsets per sequence");
  gen->add_option("--avg-items", params.avg_items_per_itemset,
                  "average items per itemset");
  gen->add_option("--seed", params.seed, "RNG seed");

  // compare
  auto* cmp = app.add_subcommand("compare", "Run algorithms and diff results");
  std::string deltas_text, algos_text = "em,sd", cmp_db, cmp_utab,
              cmp_prefix;
  int cmp_threads = 1;
  cmp->add_option("--db", cmp_db, "database file")->required();
  cmp->add_option("--utab", cmp_utab, "profit table file")->required();
  cmp->add_option("--deltas", deltas_text, "comma-separated ratios")
      ->required();
  cmp->add_option("--algos", algos_text, "comma-separated subset of em,sd,oracle");
  cmp->add_option("--out-prefix", cmp_prefix, "per-run output prefix");
  cmp->add_option("--threads", cmp_threads, "worker thread count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*mine) {
      mdus::QSDatabase db = mdus::parse_database(db_file, utab_file);
      mdus::MiningReport report = mdus::run_algo(
          algo, db, mdus::Delta::parse(delta_text), threads);
      mdus::write_results(report, out_file, stats_file);
      std::cout << mdus::stats_json(report.stats) << '\n';
    } else if (*gen) {
      parse_dims_spec(dims_spec, params);
      mdus::QSDatabase db = mdus::gen_synthetic(params);
      mdus::write_database(db, out_prefix + ".db", out_prefix + ".utab");
      std::cout << "wrote " << out_prefix << ".db and " << out_prefix
                << ".utab (" << db.transactions.size() << " transactions)\n";
    } else if (*cmp) {
      mdus::QSDatabase db = mdus::parse_database(cmp_db, cmp_utab);
      mdus::CompareOptions opts;
      for (const auto& d : split_list(deltas_text))
        opts.deltas.push_back(mdus::Delta::parse(d));
      opts.algos = split_list(algos_text);
      opts.threads = cmp_threads;
      opts.out_prefix = cmp_prefix;
      if (!mdus::run_compare(db, opts, std::cout)) return 3;
    }
  } catch (const mdus::OracleRefusal& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const mdus::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const mdus::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
