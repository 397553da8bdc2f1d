#include "mdus/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mdus/errors.hpp"

namespace mdus {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  return out;
}

[[noreturn]] void fail(const std::string& path, std::size_t line,
                       const std::string& what) {
  throw ValidationError(path + ":" + std::to_string(line) + ": " + what);
}

QSequence parse_sequence(const std::string& text, const std::string& path,
                         std::size_t lineno) {
  QSequence seq;
  QItemset current;
  bool terminated = false;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (terminated) fail(path, lineno, "tokens after -2 terminator");
    if (tok == "-1") {
      if (current.entries.empty())
        fail(path, lineno, "empty itemset before -1");
      seq.itemsets.push_back(std::move(current));
      current = {};
    } else if (tok == "-2") {
      if (!current.entries.empty()) seq.itemsets.push_back(std::move(current));
      terminated = true;
    } else {
      const auto colon = tok.rfind(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
        fail(path, lineno, "bad item token '" + tok + "'");
      QItem qi;
      qi.item = tok.substr(0, colon);
      try {
        qi.quantity = std::stoll(tok.substr(colon + 1));
      } catch (const std::exception&) {
        fail(path, lineno, "bad quantity in '" + tok + "'");
      }
      if (qi.quantity < 1)
        fail(path, lineno, "quantity must be >= 1 in '" + tok + "'");
      if (!current.entries.empty() && !(current.entries.back().item < qi.item))
        fail(path, lineno, "itemset not strictly ordered at '" + tok + "'");
      current.entries.push_back(std::move(qi));
    }
  }
  if (!terminated) fail(path, lineno, "missing -2 terminator");
  return seq;
}

}  // namespace

QSDatabase parse_database(const std::string& db_path,
                          const std::string& utab_path) {
  QSDatabase db;

  {
    std::ifstream in(utab_path);
    if (!in) throw ValidationError("cannot open '" + utab_path + "'");
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      const auto fields = split(line, '\t');
      if (fields.size() != 2)
        fail(utab_path, lineno, "expected 'item<TAB>profit'");
      try {
        validate_item(fields[0]);
        db.profits.set(fields[0], Money::parse(fields[1]));
      } catch (const ValidationError& e) {
        fail(utab_path, lineno, e.what());
      }
    }
  }

  std::ifstream in(db_path);
  if (!in) throw ValidationError("cannot open '" + db_path + "'");
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) fail(db_path, 1, "missing #DIMS header");
  ++lineno;
  {
    auto fields = split(line, '\t');
    if (fields.empty() || fields[0] != "#DIMS")
      fail(db_path, lineno, "first line must start with #DIMS");
    db.schema.names.assign(fields.begin() + 1, fields.end());
    for (const auto& n : db.schema.names)
      if (n.empty()) fail(db_path, lineno, "empty dimension name");
  }
  const std::size_t arity = db.schema.arity();
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (fields.size() != arity + 3)
      fail(db_path, lineno,
           "expected " + std::to_string(arity + 3) + " fields, got " +
               std::to_string(fields.size()));
    Transaction tx;
    tx.sid = fields[0];
    tx.dims.assign(fields.begin() + 1, fields.begin() + 1 + arity);
    if (fields[arity + 1] != "|")
      fail(db_path, lineno, "expected '|' before the sequence");
    tx.seq = parse_sequence(fields[arity + 2], db_path, lineno);
    db.transactions.push_back(std::move(tx));
  }
  try {
    db.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(db_path + ": " + e.what());
  }
  return db;
}

void write_database(const QSDatabase& db, const std::string& db_path,
                    const std::string& utab_path) {
  {
    std::ofstream out(utab_path);
    if (!out) throw Error("cannot write '" + utab_path + "'");
    for (const auto& [item, profit] : db.profits.entries())
      out << item << '\t' << profit.str() << '\n';
  }
  std::ofstream out(db_path);
  if (!out) throw Error("cannot write '" + db_path + "'");
  out << "#DIMS";
  for (const auto& name : db.schema.names) out << '\t' << name;
  out << '\n';
  for (const auto& tx : db.transactions) {
    out << tx.sid;
    for (const auto& v : tx.dims) out << '\t' << v;
    out << "\t|\t";
    bool first_set = true;
    for (const auto& is : tx.seq.itemsets) {
      if (!first_set) out << " -1 ";
      first_set = false;
      bool first = true;
      for (const auto& qi : is.entries) {
        if (!first) out << ' ';
        first = false;
        out << qi.item << ':' << qi.quantity;
      }
    }
    out << (first_set ? "-2" : " -2") << '\n';
  }
}

std::string render_pattern_line(const MultiDimPattern& p, Money utility) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.dims.size(); ++i) {
    if (i) out += ',';
    out += p.dims[i];
  }
  out += ")\t" + p.seq.str() + "\t#UTIL:" + utility.str();
  return out;
}

std::string stats_json(const MiningStats& stats) {
  nlohmann::ordered_json j;
  j["algo"] = stats.algo;
  j["delta"] = std::stod(stats.delta);
  j["min_util"] = stats.min_util.str();
  j["db_util"] = stats.db_util.str();
  j["candidates_seq"] = stats.candidates_seq;
  j["candidates_dim"] = stats.candidates_dim;
  j["candidates_total"] = stats.candidates_total;
  j["pattern_count"] = stats.pattern_count;
  j["runtime_ms"] = stats.runtime_ms;
  return j.dump();
}

void write_results(const MiningReport& report, const std::string& out_path,
                   const std::string& stats_path) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << "#MDHUSPS\t" << report.patterns.size() << '\n';
    for (const auto& [p, u] : report.patterns)
      out << render_pattern_line(p, u) << '\n';
  }
  if (!stats_path.empty()) {
    std::ofstream out(stats_path);
    if (!out) throw Error("cannot write '" + stats_path + "'");
    out << stats_json(report.stats) << '\n';
  }
}

}  // namespace mdus
