#pragma once

#include <iosfwd>
#include <string>

#include "mdus/model.hpp"
#include "mdus/report.hpp"

namespace mdus {

/// Parses the tab-separated database format:
///   #DIMS<TAB>name1<TAB>...<TAB>nameM          (bare "#DIMS" when M = 0)
///   SID<TAB>v1<TAB>...<TAB>vM<TAB>|<TAB>item:qty item:qty -1 item:qty -2
/// and the profit table ("item<TAB>profit" per line). Throws ValidationError
/// with a line number on malformed input.
QSDatabase parse_database(const std::string& db_path,
                          const std::string& utab_path);

void write_database(const QSDatabase& db, const std::string& db_path,
                    const std::string& utab_path);

/// One canonical pattern output line:
///   (v1,v2,...,vM)<TAB><[i1 i2][i3]><TAB>#UTIL:<amount>
std::string render_pattern_line(const MultiDimPattern& p, Money utility);

/// Serializes the stats record as a single JSON object.
std::string stats_json(const MiningStats& stats);

/// Writes patterns (canonical order, count header first) and the stats JSON.
void write_results(const MiningReport& report, const std::string& out_path,
                   const std::string& stats_path);

}  // namespace mdus
