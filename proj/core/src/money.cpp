#include "mdus/money.hpp"

#include <cctype>

#include "mdus/errors.hpp"

namespace mdus {

Money Money::parse(std::string_view text) {
  if (text.empty()) throw ValidationError("empty money value");
  std::size_t i = 0;
  std::int64_t whole = 0;
  bool any = false;
  for (; i < text.size() && text[i] != '.'; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ValidationError("bad money value '" + std::string(text) + "'");
    whole = whole * 10 + (text[i] - '0');
    any = true;
  }
  std::int64_t frac = 0;
  if (i < text.size()) {
    ++i;  // skip '.'
    int digits = 0;
    for (; i < text.size(); ++i, ++digits) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])) || digits >= 4)
        throw ValidationError("bad money value '" + std::string(text) + "'");
      frac = frac * 10 + (text[i] - '0');
      any = true;
    }
    for (; digits < 4; ++digits) frac *= 10;
  }
  if (!any) throw ValidationError("bad money value '" + std::string(text) + "'");
  return Money::from_raw(whole * kScale + frac);
}

std::string Money::str() const {
  std::int64_t v = raw_;
  std::string sign;
  if (v < 0) {
    sign = "-";
    v = -v;
  }
  std::string out = sign + std::to_string(v / kScale);
  std::int64_t frac = v % kScale;
  if (frac != 0) {
    std::string f = std::to_string(frac);
    f.insert(f.begin(), 4 - f.size(), '0');
    while (f.back() == '0') f.pop_back();
    out += "." + f;
  }
  return out;
}

Delta Delta::parse(std::string_view text) {
  if (text.empty()) throw ParameterError("empty delta");
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::size_t i = 0;
  bool any = false;
  for (; i < text.size() && text[i] != '.'; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParameterError("bad delta '" + std::string(text) + "'");
    num = num * 10 + (text[i] - '0');
    any = true;
  }
  if (i < text.size()) {
    ++i;
    int digits = 0;
    for (; i < text.size(); ++i, ++digits) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])) || digits >= 9)
        throw ParameterError("bad delta '" + std::string(text) + "'");
      num = num * 10 + (text[i] - '0');
      den *= 10;
      any = true;
    }
  }
  if (!any) throw ParameterError("bad delta '" + std::string(text) + "'");
  if (num <= 0 || num > den)
    throw ParameterError("delta must be in (0, 1], got '" + std::string(text) +
                         "'");
  return Delta(num, den, std::string(text));
}

Money min_utility(Money db_util, const Delta& delta) {
  if (db_util.raw() < 0) throw ParameterError("negative database utility");
  __int128 scaled = static_cast<__int128>(db_util.raw()) * delta.num();
  return Money::from_raw(static_cast<std::int64_t>(scaled / delta.den()));
}

}  // namespace mdus
