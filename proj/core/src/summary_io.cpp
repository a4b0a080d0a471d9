#include <sstream>

#include <json.hpp>

#include "stabidx/enumerate.hpp"
#include "stabidx/errors.hpp"

namespace stabidx {

namespace {

using nlohmann::json;

json theta_json(const Theta& t) {
  if (t.is_infinite()) return json{{"kind", "infinite"}};
  return json{{"kind", "finite"}, {"value", t.value()}};
}

Theta theta_from(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "infinite") return Theta::infinite();
  if (kind == "finite") return Theta::finite(j.at("value").get<std::uint64_t>());
  throw ParseError(0, "unknown theta kind '" + kind + "'");
}

}  // namespace

std::string summary_to_json(const EnumSummary& s, int indent) {
  json doc;
  doc["format_version"] = kSummaryFormatVersion;
  doc["n"] = s.n;
  doc["mode"] = s.seed ? "sampled" : "exhaustive";
  doc["range"] = s.range ? json{{"lo", s.range->first}, {"hi", s.range->second}} : json(nullptr);
  doc["seed"] = s.seed ? json(*s.seed) : json(nullptr);
  doc["total"] = s.total;
  doc["max_finite"] = s.max_finite ? json(*s.max_finite) : json(nullptr);
  json hist = json::array();
  for (const auto& [theta, count] : s.histogram) hist.push_back({{"theta", theta_json(theta)}, {"count", count}});
  doc["histogram"] = std::move(hist);
  return doc.dump(indent);
}

EnumSummary summary_from_json(const std::string& text) {
  EnumSummary s;
  try {
    const json doc = json::parse(text);
    if (doc.at("format_version").get<int>() != kSummaryFormatVersion)
      throw ParseError(0, "unsupported summary format version");
    s.n = doc.at("n").get<std::size_t>();
    if (const auto& r = doc.at("range"); !r.is_null())
      s.range = std::pair{r.at("lo").get<Code>(), r.at("hi").get<Code>()};
    if (const auto& seed = doc.at("seed"); !seed.is_null()) s.seed = seed.get<std::uint64_t>();
    for (const auto& entry : doc.at("histogram")) s.add(theta_from(entry.at("theta")), entry.at("count").get<std::uint64_t>());
    if (s.total != doc.at("total").get<std::uint64_t>()) throw ParseError(0, "histogram counts do not sum to total");
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed summary document: ") + e.what());
  }
  return s;
}

std::string summary_to_csv(const EnumSummary& s) {
  std::ostringstream os;
  os << "theta,count\n";
  for (const auto& [theta, count] : s.histogram) os << theta.to_string() << ',' << count << '\n';
  return os.str();
}

}  // namespace stabidx
