#include "cli.hpp"

#include <charconv>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stabidx/connectivity.hpp"
#include "stabidx/edge_list.hpp"
#include "stabidx/enumerate.hpp"
#include "stabidx/errors.hpp"
#include "stabidx/family_spec.hpp"
#include "stabidx/stable_index.hpp"
#include "stabidx/theorem.hpp"

namespace stabidx::cli {

namespace {

using nlohmann::json;

json theta_json(const Theta& t) {
  return t.is_infinite() ? json{{"kind", "infinite"}} : json{{"kind", "finite"}, {"value", t.value()}};
}

json arcs_json(const Digraph& d) {
  json arcs = json::array();
  for (const auto& [u, v] : d.arcs()) arcs.push_back({u, v});
  return arcs;
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(0, "bad " + what + " '" + text + "'");
  return value;
}

// "7" or "7..14".
std::vector<std::size_t> parse_order_range(const std::string& text) {
  const auto dots = text.find("..");
  std::size_t lo = 0;
  std::size_t hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_size(text, "order");
  } else {
    lo = parse_size(text.substr(0, dots), "order");
    hi = parse_size(text.substr(dots + 2), "order");
  }
  if (lo == 0 || hi < lo) throw ParseError(0, "bad order range '" + text + "'");
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

struct Options {
  std::string format = "text";
  std::string summary_format = "json";

  // theta / construct
  std::string input;
  std::string family;
  bool explain = false;
  std::string algorithm = "bounded";

  // set / gaps / verify / witness / enumerate
  std::string order;
  std::string order_flag;
  std::string target;
  bool witnesses = false;
  bool exhaustive = false;
  std::size_t workers = 1;
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 1;
  std::size_t ceiling = kDefaultCeiling;
};

std::string order_text(const Options& o) {
  if (!o.order_flag.empty()) return o.order_flag;
  if (o.order.empty()) throw ParseError(0, "an order n (or --n) is required");
  return o.order;
}

void render_digraph(std::ostream& out, const Digraph& d, const std::string& format, json extra = json::object()) {
  if (format == "json") {
    extra["order"] = d.order();
    extra["arcs"] = arcs_json(d);
    out << extra.dump(2) << '\n';
  } else {
    write_edge_list(out, d);
  }
}

int cmd_theta(const Options& o, std::ostream& out) {
  if (o.input.empty() == o.family.empty()) throw ParseError(0, "give exactly one of an edge-list path or --family");
  Digraph d = !o.family.empty() ? build(parse_family(o.family))
              : o.input == "-"  ? read_edge_list(std::cin)
                                : read_edge_list_file(o.input);
  std::optional<DuplicateWalk> dup;
  Theta theta = Theta::infinite();
  if (o.algorithm == "cycle") {
    theta = stable_index_cycle_detect(d);
    if (o.explain) dup = explain_stable_index(d).first_duplicate;
  } else {
    auto r = explain_stable_index(d);
    theta = r.theta;
    dup = r.first_duplicate;
  }
  if (o.format == "json") {
    json doc{{"order", d.order()}, {"theta", theta_json(theta)}, {"algorithm", o.algorithm}};
    if (o.explain)
      doc["explain"] = dup ? json{{"from", dup->from}, {"to", dup->to}, {"length", dup->length}} : json(nullptr);
    out << doc.dump(2) << '\n';
  } else {
    out << theta.to_string() << '\n';
    out << "algorithm: " << o.algorithm << '\n';
    if (o.explain) {
      if (dup)
        out << "first duplicate walks: " << dup->from << " -> " << dup->to << " at length " << dup->length << '\n';
      else
        out << "first duplicate walks: none\n";
    }
  }
  return kOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const FamilySpec spec = parse_family(o.family);
  render_digraph(out, build(spec), o.format, json{{"family", to_string(spec)}});
  return kOk;
}

int cmd_set(const Options& o, std::ostream& out) {
  const auto orders = parse_order_range(order_text(o));
  json docs = json::array();
  if (o.format == "csv") out << "n,theta\n";
  for (auto n : orders) {
    const IndexSet set = theta_set(n);
    if (o.format == "json") {
      docs.push_back({{"n", n}, {"finite_members", set.finite_members}, {"has_infinity", set.has_infinity},
                      {"text", set.to_string()}});
    } else if (o.format == "csv") {
      for (auto k : set.finite_members) out << n << ',' << k << '\n';
      if (set.has_infinity) out << n << ",inf\n";
    } else {
      if (orders.size() > 1) out << n << ": ";
      out << set.to_string() << '\n';
    }
  }
  if (o.format == "json") out << (orders.size() == 1 ? docs[0] : docs).dump(2) << '\n';
  return kOk;
}

int cmd_gaps(const Options& o, std::ostream& out) {
  const auto orders = parse_order_range(order_text(o));
  json docs = json::array();
  if (o.format == "csv") out << "n,gap\n";
  for (auto n : orders) {
    const GapReport report = gaps(n, o.witnesses);
    if (o.format == "json") {
      json doc{{"n", n}, {"gaps", report.gaps}, {"s_max", s_max(n)}};
      if (o.witnesses) {
        json w = json::object();
        for (const auto& [k, spec] : report.witnessed) w[std::to_string(k)] = to_string(spec);
        doc["witnessed"] = std::move(w);
      }
      docs.push_back(std::move(doc));
    } else if (o.format == "csv") {
      for (auto k : report.gaps) out << n << ',' << k << '\n';
    } else {
      if (orders.size() > 1) out << n << ": ";
      out << format_ranges(report.gaps) << '\n';
      for (const auto& [k, spec] : report.witnessed) out << "  " << k << " <- " << to_string(spec) << '\n';
    }
  }
  if (o.format == "json") out << (orders.size() == 1 ? docs[0] : docs).dump(2) << '\n';
  return kOk;
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
  const std::size_t n = parse_size(order_text(o), "order");
  const Theta m = Theta::parse(o.target);
  const Witness w = witness(n, m);
  const std::size_t base = order_of(w.family);
  err << "family: " << to_string(w.family);
  if (base < n) err << " (order " << base << ", padded to " << n << ")";
  err << '\n';
  render_digraph(out, w.digraph, o.format,
                 json{{"family", to_string(w.family)}, {"target", theta_json(m)}, {"theta", theta_json(w.theta)}});
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const std::size_t n = parse_size(order_text(o), "order");
  EnumSummary summary;
  if (o.sample) {
    if (n > kMaxSampleOrder)
      throw Error(ErrorKind::CeilingExceeded, "sampling supports orders up to " + std::to_string(kMaxSampleOrder));
    summary = enumerate_random(n, *o.sample, o.seed);
  } else {
    summary = enumerate_parallel(n, o.workers, o.ceiling);
  }
  if (o.summary_format == "csv") {
    out << summary_to_csv(summary);
  } else if (o.summary_format == "text") {
    out << "n " << summary.n << " total " << summary.total << " max_finite "
        << (summary.max_finite ? std::to_string(*summary.max_finite) : "none") << '\n';
    for (const auto& [theta, count] : summary.histogram) out << theta.to_string() << ' ' << count << '\n';
  } else {
    out << summary_to_json(summary) << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto orders = parse_order_range(order_text(o));
  VerifyOptions vo;
  vo.workers = o.workers;
  vo.exhaustive_up_to = o.exhaustive ? kDefaultCeiling : 4;
  bool all_ok = true;
  json docs = json::array();
  for (auto n : orders) {
    const TheoremReport report = verify_theorem(n, vo);
    all_ok = all_ok && report.passed();
    if (o.format == "json")
      docs.push_back(json::parse(report_to_json(report)));
    else
      out << report_to_lines(report);
  }
  if (o.format == "json") out << (orders.size() == 1 ? docs[0] : docs).dump(2) << '\n';
  return all_ok ? kOk : kInternal;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAchievable: return kNotAchievable;
    case ErrorKind::CeilingExceeded: return kCeilingExceeded;
    case ErrorKind::SearchExhausted: return kInternal;
    default: return kInputError;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Stable index of digraphs: compute, construct, enumerate and verify"};
  app.require_subcommand(1);
  const std::vector<std::string> text_json{"text", "json"};
  const std::vector<std::string> all_formats{"text", "json", "csv"};

  auto* theta = app.add_subcommand("theta", "Stable index of a digraph (edge-list file or --family)");
  theta->add_option("input", o.input, "Edge-list file ('-' for stdin)");
  theta->add_option("--family", o.family, "Family spec, e.g. g:2,2,3");
  theta->add_flag("--explain", o.explain, "Report where the first duplicate walk pair appears");
  theta->add_option("--algorithm", o.algorithm, "bounded | cycle")->check(CLI::IsMember({"bounded", "cycle"}));
  theta->add_option("--format", o.format)->check(CLI::IsMember(text_json));

  auto* construct = app.add_subcommand("construct", "Emit the edge list of a family member");
  construct->add_option("family", o.family, "cycle:p complete:n lollipop:n g:p,k,q G:p,q,l,t,n")->required();
  construct->add_option("--format", o.format)->check(CLI::IsMember(text_json));

  auto* set = app.add_subcommand("set", "The set of stable indices of order-n digraphs");
  set->add_option("order", o.order, "Order or range a..b");
  set->add_option("--n", o.order_flag, "Order or range a..b");
  set->add_option("--format", o.format)->check(CLI::IsMember(all_formats));

  auto* gap = app.add_subcommand("gaps", "Values in [1, s(n)] attained by no order-n digraph");
  gap->add_option("order", o.order, "Order or range a..b");
  gap->add_option("--n", o.order_flag, "Order or range a..b");
  gap->add_flag("--witnesses", o.witnesses, "Also list the construction behind each member");
  gap->add_option("--format", o.format)->check(CLI::IsMember(all_formats));

  auto* wit = app.add_subcommand("witness", "An order-n digraph with stable index m");
  wit->add_option("order", o.order, "Order")->required();
  wit->add_option("m", o.target, "Target index or 'inf'")->required();
  wit->add_option("--format", o.format)->check(CLI::IsMember(text_json));

  auto* enumerate = app.add_subcommand("enumerate", "Histogram of stable indices over order-n digraphs");
  enumerate->add_option("order", o.order, "Order")->required();
  enumerate->add_option("--workers", o.workers, "Worker threads (0 = all cores)");
  enumerate->add_option("--sample", o.sample, "Sample this many random digraphs instead");
  enumerate->add_option("--seed", o.seed, "Seed for --sample");
  enumerate->add_option("--ceiling", o.ceiling, "Largest order enumerated exhaustively");
  enumerate->add_option("--format", o.summary_format, "json (default) | csv | text")->check(CLI::IsMember(all_formats));

  auto* verify = app.add_subcommand("verify", "Witness every member of the index set for n (or a..b)");
  verify->add_option("order", o.order, "Order or range a..b");
  verify->add_option("--n", o.order_flag, "Order or range a..b");
  verify->add_flag("--exhaustive", o.exhaustive, "Exhaustive cross-check up to order 5 (default 4)");
  verify->add_option("--workers", o.workers, "Worker threads for the exhaustive check");
  verify->add_option("--format", o.format)->check(CLI::IsMember(text_json));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  try {
    if (theta->parsed()) return cmd_theta(o, out);
    if (construct->parsed()) return cmd_construct(o, out);
    if (set->parsed()) return cmd_set(o, out);
    if (gap->parsed()) return cmd_gaps(o, out);
    if (wit->parsed()) return cmd_witness(o, out, err);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"stabidx"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace stabidx::cli
