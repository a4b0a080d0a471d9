#include "stabidx/theorem.hpp"

#include <chrono>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "stabidx/enumerate.hpp"
#include "stabidx/errors.hpp"
#include "stabidx/families.hpp"
#include "stabidx/stable_index.hpp"

namespace stabidx {

std::string format_ranges(const std::set<std::uint64_t>& values) {
  std::string out;
  for (auto it = values.begin(); it != values.end();) {
    const std::uint64_t first = *it;
    std::uint64_t last = first;
    ++it;
    while (it != values.end() && *it == last + 1) last = *it++;
    if (!out.empty()) out += ',';
    out += std::to_string(first);
    if (last != first) out += "-" + std::to_string(last);
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::string out = format_ranges(finite_members);
  if (has_infinity) out += out.empty() ? "inf" : ",inf";
  return out;
}

IndexSet theta_set(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::ParameterOutOfRange, "order must be at least 1");
  IndexSet set;
  set.n = n;
  set.has_infinity = true;
  if (n == 1) return set;
  const std::uint64_t top = n >= 7 ? s_max(n - 1) + 1 : s_max(n);
  for (std::uint64_t k = 1; k <= top; ++k) set.finite_members.insert(k);
  if (n >= 7)
    for (std::uint64_t p = 1; p < n; ++p) set.finite_members.insert(std::lcm(p, n - p));
  return set;
}

namespace {

std::optional<Witness> try_candidate(const FamilySpec& spec, std::size_t n, const Theta& m) {
  if (order_of(spec) > n) return std::nullopt;
  Digraph d = pad_isolated(build(spec), n);
  const Theta got = stable_index(d);
  if (got != m) return std::nullopt;
  return Witness{std::move(d), spec, got};
}

}  // namespace

Witness witness(std::size_t n, const Theta& m) {
  const IndexSet set = theta_set(n);
  if (!set.contains(m))
    throw Error(ErrorKind::NotAchievable,
                m.to_string() + " is not the stable index of any digraph of order " + std::to_string(n));

  if (m.is_infinite()) {
    if (auto w = try_candidate(CycleSpec{n}, n, m)) return *w;
  } else {
    const std::uint64_t target = m.value();
    if (target == 1)
      if (auto w = try_candidate(CompleteSpec{n}, n, m)) return *w;
    if (target == n && n >= 3)
      if (auto w = try_candidate(LollipopSpec{n}, n, m)) return *w;
    for (std::size_t p = 1; p < n; ++p)
      if (std::lcm<std::uint64_t>(p, n - p) == target)
        if (auto w = try_candidate(DumbbellSpec{p, 2, n - p}, n, m)) return *w;

    for (std::size_t k = 2; k <= n; ++k)
      for (std::size_t p = 1; p + k - 2 < n; ++p)
        for (std::size_t q = 1; p + q + k - 2 <= n; ++q)
          if (theta_g(p, k, q) == target)
            if (auto w = try_candidate(DumbbellSpec{p, k, q}, n, m)) return *w;

    for (std::size_t p = 1; p + 2 <= n; ++p)
      for (std::size_t q = 1; p + q + 1 <= n; ++q)
        for (std::size_t t = 1; p + q + 1 + (t > q ? t - q : 0) <= n; ++t)
          for (std::size_t l = 2; min_order_G(p, q, l, t) <= n; ++l) {
            const Theta formula = theta_G(p, q, l, t);
            if (formula != m) continue;
            const std::size_t order = min_order_G(p, q, l, t);
            if (auto w = try_candidate(ThetaGraphSpec{p, q, l, t, order}, n, m)) return *w;
          }
  }
  throw Error(ErrorKind::SearchExhausted, "no verified witness found for theta = " + m.to_string() +
                                              " at order " + std::to_string(n));
}

GapReport gaps(std::size_t n, bool include_witnesses) {
  if (n < 2) throw Error(ErrorKind::ParameterOutOfRange, "gaps requires n >= 2");
  GapReport report;
  report.n = n;
  const IndexSet set = theta_set(n);
  for (std::uint64_t k = 1; k <= s_max(n); ++k)
    if (!set.finite_members.contains(k)) report.gaps.insert(k);
  if (include_witnesses)
    for (auto k : set.finite_members) report.witnessed.emplace(k, witness(n, Theta::finite(k)).family);
  return report;
}

bool TheoremReport::passed() const {
  if (exhaustive_checked && !exhaustive_ok) return false;
  for (const auto& e : entries)
    if (!e.ok) return false;
  return !entries.empty();
}

TheoremReport verify_theorem(std::size_t n, const VerifyOptions& options) {
  TheoremReport report;
  report.n = n;
  const IndexSet set = theta_set(n);
  std::vector<Theta> members;
  for (auto k : set.finite_members) members.push_back(Theta::finite(k));
  if (set.has_infinity) members.push_back(Theta::infinite());

  for (const auto& m : members) {
    VerifyEntry entry;
    entry.member = m;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Witness w = witness(n, m);
      entry.family = to_string(w.family);
      entry.computed = w.theta;
      entry.ok = w.theta == m && w.digraph.order() == n;
      if (!entry.ok) entry.error = "witness check mismatch";
    } catch (const Error& e) {
      entry.error = e.what();
    }
    entry.micros =
        std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
    report.entries.push_back(std::move(entry));
  }

  if (n <= options.exhaustive_up_to) {
    const EmpiricalReport emp = empirical_check(n, options.workers, options.exhaustive_up_to);
    report.exhaustive_checked = true;
    report.exhaustive_ok = emp.matches();
    report.exhaustive_missing = emp.missing;
    report.exhaustive_unexpected = emp.unexpected;
    report.exhaustive_max = emp.summary.max_finite;
  }
  return report;
}

std::string report_to_lines(const TheoremReport& report) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& e : report.entries) {
    passed += e.ok ? 1 : 0;
    os << "member n=" << report.n << " m=" << e.member.to_string() << " status=" << (e.ok ? "PASS" : "FAIL");
    if (e.family) os << " family=" << *e.family;
    if (e.computed) os << " theta=" << e.computed->to_string();
    os << " micros=" << static_cast<std::uint64_t>(e.micros);
    if (!e.error.empty()) os << " error=\"" << e.error << '"';
    os << '\n';
  }
  if (report.exhaustive_checked) {
    os << "exhaustive n=" << report.n << " status=" << (report.exhaustive_ok ? "PASS" : "FAIL")
       << " max_finite=" << (report.exhaustive_max ? std::to_string(*report.exhaustive_max) : "none")
       << " missing=" << format_ranges(report.exhaustive_missing)
       << " unexpected=" << format_ranges(report.exhaustive_unexpected) << '\n';
  }
  os << "summary n=" << report.n << " members=" << report.entries.size() << " witnessed=" << passed
     << " status=" << (report.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string report_to_json(const TheoremReport& report, int indent) {
  using nlohmann::json;
  auto theta_json = [](const Theta& t) {
    return t.is_infinite() ? json{{"kind", "infinite"}} : json{{"kind", "finite"}, {"value", t.value()}};
  };
  json doc;
  doc["n"] = report.n;
  doc["passed"] = report.passed();
  json entries = json::array();
  for (const auto& e : report.entries) {
    json j;
    j["member"] = theta_json(e.member);
    j["ok"] = e.ok;
    j["family"] = e.family ? json(*e.family) : json(nullptr);
    j["computed"] = e.computed ? theta_json(*e.computed) : json(nullptr);
    j["micros"] = e.micros;
    if (!e.error.empty()) j["error"] = e.error;
    entries.push_back(std::move(j));
  }
  doc["entries"] = std::move(entries);
  if (report.exhaustive_checked) {
    doc["exhaustive"] = {
        {"ok", report.exhaustive_ok},
        {"missing", report.exhaustive_missing},
        {"unexpected", report.exhaustive_unexpected},
        {"max_finite", report.exhaustive_max ? json(*report.exhaustive_max) : json(nullptr)},
    };
  } else {
    doc["exhaustive"] = nullptr;
  }
  return doc.dump(indent);
}

}  // namespace stabidx
