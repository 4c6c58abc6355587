#include "fibtan/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "fibtan/algebraic.hpp"
#include "fibtan/catalog.hpp"
#include "fibtan/errors.hpp"
#include "fibtan/series.hpp"

namespace fibtan::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct RunConfig {
  std::string command;
  std::string id;
  std::optional<std::int64_t> m, t, n;
  std::optional<std::string> m_range, t_range, n_range;
  std::optional<int> digits;
  std::string format = "text";
  unsigned jobs = 0;
  bool quick = false;
  bool full = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int default_digits = 30;
// Finite reports carry 64-bit balls.
constexpr int finite_digits = 17;

std::int64_t parse_int(std::string_view s, const std::string& what) {
  std::int64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size())
    throw UsageError("malformed " + what + ": '" + std::string(s) + "'");
  return v;
}

Range parse_range(const std::string& text, const std::string& what) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw UsageError(what + " must have the form a..b");
  const std::string_view view(text);
  Range r{parse_int(view.substr(0, dots), what),
          parse_int(view.substr(dots + 2), what)};
  if (r.lo > r.hi) throw UsageError(what + " is empty: " + text);
  if (r.lo < 0) throw UsageError(what + " must be non-negative");
  return r;
}

Format parse_format(const std::string& f) {
  if (f == "json") return Format::json;
  if (f == "csv") return Format::csv;
  return Format::text;
}

unsigned effective_jobs(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(0..count-1) on `jobs` threads; results keep index order. The
/// exception of the lowest failing index is rethrown.
template <class R>
std::vector<R> parallel_map(std::size_t count, unsigned jobs,
                            const std::function<R(std::size_t)>& fn) {
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// ---------------------------------------------------------------- reports

Json optional_int(const std::optional<std::int64_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string larger_radius(const CertifiedReal& a, const CertifiedReal& b) {
  return (a.radius_rational() >= b.radius_rational() ? a : b).radius_string();
}

Json elapsed(double ms, bool timed) {
  if (!timed) return nullptr;
  return std::round(ms * 1000.0) / 1000.0;
}

Json to_json(const FiniteReport& r, bool timed) {
  Json j;
  j["id"] = std::string(name_of(r.id));
  j["m"] = optional_int(r.m);
  j["t"] = optional_int(r.t);
  j["n"] = optional_int(r.n);
  j["status"] = std::string(to_string(r.status));
  Json z;
  z["re"] = r.witness.z.re.get_str();
  z["im"] = r.witness.z.im.get_str();
  j["gaussian"] = std::move(z);
  j["pi_multiple"] = r.witness.k;
  j["lhs"] = r.lhs_value.midpoint_string(finite_digits);
  j["rhs"] = r.rhs_value.midpoint_string(finite_digits);
  j["radius"] = larger_radius(r.lhs_value, r.rhs_value);
  j["terms_used"] = r.terms;
  j["elapsed_ms"] = elapsed(r.elapsed_ms, timed);
  return j;
}

Json to_json(const VerificationReport& r, bool timed) {
  Json j;
  j["id"] = std::string(name_of(r.id));
  j["m"] = optional_int(r.m);
  j["t"] = nullptr;
  j["n"] = nullptr;
  j["status"] = std::string(to_string(r.status));
  j["gaussian"] = nullptr;
  j["pi_multiple"] = nullptr;
  j["lhs"] = r.lhs.midpoint_string(r.digits + 2);
  j["rhs"] = r.rhs.midpoint_string(r.digits + 2);
  j["radius"] = larger_radius(r.lhs, r.rhs);
  j["terms_used"] = r.terms_used;
  j["elapsed_ms"] = elapsed(r.elapsed_ms, timed);
  return j;
}

const char* const csv_header =
    "id,m,t,n,status,gaussian_re,gaussian_im,pi_multiple,lhs,rhs,radius,"
    "terms_used,elapsed_ms";

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_row(const Json& j) {
  const Json& z = j["gaussian"];
  std::ostringstream row;
  row << csv_cell(j["id"]) << ',' << csv_cell(j["m"]) << ','
      << csv_cell(j["t"]) << ',' << csv_cell(j["n"]) << ','
      << csv_cell(j["status"]) << ','
      << (z.is_null() ? "" : csv_cell(z["re"])) << ','
      << (z.is_null() ? "" : csv_cell(z["im"])) << ','
      << csv_cell(j["pi_multiple"]) << ',' << csv_cell(j["lhs"]) << ','
      << csv_cell(j["rhs"]) << ',' << csv_cell(j["radius"]) << ','
      << csv_cell(j["terms_used"]) << ',' << csv_cell(j["elapsed_ms"]);
  return row.str();
}

std::string text_line(const Json& j) {
  std::ostringstream line;
  line << csv_cell(j["id"]);
  for (const char* key : {"m", "t", "n"})
    if (!j[key].is_null()) line << ' ' << key << '=' << j[key].dump();
  line << ": " << csv_cell(j["status"]);
  if (!j["gaussian"].is_null())
    line << "  product=(" << csv_cell(j["gaussian"]["re"]) << ", "
         << csv_cell(j["gaussian"]["im"]) << ") pi_multiple="
         << j["pi_multiple"].dump();
  line << "  lhs=" << csv_cell(j["lhs"]) << " rhs=" << csv_cell(j["rhs"])
       << " radius=" << csv_cell(j["radius"])
       << " terms=" << j["terms_used"].dump();
  if (!j["elapsed_ms"].is_null()) line << "  " << j["elapsed_ms"].dump() << " ms";
  return line.str();
}

void print_reports(std::ostream& out, Format format,
                   const std::vector<Json>& reports) {
  switch (format) {
    case Format::json:
      if (reports.size() == 1) {
        out << reports.front().dump(2) << '\n';
      } else {
        out << Json(reports).dump(2) << '\n';
      }
      break;
    case Format::csv:
      out << csv_header << '\n';
      for (const auto& r : reports) out << csv_row(r) << '\n';
      break;
    case Format::text:
      for (const auto& r : reports) out << text_line(r) << '\n';
      break;
  }
}

int exit_for(const Json& report) {
  return report["status"] == "verified" ? exit_verified : exit_failed;
}

// ------------------------------------------------------------ identities

IdentityId require_identity(const std::string& name) {
  const auto id = parse_identity(name);
  if (!id) throw UsageError("unknown identity '" + name + "'");
  return *id;
}

void forbid(bool present, const std::string& flag, const CatalogEntry& e) {
  if (present)
    throw UsageError(std::string(e.name) + " does not take " + flag +
                     " (parameters: " + std::string(to_string(e.arity)) + ")");
}

std::int64_t need(const std::optional<std::int64_t>& v, const std::string& flag,
                  const CatalogEntry& e) {
  if (!v)
    throw UsageError(std::string(e.name) + " requires " + flag +
                     " (parameters: " + std::string(to_string(e.arity)) + ")");
  return *v;
}

int checked_digits(const std::optional<int>& d) {
  const int digits = d.value_or(default_digits);
  if (digits < 1) throw UsageError("--digits must be at least 1");
  return digits;
}

/// The second finite parameter (t or n) after arity checks.
std::int64_t finite_second(const RunConfig& c, const CatalogEntry& e) {
  forbid(c.digits.has_value(), "--digits", e);
  switch (e.arity) {
    case Arity::t_only:
      forbid(c.m.has_value(), "--m", e);
      forbid(c.n.has_value(), "--n", e);
      return need(c.t, "--t", e);
    case Arity::m_t:
      forbid(c.n.has_value(), "--n", e);
      need(c.m, "--m", e);
      return need(c.t, "--t", e);
    default:
      forbid(c.t.has_value(), "--t", e);
      need(c.m, "--m", e);
      return need(c.n, "--n", e);
  }
}

std::int64_t infinite_m(const RunConfig& c, const CatalogEntry& e) {
  forbid(c.t.has_value(), "--t", e);
  forbid(c.n.has_value(), "--n", e);
  if (e.arity == Arity::none) {
    forbid(c.m.has_value(), "--m", e);
    return 0;
  }
  return need(c.m, "--m", e);
}

// --------------------------------------------------------------- commands

int cmd_list(const RunConfig& c, std::ostream& out) {
  const Format format = parse_format(c.format);
  if (format == Format::text) {
    out << std::left << std::setw(16) << "ID" << std::setw(8) << "PARAMS"
        << std::setw(10) << "KIND"
        << "STATEMENT\n";
    for (const auto& e : list_identities()) {
      std::string label(e.name);
      if (e.parity != Parity::none)
        label += " (" + std::string(to_string(e.parity)) + ")";
      out << std::setw(16) << label << std::setw(8) << to_string(e.arity)
          << std::setw(10) << to_string(e.kind) << e.description << '\n';
    }
    return exit_verified;
  }
  if (format == Format::csv) {
    out << "id,params,parity,kind,statement\n";
    for (const auto& e : list_identities())
      out << e.name << ',' << to_string(e.arity) << ',' << to_string(e.parity)
          << ',' << to_string(e.kind) << ",\"" << e.description << "\"\n";
    return exit_verified;
  }
  Json all = Json::array();
  for (const auto& e : list_identities()) {
    Json j;
    j["id"] = std::string(e.name);
    j["params"] = std::string(to_string(e.arity));
    j["parity"] = std::string(to_string(e.parity));
    j["kind"] = std::string(to_string(e.kind));
    j["statement"] = std::string(e.description);
    all.push_back(std::move(j));
  }
  out << all.dump(2) << '\n';
  return exit_verified;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const IdentityId id = require_identity(c.id);
  const CatalogEntry& e = catalog_entry(id);
  Json report;
  if (e.kind == Kind::finite) {
    const std::int64_t second = finite_second(c, e);
    report = to_json(verify_finite(id, c.m.value_or(0), second), true);
  } else {
    const std::int64_t m = infinite_m(c, e);
    report = to_json(verify_infinite(id, m, checked_digits(c.digits)), true);
  }
  print_reports(out, parse_format(c.format), {report});
  return exit_for(report);
}

int cmd_eval(const RunConfig& c, std::ostream& out) {
  const IdentityId id = require_identity(c.id);
  const CatalogEntry& e = catalog_entry(id);
  if (e.kind != Kind::infinite)
    throw UsageError("eval applies to infinite identities; use verify for " +
                     std::string(e.name));
  const std::int64_t m = infinite_m(c, e);
  const VerificationReport r = verify_infinite(id, m, checked_digits(c.digits));
  const Json report = to_json(r, true);
  if (parse_format(c.format) == Format::text) {
    out << e.name;
    if (r.m && e.arity != Arity::none) out << " m=" << *r.m;
    out << '\n'
        << "  series      " << report["lhs"].get<std::string>() << " +/- "
        << r.lhs.radius_string() << "  (" << r.terms_used << " terms)\n"
        << "  closed form " << report["rhs"].get<std::string>() << " +/- "
        << r.rhs.radius_string() << '\n'
        << "  " << to_string(r.status) << " to " << r.digits << " digits\n";
  } else {
    print_reports(out, parse_format(c.format), {report});
  }
  return exit_for(report);
}

struct GridPoint {
  std::int64_t m;
  std::int64_t second;
};

std::vector<GridPoint> sweep_grid(const RunConfig& c, const CatalogEntry& e) {
  auto range_of = [&](const std::optional<std::string>& text,
                      const std::string& flag) {
    if (!text)
      throw UsageError(std::string(e.name) + " requires " + flag +
                       " (parameters: " + std::string(to_string(e.arity)) +
                       ")");
    return parse_range(*text, flag);
  };
  forbid(c.m.has_value() || c.t.has_value() || c.n.has_value(),
         "single parameters in a sweep", e);
  Range ms{0, 0};
  Range seconds{0, 0};
  switch (e.arity) {
    case Arity::t_only:
      forbid(c.m_range.has_value(), "--m-range", e);
      forbid(c.n_range.has_value(), "--n-range", e);
      seconds = range_of(c.t_range, "--t-range");
      break;
    case Arity::m_t:
      forbid(c.n_range.has_value(), "--n-range", e);
      ms = range_of(c.m_range, "--m-range");
      seconds = range_of(c.t_range, "--t-range");
      break;
    case Arity::m_n:
      forbid(c.t_range.has_value(), "--t-range", e);
      ms = range_of(c.m_range, "--m-range");
      seconds = range_of(c.n_range, "--n-range");
      if (seconds.lo < 1) throw UsageError("--n-range must start at 1 or more");
      break;
    case Arity::m_only:
      forbid(c.t_range.has_value(), "--t-range", e);
      forbid(c.n_range.has_value(), "--n-range", e);
      ms = range_of(c.m_range, "--m-range");
      break;
    case Arity::none:
      forbid(c.m_range.has_value() || c.t_range.has_value() ||
                 c.n_range.has_value(),
             "ranges", e);
      break;
  }
  std::vector<GridPoint> grid;
  for (std::int64_t m = ms.lo; m <= ms.hi; ++m) {
    if (!parity_admits(e.parity, m, 0)) continue;
    for (std::int64_t s = seconds.lo; s <= seconds.hi; ++s) grid.push_back({m, s});
  }
  if (grid.empty())
    throw UsageError("no parity-valid parameters in the grid: " +
                     std::string(e.name) + " requires " +
                     std::string(to_string(e.parity)));
  return grid;
}

int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const IdentityId id = require_identity(c.id);
  const CatalogEntry& e = catalog_entry(id);
  if (e.kind == Kind::finite) forbid(c.digits.has_value(), "--digits", e);
  const int digits = checked_digits(c.digits);
  const std::vector<GridPoint> grid = sweep_grid(c, e);

  const auto start = std::chrono::steady_clock::now();
  // Per-instance timing would make reports depend on scheduling.
  const std::vector<Json> reports = parallel_map<Json>(
      grid.size(), effective_jobs(c.jobs), [&](std::size_t i) {
        if (e.kind == Kind::finite)
          return to_json(verify_finite(id, grid[i].m, grid[i].second), false);
        return to_json(verify_infinite(id, grid[i].m, digits), false);
      });
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();

  std::size_t verified = 0;
  const Json* first_failure = nullptr;
  for (const auto& r : reports) {
    if (r["status"] == "verified")
      ++verified;
    else if (!first_failure)
      first_failure = &r;
  }
  const std::size_t failed = reports.size() - verified;

  switch (parse_format(c.format)) {
    case Format::json: {
      Json j;
      j["id"] = std::string(e.name);
      j["instances"] = reports.size();
      j["verified"] = verified;
      j["failed"] = failed;
      j["first_counterexample"] = first_failure ? *first_failure : Json(nullptr);
      j["reports"] = reports;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      print_reports(out, Format::csv, reports);
      break;
    case Format::text:
      out << "sweep " << e.name << ": " << reports.size() << " instances, "
          << verified << " verified, " << failed << " failed\n";
      if (first_failure)
        out << "first counterexample: " << text_line(*first_failure) << '\n';
      break;
  }
  err << "sweep " << e.name << " finished in " << std::fixed
      << std::setprecision(1) << ms << " ms\n";
  return failed == 0 ? exit_verified : exit_failed;
}

int cmd_algebraic(const RunConfig& c, std::ostream& out) {
  const auto family = parse_algebraic_family(c.id);
  if (!family) throw UsageError("unknown algebraic family '" + c.id + "'");
  if (!c.m_range || !c.n_range)
    throw UsageError("algebraic requires --m-range and --n-range");
  const Range ms = parse_range(*c.m_range, "--m-range");
  const Range ns = parse_range(*c.n_range, "--n-range");
  const Parity parity = parity_of(*family);

  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<std::pair<std::int64_t, std::int64_t>> first;
  for (std::int64_t m = ms.lo; m <= ms.hi; ++m) {
    for (std::int64_t n = ns.lo; n <= ns.hi; ++n) {
      if (!parity_admits(parity, m, n)) continue;
      ++checked;
      if (!check_algebraic_identity(*family, m, n)) {
        ++failed;
        if (!first) first.emplace(m, n);
      }
    }
  }
  if (checked == 0)
    throw UsageError("no parity-valid parameters in the grid: " +
                     std::string(name_of(*family)) + " requires " +
                     std::string(to_string(parity)));

  Json j;
  j["family"] = std::string(name_of(*family));
  j["formula"] = std::string(formula_of(*family));
  j["parity"] = std::string(to_string(parity));
  j["checked"] = checked;
  j["failed"] = failed;
  if (first) {
    Json ce;
    ce["m"] = first->first;
    ce["n"] = first->second;
    j["first_counterexample"] = std::move(ce);
  } else {
    j["first_counterexample"] = nullptr;
  }

  switch (parse_format(c.format)) {
    case Format::json:
      out << j.dump(2) << '\n';
      break;
    case Format::csv:
      out << "family,checked,failed,counterexample_m,counterexample_n\n"
          << name_of(*family) << ',' << checked << ',' << failed << ','
          << (first ? std::to_string(first->first) : "") << ','
          << (first ? std::to_string(first->second) : "") << '\n';
      break;
    case Format::text:
      out << name_of(*family) << "  " << formula_of(*family) << '\n'
          << "  " << checked << " checked, " << failed << " failed";
      if (first) out << "; first failure at m=" << first->first << " n=" << first->second;
      out << '\n';
      break;
  }
  return failed == 0 ? exit_verified : exit_failed;
}

// --------------------------------------------------------------- selftest

#ifdef FIBTAN_TEST_PERTURBATION
// Test builds only: one argument of HR63-T5 at t = 3 is corrupted.
IdentityInstance perturb(IdentityInstance inst) {
  if (inst.id == IdentityId::hr63_t5 && inst.t == 3) {
    ArctanTerm& last = inst.lhs.terms.back();
    last = ArctanTerm(last.coeff, last.arg + 1);
  }
  return inst;
}
#else
IdentityInstance perturb(IdentityInstance inst) { return inst; }
#endif

struct CheckResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failed = 0;
  Json counterexample = nullptr;
};

struct SelftestPlan {
  std::int64_t algebraic_max;
  std::int64_t index_m_max;
  std::int64_t index_n_max;
  std::int64_t hr_t_max;
  std::int64_t sum_m_max;
  std::int64_t sum_t_max;
  int headline_digits;
  int family_digits;
  std::int64_t family_m_max;
};

constexpr SelftestPlan quick_plan{16, 8, 8, 8, 4, 8, 20, 20, 4};
constexpr SelftestPlan full_plan{64, 24, 24, 64, 12, 32, 50, 40, 8};

CheckResult tally(std::string name, const std::vector<Json>& reports) {
  CheckResult r{std::move(name)};
  r.instances = reports.size();
  for (const auto& j : reports) {
    if (j["status"] == "verified") continue;
    if (r.failed++ == 0) r.counterexample = j;
  }
  return r;
}

CheckResult check_algebraic_grid(std::int64_t max) {
  CheckResult r{"algebraic families"};
  for (auto family : all_algebraic_families)
    for (std::int64_t m = 0; m <= max; ++m)
      for (std::int64_t n = 0; n <= max; ++n) {
        if (!parity_admits(parity_of(family), m, n)) continue;
        ++r.instances;
        if (check_algebraic_identity(family, m, n)) continue;
        if (r.failed++ == 0) {
          Json ce;
          ce["family"] = std::string(name_of(family));
          ce["m"] = m;
          ce["n"] = n;
          r.counterexample = std::move(ce);
        }
      }
  return r;
}

CheckResult check_finite(std::string name, const std::vector<IdentityId>& ids,
                         std::int64_t m_max, std::int64_t lo, std::int64_t hi,
                         unsigned jobs) {
  struct Job {
    IdentityId id;
    std::int64_t m;
    std::int64_t second;
  };
  std::vector<Job> grid;
  for (IdentityId id : ids) {
    const CatalogEntry& e = catalog_entry(id);
    const std::int64_t top = e.arity == Arity::t_only ? 0 : m_max;
    for (std::int64_t m = 0; m <= top; ++m) {
      if (!parity_admits(e.parity, m, 0)) continue;
      for (std::int64_t s = lo; s <= hi; ++s) grid.push_back({id, m, s});
    }
  }
  return tally(std::move(name),
               parallel_map<Json>(grid.size(), jobs, [&](std::size_t i) {
                 const Job& job = grid[i];
                 return to_json(
                     verify_instance(perturb(build_finite(job.id, job.m, job.second))),
                     false);
               }));
}

CheckResult check_infinite(std::string name, const std::vector<IdentityId>& ids,
                           std::int64_t m_max, int digits, unsigned jobs) {
  std::vector<std::pair<IdentityId, std::int64_t>> grid;
  for (IdentityId id : ids) {
    const CatalogEntry& e = catalog_entry(id);
    const std::int64_t top = e.arity == Arity::none ? 0 : m_max;
    for (std::int64_t m = 0; m <= top; ++m)
      if (parity_admits(e.parity, m, 0)) grid.emplace_back(id, m);
  }
  return tally(std::move(name),
               parallel_map<Json>(grid.size(), jobs, [&](std::size_t i) {
                 return to_json(verify_infinite(grid[i].first, grid[i].second, digits),
                                false);
               }));
}

std::vector<IdentityId> ids_where(const std::function<bool(const CatalogEntry&)>& pick) {
  std::vector<IdentityId> ids;
  for (const auto& e : list_identities())
    if (pick(e)) ids.push_back(e.id);
  return ids;
}

int cmd_selftest(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.quick && c.full) throw UsageError("choose one of --quick and --full");
  const SelftestPlan& plan = c.full ? full_plan : quick_plan;
  const unsigned jobs = effective_jobs(c.jobs);

  const auto per_index = ids_where([](const CatalogEntry& e) {
    return e.kind == Kind::finite && e.arity == Arity::m_n;
  });
  const auto hr = ids_where([](const CatalogEntry& e) {
    return e.kind == Kind::finite && e.arity == Arity::t_only;
  });
  const auto sums = ids_where([](const CatalogEntry& e) {
    return e.kind == Kind::finite && e.arity == Arity::m_t;
  });
  const auto headline = ids_where([](const CatalogEntry& e) {
    return e.kind == Kind::infinite && e.arity == Arity::none;
  });
  const auto families = ids_where([](const CatalogEntry& e) {
    return e.kind == Kind::infinite && e.arity == Arity::m_only;
  });

  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckResult> results;
  results.push_back(check_algebraic_grid(plan.algebraic_max));
  results.push_back(check_finite("per-index identities", per_index, plan.index_m_max, 1,
                                 plan.index_n_max, jobs));
  results.push_back(check_finite("finite sums without m", hr, 0, 0, plan.hr_t_max, jobs));
  results.push_back(check_finite("parametric sums", sums, plan.sum_m_max, 0,
                                 plan.sum_t_max, jobs));
  results.push_back(check_infinite("infinite series", headline, 0,
                                   plan.headline_digits, jobs));
  results.push_back(check_infinite("parametric series", families,
                                   plan.family_m_max, plan.family_digits, jobs));
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();

  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const CheckResult& r) { return r.failed == 0; });
  const Format format = parse_format(c.format);
  if (format == Format::json) {
    Json all = Json::array();
    for (const auto& r : results) {
      Json j;
      j["check"] = r.name;
      j["instances"] = r.instances;
      j["failed"] = r.failed;
      j["counterexample"] = r.counterexample;
      all.push_back(std::move(j));
    }
    Json top;
    top["depth"] = c.full ? "full" : "quick";
    top["passed"] = ok;
    top["checks"] = std::move(all);
    out << top.dump(2) << '\n';
  } else {
    if (format == Format::csv) out << "check,instances,failed\n";
    for (const auto& r : results) {
      if (format == Format::csv) {
        out << r.name << ',' << r.instances << ',' << r.failed << '\n';
        continue;
      }
      out << std::left << std::setw(24) << r.name << (r.failed ? "FAIL" : "ok  ")
          << "  " << r.instances << " instances";
      if (r.failed) out << ", " << r.failed << " failed";
      out << '\n';
    }
    // Counterexamples are always machine readable.
    for (const auto& r : results)
      if (r.failed) out << r.counterexample.dump(2) << '\n';
  }
  err << "selftest " << (c.full ? "full" : "quick") << " finished in "
      << std::fixed << std::setprecision(1) << ms << " ms\n";
  return ok ? exit_verified : exit_failed;
}

// ------------------------------------------------------------------ parser

void add_format(CLI::App& app, RunConfig& c) {
  app.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig c;
  CLI::App app("Exact verification of Fibonacci and Lucas arctangent identities",
               "fibtan");
  app.require_subcommand(1);
  app.fallthrough();
  add_format(app, c);

  auto* list = app.add_subcommand("list", "List catalog identities");

  auto* verify = app.add_subcommand("verify", "Verify one identity instance");
  verify->add_option("id", c.id, "Identity id")->required();
  verify->add_option("--m", c.m, "Parameter m");
  verify->add_option("--t", c.t, "Upper summation limit t");
  verify->add_option("--n", c.n, "Index n");
  verify->add_option("--digits", c.digits, "Certified digits (infinite ids)");

  auto* sweep = app.add_subcommand("sweep", "Verify every instance in a grid");
  sweep->add_option("id", c.id, "Identity id")->required();
  sweep->add_option("--m-range", c.m_range, "a..b");
  sweep->add_option("--t-range", c.t_range, "a..b");
  sweep->add_option("--n-range", c.n_range, "a..b");
  sweep->add_option("--digits", c.digits, "Certified digits (infinite ids)");
  sweep->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)");

  auto* eval = app.add_subcommand("eval", "Evaluate both sides of an infinite identity");
  eval->add_option("id", c.id, "Identity id")->required();
  eval->add_option("--m", c.m, "Parameter m");
  eval->add_option("--digits", c.digits, "Certified digits");

  auto* algebraic = app.add_subcommand("algebraic", "Check an algebraic family on a grid");
  algebraic->add_option("family", c.id, "Family name such as ALG-11")->required();
  algebraic->add_option("--m-range", c.m_range, "a..b");
  algebraic->add_option("--n-range", c.n_range, "a..b");

  auto* selftest = app.add_subcommand("selftest", "Run built-in verification grids");
  selftest->add_flag("--quick", c.quick, "Small grids (default)");
  selftest->add_flag("--full", c.full, "Complete grids");
  selftest->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)");

  for (auto* sub : {list, verify, sweep, eval, algebraic, selftest}) add_format(*sub, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_verified : exit_usage;
  }

  try {
    if (list->parsed()) return cmd_list(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (sweep->parsed()) return cmd_sweep(c, out, err);
    if (eval->parsed()) return cmd_eval(c, out);
    if (algebraic->parsed()) return cmd_algebraic(c, out);
    if (selftest->parsed()) return cmd_selftest(c, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {  // parity, unknown identity
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const precision_cap_error& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
  return exit_usage;
}

}  // namespace fibtan::cli
