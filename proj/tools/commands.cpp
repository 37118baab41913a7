#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json_io.hpp"
#include "selftest.hpp"
#include "subclose/codes.hpp"
#include "subclose/conjecture.hpp"
#include "subclose/families.hpp"
#include "subclose/field.hpp"
#include "subclose/graphs.hpp"

namespace subclose::cli {

namespace {

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " '" + s + "'");
  }
  if (used != s.size()) throw UsageError("cannot parse " + what + " '" + s + "'");
  return v;
}

RRange range_or(const RunConfig& cfg, std::int64_t lo, std::int64_t hi) {
  return cfg.r.value_or(RRange{lo, hi});
}

std::optional<SchubertIndex> schubert_of(const RunConfig& cfg) {
  if (!cfg.alpha) return std::nullopt;
  return SchubertIndex(*cfg.alpha, cfg.m);
}

std::string rational_text(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

std::string edges_text(const Graph& g) {
  std::ostringstream os;
  bool first = true;
  for (auto [u, v] : g.edge_list()) {
    os << (first ? "" : " ") << u << '-' << v;
    first = false;
  }
  return first ? "-" : os.str();
}

// Columns padded to their widest cell, cells separated by " | ".
void print_grid(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += " | ";
      std::string cell = row[c];
      if (c == 0)
        cell.resize(width[c], ' ');
      else
        cell.insert(0, width[c] - cell.size(), ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

OracleOptions oracle_options(const RunConfig& cfg) {
  OracleOptions opts;
  opts.max_candidates = cfg.budget_families;
  return opts;
}

}  // namespace

RRange parse_r_range(const std::string& text) {
  const auto dots = text.find("..");
  RRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text, "r");
  } else {
    r.lo = parse_int(text.substr(0, dots), "r range start");
    r.hi = parse_int(text.substr(dots + 2), "r range end");
  }
  if (r.lo > r.hi) throw UsageError("empty r range '" + text + "'");
  return r;
}

std::vector<int> parse_alpha(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(static_cast<int>(parse_int(item, "alpha entry")));
  if (out.empty()) throw UsageError("alpha must be a comma-separated tuple");
  return out;
}

void validate(const RunConfig& cfg) {
  const std::string& c = cfg.command;
  if (c == "selftest") return;
  if (cfg.m < 1 || cfg.m > kMaxGroundSet)
    throw UsageError("--m must lie in [1," + std::to_string(kMaxGroundSet) + "]");

  if (c == "optimal") {
    if (cfg.m < 2) throw UsageError("optimal graphs need --m >= 2");
    if (cfg.r) {
      const auto k = binom(cfg.m, 2);
      if (cfg.r->lo < 0 || cfg.r->hi > k)
        throw UsageError("--r must lie in [0," + std::to_string(k) + "] for m=" + std::to_string(cfg.m));
    }
    return;
  }

  if (cfg.ell < 1 || cfg.ell > cfg.m) throw UsageError("need 1 <= --ell <= --m");
  if (c == "kr-table") {
    if (cfg.r) {
      const auto k = binom(cfg.m, cfg.ell);
      if (cfg.r->lo < 0 || cfg.r->hi > k)
        throw UsageError("--r must lie in [0," + std::to_string(k) + "]");
    }
    return;
  }

  if (c == "verify" || c == "code") {
    if (!is_supported_order(cfg.q)) throw UsageError("--q must be a prime power <= 16");
    std::int64_t kdim = binom(cfg.m, cfg.ell);
    if (cfg.alpha) {
      if (static_cast<int>(cfg.alpha->size()) != cfg.ell)
        throw UsageError("--alpha must have exactly ell entries");
      try {
        kdim = static_cast<std::int64_t>(SchubertIndex(*cfg.alpha, cfg.m).index_set().size());
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (c == "verify" && cfg.r && (cfg.r->lo < 1 || cfg.r->hi > kdim))
      throw UsageError("--r must lie in [1," + std::to_string(kdim) + "]");
    return;
  }
  throw UsageError("unknown command '" + c + "'");
}

int cmd_kr_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto k = binom(cfg.m, cfg.ell);
  const RRange range = range_or(cfg, 1, k);
  const auto opts = oracle_options(cfg);

  struct Row {
    std::int64_t r;
    std::optional<std::int64_t> closed;
    std::optional<KrRecord> record;
  };
  std::vector<Row> rows;
  bool disagreement = false;
  for (auto r = range.lo; r <= range.hi; ++r) {
    Row row{r, k_r_closed(cfg.ell, cfg.m, r), std::nullopt};
    if (cfg.mode == KrMode::Closed) {
      if (row.closed) row.record = k_r(cfg.ell, cfg.m, r, opts);
    } else {
      row.record = k_r_oracle(cfg.ell, cfg.m, r, opts);
    }
    if (cfg.mode == KrMode::Both && row.closed && *row.closed != row.record->value) {
      err << "error: closed form " << *row.closed << " disagrees with oracle " << row.record->value
          << " at r=" << r << '\n';
      disagreement = true;
    }
    rows.push_back(std::move(row));
  }

  const std::string label = "K_r(" + std::to_string(cfg.ell) + "," + std::to_string(cfg.m) + ")";
  auto value_text = [](const Row& row) {
    return row.record ? std::to_string(row.record->value) : std::string("-");
  };
  switch (cfg.format) {
    case Format::Table: {
      std::vector<std::string> top{"r"};
      std::vector<std::string> bottom{label};
      for (const auto& row : rows) {
        top.push_back(std::to_string(row.r));
        bottom.push_back(value_text(row));
      }
      print_grid(out, {top, bottom});
      break;
    }
    case Format::Csv:
      out << "ell,m,r,value,method,closed_form\n";
      for (const auto& row : rows)
        out << cfg.ell << ',' << cfg.m << ',' << row.r << ','
            << (row.record ? std::to_string(row.record->value) : "") << ','
            << (row.record ? to_string(row.record->method) : "") << ','
            << (row.closed ? std::to_string(*row.closed) : "") << '\n';
      break;
    case Format::Json:
      for (const auto& row : rows) {
        if (row.record) {
          out << io::kr_record_to_json(*row.record, row.closed).dump() << '\n';
        } else {
          auto j = io::document("kr_record");
          j["ell"] = cfg.ell;
          j["m"] = cfg.m;
          j["r"] = row.r;
          j["value"] = nullptr;
          j["method"] = nullptr;
          j["maximizer"] = nullptr;
          j["maximizer_count"] = nullptr;
          j["closed_form"] = nullptr;
          out << j.dump() << '\n';
        }
      }
      break;
  }
  return disagreement ? kCheckFailed : kOk;
}

int cmd_optimal_graphs(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const RRange range = range_or(cfg, 0, binom(cfg.m, 2));
  const auto opts = oracle_options(cfg);

  std::vector<std::vector<std::string>> grid{
      {"m", "r", "sigma", "optimal", "threshold", "de_caen", "trivial", "dual", "maximizer"}};
  if (cfg.format == Format::Csv)
    out << "m,r,sigma_max,maximizer_count,threshold,de_caen,de_caen_tight,trivial,trivial_tight,dual,dual_tight,maximizer\n";

  for (auto r = range.lo; r <= range.hi; ++r) {
    const auto rec = optimal_graphs(cfg.m, r, opts);
    const auto trace = is_threshold(rec.maximizer);
    const bool de_caen_tight = Rational(rec.sigma_max) == rec.de_caen;
    auto bound_text = [&](const std::optional<std::int64_t>& b) {
      if (!b) return std::string("-");
      return std::to_string(*b) + (rec.sigma_max == *b ? " (tight)" : "");
    };
    switch (cfg.format) {
      case Format::Json:
        out << io::sigma_record_to_json(rec, {trace.is_threshold, trace.sequence}).dump() << '\n';
        break;
      case Format::Csv:
        out << rec.m << ',' << rec.r << ',' << rec.sigma_max << ',' << rec.maximizer_count << ','
            << (trace.is_threshold ? "true" : "false") << ',' << rational_text(rec.de_caen) << ','
            << (de_caen_tight ? "true" : "false") << ','
            << (rec.trivial ? std::to_string(*rec.trivial) : "") << ','
            << (rec.trivial ? (rec.sigma_max == *rec.trivial ? "true" : "false") : "") << ','
            << (rec.dual ? std::to_string(*rec.dual) : "") << ','
            << (rec.dual ? (rec.sigma_max == *rec.dual ? "true" : "false") : "") << ','
            << edges_text(rec.maximizer) << '\n';
        break;
      case Format::Table:
        grid.push_back({std::to_string(rec.m), std::to_string(rec.r), std::to_string(rec.sigma_max),
                        std::to_string(rec.maximizer_count), trace.is_threshold ? "yes" : "no",
                        rational_text(rec.de_caen) + (de_caen_tight ? " (tight)" : ""),
                        bound_text(rec.trivial), bound_text(rec.dual), edges_text(rec.maximizer)});
        break;
    }
  }
  if (cfg.format == Format::Table) print_grid(out, grid);
  return kOk;
}

int cmd_verify_conjecture(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ConjectureOptions opts;
  opts.max_families = cfg.budget_families;
  opts.subcodes.max_subspaces = cfg.budget_subspaces;
  ConjectureHarness harness(cfg.ell, cfg.m, cfg.q, schubert_of(cfg), opts);
  const RRange range = range_or(cfg, 1, static_cast<std::int64_t>(harness.rows().size()));

  std::vector<std::vector<std::string>> grid{
      {"r", "d_r", "rhs_subclose", "rhs_all_coordinate", "verdict", "regime", "witness"}};
  if (cfg.format == Format::Csv) out << "ell,m,q,alpha,r,n,k,d_r,rhs_subclose,rhs_all_coordinate,verdict,proven_regime\n";

  int status = kOk;
  for (auto r = range.lo; r <= range.hi; ++r) {
    const auto rep = harness.run(static_cast<int>(r));
    if (rep.verdict == Verdict::LhsGreater) {
      err << "error: d_" << r << " exceeds a coordinate-section value; the harness is inconsistent\n";
      status = kCheckFailed;
    } else if (rep.proven_regime && rep.verdict != Verdict::Equal) {
      err << "error: verdict " << to_string(rep.verdict) << " at r=" << r << " inside proven regime "
          << *rep.proven_regime << '\n';
      status = kCheckFailed;
    }
    switch (cfg.format) {
      case Format::Json:
        out << io::conjecture_report_to_json(rep).dump() << '\n';
        break;
      case Format::Csv: {
        std::string alpha;
        if (rep.alpha)
          for (std::size_t i = 0; i < rep.alpha->size(); ++i) alpha += (i ? " " : "") + std::to_string((*rep.alpha)[i]);
        out << rep.ell << ',' << rep.m << ',' << rep.q << ',' << alpha << ',' << rep.r << ','
            << rep.length << ',' << rep.dimension << ',' << rep.d_r << ',' << rep.rhs_subclose << ','
            << rep.rhs_all_coordinate << ',' << to_string(rep.verdict) << ','
            << rep.proven_regime.value_or("") << '\n';
        break;
      }
      case Format::Table:
        grid.push_back({std::to_string(rep.r), std::to_string(rep.d_r), std::to_string(rep.rhs_subclose),
                        std::to_string(rep.rhs_all_coordinate), to_string(rep.verdict),
                        rep.proven_regime.value_or("open"), rep.witness_lambda.to_string()});
        break;
    }
  }
  if (cfg.format == Format::Table) {
    out << "code: " << (cfg.alpha ? "C_alpha" : "C") << "(" << cfg.ell << "," << cfg.m << ") over GF("
        << cfg.q << ")";
    if (cfg.alpha) out << ", alpha=" << harness.alpha()->to_string();
    out << ", n=" << harness.points().size() << ", k=" << harness.rows().size() << '\n';
    print_grid(out, grid);
  }
  return status;
}

int cmd_export_code(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  ConjectureOptions opts;
  ConjectureHarness harness(cfg.ell, cfg.m, cfg.q, schubert_of(cfg), opts);
  const auto& code = harness.code();
  if (cfg.format == Format::Json) {
    out << io::generator_to_json(code, cfg.ell, cfg.m, harness.alpha()).dump() << '\n';
    return kOk;
  }
  const char sep = cfg.format == Format::Csv ? ',' : ' ';
  for (int i = 0; i < code.dimension(); ++i) {
    for (int j = 0; j < code.length(); ++j) {
      if (j) out << sep;
      out << static_cast<int>(code.generator().at(i, j));
    }
    out << '\n';
  }
  return kOk;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto results = run_selftest(cfg.level, cfg.inject, cfg.seed);
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (cfg.format == Format::Json) {
    auto j = io::document("selftest_summary");
    j["level"] = cfg.level == Level::Full ? "full" : "fast";
    j["seed"] = cfg.seed;
    auto arr = io::Json::array();
    for (const auto& r : results) arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    j["suites"] = arr;
    j["passed"] = all;
    out << j.dump() << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.passed) out << ": " << r.detail;
      out << '\n';
    }
    out << (all ? "selftest passed" : "selftest FAILED") << '\n';
  }
  return all ? kOk : kCheckFailed;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    if (cfg.command == "kr-table") return cmd_kr_table(cfg, out, err);
    if (cfg.command == "optimal") return cmd_optimal_graphs(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify_conjecture(cfg, out, err);
    if (cfg.command == "code") return cmd_export_code(cfg, out, err);
    if (cfg.command == "selftest") return cmd_selftest(cfg, out, err);
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace subclose::cli
