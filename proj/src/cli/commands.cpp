#include "strassen/cli/commands.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "strassen/errors.hpp"
#include "strassen/kernel.hpp"

namespace strassen::cli {
namespace {

using nlohmann::json;

json pair_json(const IndexPair& pair) { return json::array({pair.n, pair.m}); }

json trace_to_json(const std::vector<StepTrace>& traces) {
  json out = json::array();
  for (std::size_t i = 0; i < traces.size(); ++i) {
    const StepTrace& t = traces[i];
    out.push_back({{"step", i + 1},
                   {"pair", pair_json(t.pair)},
                   {"alpha", t.alpha.str()},
                   {"attained", std::string(to_string(t.attained))},
                   {"column_n_before", t.column_n_before.str()},
                   {"column_n_after", t.column_n_after.str()},
                   {"column_m_before", t.column_m_before.str()},
                   {"column_m_after", t.column_m_after.str()}});
  }
  return out;
}

bool is_finite(const MeasureSource& source) {
  return source.kind() == MeasureSource::Kind::kExplicit;
}

// Finite data, poset and ground set on which a supplied coupling or the
// oracle is checked. Geometric sources are truncated at `last` (the lumped
// tail lands there); explicit ones are used as given.
struct FiniteView {
  FiniteMeasure mu;
  FiniteMeasure nu;
  Poset poset;
};

FiniteView finite_view(const Instance& instance, Index last) {
  auto materialize = [last](const MeasureSource& source) {
    if (is_finite(source)) {
      return FiniteMeasure(
          std::vector<Rational>(source.values().begin(), source.values().end()));
    }
    return truncate(source, last);
  };
  FiniteMeasure mu = materialize(instance.mu);
  FiniteMeasure nu = materialize(instance.nu);
  Index size = std::max({last + 1, mu.size(), nu.size()});
  Poset poset = instance.order.prefix(size);
  return FiniteView{std::move(mu), std::move(nu), std::move(poset)};
}

json oracle_json(const FiniteMeasure& mu, const FiniteMeasure& nu,
                 const Poset& p) {
  const IndexSet ground = p.ground();
  json out;
  out["dominated"] = check_dominance(mu, nu, p, ground);
  std::optional<Coupling> split = maxflow_splitting(mu, nu, p, ground);
  out["feasible"] = split.has_value();
  if (split) {
    out["coupling"] = coupling_to_json(*split);
    out["verification"] = report_to_json(verify_solution(*split, mu, nu, p, ground));
  }
  return out;
}

}  // namespace

json coupling_to_json(const Coupling& lam, bool as_float) {
  json out = json::array();
  for (const auto& [pair, value] : lam.entries()) {
    if (as_float) {
      out.push_back({pair.n, pair.m, value.to_double()});
    } else {
      out.push_back({pair.n, pair.m, value.str()});
    }
  }
  return out;
}

Coupling coupling_from_json(const json& entries) {
  if (!entries.is_array()) throw ParseError("coupling: expected an array");
  std::vector<std::pair<IndexPair, Rational>> parsed;
  Index bound = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = "coupling[" + std::to_string(i) + "]";
    const json& e = entries[i];
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw ParseError(path + ": expected [n, m, \"p/q\"]");
    }
    IndexPair pair{e[0].get<Index>(), e[1].get<Index>()};
    bound = std::max({bound, pair.n + 1, pair.m + 1});
    parsed.emplace_back(pair, parse_rational(e[2], path + "[2]"));
  }
  Coupling lam(bound);
  for (const auto& [pair, value] : parsed) lam.add(pair.n, pair.m, value);
  return lam;
}

json schedule_to_json(const Schedule& schedule) {
  return {{"k", schedule.k},
          {"N_k", schedule.truncation},
          {"eps", schedule.epsilon.str()},
          {"bound_3k_eps", schedule.divergence_bound.str()}};
}

json report_to_json(const VerificationReport& report) {
  json out = {{"ok", report.ok()},
              {"mass_ok", report.mass_ok},
              {"support_ok", report.support_ok},
              {"row_marginals_ok", report.row_marginals_ok},
              {"col_marginals_ok", report.col_marginals_ok},
              {"total_mass", report.total_mass.str()},
              {"most_negative_entry", report.most_negative_entry.str()},
              {"worst_row_violation", report.worst_row_violation.str()},
              {"worst_col_violation", report.worst_col_violation.str()},
              {"support_violation_mass", report.support_violation_mass.str()},
              {"column_deficit_l1", report.column_deficit_l1.str()}};
  if (report.negative_witness) {
    out["negative_witness"] = pair_json(*report.negative_witness);
  }
  if (report.support_witness) {
    out["support_witness"] = pair_json(*report.support_witness);
  }
  if (report.row_witness) out["row_witness"] = *report.row_witness;
  if (report.col_witness) out["col_witness"] = *report.col_witness;
  return out;
}

json cmd_solve(const Instance& instance, const SolveOptions& options) {
  if (options.steps == 0) throw DomainError("--steps must be at least 1");
  Approximant result = delta_k(instance.mu, instance.nu, instance.order,
                               options.steps);
  const TruncatedRun& run = result.run;
  const IndexSet ground = run.poset.ground();

  json doc;
  doc["coupling"] = coupling_to_json(result.coupling(), options.as_float);
  doc["schedule"] = schedule_to_json(result.schedule);
  doc["verification"] = report_to_json(
      verify_solution(result.coupling(), run.mu, run.nu, run.poset, ground));
  if (options.trace) doc["trace"] = trace_to_json(run.result.traces);
  if (options.oracle_check) doc["oracle"] = oracle_json(run.mu, run.nu, run.poset);
  return doc;
}

json cmd_verify(const json& coupling_doc, const Instance& instance) {
  const json& entries =
      coupling_doc.is_object() && coupling_doc.contains("coupling")
          ? coupling_doc.at("coupling")
          : coupling_doc;
  Coupling lam = coupling_from_json(entries);
  Index last = lam.bound() == 0 ? 0 : lam.bound() - 1;
  if (instance.ground_hint && *instance.ground_hint > 0) {
    last = std::max(last, *instance.ground_hint - 1);
  }
  FiniteView view = finite_view(instance, last);
  return {{"verification",
           report_to_json(verify_solution(lam, view.mu, view.nu, view.poset,
                                          view.poset.ground()))}};
}

json cmd_bounds(const Instance& instance, Index n, Index m,
                const Rational& eps) {
  if (n == m || !instance.order.leq(n, m)) {
    throw OrderError("pair (" + std::to_string(n) + "," + std::to_string(m) +
                     ") is not strictly comparable in the instance order");
  }
  const std::uint64_t k0 = pointwise_k0(n, m, eps);
  json doc = {{"pair", json::array({n, m})}, {"eps", eps.str()}, {"k0", k0}};
  if (k0 <= kMaxScheduleSteps) {
    doc["schedule"] = schedule_to_json(
        schedule_n(instance.mu, instance.nu, static_cast<std::size_t>(k0)));
  } else {
    doc["schedule"] = nullptr;
  }
  return doc;
}

json cmd_oracle(const Instance& instance) {
  Index last = 0;
  if (!is_finite(instance.mu) || !is_finite(instance.nu)) {
    if (!instance.ground_hint || *instance.ground_hint == 0) {
      throw ValidationError("ground_hint",
                            "required by the oracle for geometric measures");
    }
    last = *instance.ground_hint - 1;
  } else if (instance.ground_hint && *instance.ground_hint > 0) {
    last = *instance.ground_hint - 1;
  }
  FiniteView view = finite_view(instance, last);
  return oracle_json(view.mu, view.nu, view.poset);
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace strassen::cli
