#include "timcm/report.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

namespace timcm {

AnalysisReport analyze(const Topology& t) {
  AnalysisReport r{t, t.canonical(), check_feasibility(t),
                   std::nullopt, std::nullopt, std::nullopt,
                   cancellation_upper_bound(t), generator_upper_bound(t),
                   Rational(0), nonsecure_fractional_is_bound(t),
                   Rational(0), std::nullopt};
  if (r.feasibility.feasible) {
    r.tdma = AnalysisReport::TdmaBound{Rational(1, t.user_count()), secure_tdma_schedule(t)};
    r.partition = best_secure_partition(t);
    if (auto frac = fractional_sis_bound(t))
      r.fractional = AnalysisReport::FractionalPart{*frac, schedule_from_weights(t, *frac)};
    r.combined = std::min(r.cancellation.value, r.generator.value);
  }
  if (r.tdma) r.best_lower = std::max(r.best_lower, r.tdma->value);
  if (r.partition) r.best_lower = std::max(r.best_lower, r.partition->value);
  if (r.fractional) r.best_lower = std::max(r.best_lower, r.fractional->bound.value);
  if (r.best_lower == r.combined) r.optimal = r.combined;
  return r;
}

Classification classify_all(int k, int workers) {
  auto topologies = Topology::enumerate_all(k);
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min<int>(workers, static_cast<int>(topologies.size()));

  std::vector<std::optional<AnalysisReport>> slots(topologies.size());
  std::vector<std::future<void>> jobs;
  jobs.reserve(workers);
  for (int w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < topologies.size(); i += workers)
        slots[i] = analyze(topologies[i]);
    }));
  for (auto& j : jobs) j.get();

  Classification c;
  c.k = k;
  c.rows.reserve(topologies.size());
  for (auto& s : slots) c.rows.push_back(std::move(*s));
  for (const AnalysisReport& r : c.rows) {
    if (r.combined.zero()) ++c.zero_count;
    if (r.feasibility.feasible) ++c.positive_count;
    if (r.optimal) ++c.settled_count;
  }
  return c;
}

namespace {

std::string matrix_compact(const Topology& t) {
  std::string s;
  for (int j = 1; j <= t.user_count(); ++j) {
    if (j > 1) s += '/';
    for (int i = 1; i <= t.user_count(); ++i) s += t.heard(j).contains(i) ? '1' : '0';
  }
  return s;
}

nlohmann::json removal_slots_json(const std::vector<RemovalSlot>& slots) {
  nlohmann::json arr = nlohmann::json::array();
  for (const RemovalSlot& s : slots)
    arr.push_back({{"receiver", s.receiver}, {"pick", s.pick}, {"removed", s.removed}});
  return arr;
}

nlohmann::json generator_choices_json(const std::vector<GeneratorChoice>& choices) {
  nlohmann::json arr = nlohmann::json::array();
  for (const GeneratorChoice& c : choices)
    arr.push_back({{"receiver", c.receiver},
                   {"generated", c.generated.to_vector()},
                   {"order", c.order},
                   {"last", c.last}});
  return arr;
}

std::string set_text(UserSet s) {
  std::string out = "{";
  bool first = true;
  for (int u : s) {
    if (!first) out += ",";
    out += std::to_string(u);
    first = false;
  }
  return out + "}";
}

}  // namespace

nlohmann::json report_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["k"] = r.topology.user_count();
  j["heard"] = r.topology.to_json()["heard"];
  j["canonical_heard"] = r.canonical.to_json()["heard"];
  j["feasible"] = r.feasibility.feasible;
  if (r.feasibility.witness) {
    const BlockingPair& w = *r.feasibility.witness;
    j["blocking_pair"] = {{"first", w.first}, {"second", w.second}, {"nesting", nesting_name(w.nesting)}};
  } else {
    j["blocking_pair"] = nullptr;
  }

  if (r.tdma)
    j["lower_bounds"]["tdma"] = {{"value", r.tdma->value.str()},
                                 {"schedule", r.tdma->schedule.to_json()}};
  else
    j["lower_bounds"]["tdma"] = nullptr;
  if (r.partition) {
    nlohmann::json parts = nlohmann::json::array();
    for (const SecureSet& p : r.partition->parts)
      parts.push_back({{"users", p.users.to_vector()}, {"jammers", p.jammers.to_vector()}});
    j["lower_bounds"]["partition"] = {{"value", r.partition->value.str()},
                                      {"parts", parts},
                                      {"schedule", r.partition->schedule.to_json()}};
  } else {
    j["lower_bounds"]["partition"] = nullptr;
  }
  if (r.fractional) {
    nlohmann::json weights = nlohmann::json::array();
    for (const WeightedSet& w : r.fractional->bound.weights)
      weights.push_back({{"users", w.users.to_vector()},
                         {"jammers", w.jammers.to_vector()},
                         {"weight", w.weight.str()}});
    j["lower_bounds"]["fractional"] = {{"value", r.fractional->bound.value.str()},
                                       {"weights", weights},
                                       {"schedule", r.fractional->schedule.to_json()}};
  } else {
    j["lower_bounds"]["fractional"] = nullptr;
  }

  j["upper_bounds"]["cancellation"] = {{"value", r.cancellation.value.str()},
                                       {"s1", r.cancellation.s1.to_vector()},
                                       {"s2", r.cancellation.s2.to_vector()},
                                       {"residual", r.cancellation.residual},
                                       {"s2_slots", removal_slots_json(r.cancellation.s2_slots)},
                                       {"s1_slots", removal_slots_json(r.cancellation.s1_slots)}};
  j["upper_bounds"]["generator"] = {{"value", r.generator.value.str()},
                                    {"s1", r.generator.s1.to_vector()},
                                    {"s2", r.generator.s2.to_vector()},
                                    {"residual", r.generator.residual},
                                    {"s2_choices", generator_choices_json(r.generator.s2_choices)},
                                    {"s1_choices", generator_choices_json(r.generator.s1_choices)}};
  j["upper_bounds"]["combined"] = r.combined.str();

  j["nonsecure"] = r.nonsecure.str();
  j["best_lower"] = r.best_lower.str();
  j["optimal"] = r.optimal ? nlohmann::json(r.optimal->str()) : nlohmann::json(nullptr);
  return j;
}

std::string report_text(const AnalysisReport& r) {
  std::ostringstream out;
  int k = r.topology.user_count();
  out << "users: " << k << "\n";
  out << "heard:\n";
  for (int j = 1; j <= k; ++j) {
    out << "  " << j << ":";
    for (int i : r.topology.heard(j)) out << " " << i;
    out << "\n";
  }
  if (r.feasibility.feasible) {
    out << "feasible: yes\n";
  } else {
    const BlockingPair& w = *r.feasibility.witness;
    out << "feasible: no (blocking pair " << w.first << "," << w.second << " "
        << nesting_name(w.nesting) << ")\n";
  }
  out << "lower bounds:\n";
  if (r.tdma) out << "  tdma: " << r.tdma->value.str() << "\n";
  if (r.partition) {
    out << "  partition: " << r.partition->value.str() << " parts:";
    for (const SecureSet& p : r.partition->parts) out << " " << set_text(p.users);
    out << "\n";
  }
  if (r.fractional) {
    out << "  fractional: " << r.fractional->bound.value.str() << " weights:";
    for (const WeightedSet& w : r.fractional->bound.weights)
      out << " " << set_text(w.users) << "=" << w.weight.str();
    out << "\n";
  }
  if (!r.tdma && !r.partition && !r.fractional) out << "  none (secure rate is 0)\n";
  out << "upper bounds:\n";
  out << "  cancellation: " << r.cancellation.value.str() << " s1=" << set_text(r.cancellation.s1)
      << " s2=" << set_text(r.cancellation.s2) << " residual=" << r.cancellation.residual << "\n";
  out << "  generator: " << r.generator.value.str() << " s1=" << set_text(r.generator.s1)
      << " s2=" << set_text(r.generator.s2) << " residual=" << r.generator.residual << "\n";
  out << "  combined: " << r.combined.str() << "\n";
  out << "nonsecure fractional: " << r.nonsecure.str() << "\n";
  out << "best lower: " << r.best_lower.str() << "\n";
  if (r.optimal)
    out << "secure rate: " << r.optimal->str() << " (bounds meet)\n";
  else
    out << "secure rate: between " << r.best_lower.str() << " and " << r.combined.str() << "\n";
  return out.str();
}

std::string report_csv_header() {
  return "index,users,matrix,feasible,tdma,partition,fractional,nonsecure,"
         "cancellation,generator,combined,best_lower,optimal";
}

std::string report_csv_row(const AnalysisReport& r, int index) {
  std::ostringstream out;
  out << index << "," << r.topology.user_count() << "," << matrix_compact(r.topology) << ","
      << (r.feasibility.feasible ? "yes" : "no") << ","
      << (r.tdma ? r.tdma->value.str() : "") << ","
      << (r.partition ? r.partition->value.str() : "") << ","
      << (r.fractional ? r.fractional->bound.value.str() : "") << ","
      << r.nonsecure.str() << "," << r.cancellation.value.str() << ","
      << r.generator.value.str() << "," << r.combined.str() << "," << r.best_lower.str() << ","
      << (r.optimal ? r.optimal->str() : "");
  return out.str();
}

nlohmann::json classification_json(const Classification& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (const AnalysisReport& r : c.rows) rows.push_back(report_json(r));
  return {{"k", c.k},
          {"classes", static_cast<int>(c.rows.size())},
          {"zero", c.zero_count},
          {"positive", c.positive_count},
          {"settled", c.settled_count},
          {"rows", rows}};
}

std::string classification_text(const Classification& c) {
  std::ostringstream out;
  out << "k=" << c.k << ": " << c.rows.size() << " classes, " << c.positive_count
      << " with positive secure rate, " << c.zero_count << " at zero, " << c.settled_count
      << " settled\n";
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    const AnalysisReport& r = c.rows[i];
    out << "  " << (i + 1) << ": " << matrix_compact(r.topology) << "  ";
    if (r.optimal)
      out << "rate " << r.optimal->str();
    else
      out << "rate in [" << r.best_lower.str() << ", " << r.combined.str() << "]";
    out << "\n";
  }
  return out.str();
}

std::string classification_csv(const Classification& c) {
  std::string out = report_csv_header() + "\n";
  for (std::size_t i = 0; i < c.rows.size(); ++i)
    out += report_csv_row(c.rows[i], static_cast<int>(i) + 1) + "\n";
  return out;
}

}  // namespace timcm
