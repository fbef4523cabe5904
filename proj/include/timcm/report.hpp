#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "timcm/achievability.hpp"
#include "timcm/converse.hpp"
#include "timcm/feasibility.hpp"
#include "timcm/topology.hpp"

namespace timcm {

// Everything the analyzer can say about one topology. Lower-bound entries
// are absent exactly when the topology admits no positive secure rate.
struct AnalysisReport {
  Topology topology;
  Topology canonical;
  FeasibilityResult feasibility;

  struct TdmaBound {
    Rational value;
    Schedule schedule;
  };
  std::optional<TdmaBound> tdma;
  std::optional<PartitionBound> partition;
  struct FractionalPart {
    FractionalBound bound;
    Schedule schedule;
  };
  std::optional<FractionalPart> fractional;

  CancellationBound cancellation;
  GeneratorBound generator;
  Rational combined;   // 0 when infeasible, else min of the two above
  Rational nonsecure;  // fractional independent-set packing, no jamming

  Rational best_lower;              // greatest certified lower bound, 0 if none
  std::optional<Rational> optimal;  // set when best_lower meets combined
};

AnalysisReport analyze(const Topology& t);

// Reports for every isomorphism class on k users, in canonical enumeration
// order. Analyses run in parallel; output order does not depend on workers.
struct Classification {
  int k = 0;
  std::vector<AnalysisReport> rows;
  int zero_count = 0;     // classes with secure rate exactly 0
  int positive_count = 0; // classes admitting a positive secure rate
  int settled_count = 0;  // classes where the bounds meet
};
Classification classify_all(int k, int workers = 0);

nlohmann::json report_json(const AnalysisReport& r);
std::string report_text(const AnalysisReport& r);
std::string report_csv_header();
std::string report_csv_row(const AnalysisReport& r, int index = 0);

nlohmann::json classification_json(const Classification& c);
std::string classification_text(const Classification& c);
std::string classification_csv(const Classification& c);

}  // namespace timcm
