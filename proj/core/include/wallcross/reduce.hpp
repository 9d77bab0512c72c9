#pragma once

// The rank-reduction driver: normalization, wall enumeration for v_n, the
// Joyce-Song relation, and its solution for the large-volume invariant.

#include <optional>
#include <string>
#include <vector>

#include "wallcross/symbolic.hpp"
#include "wallcross/wallengine.hpp"

namespace wallcross {

struct ReductionOptions {
  std::optional<Region> region;  // where walls of v_n are enumerated
  std::optional<VnBounds> bounds;
  unsigned threads = 1;
  // Throw CertificateFailed instead of reporting an uncertified JS step.
  bool require_certificate = false;
  CertificateOptions certificate;
};

struct ReductionStep {
  int index = 0;
  std::string name;
  std::string detail;
  bool certified = true;
};

struct ReductionReport {
  NumClass input;
  NumClass v;  // after normalization
  Rational twist;
  std::int64_t n = 0;
  NumClass vn;
  std::optional<WallLine> ell_f;
  std::optional<WallLine> ell_js;
  std::optional<std::int64_t> suggested_n;
  std::vector<Wall> walls;
  JsRelation js;
  std::vector<Relation> wall_relations;  // one per wall off the JS line
  Relation solution;                     // J_inf(v) = ...
  Relation tilt_solution;                // J_ti(v) = ...
  std::vector<Relation> gieseker_skeletons;
  Relation gieseker_solution;            // J(v) = ...
  ClassAliases aliases;
  std::vector<ReductionStep> steps;

  bool certified() const;
  // The JS relation, e.g. "J_{bw+}(v_n) = 15 * J_inf(v)".
  std::string formula() const;
  std::string log() const;
};

ReductionReport rank_reduce(const NumClass& v, std::int64_t n, const CY3Context& ctx,
                            const ReductionOptions& options = {});

}  // namespace wallcross
