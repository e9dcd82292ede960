#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/tensor_ops.hpp"

namespace hyperlap {

struct SpectrumEntry {
  double lambda = 0.0;
  std::string case_tag;  // provenance; merged entries join their tags with "; "
  bool certified = false;
  std::optional<EigenPair> witness;
};

/// One root of one case equation and whether any start vector certified it.
struct CandidateRecord {
  std::string variant;
  double lambda = 0.0;
  bool certified = false;
};

struct SpectrumReport {
  std::optional<FamilySpec> family;
  std::string family_text;
  unsigned k = 0;
  std::size_t max_degree = 0;
  std::string method;
  std::vector<SpectrumEntry> entries;  // ascending by lambda after finalize()
  std::vector<CandidateRecord> candidates;
  std::vector<std::string> notes;

  /// Inserts `entry`, merging with an existing entry closer than 1e-8. A
  /// merged entry keeps every tag and the first certified witness.
  void add(SpectrumEntry entry);

  /// Sorts ascending by lambda.
  void finalize();

  std::vector<double> certified_values() const;
  const SpectrumEntry* find(double lambda, double tol) const;
};

/// Certified entry holding `pair` when its residual is within `tol_residual`;
/// otherwise uncertified with the pair kept for inspection.
SpectrumEntry make_entry(double lambda, std::string tag, std::optional<EigenPair> pair, double tol_residual);

}  // namespace hyperlap
