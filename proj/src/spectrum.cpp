#include "hyperlap/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace hyperlap {

namespace {
constexpr double kMergeTol = 1e-8;
}

void SpectrumReport::add(SpectrumEntry entry) {
  for (auto& e : entries) {
    if (std::abs(e.lambda - entry.lambda) > kMergeTol) continue;
    if (e.case_tag.find(entry.case_tag) == std::string::npos) e.case_tag += "; " + entry.case_tag;
    if (!e.certified && entry.certified) {
      e.certified = true;
      e.lambda = entry.lambda;
      e.witness = std::move(entry.witness);
    } else if (!e.witness && entry.witness) {
      e.witness = std::move(entry.witness);
    }
    return;
  }
  entries.push_back(std::move(entry));
}

void SpectrumReport::finalize() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.lambda < b.lambda; });
}

std::vector<double> SpectrumReport::certified_values() const {
  std::vector<double> out;
  for (const auto& e : entries)
    if (e.certified) out.push_back(e.lambda);
  return out;
}

const SpectrumEntry* SpectrumReport::find(double lambda, double tol) const {
  for (const auto& e : entries)
    if (std::abs(e.lambda - lambda) <= tol) return &e;
  return nullptr;
}

SpectrumEntry make_entry(double lambda, std::string tag, std::optional<EigenPair> pair, double tol_residual) {
  SpectrumEntry e;
  e.lambda = lambda;
  e.case_tag = std::move(tag);
  e.certified = pair && pair->residual <= tol_residual;
  e.witness = std::move(pair);
  return e;
}

}  // namespace hyperlap
