#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "hyperlap/error.hpp"
#include "hyperlap/family_spectra.hpp"
#include "hyperlap/oracle.hpp"

namespace hyperlap {

namespace {

using StartBuilder = std::function<std::vector<DenseVector>(double)>;

constexpr double kEndGap = 1e-12;

DenseVector indicator(std::size_t n, Vertex v) {
  DenseVector x(n, 0.0);
  x[v] = 1.0;
  return x;
}

double real_root(double v, unsigned k) {
  const double r = std::pow(std::abs(v), 1.0 / static_cast<double>(k));
  return v < 0.0 ? -r : r;
}

void fill(DenseVector& x, std::size_t first, std::size_t last, double value) {
  for (std::size_t i = first; i <= last; ++i) x[i] = value;
}

void require_odd(unsigned k) {
  if (k < 3 || k % 2 == 0) {
    throw Error(ErrorCode::OddUniformityRequired, "this catalog needs odd k >= 3, got " + std::to_string(k));
  }
}

std::optional<EigenPair> first_certified(const UniformHypergraph& h, double lambda,
                                         const std::vector<DenseVector>& starts, const SolverOptions& opts) {
  for (const auto& x0 : starts) {
    if (x0.size() != h.n() || !std::all_of(x0.begin(), x0.end(), [](double v) { return std::isfinite(v); }) ||
        inf_norm(x0) == 0.0) {
      continue;
    }
    if (auto pair = certify(h, lambda, x0, opts)) return pair;
  }
  return std::nullopt;
}

struct CaseSpec {
  std::string variant;
  ScalarFunction f;
  Interval domain;
  bool closed_lo = false;  // include the lower end
  StartBuilder starts;
};

// Roots of each case equation, certified from the case's own starts first and
// then from the starts of the other cases.
void add_cases(SpectrumReport& report, const UniformHypergraph& h, const std::vector<CaseSpec>& cases,
               const SolverOptions& opts) {
  for (const auto& c : cases) {
    for (double lambda : all_real_roots(c.f, c.domain, opts)) {
      const bool inside = (c.closed_lo ? lambda >= c.domain.lo : lambda > c.domain.lo + kEndGap) &&
                          lambda < c.domain.hi - kEndGap;
      if (!inside) continue;
      auto pair = first_certified(h, lambda, c.starts(lambda), opts);
      for (std::size_t o = 0; !pair && o < cases.size(); ++o) {
        if (cases[o].variant != c.variant) pair = first_certified(h, lambda, cases[o].starts(lambda), opts);
      }
      const bool ok = pair.has_value();
      report.candidates.push_back(CandidateRecord{c.variant, lambda, ok});
      report.add(make_entry(lambda, c.variant, std::move(pair), opts.tol_residual));
    }
  }
}

void add_fixed_entries(SpectrumReport& report, const UniformHypergraph& h, Vertex junction,
                       const SolverOptions& opts) {
  report.add(make_entry(0.0, "zero (all-ones)",
                        make_eigenpair(h, TensorKind::laplacian, 0.0, DenseVector(h.n(), 1.0)), opts.tol_residual));
  report.add(cored_lambda1(h, opts));
  report.add(make_entry(2.0, "lambda=2 junction",
                        make_eigenpair(h, TensorKind::laplacian, 2.0, indicator(h.n(), junction)), opts.tol_residual));
}

ScalarFunction poly(std::function<double(double)> value, Interval domain) {
  return ScalarFunction{std::move(value), {}, domain};
}

}  // namespace

SpectrumEntry cored_lambda1(const UniformHypergraph& h, const SolverOptions& opts) {
  const auto cored = cored_structure(h);
  if (!cored) throw Error(ErrorCode::NotCored, "some edge has no degree-1 vertex");
  auto pair = make_eigenpair(h, TensorKind::laplacian, 1.0, indicator(h.n(), cored->front()));
  return make_entry(1.0, "lambda=1 cored", std::move(pair), opts.tol_residual);
}

OddFamilyResult odd_family_lambda_max(const UniformHypergraph& h, const SolverOptions& opts) {
  require_odd(h.k());
  const auto family = identify_family(h);
  const bool supported =
      family && (std::holds_alternative<Hypercycle>(*family) ||
                 (std::holds_alternative<Hyperpath>(*family) && std::get<Hyperpath>(*family).d >= 3) ||
                 std::holds_alternative<Sunflower>(*family));
  if (!supported) {
    throw Error(ErrorCode::FamilyMismatch,
                "expected a hypercycle, a hyperpath of length >= 3 or a sunflower" +
                    (family ? ", got " + describe(*family) : std::string()));
  }
  const auto& deg = h.degree_vector();
  const auto junction = static_cast<Vertex>(std::find(deg.begin(), deg.end(), 2) - deg.begin());

  OddFamilyResult out;
  out.entry = make_entry(2.0, "lambda=2 junction",
                         make_eigenpair(h, TensorKind::laplacian, 2.0, indicator(h.n(), junction)), opts.tol_residual);
  const auto findings = multistart_search(h, opts);
  out.oracle_findings = findings.size();
  out.oracle_max = findings.empty() ? -std::numeric_limits<double>::infinity() : findings.back().lambda;
  out.confirmed = out.oracle_max <= 2.0 + opts.tol_struct;
  return out;
}

// ---- length-3 hyperpath ----

ScalarFunction hyperpath3_case2(unsigned k) {
  return poly([k](double l) { return (l - 2.0) * ipow(1.0 - l, k - 1) + 1.0; }, {0.0, 1.0});
}

ScalarFunction hyperpath3_case3(unsigned k) {
  return poly([k](double l) { return ipow(l - 2.0, 2) * ipow(1.0 - l, k - 2) - 1.0; }, {0.0, 1.0});
}

ScalarFunction hyperpath3_case4(unsigned k) {
  return poly([k](double l) { return ipow(l - 2.0, 2) * ipow(1.0 - l, k - 1) + 2.0 * l - 3.0; }, {0.0, 2.0});
}

ScalarFunction hyperpath3_symmetric_stated(unsigned k) {
  return poly(
      [k](double l) { return ipow((l - 2.0) * ipow(1.0 - l, k - 1) + 1.0, 2) * ipow(1.0 - l, k) - 1.0; },
      {0.0, 1.0});
}

ScalarFunction hyperpath3_symmetric_corrected(unsigned k) {
  return poly([k](double l) { return ipow((l - 2.0) * ipow(1.0 - l, k - 1) + 1.0, 2) - ipow(1.0 - l, k); },
              {0.0, 1.0});
}

SpectrumReport hyperpath3_spectrum(unsigned k, const SolverOptions& opts) {
  require_odd(k);
  const UniformHypergraph h = generate(Hyperpath{k, 3});
  const std::size_t n = h.n();
  // left cored 0..k-2, alpha k-1, middle k..2k-3, beta 2k-2, right cored 2k-1..3k-3
  const std::size_t alpha = k - 1;
  const std::size_t beta = 2 * k - 2;

  auto one_sided = [=](double l) {
    DenseVector right(n, 0.0);
    right[beta] = 1.0;
    fill(right, beta + 1, n - 1, 1.0 / (1.0 - l));
    DenseVector left(n, 0.0);
    left[alpha] = 1.0;
    fill(left, 0, alpha - 1, 1.0 / (1.0 - l));
    return std::vector<DenseVector>{right, left};
  };
  auto middle = [=](double l) {
    DenseVector x(n, 0.0);
    x[alpha] = x[beta] = 1.0;
    fill(x, alpha + 1, beta - 1, 1.0 / std::sqrt(1.0 - l));
    return std::vector<DenseVector>{x};
  };
  auto mixed = [=](double l) {
    const double t = real_root(1.0 / (ipow(l - 2.0, 2) * ipow(1.0 - l, k - 2)), k);
    const double m = std::sqrt(std::abs(t / (1.0 - l)));
    DenseVector x(n, 0.0);
    x[alpha] = t;
    x[beta] = 1.0;
    fill(x, alpha + 1, beta - 1, m);
    fill(x, beta + 1, n - 1, 1.0 / (1.0 - l));
    DenseVector mirrored(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) mirrored[i] = x[n - 1 - i];
    return std::vector<DenseVector>{x, mirrored};
  };
  auto symmetric = [=](double l) {
    std::vector<DenseVector> out;
    for (double sign : {-1.0, 1.0}) {
      DenseVector x(n, 1.0 / (1.0 - l));
      x[alpha] = x[beta] = 1.0;
      fill(x, alpha + 1, beta - 1, sign / std::sqrt(1.0 - l));
      out.push_back(std::move(x));
    }
    return out;
  };

  SpectrumReport report;
  report.family = Hyperpath{k, 3};
  report.family_text = describe(*report.family);
  report.k = k;
  report.max_degree = 2;
  report.method = "closed form + certification";
  add_fixed_entries(report, h, static_cast<Vertex>(alpha), opts);
  add_cases(report, h,
            {
                {"hyperpath3 case (ii)", hyperpath3_case2(k), {0.0, 1.0}, false, one_sided},
                {"hyperpath3 case (iii)", hyperpath3_case3(k), {0.0, 1.0}, false, middle},
                {"hyperpath3 case (iv)", hyperpath3_case4(k), {0.0, 2.0}, false, mixed},
                {"hyperpath3 symmetric branch, stated", hyperpath3_symmetric_stated(k), {0.0, 1.0}, false, symmetric},
                {"hyperpath3 symmetric branch, corrected", hyperpath3_symmetric_corrected(k), {0.0, 1.0}, false,
                 symmetric},
            },
            opts);
  report.finalize();
  return report;
}

// ---- size-3 hypercycle ----

ScalarFunction hypercycle3_case2(unsigned k) { return hyperpath3_case3(k); }

ScalarFunction hypercycle3_case3_stated(unsigned k) {
  const double rhs = 2.0 * std::pow(4.0, 1.0 / static_cast<double>(k));
  return poly([=](double l) { return ipow(l - 2.0, 2) * ipow(1.0 - l, k - 2) - rhs; }, {0.0, 1.0});
}

ScalarFunction hypercycle3_case3_corrected(unsigned k) {
  return poly([=](double l) { return ipow(l - 2.0, 2) * ipow(1.0 - l, k - 2) - 2.0; }, {0.0, 1.0});
}

ScalarFunction hypercycle3_case4(unsigned k, int sign, double factor) {
  return poly(
      [=](double l) {
        const double root = static_cast<double>(sign) * std::sqrt(1.0 - l);
        return ((l - 2.0) + ipow(root, k - 2)) * (2.0 - l) * factor + 2.0;
      },
      {0.0, 1.0});
}

SpectrumReport hypercycle3_spectrum(unsigned k, const SolverOptions& opts) {
  require_odd(k);
  const UniformHypergraph h = generate(Hypercycle{k, 3});
  const std::size_t n = h.n();
  // alpha 0, C1 1..k-2, beta k-1, C2 k..2k-3, gamma 2k-2, C3 2k-1..3k-4
  const std::size_t beta = k - 1;
  const std::size_t gamma = 2 * k - 2;

  auto layout = [=](double a, double b, double g, double c1, double c2, double c3) {
    DenseVector x(n, 0.0);
    x[0] = a;
    x[beta] = b;
    x[gamma] = g;
    fill(x, 1, beta - 1, c1);
    fill(x, beta + 1, gamma - 1, c2);
    fill(x, gamma + 1, n - 1, c3);
    return x;
  };
  auto one_group = [=](double l) {
    return std::vector<DenseVector>{layout(1.0, 1.0, 0.0, 1.0 / std::sqrt(1.0 - l), 0.0, 0.0)};
  };
  auto two_groups = [=](double l) {
    const double s = std::pow(0.5, 1.0 / static_cast<double>(k));
    const double c = std::sqrt(s / (1.0 - l));
    return std::vector<DenseVector>{layout(s, 1.0, s, c, c, 0.0)};
  };
  auto three_groups = [=](double l) {
    std::vector<DenseVector> out;
    const double s_eq = std::pow(ipow(2.0 - l, 2) * ipow(1.0 - l, k - 2) / 4.0, 1.0 / static_cast<double>(k));
    const double s_sum = std::pow(0.5, 2.0 / static_cast<double>(k));
    for (double s : {s_eq, s_sum}) {
      for (double sign : {1.0, -1.0}) {
        const double c = sign * std::sqrt(s / (1.0 - l));
        const double c3 = sign * std::sqrt(s * s / (1.0 - l));
        out.push_back(layout(s, 1.0, s, c, c, c3));
      }
    }
    return out;
  };

  SpectrumReport report;
  report.family = Hypercycle{k, 3};
  report.family_text = describe(*report.family);
  report.k = k;
  report.max_degree = 2;
  report.method = "closed form + certification";
  add_fixed_entries(report, h, 0, opts);
  add_cases(report, h,
            {
                {"hypercycle3 case (ii)", hypercycle3_case2(k), {0.0, 1.0}, false, one_group},
                {"hypercycle3 case (iii), stated", hypercycle3_case3_stated(k), {0.0, 1.0}, false, two_groups},
                {"hypercycle3 case (iii), corrected", hypercycle3_case3_corrected(k), {0.0, 1.0}, false, two_groups},
                {"hypercycle3 case (iv), statement, + branch", hypercycle3_case4(k, 1, 1.0), {0.0, 1.0}, true,
                 three_groups},
                {"hypercycle3 case (iv), statement, - branch", hypercycle3_case4(k, -1, 1.0), {0.0, 1.0}, true,
                 three_groups},
                {"hypercycle3 case (iv), derivation, + branch", hypercycle3_case4(k, 1, 2.0), {0.0, 1.0}, true,
                 three_groups},
                {"hypercycle3 case (iv), derivation, - branch", hypercycle3_case4(k, -1, 2.0), {0.0, 1.0}, true,
                 three_groups},
            },
            opts);
  report.finalize();
  return report;
}

}  // namespace hyperlap
