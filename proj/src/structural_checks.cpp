#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperlap/error.hpp"
#include "hyperlap/tensor_ops.hpp"

namespace hyperlap {

namespace {

struct EdgeRoles {
  std::vector<Vertex> cored;          // degree 1
  std::vector<Vertex> intersectional; // degree >= 2
};

EdgeRoles roles(const UniformHypergraph& h, const Edge& e) {
  EdgeRoles r;
  for (Vertex v : e) (h.degree(v) == 1 ? r.cored : r.intersectional).push_back(v);
  return r;
}

void record(CheckResult& c, double violation, double tol, const std::string& where) {
  if (violation > c.worst) c.worst = violation;
  if (violation > tol && c.passed) {
    c.passed = false;
    c.detail = where;
  }
}

std::string edge_label(std::size_t e) { return "edge " + std::to_string(e + 1); }

}  // namespace

StructuralReport structural_checks(const UniformHypergraph& h, const EigenPair& pair, double tol_struct,
                                   double tol_residual) {
  const double res = residual(h, pair.kind, pair.lambda, pair.x);
  if (res > tol_residual) {
    throw Error(ErrorCode::NotAnEigenpair, "residual " + std::to_string(res) + " exceeds tolerance");
  }
  const DenseVector x = normalized(pair.x);
  const double lambda = pair.lambda;
  const unsigned k = h.k();
  const bool odd = k % 2 == 1;
  const bool is_one = std::abs(lambda - 1.0) <= tol_struct;
  const auto cored = cored_structure(h);
  const bool laplacian = pair.kind == TensorKind::laplacian;

  CheckResult equal;
  equal.name = "cored-equal-magnitude";
  CheckResult product;
  product.name = "edge-product-sign";
  CheckResult relation;
  relation.name = "cored-intersection-relation";
  CheckResult sign;
  sign.name = "intersection-sign";

  if (!laplacian) {
    for (auto* c : {&equal, &product, &relation, &sign}) c->detail = "laplacian pairs only";
    return StructuralReport{{equal, product, relation, sign}};
  }

  if (!cored) {
    equal.detail = product.detail = "not cored";
  } else {
    equal.applicable = !is_one;
    if (!equal.applicable) equal.detail = "lambda = 1";
    product.applicable = lambda >= 1.0 - tol_struct;
    if (!product.applicable) product.detail = "lambda < 1";

    for (std::size_t ei = 0; ei < h.num_edges(); ++ei) {
      const Edge& e = h.edge(ei);
      if (equal.applicable) {
        const auto r = roles(h, e);
        for (std::size_t a = 0; a + 1 < r.cored.size(); ++a) {
          const double xi = x[r.cored[a]];
          const double xj = x[r.cored[a + 1]];
          const double gap = odd ? std::abs(xi - xj) : std::abs(std::abs(xi) - std::abs(xj));
          record(equal, gap, tol_struct, edge_label(ei));
        }
      }
      if (product.applicable) {
        double p = 1.0;
        for (Vertex v : e)
          if (!(odd && v == (*cored)[ei])) p *= x[v];
        record(product, p, tol_struct, edge_label(ei));
      }
    }
  }

  if (!odd) {
    relation.detail = sign.detail = "even uniformity";
  } else if (!has_power_shape(h)) {
    relation.detail = sign.detail = "not power-shaped";
  } else {
    relation.applicable = !is_one;
    if (!relation.applicable) relation.detail = "lambda = 1";
    sign.applicable = lambda > 1.0 + tol_struct;
    if (!sign.applicable) sign.detail = "lambda <= 1";

    for (std::size_t ei = 0; ei < h.num_edges(); ++ei) {
      const auto r = roles(h, h.edge(ei));
      if (r.cored.empty() || r.intersectional.empty()) continue;
      const double xs = x[r.cored.front()];
      if (std::abs(xs) <= tol_struct) continue;
      const double xi = x[r.intersectional[0]];
      double lhs = 0.0;
      double rhs = 0.0;
      if (r.intersectional.size() == 1) {
        lhs = xi;
        rhs = (1.0 - lambda) * xs;
      } else {
        lhs = xi * x[r.intersectional[1]];
        rhs = (1.0 - lambda) * xs * xs;
      }
      if (relation.applicable) record(relation, std::abs(lhs - rhs), tol_struct, edge_label(ei));
      if (sign.applicable) {
        const double s = r.intersectional.size() == 1 ? xi * xs : lhs;
        // strict inequality; any nonnegative product is a violation
        if (s >= 0.0) record(sign, std::max(s, std::numeric_limits<double>::min()), 0.0, edge_label(ei));
      }
    }
  }
  return StructuralReport{{equal, product, relation, sign}};
}

}  // namespace hyperlap
