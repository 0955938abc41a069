#pragma once

#include <string>
#include <vector>

#include "gemcraft/diagram_io.hpp"
#include "gemcraft/graph.hpp"
#include "gemcraft/heegaard.hpp"

namespace gemcraft {

/// Parameters of the two handle connections, (p,h) and (q,k).
struct LambdaParams {
  int p = 0, h = 0, q = 0, k = 0;

  /// Throws PreconditionError unless 1 <= h <= p, 1 <= k <= q and both pairs coprime.
  void validate() const;
  std::string str() const;
  bool operator==(const LambdaParams&) const = default;
};

/// Seifert manifold (D^2; (p,alpha), (q,beta)).
struct SeifertParams {
  int p = 0, alpha = 0, q = 0, beta = 0;
  std::string str() const;
  bool operator==(const SeifertParams&) const = default;
};

struct BoundFormulaResult {
  int value = 0;
  int delta_alpha = 0;
  int delta_beta = 0;
};

/// Vertex numbering of the Lambda graph: for i in 1..p the four vertices
/// A_i, A'_i, C_i, C'_i are 4(i-1)+0..3; for j in 1..q, B_j, B'_j, D_j, D'_j
/// follow at 4p + 4(j-1) + 0..3.
struct LambdaLayout {
  int p, q;
  int A(int i) const { return 4 * wrap(i, p) + 0; }
  int Ap(int i) const { return 4 * wrap(i, p) + 1; }
  int C(int i) const { return 4 * wrap(i, p) + 2; }
  int Cp(int i) const { return 4 * wrap(i, p) + 3; }
  int B(int j) const { return 4 * p + 4 * wrap(j, q) + 0; }
  int Bp(int j) const { return 4 * p + 4 * wrap(j, q) + 1; }
  int D(int j) const { return 4 * p + 4 * wrap(j, q) + 2; }
  int Dp(int j) const { return 4 * p + 4 * wrap(j, q) + 3; }
  std::string label(int v) const;

 private:
  static int wrap(int i, int n) { return ((i - 1) % n + n) % n; }
};

ColouredGraph lambda_graph(const LambdaParams& params);

/// Complement of the torus knot t(p,q), p > q >= 2 coprime.
LambdaParams torus_knot_params(int p, int q);
ColouredGraph torus_knot_graph(int p, int q);

SeifertParams seifert_of(const LambdaParams& params);
BoundFormulaResult complexity_bound(const SeifertParams& s);

/// Every valid tuple with p >= q >= 2 and p + q <= max_sum, in lexicographic order.
std::vector<LambdaParams> lambda_tuples(int max_sum);

int mod_inverse(int a, int m);

/// Genus-two diagram with V-curves through A_1..A_p and B_1..B_q and one
/// W-curve visiting A_h, A_2h, ..., A_p, B_k, ..., B_q. Crossing A_i has id
/// i-1 and B_j has id p+j-1.
RotationSpec standard_rotation_spec(const LambdaParams& params);
HeegaardDiagram standard_diagram(const LambdaParams& params);

/// Best reduction of the colour-1 diagram of lambda_graph(params) that drops
/// the long {0,2}-cycle and one W-curve.
ComplexityReport canonical_reduction(const LambdaParams& params);

}  // namespace gemcraft
