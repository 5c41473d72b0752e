// Copyright 2026 The unimetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "unimetric/acceptance.hpp"
#include "unimetric/circlegeom.hpp"
#include "unimetric/metrics.hpp"
#include "unimetric/pauli.hpp"
#include "unimetric/search.hpp"
#include "unimetric/subsets.hpp"

namespace unimetric::acceptance {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Tracks the worst error of a family of checks against one tolerance.
class Tally {
 public:
  Tally(std::string label, double tol) : label_(std::move(label)), tol_(tol) {}

  void add(double error) {
    ++count_;
    if (!(error <= tol_)) ++failures_;
    if (!(error <= worst_)) worst_ = error;
  }

  bool ok() const { return failures_ == 0; }

  std::string str() const {
    std::ostringstream os;
    os << label_ << ": worst " << std::setprecision(3) << worst_ << " vs tol "
       << tol_ << " (" << count_ - failures_ << "/" << count_ << " ok)";
    return os.str();
  }

 private:
  std::string label_;
  double tol_;
  double worst_ = 0.0;
  std::size_t count_ = 0;
  std::size_t failures_ = 0;
};

Outcome combine(std::initializer_list<const Tally*> tallies,
                const std::string& extra = "") {
  Outcome out;
  for (const Tally* t : tallies) {
    out.passed = out.passed && t->ok();
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += t->str();
  }
  if (!extra.empty()) out.detail += "; " + extra;
  return out;
}

ComplexMatrix diag_phase(double theta) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(1, 1) = std::polar(1.0, theta);
  return m;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Unitary with the given eigenangles in a random eigenbasis.
UnitaryOperator with_spectrum(const std::vector<double>& angles,
                              std::mt19937_64& rng) {
  const Index n = static_cast<Index>(angles.size());
  const ComplexMatrix q = haar_random_unitary(n, rng).matrix();
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) {
    d(k, k) = std::polar(1.0, angles[static_cast<std::size_t>(k)]);
  }
  return validate_unitary(q * d * q.adjoint());
}

struct Context {
  double scale;
  std::mt19937_64 rng;
  double tol(double t) const { return scale > 0 ? t * scale : -1.0; }
};

Outcome arc_formula(Context& c) {
  Tally t("|d - sin(theta/2)|", c.tol(1e-12));
  const auto id = validate_unitary(ComplexMatrix::Identity(2, 2));
  for (int k = 1; k <= 50; ++k) {
    const double theta = kPi * k / 51.0;
    t.add(std::abs(sup_distance(id, validate_unitary(diag_phase(theta))).value -
                   std::sin(theta / 2)));
  }
  return combine({&t});
}

Outcome semicircle_saturation(Context& c) {
  Tally t("|d - 1|", c.tol(1e-12));
  const auto id = validate_unitary(ComplexMatrix::Identity(2, 2));
  double worst_theta = kPi;
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double theta = kPi + kPi * k / 50.0;
    const double err =
        std::abs(sup_distance(id, validate_unitary(diag_phase(theta))).value - 1.0);
    t.add(err);
    if (err > worst) {
      worst = err;
      worst_theta = theta;
    }
  }
  std::ostringstream os;
  os << "worst at theta = " << std::setprecision(4) << worst_theta
     << " where sin(theta/2) = " << std::sin(worst_theta / 2);
  return combine({&t}, os.str());
}

Outcome appendix_oracle(Context& c) {
  Tally t("|d - sqrt(1 - polygon^2)|", c.tol(1e-9));
  const auto id = [](Index n) {
    return validate_unitary(ComplexMatrix::Identity(n, n));
  };
  for (Index n : {2, 3, 4, 6}) {
    for (int k = 0; k < 50; ++k) {
      const auto u = haar_random_unitary(n, c.rng);
      const double d = sup_distance(id(n), u).value;
      const double p = polygon_distance_to_origin(u.eigen_angles()).distance;
      t.add(std::abs(d - std::sqrt(std::max(0.0, 1.0 - p * p))));
    }
  }
  return combine({&t});
}

Outcome sup_via_optimization(Context& c) {
  Tally t("|optimized - closed form|", c.tol(1e-6));
  Tally above("optimized - closed form", c.tol(1e-9));
  int below_one = 0;
  for (int k = 0; k < 50; ++k) {
    const auto u = haar_random_unitary(4, c.rng);
    const auto v = haar_random_unitary(4, c.rng);
    const double closed = sup_distance(u, v).value;
    if (closed < 1.0) ++below_one;
    const double opt = maximize_d_psi(u.matrix(), v.matrix(), c.rng);
    t.add(std::abs(opt - closed));
    above.add(std::max(0.0, opt - closed));
  }
  return combine({&t, &above},
                 std::to_string(below_one) + "/50 pairs with d < 1");
}

Outcome tensor_rule(Context& c) {
  Tally t("|rule - d(U(x)W, V(x)X)|", c.tol(1e-9));
  int saturated = 0;
  for (int k = 0; k < 100; ++k) {
    const auto u = haar_random_unitary(2, c.rng), v = haar_random_unitary(2, c.rng);
    const auto w = haar_random_unitary(3, c.rng), x = haar_random_unitary(3, c.rng);
    const double d1 = sup_distance(u, v).value;
    const double d2 = sup_distance(w, x).value;
    if (d1 * d1 + d2 * d2 >= 1.0) ++saturated;
    const double direct = sup_distance(validate_unitary(kron(u.matrix(), w.matrix())),
                                       validate_unitary(kron(v.matrix(), x.matrix())))
                              .value;
    t.add(std::abs(tensor_distance(d1, d2) - direct));
  }
  Outcome out = combine({&t}, "saturated " + std::to_string(saturated) +
                                  "/100, unsaturated " +
                                  std::to_string(100 - saturated) + "/100");
  // Both branches of the rule must have been exercised.
  out.passed = out.passed && saturated > 0 && saturated < 100;
  return out;
}

Outcome schatten_scaling(Context& c) {
  Tally t("|schatten_p - 2^(1/p) sqrt(1 - |<psi|phi>|^2)|", c.tol(1e-9));
  for (int k = 0; k < 50; ++k) {
    const Index n = 2 + k % 5;
    const ComplexVector psi = random_unit_vector(n, c.rng);
    const ComplexVector phi = random_unit_vector(n, c.rng);
    const ComplexMatrix diff = psi * psi.adjoint() - phi * phi.adjoint();
    const double s = std::sqrt(std::max(0.0, 1.0 - std::norm(psi.dot(phi))));
    for (double p : {1.0, 2.0, 3.0}) {
      t.add(std::abs(schatten_norm(diff, p) - std::pow(2.0, 1.0 / p) * s));
    }
  }
  return combine({&t});
}

Outcome metric_axioms(Context& c) {
  Tally sym("|d(U,V) - d(V,U)|", c.scale > 0 ? 0.0 : -1.0);
  Tally tri("triangle violation", c.tol(1e-9));
  Tally mono("product violation", c.tol(1e-9));
  Tally proj("projective", c.tol(1e-9));
  Tally bi("bi-invariance", c.tol(1e-9));
  for (int k = 0; k < 1000; ++k) {
    const auto u = haar_random_unitary(3, c.rng);
    const auto v = haar_random_unitary(3, c.rng);
    const auto w = haar_random_unitary(3, c.rng);
    const double uv = sup_distance(u, v).value;
    sym.add(std::abs(uv - sup_distance(v, u).value));
    tri.add(std::max(0.0, sup_distance(u, w).value - uv - sup_distance(v, w).value));
    // d(UW, VU) <= d(U, V) + d(W, U).
    mono.add(std::max(0.0, sup_distance(multiply(u, w), multiply(v, u)).value - uv -
                               sup_distance(w, u).value));
    const Complex phase = std::polar(1.0, uniform(c.rng, 0, kTwoPi));
    proj.add(std::abs(sup_distance(u, validate_unitary(phase * v.matrix())).value - uv));
    bi.add(std::abs(sup_distance(multiply(w, u), multiply(w, v)).value - uv));
    bi.add(std::abs(sup_distance(multiply(u, w), multiply(v, w)).value - uv));
  }
  return combine({&sym, &tri, &mono, &proj, &bi});
}

Outcome distinguishability(Context& c) {
  Tally residual("witness residual", c.tol(1e-8));
  Tally bound("|bound - cos(arc/2)|", c.tol(1e-10));
  int wrong = 0;
  for (int k = 0; k < 50; ++k) {
    const Index n = 2 + k % 5;
    std::vector<double> angles(static_cast<std::size_t>(n));
    for (auto& a : angles) a = uniform(c.rng, 0, kTwoPi);
    // Covering arc of at least pi: an antipodal pair, or three points with
    // every gap below pi.
    angles[0] = 0.0;
    if (n == 2) {
      angles[1] = kPi;
    } else {
      angles[1] = uniform(c.rng, 0.3, 2.8);
      angles[2] = uniform(c.rng, kPi + 0.1, angles[1] + kPi - 0.1);
    }
    const auto u = haar_random_unitary(n, c.rng);
    const auto v = multiply(u, with_spectrum(angles, c.rng));
    const auto r = distinguish(u, v);
    if (!r.distinguishable) ++wrong;
    residual.add(r.residual.value_or(1.0));
  }
  for (int k = 0; k < 50; ++k) {
    const Index n = 2 + k % 5;
    const double arc = uniform(c.rng, 0.05, kPi - 0.05);
    const double start = uniform(c.rng, 0, kTwoPi);
    std::vector<double> angles{start, start + arc};
    while (static_cast<Index>(angles.size()) < n) {
      angles.push_back(start + uniform(c.rng, 0, arc));
    }
    const auto u = haar_random_unitary(n, c.rng);
    const auto v = multiply(u, with_spectrum(angles, c.rng));
    const auto r = distinguish(u, v);
    if (r.distinguishable) ++wrong;
    bound.add(std::abs(r.overlap_bound.value_or(kInfinity) - std::cos(arc / 2)));
  }
  Outcome out = combine({&residual, &bound},
                        "wrong verdicts " + std::to_string(wrong) + "/100");
  out.passed = out.passed && wrong == 0;
  return out;
}

Outcome pauli_dichotomy(Context& c) {
  Tally t("|pauli - dense|", c.tol(1e-10));
  const std::string letters = "IXYZ";
  const PauliElement id = PauliElement::identity(2);
  const auto dense_id = validate_unitary(ComplexMatrix::Identity(4, 4));
  int not_binary = 0;
  int count = 0;
  // G_2 = G_1 (x) G_1 with G_1 = {+-1, +-i} x {I, X, Y, Z}.
  for (int p1 = 0; p1 < 4; ++p1) {
    for (char a : letters) {
      for (int p2 = 0; p2 < 4; ++p2) {
        for (char b : letters) {
          const auto g = PauliElement::from_letters(std::string{a, b}, p1 + p2);
          const double d = pauli_distance(id, g);
          if (d != 0.0 && d != 1.0) ++not_binary;
          t.add(std::abs(d - sup_distance(dense_id, validate_unitary(g.to_matrix())).value));
          ++count;
        }
      }
    }
  }
  Outcome out = combine({&t}, std::to_string(count) + " elements, " +
                                  std::to_string(not_binary) + " outside {0,1}");
  out.passed = out.passed && not_binary == 0 && count == 256;
  return out;
}

Outcome stabilizer_faces(Context& c) {
  Tally fid("1 - Bell fidelity", c.tol(1e-10));
  Tally mult("|c(gh) - c(g)c(h)|", c.tol(1e-10));
  const PauliSubgroup k(parse_pauli_list("+ZZ,+XX"));
  const auto r = stabilizer_subspace(k);
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<ComplexVector> bell(4, ComplexVector::Zero(4));
  bell[0] << s, 0, 0, s;
  bell[1] << s, 0, 0, -s;
  bell[2] << 0, s, s, 0;
  bell[3] << 0, s, -s, 0;
  bool one_dim = r.faces.size() == 4;
  for (const auto& f : r.faces) {
    if (f.face.dim() != 1) {
      one_dim = false;
      continue;
    }
    const ComplexVector v = f.face.basis().col(0);
    double best = 0.0;
    for (const auto& b : bell) best = std::max(best, std::norm(b.dot(v)));
    fid.add(1.0 - best);
    for (const auto& g : k.elements()) {
      for (const auto& h : k.elements()) {
        const Complex cg = v.dot(g.to_matrix() * v);
        const Complex ch = v.dot(h.to_matrix() * v);
        const Complex cgh = v.dot(pauli_product(g, h).to_matrix() * v);
        mult.add(std::abs(cgh - cg * ch));
      }
    }
  }
  const auto xz = stabilizer_subspace(PauliSubgroup(parse_pauli_list("X,Z")));
  const bool empty_ok = xz.non_abelian && xz.faces.empty();
  Outcome out = combine({&fid, &mult},
                        std::to_string(r.faces.size()) + " faces; <X,Z> " +
                            (empty_ok ? "empty+flag" : "NOT flagged"));
  out.passed = out.passed && one_dim && empty_ok;
  return out;
}

Outcome separable_pseudometric(Context& c) {
  const auto id = validate_unitary(ComplexMatrix::Identity(4, 4));
  Tally swap("|d_sep(I, SWAP) - 1|", c.tol(1e-6));
  ComplexMatrix sw = ComplexMatrix::Zero(4, 4);
  sw(0, 0) = sw(1, 2) = sw(2, 1) = sw(3, 3) = 1;
  SeparableProblem prob;
  prob.seed = c.rng();
  swap.add(std::abs(separable_distance(id, validate_unitary(sw), prob).value - 1.0));

  Tally grid("|d_sep - grid oracle|", c.tol(2e-3));
  for (int k = 0; k < 20; ++k) {
    const auto y = haar_random_unitary(2, c.rng), z = haar_random_unitary(2, c.rng);
    const auto w = validate_unitary(kron(y.matrix(), z.matrix()));
    prob.seed = c.rng();
    grid.add(std::abs(separable_distance(id, w, prob).value -
                      separable_grid_oracle(w.matrix())));
  }

  int not_positive = 0;
  double smallest = 1.0;
  for (int k = 0; k < 20; ++k) {
    const auto u = haar_random_unitary(4, c.rng);
    prob.seed = c.rng();
    const double d = separable_distance(id, u, prob).value;
    smallest = std::min(smallest, d);
    if (!(d > 1e-3)) ++not_positive;
  }
  std::ostringstream os;
  os << "random U: smallest d_sep " << std::setprecision(4) << smallest << ", "
     << not_positive << "/20 at or below 1e-3";
  Outcome out = combine({&swap, &grid}, os.str());
  out.passed = out.passed && not_positive == 0;
  return out;
}

Outcome search_closed_form(Context& c) {
  Tally t("|d(U,V^k) - cos(a+kg)|", c.tol(1e-10));
  for (int k = 0; k < 100;) {
    const double alpha = uniform(c.rng, 0.01, kPi / 2 - 0.01);
    const double gamma = uniform(c.rng, 0.01, kPi / 2 - 0.01);
    const auto kmax = static_cast<std::uint64_t>((kPi / 2 - alpha) / gamma);
    const std::uint64_t steps = c.rng() % (kmax + 1);
    if (alpha + static_cast<double>(steps) * gamma >= kPi / 2) continue;
    const auto p = make_search_problem(alpha, uniform(c.rng, 0, kTwoPi), gamma);
    t.add(std::abs(distance_after_k(p, steps) -
                   std::cos(alpha + static_cast<double>(steps) * gamma)));
    ++k;
  }
  Tally exact("|d(pi/6, pi/6, k=2)|", c.tol(1e-12));
  exact.add(distance_after_k(make_search_problem(kPi / 6, 0.0, kPi / 6), 2));

  const auto big = minimal_k(search_problem_from_n(std::uint64_t{1} << 20, 0.0), 0.1);
  const std::uint64_t bound = *big.bound_sqrt_n;
  std::ostringstream os;
  os << "N = 2^20: k = " << big.k << " <= " << bound;
  Outcome out = combine({&t, &exact}, os.str());
  out.passed = out.passed && big.k <= bound;
  return out;
}

Outcome sandwich(Context& c) {
  Tally t("sandwich violation", c.tol(1e-10));
  for (int k = 0; k < 10000; ++k) {
    const Index n = 2 + k % 5;
    const auto s = check_sandwich(haar_random_unitary(n, c.rng),
                                  haar_random_unitary(n, c.rng),
                                  random_unit_vector(n, c.rng));
    t.add(std::max({0.0, s.lower - s.mid, s.mid - s.upper}));
  }
  return combine({&t});
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome(Context&)> run;
};

}  // namespace

std::vector<CriterionResult> run_all(const Options& options) {
  const std::vector<Criterion> criteria = {
      {1, "arc formula exactness", arc_formula},
      {2, "semicircle saturation", semicircle_saturation},
      {3, "polygon oracle equivalence", appendix_oracle},
      {4, "sup via optimization", sup_via_optimization},
      {5, "tensor rule", tensor_rule},
      {6, "Schatten scaling", schatten_scaling},
      {7, "metric axioms", metric_axioms},
      {8, "distinguishability witness", distinguishability},
      {9, "Pauli dichotomy", pauli_dichotomy},
      {10, "stabilizer faces", stabilizer_faces},
      {11, "separable pseudometric", separable_pseudometric},
      {12, "search closed form", search_closed_form},
      {13, "sandwich inequality", sandwich},
  };
  std::vector<CriterionResult> results;
  for (const auto& crit : criteria) {
    // Each criterion has its own stream so results do not depend on order.
    Context ctx{options.tolerance_scale,
                std::mt19937_64(options.seed + static_cast<std::uint64_t>(crit.id))};
    CriterionResult r;
    r.id = crit.id;
    r.title = crit.title;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = crit.run(ctx);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
    results.push_back(std::move(r));
  }
  return results;
}

void print_report(std::ostream& out, const std::vector<CriterionResult>& results) {
  double total = 0.0;
  int passed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] "
        << std::left << std::setw(28) << r.title << std::right << " "
        << std::fixed << std::setprecision(3) << std::setw(7) << r.seconds << "s  "
        << std::defaultfloat << r.detail << "\n";
    total += r.seconds;
    if (r.passed) ++passed;
  }
  out << passed << "/" << results.size() << " criteria passed in " << std::fixed
      << std::setprecision(2) << total << "s" << std::defaultfloat << "\n";
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return !results.empty();
}

}  // namespace unimetric::acceptance
