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

// Command-line front end for the unimetric library.
#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "unimetric/acceptance.hpp"
#include "unimetric/circlegeom.hpp"
#include "unimetric/errors.hpp"
#include "unimetric/matrix_io.hpp"
#include "unimetric/metrics.hpp"
#include "unimetric/numrange.hpp"
#include "unimetric/pauli.hpp"
#include "unimetric/search.hpp"
#include "unimetric/subsets.hpp"

namespace {

using namespace unimetric;
using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kSelftestFailed = 1,
  kParse = 2,
  kDimension = 3,
  kNotUnitary = 4,
  kOther = 5,
};

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  selftest found a failing criterion\n"
    "  2  malformed input (command line, matrix JSON, Pauli string)\n"
    "  3  dimension or length mismatch\n"
    "  4  matrix is not unitary\n"
    "  5  any other error\n"
    "Environment: UNIMETRIC_SEED sets the default seed of randomized commands.";

// Reports carry 12 significant digits so that printed values are stable.
double round12(double x) {
  if (!std::isfinite(x)) return x;
  if (x == 0.0) return 0.0;  // drop the sign of zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

void round_numbers(json& j) {
  if (j.is_number_float()) {
    j = round12(j.get<double>());
  } else if (j.is_structured()) {
    for (auto& item : j) round_numbers(item);
  }
}

struct Output {
  std::string format = "json";
  std::string path;

  void emit(json report) const {
    round_numbers(report);
    std::string text;
    if (format == "text") {
      for (const auto& [key, value] : report.items()) {
        text += key + ": " + value.dump() + "\n";
      }
    } else {
      text = report.dump(2) + "\n";
    }
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(path);
      if (!out) throw Error("cannot write " + path);
      out << text;
    }
  }
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("UNIMETRIC_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw ParseError(std::string("UNIMETRIC_SEED is not an integer: ") + env);
    }
    return v;
  }
  return 0;
}

UnitaryOperator load_unitary(const std::string& path) {
  return validate_unitary(read_matrix_file(path));
}

std::pair<UnitaryOperator, UnitaryOperator> load_pair(const std::string& a,
                                                      const std::string& b) {
  const ComplexMatrix ma = read_matrix_file(a);
  const ComplexMatrix mb = read_matrix_file(b);
  if (ma.rows() != mb.rows() || ma.cols() != mb.cols()) {
    throw DimensionMismatch(a + " is " + std::to_string(ma.rows()) + "x" +
                            std::to_string(ma.cols()) + " but " + b + " is " +
                            std::to_string(mb.rows()) + "x" +
                            std::to_string(mb.cols()));
  }
  return {validate_unitary(ma), validate_unitary(mb)};
}

json angles_json(const std::vector<double>& angles) {
  json out = json::array();
  for (double a : angles) out.push_back(a);
  return out;
}

json vector_json(const ComplexVector& v) { return matrix_to_json(v); }

json dist_report(const RelativeSpectrum& rs, const MetricResult& r) {
  json j = to_json(r);
  j["arc"] = rs.arc.alpha;
  j["eigenangles"] = angles_json(rs.relative.eigen_angles());
  return j;
}

std::pair<Index, Index> parse_dims(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("--dims expects m,n");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    const long long m = std::stoll(a, &used_a);
    const long long n = std::stoll(b, &used_b);
    if (used_a != a.size() || used_b != b.size() || m < 1 || n < 1) {
      throw ParseError("--dims expects positive integers m,n");
    }
    return {static_cast<Index>(m), static_cast<Index>(n)};
  } catch (const std::logic_error&) {
    throw ParseError("--dims expects positive integers m,n", comma);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Metrics and pseudometrics on unitary operators.", "unimetric"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1, 1);
  Output out;
  app.add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("-o,--output", out.path, "Write the report to a file");

  std::string u_path, v_path;
  std::function<void()> action;

  auto* dist = app.add_subcommand("dist", "Sup-metric d(U, V) from the spectrum of U^dag V");
  dist->add_option("U", u_path, "Matrix JSON file")->required();
  dist->add_option("V", v_path, "Matrix JSON file")->required();
  dist->callback([&] {
    action = [&] {
      const auto [u, v] = load_pair(u_path, v_path);
      const auto rs = relative_spectrum(u, v);
      out.emit(dist_report(rs, sup_distance(rs)));
    };
  });

  auto* dis = app.add_subcommand("distinguish", "Can U and V be told apart with one use?");
  dis->add_option("U", u_path, "Matrix JSON file")->required();
  dis->add_option("V", v_path, "Matrix JSON file")->required();
  dis->callback([&] {
    action = [&] {
      const auto [u, v] = load_pair(u_path, v_path);
      const auto r = distinguish(u, v);
      json j{{"distinguishable", r.distinguishable},
             {"value", r.metric.value},
             {"arc", r.arc}};
      if (r.distinguishable) {
        j["witness"] = vector_json(*r.metric.maximizer);
        j["residual"] = *r.residual;
      } else {
        j["overlap_bound"] = *r.overlap_bound;
      }
      out.emit(j);
    };
  });

  double d1 = 0.0, d2 = 0.0;
  auto* tensor = app.add_subcommand("tensor", "Distance of tensor products from factor distances");
  tensor->add_option("--d1", d1, "d(U, V)")->required();
  tensor->add_option("--d2", d2, "d(W, X)")->required();
  tensor->callback([&] {
    action = [&] { out.emit({{"value", tensor_distance(d1, d2)}}); };
  });

  std::string basis_path;
  auto* face = app.add_subcommand("face-dist", "Pseudometric over states supported in a subspace");
  face->add_option("U", u_path, "Matrix JSON file")->required();
  face->add_option("V", v_path, "Matrix JSON file")->required();
  face->add_option("--basis", basis_path, "Matrix JSON whose columns span the subspace")
      ->required();
  face->callback([&] {
    action = [&] {
      const auto [u, v] = load_pair(u_path, v_path);
      out.emit(to_json(face_distance(u, v, SubspaceFace::from_basis(read_matrix_file(basis_path)))));
    };
  });

  std::string dims = "2,2";
  std::size_t restarts = SeparableProblem{}.restarts;
  std::optional<std::uint64_t> seed;
  auto* sep = app.add_subcommand("sep-dist", "Pseudometric over separable states of H_m (x) H_n");
  sep->add_option("U", u_path, "Matrix JSON file")->required();
  sep->add_option("V", v_path, "Matrix JSON file")->required();
  sep->add_option("--dims", dims, "Factor dimensions m,n")->capture_default_str();
  sep->add_option("--restarts", restarts, "Random product starts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sep->add_option("--seed", seed, "Seed (default: UNIMETRIC_SEED or 0)");
  sep->callback([&] {
    action = [&] {
      const auto [u, v] = load_pair(u_path, v_path);
      SeparableProblem p;
      std::tie(p.dim_a, p.dim_b) = parse_dims(dims);
      p.restarts = restarts;
      p.seed = seed.value_or(default_seed());
      const auto r = separable_search(u, v, p);
      json j = to_json(r.metric);
      j["min_overlap"] = r.min_overlap;
      j["seed"] = p.seed;
      j["restarts"] = p.restarts;
      j["best_restart"] = r.best_restart;
      out.emit(j);
    };
  });

  std::vector<std::string> gen_paths;
  auto* ns = app.add_subcommand("nullspace", "Joint eigenspaces of commuting unitaries");
  ns->add_option("--gens", gen_paths, "Matrix JSON files, comma separated")
      ->required()
      ->delimiter(',');
  ns->callback([&] {
    action = [&] {
      std::vector<UnitaryOperator> gens;
      for (const auto& p : gen_paths) gens.push_back(load_unitary(p));
      out.emit(to_json(null_space(gens)));
    };
  });

  std::string pauli_gens;
  auto* stab = app.add_subcommand("stabilizer", "Stabilizer faces of a Pauli subgroup");
  stab->add_option("--gens", pauli_gens, "Generators, e.g. +ZZ,+XX")->required();
  stab->callback([&] {
    action = [&] {
      const PauliSubgroup k(parse_pauli_list(pauli_gens));
      out.emit(to_json(stabilizer_subspace(k), k));
    };
  });

  std::optional<double> alpha, gamma;
  std::optional<std::uint64_t> big_n;
  double theta = 0.0, epsilon = 0.1;
  auto* search = app.add_subcommand("search", "Steps needed to approximate the search rotation");
  auto* alpha_opt = search->add_option("--alpha", alpha, "Overlap angle in (0, pi/2)");
  search->add_option("--N", big_n, "Search space size; alpha = asin(1/sqrt(N))")
      ->excludes(alpha_opt);
  search->add_option("--gamma", gamma, "Rotation per step (default: alpha)");
  search->add_option("--theta", theta, "Relative phase")->capture_default_str();
  search->add_option("--epsilon", epsilon, "Target distance")->capture_default_str();
  search->callback([&] {
    action = [&] {
      SearchProblem p;
      if (big_n) {
        p = search_problem_from_n(*big_n, theta, gamma);
      } else if (alpha) {
        p = make_search_problem(*alpha, theta, gamma.value_or(*alpha));
      } else {
        throw ParseError("search needs --alpha or --N");
      }
      const auto r = minimal_k(p, epsilon);
      out.emit({{"alpha", p.alpha},
                {"gamma", p.gamma},
                {"k", r.k},
                {"achieved", r.achieved},
                {"bound_sqrtN", r.bound_sqrt_n ? json(*r.bound_sqrt_n) : json(nullptr)}});
    };
  });

  std::string m_path, emit_path;
  auto* nr = app.add_subcommand("numrange", "Distance from 0 to the numerical range of a matrix");
  nr->add_option("M", m_path, "Matrix JSON file")->required();
  nr->add_option("--emit", emit_path,
                 "Write the eigenvalue polygon of a unitary M as CSV "
                 "(theta,re,im,multiplicity)");
  nr->callback([&] {
    action = [&] {
      const ComplexMatrix m = read_matrix_file(m_path);
      const auto r = numrange_origin_distance(NumericalRangeQuery{m});
      json j{{"distance", r.distance}, {"phi", r.phi}, {"witness", vector_json(r.witness)}};
      if (!emit_path.empty()) {
        const auto u = validate_unitary(m);
        std::ofstream csv(emit_path);
        if (!csv) throw Error("cannot write " + emit_path);
        csv << polygon_csv(smallest_covering_arc(u.eigen_angles()));
        j["polygon"] = emit_path;
      }
      out.emit(j);
    };
  });

  double tolerance_scale = 1.0;
  int exit_code = kOk;
  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
  self->add_option("--seed", seed, "Seed (default: UNIMETRIC_SEED or the built-in seed)");
  self->add_option("--tolerance-scale", tolerance_scale,
                   "Multiply every tolerance; <= 0 forces failures (test hook)")
      ->capture_default_str();
  self->callback([&] {
    action = [&] {
      acceptance::Options options;
      options.tolerance_scale = tolerance_scale;
      if (seed) {
        options.seed = *seed;
      } else if (std::getenv("UNIMETRIC_SEED") != nullptr) {
        options.seed = default_seed();
      }
      const auto results = acceptance::run_all(options);
      acceptance::print_report(std::cout, results);
      if (!acceptance::all_passed(results)) exit_code = kSelftestFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  action();
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const unimetric::ParseError& e) {
    std::cerr << "unimetric: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const unimetric::DimensionMismatch& e) {
    std::cerr << "unimetric: dimension mismatch: " << e.what() << "\n";
    return kDimension;
  } catch (const unimetric::LengthMismatch& e) {
    std::cerr << "unimetric: " << e.what() << "\n";
    return kDimension;
  } catch (const unimetric::NotSquare& e) {
    std::cerr << "unimetric: dimension mismatch: " << e.what() << "\n";
    return kDimension;
  } catch (const unimetric::NotUnitary& e) {
    std::cerr << "unimetric: " << e.what() << "\n";
    return kNotUnitary;
  } catch (const std::exception& e) {
    std::cerr << "unimetric: " << e.what() << "\n";
    return kOther;
  }
}
