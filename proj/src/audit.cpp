#include "qubml/audit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "qubml/errors.hpp"
#include "qubml/kmeans.hpp"
#include "qubml/parallel.hpp"
#include "qubml/regression.hpp"
#include "qubml/svm.hpp"
#include "solver_detail.hpp"

namespace qubml {

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  detail::Xoshiro rng(seed);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = 2.0 * rng.u01() - 1.0;
  return m;
}

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  detail::Xoshiro rng(seed);
  std::vector<double> v(n);
  for (double& x : v) x = 2.0 * rng.u01() - 1.0;
  return v;
}

std::vector<double> alternating_labels(std::size_t n) {
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = i % 2 == 0 ? 1.0 : -1.0;
  return y;
}

struct BuiltInstance {
  QuboInstance qubo;
  double seconds = 0.0;
  std::size_t expected_m = 0;
};

BuiltInstance build_instance(const SweepPoint& pt, bool positive_ladder) {
  BuiltInstance out;
  switch (pt.model) {
    case Model::regression: {
      const RegressionProblem prob = RegressionProblem::from_data(
          random_matrix(pt.n, pt.d, 11 * pt.n + pt.d), random_vector(pt.n, 7 * pt.n));
      const PrecisionVector p =
          positive_ladder ? make_positive_precision(pt.kp) : make_precision(pt.kp);
      const auto t0 = std::chrono::steady_clock::now();
      out.qubo = formulate_regression(prob, p);
      out.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      out.expected_m = pt.kp * (pt.d + 1);
      break;
    }
    case Model::svm: {
      const SvmProblem prob = SvmProblem::from_data(
          random_matrix(pt.n, pt.d, 13 * pt.n + pt.d), alternating_labels(pt.n));
      const PrecisionVector p =
          positive_ladder ? make_positive_precision(pt.kp) : make_precision(pt.kp);
      const auto t0 = std::chrono::steady_clock::now();
      out.qubo = formulate_svm(prob, p);
      out.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      out.expected_m = pt.kp * (pt.d + 1) + pt.n * p.positive_count();
      break;
    }
    case Model::kmeans: {
      const KmeansProblem prob = KmeansProblem::from_data(
          random_matrix(pt.n, pt.d, 17 * pt.n + pt.d), pt.k, 1.0, 1.0);
      const auto t0 = std::chrono::steady_clock::now();
      out.qubo = formulate_kmeans(prob);
      out.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      out.expected_m = pt.n * pt.k;
      break;
    }
  }
  return out;
}

struct AxisSpec {
  Model model;
  std::string axis;
  double expected_exponent;
  bool positive_ladder;
  std::vector<SweepPoint> points;
};

SweepPoint pt(Model model, std::size_t n, std::size_t d, std::size_t k,
              std::size_t kp) {
  return SweepPoint{model, n, d, k, kp};
}

std::vector<AxisSpec> axis_specs(bool quick) {
  const std::size_t s = quick ? 4 : 1;  // quick shrinks sizes fourfold
  std::vector<AxisSpec> specs;

  AxisSpec reg_n{Model::regression, "N", 1.0, false, {}};
  for (std::size_t n : {4000u, 8000u, 16000u, 32000u})
    reg_n.points.push_back(pt(Model::regression, n / s, 16, 0, 4));
  specs.push_back(std::move(reg_n));

  AxisSpec reg_d{Model::regression, "d", 2.0, false, {}};
  for (std::size_t d : {8u, 16u, 32u, 64u})
    reg_d.points.push_back(pt(Model::regression, 2000 / s, d, 0, 4));
  specs.push_back(std::move(reg_d));

  AxisSpec svm_n{Model::svm, "N", 1.0, false, {}};
  for (std::size_t n : {1000u, 2000u, 4000u, 6000u})
    svm_n.points.push_back(pt(Model::svm, n / s, 4, 0, 6));
  specs.push_back(std::move(svm_n));

  AxisSpec svm_d{Model::svm, "d", 1.0, false, {}};
  for (std::size_t d : {4u, 8u, 16u, 32u})
    svm_d.points.push_back(pt(Model::svm, 500 / s, d, 0, 6));
  specs.push_back(std::move(svm_d));

  AxisSpec svm_k{Model::svm, "K", 2.0, true, {}};
  for (std::size_t kp : {4u, 8u, 16u, 32u})
    svm_k.points.push_back(pt(Model::svm, 250 / s, 4, 0, kp));
  specs.push_back(std::move(svm_k));

  AxisSpec km_n{Model::kmeans, "N", 2.0, false, {}};
  for (std::size_t n : {1024u, 1536u, 2048u, 3072u})
    km_n.points.push_back(pt(Model::kmeans, n / s, 8, 4, 0));
  specs.push_back(std::move(km_n));

  AxisSpec km_k{Model::kmeans, "k", 1.0, false, {}};
  for (std::size_t k : {2u, 3u, 4u, 6u})
    km_k.points.push_back(pt(Model::kmeans, 3072 / s, 8, k, 0));
  specs.push_back(std::move(km_k));

  AxisSpec km_d{Model::kmeans, "d", 1.0, false, {}};
  for (std::size_t d : {4u, 8u, 16u, 32u})
    km_d.points.push_back(pt(Model::kmeans, 192 / s, d, 4, 0));
  specs.push_back(std::move(km_d));

  return specs;
}

std::size_t axis_size(const AxisSpec& spec, const SweepPoint& point) {
  if (spec.axis == "N") return point.n;
  if (spec.axis == "d") return point.d;
  if (spec.axis == "k") return point.k;
  return point.kp;
}

}  // namespace

PrecisionVector make_precision(std::size_t k) {
  if (k == 0) throw ConfigError("precision ladder needs at least one entry");
  const std::size_t pos = (k + 1) / 2;
  const std::size_t neg = k - pos;
  std::vector<double> entries;
  for (std::size_t i = 0; i < neg; ++i)
    entries.push_back(-std::ldexp(1.0, static_cast<int>(neg - 1 - i)));
  for (std::size_t i = 0; i < pos; ++i)
    entries.push_back(std::ldexp(1.0, static_cast<int>(i)));
  return PrecisionVector::from_entries(std::move(entries));
}

PrecisionVector make_positive_precision(std::size_t k) {
  if (k == 0) throw ConfigError("precision ladder needs at least one entry");
  std::vector<double> entries;
  for (std::size_t i = 0; i < k; ++i)
    entries.push_back(std::ldexp(1.0, static_cast<int>(i)));
  return PrecisionVector::from_entries(std::move(entries));
}

std::vector<ScalingRecord> audit_variable_counts(
    const std::vector<SweepPoint>& sweep) {
  std::vector<ScalingRecord> records;
  records.reserve(sweep.size());
  for (const SweepPoint& point : sweep) {
    BuiltInstance built = build_instance(point, false);
    ScalingRecord rec;
    rec.point = point;
    rec.m = built.qubo.size();
    rec.expected_m = built.expected_m;
    rec.nonzeros = count_nonzeros(built.qubo.a);
    rec.construction_seconds = built.seconds;
    if (rec.m != rec.expected_m)
      throw std::logic_error("variable count missed its closed form for " +
                             model_name(point.model));
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<SweepPoint> default_count_sweep() {
  std::vector<SweepPoint> sweep;
  for (auto [d, kp] : std::initializer_list<std::pair<std::size_t, std::size_t>>{
           {1, 2}, {1, 4}, {2, 2}, {2, 4}, {2, 6}, {3, 4}, {3, 6}, {4, 4},
           {5, 6}, {8, 4}})
    sweep.push_back(pt(Model::regression, 16, d, 0, kp));
  for (auto [n, d, kp] :
       std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t>>{
           {4, 1, 2}, {4, 2, 4}, {6, 2, 4}, {8, 3, 6}, {8, 2, 2},
           {10, 4, 4}, {12, 3, 6}, {16, 2, 4}, {5, 5, 4}, {20, 1, 6}})
    sweep.push_back(pt(Model::svm, n, d, 0, kp));
  for (auto [n, k] : std::initializer_list<std::pair<std::size_t, std::size_t>>{
           {4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}, {9, 3}, {12, 3}, {12, 4},
           {16, 4}, {20, 5}})
    sweep.push_back(pt(Model::kmeans, n, 3, k, 0));
  return sweep;
}

double fit_log_slope(const std::vector<AxisPoint>& points) {
  if (points.size() < 4)
    throw SolverRefusal("scaling fit needs at least four points, got " +
                        std::to_string(points.size()));
  double sx = 0.0, sy = 0.0;
  std::vector<double> xs, ys;
  for (const AxisPoint& p : points) {
    xs.push_back(std::log(static_cast<double>(p.size)));
    ys.push_back(std::log(std::max(p.seconds, 1e-9)));
    sx += xs.back();
    sy += ys.back();
  }
  const double mx = sx / xs.size();
  const double my = sy / ys.size();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

std::vector<AxisFit> audit_construction_scaling(bool quick) {
  constexpr int kRepeats = 5;
  parallel::SerialSection serial;
  std::vector<AxisFit> fits;
  for (const AxisSpec& spec : axis_specs(quick)) {
    AxisFit fit;
    fit.model = spec.model;
    fit.axis = spec.axis;
    fit.expected_exponent = spec.expected_exponent;
    for (const SweepPoint& point : spec.points) {
      AxisPoint ap;
      ap.size = axis_size(spec, point);
      ap.seconds = 0.0;
      for (int r = 0; r < kRepeats; ++r) {
        BuiltInstance built = build_instance(point, spec.positive_ladder);
        if (r == 0 || built.seconds < ap.seconds) ap.seconds = built.seconds;
        ap.m = built.qubo.size();
      }
      fit.points.push_back(std::move(ap));
    }
    fit.fitted_exponent = fit_log_slope(fit.points);
    fit.within_bound = fit.fitted_exponent <= fit.expected_exponent + fit.allowance;
    fits.push_back(std::move(fit));
  }
  return fits;
}

void write_scaling_csv(const std::string& path,
                       const std::vector<ScalingRecord>& records) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open " + path + " for writing");
  out << "model,n,d,k,K,m,expected_m,nonzeros,construction_seconds,"
         "embedded_m_quadratic_bound\n";
  for (const ScalingRecord& rec : records) {
    out << model_name(rec.point.model) << ',' << rec.point.n << ',' << rec.point.d
        << ',' << rec.point.k << ',' << rec.point.kp << ',' << rec.m << ','
        << rec.expected_m << ',' << rec.nonzeros << ',' << rec.construction_seconds
        << ',' << rec.m * rec.m << '\n';
  }
}

nlohmann::json scaling_summary_json(const std::vector<AxisFit>& fits) {
  nlohmann::json doc;
  doc["schema"] = "scaling-v1";
  doc["axes"] = nlohmann::json::array();
  for (const AxisFit& fit : fits) {
    nlohmann::json axis;
    axis["model"] = model_name(fit.model);
    axis["axis"] = fit.axis;
    axis["expected_exponent"] = fit.expected_exponent;
    axis["allowance"] = fit.allowance;
    axis["fitted_exponent"] = fit.fitted_exponent;
    axis["within_bound"] = fit.within_bound;
    axis["points"] = nlohmann::json::array();
    for (const AxisPoint& p : fit.points)
      axis["points"].push_back(
          {{"size", p.size}, {"min_seconds", p.seconds}, {"m", p.m}});
    doc["axes"].push_back(std::move(axis));
  }
  return doc;
}

}  // namespace qubml
