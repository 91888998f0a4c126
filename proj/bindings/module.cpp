// Python bindings for the selection, imputation and experiment entry points.
// Missing cells cross the boundary as NaN in the predictor matrix; results
// come back as plain dicts of numpy arrays and floats.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "fbfmi/csv.hpp"
#include "fbfmi/errors.hpp"
#include "fbfmi/fbf.hpp"
#include "fbfmi/impute.hpp"
#include "fbfmi/linmodel.hpp"
#include "fbfmi/mcar.hpp"
#include "fbfmi/mifbf.hpp"
#include "fbfmi/mvt.hpp"

namespace py = pybind11;
using namespace fbfmi;

namespace {

ModelPrior parse_prior(const std::string& name) {
  if (name == "uniform") return ModelPrior::kUniform;
  if (name == "scott-berger") return ModelPrior::kScottBerger;
  fail(ErrorKind::InvalidArgument, "unknown model prior '" + name + "'");
}

SelectOptions make_options(const std::string& prior, std::optional<double> fraction_b,
                           int threads) {
  SelectOptions opts;
  opts.prior = parse_prior(prior);
  opts.fraction_b = fraction_b;
  opts.threads = threads;
  return opts;
}

py::dict selection_dict(const SelectionResult& r) {
  py::dict out;
  out["p"] = r.p;
  out["log_fbf"] = r.log_fbf;
  out["post_prob"] = r.post_prob;
  out["inclusion"] = r.inclusion;
  out["fraction_b"] = r.fraction_b;
  return out;
}

// NaN cells mark missing predictors.
Dataset dataset_from_arrays(const Mat& x, const Vec& y) {
  BoolMat mask(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) mask(i, j) = !std::isnan(x(i, j));
  return Dataset(y, x, mask, default_names(static_cast<int>(x.cols())));
}

}  // namespace

PYBIND11_MODULE(_fbfmi, m) {
  m.doc() = "fractional Bayes factor variable selection with missing data";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (exit_code(e.kind())) {
        case 2: PyErr_SetString(PyExc_ValueError, e.what()); break;
        case 4: PyErr_SetString(PyExc_OSError, e.what()); break;
        default: PyErr_SetString(PyExc_RuntimeError, e.what());
      }
    }
  });

  m.def(
      "select",
      [](const Mat& x, const Vec& y, const std::string& prior,
         std::optional<double> fraction_b, int threads) {
        return selection_dict(select_complete(x, y, make_options(prior, fraction_b, threads)));
      },
      py::arg("x"), py::arg("y"), py::arg("prior") = "uniform",
      py::arg("fraction_b") = std::nullopt, py::arg("threads") = 1,
      "Complete-data FBF selection over all 2^p models.");

  m.def(
      "impute",
      [](const Mat& x, const Vec& y, int m_count, int burn_in, int spacing, uint64_t seed) {
        GibbsConfig cfg;
        cfg.m = m_count;
        cfg.burn_in = burn_in;
        cfg.spacing = spacing;
        cfg.seed = seed;
        return impute(dataset_from_arrays(x, y), cfg).completed;
      },
      py::arg("x"), py::arg("y"), py::arg("m") = 20, py::arg("burn_in") = 200,
      py::arg("spacing") = 50, py::arg("seed") = 0,
      "Draw M completed predictor matrices; NaN cells in x mark missing values.");

  m.def(
      "mi_select",
      [](const std::vector<Mat>& completed, const Vec& y, const std::string& prior,
         std::optional<double> fraction_b, int threads) {
        if (completed.empty())
          fail(ErrorKind::InvalidArgument, "need at least one completed dataset");
        ImputationSet imps;
        imps.completed = completed;
        imps.y = y;
        return selection_dict(select_mi(imps, make_options(prior, fraction_b, threads)));
      },
      py::arg("completed"), py::arg("y"), py::arg("prior") = "uniform",
      py::arg("fraction_b") = std::nullopt, py::arg("threads") = 1,
      "Missing-data FBF selection from completed datasets via averaged densities.");

  m.def(
      "listwise_delete",
      [](const Mat& x, const Vec& y) {
        const CompleteData kept = listwise_delete(dataset_from_arrays(x, y));
        return py::make_tuple(kept.x, kept.y, kept.kept_rows);
      },
      py::arg("x"), py::arg("y"),
      "Keep only fully observed rows; returns (x, y, kept_row_indices).");

  m.def(
      "inject_mcar",
      [](const Mat& x, const Vec& y, const std::vector<int>& cols, double rate,
         uint64_t seed) {
        const Dataset masked = inject_mcar(dataset_from_arrays(x, y), cols, rate, seed);
        return masked.x;  // masked cells hold NaN
      },
      py::arg("x"), py::arg("y"), py::arg("cols"), py::arg("rate"), py::arg("seed"),
      "Mark cells in the given columns missing (NaN), each with probability rate.");

  m.def(
      "mi_log_fbf",
      [](uint32_t model_bits, const std::vector<Mat>& completed, const Vec& y,
         std::optional<double> fraction_b) {
        if (completed.empty())
          fail(ErrorKind::InvalidArgument, "need at least one completed dataset");
        ImputationSet imps;
        imps.completed = completed;
        imps.y = y;
        const int p = imps.n_predictors();
        const FractionConfig f = resolve_fraction(imps.n_rows(), p, fraction_b);
        return mi_log_fbf(ModelIndex{model_bits, p}, imps, f);
      },
      py::arg("model_bits"), py::arg("completed"), py::arg("y"),
      py::arg("fraction_b") = std::nullopt,
      "Averaged-density log Bayes factor of one model (bitmask) against the full model.");

  m.def("minimal_fraction", [](int n, int k) { return minimal_fraction(n, k).b; },
        py::arg("n"), py::arg("k"),
        "Smallest likelihood fraction (k+1)/n that makes the fractional prior proper.");

  m.def(
      "mvt_logpdf",
      [](const Vec& mu, const Mat& sigma, double nu, const Vec& x) {
        return mvt_logpdf(x, MvT{mu, sigma, nu});
      },
      py::arg("mu"), py::arg("sigma"), py::arg("nu"), py::arg("x"),
      "Log density of the multivariate Student t at x.");

  m.def("model_count", [](int p) { return enumerate_models(p).size(); }, py::arg("p"),
        "Number of models in the enumeration (2^p).");

  m.def(
      "read_csv",
      [](const std::string& path, const std::string& response,
         const std::vector<std::string>& predictors) {
        const auto names =
            predictors.empty() ? non_response_columns(path, response) : predictors;
        const Dataset d = ingest_csv(path, response, names);
        return py::make_tuple(d.x, d.y, d.names);  // missing predictor cells are NaN
      },
      py::arg("path"), py::arg("response"),
      py::arg("predictors") = std::vector<std::string>{},
      "Load a CSV as (x, y, names); empty predictor list means every other column.");
}
