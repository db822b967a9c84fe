#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqa/elliptic.hpp"
#include "eqa/error.hpp"
#include "eqa/mode_expansion.hpp"
#include "eqa/registry.hpp"
#include "eqa/report.hpp"
#include "eqa/rmatrix.hpp"
#include "eqa/special_functions.hpp"
#include "eqa/structure_functions.hpp"

namespace py = pybind11;
using namespace eqa;

namespace {

py::array_t<Complex> to_numpy(const CMatrix4& m) {
  py::array_t<Complex> a({4, 4});
  auto v = a.mutable_unchecked<2>();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) v(r, c) = m(r, c);
  return a;
}

py::dict residual_dict(const IdentitySuiteSample& s) {
  py::dict d;
  for (const auto& [k, v] : s.residuals) d[py::str(std::string(residual_name(k)))] = v;
  return d;
}

Params params(Complex p, Complex q) { return Params::make(p, q); }

Params params_c(Complex p, Complex q, Complex c) {
  Params par = Params::make(p, q);
  par.c = c;
  return par;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Structure functions of the elliptic algebra A_{q,p}(sl(2)_c)";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "EqaError", PyExc_RuntimeError);

  py::class_<TruncationPolicy>(m, "TruncationPolicy")
      .def(py::init([](double eps, int max_terms, double base_bound) {
             TruncationPolicy p{eps, max_terms, base_bound};
             p.validate();
             return p;
           }),
           py::arg("eps") = 1e-14, py::arg("max_terms") = 512, py::arg("base_bound") = 0.999)
      .def_readwrite("eps", &TruncationPolicy::eps)
      .def_readwrite("max_terms", &TruncationPolicy::max_terms)
      .def_readwrite("base_bound", &TruncationPolicy::base_bound);

  const auto pol = py::arg("policy") = TruncationPolicy{};

  m.def("qpochhammer",
        [](Complex x, std::vector<Complex> bases, const TruncationPolicy& policy) {
          return qpochhammer(x, std::span<const Complex>(bases), policy);
        },
        py::arg("x"), py::arg("bases"), pol);
  m.def("theta", [](Complex x, Complex t, const TruncationPolicy& policy) { return theta(x, t, policy); },
        py::arg("x"), py::arg("t"), pol);
  m.def("kappa_inv",
        [](Complex x2, Complex p, Complex q, const TruncationPolicy& policy) {
          return kappa_inv(x2, params(p, q), policy);
        },
        py::arg("x2"), py::arg("p"), py::arg("q"), pol);
  m.def("mu_inv",
        [](Complex x, Complex p, Complex q, const TruncationPolicy& policy) {
          return mu_inv(x, params(p, q), policy);
        },
        py::arg("x"), py::arg("p"), py::arg("q"), pol);
  m.def("tau", [](Complex x, Complex q, const TruncationPolicy& policy) { return tau(x, q, policy); },
        py::arg("x"), py::arg("q"), pol);
  m.def("theta_logderiv",
        [](Complex x, Complex t, const TruncationPolicy& policy) { return theta_logderiv(x, t, policy); },
        py::arg("x"), py::arg("t"), pol);

  m.def("nome_to_elliptic",
        [](Complex p, Complex q, Complex x, const TruncationPolicy& policy) {
          const EllipticData e = nome_to_elliptic(params(p, q), x, policy);
          py::dict d;
          d["modulus"] = e.modulus;
          d["K"] = e.K;
          d["Kprime"] = e.Kprime;
          d["lambda"] = e.lambda;
          d["u"] = e.u;
          d["branch_ambiguous"] = e.branch_ambiguous;
          return d;
        },
        py::arg("p"), py::arg("q"), py::arg("x") = Complex{1.0, 0.0}, pol);
  m.def("jacobi_sn",
        [](Complex u, Complex p, Complex q, const TruncationPolicy& policy) {
          return jacobi_sn(u, nome_to_elliptic(params(p, q), policy), policy);
        },
        py::arg("u"), py::arg("p"), py::arg("q"), pol);
  m.def("snh",
        [](Complex u, Complex p, Complex q, const TruncationPolicy& policy) {
          return snh(u, nome_to_elliptic(params(p, q), policy), policy);
        },
        py::arg("u"), py::arg("p"), py::arg("q"), pol);
  m.def("baxter_weights",
        [](Complex p, Complex q, Complex x, const TruncationPolicy& policy) {
          const BaxterWeights w = baxter_weights(params(p, q), x, policy);
          py::dict d;
          d["a"] = w.a;
          d["b"] = w.b;
          d["c_w"] = w.c_w;
          d["d"] = w.d;
          return d;
        },
        py::arg("p"), py::arg("q"), py::arg("x"), pol);

  m.def("r_matrix",
        [](Complex p, Complex q, Complex x, const TruncationPolicy& policy) {
          return to_numpy(r_matrix(params(p, q), x, policy));
        },
        py::arg("p"), py::arg("q"), py::arg("x"), pol);
  m.def("r_plus",
        [](Complex p, Complex q, Complex x, const TruncationPolicy& policy) {
          return to_numpy(r_plus(params(p, q), x, policy));
        },
        py::arg("p"), py::arg("q"), py::arg("x"), pol);
  m.def("r_plus_star",
        [](Complex p, Complex q, Complex x, Complex c, const TruncationPolicy& policy) {
          return to_numpy(r_plus_star(params(p, q), x, c, policy));
        },
        py::arg("p"), py::arg("q"), py::arg("x"), py::arg("c"), pol);
  m.def("cal_r",
        [](Complex p, Complex q, Complex c, Complex x, const TruncationPolicy& policy) {
          return to_numpy(cal_r(params_c(p, q, c), c, x, policy));
        },
        py::arg("p"), py::arg("q"), py::arg("c"), py::arg("x"), pol);
  m.def("t_factor",
        [](Complex p, Complex q, Complex c, Complex x, const TruncationPolicy& policy) {
          return t_factor(params_c(p, q, c), c, x, policy);
        },
        py::arg("p"), py::arg("q"), py::arg("c"), py::arg("x"), pol);
  m.def("y_operator",
        [](Complex p, Complex q, Complex c, Complex x, const TruncationPolicy& policy) {
          return to_numpy(y_operator(params_c(p, q, c), c, x, policy));
        },
        py::arg("p"), py::arg("q"), py::arg("c"), py::arg("x"), pol);
  m.def("check_prop1",
        [](Complex p, Complex q, Complex x, const TruncationPolicy& policy) {
          return residual_dict(check_prop1(params(p, q), x, policy));
        },
        py::arg("p"), py::arg("q"), py::arg("x"), pol);

  m.def("f_skao",
        [](Complex x, Complex q_s, Complex p_s, const TruncationPolicy& policy) {
          return f_skao(x, q_s, p_s, policy);
        },
        py::arg("x"), py::arg("q_s"), py::arg("p_s"), pol);
  m.def("f_poisson_series",
        [](Complex x, Complex q, const TruncationPolicy& policy) { return f_poisson_series(x, q, policy); },
        py::arg("x"), py::arg("q"), pol);
  m.def("f_poisson_tau",
        [](Complex x, Complex q, const TruncationPolicy& policy) { return f_poisson_tau(x, q, policy); },
        py::arg("x"), py::arg("q"), pol);
  m.def("f_exchange",
        [](int mm, Complex x, Complex p, Complex q, const TruncationPolicy& policy) {
          return f_exchange(SurfaceParams::make(p, q, mm), x, policy);
        },
        py::arg("m"), py::arg("x"), py::arg("p"), py::arg("q"), pol);
  m.def("y_exchange",
        [](int mm, Complex x, Complex p, Complex q, const TruncationPolicy& policy) {
          return y_exchange(SurfaceParams::make(p, q, mm), x, policy);
        },
        py::arg("m"), py::arg("x"), py::arg("p"), py::arg("q"), pol);
  m.def("classical_limit_series",
        [](int k, int mm, Complex x, Complex q, const TruncationPolicy& policy) {
          return classical_limit_series(k, mm, x, q, policy);
        },
        py::arg("k"), py::arg("m"), py::arg("x"), py::arg("q"), pol);
  m.def("classical_limit_numeric",
        [](int k, int mm, Complex x, Complex p, double beta, int root_index,
           const TruncationPolicy& policy) {
          const ClassicalLimitSpec spec{k, beta, root_index};
          spec.validate();
          return classical_limit_numeric(mm, x, p, spec, policy);
        },
        py::arg("k"), py::arg("m"), py::arg("x"), py::arg("p"), py::arg("beta") = 1e-4,
        py::arg("root_index") = 0, pol);
  m.def("skao_comparison",
        [](Complex p, Complex q, Complex x, int orientation, const TruncationPolicy& policy) {
          return skao_comparison(SurfaceParams::make(p, q, 1), x, policy, orientation);
        },
        py::arg("p"), py::arg("q"), py::arg("x"), py::arg("orientation") = -1, pol);

  m.def("kernel_closed_form", &kernel_closed_form, py::arg("k"), py::arg("s"), py::arg("q"));
  m.def("laurent_extract",
        [](double q, int k, int s_max, std::optional<double> r, std::optional<int> n_samples,
           const TruncationPolicy& policy) {
          const AnnulusSpec a = r ? AnnulusSpec{k, *r} : AnnulusSpec::midpoint(q, k);
          const LaurentCoeffs c =
              laurent_extract(q, a, s_max, n_samples ? *n_samples : default_sample_count(s_max), policy);
          py::dict d;
          for (int s = c.s_min; s <= c.s_max; ++s) d[py::int_(s)] = c.at(s);
          return d;
        },
        py::arg("q"), py::arg("k"), py::arg("s_max"), py::arg("r") = py::none(),
        py::arg("n_samples") = py::none(), pol);
  m.def("verify_prop2",
        [](double q, int k, int s_max, const TruncationPolicy& policy) {
          const Prop2Report rep = verify_prop2(q, k, s_max, policy);
          py::dict d;
          d["q"] = rep.q;
          d["k"] = rep.k;
          d["r"] = rep.r;
          d["n_samples"] = rep.n_samples;
          d["sign"] = rep.sign;
          d["max_residual"] = rep.max_residual;
          d["max_oddness"] = rep.max_oddness;
          py::list rows;
          for (const auto& row : rep.rows) {
            rows.append(py::make_tuple(row.s, row.numeric, row.closed_form, row.residual));
          }
          d["rows"] = rows;
          return d;
        },
        py::arg("q"), py::arg("k"), py::arg("s_max") = 10, pol);

  m.def("suite_names", &suite_names);
  m.def("_run_suite_json",
        [](const std::string& config) {
          const RunConfig cfg = run_config_from_json(Json::parse(config));
          return run_suite(cfg).to_json().dump();
        },
        py::arg("config"));
  m.def("_evaluate_json",
        [](const std::string& name, std::map<std::string, std::string> args,
           const TruncationPolicy& policy) {
          return evaluate_function(name, Args(std::move(args)), policy).dump();
        },
        py::arg("name"), py::arg("args"), pol);
}
