#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specenv/finite_module.hpp"
#include "specenv/fourier.hpp"
#include "specenv/kernel_operator.hpp"
#include "specenv/l1_bounds.hpp"
#include "specenv/runtime.hpp"
#include "specenv/similarity.hpp"
#include "specenv/windows.hpp"

namespace py = pybind11;
using namespace specenv;

namespace {

GridFunction make_grid_function(const Grid& g, const CVector& values) {
  return GridFunction(g, values);
}

PiecewiseSymbol make_symbol(const std::string& family, double a, double n) {
  if (family == "trapezoid") return PiecewiseSymbol::trapezoid(a);
  if (family == "omega") return PiecewiseSymbol::omega(a);
  if (family == "triangle") return PiecewiseSymbol::triangle(a);
  if (family == "gentrap") return PiecewiseSymbol::generalized_trapezoid(a, n);
  throw config_error("unknown window family: " + family);
}

}  // namespace

PYBIND11_MODULE(_specenv, m) {
  m.doc() = "window calculus, kernel operators and spectrum envelopes";

  py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<numerical_error>(m, "NumericalError",
                                          PyExc_ArithmeticError);

  py::class_<Grid>(m, "Grid")
      .def_readonly("half_width", &Grid::half_width)
      .def_readonly("num_points", &Grid::num_points)
      .def_property_readonly("spacing", &Grid::spacing)
      .def("node", &Grid::node)
      .def("freq_node", &Grid::freq_node)
      .def_property_readonly("nyquist", &Grid::nyquist)
      .def("nodes",
           [](const Grid& g) {
             RVector t(g.size());
             for (int k = 0; k < g.size(); ++k) t[k] = g.node(k);
             return t;
           })
      .def("freq_nodes", [](const Grid& g) {
        RVector xi(g.size());
        for (int p = 0; p < g.size(); ++p) xi[p] = g.freq_node(p);
        return xi;
      });
  m.def("make_grid", &make_grid, py::arg("half_width"), py::arg("num_points"));

  py::class_<GridFunction>(m, "GridFunction")
      .def(py::init(&make_grid_function), py::arg("grid"), py::arg("values"))
      .def_readonly("grid", &GridFunction::grid)
      .def_readonly("values", &GridFunction::values);
  py::class_<FreqGridFunction>(m, "FreqGridFunction")
      .def(py::init([](const Grid& g, const CVector& v) {
             return FreqGridFunction(g, v);
           }),
           py::arg("grid"), py::arg("values"))
      .def_readonly("grid", &FreqGridFunction::grid)
      .def_readonly("values", &FreqGridFunction::values);

  m.def("sample_indicator", &sample_indicator, py::arg("grid"), py::arg("lo"),
        py::arg("hi"));
  m.def("sample_indicator_cells", &sample_indicator_cells, py::arg("grid"),
        py::arg("lo"), py::arg("hi"));
  m.def("dft_forward", &dft_forward);
  m.def("dft_inverse", &dft_inverse);
  m.def("norm_l2", py::overload_cast<const GridFunction&>(&norm_l2));
  m.def("norm_l2_freq", py::overload_cast<const FreqGridFunction&>(&norm_l2));
  m.def("norm_l1", py::overload_cast<const GridFunction&>(&norm_l1));
  m.def("norm_inf", py::overload_cast<const GridFunction&>(&norm_inf));

  py::class_<ExactNorms>(m, "ExactNorms")
      .def_readonly("l2", &ExactNorms::l2)
      .def_readonly("l2_deriv", &ExactNorms::l2_deriv);
  py::class_<PiecewiseSymbol>(m, "PiecewiseSymbol")
      .def("__call__",
           [](const PiecewiseSymbol& s, double xi) { return s(xi); })
      .def("derivative", &PiecewiseSymbol::derivative)
      .def("exact_norms", &PiecewiseSymbol::exact_norms)
      .def_property_readonly("a", &PiecewiseSymbol::a);
  m.def("window_symbol", &make_symbol, py::arg("family"), py::arg("a"),
        py::arg("n") = 2.0);
  m.def("phi_time", &phi_time);
  m.def("psi_time", &psi_time);
  m.def("gamma_time", &gamma_time);
  m.def("gen_phi_time", &gen_phi_time);
  m.def("sine_integral", &sine_integral);

  py::class_<L1Bound>(m, "L1Bound")
      .def_readonly("bound", &L1Bound::bound)
      .def_readonly("a_opt", &L1Bound::a_opt)
      .def_readonly("l2_hat", &L1Bound::l2_hat)
      .def_readonly("l2_hat_deriv", &L1Bound::l2_hat_deriv);
  py::class_<L1Check>(m, "L1Check")
      .def_readonly("l1", &L1Check::l1)
      .def_readonly("bound", &L1Check::bound)
      .def_readonly("holds", &L1Check::holds)
      .def_readonly("detail", &L1Check::detail);
  m.def("l1_bound", &l1_bound);
  m.def("l1_bound_check", &l1_bound_check);

  py::class_<FiniteModuleRep>(m, "FiniteModuleRep")
      .def(py::init<std::vector<double>>())
      .def_property_readonly("freqs", &FiniteModuleRep::freqs)
      .def_property_readonly("dim", &FiniteModuleRep::dim)
      .def("representation", &FiniteModuleRep::representation);
  m.def("calculus_operator", &calculus_operator);
  m.def("beurling_spectrum", &beurling_spectrum);
  m.def("operator_module", &operator_module);

  py::class_<SpectrumSet>(m, "SpectrumSet")
      .def_property_readonly("points", &SpectrumSet::points)
      .def("hausdorff", &SpectrumSet::hausdorff);
  py::class_<SpectralMapping>(m, "SpectralMapping")
      .def_readonly("sigma", &SpectralMapping::sigma)
      .def_readonly("image", &SpectralMapping::image)
      .def_readonly("hausdorff", &SpectralMapping::hausdorff)
      .def_readonly("equal", &SpectralMapping::equal);
  m.def("check_spectral_mapping", &check_spectral_mapping);

  py::class_<ResolventCheck>(m, "ResolventCheck")
      .def_readonly("norm", &ResolventCheck::norm)
      .def_readonly("dist_bound", &ResolventCheck::dist_bound)
      .def_readonly("tight", &ResolventCheck::tight);
  m.def("resolvent_norm_check", &resolvent_norm_check);

  py::class_<APFunction>(m, "APFunction")
      .def(py::init<CVector, RVector>(), py::arg("coeffs"),
           py::arg("exponents"))
      .def("ap1_norm", &APFunction::ap1_norm)
      .def("__call__",
           [](const APFunction& h, double xi) { return h(xi); });
  m.def("ap1_apply", &ap1_apply);
  m.def("ap1_reciprocal_norm", &ap1_reciprocal_norm);

  py::enum_<OperatorKind>(m, "OperatorKind")
      .value("integral", OperatorKind::integral)
      .value("pointwise", OperatorKind::pointwise)
      .value("multiplier", OperatorKind::multiplier);
  py::class_<KernelOperator>(m, "KernelOperator")
      .def_readonly("kind", &KernelOperator::kind)
      .def_readonly("grid", &KernelOperator::grid)
      .def("apply",
           [](const KernelOperator& op, const CVector& x) {
             return op.apply(x);
           })
      .def("hs_norm", &KernelOperator::hs_norm)
      .def("dense", &KernelOperator::dense);
  m.def("reflection_operator", &reflection_operator);
  m.def("smoothed_kernel", &smoothed_kernel);
  m.def("sandwich_kernel", &sandwich_kernel);
  m.def("differentiation_operator", &differentiation_operator);
  m.def("resolvent_operator", &resolvent_operator);
  m.def("vr_smallness", &vr_smallness);

  m.def("a_star", &a_star);
  py::class_<SimilarityReport>(m, "SimilarityReport")
      .def_readonly("a", &SimilarityReport::a)
      .def_readonly("hs_psiV", &SimilarityReport::hs_psiV)
      .def_readonly("U", &SimilarityReport::U)
      .def_readonly("U_inv", &SimilarityReport::U_inv)
      .def_readonly("B", &SimilarityReport::B)
      .def_readonly("b_hs", &SimilarityReport::b_hs)
      .def_readonly("residual", &SimilarityReport::residual)
      .def_readonly("form_agreement", &SimilarityReport::form_agreement)
      .def_readonly("u_inv_identity_err",
                    &SimilarityReport::u_inv_identity_err);
  m.def("build_similarity", &build_similarity);
  m.def("similarity_residual", &similarity_residual);
  m.def("similarity_residual_matfree", &similarity_residual_matfree);

  m.def("tail_sequence", &tail_sequence);
  py::class_<Envelope>(m, "Envelope")
      .def_readonly("hs_total", &Envelope::hs_total)
      .def_readonly("tail", &Envelope::tail)
      .def("__call__", [](const Envelope& e, double r) { return e(r); })
      .def("tail_l2", &Envelope::tail_l2);
  m.def("envelope", &envelope);
  py::class_<Containment>(m, "Containment")
      .def_readonly("violations", &Containment::violations)
      .def_readonly("margin", &Containment::margin)
      .def_readonly("eigenvalues", &Containment::eigenvalues);
  m.def("check_containment", &check_containment);

  py::class_<OperatorEnvelope>(m, "OperatorEnvelope")
      .def_readonly("env", &OperatorEnvelope::env)
      .def_readonly("eigs", &OperatorEnvelope::eigs)
      .def_readonly("hs_B", &OperatorEnvelope::hs_B)
      .def_readonly("a", &OperatorEnvelope::a)
      .def_readonly("violations", &OperatorEnvelope::violations)
      .def_readonly("residual", &OperatorEnvelope::residual);
  m.def("operator_envelope", &operator_envelope);

  m.def("configure_threads", &configure_threads);
}
