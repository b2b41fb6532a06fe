#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polycoeff/analysis.hpp"
#include "polycoeff/cli.hpp"
#include "polycoeff/compositions.hpp"

#include <sstream>

namespace py = pybind11;
using namespace polycoeff;

namespace {

py::int_ to_py(const BigInt& x) {
    const std::string digits = x.get_str(16);
    return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 16));
}

BigInt from_py(const py::int_& x) {
    return BigInt(py::str(x).cast<std::string>());
}

py::list to_py(const std::vector<BigInt>& xs) {
    py::list out;
    for (const auto& x : xs) out.append(to_py(x));
    return out;
}

py::object to_fraction(const Rational& q) {
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(q.get_num()), to_py(q.get_den()));
}

Limits limits_from(std::size_t max_row_entries) {
    Limits limits;
    limits.max_row_entries = max_row_entries;
    return limits;
}

py::dict record_dict(const ErrorRecord& r) {
    py::dict d;
    d["m"] = r.m;
    d["l"] = r.l;
    d["n"] = r.n;
    d["exact_log"] = r.exact_log;
    d["approx_log"] = r.approx_log;
    d["rel_error"] = r.rel_error;
    return d;
}

constexpr std::size_t kDefaultRow = Limits{}.max_row_entries;

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact polynomial (multinomial-triangle) coefficients and their normal approximations";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);

    py::class_<LogApprox>(m, "LogApprox")
        .def_readonly("log_value", &LogApprox::log_value)
        .def_readonly("value", &LogApprox::value)
        .def("__repr__", [](const LogApprox& a) {
            std::ostringstream os;
            os << "LogApprox(log_value=" << format_real(a.log_value);
            if (a.value) os << ", value=" << format_real(*a.value);
            os << ")";
            return os.str();
        });

    // coeffs
    m.def("triangle_row",
          [](std::uint64_t k, std::uint64_t l, std::size_t max_row_entries) {
              return to_py(triangle_row(k, l, limits_from(max_row_entries)).values);
          },
          py::arg("k"), py::arg("l"), py::arg("max_row_entries") = kDefaultRow,
          "Row k of the (l+1)-nomial triangle as a list of ints.");
    m.def("coefficient",
          [](std::uint64_t k, std::int64_t n, std::uint64_t l) { return to_py(coefficient({k, n, l})); },
          py::arg("k"), py::arg("n"), py::arg("l"),
          "Coefficient of x^n in (1+x+...+x^l)^k; 0 outside [0, kl].");
    m.def("central_coefficient",
          [](std::uint64_t m_, std::uint64_t l) { return to_py(central_coefficient(m_, l)); },
          py::arg("m"), py::arg("l"));
    m.def("coefficient_multinomial_oracle",
          [](std::uint64_t k, std::int64_t n, std::uint64_t l) {
              return to_py(coefficient_multinomial_oracle({k, n, l}));
          },
          py::arg("k"), py::arg("n"), py::arg("l"));
    m.def("poly_power_oracle",
          [](std::uint64_t k, std::uint64_t l) { return to_py(poly_power_oracle(k, l).values); },
          py::arg("k"), py::arg("l"));

    // dist
    m.def("moments",
          [](std::uint64_t m_, std::uint64_t l) {
              const Moments mo = moments(m_, l);
              return py::make_tuple(to_fraction(mo.mean), to_fraction(mo.variance));
          },
          py::arg("m"), py::arg("l"), "(mean, variance) of S as Fractions.");
    m.def("exact_pmf",
          [](std::uint64_t m_, std::uint64_t l) {
              py::list out;
              for (const auto& p : exact_pmf(m_, l).probs()) out.append(to_fraction(p));
              return out;
          },
          py::arg("m"), py::arg("l"), "P[S = n] for n = 0..ml as Fractions.");
    m.def("sample_sums",
          [](std::uint64_t m_, std::uint64_t l, std::uint64_t count, std::uint64_t seed, unsigned workers) {
              SamplerConfig cfg{m_, l, count, seed, workers};
              py::gil_scoped_release release;
              return sample_sums(cfg);
          },
          py::arg("m"), py::arg("l"), py::arg("count"), py::arg("seed"), py::arg("workers") = 0);

    // approx
    m.def("std_normal_pdf", &std_normal_pdf, py::arg("z"));
    m.def("std_normal_cdf", &std_normal_cdf, py::arg("z"));
    m.def("clt_limit_variance", [](std::uint64_t l) { return to_fraction(clt_limit_variance(l)); },
          py::arg("l"));
    m.def("central_approx", &central_approx, py::arg("m"), py::arg("l"));
    m.def("pointwise_approx", &pointwise_approx, py::arg("m"), py::arg("n"), py::arg("l"));
    m.def("cc_phi_approx", &cc_phi_approx, py::arg("m"), py::arg("n"), py::arg("l"));

    // compositions
    m.def("count_compositions",
          [](std::uint64_t n, std::uint64_t k, std::uint64_t a, std::uint64_t b) {
              return to_py(count_compositions({n, k, a, b}));
          },
          py::arg("n"), py::arg("k"), py::arg("a"), py::arg("b"));
    m.def("enumerate_compositions",
          [](std::uint64_t n, std::uint64_t k, std::uint64_t a, std::uint64_t b) {
              py::list out;
              for (const auto& parts : enumerate_compositions({n, k, a, b})) out.append(py::tuple(py::cast(parts)));
              return out;
          },
          py::arg("n"), py::arg("k"), py::arg("a"), py::arg("b"));

    // analysis
    m.def("log_of_big_integer", [](const py::int_& x) { return log_of_big_integer(from_py(x)); },
          py::arg("x"));
    m.def("error_sweep",
          [](std::uint64_t m_, std::uint64_t l) {
              py::list out;
              for (const auto& r : error_sweep(m_, l)) out.append(record_dict(r));
              return out;
          },
          py::arg("m"), py::arg("l"));
    m.def("central_error_curve",
          [](std::uint64_t l, const std::vector<std::uint64_t>& ms) {
              py::list out;
              for (const auto& r : central_error_curve(l, ms)) out.append(record_dict(r));
              return out;
          },
          py::arg("l"), py::arg("m_values"));

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int code = cli::run(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Run one CLI invocation in-process; returns (exit_code, stdout, stderr).");
}
