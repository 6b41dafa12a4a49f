// Python bindings. Field elements are plain ints (their index), characters
// are ints (the exponent m of chi_m).

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "katzsum/error.hpp"
#include "katzsum/harness.hpp"
#include "katzsum/mellin.hpp"

namespace py = pybind11;
using namespace katzsum;

namespace {

struct FieldHandle {
    SumsPtr sums;

    const FiniteField& f() const { return sums->field(); }
    const CharacterGroup& ch() const { return sums->chars(); }
    FieldElem e(std::uint32_t x) const { return f().elem(x); }
    MultChar c(std::int64_t m) const { return ch().chi(m); }
};

struct ContextHandle {
    KatzContext ctx;
    std::optional<KatzTables> cache;

    const KatzTables& tables() {
        if (!cache) cache = tabulate(ctx);
        return *cache;
    }
    FieldElem e(std::uint32_t x) const { return ctx.field().elem(x); }
    MultChar c(std::int64_t m) const { return ctx.chars().chi(m); }
};

FieldHandle make_field(std::uint32_t p, std::uint32_t n) { return FieldHandle{build_sums(p, n)}; }

std::string verify_json(const std::vector<std::string>& fields, const std::string& a,
                        const std::vector<std::string>& suites, double tol) {
    SuiteConfig config;
    for (const auto& s : fields) config.fields.push_back(parse_field_spec(s));
    config.a_policy = parse_a_policy(a);
    config.suites = parse_suites(suites);
    config.tol = tol;
    validate(config);
    RunResult result;
    {
        py::gil_scoped_release release;
        result = run(config);
    }
    return report_json(result);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Katz-sum identity checks over finite fields";

    // ValueError subclass carrying the error code name as `.code`; the module keeps the type alive.
    static PyObject* error_type = py::exception<Error>(m, "KatzsumError", PyExc_ValueError).ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
            exc.attr("code") = errc_name(e.code());
            PyErr_SetObject(error_type, exc.ptr());
        }
    });

    m.attr("DEFAULT_TOL") = kDefaultTol;

    py::class_<FieldHandle>(m, "Field")
        .def(py::init(&make_field), py::arg("p"), py::arg("n") = 1)
        .def_static(
            "from_spec",
            [](const std::string& spec) {
                const auto [p, n] = parse_field_spec(spec);
                return make_field(p, n);
            },
            py::arg("spec"))
        .def_property_readonly("p", [](const FieldHandle& s) { return s.f().p(); })
        .def_property_readonly("n", [](const FieldHandle& s) { return s.f().n(); })
        .def_property_readonly("q", [](const FieldHandle& s) { return s.f().q(); })
        .def_property_readonly("modulus", [](const FieldHandle& s) { return s.f().params().modulus; })
        .def_property_readonly("generator", [](const FieldHandle& s) { return s.f().generator().index; })
        .def_property_readonly("i_elem", [](const FieldHandle& s) { return s.f().i_elem().index; })
        .def_property_readonly("minus_one", [](const FieldHandle& s) { return s.f().minus_one().index; })
        .def_property_readonly("A4", [](const FieldHandle& s) { return s.ch().special().A4.exponent(); })
        .def_property_readonly("phi", [](const FieldHandle& s) { return s.ch().special().phi.exponent(); })
        .def("add", [](const FieldHandle& s, std::uint32_t x, std::uint32_t y) { return s.f().add(s.e(x), s.e(y)).index; })
        .def("sub", [](const FieldHandle& s, std::uint32_t x, std::uint32_t y) { return s.f().sub(s.e(x), s.e(y)).index; })
        .def("mul", [](const FieldHandle& s, std::uint32_t x, std::uint32_t y) { return s.f().mul(s.e(x), s.e(y)).index; })
        .def("neg", [](const FieldHandle& s, std::uint32_t x) { return s.f().neg(s.e(x)).index; })
        .def("inv", [](const FieldHandle& s, std::uint32_t x) { return s.f().inv(s.e(x)).index; })
        .def("pow", [](const FieldHandle& s, std::uint32_t x, std::int64_t k) { return s.f().pow(s.e(x), k).index; })
        .def("trace", [](const FieldHandle& s, std::uint32_t x) { return s.f().trace(s.e(x)); })
        .def("dlog", [](const FieldHandle& s, std::uint32_t x) { return s.f().dlog(s.e(x)); })
        .def("exp", [](const FieldHandle& s, std::int64_t k) { return s.f().exp(k).index; })
        .def("chi", [](const FieldHandle& s, std::int64_t mm, std::uint32_t x) { return s.ch().eval_mult(s.c(mm), s.e(x)); },
             py::arg("m"), py::arg("x"))
        .def("psi", [](const FieldHandle& s, std::uint32_t y) { return s.ch().eval_add(s.e(y)); })
        .def("gauss", [](const FieldHandle& s, std::int64_t a) { return s.sums->gauss(s.c(a)); })
        .def("jacobi", [](const FieldHandle& s, std::int64_t a, std::int64_t b) { return s.sums->jacobi(s.c(a), s.c(b)); })
        .def(
            "hyp2f1",
            [](const FieldHandle& s, std::int64_t a, std::int64_t b, std::int64_t c, std::uint32_t x) {
                return s.sums->hyp2f1(s.c(a), s.c(b), s.c(c), s.e(x));
            },
            py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"))
        .def(
            "context",
            [](const FieldHandle& s, std::uint32_t a, bool conjugate) {
                return ContextHandle{make_context(s.sums, s.e(a), conjugate ? QuarticChoice::Conjugate : QuarticChoice::Fixed),
                                 std::nullopt};
            },
            py::arg("a"), py::arg("conjugate_quartic") = false)
        .def("__repr__", [](const FieldHandle& s) {
            return "Field(p=" + std::to_string(s.f().p()) + ", n=" + std::to_string(s.f().n()) + ")";
        });

    py::class_<ContextHandle>(m, "Context")
        .def_property_readonly("a", [](const ContextHandle& c) { return c.ctx.a.index; })
        .def_property_readonly("tau", [](const ContextHandle& c) { return c.ctx.tau; })
        .def_property_readonly("A4", [](const ContextHandle& c) { return c.ctx.A4.exponent(); })
        .def("negated_tau", [](const ContextHandle& c) { return ContextHandle{with_negated_tau(c.ctx), std::nullopt}; })
        .def("P", [](const ContextHandle& c, std::uint32_t j, std::uint32_t k) { return P(c.ctx, c.e(j), c.e(k)); })
        .def("V", [](const ContextHandle& c, std::uint32_t j) { return V(c.ctx, c.e(j)); })
        .def("v_table", [](ContextHandle& c) { return c.tables().v; })
        .def("p_table",
             [](ContextHandle& c) {
                 const auto& t = c.tables().p;
                 std::vector<std::vector<Complex>> rows;
                 for (std::uint32_t j = 0; j < t.q(); ++j) {
                     const auto row = t.row(FieldElem{j});
                     rows.emplace_back(row.begin(), row.end());
                 }
                 return rows;
             })
        .def("mellin_v", [](ContextHandle& c, std::int64_t chi) { return mellin_V_direct(c.ctx, c.tables(), c.c(chi)); })
        .def("mellin_v_closed", [](const ContextHandle& c, std::int64_t chi) { return mellin_V_closed(c.ctx, c.c(chi)); })
        .def("mellin_v_octic", [](const ContextHandle& c) { return mellin_V_octic(c.ctx); })
        .def("mellin_p0", [](ContextHandle& c, std::int64_t chi) { return mellin_P0_direct(c.ctx, c.tables(), c.c(chi)); })
        .def("mellin_p0_closed", [](const ContextHandle& c, std::int64_t chi) { return mellin_P0_closed(c.ctx, c.c(chi)); })
        .def("kummer", [](const ContextHandle& c, std::int64_t nu) { return kummer_hyp(c.ctx, c.c(nu)); })
        .def("kummer_closed", [](const ContextHandle& c, std::int64_t nu) { return kummer_closed(c.ctx, c.c(nu)); })
        .def("h", [](const ContextHandle& c, std::int64_t d, std::uint32_t j) { return h(c.ctx, c.c(d), c.e(j)); })
        .def("h_closed", [](const ContextHandle& c, std::int64_t d, std::uint32_t j) { return h_closed(c.ctx, c.c(d), c.e(j)); })
        .def("double_mellin",
             [](ContextHandle& c, std::int64_t c1, std::int64_t c2) {
                 return double_mellin_direct(c.ctx, c.tables(), c.c(c1), c.c(c2));
             })
        .def("double_mellin_closed",
             [](const ContextHandle& c, std::int64_t nu1, std::int64_t nu2) {
                 return double_mellin_closed(c.ctx, c.c(nu1), c.c(nu2));
             })
        .def("double_mellin_evaluated",
             [](const ContextHandle& c, std::int64_t c1, std::int64_t c2) {
                 return double_mellin_evaluated(c.ctx, c.c(c1), c.c(c2));
             })
        .def("r_coeffs",
             [](const ContextHandle& c, std::int64_t nu1, std::int64_t nu2) {
                 const RCoeffs r = r_coeffs(c.ctx, c.c(nu1), c.c(nu2));
                 return std::vector<Complex>(r.begin(), r.end());
             })
        .def("inverse_mellin", [](const ContextHandle& c, const std::vector<Complex>& values, std::uint32_t j) {
            return inverse_mellin(c.ctx.chars(), values, c.e(j));
        });

    m.def("verify_json", &verify_json, py::arg("fields"), py::arg("a") = "all",
          py::arg("suites") = std::vector<std::string>{"all"}, py::arg("tol") = kDefaultTol,
          "Run the verification suites; returns the JSON report text.");
}
