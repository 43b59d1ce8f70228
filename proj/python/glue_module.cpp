#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "glue/cli/ingest.hpp"
#include "glue/cli/scan.hpp"
#include "glue/errors.hpp"
#include "glue/matcher/filter.hpp"
#include "glue/models/point_count.hpp"
#include "glue/screen/sieve.hpp"
#include "glue/screen/trace.hpp"
#include "glue/sturm/sturm.hpp"
#include "glue/symplectic/symplectic.hpp"

namespace py = pybind11;
using namespace glue;

namespace {

// arbitrary-size ints cross the boundary as decimal strings
Integer to_mpz(const py::handle& o) { return Integer(py::str(o).cast<std::string>()); }
py::int_ to_py(const Integer& z) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10))); }

IntPoly to_poly(const py::iterable& cs) {
    std::vector<Integer> v;
    for (auto c : cs) v.push_back(to_mpz(c));
    return IntPoly(v);
}

py::list poly_list(const IntPoly& P) {
    py::list out;
    for (auto& c : P.coeffs()) out.append(to_py(c));
    return out;
}

TraceFunction trace_function(const GenusTwoCurve& Y, std::uint64_t ell, const std::vector<std::uint64_t>& chi) {
    std::uint64_t D = character_modulus(Y, ell);
    return TraceFunction(Y, ell, chi.empty() ? DirichletCharacter::trivial(D, ell) : DirichletCharacter(D, ell, chi));
}

py::object json_to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_glue, m) {
    m.doc() = "gluing-candidate search between genus-2 and elliptic curves over Q";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<bad_reduction>(m, "BadReduction", PyExc_ValueError);
    py::register_exception<glue::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

    py::class_<GenusTwoCurve>(m, "GenusTwoCurve")
        .def(py::init([](std::string label, py::iterable f, py::iterable h, py::object N) {
                 return GenusTwoCurve(std::move(label), to_poly(f), to_poly(h), to_mpz(N));
             }),
             py::arg("label"), py::arg("f"), py::arg("h"), py::arg("conductor"))
        .def_readonly("label", &GenusTwoCurve::label)
        .def_property_readonly("f", [](const GenusTwoCurve& Y) { return poly_list(Y.f); })
        .def_property_readonly("h", [](const GenusTwoCurve& Y) { return poly_list(Y.h); })
        .def_property_readonly("conductor", [](const GenusTwoCurve& Y) { return to_py(Y.conductor); })
        .def_property_readonly("discriminant", [](const GenusTwoCurve& Y) { return to_py(Y.discriminant()); })
        .def("__repr__", [](const GenusTwoCurve& Y) { return "<GenusTwoCurve " + Y.label + ">"; });

    py::class_<EllipticCurve>(m, "EllipticCurve")
        .def(py::init([](std::string label, py::iterable ainvs, py::object N, py::object disc_min) {
                 std::vector<Integer> a;
                 for (auto c : ainvs) a.push_back(to_mpz(c));
                 if (a.size() != 5) throw glue::invalid_argument("ainvs needs 5 entries");
                 std::optional<Integer> d;
                 if (!disc_min.is_none()) d = to_mpz(disc_min);
                 return EllipticCurve(std::move(label), {a[0], a[1], a[2], a[3], a[4]}, to_mpz(N), d);
             }),
             py::arg("label"), py::arg("ainvs"), py::arg("conductor"), py::arg("disc_min") = py::none())
        .def_readonly("label", &EllipticCurve::label)
        .def_property_readonly("ainvs",
                               [](const EllipticCurve& X) {
                                   py::list l;
                                   for (auto& c : X.a) l.append(to_py(c));
                                   return l;
                               })
        .def_property_readonly("conductor", [](const EllipticCurve& X) { return to_py(X.conductor); })
        .def("__repr__", [](const EllipticCurve& X) { return "<EllipticCurve " + X.label + ">"; });

    m.def("ingest_genus2", &ingest_genus2, py::arg("path"));
    m.def("ingest_elliptic", &ingest_elliptic, py::arg("path"));

    m.def(
        "frobenius_polynomial",
        [](const GenusTwoCurve& Y, std::uint64_t p) { return poly_list(frobenius_polynomial(Y, p).poly()); },
        py::arg("Y"), py::arg("p"), "ascending coefficients of F_{Y,p}");
    m.def("ap", &ap_elliptic, py::arg("X"), py::arg("p"));

    m.def(
        "possible_primes",
        [](const GenusTwoCurve& Y, std::uint64_t bound) { return possible_primes(Y, default_primes(Y, bound)); },
        py::arg("Y"), py::arg("bound") = 100);
    m.def("character_modulus", &character_modulus, py::arg("Y"), py::arg("ell"));
    m.def(
        "character_candidates",
        [](const GenusTwoCurve& Y, std::uint64_t ell, std::uint64_t q_bound) {
            std::vector<std::vector<std::uint64_t>> out;
            for (auto& c : character_candidates(Y, ell, primes_up_to(q_bound))) out.push_back(c.exponents());
            return out;
        },
        py::arg("Y"), py::arg("ell"), py::arg("q_bound") = 100, "exponent vectors of the surviving characters");
    m.def(
        "trace_b",
        [](const GenusTwoCurve& Y, std::uint64_t ell, std::uint64_t p, std::vector<std::uint64_t> chi) {
            return trace_b(trace_function(Y, ell, chi), p);
        },
        py::arg("Y"), py::arg("ell"), py::arg("p"), py::arg("chi") = std::vector<std::uint64_t>{});
    m.def(
        "find_certificate",
        [](const GenusTwoCurve& Y, std::uint64_t ell, std::uint64_t bound, std::vector<std::uint64_t> chi) {
            return find_certificate(trace_function(Y, ell, chi), primes_up_to(bound));
        },
        py::arg("Y"), py::arg("ell"), py::arg("bound") = 100, py::arg("chi") = std::vector<std::uint64_t>{});
    m.def(
        "filter_elliptic",
        [](const GenusTwoCurve& Y, std::uint64_t ell, const std::vector<EllipticCurve>& dataset, std::uint64_t bound,
           std::vector<std::uint64_t> chi, unsigned threads) {
            py::gil_scoped_release nogil;
            return filter_elliptic(trace_function(Y, ell, chi), dataset, bound, nullptr, threads).survivor_labels();
        },
        py::arg("Y"), py::arg("ell"), py::arg("dataset"), py::arg("bound") = 100,
        py::arg("chi") = std::vector<std::uint64_t>{}, py::arg("threads") = 1, "labels of the surviving curves");

    m.def(
        "find_witness_prime",
        [](const EllipticCurve& X, const GenusTwoCurve& Y, std::uint64_t ell, std::uint64_t bound) -> std::optional<std::uint64_t> {
            auto w = find_witness_prime(X, Y, ell, bound);
            if (!w) return std::nullopt;
            return w->p;
        },
        py::arg("X"), py::arg("Y"), py::arg("ell"), py::arg("bound") = 500);
    m.def(
        "symplectic_type",
        [](const EllipticCurve& X, const GenusTwoCurve& Y, std::uint64_t ell, std::uint64_t p, std::uint64_t seed) {
            SymplecticVerdict v;
            {
                py::gil_scoped_release nogil;
                v = symplectic_type(X, Y, ell, p, seed);
            }
            py::dict d;
            d["type"] = to_string(v.type);
            d["p"] = v.witness->p;
            d["w1"] = v.w1;
            d["w2"] = v.w2;
            d["alpha"] = v.witness->alpha;
            d["beta"] = v.witness->beta;
            d["gamma"] = v.witness->gamma;
            d["antisymplectic_exists"] = *antisymplectic_exists(v);
            return d;
        },
        py::arg("X"), py::arg("Y"), py::arg("ell"), py::arg("p"), py::arg("seed") = 0);

    m.def(
        "sturm_parameters",
        [](py::object NX, py::object NY, std::uint64_t ell) {
            auto s = sturm_parameters(to_mpz(NX), to_mpz(NY), ell);
            return py::make_tuple(to_py(s.M), to_py(s.B), s.k);
        },
        py::arg("N_X"), py::arg("N_Y"), py::arg("ell"), "(M, B, k)");
    m.def(
        "prove_isomorphism",
        [](const EllipticCurve& X, const GenusTwoCurve& Y, std::uint64_t ell, std::optional<std::uint64_t> bound,
           std::optional<std::string> checkpoint_dir, std::vector<std::uint64_t> chi, unsigned threads) {
            auto t = trace_function(Y, ell, chi);
            SturmVerdict v;
            {
                py::gil_scoped_release nogil;
                auto cert = certify_irreducible(t, 100);
                if (!cert.irreducible) throw glue::invalid_argument("irreducibility not certified with p <= 100");
                SturmOptions o;
                o.bound = bound;
                o.threads = threads;
                if (checkpoint_dir) o.checkpoint_dir = *checkpoint_dir;
                v = prove_isomorphism(X, t, cert, o);
            }
            py::dict d;
            d["isomorphic"] = v.isomorphic;
            d["complete"] = v.complete;
            d["bound"] = v.bound;
            d["primes_checked"] = v.primes_checked;
            d["witness"] = v.witness ? py::object(py::int_(*v.witness)) : py::object(py::none());
            d["caveat"] = v.caveat;
            return d;
        },
        py::arg("X"), py::arg("Y"), py::arg("ell"), py::arg("bound") = py::none(), py::arg("checkpoint_dir") = py::none(),
        py::arg("chi") = std::vector<std::uint64_t>{}, py::arg("threads") = 1);

    m.def(
        "scan",
        [](const std::vector<GenusTwoCurve>& g2, const std::vector<EllipticCurve>& ec, std::uint64_t seed,
           unsigned threads, bool timing, std::optional<std::vector<std::uint64_t>> ells, bool verify) {
            ScanConfig c;
            c.seed = seed;
            c.threads = threads;
            c.timing = timing;
            c.ells = ells;
            nlohmann::json r;
            {
                py::gil_scoped_release nogil;
                r = scan(c, g2, ec);
                if (verify) r["verification"] = verify_report(r, g2, ec).to_json();
            }
            return json_to_py(r);
        },
        py::arg("genus2"), py::arg("elliptic"), py::arg("seed") = 0, py::arg("threads") = 1, py::arg("timing") = false,
        py::arg("ells") = py::none(), py::arg("verify") = false, "the full workflow; returns the report as a dict");

    m.attr("report_schema_version") = report_schema_version;
}
