#include "sturmia/cli.hpp"
#include "sturmia/repetition.hpp"
#include "sturmia/torsion.hpp"
#include "sturmia/words.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace sturmia;

namespace {

std::vector<std::uint64_t> encode_py(const std::string& slope, const std::string& n, std::size_t depth) {
    ContinuantTable t(Slope::parse(slope), depth + 1);
    return encode(BigInt(n), t, depth).b;
}

std::string decode_py(const std::string& slope, std::vector<std::uint64_t> digits) {
    ContinuantTable t(Slope::parse(slope), digits.size() + 1);
    return decode(OstrowskiDigits(std::move(digits)), t).str();
}

std::vector<std::optional<std::size_t>> repetition_py(const std::string& word, std::size_t m_max) {
    auto r = repetition_table(word, m_max);
    r.erase(r.begin());
    return r;
}

py::tuple run_py(const std::vector<std::string>& args) {
    std::vector<std::string> all{"sturmia"};
    all.insert(all.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : all) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code;
    {
        py::gil_scoped_release release;
        code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_sturmia, m) {
    m.doc() = "Sturmian words, Ostrowski numeration and formal intercepts";

    py::register_exception<Error>(m, "SturmiaError", PyExc_ValueError);

    m.def("characteristic_prefix", [](const std::string& slope, std::size_t n) {
        return characteristic_prefix(Slope::parse(slope), n);
    }, py::arg("slope"), py::arg("n"));
    m.def("continuants", [](const std::string& slope, std::size_t depth) {
        ContinuantTable t(Slope::parse(slope), depth);
        std::vector<std::string> q;
        for (long i = 0; i <= static_cast<long>(depth); ++i) q.push_back(t.q(i).str());
        return q;
    }, py::arg("slope"), py::arg("depth"));
    m.def("encode", &encode_py, py::arg("slope"), py::arg("n"), py::arg("depth"));
    m.def("decode", &decode_py, py::arg("slope"), py::arg("digits"));
    m.def("repetition_table", &repetition_py, py::arg("word"), py::arg("m_max"));
    m.def("torsion_k", [](const std::string& slope, unsigned modulus, std::size_t n, std::size_t k_max) {
        auto hit = torsion_search(Slope::parse(slope), modulus, n, k_max);
        return hit ? std::optional<std::size_t>(hit->k) : std::nullopt;
    }, py::arg("slope"), py::arg("modulus"), py::arg("n") = 1, py::arg("k_max") = 64);
    m.def("run", &run_py, py::arg("args"), "Run the command line; returns (exit_code, stdout, stderr).");
}
