#include "permgrid/enumerate.hpp"
#include "permgrid/gridclass.hpp"
#include "permgrid/inflation.hpp"
#include "permgrid/lang.hpp"
#include "permgrid/perm.hpp"
#include "permgrid/series.hpp"
#include "permgrid/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace permgrid;

namespace {

// Big coefficients cross the boundary as strings; the package wrapper turns
// them into python ints.
std::vector<std::string> series_strings(const TruncatedSeries& series, int terms) {
    std::vector<std::string> out;
    out.reserve(terms + 1);
    for (int d = 0; d <= terms; ++d) out.push_back(series.coeff(d).str());
    return out;
}

std::vector<std::string> perm_strings(const std::vector<Permutation>& perms) {
    std::vector<std::string> out;
    out.reserve(perms.size());
    for (const auto& p : perms) out.push_back(p.to_string());
    return out;
}

std::vector<Permutation> parse_all(const std::vector<std::string>& texts) {
    std::vector<Permutation> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(Permutation::parse(t));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "grid-class permutation enumeration core";

    m.def("contains", [](const std::string& haystack, const std::string& pattern) {
        return contains(Permutation::parse(haystack), Permutation::parse(pattern));
    });
    m.def("avoids_all", [](const std::string& perm, const std::vector<std::string>& basis) {
        auto b = parse_all(basis);
        return avoids_all(Permutation::parse(perm), b);
    });
    m.def("is_simple",
          [](const std::string& perm) { return is_simple(Permutation::parse(perm)); });
    m.def("inflate", [](const std::string& skeleton, const std::vector<std::string>& blocks) {
        return inflate(Permutation::parse(skeleton), parse_all(blocks)).to_string();
    });
    m.def("substitution_decompose", [](const std::string& perm) {
        auto d = substitution_decompose(Permutation::parse(perm));
        return std::pair(d.skeleton.to_string(), perm_strings(d.blocks));
    });

    m.def(
        "enumerate_counts",
        [](const std::vector<std::string>& basis, int max_len, int jobs) {
            return enumerate_class(parse_all(basis), max_len, {.jobs = jobs}).counts();
        },
        py::arg("basis"), py::arg("max_len"), py::arg("jobs") = 1);
    m.def(
        "simples",
        [](const std::vector<std::string>& basis, int n) {
            auto listing = enumerate_class(parse_all(basis), n);
            return perm_strings(simples_of(listing, n));
        },
        py::arg("basis"), py::arg("n"));

    m.def("decode", [](const std::string& grid, const std::string& word) {
        return decode(builtin_spec(grid_name_from_string(grid)), word).to_string();
    });
    m.def(
        "grid_class",
        [](const std::string& grid, int n) {
            return perm_strings(class_by_decode(builtin_spec(grid_name_from_string(grid)), n));
        },
        py::arg("grid"), py::arg("n"));

    m.def("language_counts", [](const std::string& name, int max_n) {
        auto counts = count_by_length(builtin_dfa(lang_name_from_string(name)), max_n);
        std::vector<std::string> out;
        for (const auto& c : counts) out.push_back(c.str());
        return out;
    });
    m.def("language_words", [](const std::string& name, int max_n) {
        return enumerate_words(builtin_dfa(lang_name_from_string(name)), max_n);
    });

    m.def(
        "gf_coefficients",
        [](const std::string& name, int terms) {
            return series_strings(named_gf(gf_name_from_string(name), terms), terms);
        },
        py::arg("name"), py::arg("terms"));
    m.def(
        "solve_coefficients",
        [](int terms) { return series_strings(solve_class_gf(terms), terms); }, py::arg("terms"));
    m.def(
        "inflation_coefficients",
        [](const std::string& grid, int terms) {
            auto f = named_gf(GfName::f_closed, terms + 2);
            return series_strings(
                compute_inflation_series(grid_name_from_string(grid), f, terms), terms);
        },
        py::arg("grid"), py::arg("terms"));

    m.def(
        "verify",
        [](const std::string& level) {
            auto report = run_verification(level == "full" ? VerifyLevel::full
                                                           : VerifyLevel::quick);
            py::list checks;
            for (const auto& check : report.checks) {
                py::dict entry;
                entry["criterion"] = check.criterion;
                entry["name"] = check.name;
                entry["expected"] = check.expected;
                entry["actual"] = check.actual;
                entry["pass"] = check.pass;
                checks.append(std::move(entry));
            }
            return std::pair(report.overall(), checks);
        },
        py::arg("level") = "quick");
}
