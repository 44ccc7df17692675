#include "permgrid/cli.hpp"

#include "permgrid/enumerate.hpp"
#include "permgrid/errors.hpp"
#include "permgrid/gridclass.hpp"
#include "permgrid/inflation.hpp"
#include "permgrid/lang.hpp"
#include "permgrid/perm.hpp"
#include "permgrid/series.hpp"
#include "permgrid/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <ostream>
#include <sstream>

namespace permgrid {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<Permutation> parse_basis(const std::string& text) {
    std::vector<Permutation> basis;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ','))
        if (!item.empty()) basis.push_back(Permutation::parse(item));
    if (basis.empty()) throw std::invalid_argument("empty basis");
    return basis;
}

void emit_series(std::ostream& out, const std::string& format, const std::string& name,
                 const TruncatedSeries& series, int terms) {
    if (format == "json") {
        ordered_json root;
        root["name"] = name;
        ordered_json coeffs;
        for (int d = 0; d <= terms; ++d) coeffs[std::to_string(d)] = series.coeff(d).str();
        root["coefficients"] = std::move(coeffs);
        out << root.dump(2) << '\n';
    } else if (format == "csv") {
        out << "degree,coefficient\n";
        for (int d = 0; d <= terms; ++d) out << d << ',' << series.coeff(d).str() << '\n';
    } else {
        for (int d = 1; d <= terms; ++d) out << (d > 1 ? " " : "") << series.coeff(d).str();
        out << '\n';
    }
}

int cmd_enumerate(const std::string& basis_text, int max_len, bool list,
                  const std::string& format, const std::string& cache_dir, int jobs,
                  std::ostream& out) {
    auto basis = parse_basis(basis_text);
    auto listing = enumerate_class(basis, max_len, {.jobs = jobs, .cache_dir = cache_dir});
    if (format == "json") {
        ordered_json root;
        root["basis"] = basis_text;
        ordered_json counts;
        for (int n = 1; n <= max_len; ++n)
            counts[std::to_string(n)] = listing.level(n).size();
        root["counts"] = std::move(counts);
        if (list) {
            ordered_json levels;
            for (int n = 1; n <= max_len; ++n) {
                ordered_json level = ordered_json::array();
                for (const auto& p : listing.level(n)) level.push_back(p.to_string());
                levels[std::to_string(n)] = std::move(level);
            }
            root["permutations"] = std::move(levels);
        }
        out << root.dump(2) << '\n';
    } else if (format == "csv") {
        if (list) {
            out << "n,permutation\n";
            for (int n = 1; n <= max_len; ++n)
                for (const auto& p : listing.level(n)) out << n << ',' << p.to_string() << '\n';
        } else {
            out << "n,count\n";
            for (int n = 1; n <= max_len; ++n) out << n << ',' << listing.level(n).size() << '\n';
        }
    } else {
        for (int n = 1; n <= max_len; ++n) {
            out << "n=" << n << " count=" << listing.level(n).size() << '\n';
            if (list)
                for (const auto& p : listing.level(n)) out << "  " << p.to_string() << '\n';
        }
    }
    return 0;
}

int cmd_simples(const std::string& basis_text, int max_len, bool list, const std::string& format,
                int jobs, std::ostream& out) {
    auto basis = parse_basis(basis_text);
    auto listing = enumerate_class(basis, max_len, {.jobs = jobs});
    if (format == "json") {
        ordered_json root;
        root["basis"] = basis_text;
        ordered_json counts, perms;
        for (int n = 1; n <= max_len; ++n) {
            auto simples = simples_of(listing, n);
            counts[std::to_string(n)] = simples.size();
            if (list) {
                ordered_json level = ordered_json::array();
                for (const auto& p : simples) level.push_back(p.to_string());
                perms[std::to_string(n)] = std::move(level);
            }
        }
        root["counts"] = std::move(counts);
        if (list) root["permutations"] = std::move(perms);
        out << root.dump(2) << '\n';
    } else if (format == "csv") {
        out << (list ? "n,permutation\n" : "n,count\n");
        for (int n = 1; n <= max_len; ++n) {
            auto simples = simples_of(listing, n);
            if (list)
                for (const auto& p : simples) out << n << ',' << p.to_string() << '\n';
            else
                out << n << ',' << simples.size() << '\n';
        }
    } else {
        for (int n = 1; n <= max_len; ++n) {
            auto simples = simples_of(listing, n);
            out << "n=" << n << " count=" << simples.size() << '\n';
            if (list)
                for (const auto& p : simples) out << "  " << p.to_string() << '\n';
        }
    }
    return 0;
}

int cmd_language(const std::string& name, int count_to, int list_to, bool table,
                 const std::string& format, std::ostream& out) {
    LangName lang = lang_name_from_string(name);
    const Dfa& dfa = builtin_dfa(lang);
    if (table) {
        out << dfa.transition_table();
        return 0;
    }
    if (list_to > 0) {
        auto groups = enumerate_words(dfa, list_to);
        if (format == "json") {
            ordered_json root;
            root["name"] = lang_name_to_string(lang);
            ordered_json words;
            for (int n = 1; n <= list_to; ++n) {
                ordered_json level = ordered_json::array();
                for (const auto& w : groups[n]) level.push_back(w);
                words[std::to_string(n)] = std::move(level);
            }
            root["words"] = std::move(words);
            out << root.dump(2) << '\n';
        } else if (format == "csv") {
            out << "n,word\n";
            for (int n = 1; n <= list_to; ++n)
                for (const auto& w : groups[n]) out << n << ',' << w << '\n';
        } else {
            for (int n = 1; n <= list_to; ++n)
                for (const auto& w : groups[n]) out << w << '\n';
        }
        return 0;
    }
    int to = count_to > 0 ? count_to : 12;
    auto counts = count_by_length(dfa, to);
    if (format == "json") {
        ordered_json root;
        root["name"] = lang_name_to_string(lang);
        ordered_json by_length;
        for (int n = 1; n <= to; ++n) by_length[std::to_string(n)] = counts[n].str();
        root["counts"] = std::move(by_length);
        out << root.dump(2) << '\n';
    } else if (format == "csv") {
        out << "n,count\n";
        for (int n = 1; n <= to; ++n) out << n << ',' << counts[n].str() << '\n';
    } else {
        for (int n = 1; n <= to; ++n) out << (n > 1 ? " " : "") << counts[n].str();
        out << '\n';
    }
    return 0;
}

int cmd_verify(bool full, const std::string& format, int jobs, std::ostream& out) {
    auto report = run_verification(full ? VerifyLevel::full : VerifyLevel::quick, {.jobs = jobs});
    if (format == "json")
        out << report_to_json(report);
    else
        out << report_to_text(report);
    return report.overall() ? 0 : 2;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"permutation grid-class enumeration toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list avoiders of a basis by length");
    std::string basis_text = "3124,4312";
    int max_len = 8;
    bool list = false;
    std::string cache_dir;
    enumerate_cmd->add_option("--basis", basis_text, "comma-separated patterns");
    enumerate_cmd->add_option("--max-len", max_len, "largest length")->check(CLI::PositiveNumber);
    enumerate_cmd->add_flag("--list", list, "print the permutations, not just counts");
    enumerate_cmd->add_option("--cache-dir", cache_dir, "directory for level caches");

    // simples
    auto* simples_cmd = app.add_subcommand("simples", "simple permutations of an avoidance class");
    simples_cmd->add_option("--basis", basis_text, "comma-separated patterns");
    simples_cmd->add_option("--max-len", max_len, "largest length")->check(CLI::PositiveNumber);
    simples_cmd->add_flag("--list", list, "print the permutations, not just counts");

    // decode
    auto* decode_cmd = app.add_subcommand("decode", "decode a word on a gridded figure");
    std::string grid_text = "g1";
    std::string word;
    decode_cmd->add_option("--grid", grid_text, "g1, g2 or g3");
    decode_cmd->add_option("--word", word, "word over the cell alphabet")->required();

    // language
    auto* language_cmd = app.add_subcommand("language", "count or list words of a builtin language");
    std::string lang_text;
    int count_to = 0, list_to = 0;
    bool table = false;
    language_cmd->add_option("--name", lang_text, "L1, S1, L2, S2, L3 or S3")->required();
    language_cmd->add_option("--count-to", count_to, "count words of length 1..N");
    language_cmd->add_option("--list-to", list_to, "list words of length 1..N");
    language_cmd->add_flag("--table", table, "print the automaton transition table");

    // gf
    auto* gf_cmd = app.add_subcommand("gf", "expand a named generating function");
    std::string gf_text = "f";
    int terms = 12;
    gf_cmd->add_option("--name", gf_text, "f, S, g1, g2, g3, m1, m2, m3, f_sum or f_skew");
    gf_cmd->add_option("--terms", terms, "number of terms")->check(CLI::PositiveNumber);

    // inflate
    auto* inflate_cmd = app.add_subcommand(
        "inflate", "inflation series of a grid's simple permutations (closed-form f)");
    inflate_cmd->add_option("--grid", grid_text, "g1, g2 or g3");
    inflate_cmd->add_option("--terms", terms, "number of terms")->check(CLI::PositiveNumber);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "solve the class equation by bootstrap");
    solve_cmd->add_option("--terms", terms, "number of terms")->check(CLI::PositiveNumber);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the verification report");
    bool quick = false, full = false;
    verify_cmd->add_flag("--quick", quick, "small lengths and orders (default)");
    verify_cmd->add_flag("--full", full, "full lengths and orders");

    // Global flags may follow a subcommand name.
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("permgrid");
    for (const auto& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        int code = app.exit(e, os, os);
        (code == 0 ? out : err) << os.str();
        return code == 0 ? 0 : 1;
    }

    try {
        if (enumerate_cmd->parsed())
            return cmd_enumerate(basis_text, max_len, list, format, cache_dir, jobs, out);
        if (simples_cmd->parsed())
            return cmd_simples(basis_text, max_len, list, format, jobs, out);
        if (decode_cmd->parsed()) {
            out << decode(builtin_spec(grid_name_from_string(grid_text)), word).to_string()
                << '\n';
            return 0;
        }
        if (language_cmd->parsed())
            return cmd_language(lang_text, count_to, list_to, table, format, out);
        if (gf_cmd->parsed()) {
            emit_series(out, format, gf_text, named_gf(gf_name_from_string(gf_text), terms),
                        terms);
            return 0;
        }
        if (inflate_cmd->parsed()) {
            GridName grid = grid_name_from_string(grid_text);
            auto f = named_gf(GfName::f_closed, terms + 2);
            emit_series(out, format, "I_" + grid_name_to_string(grid),
                        compute_inflation_series(grid, f, terms), terms);
            return 0;
        }
        if (solve_cmd->parsed()) {
            emit_series(out, format, "f", solve_class_gf(terms), terms);
            return 0;
        }
        if (verify_cmd->parsed()) return cmd_verify(full, format, jobs, out);
    } catch (const budget_error& ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

}  // namespace permgrid
