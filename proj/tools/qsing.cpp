#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsing/classify.hpp"
#include "qsing/construct.hpp"
#include "qsing/group.hpp"
#include "qsing/report.hpp"
#include "qsing/spec_format.hpp"
#include "qsing/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

int finish_report(const qsing::ClassificationReport& rep, bool json) {
    if (json)
        std::cout << qsing::report_to_json(rep).dump(2) << "\n";
    else
        std::cout << qsing::report_to_text(rep);
    return rep.theorem_witness == qsing::TheoremWitness::Violation
               ? kExitViolation
               : kExitOk;
}

int run_classify(const std::string& path, bool json, long max_order) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read file: " << path << "\n";
        return kExitError;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    qsing::GroupSpec spec = qsing::parse_spec(buf.str());
    qsing::FiniteMatrixGroup g = qsing::FiniteMatrixGroup::closure(
        spec.generators, static_cast<std::size_t>(max_order));
    return finish_report(qsing::classify(g), json);
}

int run_construct(const std::string& family, long n, std::optional<long> q,
                  const std::string& emit, bool json) {
    qsing::FiniteMatrixGroup g =
        family == "even" ? qsing::construct_even(n)
                         : qsing::construct_odd_composite(n, q);
    if (emit == "report") return finish_report(qsing::classify(g), json);

    qsing::GroupSpec spec;
    spec.cyclotomic_order = g.ambient_order();
    spec.dimension = g.dim();
    for (std::size_t idx : g.generator_indices())
        spec.generators.push_back(g.element(idx));
    std::cout << qsing::emit_spec(spec);
    return kExitOk;
}

int run_verify(const std::vector<long>& dims) {
    bool all_passed = true;
    bool violation = false;
    for (const qsing::SuiteResult& r : qsing::run_verify_suites(dims)) {
        std::cout << "suite " << r.name << ": " << (r.passed ? "PASS" : "FAIL")
                  << "\n";
        for (const std::string& f : r.failures)
            std::cout << "  failed: " << f << "\n";
        all_passed = all_passed && r.passed;
        violation = violation || r.violation;
    }
    if (violation) return kExitViolation;
    return all_passed ? kExitOk : kExitError;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of finite-group quotient singularities"};
    app.require_subcommand(1);

    auto* classify_cmd = app.add_subcommand(
        "classify", "Read a group description file and classify the quotient");
    std::string path;
    bool classify_json = false;
    long max_order = static_cast<long>(qsing::kDefaultClosureCap);
    classify_cmd->add_option("path", path, "group description file")->required();
    classify_cmd->add_flag("--json", classify_json, "JSON output");
    classify_cmd->add_option("--max-order", max_order,
                             "group size cap for the closure");

    auto* construct_cmd = app.add_subcommand(
        "construct", "Build one of the built-in non-cyclic families");
    std::string family;
    long n = 0;
    long q_value = 0;
    std::string emit = "spec";
    bool construct_json = false;
    construct_cmd->add_option("--family", family, "family to build")
        ->required()
        ->check(CLI::IsMember({"even", "odd-composite"}));
    construct_cmd->add_option("--n", n, "dimension")->required();
    auto* q_opt = construct_cmd->add_option(
        "--q", q_value, "prime divisor of n (odd-composite only)");
    construct_cmd
        ->add_option("--emit", emit, "output form: spec or report")
        ->check(CLI::IsMember({"spec", "report"}));
    construct_cmd->add_flag("--json", construct_json,
                            "JSON output (with --emit report)");

    auto* verify_cmd = app.add_subcommand(
        "verify-paper", "Run the built-in verification corpus");
    std::string n_list;
    verify_cmd->add_option("--n-list", n_list,
                           "comma-separated dimensions (default 2,3,4,5,6,7,9,15)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (app.got_subcommand(classify_cmd)) {
            if (max_order < 1) {
                std::cerr << "error: --max-order must be >= 1\n";
                return kExitError;
            }
            return run_classify(path, classify_json, max_order);
        }
        if (app.got_subcommand(construct_cmd)) {
            std::optional<long> q;
            if (q_opt->count() > 0) {
                if (family != "odd-composite") {
                    std::cerr << "error: --q applies only to --family odd-composite\n";
                    return kExitError;
                }
                q = q_value;
            }
            return run_construct(family, n, q, emit, construct_json);
        }
        // verify-paper
        std::vector<long> dims;
        if (verify_cmd->count("--n-list") == 0) {
            dims = qsing::default_verify_dims();
        } else {
            std::istringstream is(n_list);
            std::string item;
            while (std::getline(is, item, ',')) {
                try {
                    std::size_t used = 0;
                    long v = std::stol(item, &used);
                    if (used != item.size()) throw std::invalid_argument(item);
                    dims.push_back(v);
                } catch (const std::exception&) {
                    std::cerr << "error: bad --n-list entry: '" << item << "'\n";
                    return kExitError;
                }
            }
            if (dims.empty()) {
                std::cerr << "error: --n-list is empty\n";
                return kExitError;
            }
        }
        return run_verify(dims);
    } catch (const qsing::SpecParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
