#include "polycoeff/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polycoeff/analysis.hpp"
#include "polycoeff/compositions.hpp"

namespace polycoeff::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Writes to --out FILE when given, stdout otherwise.
void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& body) {
    if (path.empty() || path == "-") {
        body(out);
        return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("--out: cannot open '" + path + "' for writing");
    body(file);
    if (!file.flush()) throw UsageError("--out: write to '" + path + "' failed");
}

std::vector<std::uint64_t> parse_m_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::uint64_t v = 0;
        if (item.empty() || !CLI::detail::lexical_cast(item, v)) {
            throw UsageError("--m-list: '" + item + "' is not a nonnegative integer");
        }
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("--m-list: expected a comma-separated list of m values");
    return out;
}

void print_log_approx(std::ostream& out, const LogApprox& a) {
    out << "log_value=" << format_real(a.log_value) << '\n';
    if (a.value) out << "value=" << format_real(*a.value) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact polynomial coefficients, the distribution of sums of uniform draws, "
                 "and their normal approximations",
                 "polycoeff"};
    app.require_subcommand(1);

    Limits limits;
    app.add_option("--max-row-entries", limits.max_row_entries,
                   "Largest row (kl+1 entries) any command may materialize")
        ->capture_default_str();

    std::uint64_t k = 0, l = 0, m = 0, a = 0, b = 0, target = 0;
    std::int64_t n = 0;
    std::function<void()> action;

    auto* row = app.add_subcommand("row", "Row k of the (l+1)-nomial triangle, one entry per line");
    row->add_option("k", k)->required();
    row->add_option("l", l)->required();
    row->callback([&] {
        action = [&] {
            for (const auto& v : triangle_row(k, l, limits).values) out << v.get_str() << '\n';
        };
    });

    auto* coeff = app.add_subcommand("coeff", "Coefficient of x^n in (1+x+...+x^l)^k");
    coeff->add_option("k", k)->required();
    coeff->add_option("n", n)->required();
    coeff->add_option("l", l)->required();
    coeff->callback([&] {
        action = [&] { out << coefficient({k, n, l}, limits).get_str() << '\n'; };
    });

    auto* central = app.add_subcommand("central", "Central coefficient at floor(ml/2)");
    central->add_option("m", m)->required();
    central->add_option("l", l)->required();
    central->callback([&] {
        action = [&] { out << central_coefficient(m, l, limits).get_str() << '\n'; };
    });

    std::string method = "pointwise";
    auto* approx = app.add_subcommand("approx", "Normal approximation of one coefficient or probability");
    approx->add_option("m", m)->required();
    approx->add_option("n", n)->required();
    approx->add_option("l", l)->required();
    approx->add_option("--method", method)
        ->check(CLI::IsMember({"pointwise", "cc-phi", "central"}))
        ->capture_default_str();
    approx->callback([&] {
        action = [&] {
            if (method == "pointwise") {
                print_log_approx(out, pointwise_approx(m, n, l));
            } else if (method == "central") {
                if (n < 0 || static_cast<std::uint64_t>(n) != m * l / 2) {
                    throw DomainError("approx --method central: n must equal floor(ml/2) = " +
                                      std::to_string(m * l / 2));
                }
                print_log_approx(out, central_approx(m, l));
            } else {
                const double p = cc_phi_approx(m, n, l);
                out << "log_value=" << format_real(std::log(p)) << '\n';
                out << "value=" << format_real(p) << '\n';
            }
        };
    });

    bool rational = false;
    auto* pmf = app.add_subcommand("pmf", "Exact P[S=n] for n = 0..ml, one per line");
    pmf->add_option("m", m)->required();
    pmf->add_option("l", l)->required();
    pmf->add_flag("--rational", rational, "Print reduced numerator/denominator");
    pmf->callback([&] {
        action = [&] {
            const ExactPmf p = exact_pmf(m, l, limits);
            for (std::size_t i = 0; i < p.size(); ++i) {
                const Rational q = p.prob(static_cast<std::int64_t>(i));
                if (rational) {
                    out << q.get_num().get_str() << '/' << q.get_den().get_str() << '\n';
                } else {
                    out << format_real(q.get_d()) << '\n';
                }
            }
        };
    });

    SamplerConfig sampler;
    auto* sample = app.add_subcommand("sample", "Monte Carlo counts of S=n for n = 0..ml, one per line");
    sample->add_option("m", sampler.m)->required();
    sample->add_option("l", sampler.l)->required();
    sample->add_option("--count", sampler.sample_count)->required();
    sample->add_option("--seed", sampler.seed)->required();
    sample->add_option("--workers", sampler.workers, "Worker threads (does not change the output)");
    sample->callback([&] {
        action = [&] {
            for (auto c : sample_sums(sampler, limits)) out << c << '\n';
        };
    });

    std::string out_path;
    auto* errors = app.add_subcommand("errors", "Relative-error sweep over n = 0..ml as CSV");
    errors->add_option("m", m)->required();
    errors->add_option("l", l)->required();
    errors->add_option("--out", out_path, "Output file (stdout when omitted)");
    errors->callback([&] {
        action = [&] {
            const auto records = error_sweep(m, l, limits);
            emit(out_path, out, [&](std::ostream& os) { write_error_csv(os, records); });
        };
    });

    std::string m_list;
    auto* curve = app.add_subcommand("central-errors", "Central relative error for each m as CSV");
    curve->add_option("l", l)->required();
    curve->add_option("--m-list", m_list, "Comma-separated m values")->required();
    curve->add_option("--out", out_path, "Output file (stdout when omitted)");
    curve->callback([&] {
        action = [&] {
            const auto ms = parse_m_list(m_list);
            const auto records = central_error_curve(l, ms, limits);
            emit(out_path, out, [&](std::ostream& os) { write_error_csv(os, records); });
        };
    });

    auto* density = app.add_subcommand("pmf-normal", "Exact PMF beside the normal density as CSV");
    density->add_option("m", m)->required();
    density->add_option("l", l)->required();
    density->add_option("--out", out_path, "Output file (stdout when omitted)");
    density->callback([&] {
        action = [&] {
            const auto points = pmf_vs_normal(m, l, limits);
            emit(out_path, out, [&](std::ostream& os) { write_density_csv(os, points); });
        };
    });

    bool list = false;
    auto* comps = app.add_subcommand("compositions", "Compositions of n into k parts from {a..b}");
    comps->add_option("n", target)->required();
    comps->add_option("k", k)->required();
    comps->add_option("a", a)->required();
    comps->add_option("b", b)->required();
    comps->add_flag("--list", list, "Print every composition, comma-separated, in lexicographic order");
    comps->callback([&] {
        action = [&] {
            const CompositionQuery q{target, k, a, b};
            if (!list) {
                out << count_compositions(q, limits).get_str() << '\n';
                return;
            }
            for (const auto& parts : enumerate_compositions(q, limits)) {
                for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
                out << '\n';
            }
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        action();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomainError;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return kResourceError;
    } catch (const std::bad_alloc&) {
        err << "resource error: out of memory\n";
        return kResourceError;
    }
    return kOk;
}

}  // namespace polycoeff::cli
