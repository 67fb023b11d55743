#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "c2/error.hpp"
#include "c2/forms.hpp"
#include "c2/primes.hpp"

namespace c2::cli {

namespace {

const std::vector<std::string> kCertificateHeader = {"k", "M", "w", "x", "p1", "p2", "d",
                                                     "symbol_ok", "h", "two_part", "cyclic"};

const std::vector<std::string> kSummaryHeader = {"d", "h", "two_part", "cyclic", "ambiguous_count"};

std::optional<std::filesystem::path> cache_path(const RunConfig& cfg) {
    if (cfg.cache) return std::filesystem::path(*cfg.cache);
    if (const char* env = std::getenv("C2_CACHE"); env != nullptr && *env != '\0') {
        return std::filesystem::path(env);
    }
    return std::nullopt;
}

void emit(const Table& table, const RunConfig& cfg, std::ostream& out) {
    if (!cfg.output) {
        table.write(out, cfg.format);
        out.flush();
        return;
    }
    std::ofstream file(*cfg.output, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("io", *cfg.output, "cannot open output file " + *cfg.output);
    table.write(file, cfg.format);
    if (!file) throw Error("io", *cfg.output, "failed writing " + *cfg.output);
}

std::vector<Cell> certificate_row(unsigned k, i64 M, i64 w, i64 x, i64 p1, i64 p2, i64 d,
                                  bool symbol_ok, const ClassGroup2Summary& s) {
    return {u64{k}, M, w, x, p1, p2, d, symbol_ok, s.h, s.two_part, s.cyclic_2sylow};
}

std::vector<Cell> summary_row(const ClassGroup2Summary& s) {
    return {s.d, s.h, s.two_part, s.cyclic_2sylow, s.ambiguous_count};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void error_line(std::ostream& err, const std::string& code, const std::string& detail,
                const std::string& message) {
    nlohmann::ordered_json j;
    j["error"] = code;
    j["detail"] = detail;
    j["message"] = message;
    err << j.dump() << '\n';
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& format) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", cfg.output, "Write data to this file instead of stdout");
    sub->add_option("--cache", cfg.cache, "Sieve cache file (default: $C2_CACHE)");
    sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig cfg;
    std::string format = "csv";

    CLI::App app{"Cyclic 2-class group construction and circle-method arithmetic", "c2"};
    app.require_subcommand(1, 1);

    auto* search = app.add_subcommand("search", "Search for certified fields Q(sqrt(-p1 p2))");
    search->add_option("--k", cfg.k, "2-class group order exponent")->required()->check(CLI::Range(1u, 6u));
    search->add_option("--m-min", cfg.m_min, "Smallest M")->check(CLI::PositiveNumber);
    search->add_option("--m-max", cfg.m_max, "Largest M")->required()->check(CLI::PositiveNumber);
    search->add_option("--d-max", cfg.d_max, "Largest discriminant handed to the oracle")
        ->check(CLI::PositiveNumber);
    search->add_flag("--negative", cfg.negative,
                     "Examine every p1 = 1, p2 = 3 (mod 4) pair, including failing ones");
    add_common(search, cfg, format);

    auto* verify = app.add_subcommand("verify", "Re-validate a certificate or report the 2-Sylow of d");
    verify->add_option("--p1", cfg.p1)->check(CLI::PositiveNumber);
    verify->add_option("--p2", cfg.p2)->check(CLI::PositiveNumber);
    verify->add_option("--k", cfg.k)->check(CLI::Range(1u, 6u));
    verify->add_option("--m", cfg.M, "M in w = 2 M^2")->check(CLI::PositiveNumber);
    verify->add_option("--d", cfg.d, "Discriminant magnitude")->check(CLI::PositiveNumber);
    verify->add_option("--d-max", cfg.d_max)->check(CLI::PositiveNumber);
    add_common(verify, cfg, format);

    auto* classgroup = app.add_subcommand("classgroup", "Class number and 2-Sylow structure of -d");
    classgroup->add_option("--d", cfg.d, "Discriminant magnitude")->required()->check(CLI::PositiveNumber);
    classgroup->add_flag("--forms", cfg.forms, "Include the reduced forms");
    add_common(classgroup, cfg, format);

    auto* singular = app.add_subcommand("singular", "Singular series S1(m), S2(m) in both modes");
    singular->add_option("--m", cfg.m)->required()->check(CLI::PositiveNumber);
    singular->add_option("--q", cfg.Q, "Series truncation bound")->check(CLI::Range(u64{2}, u64{100'000'000}));
    add_common(singular, cfg, format);

    auto* compare = app.add_subcommand("compare", "R2(n) against n S2(n) over a window");
    compare->add_option("--n-lo", cfg.n_lo)->required()->check(CLI::Range(u64{6}, u64{1} << 40));
    compare->add_option("--n-hi", cfg.n_hi)->required()->check(CLI::Range(u64{6}, u64{1} << 40));
    compare->add_option("--step", cfg.step)->check(CLI::PositiveNumber);
    compare->add_flag("--skip-vanishing", cfg.skip_vanishing, "Drop n with S2(n) = 0 instead of failing");
    add_common(compare, cfg, format);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        std::ostringstream text, ignored;
        app.exit(e, text, ignored);
        throw HelpRequested(text.str());
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.format = format == "json" ? Format::json : Format::csv;
    return cfg;
}

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    const i64 n_max = search_ceiling(cfg.k, cfg.m_min, cfg.m_max);
    const PrimeTable table = sieve_cached(2, static_cast<u64>(n_max - 3), cache_path(cfg));

    SearchLimits limits;
    limits.max_d = cfg.d_max;
    limits.threads = cfg.threads;
    limits.filter = cfg.negative ? PairFilter::mod4 : PairFilter::mod8;
    const SearchResult result = search(cfg.k, cfg.m_min, cfg.m_max, limits, &table);

    Table t(kCertificateHeader);
    if (cfg.negative) {
        for (const auto& e : result.examinations) {
            t.add_row(certificate_row(e.k, e.M, e.w, e.x, e.p1, e.p2, e.d, e.symbol_ok, e.oracle));
        }
    } else {
        for (const auto& c : result.certificates) {
            t.add_row(certificate_row(c.k, c.M, c.w, c.x, c.p1, c.p2, c.d, c.symbol_ok, c.oracle));
        }
    }
    emit(t, cfg, out);

    for (const auto& r : result.rejections) {
        err << "# rejected k=" << cfg.k << " M=" << r.M << " p1=" << r.p1 << " p2=" << r.p2
            << " reason=" << r.reason << '\n';
    }
    err << "# search k=" << cfg.k << " M=" << cfg.m_min << ".." << cfg.m_max
        << " certificates=" << result.certificates.size()
        << " examined=" << result.examinations.size() << " rejected=" << result.rejections.size()
        << " seconds=" << format_real(seconds_since(start)) << '\n';
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const bool any_pair = cfg.p1 || cfg.p2 || cfg.M || cfg.k != 0;
    if (cfg.d) {
        if (any_pair) throw InvalidArgument("verify takes either --d or --p1 --p2 --k --m", "flags");
        const auto s = class_number(*cfg.d);
        Table t(kSummaryHeader);
        t.add_row(summary_row(s));
        emit(t, cfg, out);
        return kExitOk;
    }
    if (!cfg.p1 || !cfg.p2 || !cfg.M || cfg.k == 0) {
        throw InvalidArgument("verify needs --p1 --p2 --k --m together, or --d", "flags");
    }
    const Certificate c = certify(cfg.k, *cfg.M, *cfg.p1, *cfg.p2, cfg.d_max);
    Table t(kCertificateHeader);
    t.add_row(certificate_row(c.k, c.M, c.w, c.x, c.p1, c.p2, c.d, c.symbol_ok, c.oracle));
    emit(t, cfg, out);
    err << "# verified d=" << c.d << " 2-class group cyclic of order " << c.oracle.two_part << '\n';
    return kExitOk;
}

int cmd_classgroup(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const auto s = class_number(*cfg.d);
    auto header = kSummaryHeader;
    auto row = summary_row(s);
    if (cfg.forms) {
        StringList forms;
        for (const Form& f : reduced_forms(-static_cast<i64>(*cfg.d))) forms.push_back(to_string(f));
        header.push_back("forms");
        row.emplace_back(std::move(forms));
    }
    Table t(std::move(header));
    t.add_row(std::move(row));
    emit(t, cfg, out);
    return kExitOk;
}

int cmd_singular(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    Table t({"series", "m", "mode", "truncation_Q", "value", "vanishing_reason"});
    const std::string s1_reason = cfg.m % 2 != 0 ? "odd" : "none";
    const std::string s2_reason = vanishing_reason(cfg.m);
    for (SeriesMode mode : {SeriesMode::series, SeriesMode::product}) {
        const auto v = singular_S1(cfg.m, mode, cfg.Q);
        t.add_row({std::string("S1"), v.m, to_string(v.mode), v.truncation_Q, v.value, s1_reason});
    }
    for (SeriesMode mode : {SeriesMode::series, SeriesMode::product}) {
        const auto v = singular_S2(cfg.m, mode, cfg.Q);
        t.add_row({std::string("S2"), v.m, to_string(v.mode), v.truncation_Q, v.value, s2_reason});
    }
    emit(t, cfg, out);
    return kExitOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.n_lo > cfg.n_hi) throw InvalidArgument("--n-lo must not exceed --n-hi", "window");
    const auto start = std::chrono::steady_clock::now();
    const PrimeTable table = sieve_cached(2, cfg.n_hi - 3, cache_path(cfg));
    const auto rows = compare_window(cfg.n_lo, cfg.n_hi, cfg.step, table, cfg.skip_vanishing, cfg.threads);

    Table t({"n", "R2", "main_term", "ratio"});
    double total = 0.0;
    for (const auto& r : rows) {
        t.add_row({r.n, r.r2, r.main_term, r.ratio});
        total += r.ratio;
    }
    emit(t, cfg, out);
    err << "# compare rows=" << rows.size()
        << " mean_ratio=" << (rows.empty() ? std::string("nan") : format_real(total / rows.size()))
        << " seconds=" << format_real(seconds_since(start)) << '\n';
    return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const HelpRequested& h) {
        out << h.text;
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        error_line(err, "invalid-argument", e.get_name(), e.what());
        return kExitInvalid;
    }

    static const std::map<std::string, int (*)(const RunConfig&, std::ostream&, std::ostream&)>
        kCommands = {{"search", cmd_search},
                     {"verify", cmd_verify},
                     {"classgroup", cmd_classgroup},
                     {"singular", cmd_singular},
                     {"compare", cmd_compare}};
    try {
        return kCommands.at(cfg.subcommand)(cfg, out, err);
    } catch (const InternalError& e) {
        error_line(err, e.code(), e.detail(), e.what());
        return kExitInternal;
    } catch (const Error& e) {
        error_line(err, e.code(), e.detail(), e.what());
        return kExitInvalid;
    } catch (const std::exception& e) {
        error_line(err, "internal", "", e.what());
        return kExitInternal;
    }
}

}  // namespace c2::cli
