#include "CLI11.hpp"

#include "qv/groebner.hpp"
#include "qv/pipeline.hpp"
#include "qv/scene.hpp"
#include "qv/series.hpp"
#include "qv/strata.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

std::string joined_targets() {
    std::string s;
    for (const std::string& t : qv::pipeline_targets()) {
        if (!s.empty()) s += ", ";
        s += t;
    }
    return s;
}

int cmd_verify(const std::string& target, const std::string& format, unsigned jobs,
               const std::string& report_path, bool list, bool verbose) {
    if (list) {
        for (const std::string& t : qv::pipeline_targets()) std::printf("%s\n", t.c_str());
        return 0;
    }
    std::vector<std::string> names =
        target.empty() ? qv::pipeline_targets() : std::vector<std::string>{target};
    for (const std::string& n : names) {
        const std::vector<std::string>& known = qv::pipeline_targets();
        if (std::find(known.begin(), known.end(), n) == known.end()) {
            std::fprintf(stderr, "unknown target '%s'; known targets: %s\n", n.c_str(),
                         joined_targets().c_str());
            return 2;
        }
    }

    std::vector<qv::RunReport> parts(names.size());
    if (jobs > 1 && names.size() > 1) {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < names.size(); i = next.fetch_add(1))
                parts[i] = qv::run_target(names[i]);
        };
        std::vector<std::thread> pool;
        std::size_t width = std::min<std::size_t>(jobs, names.size());
        for (std::size_t k = 0; k < width; ++k) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    } else {
        for (std::size_t i = 0; i < names.size(); ++i) parts[i] = qv::run_target(names[i]);
    }
    qv::RunReport report;
    for (qv::RunReport& p : parts)
        report.certs.insert(report.certs.end(), std::make_move_iterator(p.certs.begin()),
                            std::make_move_iterator(p.certs.end()));

    if (format == "json")
        std::printf("%s\n", qv::report_json(report).c_str());
    else
        qv::print_report(report, verbose);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::fprintf(stderr, "cannot write %s\n", report_path.c_str());
            return 2;
        }
        out << qv::report_json(report) << "\n";
    }
    return report.all_ok() ? 0 : 1;
}

int cmd_strata(int degree, const std::string& forms) {
    std::vector<qv::Stratum> strata;
    if (forms == "ternary")
        strata = qv::ternary_strata(degree);
    else if (forms == "binary")
        strata = qv::binary_strata(degree);
    else {
        std::fprintf(stderr, "unknown form type '%s'\n", forms.c_str());
        return 2;
    }
    std::printf("unstable strata of %s degree-%d forms (%zu):\n", forms.c_str(), degree,
                strata.size());
    for (const qv::Stratum& s : strata) std::printf("  %s\n", qv::stratum_table_row(s).c_str());
    return 0;
}

int cmd_series(const std::string& space, int order) {
    std::string text = qv::poincare_series_text(space);
    if (order >= 0) {
        qv::RatSeries s = qv::parse_series(text);
        std::printf("%s\n", s.expand(order).str().c_str());
    } else {
        std::printf("%s\n", text.c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for quartic moduli computations"};
    app.require_subcommand(1);

    std::string target, format = "text", report_path, scene_dir_flag;
    unsigned jobs = 1;
    bool all = false, list = false, verbose = false;
    CLI::App* verify = app.add_subcommand("verify", "run certified checks");
    CLI::Option* opt_target =
        verify->add_option("--target", target, "single target to run (" + joined_targets() + ")");
    verify->add_flag("--all", all, "run every target (the default when no --target is given)")
        ->excludes(opt_target);
    verify->add_option("--format", format, "report format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--jobs", jobs, "max targets run concurrently")
        ->check(CLI::PositiveNumber);
    verify->add_option("--report", report_path, "write a JSON report here");
    verify->add_option("--scenes", scene_dir_flag, "scene directory override");
    verify->add_flag("--list", list, "list targets and exit");
    verify->add_flag("-v,--verbose", verbose, "print passing checks too");

    int degree = 4;
    std::string forms = "ternary";
    CLI::App* strata = app.add_subcommand("strata", "print the unstable-strata table");
    strata->add_option("--degree", degree, "degree of the forms");
    strata->add_option("--forms", forms, "ternary or binary");

    std::string space = "git";
    int order = -1;
    CLI::App* series = app.add_subcommand("series", "print a certified Poincare series");
    series->add_option("--space", space, "git | k | phat-prime | phat | hacking | octic-quotient");
    series->add_option("--order", order, "expand the series to this degree instead");

    std::string cache_action = "stats";
    std::string cache_dir_flag;
    CLI::App* cache = app.add_subcommand("cache", "manage the basis cache");
    cache->add_option("action", cache_action, "stats | clear");
    cache->add_option("--dir", cache_dir_flag, "cache directory override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (!scene_dir_flag.empty()) qv::set_scene_dir(scene_dir_flag);
        if (!cache_dir_flag.empty()) qv::set_cache_dir(cache_dir_flag);
        if (verify->parsed()) return cmd_verify(target, format, jobs, report_path, list, verbose);
        if (strata->parsed()) return cmd_strata(degree, forms);
        if (series->parsed()) return cmd_series(space, order);
        if (cache->parsed()) {
            if (cache_action == "clear") {
                std::printf("removed %zu cached bases\n", qv::cache_clear());
            } else if (cache_action == "stats") {
                std::printf("cache dir: %s (%zu bases)\n", qv::cache_dir().c_str(),
                            qv::cache_count());
            } else {
                std::fprintf(stderr, "unknown cache action '%s'\n", cache_action.c_str());
                return 2;
            }
            return 0;
        }
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    }
    return 2;
}
