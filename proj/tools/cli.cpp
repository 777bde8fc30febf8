#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ktoric/fanio.hpp"
#include "ktoric/ktheory.hpp"

using namespace ktoric;

namespace {

// exit codes: 0 ok, 1 invalid fan, 2 I/O or schema error, 3 element parse
// error, 4 infinite-rank structure

int load_fan(const std::string& path, FanFile& out)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        out = parse_fan_json(buf.str());
    } catch (const FanIoError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}

int cmd_report(const std::string& path, const ReportOptions& opts,
               const std::string& format)
{
    FanFile file;
    if (int rc = load_fan(path, file))
        return rc;
    std::cout << (format == "text" ? report_text(file, opts)
                                   : report_json(file, opts));
    return fan_is_valid(file) ? 0 : 1;
}

int cmd_order(const std::string& path, const std::string& element)
{
    FanFile file;
    if (int rc = load_fan(path, file))
        return rc;
    if (!fan_is_valid(file)) {
        std::cerr << "invalid fan\n";
        return 1;
    }
    try {
        KZeroStructure k = k0_structure(file.fan);
        if (!k.finite) {
            std::cerr << "K0 has infinite rank; element orders are not computed\n";
            return 4;
        }
        auto ord = element_order_in_k0(k, element);
        if (ord)
            std::cout << ord->str() << "\n";
        else
            std::cout << "infinite\n";
        return 0;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << element << "\n";
        std::cerr << std::string(std::min(e.offset, element.size()), ' ') << "^\n";
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Grothendieck groups of toric Deligne-Mumford stacks"};
    app.require_subcommand(1);

    std::string report_path, order_path, element;
    ReportOptions opts;
    std::string mode = "group_ring", format = "json";
    std::vector<long long> primes;
    bool no_shell = false;

    auto* report = app.add_subcommand("report", "full report for a fan file");
    report->add_option("path", report_path, "fan JSON file")->required();
    report->add_option("--primes", primes, "Cohen-Macaulay check primes")
        ->delimiter(',');
    report->add_flag("--no-shellability", no_shell, "skip the shellability search");
    report->add_option("--shell-cap", opts.shell_cap,
                       "facet-count cap for the shellability search");
    report->add_option("--mode", mode, "presentation mode")
        ->check(CLI::IsMember({"laurent", "group_ring"}));
    report->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    report->add_flag("--timings", opts.timings, "include timings (breaks byte-stability)");

    auto* order = app.add_subcommand("order", "order of an element's class in K0");
    order->add_option("path", order_path, "fan JSON file")->required();
    order->add_option("--element", element, "expression in the ray classes x1..xn")
        ->required();

    CLI11_PARSE(app, argc, argv);

    if (report->parsed()) {
        opts.primes = primes;
        opts.shellability = !no_shell;
        opts.mode = mode == "laurent" ? K0Mode::laurent : K0Mode::group_ring;
        try {
            return cmd_report(report_path, opts, format);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }
    try {
        return cmd_order(order_path, element);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
