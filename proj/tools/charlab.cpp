// charlab: Dirichlet character sums, pretentious distance, and desk-scale
// experiments around odd-order character sum lower bounds.
//
// Exit codes: 0 success, 1 verification suite failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "charlab/characters.hpp"
#include "charlab/charsums.hpp"
#include "charlab/lab.hpp"

namespace {

int write_output(const std::vector<charlab::ScanRecord>& records, const std::string& path,
                 const std::string& format) {
    const charlab::RecordFormat fmt =
        format == "json" ? charlab::RecordFormat::kJson : charlab::RecordFormat::kCsv;
    if (path.empty()) {
        charlab::write_records(std::cout, records, fmt);
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "charlab: cannot open '" << path << "' for writing\n";
        return 2;
    }
    charlab::write_records(out, records, fmt);
    return out.good() ? 0 : 2;
}

void print_report(const charlab::SuiteReport& report) {
    std::printf("suite        %s\n", report.name.c_str());
    std::printf("cases        %llu/%llu\n",
                static_cast<unsigned long long>(report.cases_passed),
                static_cast<unsigned long long>(report.cases_run));
    std::printf("worst        %.12g  (%s)\n", report.worst, report.worst_label.c_str());
    if (report.trend_slope)
        std::printf("trend slope  %.12g\n", *report.trend_slope);
    std::printf("result       %s\n", report.passed() ? "PASS" : "FAIL");
}

int run_msum(std::uint64_t q, std::uint64_t index) {
    const std::vector<charlab::Character> chars = charlab::enumerate_characters(q);
    if (index >= chars.size()) {
        std::cerr << "charlab msum: char-index " << index << " out of range (phi(" << q
                  << ") = " << chars.size() << ")\n";
        return 2;
    }
    const charlab::Character& chi = chars[index];
    if (chi.is_principal()) {
        std::cerr << "charlab msum: the principal character has unbounded partial sums\n";
        return 2;
    }
    const double m = charlab::max_partial_sum(chi);
    const charlab::CharacterKey key = charlab::CharacterKey::of(chi);
    std::printf("q             %llu\n", static_cast<unsigned long long>(q));
    std::printf("char_index    %llu\n", static_cast<unsigned long long>(index));
    std::printf("char_exps     %s\n", key.exponents_string().c_str());
    std::printf("order         %llu\n", static_cast<unsigned long long>(chi.order()));
    std::printf("parity        %s\n", chi.is_odd() ? "odd" : "even");
    std::printf("conductor     %llu\n", static_cast<unsigned long long>(chi.conductor()));
    std::printf("M             %.12g\n", m);
    std::printf("M_over_sqrtq  %.12g\n", m / std::sqrt(static_cast<double>(q)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"character-sum laboratory: scans, growth normalizations, verification suites"};
    app.require_subcommand(1);

    std::uint64_t g = 3;
    CLI::App* cmd_delta = app.add_subcommand("delta", "print delta_g = 1 - (g/pi) sin(pi/g)");
    cmd_delta->add_option("--g", g, "odd order g >= 3")->required();

    charlab::ScanOptions scan_options;
    std::string scan_format = "csv";
    std::string scan_out;
    CLI::App* cmd_scan =
        app.add_subcommand("scan", "scan primitive odd-order characters over prime moduli");
    cmd_scan->add_option("--order", scan_options.order, "character order (odd, >= 3)")
        ->capture_default_str();
    cmd_scan->add_option("--qmin", scan_options.q_min, "lower end of the modulus range")
        ->capture_default_str();
    cmd_scan->add_option("--qmax", scan_options.q_max, "upper end of the modulus range")
        ->capture_default_str();
    cmd_scan
        ->add_option("--psi-max", scan_options.psi_conductor_max,
                     "largest conductor in the twist pool")
        ->capture_default_str();
    cmd_scan
        ->add_option("--epsilon", scan_options.epsilon,
                     "shift of the growth-norm exponent 1 - delta_g - epsilon")
        ->capture_default_str();
    cmd_scan->add_option("--threads", scan_options.threads, "worker threads (0 = hardware)")
        ->capture_default_str();
    cmd_scan->add_option("--format", scan_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd_scan->add_option("--out", scan_out, "output file (default: stdout)");

    charlab::PaleyOptions paley_options;
    std::string paley_format = "csv";
    std::string paley_out;
    CLI::App* cmd_paley =
        app.add_subcommand("paley", "quadratic-character growth scan over prime moduli");
    cmd_paley->add_option("--qmax", paley_options.q_max, "upper end of the modulus range")
        ->capture_default_str();
    cmd_paley
        ->add_option("--psi-max", paley_options.psi_conductor_max,
                     "largest conductor in the twist pool")
        ->capture_default_str();
    cmd_paley
        ->add_option("--epsilon", paley_options.epsilon,
                     "shift of the growth-norm exponent 1 - delta_g - epsilon")
        ->capture_default_str();
    cmd_paley->add_option("--threads", paley_options.threads, "worker threads (0 = hardware)")
        ->capture_default_str();
    cmd_paley->add_option("--format", paley_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd_paley->add_option("--out", paley_out, "output file (default: stdout)");

    std::string suite;
    std::uint64_t seed = 42;
    unsigned verify_threads = 0;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(charlab::suite_names()));
    cmd_verify->add_option("--seed", seed, "seed for the randomized suites")
        ->capture_default_str();
    cmd_verify->add_option("--threads", verify_threads, "worker threads (0 = hardware)")
        ->capture_default_str();

    std::uint64_t msum_q = 0;
    std::uint64_t msum_index = 0;
    CLI::App* cmd_msum =
        app.add_subcommand("msum", "maximum partial sum of one character");
    cmd_msum->add_option("--modulus", msum_q, "modulus q")->required();
    cmd_msum->add_option("--char-index", msum_index, "index in enumeration order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_delta) {
            std::printf("%.12g\n", charlab::delta(g));
            return 0;
        }
        if (*cmd_scan) {
            return write_output(charlab::scan_odd_order(scan_options), scan_out, scan_format);
        }
        if (*cmd_paley) {
            return write_output(charlab::paley_scan(paley_options), paley_out, paley_format);
        }
        if (*cmd_verify) {
            const charlab::SuiteReport report = charlab::run_suite(suite, seed, verify_threads);
            print_report(report);
            return report.passed() ? 0 : 1;
        }
        if (*cmd_msum) {
            return run_msum(msum_q, msum_index);
        }
    } catch (const std::exception& e) {
        std::cerr << "charlab: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
