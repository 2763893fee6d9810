// cli_checks.cpp - black-box checks of the command-line tool.
//
// Usage: cli_checks <path-to-talbot-binary>
// Spawns the binary, captures stdout and exit codes, and checks the
// documented contract: exit 0 on success, 2 on usage/domain errors, 3 on
// grid errors, byte-identical output for identical invocations.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "talbot/field.hpp"
#include "talbot/io.hpp"

namespace fs = std::filesystem;

namespace {

int checks_failed = 0;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << command << "\n";
        std::exit(1);
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void expect(bool ok, const std::string& what) {
    std::printf("%s %s\n", ok ? "ok  " : "FAIL", what.c_str());
    if (!ok) ++checks_failed;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: cli_checks <talbot-binary>\n";
        return 1;
    }
    const std::string bin = argv[1];
    const fs::path dir =
        fs::temp_directory_path() / ("talbot_cli_checks_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string out = dir.string();

    // --- s-table -----------------------------------------------------------
    {
        const RunResult r = run(bin + " s-table --qmax 11 --pmax 10");
        expect(r.exit_code == 0, "s-table exits 0");
        const std::string corrected_q2_row = "2,1,,3,,1,,3,,1,";
        expect(r.output.find(corrected_q2_row) != std::string::npos,
               "s-table q=2 row reads 1,3,1,3,1");
        expect(r.output.find("8,1,,11,,13,,7,,9,") != std::string::npos,
               "s-table q=8 row matches");
        const RunResult again = run(bin + " s-table --qmax 11 --pmax 10");
        expect(r.output == again.output, "s-table output is byte-identical across runs");
    }
    {
        const RunResult r = run(bin + " s-table --qmax 2 --pmax 1");
        expect(r.exit_code == 0 && r.output == ",1\n2,1\n", "s-table single entry");
    }
    expect(run(bin + " s-table --qmax 1").exit_code == 2, "s-table --qmax 1 exits 2");
    expect(run(bin + " nonsense").exit_code == 2, "unknown subcommand exits 2");

    // --- phases --------------------------------------------------------------
    {
        const RunResult r = run(bin + " phases 1 2");
        expect(r.exit_code == 0, "phases 1 2 exits 0");
        expect(r.output.find("\"num\": 7") != std::string::npos &&
                   r.output.find("\"den\": 4") != std::string::npos,
               "phases 1 2 reports the -pi/4 global phase");
        expect(r.output.find("\"s\": 1") != std::string::npos, "phases 1 2 reports s");
    }
    {
        const RunResult r = run(bin + " phases 1 1");
        expect(r.exit_code == 0 && r.output.find("\"complex\"") != std::string::npos,
               "phases 1 1 single unit level");
    }
    expect(run(bin + " phases 2 4").exit_code == 2, "phases 2 4 (not coprime) exits 2");
    {
        const RunResult r = run(bin + " phases --order 2/4");
        expect(r.exit_code == 0 && r.output.find("\"q\": 2") != std::string::npos,
               "phases --order 2/4 reduces the fraction");
    }
    {
        const std::string path = out + "/pair.csv";
        const RunResult r = run(bin + " phases 1 2 --format csv --out " + path);
        expect(r.exit_code == 0 && fs::exists(path), "phases writes a csv file");
    }

    // --- verify ---------------------------------------------------------------
    {
        const RunResult r = run(bin + " verify dft --qmax 8");
        expect(r.exit_code == 0, "verify dft --qmax 8 exits 0");
        expect(r.output.find("PASS") != std::string::npos, "verify prints PASS lines");
    }
    expect(run(bin + " verify s --qmax 40").exit_code == 0, "verify s --qmax 40 exits 0");
    expect(run(bin + " verify bogus").exit_code == 2, "unknown suite exits 2");
    {
        const RunResult serial = run("TALBOT_GAUSS_THREADS=1 " + bin + " verify dft --qmax 6");
        const RunResult threaded = run("TALBOT_GAUSS_THREADS=4 " + bin + " verify dft --qmax 6");
        expect(serial.exit_code == 0 && serial.output == threaded.output,
               "sweep reports do not depend on the thread budget");
    }
    expect(run(bin + " --help").exit_code == 0, "--help exits 0");

    // --- tai -------------------------------------------------------------------
    {
        const std::string prefix = out + "/tai14";
        const RunResult r = run(bin + " tai 1 4 --out-prefix " + prefix);
        expect(r.exit_code == 0, "tai 1 4 exits 0");
        expect(r.output.find("PASS concentration") != std::string::npos,
               "tai 1 4 passes the concentration predicate");
        expect(r.output.find("amplitude=2") != std::string::npos,
               "tai 1 4 peak amplitude sqrt(4) = 2");
        expect(fs::exists(prefix + ".design.json") && fs::exists(prefix + ".trace.csv"),
               "tai writes design and trace files");
    }
    {
        const RunResult r = run(bin + " tai 1 1 --out-prefix " + out + "/tai11");
        expect(r.exit_code == 0 && r.output.find("amplitude=1") != std::string::npos,
               "tai 1 1 passthrough peak 1");
    }
    {
        const RunResult r = run(bin + " tai 1 3 --sign -1 --out-prefix " + out + "/tai13m");
        expect(r.exit_code == 0 && r.output.find("PASS concentration") != std::string::npos,
               "tai 1 3 --sign -1 concentrates the same");
    }
    expect(run(bin + " tai 2 4").exit_code == 2, "tai 2 4 (not coprime) exits 2");

    // --- simulate ----------------------------------------------------------------
    {
        // rect cell of width T/2 on 64 samples
        std::vector<talbot::Complex> samples(64, talbot::Complex(0.0, 0.0));
        for (std::size_t k = 0; k < 32; ++k) samples[k] = 1.0;
        talbot::io::write_envelope(talbot::PeriodicEnvelope(1.0, samples),
                                   out + "/rect.csv");

        const RunResult both = run(bin + " simulate " + out + "/rect.csv --order 1/2" +
                                   " --mode both --out " + out + "/rect_out.csv");
        expect(both.exit_code == 0, "simulate --mode both exits 0");
        expect(both.output.find("l_inf=") != std::string::npos,
               "simulate --mode both prints compare metrics");
        const std::size_t pos = both.output.find("l_inf=");
        const double l_inf = std::strtod(both.output.c_str() + pos + 6, nullptr);
        expect(l_inf < 1e-9, "simulate routes agree to 1e-9");

        const RunResult full = run(bin + " simulate " + out + "/rect.csv --order 2/1" +
                                   " --mode propagate --out " + out + "/rect_full.csv");
        expect(full.exit_code == 0, "simulate --order 2/1 exits 0");
        const talbot::PeriodicEnvelope in = talbot::io::read_envelope(out + "/rect.csv");
        const talbot::PeriodicEnvelope round =
            talbot::io::read_envelope(out + "/rect_full.csv");
        expect(talbot::compare(in, round).l_inf < 1e-10,
               "simulate --order 2/1 returns the input");

        const RunResult half = run(bin + " simulate " + out + "/rect.csv --order 1/1" +
                                   " --mode reconstruct --out " + out + "/rect_half.csv");
        expect(half.exit_code == 0, "simulate --order 1/1 exits 0");
        const talbot::PeriodicEnvelope shifted =
            talbot::io::read_envelope(out + "/rect_half.csv");
        bool ok = true;
        for (std::size_t k = 0; k < in.size(); ++k)
            ok = ok && std::abs(shifted.samples[k] -
                                in.at(static_cast<long long>(k) - 32)) < 1e-12;
        expect(ok, "simulate --order 1/1 shifts by half a period");
    }
    {
        // 10 samples cannot host q = 4 in reconstruct mode -> exit 3
        std::vector<talbot::Complex> samples(10, talbot::Complex(1.0, 0.0));
        talbot::io::write_envelope(talbot::PeriodicEnvelope(1.0, samples), out + "/ten.csv");
        expect(run(bin + " simulate " + out + "/ten.csv --order 1/4 --mode reconstruct")
                       .exit_code == 3,
               "grid mismatch exits 3");
    }
    expect(run(bin + " simulate " + out + "/absent.csv --order 1/2").exit_code == 2,
           "missing input exits 2");

    if (checks_failed == 0) {
        std::printf("CLI: all checks passed\n");
        return 0;
    }
    std::printf("CLI: %d checks FAILED\n", checks_failed);
    return 1;
}
