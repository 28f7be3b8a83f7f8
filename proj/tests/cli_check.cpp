// End-to-end checks of the command line tool: exit codes, pipelines, JSON
// output, and rendering determinism. Invoked by ctest with the binary path
// and the sample data directory as arguments.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>
#include <toric/fan_io.hpp>

namespace {

int checks = 0;
int failed = 0;

struct Result {
    int exit_code = -1;
    std::string output;
};

Result run_command(const std::string& command) {
    Result r;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        r.exit_code = -1;
        return r;
    }
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.output.append(buffer, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failed;
        std::cerr << "FAIL: " << what << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_check <toricjets-binary> <data-dir>\n";
        return 2;
    }
    const std::string cli = std::string("\"") + argv[1] + "\"";
    const std::string data = argv[2];

    {
        auto r = run_command(cli + " analyze " + data + "/dp6.fan 2>/dev/null");
        expect(r.exit_code == 0, "analyze dp6 exits 0");
        expect(r.output.find("jet level (min wall degree):   1") != std::string::npos,
               "dp6 jet level is 1");
        expect(r.output.find("criteria agreement:            yes") != std::string::npos,
               "dp6 criteria agree");
        expect(r.output.find("h^0 (lattice points of P_L):   7") != std::string::npos,
               "dp6 has 7 sections");
    }

    {
        auto r = run_command(cli + " analyze --oracle 2 " + data + "/dp6.fan 2>/dev/null");
        expect(r.exit_code == 0, "analyze --oracle 2 dp6 exits 0");
        expect(r.output.find("[agrees]") != std::string::npos, "oracle agrees on dp6");
    }

    {
        auto r = run_command(cli + " analyze " + data + "/p2_not_spanned.fan 2>/dev/null");
        expect(r.exit_code == 2, "non-spanned bundle exits 2");
        expect(r.output.find("not spanned") != std::string::npos, "report says not spanned");
    }

    {
        auto r = run_command("printf 'dim 2\\nrays\\n2 4\\n0 1\\n-1 -1\\ncones\\n1 2\\n2 3\\n1 3\\n' | " +
                             cli + " analyze - 2>/dev/null");
        expect(r.exit_code == 3, "non-primitive ray exits 3");
    }

    {
        auto r = run_command("printf 'dim 2\\nrays\\nbogus\\n' | " + cli +
                             " analyze - 2>/dev/null");
        expect(r.exit_code == 3, "parse garbage exits 3");
    }

    {
        auto r = run_command(cli + " analyze " + data + "/no_such_file.fan 2>/dev/null");
        expect(r.exit_code == 3, "missing file exits 3");
    }

    {
        auto r = run_command(cli + " examples pn 2 2>/dev/null | " + cli +
                             " analyze - 2>/dev/null");
        expect(r.exit_code == 3, "fan without bundle cannot be analyzed");
    }

    {
        auto r = run_command(cli + " examples delpezzo6 --anticanonical 2>/dev/null | " + cli +
                             " analyze - 2>/dev/null");
        expect(r.exit_code == 0, "examples | analyze pipeline works");
        expect(r.output.find("toric Seshadri constant:       1") != std::string::npos,
               "pipeline reports the Seshadri constant");
    }

    {
        auto r = run_command(cli + " blowup " + data +
                             "/p2_o3.fan --cone 3 --eps 1 2>/dev/null | " + cli +
                             " analyze - 2>/dev/null");
        expect(r.exit_code == 0, "blowup | analyze pipeline works");
        expect(r.output.find("jet level (min wall degree):   1") != std::string::npos,
               "pullback minus exceptional has level 1");
    }

    {
        auto r = run_command(cli + " blowup " + data + "/p2_o3.fan --cone 3 --eps 9 2>/dev/null");
        expect(r.exit_code == 0, "oversized eps still emits a file");
        expect(r.output.find("# warning:") != std::string::npos,
               "oversized eps carries a warning comment");
    }

    {
        // three chained blow-ups of the plane give the del Pezzo fan
        const std::string chained = cli + " examples pn 2 2>/dev/null | " + cli +
                                    " blowup - --cone 1 2>/dev/null | " + cli +
                                    " blowup - --cone 1 2>/dev/null | " + cli +
                                    " blowup - --cone 3 2>/dev/null";
        auto r = run_command(chained);
        expect(r.exit_code == 0, "chained blow-ups exit 0");
        try {
            const toric::FanFile parsed = toric::parse_fan_file(r.output);
            expect(toric::equal_up_to_ray_order(parsed.fan, toric::del_pezzo_6()),
                   "triple blow-up of the plane matches del Pezzo 6");
        } catch (const std::exception& e) {
            expect(false, std::string("chained output parses: ") + e.what());
        }
    }

    {
        auto r = run_command(cli + " analyze --json " + data + "/dp6.fan 2>/dev/null");
        expect(r.exit_code == 0, "json analyze exits 0");
        try {
            const auto j = nlohmann::json::parse(r.output);
            expect(j["criteria"]["jet_level"] == 1, "json jet level");
            expect(j["criteria"]["max_convexity"] == 1, "json convexity");
            expect(j["criteria"]["min_edge_length"] == 1, "json edge length");
            expect(j["criteria"]["seshadri"] == 1, "json seshadri");
            expect(j["h0"] == 7, "json h0");
            expect(j["spanned"] == true, "json spanned");
            expect(j["wall_table"].size() == 6, "json wall table size");
        } catch (const std::exception& e) {
            expect(false, std::string("json parses: ") + e.what());
        }
    }

    {
        auto first = run_command(cli + " render " + data + "/dp6.fan 2>/dev/null");
        auto second = run_command(cli + " render " + data + "/dp6.fan 2>/dev/null");
        expect(first.exit_code == 0, "render exits 0");
        expect(first.output.rfind("<svg", 0) == 0, "render emits svg");
        expect(first.output == second.output, "render output is byte-identical across runs");
    }

    {
        auto r = run_command(cli + " render " + data + "/p3_o2.fan 2>/dev/null");
        expect(r.exit_code == 3, "rendering a 3-fold exits 3");
    }

    {
        auto r = run_command(cli + " analyze " + data + "/p3_o2.fan 2>/dev/null");
        expect(r.exit_code == 0, "analyze the 3-fold");
        expect(r.output.find("jet level (min wall degree):   2") != std::string::npos,
               "O(2) on the 3-fold has level 2");
    }

    {
        auto r = run_command(cli + " analyze --oracle 1 " + data + "/f2.fan 2>/dev/null");
        expect(r.exit_code == 0, "analyze F_2 sample");
        expect(r.output.find("jet level (min wall degree):   1") != std::string::npos,
               "F_2 sample bundle has level 1");
        expect(r.output.find("[agrees]") != std::string::npos, "oracle agrees on F_2");
    }

    std::cout << (checks - failed) << "/" << checks << " cli checks passed\n";
    return failed == 0 ? 0 : 1;
}
