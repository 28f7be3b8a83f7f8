// Command-line front end: analyze bundles on fan files, construct blow-ups,
// render SVG pictures, and print the built-in example fans.
//
// Exit codes: 0 analyzed, 2 bundle not spanned, 3 parse/validation error,
// 4 internal criterion disagreement (a bug, never valid input).

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <toric/toric.hpp>

namespace {

using nlohmann::json;
using namespace toric;

constexpr int kExitOk = 0;
constexpr int kExitNotSpanned = 2;
constexpr int kExitInput = 3;
constexpr int kExitInconsistent = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

json level_json(const std::optional<Int>& level) {
    if (!level) return nullptr;
    return *level;
}

json vectors_json(const std::vector<DualVector>& vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(v.coords());
    return arr;
}

json analysis_json(const Fan& fan, const Analysis& a) {
    json j;
    j["dim"] = a.dim;
    json rays = json::array();
    for (const auto& r : fan.rays()) rays.push_back(r.coords());
    j["rays"] = rays;
    json cones = json::array();
    for (const auto& c : fan.max_cones()) {
        json one = json::array();
        for (int ri : c.ray_indices) one.push_back(ri + 1);
        cones.push_back(one);
    }
    j["cones"] = cones;
    j["bundle"] = a.bundle;
    j["wall_table"] = a.wall_table;
    j["criteria"] = {{"jet_level", level_json(a.jet_level)},
                     {"max_convexity", level_json(a.max_convexity)},
                     {"min_edge_length", level_json(a.min_edge)},
                     {"seshadri", level_json(a.seshadri)}};
    j["spanned"] = a.spanned;
    j["criteria_agree"] = a.criteria_agree;
    j["h0"] = a.h0;
    j["vertices"] = vectors_json(a.vertices);
    j["lattice_points"] = vectors_json(a.points);
    if (a.oracle_ran)
        j["oracle"] = {{"max_k", a.oracle_max_k},
                       {"level", level_json(a.oracle_level)},
                       {"agrees", a.oracle_agrees}};
    return j;
}

int run_analyze(const std::string& path, std::optional<Int> oracle_k, int max_points,
                bool as_json, const std::string& out_path) {
    const FanFile file = parse_fan_file(read_input(path));
    if (!file.bundle) throw Error("analyze requires a 'bundle' section in the fan file");
    OracleOptions options;
    options.max_fixed_points = max_points;
    const Analysis a = analyze(*file.bundle, oracle_k, options);

    if (as_json)
        write_output(out_path, analysis_json(file.fan, a).dump(2) + "\n");
    else
        write_output(out_path, to_text(a));

    if (!a.criteria_agree || (a.oracle_ran && !a.oracle_agrees)) return kExitInconsistent;
    if (!a.spanned) return kExitNotSpanned;
    return kExitOk;
}

int run_blowup(const std::string& path, const std::vector<int>& cones_1based,
               std::vector<Int> eps, const std::string& out_path) {
    const FanFile file = parse_fan_file(read_input(path));
    if (eps.empty()) eps.assign(cones_1based.size(), 0);
    if (eps.size() != cones_1based.size())
        throw ParameterError("need one --eps per --cone (or none at all)");
    if (!file.bundle && std::any_of(eps.begin(), eps.end(), [](Int e) { return e != 0; }))
        throw ParameterError("--eps needs a bundle to transform");

    Fan fan = file.fan;
    std::optional<LineBundle> bundle = file.bundle;
    std::vector<std::string> warnings;

    for (std::size_t step = 0; step < cones_1based.size(); ++step) {
        const int cone = cones_1based[step] - 1;
        if (cone < 0 || cone >= fan.cone_count())
            throw ConeError("cone index " + std::to_string(cones_1based[step]) +
                            " out of range 1.." + std::to_string(fan.cone_count()));
        if (bundle) {
            const auto level = jet_level(*bundle);
            if (!level)
                warnings.push_back("step " + std::to_string(step + 1) +
                                   ": bundle is not spanned before the blow-up");
            else if (eps[step] > *level)
                warnings.push_back("step " + std::to_string(step + 1) + ": eps " +
                                   std::to_string(eps[step]) + " exceeds the jet level " +
                                   std::to_string(*level) +
                                   "; the transform may lose all positivity");
        }
        BlowUpResult result = blow_up(fan, cone);
        if (bundle)
            bundle = pullback_minus_exceptional(*bundle, result.fan, result.new_ray, eps[step]);
        fan = std::move(result.fan);
    }

    std::ostringstream out;
    for (const auto& w : warnings) out << "# warning: " << w << "\n";
    out << serialize_fan_file(fan, bundle ? &*bundle : nullptr);
    write_output(out_path, out.str());
    return kExitOk;
}

int run_render(const std::string& path, const std::string& out_path) {
    const FanFile file = parse_fan_file(read_input(path));
    write_output(out_path, render_svg(file.fan, file.bundle ? &*file.bundle : nullptr));
    return kExitOk;
}

int run_examples(const std::string& name, int param, const std::vector<Int>& bundle_coeffs,
                 bool anticanonical, const std::string& out_path) {
    if (name.empty()) {
        std::cout << "built-in fans:\n"
                  << "  pn N          projective N-space (N >= 1)\n"
                  << "  hirzebruch R  Hirzebruch surface F_R (R >= 0)\n"
                  << "  delpezzo6     del Pezzo surface of degree 6\n";
        return kExitOk;
    }
    Fan fan = [&] {
        if (name == "pn") return projective_space(param);
        if (name == "hirzebruch") return hirzebruch(param);
        if (name == "delpezzo6") return del_pezzo_6();
        throw ParameterError("unknown example '" + name + "' (try: pn, hirzebruch, delpezzo6)");
    }();

    std::optional<LineBundle> bundle;
    if (anticanonical && !bundle_coeffs.empty())
        throw ParameterError("--bundle and --anticanonical are mutually exclusive");
    if (anticanonical) bundle = anticanonical_bundle(fan);
    if (!bundle_coeffs.empty()) bundle = LineBundle(fan, bundle_coeffs);

    std::string comment = name;
    if (name == "pn" || name == "hirzebruch") comment += " " + std::to_string(param);
    write_output(out_path, serialize_fan_file(fan, bundle ? &*bundle : nullptr, comment));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact jet-ampleness computations on smooth complete toric varieties"};
    app.require_subcommand(1);

    std::string file;
    std::string out_path;
    Int oracle_k = -1;
    int max_points = 8;
    bool as_json = false;

    auto* analyze_cmd = app.add_subcommand(
        "analyze", "run the four equivalent jet-level criteria on a fan file with a bundle");
    analyze_cmd->add_option("file", file, "fan file ('-' for stdin)")->required();
    analyze_cmd->add_option("--oracle", oracle_k,
                            "also run the brute-force jet matrix oracle up to this order");
    analyze_cmd->add_option("--max-points", max_points,
                            "fixed-point cap for the oracle search (default 8)");
    analyze_cmd->add_flag("--json", as_json, "machine-readable output");
    analyze_cmd->add_option("-o,--output", out_path, "write to file instead of stdout");

    std::vector<int> blowup_cones;
    std::vector<Int> blowup_eps;
    auto* blowup_cmd = app.add_subcommand(
        "blowup", "star-subdivide at fixed points and transform the bundle");
    blowup_cmd->add_option("file", file, "fan file ('-' for stdin)")->required();
    blowup_cmd->add_option("-c,--cone", blowup_cones, "1-based maximal cone index, repeatable")
        ->required();
    blowup_cmd->add_option("-e,--eps", blowup_eps,
                           "exceptional multiple per blow-up (default 0)");
    blowup_cmd->add_option("-o,--output", out_path, "write to file instead of stdout");

    auto* render_cmd = app.add_subcommand("render", "draw a 2-dimensional fan (and P_L) as SVG");
    render_cmd->add_option("file", file, "fan file ('-' for stdin)")->required();
    render_cmd->add_option("-o,--output", out_path, "write to file instead of stdout");

    std::string example_name;
    int example_param = 2;
    std::vector<Int> example_bundle;
    bool example_anticanonical = false;
    auto* examples_cmd = app.add_subcommand("examples", "print a built-in fan file");
    examples_cmd->add_option("name", example_name, "pn | hirzebruch | delpezzo6");
    examples_cmd->add_option("param", example_param, "dimension N for pn, parameter R for hirzebruch");
    examples_cmd->add_option("--bundle", example_bundle, "append a bundle section");
    examples_cmd->add_flag("--anticanonical", example_anticanonical,
                           "append the bundle with coefficient 1 on every ray");
    examples_cmd->add_option("-o,--output", out_path, "write to file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) {
            std::optional<Int> k;
            if (analyze_cmd->count("--oracle")) {
                if (oracle_k < 0) throw ParameterError("--oracle takes a value >= 0");
                k = oracle_k;
            }
            return run_analyze(file, k, max_points, as_json, out_path);
        }
        if (blowup_cmd->parsed()) return run_blowup(file, blowup_cones, blowup_eps, out_path);
        if (render_cmd->parsed()) return run_render(file, out_path);
        if (examples_cmd->parsed())
            return run_examples(example_name, example_param, example_bundle,
                                example_anticanonical, out_path);
    } catch (const InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
