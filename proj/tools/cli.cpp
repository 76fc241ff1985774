#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "pcpeq/density.hpp"
#include "pcpeq/group_pcp.hpp"
#include "pcpeq/instance_io.hpp"
#include "pcpeq/monoid_pcp.hpp"
#include "pcpeq/oracle.hpp"
#include "pcpeq/stallings.hpp"

namespace pcpeq::cli {

namespace {

namespace fs = std::filesystem;

/// Input problems that are the caller's fault: exit 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

io::MorphismFile load(const std::string& path, std::size_t min_maps) {
    const std::string text = read_file(path);
    try {
        return io::parse(text, min_maps);
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                         ": " + e.what());
    }
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw UsageError("cannot write " + path.string());
    }
}

EqualiserResult solve(const io::MorphismFile& file, bool as_set) {
    const std::vector<Morphism> maps = file.morphisms();
    const bool group = file.mode == Mode::group;
    if (as_set) {
        return group ? group::solve_set(maps) : monoid::solve_set(maps);
    }
    const Instance instance = file.instance();
    return group ? group::solve_pair(instance) : monoid::solve_pair(instance);
}

std::string step_name(std::size_t i, std::string_view suffix) {
    std::ostringstream name;
    name << "step_" << std::setw(3) << std::setfill('0') << i << suffix;
    return name.str();
}

void write_trace(const fs::path& dir, const io::MorphismFile& file, const EqualiserResult& result) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw UsageError("cannot create " + dir.string() + ": " + ec.message());
    }
    const std::string g = file.maps[0].name;
    const std::string h = file.maps[1].name;
    if (result.trail.empty()) {
        write_file(dir / step_name(0, ".pcp"), io::serialize_instance(file.instance(), g, h));
        return;
    }
    for (std::size_t i = 0; i < result.trail.size(); ++i) {
        const ReductionStep& step = result.trail[i];
        write_file(dir / step_name(i, ".pcp"), io::serialize_instance(step.before, g, h));
        if (step.core) {
            write_file(dir / step_name(i, "_core.dot"), export_dot(*step.core));
        }
    }
    write_file(dir / step_name(result.trail.size(), ".pcp"),
               io::serialize_instance(result.trail.back().after, g, h));
}

int cmd_solve(const std::string& path, bool as_set, const std::string& trace, std::ostream& out) {
    const io::MorphismFile file = load(path, 2);
    const EqualiserResult result = solve(file, as_set || file.maps.size() > 2);
    if (!trace.empty()) {
        write_trace(trace, file, result);
    }
    out << io::serialize(result);
    return exit_ok;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_check(const std::string& path, std::ostream& out) {
    const io::MorphismFile file = load(path, 1);
    bool all_pass = true;
    for (const auto& [name, map] : file.maps) {
        const auto why = marking_violation(map);
        out << "map " << name << ": ";
        if (file.mode == Mode::monoid) {
            out << "marked=" << yes_no(!why);
            all_pass = all_pass && !why;
        } else {
            const ImmersionReport r = immersion_report(map);
            const bool ok = r.agree() && r.marked_images;
            out << "marked-images=" << yes_no(r.marked_images)
                << " folded-bouquet=" << yes_no(r.folded_bouquet)
                << " length-identity=" << yes_no(r.length_identity)
                << " immersion=" << yes_no(ok);
            if (!r.agree()) {
                out << " (characterisations disagree)";
            }
            all_pass = all_pass && ok;
        }
        if (why) {
            out << " # " << *why;
        }
        out << '\n';
    }
    return all_pass ? exit_ok : exit_check_failed;
}

int cmd_reduce(const std::string& path, std::size_t steps, std::ostream& out) {
    const io::MorphismFile file = load(path, 2);
    const Instance start = file.instance();
    Instance current = start;
    for (std::size_t i = 0; i < steps; ++i) {
        current = file.mode == Mode::group ? group::reduce_group_instance(current).after
                                           : monoid::reduce_instance(current).after;
    }
    out << "# sigma " << prefix_complexity(start) << " -> " << prefix_complexity(current) << '\n';
    out << io::serialize_instance(current, file.maps[0].name, file.maps[1].name);
    return exit_ok;
}

int cmd_oracle(const std::string& path, std::size_t radius, std::ostream& out) {
    const io::MorphismFile file = load(path, 2);
    const EqualiserResult result = solve(file, file.maps.size() > 2);
    const std::vector<Morphism> maps = file.morphisms();
    const oracle::Report report = oracle::check_result(maps, result, {radius, file.mode});
    out << "radius " << radius << '\n';
    out << "basis " << result.basis.size() << '\n';
    out << "equaliser-elements " << report.equaliser_elements << '\n';
    out << "image-elements " << report.image_elements << '\n';
    for (const std::string& v : report.violations) {
        out << "violation " << v << '\n';
    }
    if (report.witness) {
        out << "witness " << to_string(*report.witness) << '\n';
    }
    out << (report.passed ? "pass" : "fail") << '\n';
    return report.passed ? exit_ok : exit_check_failed;
}

int cmd_density(const std::string& kind_text, const density::Params& params, bool header,
                std::ostream& out) {
    const auto kind = density::kind_from_string(kind_text);
    if (!kind) {
        throw UsageError("unknown density kind '" + kind_text + "'");
    }
    density::Measurement m;
    try {
        m = density::measure_density(params, *kind);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (header) {
        out << density::csv_header() << '\n';
    }
    out << density::csv_row(params, *kind, m) << '\n';
    return exit_ok;
}

int cmd_export_dot(const std::string& path, const std::string& which, const std::string& output,
                   std::ostream& out) {
    const io::MorphismFile file = load(path, which == "g" ? 1 : 2);
    if (file.mode != Mode::group) {
        throw UsageError("export-dot needs a group-mode file");
    }
    auto checked_bouquet = [](const io::NamedMorphism& m) {
        for (std::size_t a = 0; a < m.map.domain().size(); ++a) {
            if (m.map.image(a).empty()) {
                throw PreconditionError("map " + m.name + ": image of " +
                                        m.map.domain().symbol(a) + " is empty");
            }
        }
        return bouquet(m.map);
    };
    std::string dot;
    if (which == "g") {
        dot = export_dot(checked_bouquet(file.maps[0]));
    } else if (which == "h") {
        dot = export_dot(checked_bouquet(file.maps[1]));
    } else if (which == "product") {
        dot = export_dot(product(checked_bouquet(file.maps[0]), checked_bouquet(file.maps[1])).graph);
    } else {
        dot = export_dot(core_of_pair(file.maps[0].map, file.maps[1].map).core);
    }
    if (output == "-") {
        out << dot;
    } else {
        write_file(output, dot);
    }
    return exit_ok;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equalisers of marked free-monoid morphisms and free-group immersions", "pcpeq"};
    app.require_subcommand(1);

    std::string file;
    bool as_set = false;
    std::string trace;
    auto* solve_cmd = app.add_subcommand("solve", "Compute a basis of the equaliser");
    solve_cmd->add_option("file", file, "Instance file")->required();
    solve_cmd->add_flag("--set", as_set, "Intersect the equalisers of all maps in the file");
    solve_cmd->add_option("--trace", trace, "Directory for per-step instance and core files");

    auto* check_cmd = app.add_subcommand("check", "Report markedness / immersion of every map");
    check_cmd->add_option("file", file, "Instance file")->required();

    std::size_t steps = 1;
    auto* reduce_cmd = app.add_subcommand("reduce", "Apply reduction steps and print the result");
    reduce_cmd->add_option("file", file, "Instance file")->required();
    reduce_cmd->add_option("--steps", steps, "Number of reductions")->capture_default_str();

    std::size_t radius = 0;
    auto* oracle_cmd = app.add_subcommand("oracle", "Check the solver against brute force");
    oracle_cmd->add_option("file", file, "Instance file")->required();
    oracle_cmd->add_option("--radius", radius, "Maximum word length")->required();

    std::string kind;
    density::Params params;
    bool no_header = false;
    auto* density_cmd = app.add_subcommand("density", "Density of marked maps or immersions");
    density_cmd->add_option("--kind", kind, "marked-monoid or immersion-group")
        ->required()
        ->check(CLI::IsMember({"marked-monoid", "immersion-group"}));
    density_cmd->add_option("-k", params.k, "Domain size")->required();
    density_cmd->add_option("-m", params.m, "Codomain size")->required();
    density_cmd->add_option("-n", params.n, "Maximum image length")->required();
    density_cmd->add_option("--samples", params.samples, "Monte Carlo samples, 0 for exact")
        ->capture_default_str();
    density_cmd->add_option("--seed", params.seed, "Random seed")->capture_default_str();
    density_cmd->add_flag("--no-header", no_header, "Omit the CSV header line");

    std::string graph;
    std::string output;
    auto* dot_cmd = app.add_subcommand("export-dot", "Write a Stallings graph in DOT format");
    dot_cmd->add_option("file", file, "Instance file")->required();
    dot_cmd->add_option("--graph", graph, "g, h, product or core")
        ->required()
        ->check(CLI::IsMember({"g", "h", "product", "core"}));
    dot_cmd->add_option("-o", output, "Output path, - for stdout")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*solve_cmd) {
            return cmd_solve(file, as_set, trace, out);
        }
        if (*check_cmd) {
            return cmd_check(file, out);
        }
        if (*reduce_cmd) {
            return cmd_reduce(file, steps, out);
        }
        if (*oracle_cmd) {
            return cmd_oracle(file, radius, out);
        }
        if (*density_cmd) {
            return cmd_density(kind, params, !no_header, out);
        }
        return cmd_export_dot(file, graph, output, out);
    } catch (const UsageError& e) {
        err << "pcpeq: " << e.what() << '\n';
        return exit_usage;
    } catch (const PreconditionError& e) {
        err << "pcpeq: precondition failed: " << e.what() << '\n';
        return exit_precondition;
    } catch (const ModeError& e) {
        err << "pcpeq: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "pcpeq: internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

} // namespace pcpeq::cli
