// Command-line front end: classify a point, scan a region for critical
// points, run the example-catalog regression, and emit figure data.
//
// Exit codes: 0 definitive verdict / success, 2 bad input or I/O failure,
// 3 no verdict (Unknown).
#include <geosaddle/geosaddle.hpp>
#include <geosaddle/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace geosaddle;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitUnknown = 3;

std::vector<double> parse_number_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(std::stod(item));
    return out;
}

struct CommonOpts {
    std::string expr_text;
    std::string at = "0,0";
    std::string region_text;
    int direction_count = 64;
    std::string parabola_coeffs = "0.25,0.5,1,1.5,2,3";
    double delta = 0.5;
    double gradient_tol = 1e-9;
    double transversal_tol = 1e-9;
    bool json_output = false;
    std::string out_path;
};

SearchConfig to_config(const CommonOpts& opts)
{
    SearchConfig cfg;
    cfg.direction_count = opts.direction_count;
    cfg.parabola_coeffs = parse_number_list(opts.parabola_coeffs);
    cfg.delta = opts.delta;
    cfg.gradient_tol = opts.gradient_tol;
    cfg.transversal_tol = opts.transversal_tol;
    return cfg;
}

Vec2 parse_point(const std::string& text)
{
    auto nums = parse_number_list(text);
    if (nums.size() != 2)
        throw std::invalid_argument("--at expects x,y");
    return {nums[0], nums[1]};
}

Region parse_region(const std::string& text)
{
    auto nums = parse_number_list(text);
    if (nums.size() != 4)
        throw std::invalid_argument("--region expects xmin,xmax,ymin,ymax");
    Region r{nums[0], nums[1], nums[2], nums[3]};
    if (!(r.xmin < r.xmax && r.ymin < r.ymax))
        throw std::invalid_argument("--region bounds must be increasing");
    return r;
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw std::runtime_error("cannot open " + out_path);
    out << text;
}

int cmd_classify(const CommonOpts& opts)
{
    Expr f = parse(opts.expr_text);
    ExprField field(f);
    Vec2 p = parse_point(opts.at);
    SearchConfig cfg = to_config(opts);
    Classification result = classify_point(field, p, cfg);

    if (opts.json_output) {
        emit(classification_to_json(field, p, result).dump(2) + "\n",
             opts.out_path);
    } else {
        std::ostringstream text;
        text << "f = " << to_string(f) << " at (" << p.x << ", " << p.y
             << ")\n";
        text << "verdict: " << to_string(result.verdict) << "\n";
        if (result.discriminant_value)
            text << "discriminant: " << *result.discriminant_value << "\n";
        if (result.gradient)
            text << "gradient: (" << result.gradient->x << ", "
                 << result.gradient->y << ")\n";
        if (result.certificate) {
            const SaddleCertificate& c = *result.certificate;
            text << "certificate: grade=" << to_string(c.grade)
                 << " strict=" << (c.strict ? "yes" : "no")
                 << " cross=" << c.cross << "\n";
            auto describe = [&](const char* label, const ParametricPath& path,
                                const ExtremumReport& rep) {
                text << "  " << label << ": " << path.describe() << " u=("
                     << path.u().x << ", " << path.u().y << ")";
                if (path.kind() == PathKind::Parabola)
                    text << " v=(" << path.v().x << ", " << path.v().y << ")";
                text << " delta=" << path.halfwidth() << " ["
                     << to_string(rep.kind) << "]\n";
            };
            describe("max path", c.path_max, c.report_max);
            describe("min path", c.path_min, c.report_min);
            text << "verified: "
                 << (verify_certificate(field, c, cfg) ? "yes" : "NO") << "\n";
        }
        if (result.refutation_grade)
            text << "refutation: sign-semidefinite neighborhood ("
                 << to_string(*result.refutation_grade) << ")\n";
        if (result.verdict == Verdict::Unknown)
            text << "search: " << result.search.lines_tried << " lines, "
                 << result.search.parabolas_tried << " parabolas, "
                 << result.search.refined_directions
                 << " refined directions\n";
        emit(text.str(), opts.out_path);
    }
    return result.verdict == Verdict::Unknown ? kExitUnknown : kExitOk;
}

int cmd_critical_points(const CommonOpts& opts, int grid_n, double newton_tol)
{
    Expr f = parse(opts.expr_text);
    ExprField field(f);
    Region region = opts.region_text.empty() ? Region{-2, 2, -2, 2}
                                             : parse_region(opts.region_text);
    SearchConfig cfg = to_config(opts);
    auto points = find_critical_points(field, region, grid_n, newton_tol);

    if (opts.json_output) {
        json arr = json::array();
        for (const CriticalPoint& cp : points) {
            Classification r = classify_point(field, cp.location, cfg);
            json entry;
            entry["location"] = {cp.location.x, cp.location.y};
            entry["gradient_norm"] = cp.gradient_norm;
            entry["discriminant"] = cp.discriminant;
            entry["hessian"] = {cp.hessian.a, cp.hessian.b, cp.hessian.c};
            entry["verdict"] = to_string(r.verdict);
            arr.push_back(entry);
        }
        emit(arr.dump(2) + "\n", opts.out_path);
    } else {
        std::ostringstream text;
        text << points.size() << " critical point(s) of " << to_string(f)
             << " in [" << region.xmin << ", " << region.xmax << "] x ["
             << region.ymin << ", " << region.ymax << "]\n";
        for (const CriticalPoint& cp : points) {
            Classification r = classify_point(field, cp.location, cfg);
            text << "  (" << cp.location.x << ", " << cp.location.y
                 << ")  discriminant=" << cp.discriminant << "  "
                 << to_string(r.verdict) << "\n";
        }
        emit(text.str(), opts.out_path);
    }
    return kExitOk;
}

int cmd_oracle_suite(const CommonOpts& opts)
{
    SearchConfig cfg = to_config(opts);
    int fails = 0, passes = 0, tolerated = 0;
    json rows = json::array();
    std::ostringstream table;
    for (const CatalogEntry& entry : catalog()) {
        Classification result = classify_point(*entry.field, entry.point, cfg);
        MatchResult match = match_verdict(entry, result);
        if (match == MatchResult::Fail)
            ++fails;
        else if (match == MatchResult::Pass)
            ++passes;
        else
            ++tolerated;
        if (opts.json_output) {
            json row = catalog_entry_to_json(entry);
            row["verdict"] = to_string(result.verdict);
            row["result"] = to_string(match);
            if (result.certificate)
                row["grade"] = to_string(result.certificate->grade);
            rows.push_back(row);
        } else {
            table << to_string(match) << "\t" << entry.name << "\texpected="
                  << to_string(entry.expected)
                  << "\tgot=" << to_string(result.verdict);
            if (result.certificate)
                table << " (" << to_string(result.certificate->grade) << ")";
            table << "\n";
        }
    }
    if (opts.json_output) {
        emit(rows.dump(2) + "\n", opts.out_path);
    } else {
        table << passes << " pass, " << tolerated << " unknown-allowed, "
              << fails << " fail\n";
        emit(table.str(), opts.out_path);
    }
    return fails == 0 ? kExitOk : 1;
}

int cmd_plot(const CommonOpts& opts, int nx, int ny,
             const std::string& mesh_path, const std::string& csv_path,
             const std::string& svg_path, const std::string& levels_text)
{
    Expr f = parse(opts.expr_text);
    ExprField field(f);
    Region region = opts.region_text.empty() ? Region{-1, 1, -1, 1}
                                             : parse_region(opts.region_text);
    Grid grid = sample_grid(field, region, nx, ny);

    if (!csv_path.empty())
        emit(grid_csv(grid), csv_path);
    if (!mesh_path.empty())
        emit(surface_mesh(grid), mesh_path);
    if (!svg_path.empty() || !levels_text.empty()) {
        std::vector<double> levels = levels_text.empty()
                                         ? std::vector<double>{0.0}
                                         : parse_number_list(levels_text);
        auto lines = level_curves(grid, levels);
        if (!svg_path.empty())
            emit(polylines_svg(lines, region), svg_path);
        else
            emit(polylines_csv(lines), opts.out_path);
    }
    if (csv_path.empty() && mesh_path.empty() && svg_path.empty()
        && levels_text.empty())
        emit(grid_csv(grid), opts.out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Critical point classification and geometric saddle "
                 "certification for functions of two variables"};
    app.require_subcommand(1);

    CommonOpts opts;
    int grid_n = 9;
    double newton_tol = 1e-9;
    int nx = 65, ny = 65;
    std::string mesh_path, csv_path, svg_path, levels_text;

    auto add_common = [&](CLI::App* cmd, bool needs_expr = true) {
        auto* f = cmd->add_option("--f", opts.expr_text, "expression in x, y");
        if (needs_expr)
            f->required();
        cmd->add_option("--K", opts.direction_count, "direction count")
            ->check(CLI::Range(4, 4096));
        cmd->add_option("--parabola-coeffs", opts.parabola_coeffs,
                        "comma-separated bending coefficients");
        cmd->add_option("--delta", opts.delta, "path halfwidth")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--gradient-tol", opts.gradient_tol,
                        "critical point tolerance");
        cmd->add_option("--transversal-tol", opts.transversal_tol,
                        "transversality tolerance");
        cmd->add_flag("--json", opts.json_output, "emit JSON");
        cmd->add_option("--out", opts.out_path, "write output to a file");
    };

    CLI::App* classify = app.add_subcommand(
        "classify", "classify one point and certify saddles");
    add_common(classify);
    classify->add_option("--at", opts.at, "point x,y (default 0,0)");

    CLI::App* crit = app.add_subcommand(
        "critical-points", "locate and classify critical points in a box");
    add_common(crit);
    crit->add_option("--region", opts.region_text, "xmin,xmax,ymin,ymax");
    crit->add_option("--grid", grid_n, "Newton seed grid size")
        ->check(CLI::Range(2, 257));
    crit->add_option("--newton-tol", newton_tol, "gradient norm target");

    CLI::App* oracle = app.add_subcommand(
        "oracle-suite", "run the example catalog against the engine");
    add_common(oracle, false);

    CLI::App* plot =
        app.add_subcommand("plot", "sample a grid; write CSV/mesh/contours");
    add_common(plot);
    plot->add_option("--region", opts.region_text, "xmin,xmax,ymin,ymax");
    plot->add_option("--nx", nx, "samples in x")->check(CLI::Range(2, 4097));
    plot->add_option("--ny", ny, "samples in y")->check(CLI::Range(2, 4097));
    plot->add_option("--mesh", mesh_path, "write surface mesh here");
    plot->add_option("--csv", csv_path, "write grid CSV here");
    plot->add_option("--svg", svg_path, "write contour SVG here");
    plot->add_option("--levels", levels_text, "contour levels");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed())
            return cmd_classify(opts);
        if (crit->parsed())
            return cmd_critical_points(opts, grid_n, newton_tol);
        if (oracle->parsed())
            return cmd_oracle_suite(opts);
        if (plot->parsed())
            return cmd_plot(opts, nx, ny, mesh_path, csv_path, svg_path,
                            levels_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
