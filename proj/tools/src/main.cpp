// oamtk: command-line frontend for the mode toolkit. Subcommands cover
// pair amplitudes, hologram conversion weights, fiber couplings, joint
// detection ratios, experiment comparison and reference-table export.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oam/detection.hpp"
#include "oam/fiber.hpp"
#include "oam/format.hpp"
#include "oam/hologram.hpp"
#include "oam/quadrature.hpp"
#include "oam/spdc.hpp"

namespace {

using nlohmann::ordered_json;

struct CommonOptions {
  std::string format = "csv";
  std::string out_path; // empty: stdout
  oam::QuadratureSpec quadrature{};
};

void add_common_options(CLI::App& app, CommonOptions& common) {
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", common.out_path,
                 "Write output to this file instead of stdout");
  app.add_option("--tol", common.quadrature.relative_tolerance,
                 "Quadrature relative tolerance")
      ->capture_default_str();
  app.add_option("--nodes", common.quadrature.base_node_count,
                 "Quadrature base node count")
      ->capture_default_str();
  app.add_option("--max-doublings", common.quadrature.max_doublings,
                 "Quadrature node doublings before giving up")
      ->capture_default_str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("cannot open output file: " + out_path);
  }
  file << text;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("cannot open output file: " + path.string());
  }
  file << text;
}

ordered_json quadrature_meta(const oam::QuadratureSpec& quad) {
  return {{"base_node_count", quad.base_node_count},
          {"relative_tolerance", quad.relative_tolerance},
          {"max_doublings", quad.max_doublings}};
}

std::string wrap_rows(ordered_json meta, const std::string& rows_json) {
  ordered_json out{{"meta", std::move(meta)},
                   {"rows", ordered_json::parse(rows_json)}};
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------- amplitudes

std::string render_amplitudes(const oam::AmplitudeTable& table,
                              const std::string& format) {
  if (format == "json") {
    ordered_json meta{{"command", "amplitudes"},
                      {"l0", table.pump.winding_l0},
                      {"l_max", table.l_max},
                      {"p_max", table.p_max}};
    return wrap_rows(std::move(meta), oam::to_json(table));
  }
  std::ostringstream out;
  oam::write_csv(table, out);
  return out.str();
}

struct AmplitudesArgs {
  CommonOptions common;
  int l0 = 0;
  int l_max = 2;
  int p_max = 2;
  std::string figures_dir;
};

void run_amplitudes(const AmplitudesArgs& args) {
  const oam::PumpSpec pump{args.l0, 0, 1.0};
  const oam::AmplitudeTable table =
      oam::build_state_table(pump, args.l_max, args.p_max);
  emit(render_amplitudes(table, args.common.format), args.common.out_path);

  if (args.figures_dir.empty()) return;
  const std::filesystem::path dir(args.figures_dir);
  std::filesystem::create_directories(dir);
  const std::string ext = args.common.format == "json" ? ".json" : ".csv";
  // Radial grid at zero winding: amplitudes over (p1, p2) up to 4.
  const oam::AmplitudeTable p_grid =
      oam::build_state_table(oam::PumpSpec{0, 0, 1.0}, 0, 4);
  write_file(dir / ("amplitudes_p_grid" + ext),
             render_amplitudes(p_grid, args.common.format));
  // Winding row at zero radial order: conjugate pairs l = 0..4.
  oam::AmplitudeTable winding_row;
  winding_row.pump = oam::PumpSpec{0, 0, 1.0};
  winding_row.l_max = 4;
  winding_row.p_max = 0;
  for (int l = 0; l <= 4; ++l) {
    winding_row.amplitudes[{l, 0, -l, 0}] =
        oam::amplitude_closed_form(l, 0, -l, 0, 0);
  }
  write_file(dir / ("amplitudes_winding_row" + ext),
             render_amplitudes(winding_row, args.common.format));
}

// ------------------------------------------------------------------ hologram

struct HologramArgs {
  CommonOptions common;
  int delta_l = 1;
  int p_in_max = 2;
  int p_out_max = 3;
};

void run_hologram(const HologramArgs& args) {
  const oam::ConversionTable table = oam::conversion_table(
      args.delta_l, args.p_in_max, args.p_out_max, args.common.quadrature);
  std::string text;
  if (args.common.format == "json") {
    ordered_json meta{{"command", "hologram"},
                      {"delta_l_abs", table.delta_l_abs},
                      {"p_in_max", table.p_in_max},
                      {"p_out_max", table.p_out_max},
                      {"quadrature", quadrature_meta(args.common.quadrature)}};
    text = wrap_rows(std::move(meta), oam::to_json(table));
  } else {
    std::ostringstream out;
    oam::write_csv(table, out);
    text = out.str();
  }
  emit(text, args.common.out_path);
}

// --------------------------------------------------------------------- fiber

struct FiberArgs {
  CommonOptions common;
  int p_max = 3;
  double mode_field_diameter = 2.0;
};

void run_fiber(const FiberArgs& args) {
  oam::FiberSpec fiber;
  fiber.mode_field_diameter = args.mode_field_diameter;
  const std::vector<double> q =
      oam::relative_q_vector(args.p_max, fiber, args.common.quadrature);
  std::string text;
  if (args.common.format == "json") {
    ordered_json rows = ordered_json::array();
    for (std::size_t p = 0; p < q.size(); ++p) {
      rows.push_back({{"p", p},
                      {"q", q[p]},
                      {"q_display", oam::format_fixed3(q[p])}});
    }
    ordered_json out{
        {"meta",
         ordered_json{{"command", "fiber"},
                      {"p_max", args.p_max},
                      {"mode_field_diameter", args.mode_field_diameter},
                      {"quadrature", quadrature_meta(args.common.quadrature)}}},
        {"rows", rows}};
    text = out.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "p,q,q_display\n";
    for (std::size_t p = 0; p < q.size(); ++p) {
      out << p << ',' << oam::format_full(q[p]) << ','
          << oam::format_fixed3(q[p]) << '\n';
    }
    text = out.str();
  }
  emit(text, args.common.out_path);
}

// --------------------------------------------------------------------- joint

struct JointArgs {
  CommonOptions common;
  int l_max = 2;
  int p_pair_max = 2;
  int p_out_cap = -1; // negative: keep the p_out <= p_in + 1 rule
  bool restrict_p_to_zero = false;
  bool ideal_elements = false;
};

oam::DetectionConfig detection_config(const JointArgs& args) {
  oam::DetectionConfig config;
  config.p_pair_max = args.p_pair_max;
  if (args.p_out_cap >= 0) config.p_out_cap = args.p_out_cap;
  config.restrict_p_to_zero = args.restrict_p_to_zero;
  config.ideal_elements = args.ideal_elements;
  config.quadrature = args.common.quadrature;
  return config;
}

void run_joint(const JointArgs& args) {
  if (args.l_max < 0) {
    throw std::invalid_argument("joint: --lmax must be >= 0");
  }
  std::vector<int> l_values;
  for (int l = 0; l <= args.l_max; ++l) l_values.push_back(l);
  const oam::DetectionReport report =
      oam::build_detection_report(l_values, detection_config(args));
  std::string text;
  if (args.common.format == "json") {
    ordered_json parsed = ordered_json::parse(oam::to_json(report));
    for (auto& row : parsed["rows"]) {
      row["ratio_display"] =
          oam::format_fixed3(row["ratio"].get<double>());
    }
    ordered_json out{{"meta", ordered_json{{"command", "joint"},
                                           {"l_max", args.l_max}}},
                     {"rows", parsed["rows"]},
                     {"config", parsed["config"]}};
    text = out.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "l,rate,ratio,ratio_display\n";
    for (std::size_t i = 0; i < report.l_values.size(); ++i) {
      const int l = report.l_values[i];
      out << l << ',' << oam::format_full(report.rate_per_l.at(l)) << ','
          << oam::format_full(report.ratios[i]) << ','
          << oam::format_fixed3(report.ratios[i]) << '\n';
    }
    text = out.str();
  }
  emit(text, args.common.out_path);
}

// ------------------------------------------------------------------- compare

struct CompareArgs {
  JointArgs joint; // reuses the model configuration flags
  std::string state;
};

std::vector<std::pair<int, double>> parse_state(const std::string& text) {
  std::vector<std::pair<int, double>> amplitudes;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument(
          "compare: --state entries must look like l:amplitude");
    }
    try {
      std::size_t used = 0;
      const int l = std::stoi(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("");
      const std::string amp_text = item.substr(colon + 1);
      const double amplitude = std::stod(amp_text, &used);
      if (used != amp_text.size()) throw std::invalid_argument("");
      amplitudes.emplace_back(l, amplitude);
    } catch (const std::exception&) {
      throw std::invalid_argument("compare: cannot parse --state entry '" +
                                  item + "'");
    }
  }
  if (amplitudes.empty()) {
    throw std::invalid_argument("compare: --state must list l:amplitude pairs");
  }
  return amplitudes;
}

void run_compare(const CompareArgs& args) {
  const std::vector<oam::ComparisonRow> rows = oam::compare_experiment(
      parse_state(args.state), detection_config(args.joint));
  std::string text;
  if (args.joint.common.format == "json") {
    ordered_json parsed = ordered_json::parse(oam::to_json(rows));
    for (auto& row : parsed) {
      row["experiment_display"] =
          oam::format_fixed3(row["experiment_ratio"].get<double>());
      row["model_display"] =
          oam::format_fixed3(row["model_ratio"].get<double>());
    }
    ordered_json out{{"meta", ordered_json{{"command", "compare"}}},
                     {"rows", parsed}};
    text = out.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "l,experiment_ratio,model_ratio,experiment_display,model_display\n";
    for (const oam::ComparisonRow& row : rows) {
      out << row.l << ',' << oam::format_full(row.experiment_ratio) << ','
          << oam::format_full(row.model_ratio) << ','
          << oam::format_fixed3(row.experiment_ratio) << ','
          << oam::format_fixed3(row.model_ratio) << '\n';
    }
    text = out.str();
  }
  emit(text, args.joint.common.out_path);
}

// -------------------------------------------------------------------- tables

struct TablesArgs {
  CommonOptions common;
  std::string out_dir = ".";
};

void run_tables(const TablesArgs& args) {
  const std::filesystem::path dir(args.out_dir);
  std::filesystem::create_directories(dir);
  const std::string ext = args.common.format == "json" ? ".json" : ".csv";

  const oam::AmplitudeTable state =
      oam::build_state_table(oam::PumpSpec{0, 0, 1.0}, 2, 2);
  const std::filesystem::path state_path = dir / ("state_table" + ext);
  write_file(state_path, render_amplitudes(state, args.common.format));
  std::cout << state_path.string() << '\n';

  for (int delta_l = 1; delta_l <= 2; ++delta_l) {
    const oam::ConversionTable table =
        oam::conversion_table(delta_l, 2, 3, args.common.quadrature);
    std::string text;
    if (args.common.format == "json") {
      ordered_json meta{{"command", "tables"},
                        {"delta_l_abs", table.delta_l_abs},
                        {"p_in_max", table.p_in_max},
                        {"p_out_max", table.p_out_max}};
      text = wrap_rows(std::move(meta), oam::to_json(table));
    } else {
      std::ostringstream out;
      oam::write_csv(table, out);
      text = out.str();
    }
    const std::filesystem::path path =
        dir / ("conversion_dl" + std::to_string(delta_l) + ext);
    write_file(path, text);
    std::cout << path.string() << '\n';
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Laguerre-Gaussian mode toolkit: down-conversion pair amplitudes, "
      "hologram conversion weights, fiber couplings and joint detection "
      "ratios"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI/TOML file");
  app.set_version_flag("--version", "oamtk 0.1.0");

  AmplitudesArgs amplitudes_args;
  CLI::App* amplitudes = app.add_subcommand(
      "amplitudes", "Relative amplitudes of down-converted mode pairs");
  add_common_options(*amplitudes, amplitudes_args.common);
  amplitudes->add_option("--l0", amplitudes_args.l0, "Pump winding number")
      ->capture_default_str();
  amplitudes->add_option("--lmax", amplitudes_args.l_max,
                         "Largest |l1| to tabulate")
      ->capture_default_str();
  amplitudes->add_option("--pmax", amplitudes_args.p_max,
                         "Largest radial order to tabulate")
      ->capture_default_str();
  amplitudes->add_option("--figures", amplitudes_args.figures_dir,
                         "Also write the radial-grid and winding-row "
                         "datasets into this directory");

  HologramArgs hologram_args;
  CLI::App* hologram = app.add_subcommand(
      "hologram", "Mode conversion weights of a charged hologram");
  add_common_options(*hologram, hologram_args.common);
  hologram->add_option("--delta-l", hologram_args.delta_l,
                       "Winding charge removed by the hologram")
      ->capture_default_str();
  hologram->add_option("--pin-max", hologram_args.p_in_max,
                       "Largest input radial order")
      ->capture_default_str();
  hologram->add_option("--pout-max", hologram_args.p_out_max,
                       "Largest output radial order")
      ->capture_default_str();

  FiberArgs fiber_args;
  CLI::App* fiber = app.add_subcommand(
      "fiber", "Relative single-mode fiber coupling efficiencies");
  add_common_options(*fiber, fiber_args.common);
  fiber->add_option("--pmax", fiber_args.p_max, "Largest radial order")
      ->capture_default_str();
  fiber->add_option("--mfd", fiber_args.mode_field_diameter,
                    "Fiber mode field diameter")
      ->capture_default_str();

  JointArgs joint_args;
  CLI::App* joint = app.add_subcommand(
      "joint", "Joint detection probability ratios per winding");
  add_common_options(*joint, joint_args.common);
  joint->add_option("--lmax", joint_args.l_max, "Largest analyzed winding")
      ->capture_default_str();
  joint->add_option("--p-pair-max", joint_args.p_pair_max,
                    "Truncation of the generated radial orders")
      ->capture_default_str();
  joint->add_option("--p-out-cap", joint_args.p_out_cap,
                    "Fixed cap on converted radial orders (default rule: "
                    "p_out <= p_in + 1)");
  joint->add_flag("--p-zero", joint_args.restrict_p_to_zero,
                  "Keep only the p1 = p2 = 0 generated pair");
  joint->add_flag("--ideal-elements", joint_args.ideal_elements,
                  "Assume perfect conversion and coupling");

  CompareArgs compare_args;
  CLI::App* compare = app.add_subcommand(
      "compare", "Compare measured state amplitudes with the model");
  add_common_options(*compare, compare_args.joint.common);
  compare
      ->add_option("--state", compare_args.state,
                   "Measured amplitudes as l:amp[,l:amp...], e.g. "
                   "\"0:0.65,1:0.60,-1:0.47\"")
      ->required();
  compare->add_option("--p-pair-max", compare_args.joint.p_pair_max,
                      "Truncation of the generated radial orders")
      ->capture_default_str();

  TablesArgs tables_args;
  CLI::App* tables = app.add_subcommand(
      "tables", "Write the three reference tables to a directory");
  add_common_options(*tables, tables_args.common);
  tables->add_option("--outdir", tables_args.out_dir,
                     "Directory for the table files")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (amplitudes->parsed()) run_amplitudes(amplitudes_args);
    if (hologram->parsed()) run_hologram(hologram_args);
    if (fiber->parsed()) run_fiber(fiber_args);
    if (joint->parsed()) run_joint(joint_args);
    if (compare->parsed()) run_compare(compare_args);
    if (tables->parsed()) run_tables(tables_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const oam::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
