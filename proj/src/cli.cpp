#include "hexdual/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hexdual/diatonic.hpp"
#include "hexdual/hexatonic.hpp"
#include "hexdual/smoothness.hpp"
#include "hexdual/verify.hpp"

namespace hexdual {

namespace {

int cmd_verify(const std::string& suite, const std::string& json_path, std::ostream& out,
               std::ostream& err) {
  VerificationReport report;
  try {
    report = run_suite(suite);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  }
  print_report(report, out);
  if (!json_path.empty()) {
    std::ofstream file(json_path);
    if (!file) {
      err << "cannot write " << json_path << "\n";
      return 2;
    }
    file << to_json_string(report) << "\n";
  }
  return report.pass() ? 0 : 1;
}

std::string lengths_string(const std::vector<int>& lengths) {
  std::ostringstream os;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i > 0) os << ' ';
    os << lengths[i];
  }
  return os.str();
}

int cmd_enumerate_msc(std::optional<int> cardinality, const std::string& csv_path,
                      const std::string& json_path, std::ostream& out, std::ostream& err) {
  std::vector<SetClassCycles> rows;
  for (const SetClassCycles& row : classify_all()) {
    if (cardinality && row.set_class.cardinality() != *cardinality) continue;
    rows.push_back(row);
  }

  out << std::left << std::setw(26) << "prime form" << std::setw(13) << "cardinality"
      << std::setw(11) << "exemplars" << std::setw(8) << "cycles"
      << "lengths\n";
  for (const SetClassCycles& row : rows) {
    out << std::left << std::setw(26) << row.set_class.prime.to_string() << std::setw(13)
        << row.set_class.cardinality() << std::setw(11) << row.exemplar_count << std::setw(8)
        << row.cycle_count() << lengths_string(row.cycle_lengths) << "\n";
  }
  out << rows.size() << " cycle-supporting set class" << (rows.size() == 1 ? "" : "es") << "\n";

  if (!csv_path.empty()) {
    std::ofstream file(csv_path);
    if (!file) {
      err << "cannot write " << csv_path << "\n";
      return 2;
    }
    file << "prime_form,cardinality,exemplars,cycles,cycle_lengths\n";
    for (const SetClassCycles& row : rows) {
      file << '"' << row.set_class.prime.to_string() << "\"," << row.set_class.cardinality()
           << ',' << row.exemplar_count << ',' << row.cycle_count() << ",\""
           << lengths_string(row.cycle_lengths) << "\"\n";
    }
  }

  if (!json_path.empty()) {
    nlohmann::json j = nlohmann::json::array();
    for (const SetClassCycles& row : rows) {
      nlohmann::json lengths = nlohmann::json::array();
      for (int len : row.cycle_lengths) lengths.push_back(len);
      nlohmann::json members = nlohmann::json::array();
      for (PitchClass pc : row.set_class.prime.members()) members.push_back(pc.value());
      j.push_back({{"prime_form", members},
                   {"cardinality", row.set_class.cardinality()},
                   {"exemplars", row.exemplar_count},
                   {"cycles", row.cycle_count()},
                   {"cycle_lengths", lengths}});
    }
    std::ofstream file(json_path);
    if (!file) {
      err << "cannot write " << json_path << "\n";
      return 2;
    }
    file << j.dump(2) << "\n";
  }

  return 0;
}

int cmd_orbit(const std::string& group_name, const std::string& seed_name, std::ostream& out,
              std::ostream& err) {
  const auto seed = Triad::parse(seed_name);
  if (!seed) {
    err << "cannot parse triad name: " << seed_name << "\n";
    return 2;
  }
  const std::size_t seed_index = triad_index(*seed);

  if (group_name == "PL") {
    // The PL-orbit is the hexatonic cycle through the seed; list it in cycle
    // order with the shortest word reaching each chord.
    const PermGroup& pl = pl_group();
    Triad chord = *seed;
    for (int k = 0; k < 6; ++k) {
      const auto element = pl.element_mapping(seed_index, triad_index(chord));
      out << std::left << std::setw(4) << chord.name()
          << (element->word().empty() ? "(identity)" : element->word()) << "\n";
      chord = (k % 2 == 0) == seed->is_major() ? parallel(chord) : leading_tone_exchange(chord);
    }
    return 0;
  }

  const PermGroup* group = nullptr;
  PermGroup h = hex_ti_stabilizer();
  if (group_name == "TI") {
    group = &ti_group_on_triads();
  } else if (group_name == "PLR") {
    group = &plr_group();
  } else if (group_name == "H") {
    group = &h;
  } else {
    err << "unknown group: " << group_name << " (expected PL, TI, PLR or H)\n";
    return 2;
  }

  // One line per orbit chord, labelled by the shortest element reaching it.
  std::vector<std::pair<std::string, std::string>> lines;
  for (std::size_t target : orbit(*group, seed_index)) {
    const auto element = group->element_mapping(seed_index, target);
    lines.emplace_back(triad_carrier()->label(target),
                       element->word().empty() ? "(identity)" : element->word());
  }
  std::sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.second < b.second;
  });
  for (const auto& [chord, word] : lines) {
    out << std::left << std::setw(4) << chord << word << "\n";
  }
  return 0;
}

int cmd_dot(const std::string& network, std::ostream& out, std::ostream& err) {
  if (network == "grail") {
    out << grail_dot();
    return 0;
  }
  const std::string prefix = "hexcycle";
  if (network.rfind(prefix, 0) == 0 && network.size() > prefix.size()) {
    const std::string digits = network.substr(prefix.size());
    if (digits.find_first_not_of("0123456789") == std::string::npos) {
      const int index = std::stoi(digits);
      if (index >= 0 && index <= 3) {
        out << hex_cycle_dot(index);
        return 0;
      }
      err << "hexatonic cycle index out of range: " << digits << " (expected 0..3)\n";
      return 2;
    }
  }
  err << "unknown network: " << network << " (expected grail or hexcycle0..hexcycle3)\n";
  return 2;
}

int cmd_table_sub_dual(std::ostream& out) {
  out << std::left << std::setw(5) << "k" << std::setw(28) << "k.Hex"
      << "k.H.k^-1\n";
  for (const SubDualRow& row : sub_dual_table()) {
    std::ostringstream hex, ops;
    for (std::size_t i = 0; i < row.hex_triads.size(); ++i) {
      hex << (i ? "," : "") << row.hex_triads[i];
      ops << (i ? "," : "") << row.dual_ops[i];
    }
    out << std::left << std::setw(5) << row.k << std::setw(28) << ("{" + hex.str() + "}")
        << "{" << ops.str() << "}"
        << (row.dual.dual() ? "  [dual pair verified]" : "  [NOT DUAL]") << "\n";
  }
  return 0;
}

int cmd_diatonic(bool chains, bool douthett, const std::string& json_path, std::ostream& out,
                 std::ostream& err) {
  nlohmann::json j;

  if (douthett) {
    const DouthettReport report = douthett_sequence_check();
    out << "chord:  ";
    for (const DouthettRow& row : report.rows) out << std::left << std::setw(9) << row.chord.name();
    out << "\nscale:  ";
    for (const DouthettRow& row : report.rows) out << std::left << std::setw(9) << row.scale.name();
    out << "\n"
        << (report.ok() ? "each scale contains its chord; roots descend by a whole step"
                        : "SEQUENCE CHECK FAILED")
        << "\n";
    for (const DouthettRow& row : report.rows) {
      j["douthett"].push_back({{"chord", row.chord.name()},
                               {"scale", row.scale.name()},
                               {"contained", row.contained}});
    }
  }

  if (chains) {
    const HexCycle cycle = hex_cycle(0);

    out << "scales containing each chord of cycle 0 (P pairs marked *):\n";
    const auto chords = cycle.distinct_chords();
    out << "  ";
    for (const Triad& t : chords) out << std::left << std::setw(9) << ("[" + t.name() + "]");
    out << "\n";
    for (std::size_t line = 0; line < 3; ++line) {
      out << "  ";
      for (std::size_t i = 0; i < chords.size(); ++i) {
        const auto scales = scales_containing(chords[i]);
        const Triad& partner = chords[(i + (chords[i].is_major() ? 1 : chords.size() - 1)) %
                                      chords.size()];
        // Mark the single scale pair carrying the P move between parallel chords.
        bool starred = false;
        for (const DiatonicSet& other : scales_containing(partner)) {
          if (is_ms_scale_transition(scales[line], other)) starred = true;
        }
        out << std::left << std::setw(9)
            << (scales[line].root_name() + (starred ? "*" : ""));
      }
      out << "\n";
    }

    out << "smooth 4-scale chains covering four consecutive chords:\n";
    for (const CoveringChain& chain : covering_chains(cycle, 4)) {
      std::ostringstream assigned;
      for (std::size_t i = 0; i < chain.assigned.size(); ++i) {
        assigned << (i ? "," : "") << chain.assigned[i].name();
      }
      out << "  " << std::left << std::setw(14) << chain.chain_string() << "covers "
          << assigned.str() << "\n";
      j["chains"].push_back({{"scales", chain.chain_string()}, {"chords", assigned.str()}});
    }
  }

  if (!json_path.empty()) {
    std::ofstream file(json_path);
    if (!file) {
      err << "cannot write " << json_path << "\n";
      return 2;
    }
    file << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mechanical checks of neo-Riemannian hexatonic duality and "
               "maximally smooth cycle enumeration"};
  app.require_subcommand(1);

  std::string suite;
  std::string verify_json;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "all, duality, plr, orbit-stabilizer, table2 or diatonic")
      ->required();
  verify->add_option("--json", verify_json, "also write the report as JSON to this path");

  int cardinality = -1;
  std::string csv_path, msc_json;
  CLI::App* msc = app.add_subcommand("enumerate-msc",
                                     "enumerate set classes supporting maximally smooth cycles");
  msc->add_option("--cardinality", cardinality, "only classes of this cardinality");
  msc->add_option("--csv", csv_path, "write the table as CSV to this path");
  msc->add_option("--json", msc_json, "write the table as JSON to this path");

  std::string group_name, seed_name;
  CLI::App* orbit_cmd = app.add_subcommand("orbit", "list a group orbit of a triad");
  orbit_cmd->add_option("--group", group_name, "PL, TI, PLR or H")->required();
  orbit_cmd->add_option("--seed", seed_name, "triad name, e.g. Eb or f#")->required();

  std::string network;
  CLI::App* dot_cmd = app.add_subcommand("dot", "emit a transformation network in DOT syntax");
  dot_cmd->add_option("--network", network, "grail or hexcycle0..hexcycle3")->required();

  bool sub_dual = false;
  CLI::App* table_cmd = app.add_subcommand("table", "print derived tables");
  table_cmd->add_flag("--sub-dual", sub_dual, "the four hexatonic systems and their dual groups");

  bool chains = false, douthett = false;
  std::string diatonic_json;
  CLI::App* diatonic_cmd =
      app.add_subcommand("diatonic", "diatonic containment of the hexatonic cycles");
  diatonic_cmd->add_flag("--chains", chains, "scale table and covering chains for cycle 0");
  diatonic_cmd->add_flag("--douthett", douthett, "the descending whole-step scale sequence");
  diatonic_cmd->add_option("--json", diatonic_json, "write the tables as JSON to this path");

  std::vector<const char*> argv;
  argv.push_back("hexdual");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(suite, verify_json, out, err);
    if (msc->parsed()) {
      std::optional<int> filter;
      if (cardinality >= 0) filter = cardinality;
      return cmd_enumerate_msc(filter, csv_path, msc_json, out, err);
    }
    if (orbit_cmd->parsed()) return cmd_orbit(group_name, seed_name, out, err);
    if (dot_cmd->parsed()) return cmd_dot(network, out, err);
    if (table_cmd->parsed()) {
      if (!sub_dual) {
        err << "table: nothing requested (try --sub-dual)\n";
        return 2;
      }
      return cmd_table_sub_dual(out);
    }
    if (diatonic_cmd->parsed()) {
      if (!chains && !douthett) {
        err << "diatonic: nothing requested (try --chains or --douthett)\n";
        return 2;
      }
      return cmd_diatonic(chains, douthett, diatonic_json, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace hexdual
