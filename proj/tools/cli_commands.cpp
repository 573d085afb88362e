#include "cli_commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "seqinv/complexity.hpp"
#include "seqinv/experiments.hpp"
#include "seqinv/golomb.hpp"
#include "seqinv/inversion.hpp"
#include "seqinv/localinv.hpp"

namespace seqinv::cli {

using nlohmann::json;

VectorSequence read_sequence_text(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string bits;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) bits += c;
    }
    if (!bits.empty()) lines.push_back(bits);
  }
  if (lines.empty()) throw std::invalid_argument("sequence input has no lines");
  return VectorSequence::from_strings(lines);
}

VectorSequence read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open sequence file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return read_sequence_text(buf.str());
}

namespace {

struct SeqInput {
  std::string file;
  std::string bits;  // inline alternative: coordinates separated by ','

  VectorSequence load() const {
    if (file.empty() == bits.empty()) throw std::invalid_argument("give exactly one of --seq and --bits");
    if (!file.empty()) return read_sequence_file(file);
    std::string text = bits;
    std::replace(text.begin(), text.end(), ',', '\n');
    return read_sequence_text(text);
  }
  json echo() const { return file.empty() ? json{{"bits", bits}} : json{{"seq", file}}; }
};

void add_seq_options(CLI::App* cmd, SeqInput& in) {
  cmd->add_option("--seq", in.file, "Sequence file: one coordinate per line of 0/1, leftmost = s_0");
  cmd->add_option("--bits", in.bits, "Inline sequence; coordinates separated by ','");
}

json bits_json(const gf2::BitVec& v) { return v.to_string(); }

json family_json(const CountBounds& cb) {
  return json{{"lower", cb.lower}, {"upper", cb.upper}, {"exact", cb.exact}, {"saturated", cb.saturated}};
}

std::vector<std::string> inverse_classes(const InversionSolution& sol) {
  std::set<std::string> seen;
  for (const auto& member : enumerate_family(sol.family, 4096).members) {
    if (member.inverse) seen.insert(member.inverse->to_string());
  }
  return {seen.begin(), seen.end()};
}

void put_solution(json& j, const InversionSolution& sol) {
  const auto& sys = *sol.family.system;
  j["inverse"] = bits_json(sol.inverse);
  j["polynomial"] = sol.polynomial_text();
  j["coefficients"] = bits_json(sol.coeffs);
  j["rank"] = sol.counts.rank;
  j["n_C"] = sys.cols();
  j["family_size"] = family_json(sol.counts);
  j["common_inverse"] = sol.common_inverse;
  j["inverse_classes"] = inverse_classes(sol);
}

json pci_json(const PciReport& rep) {
  json j;
  j["pci_status"] = to_string(rep.status);
  j["d"] = rep.d;
  j["m"] = rep.m ? json(*rep.m) : json(nullptr);
  j["feasible_range"] = rep.feasible_range ? json{rep.feasible_range->first, rep.feasible_range->second} : json(nullptr);
  json profile = json::array();
  for (const auto& e : rep.rank_profile) profile.push_back({{"m", e.m}, {"rank", e.rank}, {"exact", e.exact}});
  j["rank_profile"] = profile;
  j["max_rank"] = rep.max_rank;
  if (rep.solution) {
    put_solution(j, *rep.solution);
    j["n_C"] = rep.n_c;
  }
  return j;
}

json record_json(const TrialRecord& r) {
  json j;
  j["seed"] = r.seed;
  j["N"] = r.N;
  j["M"] = r.M;
  j["d"] = r.d;
  j["m"] = r.m ? json(*r.m) : json(nullptr);
  j["basis"] = r.basis;
  j["rank_partial"] = r.rank_partial;
  j["rank_full"] = r.rank_full;
  j["rank_captured"] = r.rank_captured;
  j["inverse_correct"] = r.inverse_correct;
  j["indeterminate"] = r.indeterminate;
  j["reason"] = r.reason;
  j["inverse"] = r.inverse ? json(*r.inverse) : json(nullptr);
  j["true_inverse"] = r.true_inverse ? json(*r.true_inverse) : json(nullptr);
  j["moc_partial"] = r.moc_partial;
  j["moc_full"] = r.moc_full;
  j["subset_count"] = r.subset_count;
  j["subset_exact"] = r.subset_exact;
  return j;
}

json proportion_json(const Proportion& p) {
  return json{{"value", p.value}, {"successes", p.successes}, {"total", p.total}, {"ci95", {p.lo, p.hi}}};
}

json report_json(const ConjectureReport& rep) {
  json j;
  j["trials"] = rep.trials;
  j["solved"] = rep.solved;
  j["indeterminate"] = rep.indeterminate;
  j["p0"] = proportion_json(rep.p0);
  j["p_inv"] = proportion_json(rep.p_inv);
  j["p_correct_given_captured"] = proportion_json(rep.p_correct_given_captured);
  j["captured_but_wrong"] = rep.captured_but_wrong;
  j["p_exp"] = rep.p_exp;
  j["p_inv_conjectured"] = rep.p_inv_conjectured;
  j["mean_subset_count"] = rep.mean_subset_count;
  j["subset_counts_exact"] = rep.subset_counts_exact;
  json moc = json::array();
  for (const auto& s : rep.moc_stats) {
    moc.push_back({{"N", s.N}, {"samples", s.samples}, {"mean", s.mean}, {"stddev", s.stddev}, {"benchmark_2log2N", s.benchmark}});
  }
  j["moc_stats"] = moc;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"seqinv: invert binary sequences through polynomial recurrence relations over GF(2).\n"
               "Bit strings are written with s_0 (coordinate bit 0) as the leftmost character."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "seqinv 1.0");

  SeqInput seq;
  unsigned m = 0, d = 1;
  bool allow_constant = false;
  std::string mset_text, map_spec, y_bits, config_path;
  std::size_t steps = 0;
  std::uint64_t limit = 1024;
  bool with_records = false;

  auto* invert = app.add_subcommand("invert", "Solve for an invertible associated polynomial at fixed order");
  add_seq_options(invert, seq);
  invert->add_option("--m", m, "Order m");
  invert->add_option("--d", d, "Degree bound d")->check(CLI::PositiveNumber);
  invert->add_flag("--allow-constant", allow_constant, "Allow a constant term in g");
  invert->add_option("--mset", mset_text, "Comma separated monomials (replaces --m/--d), e.g. \"x0*x1,x0*x2,x1*x2\"");

  auto* pci_cmd = app.add_subcommand("pci", "Polynomial complexity of inversion at degree d");
  add_seq_options(pci_cmd, seq);
  pci_cmd->add_option("--d", d, "Degree bound d")->required()->check(CLI::PositiveNumber);
  pci_cmd->add_flag("--allow-constant", allow_constant, "Allow a constant term in g");

  auto* lc_cmd = app.add_subcommand("lc", "Linear-complexity inverse (PCI at d = 1) with Berlekamp-Massey cross-check");
  add_seq_options(lc_cmd, seq);

  auto* moc_cmd = app.add_subcommand("moc", "Maximal order complexity");
  add_seq_options(moc_cmd, seq);

  auto* golomb_cmd = app.add_subcommand("golomb", "Non-singular FSR synthesis f = x0 + g");
  add_seq_options(golomb_cmd, seq);
  golomb_cmd->add_option("--m", m, "Order m")->required();
  golomb_cmd->add_option("--d", d, "Degree bound d of g")->required()->check(CLI::PositiveNumber);
  golomb_cmd->add_option("--limit", limit, "Maximum family members listed");

  auto* local_cmd = app.add_subcommand("localinv", "Local inversion of a black-box map at y");
  local_cmd->add_option("--map", map_spec, "fsr:m=<k>;g=<ANF> | perm:seed=<u64>;n=<k> | table:<path>")->required();
  local_cmd->add_option("--y", y_bits, "Target state, bit 0 leftmost")->required();
  local_cmd->add_option("--steps", steps, "Length of the iterate sequence y, F(y), ...")->required();
  local_cmd->add_option("--d", d, "Degree bound d")->check(CLI::PositiveNumber);
  local_cmd->add_flag("--allow-constant", allow_constant, "Allow a constant term in g");

  auto* conj_cmd = app.add_subcommand("conjecture", "Monte-Carlo harness for partial-sequence inversion");
  conj_cmd->add_option("--config", config_path, "key=value experiment config")->required();
  conj_cmd->add_flag("--records", with_records, "Include every trial record in the report");

  json report;
  report["schema_version"] = schema_version;
  auto fail = [&](const std::string& msg) {
    err << "seqinv: " << msg << "\n";
    report["status"] = "bad_input";
    report["error"] = msg;
    out << report.dump() << "\n";
    return exit_bad_input;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    if (!app.get_subcommands().empty()) report["command"] = app.get_subcommands().front()->get_name();
    return fail(e.what());
  }

  const std::string command = app.get_subcommands().front()->get_name();
  report["command"] = command;
  const auto start = std::chrono::steady_clock::now();
  int code = exit_ok;
  auto no_solution = [&](const std::string& status) {
    report["status"] = status;
    code = exit_no_solution;
  };

  try {
    json inputs;
    if (command == "invert") {
      const auto vs = seq.load();
      inputs = seq.echo();
      std::shared_ptr<const HankelSystem> sys;
      if (!mset_text.empty()) {
        inputs["mset"] = mset_text;
        sys = std::make_shared<const HankelSystem>(build_system_custom(vs, parse_monomial_set(mset_text)));
      } else {
        if (m < 1) throw std::invalid_argument("--m is required (or --mset)");
        if (d > m) throw std::invalid_argument("need d <= m");
        inputs["m"] = m;
        inputs["d"] = d;
        inputs["allow_constant"] = allow_constant;
        sys = std::make_shared<const HankelSystem>(build_system_vector(vs, m, d, allow_constant));
      }
      report["m"] = sys->m;
      report["d"] = sys->d ? json(sys->d) : json(nullptr);
      report["n_C"] = sys->cols();
      const auto status = inversion_status(*sys);
      report["inversion_status"] = to_string(status);
      if (auto sol = solve_invertible(sys)) {
        put_solution(report, *sol);
        report["status"] = "ok";
      } else {
        report["rank"] = gf2::rank(sys->matrix());
        report["inverse"] = nullptr;
        report["polynomial"] = nullptr;
        no_solution("no_solution");
      }
    } else if (command == "pci") {
      const auto vs = seq.load();
      inputs = seq.echo();
      inputs["d"] = d;
      inputs["allow_constant"] = allow_constant;
      const auto rep = pci(vs, d, allow_constant);
      report.update(pci_json(rep));
      if (rep.status == PciStatus::found) {
        report["status"] = "ok";
      } else {
        no_solution("no_solution");
      }
    } else if (command == "lc") {
      const auto vs = seq.load();
      inputs = seq.echo();
      if (vs.dimension() != 1) throw std::invalid_argument("lc takes a single coordinate sequence");
      const auto rep = pci(vs, 1, false);
      report.update(pci_json(rep));
      report["linear_complexity"] = berlekamp_massey(vs.coord(0));
      if (rep.status == PciStatus::found) {
        report["status"] = "ok";
      } else {
        no_solution("no_solution");
      }
    } else if (command == "moc") {
      const auto vs = seq.load();
      inputs = seq.echo();
      const auto r = moc(vs);
      report["moc"] = r.value;
      report["degenerate"] = r.degenerate;
      report["status"] = "ok";
    } else if (command == "golomb") {
      const auto vs = seq.load();
      inputs = seq.echo();
      inputs["m"] = m;
      inputs["d"] = d;
      if (m < 1 || d > m) throw std::invalid_argument("need 1 <= d <= m");
      const auto res = solve_golomb(vs, m, d, limit);
      report["m"] = m;
      report["d"] = d;
      report["rank"] = res.rank;
      report["kernel_dimension"] = res.kernel_dimension;
      report["truncated"] = res.truncated;
      json fam = json::array();
      for (const auto& s : res.family) {
        fam.push_back({{"g", anf_to_string(s.spec.g)}, {"spec", s.spec.to_string()}, {"inverse", bits_json(s.inverse)}});
      }
      report["family"] = fam;
      if (res.consistent) {
        report["inverse"] = bits_json(res.family.front().inverse);
        report["polynomial"] = anf_to_string(res.family.front().spec.feedback());
        report["status"] = "ok";
      } else {
        no_solution("no_solution");
      }
    } else if (command == "localinv") {
      inputs = json{{"map", map_spec}, {"y", y_bits}, {"steps", steps}, {"d", d}, {"allow_constant", allow_constant}};
      const auto f = parse_map_spec(map_spec);
      const auto y = gf2::BitVec::from_string(y_bits);
      if (y.size() != f.n) throw std::invalid_argument("--y has " + std::to_string(y.size()) + " bits, map needs " + std::to_string(f.n));
      const auto res = local_invert(f, y, steps, d, allow_constant);
      report.update(pci_json(res.pci_used));
      report["length"] = res.length;
      report["candidate"] = res.candidate ? json(res.candidate->to_string()) : json(nullptr);
      report["verified"] = res.verified;
      if (res.verified) {
        report["status"] = "ok";
      } else {
        no_solution(res.candidate ? "unverified" : "no_solution");
      }
    } else if (command == "conjecture") {
      inputs = json{{"config", config_path}};
      const auto cfg = load_experiment_config(config_path);
      inputs["generator"] = to_string(cfg.params.generator);
      inputs["N"] = cfg.params.N;
      inputs["M"] = cfg.params.M;
      inputs["d"] = cfg.params.d;
      inputs["trials"] = cfg.trials;
      inputs["seed"] = cfg.seed;
      const auto res = run_experiment(cfg);
      report["report"] = report_json(res.report);
      if (with_records) {
        json recs = json::array();
        for (const auto& r : res.records) recs.push_back(record_json(r));
        report["records"] = recs;
      }
      report["status"] = "ok";
    }
    report["inputs"] = inputs;
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  } catch (const std::out_of_range& e) {
    return fail(e.what());
  }

  report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << report.dump() << "\n";
  return code;
}

}  // namespace seqinv::cli
