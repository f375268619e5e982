#include "evenfactor/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "evenfactor/cubic.hpp"
#include "evenfactor/even_factor.hpp"
#include "evenfactor/graph_io.hpp"
#include "evenfactor/harness.hpp"
#include "evenfactor/identities.hpp"
#include "evenfactor/spectral.hpp"
#include "evenfactor/thresholds.hpp"

namespace evenfactor {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string graph6;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_option("--graph6", graph6, "graph in graph6 format");
    auto* b = cmd->add_option("--file", file, "file holding graph6 or an edge list");
    a->excludes(b);
  }

  Graph load(std::istream& in) const {
    if (!graph6.empty()) return parse_graph6(graph6);
    std::string text;
    if (!file.empty()) {
      std::ifstream f(file, std::ios::binary);
      if (!f) throw IoError("cannot open " + file);
      text.assign(std::istreambuf_iterator<char>(f), {});
    } else {
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_graph_text(text);
  }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
}

std::string format_graph(const Graph& g, const std::string& format) {
  return format == "edgelist" ? write_edge_list(g) : write_graph6(g) + "\n";
}

int sweep_exit(const SweepReport& r) {
  if (!r.passed()) return kExitFailure;
  return r.unknown.empty() ? kExitOk : kExitCap;
}

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Even-factor threshold laboratory"};
  app.name("evenfactor");
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);

  std::function<int()> action;
  const std::vector<std::string> formats{"graph6", "edgelist"};

  // gen
  auto* gen = app.add_subcommand("gen", "build a graph")->require_subcommand(1);
  std::size_t n = 0, delta = 0, s = 0;
  std::string format = "graph6";
  auto* gen_ext = gen->add_subcommand("extremal", "K_d v (K_{n-2d+1} u (d-1)K_1)");
  gen_ext->add_option("--n", n)->required();
  gen_ext->add_option("--delta", delta)->required();
  gen_ext->add_option("--format", format)->check(CLI::IsMember(formats));
  gen_ext->callback([&] { action = [&] { out << format_graph(extremal(n, delta), format); return 0; }; });

  std::vector<std::size_t> parts;
  auto* gen_fam = gen->add_subcommand("family", "K_s v (K_a u K_b u ...)");
  gen_fam->add_option("--s", s)->required();
  gen_fam->add_option("--parts", parts)->required()->delimiter(',');
  gen_fam->add_option("--format", format)->check(CLI::IsMember(formats));
  gen_fam->callback([&] {
    action = [&] {
      out << format_graph(build_family(FamilySpec{s, parts}), format);
      return 0;
    };
  });

  // check
  auto* check = app.add_subcommand("check", "decide a property of one graph")->require_subcommand(1);
  GraphSource src;
  SearchCaps caps;
  auto* check_ef = check->add_subcommand("even-factor", "exact even-factor search");
  src.attach(check_ef);
  check_ef->add_option("--max-dim", caps.max_dim, "cycle-space dimension cap");
  check_ef->add_option("--max-candidates", caps.max_candidates, "search node cap");
  check_ef->callback([&] {
    action = [&] {
      const Graph g = src.load(in);
      const EvenFactorResult r = has_even_factor(g, caps);
      out << "status " << to_string(r.status) << "\n";
      if (r.certificate) {
        out << "certificate";
        for (const Edge& e : *r.certificate) out << ' ' << e.u << '-' << e.v;
        out << "\n";
      }
      out << "search_cost " << r.search_cost << "\n";
      if (r.status == FactorStatus::unknown) throw CapExceeded("oracle caps reached before a decision");
      return 0;
    };
  });

  auto* check_cond = check->add_subcommand("condition", "o(G-S) < |S| for all |S| >= 2");
  src.attach(check_cond);
  check_cond->callback([&] {
    action = [&] {
      const ConditionReport r = check_yan_kano_condition(src.load(in));
      out << "holds " << (r.holds ? "true" : "false") << "\n";
      if (r.witness) {
        out << "witness";
        for (auto v = r.witness->find_first(); v != VertexSet::npos; v = r.witness->find_next(v))
          out << ' ' << v;
        out << "\nodd_components " << r.witness_odd_components << "\n";
      }
      return 0;
    };
  });

  // spectral
  auto* spec = app.add_subcommand("spectral", "spectral radius by power iteration");
  GraphSource spec_src;
  spec_src.attach(spec);
  PowerIterationOptions power;
  spec->add_option("--tol", power.tol)->check(CLI::PositiveNumber);
  spec->add_option("--max-iter", power.max_iter)->check(CLI::PositiveNumber);
  spec->callback([&] {
    action = [&] {
      const SpectralResult r = spectral_radius(spec_src.load(in), power);
      out << "rho " << fmt(r.rho) << "\nresidual " << fmt(r.residual) << "\niterations "
          << r.iterations << "\n";
      return 0;
    };
  });

  // threshold
  auto* thr = app.add_subcommand("threshold", "edge and spectral thresholds");
  bool want_edges = false, want_rho = false;
  thr->add_option("--n", n)->required();
  thr->add_option("--delta", delta)->required();
  thr->add_flag("--edges", want_edges);
  thr->add_flag("--rho", want_rho);
  thr->callback([&] {
    action = [&] {
      if (!want_edges && !want_rho) want_edges = want_rho = true;
      const auto sn = static_cast<std::int64_t>(n), sd = static_cast<std::int64_t>(delta);
      if (want_edges) out << edge_threshold(sn, sd) << "\n";
      if (want_rho) out << fmt(spectral_threshold(sn, sd)) << "\n";
      return 0;
    };
  });

  // verdict
  auto* ver = app.add_subcommand("verdict", "what the size and spectral conditions imply");
  GraphSource ver_src;
  ver_src.attach(ver);
  std::string which = "both";
  std::optional<std::size_t> delta_override;
  ver->add_option("--which", which)->check(CLI::IsMember({"edges", "spectral", "both"}));
  ver->add_option("--delta", delta_override, "minimum-degree parameter instead of delta(G)");
  ver->callback([&] {
    action = [&] {
      const VerdictMode mode = which == "edges"      ? VerdictMode::edges
                               : which == "spectral" ? VerdictMode::spectral
                                                     : VerdictMode::both;
      out << to_json(verdict(ver_src.load(in), mode, delta_override)).dump() << "\n";
      return 0;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "certification campaigns")->require_subcommand(1);
  std::int64_t delta_max = 8, n_extra = 20;
  auto* ver_id = verify->add_subcommand("identities", "identity and inequality grid");
  ver_id->add_option("--delta-max", delta_max)->check(CLI::Range(2, 40));
  ver_id->add_option("--n-extra", n_extra)->check(CLI::Range(0, 400));
  ver_id->callback([&] {
    action = [&] {
      bool ok = true;
      for (const IdentityCheck& c : run_identity_grid(delta_max, n_extra)) {
        out << to_json(c).dump() << "\n";
        ok = ok && c.pass;
      }
      return ok ? 0 : 1;
    };
  });

  std::size_t max_n = 14, max_s = 4;
  std::vector<std::size_t> ps{1, 2};
  std::string out_path;
  bool timings = false;
  auto* ver_lem = verify->add_subcommand("lemmas", "merge monotonicity sweep");
  ver_lem->add_option("--max-n", max_n)->check(CLI::Range(1, 16));
  ver_lem->add_option("--max-s", max_s);
  ver_lem->add_option("--p", ps)->delimiter(',');
  ver_lem->add_option("--out", out_path);
  ver_lem->add_flag("--timings", timings);
  ver_lem->callback([&] {
    action = [&] {
      const SweepReport r = lemma_merge_sweep(max_n, max_s, ps, {jobs, timings, {}});
      emit(to_csv(r), out_path, out);
      if (!out_path.empty()) out << to_json(r).dump() << "\n";
      return sweep_exit(r);
    };
  });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "randomized campaigns")->require_subcommand(1);
  std::vector<std::size_t> ns{8, 10};
  std::size_t samples = 500;
  std::uint64_t seed = 42;
  std::string variant = "edges";
  auto* sw_sound = sweep->add_subcommand("soundness", "threshold soundness against the oracle");
  sw_sound->add_option("--n", ns)->delimiter(',');
  sw_sound->add_option("--delta", delta)->required();
  sw_sound->add_option("--samples", samples);
  sw_sound->add_option("--seed", seed);
  sw_sound->add_option("--which", variant)->check(CLI::IsMember({"edges", "spectral"}));
  sw_sound->add_option("--out", out_path);
  sw_sound->add_option("--max-dim", caps.max_dim);
  sw_sound->add_flag("--timings", timings);
  sw_sound->callback([&] {
    action = [&] {
      const SweepReport r =
          soundness_sweep(ns, delta, samples, seed,
                          variant == "edges" ? SoundnessVariant::edges : SoundnessVariant::spectral,
                          {jobs, timings, caps});
      emit(to_csv(r), out_path, out);
      if (!out_path.empty()) out << to_json(r).dump() << "\n";
      return sweep_exit(r);
    };
  });

  auto* sw_mono = sweep->add_subcommand("monotonicity", "rho(G+e) versus rho(G)");
  sw_mono->add_option("--samples", samples);
  sw_mono->add_option("--seed", seed);
  sw_mono->add_option("--out", out_path);
  sw_mono->add_flag("--timings", timings);
  sw_mono->callback([&] {
    action = [&] {
      const SweepReport r = subgraph_monotonicity_sweep(samples, seed, {jobs, timings, {}});
      emit(to_csv(r), out_path, out);
      if (!out_path.empty()) out << to_json(r).dump() << "\n";
      return sweep_exit(r);
    };
  });

  // report
  auto* report = app.add_subcommand("report", "reports")->require_subcommand(1);
  auto* rep_tight = report->add_subcommand("tightness", "extremal graph and its supergraphs");
  rep_tight->add_option("--n", n)->required();
  rep_tight->add_option("--delta", delta)->required();
  rep_tight->add_option("--out", out_path);
  rep_tight->callback([&] {
    action = [&] {
      const TightnessReport r = tightness_report(n, delta, {jobs, false, {}});
      emit(to_json(r).dump(2) + "\n", out_path, out);
      if (r.refused) throw UsageError(*r.refused);
      if (!r.supergraphs.unknown.empty() && r.supergraphs.passed()) return int(kExitCap);
      return r.passed() ? 0 : 1;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: usage: " << msg << "\n";
    return kExitUsage;
  }
  if (!action) {
    err << "error: usage: no command selected\n";
    return kExitUsage;
  }
  return action();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  auto fail = [&err](const char* kind, std::string msg, int code) {
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << kind << ": " << msg << "\n";
    return code;
  };
  try {
    return dispatch(args, in, out, err);
  } catch (const ParseError& e) {
    return fail("parse", e.what(), kExitParse);
  } catch (const IoError& e) {
    return fail("io", e.what(), kExitParse);
  } catch (const CapExceeded& e) {
    return fail("cap", e.what(), kExitCap);
  } catch (const ConvergenceError& e) {
    return fail("convergence", e.what(), kExitCap);
  } catch (const RootNotFound& e) {
    return fail("root", e.what(), kExitCap);
  } catch (const UsageError& e) {
    return fail("usage", e.what(), kExitUsage);
  } catch (const std::invalid_argument& e) {
    return fail("usage", e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kExitFailure);
  }
}

}  // namespace evenfactor
