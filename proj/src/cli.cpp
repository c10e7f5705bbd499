#include "nichols/cli.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nichols/closed_forms.hpp"
#include "nichols/result_cache.hpp"
#include "nichols/scalar_literal.hpp"
#include "nichols/serialize.hpp"
#include "nichols/sym_action.hpp"
#include "nichols/symmetrizer.hpp"

namespace nichols {
namespace {

struct PointOpts {
  std::string a, b, e;

  bool any() const { return !a.empty() || !b.empty() || !e.empty(); }
  bool all() const { return !a.empty() && !b.empty() && !e.empty(); }
  ParamPoint parse() const {
    return ParamPoint(parse_scalar_literal(a), parse_scalar_literal(b),
                      parse_scalar_literal(e));
  }
};

void add_point_options(CLI::App* cmd, PointOpts& pt, bool required) {
  auto* a = cmd->add_option("-a", pt.a, "Parameter a (e.g. 1, -1/2, zeta(3)^2)");
  auto* b = cmd->add_option("-b", pt.b, "Parameter b");
  auto* e = cmd->add_option("-e", pt.e, "Parameter e");
  if (required) {
    a->required();
    b->required();
    e->required();
  }
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

std::optional<ResultCache> resolve_cache(const std::string& dir,
                                         bool no_cache) {
  if (no_cache || dir.empty()) return std::nullopt;
  return ResultCache(dir);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact graded dimensions of the Nichols algebra B(V_abe), "
               "symmetrizer coefficient polynomials, E-tables, word orbits, "
               "and a closed-form verification suite"};
  app.require_subcommand(1);

  // dim
  auto* dim = app.add_subcommand(
      "dim", "Graded dimensions at a parameter point until rank 0 or the cap");
  PointOpts dim_point;
  add_point_options(dim, dim_point, /*required=*/true);
  std::size_t dim_cap = 24;
  dim->add_option("--cap", dim_cap, "Highest degree to scan")
      ->capture_default_str();
  unsigned dim_jobs = 1;
  dim->add_option("--jobs", dim_jobs, "Worker threads for block ranks")
      ->capture_default_str();
  std::string dim_format = "text";
  add_format_option(dim, dim_format);
  std::string cache_dir;
  dim->add_option("--cache-dir", cache_dir,
                  "Directory for cached results (one JSON file per key)")
      ->envname("NICHOLS_CACHE_DIR");
  bool no_cache = false;
  dim->add_flag("--no-cache", no_cache, "Skip the result cache entirely");

  // ftilde
  auto* ftilde = app.add_subcommand(
      "ftilde", "Coefficient polynomial F~(x|y) of the braided symmetrizer");
  std::string ft_x, ft_y;
  ftilde->add_option("x", ft_x, "Source word over {1,2}")->required();
  ftilde->add_option("y", ft_y, "Target word over {1,2}")->required();
  std::string ft_set;
  ftilde->add_option("--set", ft_set, "Substitution applied to the polynomial")
      ->check(CLI::IsMember({"e=1"}));
  PointOpts ft_point;
  add_point_options(ftilde, ft_point, /*required=*/false);
  std::size_t ft_cap = 14;
  ftilde->add_option("--cap", ft_cap, "Longest accepted word")
      ->capture_default_str();
  std::string ft_format = "text";
  add_format_option(ftilde, ft_format);

  // etable
  auto* etable = app.add_subcommand(
      "etable", "Counts E_{k,s}^n of subgroup elements by t-length and "
                "inversion count");
  std::size_t et_n = 0;
  etable->add_option("-n", et_n, "Word length n")->required();
  long et_kmax = -1;
  etable->add_option("-k", et_kmax, "Truncate to k <= this (-1: no cut)")
      ->capture_default_str();
  std::string et_format = "text";
  add_format_option(etable, et_format);

  // orbits
  auto* orbits = app.add_subcommand(
      "orbits", "Partition of {1,2}^n into orbits of the flip action");
  std::size_t orb_n = 0;
  orbits->add_option("-n", orb_n, "Word length n")->required();
  std::string orb_format = "text";
  add_format_option(orbits, orb_format);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Check every closed form against the brute-force engines");
  std::size_t ver_nmax = 9;
  verify->add_option("--nmax", ver_nmax, "Largest word length / table size")
      ->capture_default_str();
  std::size_t ver_cap = 14;
  verify->add_option("--cap", ver_cap, "Degree cap for dimension scans")
      ->capture_default_str();
  unsigned ver_jobs = 1;
  verify->add_option("--jobs", ver_jobs, "Worker threads for block ranks")
      ->capture_default_str();
  std::string ver_format = "text";
  add_format_option(verify, ver_format);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("nichols");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(dim)) {
      if (dim_cap < 2) {
        err << "error: --cap must be at least 2\n";
        return kExitUsage;
      }
      ParamPoint pt = dim_point.parse();
      std::string key = "dim|" + canonical_point(pt) +
                        "|cap=" + std::to_string(dim_cap);
      std::optional<ResultCache> cache = resolve_cache(cache_dir, no_cache);
      std::optional<GradedProfile> prof;
      if (cache) {
        if (auto hit = cache->load(key)) {
          try {
            prof = profile_from_json(*hit);
          } catch (const std::exception&) {
            prof.reset();  // damaged entry: fall through to a cold run
          }
        }
      }
      if (!prof) {
        prof = nichols_dimension(pt, dim_cap, dim_jobs);
        if (cache) cache->store(key, profile_to_json(*prof));
      }
      out << render_profile(*prof, parse_format(dim_format));
      return prof->status == GradedProfile::Status::terminated
                 ? kExitOk
                 : kExitCapExceeded;
    }

    if (app.got_subcommand(ftilde)) {
      Word wx = Word::parse(ft_x);
      Word wy = Word::parse(ft_y);
      if (wx.size() != wy.size()) {
        err << "error: words must have equal length\n";
        return kExitUsage;
      }
      if (wx.size() > ft_cap) {
        err << "error: word length " << wx.size() << " exceeds cap " << ft_cap
            << "\n";
        return kExitCapExceeded;
      }
      if (ft_point.any() && !ft_point.all()) {
        err << "error: give all of -a, -b, -e or none\n";
        return kExitUsage;
      }
      if (ft_point.any() && !ft_set.empty()) {
        err << "error: --set applies to the symbolic polynomial only\n";
        return kExitUsage;
      }
      SymmetrizerEngine<MultiPoly> engine(symbolic_braiding());
      MultiPoly p = tilde_f(wx, wy, engine);
      OutputFormat fmt = parse_format(ft_format);
      if (ft_point.all()) {
        ParamPoint pt = ft_point.parse();
        out << render_ftilde_value(ft_x, ft_y, pt.str(), evaluate(p, pt), fmt);
      } else {
        if (ft_set == "e=1") p = p.with_e_set_to_one();
        out << render_ftilde(ft_x, ft_y, p, fmt);
      }
      return kExitOk;
    }

    if (app.got_subcommand(etable)) {
      SearchCaps caps;
      if (et_n > caps.subgroup) {
        err << "error: n = " << et_n << " exceeds the subgroup search cap "
            << caps.subgroup << "\n";
        return kExitCapExceeded;
      }
      out << render_ek_table(ek_table(et_n, et_kmax), parse_format(et_format));
      return kExitOk;
    }

    if (app.got_subcommand(orbits)) {
      constexpr std::size_t kOrbitCap = 18;
      if (orb_n > kOrbitCap) {
        err << "error: n = " << orb_n << " exceeds the orbit enumeration cap "
            << kOrbitCap << "\n";
        return kExitCapExceeded;
      }
      out << render_orbit_partition(orb_n, orbit_partition(orb_n),
                                    parse_format(orb_format));
      return kExitOk;
    }

    if (app.got_subcommand(verify)) {
      auto reports = verify_all(ver_nmax, ver_cap, ver_jobs);
      out << render_reports(reports, parse_format(ver_format));
      return all_passed(reports) ? kExitOk : kExitVerifyFail;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace nichols
