#include "sphex/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sphex/cache.hpp"
#include "sphex/chartab.hpp"
#include "sphex/exclusion.hpp"
#include "sphex/models.hpp"
#include "sphex/report.hpp"

#ifndef SPHEX_DEFAULT_DATA_DIR
#define SPHEX_DEFAULT_DATA_DIR "data"
#endif

namespace sphex {
namespace cli {

namespace {

struct Config {
  std::string data_dir;
  std::string group_path; // or the builtin token "s5"
  std::string table_path;
  std::string cache_dir;
  bool no_cache = false;
  std::size_t group_cap = FiniteGroup::kDefaultCap;
  long n_max = 64;
  bool json = false;

  void resolve() {
    if (data_dir.empty()) {
      if (const char* env = std::getenv("SPHEX_DATA_DIR"))
        data_dir = env;
      else
        data_dir = SPHEX_DEFAULT_DATA_DIR;
    }
    if (group_path.empty()) group_path = data_dir + "/sl25c2.grp";
    if (table_path.empty()) table_path = data_dir + "/sl25c2.ctab";
    if (cache_dir.empty()) {
      if (const char* env = std::getenv("SPHEX_CACHE_DIR")) {
        cache_dir = env;
      } else {
        std::error_code ec;
        auto tmp = std::filesystem::temp_directory_path(ec);
        cache_dir = ec ? std::string(".sphex-cache") : (tmp / "sphex-cache").string();
      }
    }
  }
};

struct Session {
  FiniteGroup group;
  std::uint64_t group_key = 0;
  std::optional<CharacterTable> table;
  std::optional<SubgroupLattice> lattice;
  std::optional<ExclusionEngine> engine;
};

Session load_group(const Config& cfg) {
  if (cfg.group_path == "s5" || cfg.group_path == "S5") {
    FiniteGroup s5 = models::symmetric(5);
    std::uint64_t key = content_hash("builtin:s5");
    return Session{std::move(s5), key, std::nullopt, std::nullopt, std::nullopt};
  }
  std::ifstream f(cfg.group_path);
  if (!f) fail(Errc::ParseError, "cannot open group file: " + cfg.group_path);
  std::ostringstream ss;
  ss << f.rdbuf();
  std::string bytes = ss.str();
  GroupFile gf = parse_group_file(bytes);
  FiniteGroup g(std::move(gf.generators), cfg.group_cap, "");
  return Session{std::move(g), content_hash(bytes), std::nullopt, std::nullopt, std::nullopt};
}

void load_table(Session& s, const Config& cfg) {
  s.table = CharacterTable::load_file(cfg.table_path, s.group);
  if (s.group.name().empty()) s.group.set_name(s.table->group_name());
}

void load_lattice(Session& s, const Config& cfg) {
  LatticeCache cache(cfg.no_cache ? "" : cfg.cache_dir);
  s.lattice = cached_lattice(s.group, s.group_key, cache);
}

void load_engine(Session& s, const Config& cfg) {
  if (!s.table) load_table(s, cfg);
  if (!s.lattice) load_lattice(s, cfg);
  s.engine.emplace(s.group, *s.table, *s.lattice);
}

const Subgroup& subgroup_by_label_or_alias(const SubgroupLattice& lat, std::string label) {
  if (label == "trivial") label = "C1";
  return lat.by_label(label).representative;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact fixed-point and exclusion computations for smooth group actions on homology spheres"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--data", cfg.data_dir, "data directory with the bundled group and character table");
  app.add_option("--group", cfg.group_path, "group file in cycle notation, or 's5' for the builtin S5");
  app.add_option("--table", cfg.table_path, "complex character table file");
  app.add_option("--cache-dir", cfg.cache_dir, "lattice cache directory (SPHEX_CACHE_DIR overrides)");
  app.add_flag("--no-cache", cfg.no_cache, "disable the lattice cache");
  app.add_option("--cap", cfg.group_cap, "group order cap");
  app.add_flag("--json", cfg.json, "emit JSON instead of text");

  auto* cmd_classes = app.add_subcommand("classes", "conjugacy classes of the group");
  auto* cmd_chartab = app.add_subcommand("chartab", "verified real irreducible character table");
  auto* cmd_lattice = app.add_subcommand("lattice", "subgroup lattice up to conjugacy");

  auto* cmd_fpdim = app.add_subcommand("fpdim", "fixed point dimensions of real irreducibles");
  std::string fp_module, fp_class;
  bool fp_all = false;
  cmd_fpdim->add_option("--module", fp_module, "real irreducible name, e.g. U6 or W8_1");
  cmd_fpdim->add_option("--class", fp_class, "subgroup class label, e.g. Q8_A, Q16, [24,4], trivial");
  cmd_fpdim->add_flag("--all", fp_all, "print the full irreducible x subgroup-class matrix");

  auto* cmd_oliver = app.add_subcommand("oliver", "Oliver verdict with witness chain");
  std::string ol_subgroup;
  cmd_oliver->add_option("--subgroup", ol_subgroup, "subgroup class label (default: whole group)");

  auto* cmd_exclude = app.add_subcommand("exclude", "run the exclusion rule engine");
  long ex_dim = -1;
  std::string ex_mode = "one", ex_scope = "homology";
  bool ex_effective = false, ex_trace = false, ex_scan = false;
  int ex_pseudofree = -1;
  cmd_exclude->add_option("--dim", ex_dim, "tangent module dimension n");
  cmd_exclude->add_option("--mode", ex_mode, "one | odd")->check(CLI::IsMember({"one", "odd"}));
  cmd_exclude->add_option("--scope", ex_scope, "homology | standard")->check(CLI::IsMember({"homology", "standard"}));
  cmd_exclude->add_flag("--effective", ex_effective, "require a faithful tangent module");
  cmd_exclude->add_option("--pseudofree", ex_pseudofree, "pseudofree bound k");
  cmd_exclude->add_flag("--trace", ex_trace, "include every rule application in the report");
  cmd_exclude->add_flag("--scan", ex_scan, "iterate n from 0 to --nmax");
  cmd_exclude->add_option("--nmax", cfg.n_max, "scan upper bound (default 64)");

  try {
    std::vector<const char*> argv;
    std::string prog = "sphex";
    argv.push_back(prog.c_str());
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    cfg.resolve();
    Session s = load_group(cfg);

    if (cmd_classes->parsed()) {
      if (s.group.name().empty() && cfg.group_path != "s5") {
        try {
          load_table(s, cfg);
        } catch (const Error&) {
          // classes work without a table
        }
      }
      for (const auto& c : s.group.classes())
        out << "class " << c.label << " order=" << c.order_of_rep << " size=" << c.size() << " rep="
            << s.group.perm(c.representative).to_cycles() << "\n";
      return 0;
    }

    if (cmd_chartab->parsed()) {
      load_table(s, cfg);
      out << s.table->format_real_table();
      return 0;
    }

    if (cmd_lattice->parsed()) {
      if (cfg.group_path != "s5") {
        try {
          load_table(s, cfg);
        } catch (const Error&) {
        }
      }
      load_lattice(s, cfg);
      if (cfg.json)
        out << lattice_to_json(*s.lattice).dump(2) << "\n";
      else
        out << s.lattice->export_text();
      return 0;
    }

    if (cmd_fpdim->parsed()) {
      load_engine(s, cfg);
      const auto& real = s.table->real_irreducibles();
      const auto& classes = s.lattice->classes();
      if (fp_all) {
        out << "module";
        for (const auto& c : classes) out << '\t' << c.label;
        out << '\n';
        for (std::size_t r = 0; r < real.size(); ++r) {
          out << real[r].name;
          for (std::size_t c = 0; c < classes.size(); ++c) out << '\t' << s.engine->fp(r, static_cast<int>(c));
          out << '\n';
        }
        return 0;
      }
      if (fp_module.empty() || fp_class.empty()) {
        err << "error: fpdim needs --module and --class, or --all\n";
        return 1;
      }
      int r = s.table->real_index(fp_module);
      if (r < 0) {
        err << "error: no real irreducible named " << fp_module << "\n";
        return 1;
      }
      const Subgroup& h = subgroup_by_label_or_alias(*s.lattice, fp_class);
      out << s.table->fp_dim_real(static_cast<std::size_t>(r), h) << "\n";
      return 0;
    }

    if (cmd_oliver->parsed()) {
      load_lattice(s, cfg);
      const Subgroup& k =
          ol_subgroup.empty() ? whole_group(s.group) : subgroup_by_label_or_alias(*s.lattice, ol_subgroup);
      OliverVerdict v = oliver_verdict(*s.lattice, k);
      std::string name = ol_subgroup.empty() ? (s.group.name().empty() ? "group" : s.group.name()) : ol_subgroup;
      if (v.is_oliver) {
        out << name << ": Oliver\n";
      } else {
        if (!verify_oliver_chain(s.group, k.members, *v.witness)) {
          err << "error: witness chain failed independent re-verification\n";
          return 2;
        }
        const auto& ch = *v.witness;
        std::string pl = s.lattice->classes()[s.lattice->identify(ch.p_members)].label;
        std::string hl = s.lattice->classes()[s.lattice->identify(ch.h_members)].label;
        out << name << ": non-Oliver, witness ";
        if (ch.p_members == ch.h_members && ch.h_members == k.members)
          out << "P=H=" << (ol_subgroup.empty() ? hl : ol_subgroup);
        else
          out << "P=" << pl << " H=" << hl;
        out << "\n";
      }
      return 0;
    }

    if (cmd_exclude->parsed()) {
      load_engine(s, cfg);
      std::optional<int> pf;
      if (ex_pseudofree >= 0) pf = ex_pseudofree;
      Mode mode = ex_mode == "one" ? Mode::One : Mode::Odd;
      Scope scope = ex_scope == "homology" ? Scope::Homology : Scope::Standard;

      auto print_line = [&](const ExclusionReport& rep) {
        if (rep.excluded) {
          out << "n=" << rep.dimension << " EXCLUDED\n";
        } else {
          out << "n=" << rep.dimension << " NOT EXCLUDED (" << rep.surviving_families.size()
              << " surviving famil" << (rep.surviving_families.size() == 1 ? "y" : "ies") << ": ";
          for (std::size_t i = 0; i < rep.surviving_families.size(); ++i) {
            if (i) out << ", ";
            out << rep.surviving_families[i];
          }
          out << ")\n";
        }
      };

      if (ex_scan) {
        for (long n = 0; n <= cfg.n_max; ++n) {
          auto rep = s.engine->exclude(n, mode, scope, ex_effective, pf);
          if (!reverify_report(s.group, *s.table, rep)) {
            err << "error: rule trace failed independent re-verification at n=" << n << "\n";
            return 2;
          }
          if (cfg.json)
            out << report_to_json(rep, ex_trace).dump() << "\n";
          else
            print_line(rep);
        }
        return 0;
      }

      if (ex_dim < 0) {
        err << "error: exclude needs --dim (or --scan)\n";
        return 1;
      }
      auto rep = s.engine->exclude(ex_dim, mode, scope, ex_effective, pf);
      if (!reverify_report(s.group, *s.table, rep)) {
        err << "error: rule trace failed independent re-verification\n";
        return 2;
      }
      if (cfg.json)
        out << report_to_json(rep, ex_trace).dump(2) << "\n";
      else
        print_line(rep);
      return 0;
    }

    err << "error: no subcommand\n";
    return 1;
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::BadArgument:
        err << "error: " << e.what() << "\n";
        return 1;
      default:
        err << "verification failure: " << e.what() << "\n";
        return 2;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace cli
} // namespace sphex
