#include "rlat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "rlat/coann.hpp"
#include "rlat/error.hpp"
#include "rlat/io.hpp"
#include "rlat/modelgen.hpp"
#include "rlat/normality.hpp"
#include "rlat/omega.hpp"
#include "rlat/spectra.hpp"
#include "rlat/verify.hpp"

namespace rlat {

  namespace {

    struct Options {
      std::string              path;
      std::string              format = "text";
      std::string              base;
      bool                     gen = false;
      std::optional<std::string> of;
      bool                     assert_normal = false;
      std::string              battery       = "all";
      std::vector<std::size_t> sizes;
      std::string              base_lattice;
      std::string              out_path;
      std::optional<std::size_t> limit;
      bool                     all_labellings = false;
      bool                     verify_census  = false;
      std::string              what           = "hasse";
    };

    Json names_of(Structure const& s, SubsetMask const& m) {
      Json out = Json::array();
      for_each_element(m, [&](Elem x) { out.push_back(s.names[x]); });
      return out;
    }

    Json names_of(Structure const& s, Filter const& F) {
      return names_of(s, F.mask());
    }

    Json filter_list(Structure const& s, std::vector<Filter> const& fs) {
      Json out = Json::array();
      for (auto const& F : fs) {
        out.push_back(names_of(s, F));
      }
      return out;
    }

    std::string set_list(Structure const& s, std::vector<Filter> const& fs) {
      std::string out;
      for (auto const& F : fs) {
        out += (out.empty() ? "" : " ") + format_set(s, F.mask());
      }
      return out.empty() ? "(none)" : out;
    }

    // Emits either the JSON envelope or the text body.
    class Report {
     public:
      Report(Options const& o, std::string command, std::ostream& out)
          : _json(o.format == "json"), _command(std::move(command)), _out(out) {}

      bool json() const {
        return _json;
      }
      std::ostream& text() {
        return _out;
      }
      void emit(Structure const& s, Json result) {
        if (!_json) {
          return;
        }
        Json doc;
        doc["tool"]      = kToolName;
        doc["version"]   = kToolVersion;
        doc["command"]   = _command;
        doc["structure"] = s.name;
        doc["result"]    = std::move(result);
        _out << doc.dump(2) << "\n";
      }

     private:
      bool          _json;
      std::string   _command;
      std::ostream& _out;
    };

    std::string describe(Structure const& s, Violation const& v) {
      std::string out = v.axiom + " (";
      for (std::size_t i = 0; i < v.arity; ++i) {
        out += (i == 0 ? "" : ",") + s.names[v.witness[i]];
      }
      return out + ")";
    }

    Structure load_valid(std::string const& path) {
      Structure  s   = load_structure(path);
      auto const rep = validate_structure(s);
      if (!rep.valid()) {
        throw Error(ErrorKind::malformed_tables,
                    path + " is not a residuated lattice: "
                        + describe(s, rep.violations.front()));
      }
      return s;
    }

    // Resolves --base, printing the generated filter first under --gen.
    Filter resolve_base(Structure const& s, Options const& o, Report& rep,
                        Json& result) {
      if (o.base.empty()) {
        return trivial_filter(s);
      }
      if (!o.gen) {
        return parse_filter(s, o.base);
      }
      Filter const F = generated_filter(s, parse_elements(s, o.base));
      if (rep.json()) {
        result["generated"] = names_of(s, F);
      } else {
        rep.text() << "generated filter: " << format_set(s, F.mask()) << "\n";
      }
      return F;
    }

    int cmd_validate(Options const& o, std::ostream& out) {
      Structure const s   = load_structure(o.path);
      auto const      rep = validate_structure(s);
      Report          r(o, "validate", out);
      if (r.json()) {
        Json v = Json::array();
        for (auto const& x : rep.violations) {
          Json w = Json::array();
          for (std::size_t i = 0; i < x.arity; ++i) {
            w.push_back(s.names[x.witness[i]]);
          }
          v.push_back(Json{{"axiom", x.axiom}, {"witness", std::move(w)}});
        }
        r.emit(s, Json{{"valid", rep.valid()},
                       {"elements", s.size()},
                       {"violations", std::move(v)}});
      } else {
        out << s.name << ": " << (rep.valid() ? "valid" : "invalid") << " ("
            << s.size() << " elements, " << rep.violations.size()
            << " violations)\n";
        for (auto const& x : rep.violations) {
          out << "  " << describe(s, x) << "\n";
        }
      }
      return rep.valid() ? kExitOk : kExitFailed;
    }

    int cmd_filters(Options const& o, std::ostream& out) {
      Structure const s   = load_valid(o.path);
      auto const      lat = all_filters(s);
      Report          r(o, "filters", out);
      if (r.json()) {
        r.emit(s, Json{{"count", lat.size()},
                       {"filters", filter_list(s, lat.filters())}});
      } else {
        out << s.name << ": " << lat.size() << " filters\n";
        for (auto const& F : lat.filters()) {
          out << format_set(s, F.mask()) << "\n";
        }
      }
      return kExitOk;
    }

    int cmd_spectrum(Options const& o, std::ostream& out) {
      Structure const s = load_valid(o.path);
      Report          r(o, "spectrum", out);
      Json            result;
      Filter const    F    = resolve_base(s, o, r, result);
      auto const      spec = spectrum(s, F);
      if (r.json()) {
        result["base"]    = names_of(s, F);
        result["primes"]  = filter_list(s, spec.primes);
        result["maximal"] = filter_list(s, spec.maximals);
        result["minimal"] = filter_list(s, spec.minimal_primes);
        r.emit(s, std::move(result));
      } else {
        out << s.name << ": spectrum, base " << format_set(s, F.mask()) << "\n";
        out << "primes: " << set_list(s, spec.primes) << "\n";
        out << "maximal: " << set_list(s, spec.maximals) << "\n";
        out << "minimal over base: " << set_list(s, spec.minimal_primes) << "\n";
      }
      return kExitOk;
    }

    int cmd_coann(Options const& o, std::ostream& out) {
      Structure const s = load_valid(o.path);
      Report          r(o, "coann", out);
      Json            result;
      Filter const    F = resolve_base(s, o, r, result);
      result["base"]    = names_of(s, F);
      if (o.of) {
        SubsetMask const X = parse_elements(s, *o.of);
        Filter const     C = coannihilator(s, F, X);
        if (r.json()) {
          result["of"]            = names_of(s, X);
          result["coannihilator"] = names_of(s, C);
          r.emit(s, std::move(result));
        } else {
          out << format_set(s, C.mask()) << "\n";
        }
        return kExitOk;
      }
      CoannFamily const fam(s, F);
      if (r.json()) {
        Json per = Json::object();
        for (Elem x = 0; x < s.size(); ++x) {
          per[s.names[x]] = names_of(s, coannulet(s, F, x));
        }
        result["coannulets"]      = std::move(per);
        result["coannihilators"] = filter_list(s, fam.members());
        r.emit(s, std::move(result));
      } else {
        out << s.name << ": coannulets, base " << format_set(s, F.mask()) << "\n";
        for (Elem x = 0; x < s.size(); ++x) {
          out << "  " << s.names[x] << ": "
              << format_set(s, coannulet(s, F, x).mask()) << "\n";
        }
        out << "coannihilators: " << set_list(s, fam.members()) << "\n";
      }
      return kExitOk;
    }

    int cmd_omega(Options const& o, std::ostream& out) {
      Structure const s = load_valid(o.path);
      Report          r(o, "omega", out);
      Json            result;
      Filter const    F      = resolve_base(s, o, r, result);
      OmegaFamily const fam  = omega_family(s, F);
      auto const      dense  = dense_set(s, F).mask;
      auto const      primes = prime_filters(s);
      Filter const    sg     = sigma(s, F);
      if (r.json()) {
        result["base"] = names_of(s, F);
        Json members   = Json::array();
        for (std::size_t i = 0; i < fam.size(); ++i) {
          members.push_back(Json{{"filter", names_of(s, fam[i])},
                                 {"ideal", names_of(s, fam.witness_ideals()[i].mask())}});
        }
        result["omega_filters"] = std::move(members);
        result["dense"]         = names_of(s, dense);
        Json div                = Json::array();
        for (auto const& P : primes) {
          div.push_back(Json{{"prime", names_of(s, P)},
                             {"divisor", names_of(s, divisor(s, F, P))}});
        }
        result["divisors"] = std::move(div);
        result["sigma"]    = names_of(s, sg);
        r.emit(s, std::move(result));
      } else {
        out << s.name << ": omega-filters, base " << format_set(s, F.mask())
            << "\n";
        for (std::size_t i = 0; i < fam.size(); ++i) {
          out << "  " << format_set(s, fam[i].mask()) << " from ideal "
              << format_set(s, fam.witness_ideals()[i].mask()) << "\n";
        }
        out << "dense: " << format_set(s, dense) << "\n";
        for (auto const& P : primes) {
          out << "divisor of " << format_set(s, P.mask()) << ": "
              << format_set(s, divisor(s, F, P)) << "\n";
        }
        out << "sigma: " << format_set(s, sg.mask()) << "\n";
      }
      return kExitOk;
    }

    int cmd_normality(Options const& o, std::ostream& out) {
      Structure const s = load_valid(o.path);
      Report          r(o, "normality", out);
      Json            result;
      Filter const    F   = resolve_base(s, o, r, result);
      auto const      rep = normality_report(s, F);
      if (r.json()) {
        result["base"]  = names_of(s, F);
        result["index"] = rep.index;
        Json per        = Json::array();
        for (auto const& [P, count] : rep.per_prime) {
          per.push_back(Json{{"prime", names_of(s, P)}, {"minimal_below", count}});
        }
        result["per_prime"] = std::move(per);
        result["normal"]    = rep.index <= 1;
        r.emit(s, std::move(result));
      } else {
        out << s.name << ": normality, base " << format_set(s, F.mask()) << "\n";
        out << "index: " << rep.index << (rep.index <= 1 ? " (normal)" : "")
            << "\n";
        for (auto const& [P, count] : rep.per_prime) {
          out << "  " << format_set(s, P.mask()) << ": " << count << "\n";
        }
      }
      return o.assert_normal && rep.index > 1 ? kExitFailed : kExitOk;
    }

    Json report_json(VerificationReport const& rep) {
      Json checks = Json::array();
      for (auto const& c : rep.checks) {
        Json j{{"group", c.group},
               {"name", c.name},
               {"cases", c.cases},
               {"failures", c.failures},
               {"passed", c.passed()}};
        if (c.witness) {
          j["witness"] = *c.witness;
        }
        checks.push_back(std::move(j));
      }
      return Json{{"passed", rep.passed()},
                  {"failures", rep.failures()},
                  {"checks", std::move(checks)},
                  {"notes", rep.notes}};
    }

    int cmd_verify(Options const& o, std::ostream& out) {
      Battery const   battery = parse_battery(o.battery);
      Structure const s       = load_structure(o.path);
      auto const      rep     = verify(s, battery);
      Report          r(o, "verify", out);
      if (r.json()) {
        Json result = report_json(rep);
        result["battery"] = o.battery;
        r.emit(s, std::move(result));
      } else {
        out << s.name << ": battery " << o.battery << "\n";
        for (auto const& c : rep.checks) {
          out << (c.passed() ? "PASS " : "FAIL ") << c.group << "." << c.name
              << " (" << c.cases << " cases";
          if (!c.passed()) {
            out << ", " << c.failures << " failures; first: " << *c.witness;
          }
          out << ")\n";
        }
        for (auto const& n : rep.notes) {
          out << "note: " << n << "\n";
        }
        out << "summary: " << rep.checks.size() << " checks, " << rep.failures()
            << " failures\n";
      }
      return rep.passed() ? kExitOk : kExitFailed;
    }

    int cmd_search(Options const& o, std::ostream& out, std::ostream& err) {
      std::optional<OrderMatrix> base;
      if (!o.base_lattice.empty()) {
        base = load_order(o.base_lattice);
      }
      std::vector<std::size_t> sizes = o.sizes;
      if (sizes.empty()) {
        if (!base) {
          throw Error(ErrorKind::parse, "--size or --base-lattice is required");
        }
        sizes.push_back(base->size());
      }
      std::ofstream file;
      if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) {
          throw Error(ErrorKind::parse, "cannot write '" + o.out_path + "'");
        }
      }
      std::ostream& sink = o.out_path.empty() ? out : file;

      std::map<std::string, std::size_t> counts;
      std::size_t                        total = 0, failing = 0;
      for (std::size_t n : sizes) {
        SearchSpec spec;
        spec.size           = n;
        spec.base_lattice   = base;
        spec.limit          = o.limit;
        spec.canonical_only = !o.all_labellings;
        auto const records  = enumerate_residuated(spec);
        counts[std::to_string(n)] += records.size();
        total += records.size();
        for (auto const& rec : records) {
          sink << census_record_json(rec).dump() << "\n";
          if (o.verify_census) {
            auto const rep = verify(rec.structure);
            if (!rep.passed()) {
              ++failing;
              for (auto const& c : rep.checks) {
                if (!c.passed()) {
                  err << rec.structure.name << ": FAIL " << c.group << "."
                      << c.name << ": " << *c.witness << "\n";
                }
              }
            }
          }
        }
      }
      Json stats;
      stats["counts"] = counts;
      stats["total"]  = total;
      if (o.verify_census) {
        stats["verified"]         = total;
        stats["failing_structures"] = failing;
      }
      sink << Json{{"stats", std::move(stats)}}.dump() << "\n";
      return failing == 0 ? kExitOk : kExitFailed;
    }

    int cmd_export_dot(Options const& o, std::ostream& out) {
      Structure const s = load_valid(o.path);
      out << (o.what == "filters" ? filter_lattice_dot(s) : hasse_dot(s));
      return kExitOk;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Finite residuated lattices: filters, spectra, coannihilators, "
                 "omega-filters and normality"};
    app.name(kToolName);
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    Options o;
    auto add_path = [&](CLI::App* c) {
      c->add_option("path", o.path, "structure file (JSON)")->required();
    };
    auto add_format = [&](CLI::App* c) {
      c->add_option("--format", o.format, "text or json")
          ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_base = [&](CLI::App* c, bool required) {
      auto* opt = c->add_option("--base", o.base,
                                "filter as a comma-separated element list");
      if (required) {
        opt->required();
      }
      c->add_flag("--gen", o.gen, "treat --base as generators");
    };

    auto* validate = app.add_subcommand("validate", "check the axioms");
    add_path(validate);
    add_format(validate);

    auto* filters = app.add_subcommand("filters", "list all filters");
    add_path(filters);
    add_format(filters);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "prime, maximal and minimal prime filters");
    add_path(spectrum_cmd);
    add_format(spectrum_cmd);
    add_base(spectrum_cmd, false);

    auto* coann = app.add_subcommand("coann", "coannihilators relative to a filter");
    add_path(coann);
    add_format(coann);
    add_base(coann, true);
    coann->add_option("--of", o.of, "elements X of (base : X)");

    auto* omega_cmd = app.add_subcommand("omega", "omega-filters, dense set, divisors, sigma");
    add_path(omega_cmd);
    add_format(omega_cmd);
    add_base(omega_cmd, true);

    auto* normality = app.add_subcommand("normality", "normality index relative to a filter");
    add_path(normality);
    add_format(normality);
    add_base(normality, false);
    normality->add_flag("--assert-normal", o.assert_normal,
                        "exit 1 unless the index is 1");

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant battery");
    add_path(verify_cmd);
    add_format(verify_cmd);
    verify_cmd->add_option("--battery", o.battery,
                           "all|structure|filters|spectra|coann|omega|normality");

    auto* search = app.add_subcommand("search", "enumerate residuated lattices");
    search->add_option("--size", o.sizes, "carrier size (repeatable)")
        ->check(CLI::Range(std::size_t{0}, std::size_t{64}));
    search->add_option("--base-lattice", o.base_lattice,
                       "lattice file fixing the order");
    search->add_option("--out", o.out_path, "write records here instead of stdout");
    search->add_option("--limit", o.limit, "emit at most this many per size");
    search->add_flag("--all", o.all_labellings,
                     "emit every labelled structure, not one per isomorphism class");
    search->add_flag("--verify", o.verify_census,
                     "run the battery on every emitted structure");

    auto* dot = app.add_subcommand("export-dot", "Graphviz export");
    add_path(dot);
    dot->add_option("--what", o.what, "hasse or filters")
        ->check(CLI::IsMember({"hasse", "filters"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }

    try {
      if (validate->parsed()) {
        return cmd_validate(o, out);
      }
      if (filters->parsed()) {
        return cmd_filters(o, out);
      }
      if (spectrum_cmd->parsed()) {
        return cmd_spectrum(o, out);
      }
      if (coann->parsed()) {
        return cmd_coann(o, out);
      }
      if (omega_cmd->parsed()) {
        return cmd_omega(o, out);
      }
      if (normality->parsed()) {
        return cmd_normality(o, out);
      }
      if (verify_cmd->parsed()) {
        return cmd_verify(o, out);
      }
      if (search->parsed()) {
        return cmd_search(o, out, err);
      }
      if (dot->parsed()) {
        return cmd_export_dot(o, out);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    return kExitUsage;
  }

}  // namespace rlat
