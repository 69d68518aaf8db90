// Command-line driver: computes the frame of smashing ideals for a ring
// descriptor (--n, --idem/--idem-mask, --ell) and reports frames, Hasse
// diagrams, spectra, the dual-spectrum comparison, telescope verdicts,
// epimorphism labels, self-checks, and value-group computations.
//
// Exit status: 0 on success, 1 on usage or literal-syntax errors,
// 2 on computation or assertion failures.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "smashframe/checks.hpp"
#include "smashframe/emit.hpp"
#include "smashframe/error.hpp"
#include "smashframe/frame.hpp"
#include "smashframe/literals.hpp"
#include "smashframe/ring_model.hpp"
#include "smashframe/spectra.hpp"
#include "smashframe/value_group.hpp"

namespace {

using namespace smashframe;

RingSpec build_spec(int n, const std::string& idem_list, const std::string& idem_mask,
                    long long ell) {
  require(idem_list.empty() || idem_mask.empty(), "USAGE",
          "--idem and --idem-mask are mutually exclusive");
  RingSpec s;
  s.n = n;
  s.ell = ell;
  if (!idem_mask.empty()) {
    s.idem.clear();
    for (char c : idem_mask) {
      require(c == '0' || c == '1', "USAGE", "--idem-mask must be a 0/1 string");
      s.idem.push_back(c == '1');
    }
  } else if (!idem_list.empty()) {
    s.idem.assign(static_cast<std::size_t>(n) + 1, 0);
    s.idem[0] = 1;  // position 0 is implied
    for (auto part : smashframe::detail::split(idem_list, ',')) {
      long long i = smashframe::detail::parse_ll(part, "USAGE", "--idem index");
      require(0 <= i && i <= n, "REJECT",
              "--idem index " + std::to_string(i) + " out of range 0.." + std::to_string(n));
      s.idem[static_cast<std::size_t>(i)] = 1;
    }
  } else {
    s.idem.assign(static_cast<std::size_t>(n) + 1, 1);
  }
  validate(s);
  return s;
}

int exit_code_for(const Error& e) {
  if (e.code == "USAGE" || e.code == "PARSE_CHAIN" || e.code == "PARSE_GROUP" ||
      e.code == "PARSE_POLY")
    return 1;
  return 2;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  fail("USAGE", "--format " + format + " is not supported by this subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frame of smashing ideals for finite-dimensional valuation domains"};
  app.require_subcommand(1);
  app.fallthrough();

  int n = 0;
  std::string idem_list, idem_mask;
  long long ell = 2;
  bool flip = false;
  app.add_option("--n", n, "Krull dimension (>= 1)")->required();
  app.add_option("--idem", idem_list, "comma-separated idempotent positions (0 implied)");
  app.add_option("--idem-mask", idem_mask, "explicit 0/1 mask of length n+1");
  app.add_option("--ell", ell, "denominator base of the value group (default 2)");
  app.add_flag("--flip-display", flip, "flip DOT rank direction (display only)");

  std::string format = "text";
  std::string which = "smashing";
  std::string chain_arg, elem_arg, elem2_arg, poly_num_arg, poly_den_arg;
  int filter_j = 0;

  auto* cmd_frame = app.add_subcommand("frame", "full frame summary or document");
  cmd_frame->add_option("--format", format, "json|text")->capture_default_str();
  auto* cmd_hasse = app.add_subcommand("hasse", "cover edges of the frame order");
  cmd_hasse->add_option("--format", format, "json|dot|text")->capture_default_str();
  cmd_hasse->add_option("--which", which, "smashing|balmer")->capture_default_str();
  auto* cmd_spectrum = app.add_subcommand("spectrum", "spectrum points and specialization");
  cmd_spectrum->add_option("--format", format, "json|dot|text")->capture_default_str();
  cmd_spectrum->add_option("--which", which, "smashing|balmer")->capture_default_str();
  auto* cmd_balmer = app.add_subcommand("balmer", "dual spectrum of thick primes");
  cmd_balmer->add_option("--format", format, "json|dot|text")->capture_default_str();
  auto* cmd_compare = app.add_subcommand("compare", "comparison map between the spectra");
  cmd_compare->add_option("--format", format, "json|text")->capture_default_str();
  auto* cmd_telescope = app.add_subcommand("telescope", "telescope verdict with witness");
  cmd_telescope->add_option("--format", format, "json|text")->capture_default_str();
  auto* cmd_label = app.add_subcommand("label", "epimorphism label of a chain");
  cmd_label->add_option("--format", format, "json|text")->capture_default_str();
  cmd_label->add_option("chain", chain_arg, "chain literal, e.g. \"[0,3];[4,5]\" or empty")
      ->required();
  auto* cmd_check = app.add_subcommand("check", "replay closed forms against oracles");
  auto* cmd_group = app.add_subcommand("group", "value-group computations");
  cmd_group->require_subcommand(1);
  auto* cmd_valuate = cmd_group->add_subcommand("valuate", "valuation of a series fraction");
  cmd_valuate->add_option("numerator", poly_num_arg, "polynomial literal")->required();
  cmd_valuate->add_option("denominator", poly_den_arg, "polynomial literal (default 1*t^(0,...))");
  auto* cmd_decompose = cmd_group->add_subcommand("decompose", "split a filter member in two");
  cmd_decompose->add_option("element", elem_arg, "group-element literal")->required();
  cmd_decompose->add_option("j", filter_j, "filter index (1..n)")->required();
  auto* cmd_gcompare = cmd_group->add_subcommand("compare", "lexicographic comparison");
  cmd_gcompare->add_option("left", elem_arg, "group-element literal")->required();
  cmd_gcompare->add_option("right", elem2_arg, "group-element literal")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: USAGE(" << e.what() << ")\n";
    return 1;
  }

  try {
    RingSpec spec = build_spec(n, idem_list, idem_mask, ell);

    if (*cmd_frame) {
      check_format(format, {"json", "text"});
      Frame f = enumerate_frame(spec);
      if (format == "json") {
        std::cout << full_document(f).dump(2) << "\n";
      } else {
        SpectralSpace sp = smashing_spectrum(f);
        std::cout << text_frame_summary(f, sp, telescope_holds(spec)) << "\n";
      }
    } else if (*cmd_hasse) {
      require(which == "smashing" || which == "balmer", "USAGE",
              "--which must be smashing or balmer");
      check_format(format, {"json", "dot", "text"});
      if (which == "balmer") {
        BalmerSpace b = balmer_dual(spec);
        if (format == "dot")
          std::cout << dot_balmer(b, flip);
        else if (format == "json") {
          ordered_json doc;
          doc["spec"] = json_spec(spec);
          doc["balmer"] = json_balmer(b);
          std::cout << doc.dump(2) << "\n";
        } else
          std::cout << text_balmer(b);
      } else {
        Frame f = enumerate_frame(spec);
        if (format == "dot")
          std::cout << dot_hasse(f, flip);
        else if (format == "json") {
          ordered_json doc;
          doc["spec"] = json_spec(spec);
          doc["elements"] = json_elements(f);
          doc["covers"] = json_pairs(f.cover_edges());
          std::cout << doc.dump(2) << "\n";
        } else
          std::cout << text_hasse(f);
      }
    } else if (*cmd_spectrum) {
      require(which == "smashing" || which == "balmer", "USAGE",
              "--which must be smashing or balmer");
      check_format(format, {"json", "dot", "text"});
      if (which == "balmer") {
        BalmerSpace b = balmer_dual(spec);
        if (format == "dot")
          std::cout << dot_balmer(b, flip);
        else if (format == "json") {
          ordered_json doc;
          doc["spec"] = json_spec(spec);
          doc["balmer"] = json_balmer(b);
          std::cout << doc.dump(2) << "\n";
        } else
          std::cout << text_balmer(b);
      } else {
        Frame f = enumerate_frame(spec);
        SpectralSpace sp = smashing_spectrum(f);
        if (format == "dot")
          std::cout << dot_spectrum(f, sp, flip);
        else if (format == "json") {
          ordered_json doc;
          doc["spec"] = json_spec(spec);
          doc["spectrum"] = json_spectrum(f, sp);
          std::cout << doc.dump(2) << "\n";
        } else
          std::cout << text_spectrum(f, sp);
      }
    } else if (*cmd_balmer) {
      check_format(format, {"json", "dot", "text"});
      BalmerSpace b = balmer_dual(spec);
      if (format == "dot")
        std::cout << dot_balmer(b, flip);
      else if (format == "json") {
        ordered_json doc;
        doc["spec"] = json_spec(spec);
        doc["balmer"] = json_balmer(b);
        std::cout << doc.dump(2) << "\n";
      } else
        std::cout << text_balmer(b);
    } else if (*cmd_compare) {
      check_format(format, {"json", "text"});
      Frame f = enumerate_frame(spec);
      SpectralSpace sp = smashing_spectrum(f);
      ComparisonMap cm = comparison_map(f, sp);
      if (format == "json") {
        ordered_json doc;
        doc["spec"] = json_spec(spec);
        doc["comparison"] = json_comparison(cm, telescope_holds(spec));
        std::cout << doc.dump(2) << "\n";
      } else
        std::cout << text_comparison(f, cm);
    } else if (*cmd_telescope) {
      check_format(format, {"json", "text"});
      TelescopeVerdict tv = telescope_holds(spec);
      if (format == "json") {
        ordered_json doc;
        doc["spec"] = json_spec(spec);
        doc["telescope"] = ordered_json{{"holds", tv.holds}, {"witness", tv.witness}};
        std::cout << doc.dump(2) << "\n";
      } else
        std::cout << text_telescope(tv) << "\n";
    } else if (*cmd_label) {
      check_format(format, {"json", "text"});
      Chain x = parse_chain(spec, chain_arg);
      if (format == "json") {
        ordered_json doc;
        doc["spec"] = json_spec(spec);
        doc["chain"] = format_chain(x);
        doc["label"] = epi_label(spec, x);
        std::cout << doc.dump(2) << "\n";
      } else
        std::cout << epi_label(spec, x) << "\n";
    } else if (*cmd_check) {
      CheckReport rep = run_checks(spec);
      if (rep.all_passed()) {
        std::cout << "all checks passed (lattice laws, covers oracle, counts, points, formulas)\n";
      } else {
        for (const auto& [name, ok] : rep.suites)
          std::cerr << name << ": " << (ok ? "ok" : "FAILED") << "\n";
        for (const std::string& f : rep.failures) std::cerr << "error: " << f << "\n";
        return 2;
      }
    } else if (*cmd_group) {
      if (*cmd_valuate) {
        HahnFraction x{parse_poly(spec, poly_num_arg), HahnPoly(spec)};
        if (poly_den_arg.empty())
          poly_add_term(spec, x.den, ge_zero(spec), Rat{1, 1});
        else
          x.den = parse_poly(spec, poly_den_arg);
        auto nu = frac_valuation(spec, x);
        std::cout << (nu.has_value() ? format_group(spec, *nu) : std::string("INFINITY"))
                  << "\n";
      } else if (*cmd_decompose) {
        GroupElement v = parse_group(spec, elem_arg);
        Decomposition d = decompose_in_filter(spec, v, filter_j);
        if (d.indecomposable)
          std::cout << "INDECOMPOSABLE\n";
        else
          std::cout << "a = " << format_group(spec, d.a) << "\n"
                    << "b = " << format_group(spec, d.b) << "\n";
      } else if (*cmd_gcompare) {
        int c = lex_compare(spec, parse_group(spec, elem_arg), parse_group(spec, elem2_arg));
        std::cout << (c < 0 ? "LT" : c > 0 ? "GT" : "EQ") << "\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
