// freeshift command-line tool.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "freeshift/dynprops.hpp"
#include "freeshift/error.hpp"
#include "freeshift/freext.hpp"
#include "freeshift/io.hpp"
#include "freeshift/zline.hpp"
#include "freeshift_tools/suites.hpp"

namespace fs = freeshift;

namespace {

struct Globals {
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::string format = "text";

  bool tsv() const { return format == "tsv"; }

  fs::Limits limits() const {
    fs::Limits l;
    if (budget) {
      l.candidate_budget = budget;
    } else if (const char* env = std::getenv("FREESHIFT_BUDGET")) {
      try {
        l.candidate_budget = std::stoull(env);
      } catch (const std::exception&) {
        throw fs::InputError(std::string("FREESHIFT_BUDGET is not a number: ") + env);
      }
    }
    return l;
  }
};

std::string fixed6(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

std::string entropy_line(const fs::EntropyValue& h, bool tsv) {
  return tsv ? h.to_string() + "\t" + fixed6(h.to_double()) : h.to_string() + " ≈ " + fixed6(h.to_double());
}

void print_table(const std::vector<std::pair<std::string, std::string>>& rows, const std::string& a,
                 const std::string& b, bool tsv) {
  if (tsv) {
    std::cout << a << '\t' << b << '\n';
    for (const auto& [x, y] : rows) std::cout << x << '\t' << y << '\n';
    return;
  }
  std::size_t w = a.size();
  for (const auto& r : rows) w = std::max(w, r.first.size());
  std::cout << std::left << std::setw(static_cast<int>(w)) << a << "  " << b << '\n';
  for (const auto& [x, y] : rows) std::cout << std::left << std::setw(static_cast<int>(w)) << x << "  " << y << '\n';
}

std::string group_line(const fs::GroupPtr& g) {
  if (*g == *fs::cyclic(g->order())) return "group cyclic " + std::to_string(g->order());
  std::ostringstream os;
  os << "group table " << g->order() << '\n';
  for (fs::Element a = 0; a < g->order(); ++a) {
    for (fs::Element b = 0; b < g->order(); ++b) os << (b ? " " : "") << g->mul(a, b);
    os << '\n';
  }
  return os.str();
}

std::vector<fs::Element> parse_elements(const std::string& text) {
  std::vector<fs::Element> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    try {
      out.push_back(static_cast<fs::Element>(std::stoul(tok)));
    } catch (const std::exception&) {
      throw fs::InputError("not an element index: '" + tok + "'");
    }
  }
  return out;
}

int report(const fs::PropertyReport& r) {
  std::cout << fs::format_property(r);
  return r.pass ? 0 : 1;
}

int cmd_check(const std::string& what, const std::string& file, const std::string& k_text, bool minimal,
              std::uint64_t grid, const Globals& g) {
  const fs::Limits limits = g.limits();
  const fs::ShiftSpace y = fs::enumerate_sft(fs::load_sft(file), limits);
  if (what == "si") {
    std::vector<fs::Element> k = k_text.empty() ? std::vector<fs::Element>{y.group()->identity()} : parse_elements(k_text);
    const fs::SiVerdict v = fs::strongly_irreducible_witness(y, k, minimal, limits);
    fs::PropertyReport r{"strongly-irreducible", v.holds, {}};
    if (v.counterexample) {
      r.witnesses.push_back("u\n" + fs::format_pattern(v.counterexample->u, y.alphabet()));
      r.witnesses.push_back("v\n" + fs::format_pattern(v.counterexample->v, y.alphabet()));
    }
    for (const auto& w : v.minimal_witnesses) {
      std::string s = "minimal K";
      for (auto e : w) s += " " + std::to_string(e);
      r.witnesses.push_back(s);
    }
    return report(r);
  }
  if (what == "entmin") {
    const auto v = fs::is_entropy_minimal(y, limits);
    fs::PropertyReport r{"entropy-minimal", v.minimal, {}};
    if (v.counterexample) r.witnesses.push_back("subshift\n" + fs::format_space_body(*v.counterexample));
    return report(r);
  }
  if (what == "zero") {
    const auto c = fs::zero_entropy_classify(y);
    fs::PropertyReport r{"zero-entropy-classification", c != fs::ZeroEntropyClass::kZeroNotSingleton,
                         {"class " + fs::to_string(c), "entropy " + fs::entropy(y).to_string()}};
    if (c == fs::ZeroEntropyClass::kSingletonFixedPoint)
      r.witnesses.push_back("fixed point\n" + fs::format_pattern(y.pattern(0), y.alphabet()));
    return report(r);
  }
  if (what == "aut") {
    const auto aut = fs::automorphism_group(y, limits);
    bool ok = true;
    for (const auto& p : aut.elements) ok = ok && fs::commutes_with_shifts(y, p);
    fs::PropertyReport r{"automorphism-group", ok, {"order " + std::to_string(aut.order())}};
    for (std::size_t i = 0; i < aut.order(); ++i) {
      std::string s = "a" + std::to_string(i) + " =";
      for (auto v : aut.elements[i]) s += " " + std::to_string(v);
      r.witnesses.push_back(s);
    }
    std::string table = "composition";
    for (std::size_t i = 0; i < aut.order(); ++i) {
      table += "\n";
      for (std::size_t j = 0; j < aut.order(); ++j) table += (j ? " " : "") + std::to_string(aut.table[i][j]);
    }
    r.witnesses.push_back(table);
    return report(r);
  }
  if (what == "mme") {
    const auto rep = fs::mme_unique_check(y, grid, limits);
    fs::PropertyReport r{"unique-mme", rep.unique,
                         {"entropy " + fixed6(rep.entropy), "uniform attains " + std::string(rep.uniform_attains ? "yes" : "no"),
                          "grid points " + std::to_string(rep.grid_points),
                          "maximizers " + std::to_string(rep.maximizers.size()),
                          "best non-uniform " + fixed6(rep.best_non_uniform)}};
    for (const auto& masses : rep.maximizers) {
      std::string line = "orbit masses";
      for (const auto& m : masses) line += " " + m.str();
      r.witnesses.push_back(line);
    }
    return report(r);
  }
  throw fs::InputError("unknown check '" + what + "' (si, entmin, zero, aut, mme)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shift spaces on finite groups and their free extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--budget", g.budget, "Candidate budget (overrides FREESHIFT_BUDGET)");
  app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "tsv"}))->capture_default_str();

  int code = 0;

  auto* group = app.add_subcommand("group", "Group files");
  group->require_subcommand(1);
  std::string group_file;
  auto* group_validate = group->add_subcommand("validate", "Parse and validate a group file");
  group_validate->add_option("file", group_file)->required();
  group_validate->callback([&] {
    const auto grp = fs::load_group(group_file);
    std::cout << "group order " << grp->order() << "\n"
              << "abelian " << (grp->is_abelian() ? "yes" : "no") << "\n"
              << "exponent " << grp->exponent() << "\n";
  });

  auto* sft = app.add_subcommand("sft", "SFT files");
  sft->require_subcommand(1);
  std::string sft_file;
  auto* sft_enum = sft->add_subcommand("enum", "Enumerate an SFT");
  sft_enum->add_option("file", sft_file)->required();
  sft_enum->callback([&] {
    const auto y = fs::enumerate_sft(fs::load_sft(sft_file), g.limits());
    if (g.tsv()) {
      for (const auto& x : y.configs()) {
        for (std::size_t i = 0; i < x.size(); ++i) std::cout << (i ? "\t" : "") << y.alphabet().name(x[i]);
        std::cout << '\n';
      }
      return;
    }
    std::cout << "configurations " << y.size() << '\n' << fs::format_space_body(y);
  });
  auto* sft_entropy = sft->add_subcommand("entropy", "Exact entropy of an SFT");
  sft_entropy->add_option("file", sft_file)->required();
  sft_entropy->callback([&] {
    const auto y = fs::enumerate_sft(fs::load_sft(sft_file), g.limits());
    std::cout << entropy_line(fs::entropy(y), g.tsv()) << '\n';
  });

  std::string ext_sft, ext_tower;
  std::size_t ext_from = 0, ext_to = 0;
  auto* extend = app.add_subcommand("extend", "Free extension of an SFT along a tower");
  extend->add_option("sft", ext_sft)->required();
  extend->add_option("tower", ext_tower)->required();
  extend->add_option("from", ext_from)->required();
  extend->add_option("to", ext_to)->required();
  extend->callback([&] {
    const auto limits = g.limits();
    const auto tower = fs::load_tower(ext_tower);
    const auto y = fs::enumerate_sft(fs::load_sft(ext_sft), limits);
    const auto x = fs::tower_extend(y, tower, ext_from, ext_to, limits);
    std::cout << "space\n" << group_line(x.group()) << (group_line(x.group()).back() == '\n' ? "" : "\n")
              << fs::format_space_body(x);
    std::cerr << "configurations " << x.size() << ", entropy " << entropy_line(fs::entropy(x), false) << '\n';
  });

  std::string ex_space, ex_tower, ex_shape;
  std::size_t ex_level = 0;
  auto* extract = app.add_subcommand("extract", "Recover the base SFT of a free extension");
  extract->add_option("space", ex_space)->required();
  extract->add_option("tower", ex_tower)->required();
  extract->add_option("level", ex_level)->required();
  extract->add_option("--shape", ex_shape, "Forbidden shape of the space, comma separated (default: whole group)");
  extract->callback([&] {
    const auto limits = g.limits();
    const auto tower = fs::load_tower(ex_tower);
    const auto x = fs::load_space(ex_space);
    std::size_t top = tower.size();
    for (std::size_t j = tower.size(); j-- > ex_level;)
      if (fs::same_group(tower.level(j), x.group())) {
        top = j;
        break;
      }
    if (top == tower.size()) throw fs::InputError("the space's group is not a tower level at or above " + std::to_string(ex_level));
    std::vector<fs::Element> shape = parse_elements(ex_shape);
    if (ex_shape.empty())
      for (fs::Element e = 0; e < x.group()->order(); ++e) shape.push_back(e);
    const auto ctx = fs::ExtensionContext::from_tower(tower, ex_level, top);
    const auto spec = fs::base_extract(x, shape, ctx, limits);
    std::string gl = group_line(spec.group);
    std::cout << "sft\n" << gl << (gl.back() == '\n' ? "" : "\n") << "alphabet";
    for (const auto& s : spec.alphabet.symbols()) std::cout << ' ' << s;
    std::cout << "\nshape";
    for (auto e : spec.shape) std::cout << ' ' << e;
    std::cout << '\n';
    for (const auto& row : spec.forbidden) {
      std::cout << "forbid";
      for (auto s : row) std::cout << ' ' << spec.alphabet.name(s);
      std::cout << '\n';
    }
  });

  std::string check_what, check_file, check_k;
  bool check_minimal = false;
  std::uint64_t check_grid = 100;
  auto* check = app.add_subcommand("check", "Check a dynamical property of an SFT");
  check->add_option("property", check_what, "si | entmin | zero | aut | mme")
      ->required()
      ->check(CLI::IsMember({"si", "entmin", "zero", "aut", "mme"}));
  check->add_option("sft", check_file)->required();
  check->add_option("--k", check_k, "SI witness set, comma separated (default: identity)");
  check->add_flag("--minimal", check_minimal, "SI: list all inclusion-minimal witness sets");
  check->add_option("--grid", check_grid, "MME: simplex grid resolution")->capture_default_str();
  check->callback([&] { code = cmd_check(check_what, check_file, check_k, check_minimal, check_grid, g); });

  std::string es_tower;
  std::size_t es_level = 0;
  std::uint64_t es_n = 1;
  bool es_fast = false;
  auto* eset = app.add_subcommand("entropy-set", "Entropy values realized along a tower");
  eset->add_option("tower", es_tower)->required();
  eset->add_option("--max-level", es_level)->required();
  eset->add_option("--max-n", es_n)->required();
  eset->add_flag("--fast", es_fast, "Use tower levels and the trivial group only");
  eset->callback([&] {
    for (const auto& h : fs::entropy_set(fs::load_tower(es_tower), es_level, es_n, es_fast))
      std::cout << entropy_line(h, g.tsv()) << '\n';
  });

  std::string z_what;
  std::size_t z_n = 0;
  auto* zline = app.add_subcommand("zline", "Golden mean and even shift tables");
  zline->add_option("demo", z_what, "golden | even | gap")->required()->check(CLI::IsMember({"golden", "even", "gap"}));
  zline->add_option("n", z_n, "Largest n (golden, even) or k (gap)");
  zline->callback([&] {
    std::vector<std::pair<std::string, std::string>> rows;
    if (z_what == "golden") {
      const std::size_t top = z_n ? z_n : 20;
      for (std::size_t n = 3; n <= top; ++n)
        rows.emplace_back(std::to_string(n), fixed6(fs::golden_mean_entropy_estimate(n)));
      print_table(rows, "n", "estimate", g.tsv());
      if (!g.tsv()) std::cout << "# log(phi) = " << fixed6(fs::log_phi()) << '\n';
    } else if (z_what == "even") {
      const std::size_t top = z_n ? z_n : 12;
      for (std::size_t n = 1; n <= top; ++n) {
        const auto v = fs::even_cover_factor_check(n);
        if (!v.agree) {
          std::cerr << "even cover mismatch at n = " << n << ", witness " << v.witness->to_string() << '\n';
          code = 1;
        }
        rows.emplace_back(std::to_string(n), fixed6(std::log(static_cast<double>(v.language_size)) / static_cast<double>(n)));
      }
      print_table(rows, "n", "estimate", g.tsv());
    } else {
      const std::size_t top = z_n ? z_n : 10;
      for (std::size_t k = 2; k <= top; ++k) rows.emplace_back(std::to_string(k), fs::sft_gap_witness(k).to_string());
      print_table(rows, "k", "witness", g.tsv());
    }
  });

  std::string suite;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> choices = freeshift::tools::suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(choices));
  verify->add_flag("--timings", timings, "Include wall time per check");
  verify->callback([&] {
    freeshift::tools::SuiteOptions opts;
    opts.seed = g.seed;
    opts.limits = g.limits();
    const std::vector<std::string> names = suite == "all" ? freeshift::tools::suite_names() : std::vector{suite};
    for (const auto& n : names) {
      const auto rep = freeshift::tools::run_suite(n, opts);
      std::cout << freeshift::tools::format_suite(rep, timings);
      if (!rep.pass()) code = 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const fs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return code;
}
