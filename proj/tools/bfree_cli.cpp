// Command-line front end: one subcommand per library operation, JSON by default.
//
// Exit codes: 0 ok, 1 validation, 2 depth or window insufficient, 3 budget refusal.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bfree/automorphism.hpp"
#include "bfree/counterexample.hpp"
#include "bfree/error.hpp"
#include "bfree/kernels.hpp"
#include "bfree/odometer.hpp"
#include "bfree/sequence.hpp"
#include "bfree/serialize.hpp"
#include "bfree/toeplitz.hpp"

namespace {

using bfree::Int;
using bfree::json;

enum class Format { Json, Text, Csv };

struct RunConfig {
  std::vector<Int> b{3, 5, 7};
  std::string format;  // empty: per-command default
  std::uint64_t budget = 1'000'000;
  unsigned threads = 0;

  Format output(Format fallback = Format::Json) const {
    if (format.empty()) return fallback;
    if (format == "text") return Format::Text;
    if (format == "csv") return Format::Csv;
    return Format::Json;
  }
};

struct Range {
  Int lo = 0;
  Int hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw bfree::Error(bfree::ErrorKind::InvalidArgument, "range must be lo..hi");
  try {
    return Range{std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw bfree::Error(bfree::ErrorKind::InvalidArgument, "range bounds must be integers: " + text);
  }
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BFREE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return 1'000'000;
}

int exit_code(bfree::ErrorKind kind) {
  switch (kind) {
    case bfree::ErrorKind::DepthInsufficient:
    case bfree::ErrorKind::WindowTooShort:
      return 2;
    case bfree::ErrorKind::ComplexityRefusal:
      return 3;
    default:
      return 1;
  }
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

template <typename T>
std::string join(const std::vector<T>& xs, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

std::string cells_string(const std::vector<bfree::Cell>& cells) {
  std::string s;
  for (auto c : cells) s.push_back(bfree::to_char(c));
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"B-free Toeplitz sequences: skeletons, odometer, automorphism search"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  cfg.budget = default_budget();
  app.add_option("--b", cfg.b, "odd pairwise coprime generators b_1,...,b_T")->delimiter(',');
  app.add_option("--format", cfg.format, "json | text | csv")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--budget", cfg.budget, "rule-check budget for autosearch (env BFREE_BUDGET)");
  app.add_option("--threads", cfg.threads, "search threads (0 = all cores)");

  // gen
  auto* gen = app.add_subcommand("gen", "eta on a half-open range");
  std::string range_text = "0..12";
  bool extend = false;
  gen->add_option("--range", range_text, "lo..hi")->required();
  gen->add_flag("--extend", extend, "append generators until the range is decidable");

  // skeleton / holes / gaps / regularity
  int level = 1;
  auto* skel = app.add_subcommand("skeleton", "skeleton block A_t");
  skel->add_option("--t", level)->required();
  auto* holes = app.add_subcommand("holes", "hole positions of A_t");
  holes->add_option("--t", level)->required();
  auto* gaps = app.add_subcommand("gaps", "cyclic minimal hole gap k_t");
  gaps->add_option("--t", level)->required();
  auto* regular = app.add_subcommand("regularity", "hole fraction s_t / p_t");
  regular->add_option("--t", level)->required();

  // essential / certificate
  Int candidate = 1;
  auto* essential = app.add_subcommand("essential", "witness that s < p_t is not a period of A_t's positions");
  essential->add_option("--t", level)->required();
  essential->add_option("--s", candidate)->required();
  Int position = 0;
  auto* cert = app.add_subcommand("certificate", "periodicity certificate for eta(n)");
  cert->add_option("--n", position)->required();

  // stabilizer / lift
  Int k_prime = 0;
  auto* stab = app.add_subcommand("stabilizer", "n_t in [0, p_t) fixing the hole set up to k'");
  stab->add_option("--t", level)->required();
  stab->add_option("--kprime", k_prime)->required();
  int width = 1;
  std::vector<Int> residues;
  Int integer_point = 0;
  auto* lift = app.add_subcommand("lift", "hole-alignment certificate for an odometer element");
  lift->add_option("--t", level)->required();
  lift->add_option("--width", width)->required();
  auto* lift_n = lift->add_option("--n", integer_point, "element n(1,1,...)");
  lift->add_option("--residues", residues, "explicit residues n_1,...,n_t")->delimiter(',')->excludes(lift_n);

  // taut
  auto* taut = app.add_subcommand("taut", "tautness of the depth-t truncation");
  taut->add_option("--t", level)->required();

  // autosearch
  auto* search = app.add_subcommand("autosearch", "exhaustive sliding-block endomorphism search");
  std::string source = "eta";
  Int anchors = 3;
  int horizon = 16;
  std::optional<std::string> search_range;
  std::string seed = "1";
  std::vector<int> bits;
  int cx_depth = 4;
  search->add_option("--source", source, "eta | counterexample")->check(CLI::IsMember({"eta", "counterexample"}));
  search->add_option("--t", level, "eta window radius is 5 p_t");
  search->add_option("--range", search_range, "explicit window lo..hi");
  search->add_option("--k", width, "coding width")->required();
  search->add_option("--anchors", anchors, "coding blocks stay inside [-anchors, anchors]");
  search->add_option("--horizon", horizon, "validated image factor length");
  search->add_option("--seed", seed, "counterexample seed block");
  search->add_option("--bits", bits, "counterexample fill bits c_1,c_2,...")->delimiter(',');
  search->add_option("--depth", cx_depth, "counterexample span depth (window [0, 4|A_depth|))");

  // counterexample
  auto* cx = app.add_subcommand("counterexample", "complement-closed Toeplitz construction");
  std::optional<std::string> cx_range;
  std::optional<int> closure_len;
  cx->add_option("--seed", seed);
  cx->add_option("--bits", bits)->delimiter(',');
  cx->add_option("--depth", cx_depth);
  cx->add_option("--range", cx_range, "also emit the sequence on lo..hi");
  cx->add_option("--closure", closure_len, "run the complement-closure check for this word length");

  // odometer
  auto* odo = app.add_subcommand("odometer", "odometer element arithmetic and classification");
  int odo_depth = 3;
  Int add_n = 0;
  bool classify = false;
  std::optional<int> shifted_level;
  std::optional<std::string> point_range;
  auto* odo_n = odo->add_option("--n", integer_point, "element n(1,1,...)");
  odo->add_option("--residues", residues, "explicit residues")->delimiter(',')->excludes(odo_n);
  odo->add_option("--depth", odo_depth);
  odo->add_option("--add", add_n, "add the integer m before reporting");
  odo->add_flag("--classify", classify);
  odo->add_option("--skeleton", shifted_level, "emit A_t(g) for this level");
  odo->add_option("--point", point_range, "emit x(g) on lo..hi");

  // complement criterion
  auto* comp = app.add_subcommand("complement", "is the Boolean complement an automorphism?");
  std::vector<Int> literal;
  comp->add_option("--literal", literal, "test a literal finite set instead of {2^i b_i}")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  // gen dumps the bare window unless asked otherwise.
  const Format fmt = cfg.output(gen->parsed() ? Format::Text : Format::Json);
  try {
    if (cfg.budget == 0) throw bfree::Error(bfree::ErrorKind::InvalidArgument, "budget must be positive");
    // The complement subcommand accepts literal sets that are not families.
    if (comp->parsed() && !literal.empty()) {
      const auto r = bfree::complement_membership(literal);
      emit(json{{"member", r.member}, {"case", r.dichotomy_case}, {"reason", r.reason},
                {"coprime_pair", r.coprime_pair}, {"checked_span", r.checked_span}});
      return 0;
    }
    const bfree::Family family = bfree::Family::make(cfg.b);

    if (gen->parsed()) {
      const Range r = parse_range(range_text);
      const bfree::Family f = extend ? family.extended_for_range(r.lo, r.hi) : family;
      const bfree::SymbolWindow w = bfree::eta_window(f, r.lo, r.hi);
      if (fmt == Format::Json) {
        emit(json{{"start", w.start}, {"symbols", w.to_string()}});
      } else if (fmt == Format::Csv) {
        std::cout << "n,eta\n";
        for (Int n = w.start; n < w.end(); ++n) std::cout << n << ',' << int(w.at(n)) << '\n';
      } else {
        std::cout << w.to_string() << '\n';
      }
    } else if (skel->parsed()) {
      const auto block = bfree::skeleton_exact(family, level);
      if (fmt == Format::Text) {
        std::cout << block.cells_string() << '\n';
      } else {
        emit(bfree::to_json(block));
      }
    } else if (holes->parsed()) {
      const auto block = bfree::skeleton_exact(family, level);
      if (fmt == Format::Csv) {
        std::cout << "index,position\n";
        for (std::size_t i = 0; i < block.holes.size(); ++i) std::cout << i + 1 << ',' << block.holes[i] << '\n';
      } else if (fmt == Format::Text) {
        std::cout << join(block.holes, " ") << '\n';
      } else {
        emit(bfree::holes_json(block));
      }
    } else if (gaps->parsed()) {
      emit(json{{"t", level}, {"k_t", bfree::sh_gap(family, level)}});
    } else if (regular->parsed()) {
      const auto r = bfree::regularity_ratio(family, level);
      emit(json{{"t", level}, {"ratio", bfree::to_json(r)}, {"bound", bfree::to_json(bfree::Rational(1, Int{1} << level))}});
    } else if (essential->parsed()) {
      const auto w = bfree::essential_check(family, level, candidate);
      emit(json{{"t", level}, {"s", candidate}, {"violated", w.essential_violated_by_s}, {"witness", w.witness},
                {"step", w.step}});
    } else if (cert->parsed()) {
      const auto c = bfree::period_certificate(family, position);
      emit(json{{"position", c.position}, {"period", c.period},
                {"kind", c.kind == bfree::PeriodCertificate::Kind::Zero ? "zero" : "one"}, {"witness", c.witness}});
    } else if (stab->parsed()) {
      const auto s = bfree::hole_stabilizer(family, level, k_prime);
      if (fmt == Format::Text) {
        std::cout << join(s, " ") << '\n';
      } else {
        emit(json{{"t", level}, {"k_prime", k_prime}, {"stabilizer", s}});
      }
    } else if (lift->parsed()) {
      const auto h = residues.empty() ? bfree::OdometerElement::from_integer(family, integer_point, level)
                                      : bfree::OdometerElement::make(family, residues);
      const auto c = bfree::alignment_certificate(family, level, width, h);
      json out{{"t", level}, {"width", width}, {"element", bfree::to_json(h)}};
      out["k_prime"] = c ? json(c->k_prime) : json(nullptr);
      if (c) out["divisible"] = bfree::divisibility_check(family, level, h.residue(level), c->k_prime);
      emit(out);
    } else if (taut->parsed()) {
      const auto r = bfree::taut_check_truncated(family, level);
      if (fmt == Format::Text) {
        std::cout << "base " << r.base_density.to_string() << '\n';
        for (const auto& d : r.densities_after_removal) std::cout << "removal " << d.to_string() << '\n';
        std::cout << (r.is_taut_at_t ? "taut" : "not taut") << '\n';
      } else {
        emit(bfree::to_json(r));
      }
    } else if (search->parsed()) {
      bfree::SymbolWindow window;
      if (source == "counterexample") {
        bfree::ToeplitzConstruction c{seed, bits, cx_depth};
        const Int span = 4 * bfree::build_blocks(c).back().period;
        const Range r = search_range ? parse_range(*search_range) : Range{0, span};
        c.depth = bfree::depth_to_fill(c, r.hi);
        window = bfree::window_of(c, r.lo, r.hi);
      } else {
        const Int radius = 5 * family.period(level);
        const Range r = search_range ? parse_range(*search_range) : Range{-radius, radius};
        window = bfree::eta_window(family.extended_for_range(r.lo, r.hi), r.lo, r.hi);
      }
      bfree::SearchOptions opts;
      opts.width = width;
      opts.anchor_radius = anchors;
      opts.horizon = horizon;
      opts.budget = cfg.budget;
      opts.threads = cfg.threads;
      const auto report = bfree::endomorphism_search(window, opts);
      if (fmt == Format::Csv) {
        std::cout << "rule_index,anchor,class,shift\n";
        for (const auto& s : report.survivors) {
          std::cout << s.code.rule << ',' << s.code.anchor << ',' << bfree::to_string(s.cls) << ',' << s.shift << '\n';
        }
      } else {
        emit(bfree::to_json(report));
      }
    } else if (cx->parsed()) {
      const bfree::ToeplitzConstruction c{seed, bits, cx_depth};
      const auto blocks = bfree::build_blocks(c);
      json out{{"seed", seed}, {"depth", cx_depth}};
      json arr = json::array();
      for (const auto& b : blocks) arr.push_back(bfree::to_json(b));
      out["blocks"] = std::move(arr);
      if (cx_range) {
        const Range r = parse_range(*cx_range);
        out["window"] = json{{"start", r.lo}, {"symbols", bfree::window_of(c, r.lo, r.hi).to_string()}};
      }
      if (closure_len) {
        bfree::ToeplitzConstruction deep = c;
        deep.depth = bfree::depth_to_fill(c, 4 * blocks.back().period);
        out["complement_closed"] = bfree::complement_closure_check(deep, *closure_len, cx_depth);
      }
      if (fmt == Format::Text) {
        for (const auto& b : blocks) std::cout << b.cells_string() << '\n';
      } else {
        emit(out);
      }
    } else if (odo->parsed()) {
      auto g = residues.empty() ? bfree::OdometerElement::from_integer(family, integer_point, odo_depth)
                                : bfree::OdometerElement::make(family, residues);
      if (add_n != 0) g = g + bfree::OdometerElement::from_integer(family, add_n, g.depth());
      json out = bfree::to_json(g);
      if (classify) {
        const auto c = bfree::classify_at_depth(family, g);
        out["in_G2"] = c.in_g2;
        out["G1_witness"] = c.g1_witness ? json(*c.g1_witness) : json(nullptr);
        out["in_G0_at_depth"] = c.in_g0_at_depth;
      }
      if (shifted_level) out["skeleton"] = bfree::to_json(bfree::shifted_skeleton(family, *shifted_level, g));
      if (point_range) {
        const Range r = parse_range(*point_range);
        out["point"] = json{{"start", r.lo}, {"cells", cells_string(bfree::point_of(family, g, r.lo, r.hi))}};
      }
      emit(out);
    } else if (comp->parsed()) {
      const auto r = bfree::complement_membership(family);
      emit(json{{"member", r.member}, {"case", r.dichotomy_case}, {"reason", r.reason},
                {"ones_pair_at", r.ones_pair_at ? json(*r.ones_pair_at) : json(nullptr)},
                {"zero_pair_absent", r.zero_pair_absent}, {"checked_span", r.checked_span}});
    }
  } catch (const bfree::DepthInsufficient& e) {
    std::cerr << "error: " << e.what() << "\nfailing index: " << e.position() << '\n';
    return 2;
  } catch (const bfree::Error& e) {
    std::cerr << "error (" << bfree::to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 0;
}
