#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "latsq/core.hpp"
#include "latsq/harness.hpp"
#include "latsq/isotopy.hpp"
#include "latsq/mappings.hpp"
#include "latsq/prolong.hpp"

// Exit codes: 0 success, 1 negative verdict (invalid square, not isotopic,
// conjecture witness found), 2 input or usage error.
namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw latsq::ParseError("cannot open '" + path + "'");
  return in;
}

latsq::LatinSquare load_square(const std::string& path) {
  auto in = open_or_throw(path);
  try {
    return latsq::parse_square(in);
  } catch (const latsq::ParseError& e) {
    throw latsq::ParseError(path + ": " + e.what());
  }
}

int run_validate(const std::string& path) {
  auto in = open_or_throw(path);
  latsq::Grid grid = latsq::parse_grid(in);
  const latsq::Validity v = latsq::validate(grid);
  if (v.ok()) {
    std::cout << "valid\n";
    return kOk;
  }
  std::cout << "invalid: " << v.message() << "\n";
  return kNegative;
}

int run_mappings(const std::string& path, const std::string& kind, std::optional<int> limit) {
  const latsq::LatinSquare square = load_square(path);
  if (kind == "complete" || kind == "all") {
    for (const auto& sigma : latsq::find_complete_mappings(square, limit))
      std::cout << (kind == "all" ? "complete " : "") << sigma.to_string() << "\n";
  }
  if (kind == "quasicomplete" || kind == "all") {
    for (const auto& sigma : latsq::find_quasicomplete_mappings(square, limit))
      std::cout << (kind == "all" ? "quasicomplete " : "") << sigma.to_string() << "\n";
  }
  return kOk;
}

int run_prolong(const std::string& path, const std::string& method,
                const std::string& sigma_text, std::optional<int> a, std::optional<int> x1) {
  const latsq::LatinSquare square = load_square(path);

  std::optional<latsq::Permutation> sigma;
  if (!sigma_text.empty()) {
    sigma = latsq::Permutation::parse(sigma_text);
    if (sigma->order() != square.order())
      throw latsq::ParseError("sigma has order " + std::to_string(sigma->order()) +
                              ", square has order " + std::to_string(square.order()));
  }

  latsq::Prolongation result = [&] {
    if (method == "dd") {
      if (!sigma) {
        auto found = latsq::find_quasicomplete_mappings(square, 1);
        if (found.empty())
          throw latsq::ParseError("square has no quasicomplete mapping");
        sigma = found.front();
      }
      if (!x1) {
        const auto cls = latsq::classify(square, *sigma);
        if (cls.kind != latsq::MappingKind::quasicomplete)
          throw latsq::ParseError("sigma is not quasicomplete");
        x1 = std::min(cls.special_preimages->first, cls.special_preimages->second);
      }
      return latsq::prolong_deriyenko_dudek(square, *sigma, *x1);
    }
    if (!sigma) {
      auto found = latsq::find_complete_mappings(square, 1);
      if (found.empty()) throw latsq::ParseError("square has no complete mapping");
      sigma = found.front();
    }
    if (method == "classical") return latsq::prolong_classical(square, *sigma);
    if (!a) throw latsq::ParseError("--method belyavskaya requires --a");
    return latsq::prolong_belyavskaya(square, *sigma, *a);
  }();

  latsq::serialize(result, std::cout);
  return kOk;
}

int run_prolong_any(const std::string& path) {
  latsq::serialize(latsq::prolong_any(load_square(path)), std::cout);
  return kOk;
}

int run_isotopy(const std::string& path1, const std::string& path2) {
  const latsq::LatinSquare first = load_square(path1);
  const latsq::LatinSquare second = load_square(path2);
  const auto witness = latsq::are_isotopic(first, second);
  if (!witness) {
    std::cout << "not-isotopic\n";
    return kNegative;
  }
  std::cout << "isotopic\n"
            << witness->alpha.to_string() << "\n"
            << witness->beta.to_string() << "\n"
            << witness->gamma.to_string() << "\n";
  return kOk;
}

int run_brualdi(int order, int threads) {
  const latsq::ScanReport report = latsq::brualdi_scan(order, threads);
  std::cout << "order " << report.order << "\n"
            << "squares-scanned " << report.squares_scanned << "\n"
            << "min-max-transversal " << report.min_max_transversal << "\n"
            << "witnesses " << report.witnesses.size() << "\n";
  for (const auto& [square, length] : report.witnesses) {
    std::cout << "# maximum transversal " << length << "\n";
    latsq::serialize(square, std::cout);
  }
  return report.witnesses.empty() ? kOk : kNegative;
}

int run_gen(std::optional<int> cyclic, bool klein) {
  if (klein == cyclic.has_value())
    throw latsq::ParseError("pass exactly one of --cyclic N or --klein");
  const latsq::LatinSquare table = klein ? latsq::klein_table() : latsq::cyclic_table(*cyclic);
  latsq::serialize(table, std::cout);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Latin square prolongation toolkit"};
  app.require_subcommand(1);

  std::string file, file2, kind = "all", method, sigma_text;
  std::optional<int> limit, a, x1, cyclic;
  int order = 0, threads = 0;
  bool klein = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check the Latin property of a file");
  validate_cmd->add_option("file", file, "square file")->required();

  auto* mappings_cmd =
      app.add_subcommand("mappings", "List complete/quasicomplete mappings of a square");
  mappings_cmd->add_option("file", file, "square file")->required();
  mappings_cmd->add_option("--kind", kind, "complete|quasicomplete|all")
      ->check(CLI::IsMember({"complete", "quasicomplete", "all"}));
  mappings_cmd->add_option("--limit", limit, "stop each list after K results");

  auto* prolong_cmd = app.add_subcommand("prolong", "Extend a square by one element");
  prolong_cmd->add_option("file", file, "square file")->required();
  prolong_cmd->add_option("--method", method, "classical|belyavskaya|dd")
      ->required()
      ->check(CLI::IsMember({"classical", "belyavskaya", "dd"}));
  prolong_cmd->add_option("--sigma", sigma_text,
                          "mapping, e.g. 4,2,1,5,3; first eligible one when omitted");
  prolong_cmd->add_option("--a", a, "special element (belyavskaya)");
  prolong_cmd->add_option("--x1", x1,
                          "kept preimage (dd); least preimage when omitted");

  auto* any_cmd = app.add_subcommand("prolong-any", "Extend via a maximum transversal");
  any_cmd->add_option("file", file, "square file")->required();

  auto* isotopy_cmd = app.add_subcommand("isotopy", "Decide isotopy of two squares");
  isotopy_cmd->add_option("file1", file, "first square")->required();
  isotopy_cmd->add_option("file2", file2, "second square")->required();

  auto* brualdi_cmd =
      app.add_subcommand("brualdi", "Scan all reduced squares of an order for short maxima");
  brualdi_cmd->add_option("--order", order, "order to scan (1..6)")->required();
  brualdi_cmd->add_option("--threads", threads, "worker count; 0 = auto");

  auto* gen_cmd = app.add_subcommand("gen", "Print a group table");
  gen_cmd->add_option("--cyclic", cyclic, "cyclic group order");
  gen_cmd->add_flag("--klein", klein, "Klein four-group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return run_validate(file);
    if (app.got_subcommand(mappings_cmd)) return run_mappings(file, kind, limit);
    if (app.got_subcommand(prolong_cmd)) return run_prolong(file, method, sigma_text, a, x1);
    if (app.got_subcommand(any_cmd)) return run_prolong_any(file);
    if (app.got_subcommand(isotopy_cmd)) return run_isotopy(file, file2);
    if (app.got_subcommand(brualdi_cmd)) return run_brualdi(order, threads);
    if (app.got_subcommand(gen_cmd)) return run_gen(cyclic, klein);
  } catch (const latsq::BrualdiCounterexample& e) {
    std::cerr << "CONJECTURE WITNESS: " << e.what() << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
