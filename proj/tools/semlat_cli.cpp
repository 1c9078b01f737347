// Command-line front end over the semlat C API.
//
// Exit codes: 0 success / verified, 1 usage, 2 counterexample or mismatch,
// 3 I/O or corrupt input.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "semlat/semlat.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitIo = 3;

struct OrderRange {
  int lo = 0;
  int hi = 0;
};

std::optional<OrderRange> parseRange(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) return std::nullopt;
      return OrderRange{v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) return std::nullopt;
    const int hi = std::stoi(b, &used);
    if (used != b.size()) return std::nullopt;
    return OrderRange{lo, hi};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// SEMLAT_MAX_N=11 or 12 unlocks the larger orders.
int maxOrder() {
  const int base = semlat_max_catalog_order(0);
  const char* env = std::getenv("SEMLAT_MAX_N");
  if (!env) return base;
  const int requested = std::atoi(env);
  if (requested > base && requested <= semlat_max_catalog_order(1)) return requested;
  return base;
}

int exitFor(semlat_status status) {
  switch (status) {
    case SEMLAT_OK: return kExitOk;
    case SEMLAT_ERR_IO:
    case SEMLAT_ERR_FORMAT:
      return kExitIo;
    default: return kExitUsage;
  }
}

int report(semlat_status status) {
  std::cerr << "error: " << semlat_status_name(status) << ": " << semlat_last_error() << '\n';
  return exitFor(status);
}

struct StringDeleter {
  void operator()(char* s) const { semlat_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct CatalogDeleter {
  void operator()(semlat_catalog* c) const { semlat_catalog_free(c); }
};
using OwnedCatalog = std::unique_ptr<semlat_catalog, CatalogDeleter>;

struct LatticeDeleter {
  void operator()(semlat_lattice* l) const { semlat_lattice_free(l); }
};

bool checkOrder(int n) {
  if (n < 2 || n > maxOrder()) {
    std::cerr << "error: n=" << n << " outside [2," << maxOrder() << "]"
              << (n > maxOrder() ? " (set SEMLAT_MAX_N to unlock 11 or 12)" : "") << '\n';
    return false;
  }
  return true;
}

semlat_format formatFor(const std::string& name) {
  if (name == "json") return SEMLAT_FORMAT_JSON;
  if (name == "csv") return SEMLAT_FORMAT_CSV;
  return SEMLAT_FORMAT_TEXT;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semlat: equations over finite semilattices and exhaustive checks"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 1;
  app.add_option("--jobs,-j", jobs, "worker threads")->check(CLI::Range(1, 256));

  int gen_n = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate the isomorph-free catalog of order n");
  gen->add_option("--n", gen_n, "order")->required();
  gen->add_option("--out,-o", gen_out, "output .slx file")->required();

  std::string profile_catalog;
  std::string profile_format = "text";
  int profile_m = 2;
  auto* profile = app.add_subcommand("profile", "emit statistics for every catalog entry");
  profile->add_option("--catalog", profile_catalog, ".slx catalog file")->required();
  profile->add_option("--format", profile_format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  profile->add_option("--m", profile_m, "largest m for inconsistent counts")
      ->check(CLI::Range(1, 3));

  std::string verify_claim = "all";
  std::string verify_range;
  int verify_m = 1;
  bool verify_timing = false;
  auto* verify = app.add_subcommand("verify", "verify theorems and the conjecture exhaustively");
  verify->add_option("--claim", verify_claim,
                     "t1, t2, t2-bounds, t4, conjecture, lemmas or all (comma-separated)");
  verify->add_option("--n", verify_range, "order or range lo..hi")->required();
  verify->add_option("--m", verify_m, "variables for t1")->check(CLI::Range(1, 6));
  verify->add_flag("--timing", verify_timing, "print elapsed time per claim");

  bool reproduce_perturb = false;
  auto* reproduce = app.add_subcommand("reproduce", "recompute the cov1 figure values");
  reproduce->add_flag("--perturb", reproduce_perturb)->group("");

  std::string show_builtin;
  std::string show_key;
  auto* show = app.add_subcommand("show", "describe a builtin or a catalog key");
  auto* builtin_opt = show->add_option("--builtin", show_builtin, "Ln, Fn or S5");
  auto* key_opt = show->add_option("--key", show_key, "canonical key (hex)");
  builtin_opt->excludes(key_opt);
  show->require_option(1);

  int ext_n = 0;
  std::string ext_catalog;
  std::string ext_metric = "sigma";
  std::string ext_direction = "min";
  auto* extremal = app.add_subcommand("extremal", "list all extremal catalog entries");
  auto* ext_n_opt = extremal->add_option("--n", ext_n, "order (catalog generated)");
  auto* ext_cat_opt = extremal->add_option("--catalog", ext_catalog, ".slx catalog file");
  ext_n_opt->excludes(ext_cat_opt);
  extremal->require_option(1, 3);
  extremal->add_option("--metric", ext_metric, "sigma, sigmaCov1 or inconsistent(m)");
  extremal->add_option("--direction", ext_direction)->check(CLI::IsMember({"min", "max"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  const int allow_large = maxOrder() > semlat_max_catalog_order(0) ? 1 : 0;

  if (*gen) {
    if (!checkOrder(gen_n)) return kExitUsage;
    semlat_catalog* raw = nullptr;
    if (auto st = semlat_catalog_generate(gen_n, jobs, allow_large, &raw); st != SEMLAT_OK) {
      return report(st);
    }
    OwnedCatalog catalog(raw);
    if (auto st = semlat_catalog_save(catalog.get(), gen_out.c_str()); st != SEMLAT_OK) {
      return report(st);
    }
    std::cout << "n=" << gen_n << " count=" << semlat_catalog_size(catalog.get()) << '\n';
    return kExitOk;
  }

  if (*profile) {
    semlat_catalog* raw = nullptr;
    if (auto st = semlat_catalog_load(profile_catalog.c_str(), &raw); st != SEMLAT_OK) {
      return report(st);
    }
    OwnedCatalog catalog(raw);
    char* text = nullptr;
    if (auto st = semlat_catalog_profile(catalog.get(), profile_m, formatFor(profile_format),
                                         jobs, &text);
        st != SEMLAT_OK) {
      return report(st);
    }
    OwnedString owned(text);
    std::cout << owned.get();
    return kExitOk;
  }

  if (*verify) {
    const auto range = parseRange(verify_range);
    if (!range || range->lo > range->hi || !checkOrder(range->lo) || !checkOrder(range->hi)) {
      if (!range || range->lo > range->hi) std::cerr << "error: bad --n '" << verify_range << "'\n";
      return kExitUsage;
    }
    semlat_report* raw = nullptr;
    if (auto st = semlat_verify(verify_claim.c_str(), range->lo, range->hi, verify_m, jobs,
                                allow_large, &raw);
        st != SEMLAT_OK) {
      return report(st);
    }
    std::unique_ptr<semlat_report, void (*)(semlat_report*)> rep(raw, semlat_report_free);
    char* text = nullptr;
    if (auto st = semlat_report_text(rep.get(), verify_timing ? 1 : 0, &text); st != SEMLAT_OK) {
      return report(st);
    }
    OwnedString owned(text);
    std::cout << owned.get();
    return semlat_report_verdict(rep.get()) == SEMLAT_COUNTEREXAMPLE ? kExitMismatch : kExitOk;
  }

  if (*reproduce) {
    int matched = 0;
    char* text = nullptr;
    if (auto st = semlat_reproduce_figures(reproduce_perturb ? 1 : 0, &matched, &text);
        st != SEMLAT_OK) {
      return report(st);
    }
    OwnedString owned(text);
    std::cout << owned.get();
    return matched ? kExitOk : kExitMismatch;
  }

  if (*show) {
    semlat_lattice* raw = nullptr;
    const semlat_status st = !show_builtin.empty()
                                 ? semlat_lattice_builtin(show_builtin.c_str(), &raw)
                                 : semlat_lattice_from_key(show_key.c_str(), &raw);
    if (st != SEMLAT_OK) {
      report(st);
      return kExitUsage;
    }
    std::unique_ptr<semlat_lattice, LatticeDeleter> lattice(raw);
    char* text = nullptr;
    if (auto s2 = semlat_lattice_describe(lattice.get(), &text); s2 != SEMLAT_OK) {
      return report(s2);
    }
    OwnedString owned(text);
    std::cout << owned.get();
    return kExitOk;
  }

  if (*extremal) {
    semlat_catalog* raw = nullptr;
    semlat_status st;
    if (!ext_catalog.empty()) {
      st = semlat_catalog_load(ext_catalog.c_str(), &raw);
    } else {
      if (!checkOrder(ext_n)) return kExitUsage;
      st = semlat_catalog_generate(ext_n, jobs, allow_large, &raw);
    }
    if (st != SEMLAT_OK) return report(st);
    OwnedCatalog catalog(raw);
    char* text = nullptr;
    if (auto s2 = semlat_catalog_find_extremal(catalog.get(), ext_metric.c_str(),
                                               ext_direction == "max" ? 1 : 0, jobs, &text);
        s2 != SEMLAT_OK) {
      return report(s2);
    }
    OwnedString owned(text);
    std::cout << owned.get();
    return kExitOk;
  }
  return kExitUsage;
}
