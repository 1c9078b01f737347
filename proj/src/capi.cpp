#include "semlat/semlat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "semlat/canonical.hpp"
#include "semlat/catalog.hpp"
#include "semlat/equations.hpp"
#include "semlat/extremal.hpp"
#include "semlat/figures.hpp"
#include "semlat/formats.hpp"

struct semlat_lattice {
  semlat::Semilattice value;
  std::vector<std::string> names;
};

struct semlat_catalog {
  semlat::Catalog value;
};

struct semlat_report {
  std::vector<semlat::VerificationReport> reports;
};

namespace {

thread_local std::string g_last_error;

semlat_status statusFor(semlat::ErrorCode code) {
  using semlat::ErrorCode;
  switch (code) {
    case ErrorCode::kNotCommutative:
    case ErrorCode::kNotAssociative:
    case ErrorCode::kNotIdempotent:
    case ErrorCode::kNoTop:
    case ErrorCode::kNoBottom:
    case ErrorCode::kEntryOutOfRange:
      return SEMLAT_ERR_VALIDATION;
    case ErrorCode::kOrderTooSmall:
    case ErrorCode::kOrderTooLarge:
      return SEMLAT_ERR_ORDER_RANGE;
    case ErrorCode::kFormatError: return SEMLAT_ERR_FORMAT;
    case ErrorCode::kIoError: return SEMLAT_ERR_IO;
    case ErrorCode::kUnknownMetric: return SEMLAT_ERR_UNKNOWN_METRIC;
    case ErrorCode::kMTooLarge:
    case ErrorCode::kIndexOutOfRange:
    case ErrorCode::kInvalidArgument:
      return SEMLAT_ERR_INVALID_ARGUMENT;
  }
  return SEMLAT_ERR_INTERNAL;
}

semlat_status fail(semlat_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
semlat_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const semlat::Error& e) {
    return fail(statusFor(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SEMLAT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SEMLAT_ERR_INTERNAL, e.what());
  }
}

char* copyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define SEMLAT_REQUIRE(cond)                                                \
  do {                                                                      \
    if (!(cond)) return fail(SEMLAT_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

semlat_lattice* wrap(semlat::Semilattice s, std::vector<std::string> names = {}) {
  return new semlat_lattice{std::move(s), std::move(names)};
}

semlat_status checkElement(const semlat_lattice* l, int s) {
  if (s < 0 || s >= l->value.order()) {
    return fail(SEMLAT_ERR_INVALID_ARGUMENT, "element " + std::to_string(s) + " out of range");
  }
  return SEMLAT_OK;
}

std::optional<int> parseOrderSuffix(const char* text) {
  if (!*text) return std::nullopt;
  int v = 0;
  for (const char* p = text; *p; ++p) {
    if (*p < '0' || *p > '9' || v > 100) return std::nullopt;
    v = v * 10 + (*p - '0');
  }
  return v;
}

}  // namespace

extern "C" {

const char* semlat_version(void) { return "1.0.0"; }

const char* semlat_last_error(void) { return g_last_error.c_str(); }

const char* semlat_status_name(semlat_status status) {
  switch (status) {
    case SEMLAT_OK: return "ok";
    case SEMLAT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SEMLAT_ERR_VALIDATION: return "validation error";
    case SEMLAT_ERR_ORDER_RANGE: return "order out of range";
    case SEMLAT_ERR_FORMAT: return "format error";
    case SEMLAT_ERR_IO: return "i/o error";
    case SEMLAT_ERR_UNKNOWN_METRIC: return "unknown metric";
    case SEMLAT_ERR_NOT_FOUND: return "not found";
    case SEMLAT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void semlat_string_free(char* s) { std::free(s); }

int semlat_max_catalog_order(int allow_large) {
  return allow_large ? semlat::kMaxOrder : semlat::kDefaultMaxCatalogOrder;
}

semlat_status semlat_lattice_from_table(int n, const uint8_t* table, semlat_lattice** out) {
  SEMLAT_REQUIRE(table && out);
  return guarded([&] {
    if (n < 2 || n > semlat::kMaxOrder) {
      return fail(SEMLAT_ERR_ORDER_RANGE, "order " + std::to_string(n) + " outside [2,12]");
    }
    *out = wrap(semlat::Semilattice::fromTable(
        n, std::span<const semlat::Element>(table, static_cast<std::size_t>(n * n))));
    return SEMLAT_OK;
  });
}

semlat_status semlat_lattice_chain(int n, semlat_lattice** out) {
  SEMLAT_REQUIRE(out);
  return guarded([&] {
    *out = wrap(semlat::makeChain(n), semlat::chainNames(n));
    return SEMLAT_OK;
  });
}

semlat_status semlat_lattice_fan(int n, semlat_lattice** out) {
  SEMLAT_REQUIRE(out);
  return guarded([&] {
    *out = wrap(semlat::makeFan(n), semlat::fanNames(n));
    return SEMLAT_OK;
  });
}

semlat_status semlat_lattice_builtin(const char* name, semlat_lattice** out) {
  SEMLAT_REQUIRE(name && out);
  if (std::strcmp(name, "S5") == 0) {
    return guarded([&] {
      *out = wrap(semlat::makeDiamondWithTail(), {"0", "b", "c", "d", "1"});
      return SEMLAT_OK;
    });
  }
  const auto n = parseOrderSuffix(name + (*name ? 1 : 0));
  if (n && (name[0] == 'L' || name[0] == 'l')) return semlat_lattice_chain(*n, out);
  if (n && (name[0] == 'F' || name[0] == 'f')) return semlat_lattice_fan(*n, out);
  return fail(SEMLAT_ERR_NOT_FOUND, std::string("unknown builtin '") + name + "' (Ln, Fn, S5)");
}

semlat_status semlat_lattice_from_key(const char* hex, semlat_lattice** out) {
  SEMLAT_REQUIRE(hex && out);
  return guarded([&] {
    semlat::CanonicalKey key;
    std::optional<semlat::Semilattice> s;
    try {
      key = semlat::keyFromHex(hex);
      s = semlat::semilatticeFromKey(key);
    } catch (const semlat::Error& e) {
      return fail(SEMLAT_ERR_NOT_FOUND, std::string("unknown key: ") + e.what());
    }
    if (semlat::canonicalize(*s).key != key) {
      return fail(SEMLAT_ERR_NOT_FOUND, "unknown key: not in canonical form");
    }
    *out = wrap(std::move(*s));
    return SEMLAT_OK;
  });
}

void semlat_lattice_free(semlat_lattice* l) { delete l; }

int semlat_lattice_order(const semlat_lattice* l) { return l ? l->value.order() : 0; }

semlat_status semlat_lattice_meet(const semlat_lattice* l, int s, int t, int* out) {
  SEMLAT_REQUIRE(l && out);
  if (auto st = checkElement(l, s); st != SEMLAT_OK) return st;
  if (auto st = checkElement(l, t); st != SEMLAT_OK) return st;
  *out = l->value.meet(s, t);
  return SEMLAT_OK;
}

semlat_status semlat_lattice_leq(const semlat_lattice* l, int s, int t, int* out) {
  SEMLAT_REQUIRE(l && out);
  if (auto st = checkElement(l, s); st != SEMLAT_OK) return st;
  if (auto st = checkElement(l, t); st != SEMLAT_OK) return st;
  *out = semlat::leq(l->value, s, t) ? 1 : 0;
  return SEMLAT_OK;
}

semlat_status semlat_lattice_atoms(const semlat_lattice* l, uint32_t* mask) {
  SEMLAT_REQUIRE(l && mask);
  *mask = semlat::atoms(l->value).bits();
  return SEMLAT_OK;
}

semlat_status semlat_lattice_coatoms(const semlat_lattice* l, uint32_t* mask) {
  SEMLAT_REQUIRE(l && mask);
  *mask = semlat::coatoms(l->value).bits();
  return SEMLAT_OK;
}

semlat_status semlat_lattice_canonical_key(const semlat_lattice* l, char** hex) {
  SEMLAT_REQUIRE(l && hex);
  return guarded([&] {
    *hex = copyString(semlat::keyToHex(semlat::canonicalize(l->value).key));
    return SEMLAT_OK;
  });
}

semlat_status semlat_lattice_isomorphic(const semlat_lattice* a, const semlat_lattice* b,
                                        int* out) {
  SEMLAT_REQUIRE(a && b && out);
  return guarded([&] {
    *out = semlat::isomorphic(a->value, b->value) ? 1 : 0;
    return SEMLAT_OK;
  });
}

semlat_status semlat_lattice_cov1_sizes(const semlat_lattice* l, int64_t* sizes,
                                        size_t capacity) {
  SEMLAT_REQUIRE(l && sizes);
  if (capacity < static_cast<size_t>(l->value.order())) {
    return fail(SEMLAT_ERR_INVALID_ARGUMENT, "capacity smaller than order");
  }
  return guarded([&] {
    const auto cov = semlat::cov1ByRecurrence(l->value);
    for (std::size_t s = 0; s < cov.size(); ++s) sizes[s] = cov[s].size();
    return SEMLAT_OK;
  });
}

semlat_status semlat_lattice_sigma(const semlat_lattice* l, int64_t* sigma,
                                   int64_t* sigma_cov1) {
  SEMLAT_REQUIRE(l && sigma && sigma_cov1);
  return guarded([&] {
    *sigma_cov1 = semlat::sigmaCov1(l->value);
    *sigma = semlat::sigma(l->value);
    return SEMLAT_OK;
  });
}

semlat_status semlat_lattice_inconsistent_count(const semlat_lattice* l, int m,
                                                uint64_t* out) {
  SEMLAT_REQUIRE(l && out);
  return guarded([&] {
    *out = semlat::inconsistentCount(l->value, m);
    return SEMLAT_OK;
  });
}

semlat_status semlat_lattice_describe(const semlat_lattice* l, char** text) {
  SEMLAT_REQUIRE(l && text);
  return guarded([&] {
    *text = copyString(semlat::describeSemilattice(l->value, l->names));
    return SEMLAT_OK;
  });
}

semlat_status semlat_catalog_generate(int n, int jobs, int allow_large, semlat_catalog** out) {
  SEMLAT_REQUIRE(out);
  return guarded([&] {
    semlat::GenerateOptions options;
    options.jobs = jobs;
    options.allowLarge = allow_large != 0;
    *out = new semlat_catalog{semlat::generateCatalog(n, options)};
    return SEMLAT_OK;
  });
}

semlat_status semlat_catalog_load(const char* path, semlat_catalog** out) {
  SEMLAT_REQUIRE(path && out);
  return guarded([&] {
    *out = new semlat_catalog{semlat::loadCatalogFile(path)};
    return SEMLAT_OK;
  });
}

semlat_status semlat_catalog_save(const semlat_catalog* c, const char* path) {
  SEMLAT_REQUIRE(c && path);
  return guarded([&] {
    semlat::saveCatalogFile(c->value, path);
    return SEMLAT_OK;
  });
}

void semlat_catalog_free(semlat_catalog* c) { delete c; }

int semlat_catalog_order(const semlat_catalog* c) { return c ? c->value.n : 0; }

size_t semlat_catalog_size(const semlat_catalog* c) { return c ? c->value.size() : 0; }

semlat_status semlat_catalog_get(const semlat_catalog* c, size_t index, semlat_lattice** out) {
  SEMLAT_REQUIRE(c && out);
  if (index >= c->value.size()) {
    return fail(SEMLAT_ERR_INVALID_ARGUMENT, "catalog index " + std::to_string(index) +
                                                 " out of range");
  }
  return guarded([&] {
    *out = wrap(c->value.entries[index].canonical.relabeled);
    return SEMLAT_OK;
  });
}

semlat_status semlat_catalog_profile(const semlat_catalog* c, int max_m, semlat_format format,
                                     int jobs, char** text) {
  SEMLAT_REQUIRE(c && text);
  if (max_m < 1 || max_m > 3) {
    return fail(SEMLAT_ERR_INVALID_ARGUMENT, "profile max_m must be in [1,3]");
  }
  return guarded([&] {
    semlat::ProfileOptions options;
    options.maxM = max_m;
    const auto records = semlat::profileCatalog(c->value, options, jobs);
    semlat::OutputFormat f = semlat::OutputFormat::kText;
    if (format == SEMLAT_FORMAT_JSON) f = semlat::OutputFormat::kJson;
    else if (format == SEMLAT_FORMAT_CSV) f = semlat::OutputFormat::kCsv;
    *text = copyString(semlat::formatStats(records, f));
    return SEMLAT_OK;
  });
}

semlat_status semlat_catalog_find_extremal(const semlat_catalog* c, const char* metric,
                                           int maximize, int jobs, char** text) {
  SEMLAT_REQUIRE(c && metric && text);
  return guarded([&] {
    const semlat::Metric parsed = semlat::parseMetric(metric);
    const auto direction = maximize ? semlat::Direction::kMax : semlat::Direction::kMin;
    const auto hits = semlat::findExtremal(c->value, parsed, direction, jobs);
    *text = copyString(semlat::formatExtremal(c->value.n, parsed, direction, hits));
    return SEMLAT_OK;
  });
}

semlat_status semlat_verify(const char* claims, int n_lo, int n_hi, int m, int jobs,
                            int allow_large, semlat_report** out) {
  SEMLAT_REQUIRE(claims && out);
  return guarded([&] {
    std::vector<std::string> list;
    std::stringstream ss(claims);
    for (std::string item; std::getline(ss, item, ',');) {
      if (item == "all") {
        list.insert(list.end(), {"t1", "t2", "t2-bounds", "t4", "conjecture", "lemmas"});
      } else if (item == "t1" || item == "t2" || item == "t2-bounds" || item == "t4" ||
                 item == "conjecture" || item == "lemmas") {
        list.push_back(item);
      } else {
        return fail(SEMLAT_ERR_INVALID_ARGUMENT, "unknown claim '" + item + "'");
      }
    }
    if (list.empty()) return fail(SEMLAT_ERR_INVALID_ARGUMENT, "no claim given");
    const int limit = semlat_max_catalog_order(allow_large);
    if (n_lo < 2 || n_hi < n_lo || n_hi > limit) {
      return fail(SEMLAT_ERR_ORDER_RANGE, "order range " + std::to_string(n_lo) + ".." +
                                              std::to_string(n_hi) + " outside [2," +
                                              std::to_string(limit) + "]");
    }
    if (m < 1 || m > semlat::kMaxVariables) {
      return fail(SEMLAT_ERR_INVALID_ARGUMENT, "m must be in [1,6]");
    }
    std::vector<semlat::Catalog> catalogs;
    semlat::GenerateOptions options;
    options.jobs = jobs;
    options.allowLarge = allow_large != 0;
    for (int n = n_lo; n <= n_hi; ++n) catalogs.push_back(semlat::generateCatalog(n, options));

    auto report = std::make_unique<semlat_report>();
    for (const auto& claim : list) {
      if (claim == "t1") report->reports.push_back(semlat::verifyTheorem1(catalogs, m, jobs));
      else if (claim == "t2") report->reports.push_back(semlat::verifyTheorem2(catalogs, jobs));
      else if (claim == "t2-bounds")
        report->reports.push_back(semlat::verifyTheorem2Bounds(catalogs, jobs));
      else if (claim == "t4") report->reports.push_back(semlat::verifyTheorem4(catalogs, jobs));
      else if (claim == "conjecture")
        report->reports.push_back(semlat::verifyConjecture(catalogs, jobs));
      else report->reports.push_back(semlat::verifyCovLemmas(catalogs, jobs));
    }
    *out = report.release();
    return SEMLAT_OK;
  });
}

semlat_verdict semlat_report_verdict(const semlat_report* r) {
  if (!r) return SEMLAT_SKIPPED;
  bool verified = false;
  for (const auto& rep : r->reports) {
    if (rep.status == semlat::VerificationStatus::kCounterexampleFound) {
      return SEMLAT_COUNTEREXAMPLE;
    }
    verified = verified || rep.status == semlat::VerificationStatus::kVerified;
  }
  return verified ? SEMLAT_VERIFIED : SEMLAT_SKIPPED;
}

semlat_status semlat_report_text(const semlat_report* r, int timing, char** text) {
  SEMLAT_REQUIRE(r && text);
  return guarded([&] {
    std::string all;
    for (const auto& rep : r->reports) all += semlat::formatReport(rep, timing != 0);
    *text = copyString(all);
    return SEMLAT_OK;
  });
}

void semlat_report_free(semlat_report* r) { delete r; }

semlat_status semlat_reproduce_figures(int perturb, int* matched, char** text) {
  SEMLAT_REQUIRE(matched && text);
  return guarded([&] {
    const semlat::FigureCheck check = semlat::reproduceFigures(perturb != 0);
    *matched = check.matched ? 1 : 0;
    *text = copyString(check.text);
    return SEMLAT_OK;
  });
}

}  // extern "C"
