#include "qverify/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qverify/bressoud.hpp"
#include "qverify/qcomb.hpp"
#include "qverify/series_identities.hpp"
#include "qverify/transforms.hpp"

namespace qverify::cli {

ParamRange parseRange(const std::string& text) {
  auto parseInt = [&text](const std::string& part) {
    std::size_t used = 0;
    int64_t value = 0;
    try {
      value = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) throw std::invalid_argument("malformed range '" + text + "'");
    return value;
  };
  const auto dots = text.find("..");
  ParamRange range;
  if (dots == std::string::npos) {
    range.lo = range.hi = parseInt(text);
  } else {
    range.lo = parseInt(text.substr(0, dots));
    range.hi = parseInt(text.substr(dots + 2));
  }
  if (range.lo > range.hi) throw std::invalid_argument("empty range '" + text + "'");
  return range;
}

namespace {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Cell {
  std::optional<IdentityReport> report;
  bool skipped = false;
};

using Task = std::function<Cell()>;

/// Runs tasks on `parallelism` workers; results come back in task order.
std::vector<Cell> runTasks(const std::vector<Task>& tasks, int parallelism) {
  std::vector<Cell> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto workers = static_cast<std::size_t>(std::max(1, parallelism));
  if (workers == 1 || tasks.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, tasks.size()); ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

struct Options {
  std::string format = "text";
  std::string output;
  int parallelism = 0;
  bool noTiming = false;
  bool allReports = false;
};

class Emitter {
 public:
  Emitter(const Options& options, std::ostream& out) : options_(options), out_(out) {}

  void emit(const std::vector<Cell>& cells) {
    for (const auto& cell : cells) {
      ++summary_.total;
      if (cell.skipped) {
        ++summary_.skipped;
        continue;
      }
      const IdentityReport& r = *cell.report;
      ++(r.passed ? summary_.passed : summary_.failed);
      if (r.passed && !options_.allReports && quietPasses_) continue;
      write(r);
    }
  }

  /// Counts a cell without printing it (e.g. out-of-region sweep points).
  void countSkipped(int64_t n) {
    summary_.total += n;
    summary_.skipped += n;
  }

  void setQuietPasses(bool quiet) { quietPasses_ = quiet; }

  /// Recategorizes an already-counted failure as skipped.
  void reclassifyFailureAsSkipped() {
    --summary_.failed;
    ++summary_.skipped;
  }

  void note(const std::string& line) {
    if (options_.format == "text") out_ << "note: " << line << '\n';
  }

  const Summary& summary() const { return summary_; }

  void finish() {
    if (options_.format == "json") {
      nlohmann::ordered_json s;
      s["total"] = summary_.total;
      s["passed"] = summary_.passed;
      s["failed"] = summary_.failed;
      s["skipped"] = summary_.skipped;
      out_ << s.dump() << '\n';
    } else {
      out_ << "total " << summary_.total << ", passed " << summary_.passed << ", failed " << summary_.failed
           << ", skipped " << summary_.skipped << '\n';
    }
    out_.flush();
  }

 private:
  void write(IdentityReport r) {
    if (options_.noTiming) r.elapsedMillis = 0;
    if (options_.format == "json") {
      out_ << toJson(r).dump() << '\n';
      return;
    }
    out_ << (r.passed ? "PASS " : "FAIL ") << r.identityId;
    for (const auto& [key, value] : r.params) out_ << ' ' << key << '=' << value;
    if (r.cap) out_ << " cap=" << *r.cap;
    if (r.firstMismatchExp) out_ << "  mismatch at q^" << *r.firstMismatchExp;
    if (r.negativeWitness) out_ << "  negative coefficient at q^" << *r.negativeWitness;
    if (!options_.noTiming) out_ << "  (" << r.elapsedMillis << " ms)";
    out_ << '\n';
    for (const auto& n : r.notes) out_ << "    note: " << n << '\n';
  }

  const Options& options_;
  std::ostream& out_;
  Summary summary_;
  bool quietPasses_ = false;
};

int exitCode(const Summary& s) { return s.failed > 0 ? kExitFailure : kExitOk; }

/// Cartesian product over params in order, each from ranges.
std::vector<ParamMap> grid(const std::vector<std::string>& names, const std::map<std::string, ParamRange>& ranges) {
  std::vector<ParamMap> cells{ParamMap{}};
  for (const auto& name : names) {
    const ParamRange& r = ranges.at(name);
    std::vector<ParamMap> next;
    for (const auto& cell : cells) {
      for (int64_t v = r.lo; v <= r.hi; ++v) {
        ParamMap extended = cell;
        extended[name] = v;
        next.push_back(std::move(extended));
      }
    }
    cells = std::move(next);
  }
  return cells;
}

std::vector<Task> finiteTasks(const IdentityDescriptor& d, const std::map<std::string, ParamRange>& ranges) {
  std::vector<Task> tasks;
  for (auto& cell : grid(d.params, ranges)) {
    tasks.push_back([id = d.id, cell, admissible = d.admissible] {
      if (admissible && !admissible(cell)) return Cell{std::nullopt, true};
      return Cell{verify(id, cell), false};
    });
  }
  return tasks;
}

std::vector<Task> seriesTasks(const std::string& id, int64_t cap, ParamRange sRange) {
  std::vector<Task> tasks;
  if (id == "jtp") {
    for (int64_t s = sRange.lo; s <= sRange.hi; ++s) {
      tasks.push_back([s, cap] {
        if (s <= -2 || s >= 2) return Cell{std::nullopt, true};
        return Cell{verifySeriesJtp(s, cap), false};
      });
    }
    return tasks;
  }
  tasks.push_back([id, cap] { return Cell{verifySeries(id, cap), false}; });
  return tasks;
}

/// Strips a reading suffix: "eq3.14-pattern" -> "eq3.14".
std::string readingGroup(const std::string& id) {
  for (const char* suffix : {"-as-printed", "-pattern"}) {
    const std::string s(suffix);
    if (id.size() > s.size() && id.compare(id.size() - s.size(), s.size(), s) == 0) return id.substr(0, id.size() - s.size());
  }
  return {};
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string id;
  std::map<std::string, std::string> ranges;
  int64_t cap = -1;
};

int runVerify(const VerifyArgs& args, const Options& options, std::ostream& out) {
  Emitter emitter(options, out);
  std::vector<Task> tasks;
  if (isSeriesRegistered(args.id)) {
    const auto& d = seriesRegistryLookup(args.id);
    const int64_t cap = args.cap >= 0 ? args.cap : d.defaultCap;
    ParamRange s{0, 0};
    if (auto it = args.ranges.find("s"); it != args.ranges.end()) s = parseRange(it->second);
    tasks = seriesTasks(args.id, cap, s);
  } else {
    const auto& d = registryLookup(args.id);
    std::map<std::string, ParamRange> ranges;
    for (const auto& name : d.params) {
      auto it = args.ranges.find(name);
      if (it == args.ranges.end()) throw MissingParam(d.id, name);
      ranges[name] = parseRange(it->second);
    }
    tasks = finiteTasks(d, ranges);
  }
  emitter.emit(runTasks(tasks, options.parallelism));
  emitter.finish();
  return exitCode(emitter.summary());
}

int runVerifyAll(const Options& options, std::ostream& out) {
  Emitter emitter(options, out);
  std::vector<Task> tasks;
  for (const auto& d : registryList()) {
    auto more = finiteTasks(d, d.defaultRanges);
    tasks.insert(tasks.end(), more.begin(), more.end());
  }
  std::vector<std::string> seriesIds;
  for (const auto& d : seriesRegistryList()) {
    auto more = seriesTasks(d.id, d.defaultCap, ParamRange{-1, 1});
    for (std::size_t i = 0; i < more.size(); ++i) seriesIds.push_back(d.id);
    tasks.insert(tasks.end(), more.begin(), more.end());
  }
  auto cells = runTasks(tasks, options.parallelism);
  emitter.emit(cells);

  // Alternative readings of one equation: the group passes if any reading
  // passes; rejected readings are then reported but counted as skipped.
  std::map<std::string, std::vector<const IdentityReport*>> groups;
  for (const auto& cell : cells) {
    if (!cell.report) continue;
    const std::string group = readingGroup(cell.report->identityId);
    if (!group.empty()) groups[group].push_back(&*cell.report);
  }
  for (const auto& [group, readings] : groups) {
    const bool anyPass =
        std::any_of(readings.begin(), readings.end(), [](const IdentityReport* r) { return r->passed; });
    for (const auto* r : readings) {
      if (anyPass && !r->passed) {
        emitter.reclassifyFailureAsSkipped();
        emitter.note(group + ": reading " + r->identityId + " rejected by truncation");
      }
    }
  }
  emitter.finish();
  return exitCode(emitter.summary());
}

struct PositivityFamily {
  std::string name;
  std::function<Poly(int64_t L)> build;
};

std::vector<PositivityFamily> positivityFamilies() {
  std::vector<PositivityFamily> families = {
      {"G(L,L+1,8/3,4/3,3)", [](int64_t L) { return gPoly({L, L + 1, 8, 4, 3}); }},
      {"G(L,L+1,4/3,2/3,3)", [](int64_t L) { return gPoly({L, L + 1, 4, 2, 3}); }},
      {"G(L,L+1,13/4,2,4)", [](int64_t L) { return gPoly({L, L + 1, 13, 8, 4}); }},
      {"G(L,L,11/4,5/2,4)", [](int64_t L) { return gPoly({L, L, 11, 10, 4}); }},
      {"G(L-1,L+1,4,5/4,4)", [](int64_t L) { return gPoly({L - 1, L + 1, 16, 5, 4}); }},
      {"G(L-1,L+1,15/4,3/2,4)", [](int64_t L) { return gPoly({L - 1, L + 1, 15, 6, 4}); }},
      {"G(L-1,L+1,5,5/2,6)", [](int64_t L) { return gPoly({L - 1, L + 1, 30, 15, 6}); }},
      {"A_L", [](int64_t L) { return borweinABC(L).A; }},
      {"B_L", [](int64_t L) { return borweinABC(L).B; }},
      {"C_L", [](int64_t L) { return borweinABC(L).C; }},
  };
  return families;
}

IdentityReport positivityReport(const std::string& id, ParamMap params, const Poly& p, int64_t elapsed) {
  IdentityReport r;
  r.identityId = id;
  r.params = std::move(params);
  r.negativeWitness = isNonnegative(p).witness;
  r.passed = !r.negativeWitness;
  if (!r.passed) r.lhs = renderCapped(p);
  r.elapsedMillis = elapsed;
  return r;
}

template <class F>
IdentityReport timedPositivity(const std::string& id, ParamMap params, F&& build) {
  const auto start = std::chrono::steady_clock::now();
  Poly p = build();
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return positivityReport(id, std::move(params), p, ms);
}

int runSweepPositivity(ParamRange L, const Options& options, std::ostream& out) {
  if (L.lo < 0) throw ConfigError("sweep-positivity: L must be >= 0");
  Emitter emitter(options, out);
  std::vector<Task> tasks;
  for (const auto& family : positivityFamilies()) {
    for (int64_t l = L.lo; l <= L.hi; ++l) {
      tasks.push_back([family, l] {
        return Cell{timedPositivity("positivity:" + family.name, {{"L", l}}, [&] { return family.build(l); }), false};
      });
    }
  }
  for (KernelKind kind : {KernelKind::C, KernelKind::W, KernelKind::O}) {
    for (int64_t l = L.lo; l <= L.hi; ++l) {
      for (int64_t k = 0; k <= kernelMaxK(kind, l); ++k) {
        tasks.push_back([kind, l, k] {
          const std::string id = "positivity:kernel-" + std::string(toString(kind));
          return Cell{timedPositivity(id, {{"L", l}, {"k", k}}, [&] { return kernel(kind, l, k); }), false};
        });
      }
    }
  }
  emitter.emit(runTasks(tasks, options.parallelism));
  emitter.finish();
  return exitCode(emitter.summary());
}

struct ConjectureArgs {
  std::string K = "2..4";
  int64_t size = 16;
  std::string alphaK;
  std::string betaK;
  bool theorem1 = false;
  std::string nu = "1..3";
  std::string L = "0..14";
};

int runSweepConjecture(const ConjectureArgs& args, const Options& options, std::ostream& out) {
  Emitter emitter(options, out);
  emitter.setQuietPasses(true);
  std::vector<Task> tasks;
  if (args.theorem1) {
    const ParamRange nu = parseRange(args.nu);
    const ParamRange L = parseRange(args.L);
    if (nu.lo < 1 || L.lo < 0) throw ConfigError("sweep-conjecture: need nu >= 1 and L >= 0");
    for (int64_t n = nu.lo; n <= nu.hi; ++n) {
      for (int64_t s = 0; s < n; ++s) {
        for (int64_t l = L.lo; l <= L.hi; ++l) {
          tasks.push_back([n, s, l] {
            const GParams g = theorem1Params(n, s, l);
            ParamMap params{{"N", g.N}, {"M", g.M}, {"alphaK", g.alphaK}, {"betaK", g.betaK}, {"K", g.K},
                            {"nu", n},  {"s", s},   {"L", l}};
            return Cell{timedPositivity("theorem1", std::move(params), [&] { return gPoly(g); }), false};
          });
        }
      }
    }
  } else {
    const ParamRange K = parseRange(args.K);
    if (K.lo < 1) throw ConfigError("sweep-conjecture: K must be >= 1");
    if (args.size < 0) throw ConfigError("sweep-conjecture: size must be >= 0");
    int64_t outside = 0;
    for (int64_t k = K.lo; k <= K.hi; ++k) {
      // alpha+beta <= 2K-1 bounds both numerators by K(2K-1) inside the region.
      ParamRange a = args.alphaK.empty() ? ParamRange{0, k * (2 * k - 1)} : parseRange(args.alphaK);
      ParamRange b = args.betaK.empty() ? ParamRange{0, k * (2 * k - 1)} : parseRange(args.betaK);
      for (int64_t total = 0; total <= args.size; ++total) {
        for (int64_t N = 0; N <= total; ++N) {
          for (int64_t aK = a.lo; aK <= a.hi; ++aK) {
            for (int64_t bK = b.lo; bK <= b.hi; ++bK) {
              const GParams g{N, total - N, aK, bK, k};
              if (!regionCheck(g).inRegion) {
                ++outside;
                continue;
              }
              tasks.push_back([g] {
                ParamMap params{{"N", g.N}, {"M", g.M}, {"alphaK", g.alphaK}, {"betaK", g.betaK}, {"K", g.K}};
                return Cell{timedPositivity("conjecture", std::move(params), [&] { return gPoly(g); }), false};
              });
            }
          }
        }
      }
    }
    emitter.countSkipped(outside);
    emitter.note(std::to_string(outside) + " grid points outside region");
  }
  emitter.emit(runTasks(tasks, options.parallelism));
  emitter.finish();
  return exitCode(emitter.summary());
}

struct ExpandArgs {
  std::string builder;
  std::vector<std::string> positional;
  int64_t N = 0, M = 0, alphaK = 0, betaK = 0, K = 0;
  int64_t cap = 20;
};

int64_t positionalInt(const ExpandArgs& args, std::size_t i, const char* what) {
  if (i >= args.positional.size()) throw ConfigError("expand " + args.builder + ": missing " + what);
  try {
    std::size_t used = 0;
    const int64_t v = std::stoll(args.positional[i], &used);
    if (used == args.positional[i].size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("expand " + args.builder + ": " + what + " must be an integer");
}

int runExpand(const ExpandArgs& args, std::ostream& out) {
  Poly result;
  if (args.builder == "qbinom") {
    result = qBinom(positionalInt(args, 0, "m"), positionalInt(args, 1, "n"));
  } else if (args.builder == "kernel") {
    if (args.positional.empty()) throw ConfigError("expand kernel: missing kind");
    KernelKind kind;
    try {
      kind = parseKernelKind(args.positional[0]);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const int64_t L = positionalInt(args, 1, "L");
    if (L < 0) throw ConfigError("expand kernel: L must be >= 0");
    result = kernel(kind, L, positionalInt(args, 2, "k"));
  } else if (args.builder == "g") {
    if (args.K < 1) throw ConfigError("expand g: --K must be >= 1");
    result = gPoly(GParams{args.N, args.M, args.alphaK, args.betaK, args.K});
  } else if (args.builder == "pochhammer") {
    const int64_t sign = positionalInt(args, 0, "sign");
    if (sign != 1 && sign != -1) throw ConfigError("expand pochhammer: sign must be 1 or -1");
    const int64_t m = positionalInt(args, 3, "m");
    if (m < 0) throw ConfigError("expand pochhammer: m must be >= 0");
    result = pochhammer(static_cast<int>(sign), positionalInt(args, 1, "s"), positionalInt(args, 2, "t"), m);
  } else if (args.builder == "product") {
    if (args.positional.empty()) throw ConfigError("expand product: missing series identity id");
    if (args.cap < 0) throw ConfigError("expand product: --cap must be >= 0");
    const std::string& id = args.positional[0];
    if (!isSeriesRegistered(id)) throw ConfigError("unknown series identity '" + id + "'");
    result = seriesProductSide(id, args.cap).toPoly();
  } else {
    throw ConfigError("unknown builder '" + args.builder + "' (expected qbinom, kernel, g, pochhammer, product)");
  }
  out << toString(result) << '\n';
  return kExitOk;
}

int defaultParallelism() {
  if (const char* env = std::getenv(kParallelismEnv)) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string(kParallelismEnv) + " must be a positive integer");
  }
  return 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of q-series identities and positivity claims"};
  app.require_subcommand(1);

  Options options;
  auto addCommon = [&options](CLI::App* sub) {
    sub->add_option("--format", options.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output,-o", options.output, "Write reports to this file instead of stdout");
    sub->add_option("--parallelism,-j", options.parallelism, "Worker threads (default: $QVERIFY_PARALLELISM or 1)");
    sub->add_flag("--no-timing", options.noTiming, "Emit elapsedMillis as 0 (byte-stable output)");
  };

  VerifyArgs verifyArgs;
  auto* verifyCmd = app.add_subcommand("verify", "Verify one identity over a parameter grid");
  verifyCmd->add_option("id", verifyArgs.id, "Identity id, e.g. eq2.13")->required();
  for (const char* name : {"L", "a", "k", "n", "nu", "s"}) {
    verifyCmd
        ->add_option_function<std::string>(std::string("--") + name,
                                           [&verifyArgs, name](const std::string& v) { verifyArgs.ranges[name] = v; },
                                           "Inclusive range a..b or a single value")
        ->allow_extra_args(false);
  }
  verifyCmd->add_option("--cap", verifyArgs.cap, "Truncation cap for series identities");
  addCommon(verifyCmd);

  auto* verifyAllCmd = app.add_subcommand("verify-all", "Verify every registered identity at its default range");
  addCommon(verifyAllCmd);

  std::string positivityL = "0..20";
  auto* positivityCmd = app.add_subcommand("sweep-positivity", "Nonnegativity of the proven G families and kernels");
  positivityCmd->add_option("--L", positivityL, "Inclusive range of L");
  addCommon(positivityCmd);

  ConjectureArgs conjecture;
  auto* conjectureCmd = app.add_subcommand("sweep-conjecture", "Instance sweep of the conjectured positivity region");
  conjectureCmd->add_option("--K", conjecture.K, "Inclusive range of K");
  conjectureCmd->add_option("--size", conjecture.size, "Bound on N+M");
  conjectureCmd->add_option("--alphaK", conjecture.alphaK, "Restrict alpha*K to a range");
  conjectureCmd->add_option("--betaK", conjecture.betaK, "Restrict beta*K to a range");
  conjectureCmd->add_flag("--theorem1", conjecture.theorem1, "Sweep the Theorem-1 family instead");
  conjectureCmd->add_option("--nu", conjecture.nu, "Theorem-1 nu range");
  conjectureCmd->add_option("--L", conjecture.L, "Theorem-1 L range");
  conjectureCmd->add_flag("--all-reports", options.allReports, "Emit a report for every evaluated point");
  addCommon(conjectureCmd);

  ExpandArgs expandArgs;
  auto* expandCmd = app.add_subcommand("expand", "Print a polynomial: qbinom, kernel, g, pochhammer, product");
  expandCmd->add_option("builder", expandArgs.builder)->required();
  expandCmd->add_option("args", expandArgs.positional);
  expandCmd->add_option("--N", expandArgs.N);
  expandCmd->add_option("--M", expandArgs.M);
  expandCmd->add_option("--alphaK", expandArgs.alphaK);
  expandCmd->add_option("--betaK", expandArgs.betaK);
  expandCmd->add_option("--K", expandArgs.K);
  expandCmd->add_option("--cap", expandArgs.cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (options.parallelism == 0) options.parallelism = defaultParallelism();
    if (options.parallelism < 1) throw ConfigError("--parallelism must be >= 1");

    std::ofstream file;
    std::ostream* sink = &out;
    if (!options.output.empty()) {
      file.open(options.output);
      if (!file) throw ConfigError("cannot open output file '" + options.output + "'");
      sink = &file;
    }

    int code = kExitOk;
    if (*verifyCmd) {
      code = runVerify(verifyArgs, options, *sink);
    } else if (*verifyAllCmd) {
      code = runVerifyAll(options, *sink);
    } else if (*positivityCmd) {
      code = runSweepPositivity(parseRange(positivityL), options, *sink);
    } else if (*conjectureCmd) {
      code = runSweepConjecture(conjecture, options, *sink);
    } else if (*expandCmd) {
      code = runExpand(expandArgs, *sink);
    }
    if (file.is_open()) {
      file.flush();
      if (!file) throw ConfigError("failed writing '" + options.output + "'");
    }
    return code;
  } catch (const UnknownIdentity& e) {
    err << "error: UnknownIdentity: " << e.what() << '\n';
  } catch (const MissingParam& e) {
    err << "error: MissingParam: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitConfig;
}

}  // namespace qverify::cli
