// Copyright 2026 The cfq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

// Command-line driver: deterministic reports over cyclic quotients of
// Fermat curves. Subcommands:
//   scan          torsion-witness sweep over a level range
//   classify      CM types, stabilizers, isogeny and minimality flags
//   minimal       classify, filtered to minimal classes in the
//                 hyperelliptic isogeny orbit
//   jacobi        per-prime Jacobi sums with Weil verdicts for one
//                 character pair
//   local-factor  per-prime Euler factors of a label's full product
//                 character
// Reports go to stdout; exit 0 on success, 2 on a validation error, 3 on
// an internal invariant violation.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cfq/cache.hpp"
#include "cfq/cm.hpp"
#include "cfq/errors.hpp"
#include "cfq/jacobi.hpp"
#include "cfq/quotient.hpp"
#include "cfq/records.hpp"
#include "cfq/scan.hpp"
#include "cfq/sweep.hpp"
#include "cfq/version.hpp"

namespace {

using cfq::QuotientLabel;

constexpr int64_t kScanLevelCap = 512;
constexpr int64_t kClassifyLevelCap = 256;
constexpr int64_t kPrimeCap = 10000;

struct CommonOpts {
  std::string format = "jsonl";
  std::string cache_dir;
  int jobs = 1;
};

void AddCommonFlags(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--format", opts->format, "Report format")
      ->check(CLI::IsMember({"jsonl", "csv"}))
      ->capture_default_str();
  cmd->add_option("--cache-dir", opts->cache_dir,
                  "Directory for cached reports (default: $CFQ_CACHE_DIR; "
                  "caching is off when neither is set)");
  cmd->add_option("--jobs", opts->jobs, "Worker thread count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

std::string ResolveCacheDir(const CommonOpts& opts) {
  if (!opts.cache_dir.empty()) return opts.cache_dir;
  const char* env = std::getenv("CFQ_CACHE_DIR");
  return env == nullptr ? std::string() : std::string(env);
}

// Serves the report from cache when possible, otherwise builds, stores,
// and prints it.
template <typename Build>
void EmitReport(const CommonOpts& opts, const std::string& key, Build build) {
  const std::string dir = ResolveCacheDir(opts);
  if (!dir.empty()) {
    if (std::optional<std::string> hit = cfq::CacheLoad(dir, key)) {
      std::cout << *hit;
      return;
    }
  }
  const std::string body = cfq::RenderReport(build(), opts.format == "csv");
  if (!dir.empty()) cfq::CacheStore(dir, key, body);
  std::cout << body;
}

std::vector<QuotientLabel> ClassesInRange(int64_t m_min, int64_t m_max) {
  std::vector<QuotientLabel> out;
  for (int64_t m = m_min; m <= m_max; ++m) {
    std::vector<QuotientLabel> classes = cfq::EnumerateClasses(m);
    out.insert(out.end(), classes.begin(), classes.end());
  }
  return out;
}

std::vector<int64_t> PrimesUpTo(int64_t p_max) {
  std::vector<int64_t> out;
  for (int64_t p = 2; p <= p_max; ++p) {
    if (cfq::IsPrime(p)) out.push_back(p);
  }
  return out;
}

void RunScan(const CommonOpts& opts, int64_t m_min, int64_t m_max,
             bool collapse) {
  if (m_min < 3 || m_min > m_max || m_max > kScanLevelCap)
    cfq::Fail(cfq::errc::invalid_range, "need 3 <= m-min <= m-max <= " +
                                            std::to_string(kScanLevelCap));
  const std::string key = "scan|lib=" + std::string(cfq::kVersion) +
                          "|m_min=" + std::to_string(m_min) +
                          "|m_max=" + std::to_string(m_max) +
                          "|collapse=" + (collapse ? "1" : "0") +
                          "|format=" + opts.format;
  EmitReport(opts, key, [&] {
    return cfq::ParallelMap(
        ClassesInRange(m_min, m_max), opts.jobs,
        [collapse](const QuotientLabel& q) {
          cfq::ScanRecord r;
          r.m = q.m;
          r.a = q.a;
          r.b = q.b;
          r.genus = cfq::Genus(q);
          r.hyperelliptic = cfq::IsHyperelliptic(q);
          if (r.genus >= 3) {
            r.witness = collapse ? cfq::FirstWitnessCollapsed(q)
                                 : cfq::FirstWitness(q);
          }
          r.smooth_fixed_point = (q.a == 1 || q.b == 1);
          return r;
        });
  });
}

cfq::ClassifyRecord ClassifyOne(const QuotientLabel& q) {
  cfq::ClassifyRecord r;
  r.m = q.m;
  r.a = q.a;
  r.b = q.b;
  r.cm_type = cfq::ComputeCMType(q).members;
  r.stabilizer_order =
      static_cast<int64_t>(cfq::ComputeStabilizer(q).members.size());
  r.simple = (r.stabilizer_order == 1);
  r.isogenous_to_hyperelliptic =
      cfq::IsogenyUnit(q, QuotientLabel{q.m, 1, 1}).has_value();
  if (!cfq::IsHyperelliptic(q)) r.minimal = cfq::IsMinimal(q);
  return r;
}

void RunClassify(const CommonOpts& opts, int64_t m_max, bool minimal_only) {
  if (m_max < 3 || m_max > kClassifyLevelCap)
    cfq::Fail(cfq::errc::invalid_range, "need 3 <= m-max <= " +
                                            std::to_string(kClassifyLevelCap));
  const std::string command = minimal_only ? "minimal" : "classify";
  const std::string key = command + "|lib=" + std::string(cfq::kVersion) +
                          "|m_max=" + std::to_string(m_max) +
                          "|format=" + opts.format;
  EmitReport(opts, key, [&] {
    std::vector<cfq::ClassifyRecord> rows =
        cfq::ParallelMap(ClassesInRange(3, m_max), opts.jobs, ClassifyOne);
    if (minimal_only) {
      std::vector<cfq::ClassifyRecord> kept;
      for (cfq::ClassifyRecord& r : rows) {
        if (r.isogenous_to_hyperelliptic && r.minimal.has_value() &&
            *r.minimal) {
          kept.push_back(std::move(r));
        }
      }
      rows = std::move(kept);
    }
    return rows;
  });
}

void RunJacobi(const CommonOpts& opts, int64_t m, int64_t a, int64_t b,
               int64_t p_max) {
  if (!cfq::IsCharTriple(m, a, b))
    cfq::Fail(cfq::errc::invalid_triple,
              "need a, b, a+b nonzero mod m and m >= 3");
  const QuotientLabel t = cfq::ValidateCharTriple(m, a, b);
  if (p_max < 2 || p_max > kPrimeCap)
    cfq::Fail(cfq::errc::invalid_range,
              "need 2 <= p-max <= " + std::to_string(kPrimeCap));
  const std::string key = "jacobi|lib=" + std::string(cfq::kVersion) +
                          "|m=" + std::to_string(t.m) +
                          "|a=" + std::to_string(t.a) +
                          "|b=" + std::to_string(t.b) +
                          "|p_max=" + std::to_string(p_max) +
                          "|format=" + opts.format;
  EmitReport(opts, key, [&] {
    return cfq::ParallelMap(PrimesUpTo(p_max), opts.jobs, [&t](int64_t p) {
      cfq::JacobiRecord r;
      r.m = t.m;
      r.a = t.a;
      r.b = t.b;
      r.p = p;
      if (t.m % p == 0) {
        r.status = "ramified";
        return r;
      }
      const int64_t f = cfq::OrderMod(p, t.m);
      r.f = f;
      r.num_specs = cfq::EulerPhi(t.m) / f;
      int64_t n = 1;
      bool over = false;
      for (int64_t e = 0; e < f; ++e) {
        if (n > cfq::kResidueFieldCap / p) {
          over = true;
          break;
        }
        n *= p;
      }
      if (over) {
        r.status = "skipped";
        return r;
      }
      r.status = "ok";
      std::vector<std::vector<int64_t>> taus;
      std::vector<bool> weil;
      std::vector<cfq::CycloInt<cfq::BigInt>> spec_products;
      for (const cfq::ResidueFieldSpec& spec : cfq::ResidueFields(t.m, p)) {
        const cfq::JacobiEvaluator eval(spec);
        cfq::CycloInt<int64_t> tau = eval.Sum(t.a, t.b);
        weil.push_back(cfq::WeilCheck(tau, n));
        taus.push_back(tau.coeffs);
        spec_products.push_back(cfq::ConvertCoeffs<cfq::BigInt>(tau));
      }
      r.tau = std::move(taus);
      r.weil = std::move(weil);
      r.local_factor =
          cfq::AssembleLocalFactor(t.m, p, f, spec_products).poly;
      return r;
    });
  });
}

void RunLocalFactor(const CommonOpts& opts, int64_t m, int64_t a, int64_t b,
                    int64_t p_max) {
  const QuotientLabel q = cfq::ValidateLabel(m, a, b);
  if (p_max < 2 || p_max > kPrimeCap)
    cfq::Fail(cfq::errc::invalid_range,
              "need 2 <= p-max <= " + std::to_string(kPrimeCap));
  const std::vector<std::pair<int64_t, int64_t>> chars =
      cfq::DifferentialBasis(q);
  const std::string key = "local-factor|lib=" + std::string(cfq::kVersion) +
                          "|m=" + std::to_string(q.m) +
                          "|a=" + std::to_string(q.a) +
                          "|b=" + std::to_string(q.b) +
                          "|p_max=" + std::to_string(p_max) +
                          "|format=" + opts.format;
  EmitReport(opts, key, [&] {
    return cfq::ParallelMap(
        PrimesUpTo(p_max), opts.jobs, [&q, &chars](int64_t p) {
          cfq::LocalFactorRecord r;
          r.m = q.m;
          r.a = q.a;
          r.b = q.b;
          r.p = p;
          if (q.m % p == 0) {
            r.status = "ramified";
            return r;
          }
          r.f = cfq::OrderMod(p, q.m);
          try {
            cfq::LocalFactor lf = cfq::ComputeLocalFactor(q.m, chars, p);
            r.status = "ok";
            r.poly = std::move(lf.poly);
          } catch (const cfq::Error& e) {
            if (e.code() != cfq::errc::invalid_range) throw;
            r.status = "skipped";
          }
          return r;
        });
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of cyclic quotients of Fermat curves"};
  app.set_version_flag("--version", std::string(cfq::kVersion));
  app.require_subcommand(1);

  CommonOpts scan_opts;
  int64_t scan_m_min = 3;
  int64_t scan_m_max = 50;
  bool scan_collapse = false;
  CLI::App* scan = app.add_subcommand(
      "scan", "Torsion-witness sweep over quotient classes");
  scan->add_option("--m-min", scan_m_min, "Smallest level")
      ->capture_default_str();
  scan->add_option("--m-max", scan_m_max, "Largest level")
      ->capture_default_str();
  scan->add_flag("--use-collapse-opt", scan_collapse,
                 "Search witnesses through the collapsed residue map");
  AddCommonFlags(scan, &scan_opts);

  CommonOpts classify_opts;
  int64_t classify_m_max = 180;
  CLI::App* classify = app.add_subcommand(
      "classify", "CM types, stabilizers, isogeny and minimality flags");
  classify->add_option("--m-max", classify_m_max, "Largest level")
      ->capture_default_str();
  AddCommonFlags(classify, &classify_opts);

  CommonOpts minimal_opts;
  int64_t minimal_m_max = 180;
  CLI::App* minimal = app.add_subcommand(
      "minimal",
      "Minimal classes in the hyperelliptic isogeny orbit, by level");
  minimal->add_option("--m-max", minimal_m_max, "Largest level")
      ->capture_default_str();
  AddCommonFlags(minimal, &minimal_opts);

  CommonOpts jacobi_opts;
  int64_t jm = 0, ja = 0, jb = 0;
  int64_t jacobi_p_max = 50;
  CLI::App* jacobi = app.add_subcommand(
      "jacobi", "Per-prime Jacobi sums and Weil verdicts for one character");
  jacobi->add_option("m", jm, "Level")->required();
  jacobi->add_option("a", ja, "First exponent")->required();
  jacobi->add_option("b", jb, "Second exponent")->required();
  jacobi->add_option("--p-max", jacobi_p_max, "Largest prime")
      ->capture_default_str();
  AddCommonFlags(jacobi, &jacobi_opts);

  CommonOpts lf_opts;
  int64_t lm = 0, la = 0, lb = 0;
  int64_t lf_p_max = 50;
  CLI::App* lfactor = app.add_subcommand(
      "local-factor", "Per-prime Euler factors of a label's full character");
  lfactor->add_option("m", lm, "Level")->required();
  lfactor->add_option("a", la, "First exponent")->required();
  lfactor->add_option("b", lb, "Second exponent")->required();
  lfactor->add_option("--p-max", lf_p_max, "Largest prime")
      ->capture_default_str();
  AddCommonFlags(lfactor, &lf_opts);

  try {
    app.parse(argc, argv);
    if (scan->parsed()) {
      RunScan(scan_opts, scan_m_min, scan_m_max, scan_collapse);
    } else if (classify->parsed()) {
      RunClassify(classify_opts, classify_m_max, /*minimal_only=*/false);
    } else if (minimal->parsed()) {
      RunClassify(minimal_opts, minimal_m_max, /*minimal_only=*/true);
    } else if (jacobi->parsed()) {
      RunJacobi(jacobi_opts, jm, ja, jb, jacobi_p_max);
    } else if (lfactor->parsed()) {
      RunLocalFactor(lf_opts, lm, la, lb, lf_p_max);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cfq::Error& e) {
    std::cerr << "error: " << cfq::errc_name(e.code()) << ": " << e.what()
              << '\n';
    return e.internal() ? 3 : 2;
  }
  return 0;
}
