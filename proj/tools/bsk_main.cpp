// Copyright 2026 The bsk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// bsk: command-line front end over the libbsk C API.
//
//   bsk conway --artin "1 1 1" -n 2
//   bsk conway --band "1:6 1:6 4:6 3:5 2:4 1:3 2:5" -n 6 --format json
//   bsk tree "1 2 1 2" --format dot
//   bsk scan --max-len 9 --out records.jsonl --jobs 4
//   bsk verify --seed 42
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cinttypes>
#include <cstdio>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "bsk/bsk.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int ReportError(bsk_status status) {
  std::fprintf(stderr, "bsk: %s: %s\n", bsk_status_name(status), bsk_last_error());
  switch (status) {
    case BSK_ERR_PARSE:
    case BSK_ERR_INDEX_OUT_OF_RANGE:
    case BSK_ERR_NOT_ORDERED:
    case BSK_ERR_STRAND_MISMATCH:
    case BSK_ERR_INVALID_ARGUMENT:
    case BSK_ERR_NULL_POINTER:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

// Prints a caller-owned string and releases it.
void PrintOwned(char* s, bool newline) {
  std::fputs(s, stdout);
  if (newline) std::fputc('\n', stdout);
  bsk_string_free(s);
}

int RunConway(const std::string& word, bsk_alphabet alphabet, int strands, bsk_format format) {
  bsk_poly* poly = nullptr;
  bsk_status st = bsk_conway(word.c_str(), alphabet, strands, &poly);
  if (st != BSK_OK) return ReportError(st);
  char* text = nullptr;
  st = bsk_poly_render(poly, format, &text);
  bsk_poly_free(poly);
  if (st != BSK_OK) return ReportError(st);
  PrintOwned(text, true);
  return kExitOk;
}

int RunTree(const std::string& word, bsk_format format) {
  bsk_tree* tree = nullptr;
  bsk_status st = bsk_tree_resolve(word.c_str(), &tree);
  if (st != BSK_OK) return ReportError(st);
  char* text = nullptr;
  st = bsk_tree_render(tree, format, &text);
  bsk_tree_free(tree);
  if (st != BSK_OK) return ReportError(st);
  PrintOwned(text, format == BSK_FORMAT_JSON);
  return kExitOk;
}

int RunScan(int max_len, const std::string& out, int jobs) {
  bsk_scan_summary summary{};
  const bsk_status st = bsk_scan(max_len, jobs, out.empty() ? nullptr : out.c_str(), &summary);
  if (st != BSK_OK) return ReportError(st);
  std::printf("words: %" PRIu64 "\n", summary.words);
  std::printf("distinct polynomials: %" PRIu64 "\n", summary.distinct_polynomials);
  std::printf("max degree: %d\n", summary.max_degree);
  std::printf("violations: 0\n");
  if (!out.empty()) std::printf("records: %s\n", out.c_str());
  return kExitOk;
}

struct VerifyState {
  int failures = 0;
  std::string first_failure;
};

void OnClaim(const char* claim, int passed, const char* detail, double seconds, void* user) {
  auto* state = static_cast<VerifyState*>(user);
  std::printf("%s  %s (%.3fs)\n", passed ? "PASS" : "FAIL", claim, seconds);
  if (!passed) {
    std::printf("      %s\n", detail);
    if (state->failures++ == 0) state->first_failure = claim;
  }
  std::fflush(stdout);
}

int RunVerify(std::uint64_t seed) {
  std::printf("seed: %" PRIu64 "\n", seed);
  VerifyState state;
  int all_passed = 0;
  const bsk_status st = bsk_verify(seed, OnClaim, &state, &all_passed);
  if (st != BSK_OK) return ReportError(st);
  if (!all_passed) {
    std::printf("verification FAILED (%d claim(s)); first failing claim: %s\n", state.failures,
                state.first_failure.c_str());
    return kExitFailure;
  }
  std::printf("all claims PASS\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conway polynomials of braid closures and skein resolution trees", "bsk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bsk_version());

  std::string artin;
  std::string band;
  int strands = 0;
  bsk_format conway_format = BSK_FORMAT_HUMAN;
  auto* conway = app.add_subcommand("conway", "Conway polynomial of a braid closure (Burau route)");
  auto* artin_opt = conway->add_option("--artin", artin, "Artin word, e.g. \"1 -2 1\"");
  auto* band_opt = conway->add_option("--band", band, "band word, e.g. \"1:3 -2:5\"");
  artin_opt->excludes(band_opt);
  conway->add_option("-n,--strands", strands, "strand count")->required();
  conway
      ->add_option("--format", conway_format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, bsk_format>{{"human", BSK_FORMAT_HUMAN}, {"json", BSK_FORMAT_JSON}}));
  conway->callback([&] {
    if (artin_opt->count() + band_opt->count() != 1) {
      throw CLI::ValidationError("conway", "exactly one of --artin or --band is required");
    }
  });

  std::string tree_word;
  bsk_format tree_format = BSK_FORMAT_JSON;
  auto* tree = app.add_subcommand("tree", "resolution tree of a positive 3-strand band word");
  tree->add_option("word", tree_word, "letters from {1, 2, 13}, e.g. \"1 2 1 2\"");
  tree->add_option("--format", tree_format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, bsk_format>{{"json", BSK_FORMAT_JSON}, {"dot", BSK_FORMAT_DOT}}));

  int max_len = 0;
  std::string out_path;
  int jobs = 1;
  auto* scan = app.add_subcommand("scan", "check every positive 3-strand band word up to a length");
  scan->add_option("--max-len", max_len, "largest word length")->required()->check(CLI::NonNegativeNumber);
  scan->add_option("--out", out_path, "JSON-lines file for per-word records");
  scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::uint64_t seed = bsk_default_seed();
  auto* verify = app.add_subcommand("verify", "run every built-in claim check");
  verify->add_option("--seed", seed, "seed for the randomized checks (default: $BSK_SEED or built-in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (conway->parsed()) {
    return band_opt->count() > 0 ? RunConway(band, BSK_ALPHABET_BAND, strands, conway_format)
                                 : RunConway(artin, BSK_ALPHABET_ARTIN, strands, conway_format);
  }
  if (tree->parsed()) return RunTree(tree_word, tree_format);
  if (scan->parsed()) return RunScan(max_len, out_path, jobs);
  if (verify->parsed()) return RunVerify(seed);
  return kExitUsage;
}
